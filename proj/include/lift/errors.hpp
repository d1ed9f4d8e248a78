#pragma once

#include <stdexcept>
#include <string>

namespace lift {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotCartan : Error { using Error::Error; };
struct NotFiniteType : Error { using Error::Error; };
struct TooManyWords : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct UnsupportedLocalType : Error { using Error::Error; };
struct NotSameGroup : Error { using Error::Error; };
struct WeightNotDominant : Error { using Error::Error; };
struct PropagationConflict : Error { using Error::Error; };
struct NotTypeA : Error { using Error::Error; };
struct NotStandardWord : Error { using Error::Error; };
struct InconsistentCounts : Error { using Error::Error; };
struct NotInG0 : Error { using Error::Error; };
struct NotSubtractionFree : Error { using Error::Error; };
struct ValidationFailed : Error { using Error::Error; };
struct PreconditionNotMet : Error { using Error::Error; };
struct DimensionTooLarge : Error { using Error::Error; };

} // namespace lift

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "lift/geomlift.hpp"
#include "lift/polyhedra.hpp"

using namespace lift;
using nlohmann::json;

namespace {

IVec parse_ivec(const std::string& text) {
    IVec out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw ValidationFailed("empty entry in list: " + text);
        out.push_back(std::stoll(item));
    }
    return out;
}

std::vector<int> parse_word(const std::string& text) {
    std::vector<int> out;
    for (long long v : parse_ivec(text)) out.push_back((int)v);
    return out;
}

CartanData load_cartan(const std::string& type, const std::string& file) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw ValidationFailed("cannot read " + file);
        json j = json::parse(in);
        IMat m;
        for (const auto& row : j) m.push_back(row.get<IVec>());
        return validate_cartan(m);
    }
    if (type.empty()) throw ValidationFailed("either --type or --cartan-file is required");
    return cartan_preset(type);
}

void ensure_moves(const CartanData& c) {
    for (int i = 1; i <= c.n; ++i)
        for (int j = i + 1; j <= c.n; ++j) {
            Rank2Type t = rank2_type(c, i, j);
            if (!has_move_table(t)) register_move_table(derive_rank2_moves(t));
        }
}

ReducedWord pick_word(const CartanData& c, const std::string& word_flag) {
    if (word_flag.empty()) return longest_element(c).second;
    std::vector<int> letters = parse_word(word_flag);
    WeylElement w = weyl_from_word(c, letters);
    if (!is_reduced_word(c, letters) || w.length != (int)c.num_pos_roots)
        throw ValidationFailed("word is not a reduced word for the longest element");
    return ReducedWord{letters, w};
}

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ValidationFailed("cannot write " + out_path);
    out << payload << "\n";
}

json inequality_json(const Inequality& h) {
    return json{{"normal", h.normal}, {"offset", h.offset}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"string and Lusztig parametrizations, crystals and degenerations"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string type, cartan_file, lambda_flag, word_flag, out_path;
    long long radius = 3;
    long long seed = 12345;
    app.add_option("--type", type, "Cartan preset, e.g. A2, A3, B2");
    app.add_option("--cartan-file", cartan_file, "JSON file with a Cartan matrix");
    app.add_option("--lambda", lambda_flag, "dominant weight, comma separated");
    app.add_option("--word", word_flag, "reduced word for w0, comma separated");
    app.add_option("--out", out_path, "output file (stdout when omitted)");
    app.add_option("--radius", radius, "box radius for verification commands");
    app.add_option("--seed", seed, "seed for randomized checks");

    auto* cmd_crystal = app.add_subcommand("crystal", "generate B(lambda) as JSON");
    std::string dot_path;
    cmd_crystal->add_option("--dot", dot_path, "also write a DOT rendering");

    auto* cmd_reparam = app.add_subcommand("reparam", "move coordinates between words");
    std::string from_flag, to_flag, flavor_flag = "string", coords_flag;
    cmd_reparam->add_option("--from", from_flag, "source word")->required();
    cmd_reparam->add_option("--to", to_flag, "target word")->required();
    cmd_reparam->add_option("--flavor", flavor_flag, "string or lusztig");
    cmd_reparam->add_option("--coords", coords_flag, "coordinate vector")->required();

    auto* cmd_involution = app.add_subcommand("involution", "pairing on B(lambda)");

    auto* cmd_polytope = app.add_subcommand("polytope", "string polytope of B(lambda)");

    auto* cmd_richardson = app.add_subcommand("richardson", "degeneration report");
    std::string w_flag, tau_flag;
    bool all_pairs = false;
    cmd_richardson->add_option("--w", w_flag, "reduced word for w");
    cmd_richardson->add_option("--tau", tau_flag, "reduced word for tau");
    cmd_richardson->add_flag("--all-pairs", all_pairs, "iterate over all (w, tau)");

    auto* cmd_verify = app.add_subcommand("verify", "symbolic and tropical checks");

    auto* cmd_derive = app.add_subcommand("derive-moves", "derive rank-2 move tables");
    std::string rank2_flag = "B2";
    cmd_derive->add_option("--rank2", rank2_flag, "A2 or B2");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_derive->parsed()) {
            Rank2Type t;
            if (rank2_flag == "A2") t = Rank2Type::A2;
            else if (rank2_flag == "B2") t = Rank2Type::B2;
            else if (rank2_flag == "G2") t = Rank2Type::G2;
            else throw ValidationFailed("unknown rank-2 type " + rank2_flag);
            Rank2MoveTable table = derive_rank2_moves(t);
            json j;
            j["local_type"] = rank2_flag;
            j["provenance"] = table.provenance;
            auto dump = [](const std::vector<PLExpr>& fs) {
                json a = json::array();
                for (const auto& f : fs) a.push_back(json::parse(pl_to_json(f)));
                return a;
            };
            j["string_from_1"] = dump(table.string_from_1);
            j["string_from_2"] = dump(table.string_from_2);
            j["lusztig_from_1"] = dump(table.lusztig_from_1);
            j["lusztig_from_2"] = dump(table.lusztig_from_2);
            emit(out_path, j.dump(2));
            return 0;
        }

        CartanData c = load_cartan(type, cartan_file);
        ensure_moves(c);

        if (cmd_reparam->parsed()) {
            std::vector<int> from = parse_word(from_flag), to = parse_word(to_flag);
            ParamVector p;
            p.flavor = flavor_flag == "lusztig" ? Flavor::Lusztig : Flavor::String;
            if (flavor_flag != "lusztig" && flavor_flag != "string")
                throw ValidationFailed("flavor must be string or lusztig");
            p.word = ReducedWord{from, weyl_from_word(c, from)};
            p.coords = parse_ivec(coords_flag);
            if (p.coords.size() != from.size())
                throw ValidationFailed("coordinate count does not match the word");
            ReducedWord target{to, weyl_from_word(c, to)};
            ParamVector q = transition(c, p, target);
            json j;
            j["word"] = q.word.letters;
            j["flavor"] = q.flavor == Flavor::String ? "string" : "lusztig";
            j["coords"] = q.coords;
            emit(out_path, j.dump(2));
            return 0;
        }

        if (lambda_flag.empty()) throw ValidationFailed("--lambda is required");
        IVec lambda = parse_ivec(lambda_flag);
        ReducedWord word = pick_word(c, word_flag);
        CrystalGraph g = generate(c, word, lambda);

        if (cmd_crystal->parsed()) {
            eta_involution(g);
            emit(out_path, crystal_to_json(g));
            if (!dot_path.empty()) emit(dot_path, crystal_to_dot(g));
            return 0;
        }
        if (cmd_involution->parsed()) {
            eta_involution(g);
            json j;
            j["lambda"] = lambda;
            j["word"] = word.letters;
            json pairs = json::array();
            for (const auto& el : g.elements)
                if (g.eta_pairing[el.id] >= el.id)
                    pairs.push_back(json{
                        {"a", el.string_coords},
                        {"b", g.elements[g.eta_pairing[el.id]].string_coords}});
            j["pairs"] = pairs;
            emit(out_path, j.dump(2));
            return 0;
        }
        if (cmd_polytope->parsed()) {
            Polytope p = string_polytope(g);
            json j;
            j["dim"] = p.dim;
            j["facets"] = json::array();
            for (const auto& h : p.h_rep) j["facets"].push_back(inequality_json(h));
            j["equations"] = json::array();
            for (const auto& h : p.equations) j["equations"].push_back(inequality_json(h));
            j["vertices"] = p.v_rep;
            j["lattice_points"] = p.lattice_points;
            emit(out_path, j.dump(2));
            return 0;
        }
        if (cmd_richardson->parsed()) {
            eta_involution(g);
            if (all_pairs) {
                std::vector<WeylElement> els{weyl_identity(c)};
                for (std::size_t k = 0; k < els.size(); ++k)
                    for (int i = 1; i <= c.n; ++i) {
                        WeylElement nxt = weyl_mul(c, els[k], simple_reflection(c, i));
                        if (nxt.length <= els[k].length) continue;
                        bool known = false;
                        for (const auto& e : els) known = known || e == nxt;
                        if (!known) els.push_back(nxt);
                    }
                json arr = json::array();
                for (const auto& w : els)
                    for (const auto& tau : els)
                        arr.push_back(
                            json::parse(report_to_json(g, degeneration_report(g, w, tau))));
                emit(out_path, arr.dump(2));
                return 0;
            }
            if (w_flag.empty() || tau_flag.empty())
                throw ValidationFailed("richardson needs --w and --tau or --all-pairs");
            WeylElement w = weyl_from_word(c, parse_word(w_flag));
            WeylElement tau = weyl_from_word(c, parse_word(tau_flag));
            emit(out_path, report_to_json(g, degeneration_report(g, w, tau)));
            return 0;
        }
        if (cmd_verify->parsed()) {
            json checks = json::array();
            bool all_pass = true;
            auto record = [&](const std::string& name, bool pass) {
                checks.push_back(json{{"check", name}, {"pass", pass}});
                all_pass = all_pass && pass;
            };

            // tropical bridge over SL3, box radius from the flag
            GenSet a2 = sl_gens(2);
            Rank2MoveTable table = builtin_move_table(Rank2Type::A2);
            record("lusztig-bridge",
                   tropical_bridge(transition_components(a2, {1, 2, 1}, {2, 1, 2}, false),
                                   table.lusztig_from_1, radius)
                       .pass);
            record("string-bridge",
                   tropical_bridge(transition_components(a2, {1, 2, 1}, {2, 1, 2}, true),
                                   table.string_from_1, radius)
                       .pass);

            // round trips on the requested crystal
            bool rt = true;
            WordGraph wg = all_reduced_words(c, word.target);
            for (const auto& el : g.elements) {
                ParamVector p{Flavor::String, word, el.string_coords};
                for (const auto& target : wg.words) {
                    ReducedWord tw{target, word.target};
                    if (transition(c, transition(c, p, tw), word).coords != el.string_coords)
                        rt = false;
                }
            }
            record("transition-round-trips", rt);

            auto [w0, w0word] = longest_element(c);
            IVec lam_star = weyl_apply(w0, lambda);
            for (auto& v : lam_star) v = -v;
            bool phi_ok = true;
            for (const auto& el : g.elements) {
                auto fwd = phi_forward(c, word, lambda, el.string_coords);
                if (phi_inverse(c, word, lam_star, fwd.coords).coords != el.string_coords)
                    phi_ok = false;
            }
            record("phi-round-trips", phi_ok);

            json j;
            j["seed"] = seed;
            j["checks"] = checks;
            j["pass"] = all_pass;
            emit(out_path, j.dump(2));
            return all_pass ? 0 : 2;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

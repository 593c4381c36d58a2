#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "uhg/bounds.hpp"
#include "uhg/charpoly.hpp"
#include "uhg/constructions.hpp"
#include "uhg/elementary.hpp"
#include "uhg/exact.hpp"
#include "uhg/identities.hpp"
#include "uhg/io.hpp"
#include "uhg/spectrum.hpp"
#include "uhg/unified_matrix.hpp"
#include "uhg/verify.hpp"

using namespace uhg;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

PartSizeProfile parse_profile(const std::string& text) {
    PartSizeProfile p;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (!cur.empty()) p.sizes.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (p.sizes.empty()) throw std::invalid_argument("empty profile");
    return p;
}

std::string part_path(const std::vector<int>& indices, const EdgeIndexSet& labels) {
    std::string s = "(";
    for (size_t i = 0; i < indices.size(); ++i) {
        if (i) s += ",";
        s += labels.at(indices[i]).str();
    }
    s += ")";
    return s;
}

struct RandomSpec {
    int count = 0;
    int max_n = 0;
    long long seed = 0;
};

std::vector<Hypergraph> make_fixtures(const RandomSpec& spec, std::uint64_t salt,
                                      bool allow_loops, bool allow_multiple) {
    Xoshiro256 rng(static_cast<std::uint64_t>(spec.seed) * 1000003ULL + salt);
    std::vector<Hypergraph> out;
    for (int i = 0; i < spec.count; ++i) {
        RandomHypergraphParams p;
        p.n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(
                      std::max(1, spec.max_n - 1))));
        p.edge_count = 1 + static_cast<int>(rng.below(6));
        p.max_rank = std::min(4, p.n);
        p.allow_loops = allow_loops && (i % 2 == 0);
        p.allow_multiple = allow_multiple && (i % 3 != 2);
        out.push_back(random_hypergraph_with_eindex_cap(p, 14, rng));
    }
    return out;
}

int finish(const VerifyResult& result, const std::string& suite, bool strict) {
    for (const auto& line : result.lines) std::cout << line << "\n";
    std::cout << result.summary(suite) << "\n";
    if (result.fail > 0) return kExitFail;
    if (strict && result.unverified > 0) return kExitFail;
    return kExitPass;
}

int run_verify(const std::string& suite, const std::optional<std::string>& file,
               const std::optional<RandomSpec>& random_spec,
               const std::optional<std::string>& profile_text, bool want_cycle, bool want_path,
               bool strict) {
    long long budget = budget_from_env();
    VerifyResult all;
    if (random_spec)
        all.lines.push_back("random=" + std::to_string(random_spec->count) + "," +
                            std::to_string(random_spec->max_n) + "," +
                            std::to_string(random_spec->seed));

    bool do_identities = suite == "identities" || suite == "all";
    bool do_elementary = suite == "elementary" || suite == "all";
    bool do_closed = suite == "closed-form" || suite == "all";
    bool do_operations = suite == "operations" || suite == "all";
    bool do_bounds = suite == "bounds" || suite == "all";

    std::vector<std::pair<std::string, Hypergraph>> fixtures;
    if (file) fixtures.emplace_back(*file, load_any(*file));

    if (do_identities) {
        std::vector<std::pair<std::string, Hypergraph>> batch = fixtures;
        if (random_spec) {
            auto simple = make_fixtures(*random_spec, 1, false, false);
            for (size_t i = 0; i < simple.size(); ++i)
                batch.emplace_back("r" + std::to_string(i), simple[i]);
            auto general = make_fixtures(*random_spec, 2, true, true);
            for (size_t i = 0; i < general.size(); ++i)
                batch.emplace_back("g" + std::to_string(i), general[i]);
        }
        for (const auto& [tag, h] : batch) all.merge(verify_identities(h, tag, budget));
    }
    if (do_elementary) {
        std::vector<std::pair<std::string, Hypergraph>> batch = fixtures;
        if (random_spec) {
            auto simple = make_fixtures(*random_spec, 3, false, false);
            for (size_t i = 0; i < simple.size(); ++i)
                batch.emplace_back("r" + std::to_string(i), simple[i]);
        }
        for (const auto& [tag, h] : batch) all.merge(verify_elementary(h, tag, budget));
    }
    if (do_closed) {
        if (profile_text) {
            PartSizeProfile p = parse_profile(*profile_text);
            all.merge(verify_closed_form(p, want_cycle || !want_path, *profile_text));
        } else {
            Xoshiro256 rng((random_spec ? static_cast<std::uint64_t>(random_spec->seed)
                                        : 7ULL) * 1000003ULL + 4);
            int count = random_spec ? random_spec->count : 6;
            for (int i = 0; i < count; ++i) {
                bool cyc = i % 2 == 0;
                int len = 3 + static_cast<int>(rng.below(3));
                PartSizeProfile p;
                for (int t = 0; t < len; ++t)
                    p.sizes.push_back(1 + static_cast<int>(rng.below(3)));
                std::string tag = std::string(cyc ? "cycle" : "path") + std::to_string(i);
                all.merge(verify_closed_form(p, cyc, tag));
            }
        }
    }
    if (do_operations) {
        Xoshiro256 rng((random_spec ? static_cast<std::uint64_t>(random_spec->seed) : 7ULL) *
                           1000003ULL + 5);
        for (const auto& [tag, h] : fixtures) {
            if (!h.is_simple()) {
                all.add_unverified("operations", tag, "requires_simple_H");
                continue;
            }
            all.merge(verify_operations(h, h, tag, rng));
        }
        if (random_spec) {
            auto a = make_fixtures(*random_spec, 6, false, false);
            auto b = make_fixtures(*random_spec, 7, false, false);
            for (size_t i = 0; i < a.size(); ++i)
                all.merge(verify_operations(a[i], b[i], "r" + std::to_string(i), rng));
        }
    }
    if (do_bounds) {
        std::vector<std::pair<std::string, Hypergraph>> batch = fixtures;
        if (random_spec) {
            auto mix = make_fixtures(*random_spec, 8, true, false);
            for (size_t i = 0; i < mix.size(); ++i)
                batch.emplace_back("r" + std::to_string(i), mix[i]);
        }
        for (const auto& [tag, h] : batch) all.merge(verify_bounds(h, tag, budget));
    }
    return finish(all, suite, strict);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unified-matrix hypergraph spectra toolkit"};
    app.require_subcommand(1);

    std::string file, out_path, suite = "all", profile_text;
    int arg_u = 0, arg_v = 0, arg_s = 1, max_len = 0;
    bool csv = false, strict = false, want_cycle = false, want_path = false;
    std::vector<std::string> random_args;

    auto* c_index = app.add_subcommand("index", "list I(H) with indices");
    c_index->add_option("file", file)->required();

    auto* c_matrix = app.add_subcommand("matrix", "print U(H)");
    c_matrix->add_option("file", file)->required();
    c_matrix->add_flag("--csv", csv, "dense CSV instead of labeled triplets");

    auto* c_spectrum = app.add_subcommand("spectrum", "eigenvalues with multiplicities");
    c_spectrum->add_option("file", file)->required();

    auto* c_charpoly = app.add_subcommand("charpoly", "exact characteristic polynomial");
    c_charpoly->add_option("file", file)->required();

    auto* c_girth = app.add_subcommand("girth", "exact girth and odd exact girth");
    c_girth->add_option("file", file)->required();

    auto* c_distance = app.add_subcommand("distance", "exact distance between two vertices");
    c_distance->add_option("file", file)->required();
    c_distance->add_option("u", arg_u)->required();
    c_distance->add_option("v", arg_v)->required();

    auto* c_diameter = app.add_subcommand("diameter", "exact diameter");
    c_diameter->add_option("file", file)->required();

    auto* c_cycles = app.add_subcommand("cycles", "list exact cycles");
    c_cycles->add_option("file", file)->required();
    c_cycles->add_option("--max-len", max_len, "maximum cycle length (0 = all)");

    auto* c_distances = app.add_subcommand("distances", "full exact-distance table as CSV");
    c_distances->add_option("file", file)->required();

    auto* c_elementary = app.add_subcommand("elementary", "list elementary q-subhypergraphs");
    int arg_q = 2;
    c_elementary->add_option("file", file)->required();
    c_elementary->add_option("--q", arg_q, "covered part count")->required();

    auto* c_bounds = app.add_subcommand("bounds", "evaluate the eigenvalue bounds");
    c_bounds->add_option("file", file)->required();

    auto* c_verify = app.add_subcommand("verify", "run assertion suites");
    c_verify->add_option("file", file);
    c_verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"identities", "elementary", "closed-form", "operations",
                               "bounds", "all"}));
    c_verify->add_option("--random", random_args, "count max-n seed")->expected(3);
    c_verify->add_option("--profile", profile_text, "part sizes, e.g. 2,2,2");
    c_verify->add_flag("--cycle", want_cycle);
    c_verify->add_flag("--path", want_path);
    c_verify->add_flag("--strict", strict, "unverified checks fail the run");

    auto* c_gen = app.add_subcommand("gen", "generate unified cycles and paths");
    c_gen->require_subcommand(1);
    auto* g_cycle = c_gen->add_subcommand("ucycle", "unified cycle from a profile");
    g_cycle->add_option("--profile", profile_text)->required();
    g_cycle->add_option("--out", out_path);
    auto* g_path = c_gen->add_subcommand("upath", "unified path from a profile");
    g_path->add_option("--profile", profile_text)->required();
    g_path->add_option("--out", out_path);

    auto* c_op = app.add_subcommand("op", "hypergraph operations with identity reports");
    c_op->require_subcommand(1);
    std::string file_b;
    auto* o_union = c_op->add_subcommand("union", "disjoint union");
    o_union->add_option("a", file)->required();
    o_union->add_option("b", file_b)->required();
    o_union->add_option("--out", out_path);
    auto* o_pendant = c_op->add_subcommand("pendant", "attach a pendant vertex");
    o_pendant->add_option("file", file)->required();
    o_pendant->add_option("--at", arg_u)->required();
    o_pendant->add_option("--out", out_path);
    auto* o_coalesce = c_op->add_subcommand("coalesce", "identify a vertex of a with one of b");
    o_coalesce->add_option("a", file)->required();
    o_coalesce->add_option("b", file_b)->required();
    o_coalesce->add_option("--at-u", arg_u)->required();
    o_coalesce->add_option("--at-v", arg_v)->required();
    o_coalesce->add_option("--out", out_path);
    auto* o_attach = c_op->add_subcommand("attach", "new edge through u, v and fresh vertices");
    o_attach->add_option("file", file)->required();
    o_attach->add_option("--u", arg_u)->required();
    o_attach->add_option("--v", arg_v)->required();
    o_attach->add_option("--s", arg_s, "number of fresh vertices");
    o_attach->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_index) {
            Hypergraph h = load_any(file);
            EdgeIndexSet idx = edge_index(h);
            std::cout << "k=" << idx.size() << "\n";
            for (int i = 0; i < idx.size(); ++i)
                std::cout << "part=" << i << ":" << idx.at(i).str() << "\n";
            return kExitPass;
        }
        if (*c_matrix) {
            UnifiedMatrix u = build_unified_matrix(load_any(file));
            std::cout << "k=" << u.order() << "\n";
            std::cout << (csv ? matrix_csv(u) : matrix_triplets(u));
            return kExitPass;
        }
        if (*c_spectrum) {
            UnifiedMatrix u = build_unified_matrix(load_any(file));
            Spectrum s = eigen_spectrum(u);
            std::cout << "k=" << u.order() << "\n";
            for (const auto& [value, mult] : s.groups)
                std::cout << "eigenvalue=" << format_double(value) << " multiplicity=" << mult
                          << "\n";
            return kExitPass;
        }
        if (*c_charpoly) {
            UnifiedMatrix u = build_unified_matrix(load_any(file));
            CharPoly p = char_poly_exact(u);
            std::cout << "k=" << u.order() << "\n";
            std::cout << "charpoly=" << charpoly_line(p) << "\n";
            std::cout << "det=" << determinant(u).get_str() << "\n";
            return kExitPass;
        }
        if (*c_girth) {
            Hypergraph h = load_any(file);
            auto g = exact_girth(h);
            auto og = odd_exact_girth(h);
            std::cout << "girth=" << (g ? std::to_string(*g) : "INF") << "\n";
            std::cout << "odd_girth=" << (og ? std::to_string(*og) : "INF") << "\n";
            return kExitPass;
        }
        if (*c_distance) {
            Hypergraph h = load_any(file);
            auto d = exact_distance(h, arg_u, arg_v);
            std::cout << "distance=" << (d ? std::to_string(*d) : "INF") << "\n";
            return kExitPass;
        }
        if (*c_diameter) {
            Hypergraph h = load_any(file);
            if (!is_exactly_connected(h)) {
                std::cerr << "error: hypergraph is not exactly connected\n";
                return kExitUsage;
            }
            std::cout << "diameter=" << exact_diameter(h) << "\n";
            return kExitPass;
        }
        if (*c_cycles) {
            Hypergraph h = load_any(file);
            AssociatedGraph g = associated_graph(h);
            auto cycles = enumerate_exact_cycles(h, max_len, budget_from_env());
            std::cout << "count=" << cycles.size() << "\n";
            for (const auto& c : cycles)
                std::cout << "cycle=" << part_path(c.part_indices, g.parts)
                          << " weight=" << c.weight << "\n";
            return kExitPass;
        }
        if (*c_distances) {
            Hypergraph h = load_any(file);
            auto table = exact_distance_table(h);
            int n = h.vertex_count();
            std::string out;
            for (int v = 0; v < n; ++v) out += "," + std::to_string(v);
            out += "\n";
            for (int u = 0; u < n; ++u) {
                out += std::to_string(u);
                for (int v = 0; v < n; ++v)
                    out += "," + (table[u][v] ? std::to_string(*table[u][v])
                                              : std::string("INF"));
                out += "\n";
            }
            std::cout << out;
            return kExitPass;
        }
        if (*c_elementary) {
            Hypergraph h = load_any(file);
            AssociatedGraph g = associated_graph(h);
            auto configs = enumerate_elementary(h, arg_q, budget_from_env());
            std::cout << "count=" << configs.size() << "\n";
            for (const auto& cfg : configs) {
                std::string line = "config=";
                bool first = true;
                for (const auto& cy : cfg.cycles) {
                    if (!first) line += " ";
                    first = false;
                    line += part_path(cy, g.parts);
                }
                for (auto [i, j] : cfg.partitions) {
                    if (!first) line += " ";
                    first = false;
                    line += "{" + g.parts.at(i).str() + "," + g.parts.at(j).str() + "}";
                }
                std::cout << line << "\n";
            }
            return kExitPass;
        }
        if (*c_bounds) {
            Hypergraph h = load_any(file);
            long long budget = budget_from_env();
            std::vector<BoundReport> reports = spectral_radius_bounds(h);
            for (const auto& r : chromatic_bounds(h, budget)) reports.push_back(r);
            for (const auto& r : independence_clique_bounds(h, budget)) reports.push_back(r);
            bool violated = false;
            for (const auto& r : reports) {
                std::cout << "bound=" << r.name << " lhs=" << format_double(r.lhs)
                          << " rhs=" << format_double(r.rhs) << " status=" << to_string(r.status);
                if (!r.note.empty()) {
                    std::string note = r.note;
                    for (auto& ch : note)
                        if (ch == ' ') ch = '_';
                    std::cout << " note=" << note;
                }
                std::cout << "\n";
                if (r.status == BoundStatus::Violated) violated = true;
            }
            return violated ? kExitFail : kExitPass;
        }
        if (*c_verify) {
            std::optional<std::string> file_opt;
            if (!file.empty()) file_opt = file;
            std::optional<RandomSpec> random_spec;
            if (!random_args.empty()) {
                RandomSpec rs;
                rs.count = std::stoi(random_args[0]);
                rs.max_n = std::stoi(random_args[1]);
                rs.seed = std::stoll(random_args[2]);
                random_spec = rs;
            }
            if (!file_opt && !random_spec && profile_text.empty()) {
                std::cerr << "error: verify needs a file, --random, or --profile\n";
                return kExitUsage;
            }
            std::optional<std::string> profile_opt;
            if (!profile_text.empty()) profile_opt = profile_text;
            return run_verify(suite, file_opt, random_spec, profile_opt, want_cycle, want_path,
                              strict);
        }
        if (*g_cycle || *g_path) {
            bool cyc = static_cast<bool>(*g_cycle);
            PartSizeProfile p = parse_profile(profile_text);
            Hypergraph h = cyc ? gen_unified_cycle(p) : gen_unified_path(p);
            if (!out_path.empty()) save_hg(h, out_path);
            else std::cout << emit_hg(h);
            if (cyc || p.length() >= 3) {
                VerifyResult r = verify_closed_form(p, cyc, profile_text);
                for (const auto& line : r.lines) std::cout << line << "\n";
                return r.ok() ? kExitPass : kExitFail;
            }
            std::cout << "check=closed_form fixture=" << profile_text
                      << " status=UNVERIFIED note=path_length_below_theorem_hypothesis\n";
            return kExitPass;
        }
        if (*o_union) {
            UnionReport rep = disjoint_union_charpoly({load_any(file), load_any(file_b)});
            if (!out_path.empty()) save_hg(rep.result, out_path);
            else std::cout << emit_hg(rep.result);
            std::cout << "check=disjoint_union_product status=" << (rep.holds ? "PASS" : "FAIL")
                      << "\n";
            std::cout << "charpoly=" << charpoly_line(rep.direct) << "\n";
            return rep.holds ? kExitPass : kExitFail;
        }
        if (*o_pendant) {
            OperationReport rep = pendant_attach(load_any(file), arg_u);
            if (!out_path.empty()) save_hg(rep.result, out_path);
            else std::cout << emit_hg(rep.result);
            std::cout << "check=pendant_identity status=" << (rep.holds ? "PASS" : "FAIL")
                      << "\n";
            if (rep.g_form_applicable)
                std::cout << "check=pendant_g_vertex_form status="
                          << (rep.g_form_holds ? "PASS" : "FAIL") << "\n";
            std::cout << "charpoly=" << charpoly_line(rep.direct) << "\n";
            return rep.holds && rep.g_form_holds ? kExitPass : kExitFail;
        }
        if (*o_coalesce) {
            OperationReport rep = coalesce(load_any(file), arg_u, load_any(file_b), arg_v);
            if (!out_path.empty()) save_hg(rep.result, out_path);
            else std::cout << emit_hg(rep.result);
            std::cout << "check=coalescence_identity status=" << (rep.holds ? "PASS" : "FAIL")
                      << "\n";
            if (rep.g_form_applicable)
                std::cout << "check=coalescence_g_vertex_form status="
                          << (rep.g_form_holds ? "PASS" : "FAIL") << "\n";
            std::cout << "charpoly=" << charpoly_line(rep.direct) << "\n";
            return rep.holds && rep.g_form_holds ? kExitPass : kExitFail;
        }
        if (*o_attach) {
            OperationReport rep = attach_edge(load_any(file), arg_u, arg_v, arg_s);
            if (!out_path.empty()) save_hg(rep.result, out_path);
            else std::cout << emit_hg(rep.result);
            std::cout << "check=" << rep.name << " status=" << (rep.holds ? "PASS" : "FAIL")
                      << "\n";
            std::cout << "charpoly=" << charpoly_line(rep.direct) << "\n";
            return rep.holds ? kExitPass : kExitFail;
        }
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

#include "uhg/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "uhg/unified_matrix.hpp"

namespace uhg {

namespace {

constexpr double kRealTol = 1e-8;

struct StepBudget {
    long long remaining;
    bool tick(long long cost = 1) {
        remaining -= cost;
        return remaining >= 0;
    }
};

}  // namespace

std::string to_string(BoundStatus s) {
    switch (s) {
        case BoundStatus::Holds: return "HOLDS";
        case BoundStatus::Tight: return "TIGHT";
        case BoundStatus::Violated: return "VIOLATED";
        case BoundStatus::Inapplicable: return "INAPPLICABLE";
        case BoundStatus::Unverified: return "UNVERIFIED";
    }
    return "?";
}

BoundReport make_bound(const std::string& name, double lhs, double rhs, double tol,
                       const std::string& note) {
    BoundReport r;
    r.name = name;
    r.lhs = lhs;
    r.rhs = rhs;
    r.note = note;
    if (lhs <= rhs + tol)
        r.status = (std::fabs(lhs - rhs) <= tol) ? BoundStatus::Tight : BoundStatus::Holds;
    else
        r.status = BoundStatus::Violated;
    return r;
}

SignCounts sign_counts_exact(const CharPoly& p) {
    SignCounts out;
    const auto& c = p.coeffs();
    int deg = p.degree();
    // multiplicity of the zero root = trailing zero coefficients
    int zeros = 0;
    while (zeros < deg && c[static_cast<size_t>(deg - zeros)] == 0) ++zeros;
    out.zero = zeros;

    // Descartes' rule is exact for real-rooted polynomials
    int prev = 0, changes = 0;
    for (int i = 0; i <= deg - zeros; ++i) {
        int s = sgn(c[static_cast<size_t>(i)]);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    out.positive = changes;

    prev = 0;
    changes = 0;
    for (int i = 0; i <= deg - zeros; ++i) {
        // p(-x): flip the sign of odd-power coefficients
        int power = deg - i;
        int s = sgn(c[static_cast<size_t>(i)]);
        if (s == 0) continue;
        if (power % 2) s = -s;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    out.negative = changes;
    return out;
}

std::vector<BoundReport> spectral_radius_bounds(const Hypergraph& h) {
    std::vector<BoundReport> out;
    UnifiedMatrix u = build_unified_matrix(h);
    int k = u.order();
    if (k == 0) return out;
    Spectrum s = eigen_spectrum(u);
    double l1 = s.values.front();
    double lk = s.values.back();
    long long dsum = unified_degree_sum(h);
    long long partial = included_edge_count(h);

    if (h.is_simple() && k >= 1) {
        double rhs = (k > 0) ? (static_cast<double>(k - 1) / k) * (dsum - partial) : 0.0;
        out.push_back(make_bound("radius_sq_le_degree_sum", l1 * l1, rhs, kRealTol));
    } else {
        out.push_back({"radius_sq_le_degree_sum", 0, 0, BoundStatus::Inapplicable,
                       "requires simple H"});
    }

    if (h.is_simple()) {
        double maxabs = std::max(std::fabs(l1), std::fabs(lk));
        out.push_back(make_bound("abs_eigen_le_max_degree", maxabs,
                                 static_cast<double>(h.max_degree()), kRealTol));
    } else {
        out.push_back({"abs_eigen_le_max_degree", 0, 0, BoundStatus::Inapplicable,
                       "requires simple H"});
    }

    {
        double lhs = static_cast<double>(min_unified_degree(h)) -
                     static_cast<double>(partial) / k;
        out.push_back(make_bound("radius_ge_min_unified_degree", lhs, l1, kRealTol));
    }

    if (h.is_loopless() && h.rank() >= 2) {
        int m = h.rank();
        Hypergraph g = spanning_two_edge_subgraph(h);
        Spectrum gs = eigen_spectrum(build_unified_matrix(g));
        double lhs = (3.0 - m) * l1 + (m - 2.0) * lk;
        out.push_back(make_bound("rank_partition_le_subgraph_radius", lhs, gs.values.front(),
                                 kRealTol, "m=" + std::to_string(m)));
    } else {
        out.push_back({"rank_partition_le_subgraph_radius", 0, 0, BoundStatus::Inapplicable,
                       "requires loopless H of rank >= 2"});
    }

    if (!has_included_edge(h)) {
        out.push_back(make_bound("radius_ge_average_unified_degree",
                                 average_unified_degree(h), l1, kRealTol));
    } else {
        out.push_back({"radius_ge_average_unified_degree", 0, 0, BoundStatus::Inapplicable,
                       "requires no included edges"});
    }
    return out;
}

BoundReport interlacing_check(const Hypergraph& h, const std::vector<int>& w) {
    UnifiedMatrix u = build_unified_matrix(h);
    Hypergraph sub = induced_subhypergraph(h, w);
    UnifiedMatrix us = build_unified_matrix(sub);
    std::vector<double> big = symmetric_eigenvalues(u.m);
    std::vector<double> small = symmetric_eigenvalues(us.m);
    int k1 = static_cast<int>(big.size());
    int k2 = static_cast<int>(small.size());
    for (int i = 0; i < k2; ++i) {
        double lo = big[static_cast<size_t>(k1 - k2 + i)];
        double hi = big[static_cast<size_t>(i)];
        if (!(lo <= small[static_cast<size_t>(i)] + kRealTol &&
              small[static_cast<size_t>(i)] <= hi + kRealTol)) {
            return {"interlacing", small[static_cast<size_t>(i)], hi, BoundStatus::Violated,
                    "index " + std::to_string(i)};
        }
    }
    return {"interlacing", 0, 0, BoundStatus::Holds,
            "k2=" + std::to_string(k2) + " inside k1=" + std::to_string(k1)};
}

namespace {

// canonical coloring backtracking: vertex i may reuse colors 0..max_used or
// open color max_used+1, capped at limit
bool colorable(const Hypergraph& h, int limit, bool strong, StepBudget& budget,
               std::vector<int>& color, int at, int used) {
    int n = h.vertex_count();
    if (at == n) return true;
    if (!budget.tick()) throw budget_error("coloring budget exceeded");
    int top = std::min(limit - 1, used);
    for (int c = 0; c <= top; ++c) {
        color[at] = c;
        bool ok = true;
        for (const auto& e : h.edges()) {
            if (!e.vertices.contains(at) || e.vertices.max_id() > at) continue;
            if (strong) {
                for (int x : e.vertices.ids())
                    for (int y : e.vertices.ids())
                        if (x < y && color[x] == color[y]) { ok = false; break; }
            } else {
                bool all_same = true;
                for (int x : e.vertices.ids())
                    if (color[x] != color[e.vertices.min_id()]) { all_same = false; break; }
                if (all_same && e.size() >= 2) ok = false;
            }
            if (!ok) break;
        }
        if (ok && colorable(h, limit, strong, budget, color, at + 1,
                            std::max(used, c + 1)))
            return true;
    }
    color[at] = -1;
    return false;
}

std::optional<int> chromatic_search(const Hypergraph& h, bool strong, long long budget_steps) {
    int n = h.vertex_count();
    if (n == 0) return 0;
    if (n > kOracleVertexLimit) return std::nullopt;
    for (int limit = 1; limit <= n; ++limit) {
        StepBudget budget{budget_steps};
        std::vector<int> color(n, -1);
        try {
            if (colorable(h, limit, strong, budget, color, 0, 0)) return limit;
        } catch (const budget_error&) {
            return std::nullopt;
        }
    }
    return n;
}

}  // namespace

std::optional<int> weak_chromatic_number(const Hypergraph& h, long long budget) {
    if (h.has_loops())
        throw std::invalid_argument("weak_chromatic_number: undefined with loops");
    return chromatic_search(h, /*strong=*/false, budget);
}

std::optional<int> strong_chromatic_number(const Hypergraph& h, long long budget) {
    return chromatic_search(h, /*strong=*/true, budget);
}

std::optional<long long> independence_number(const Hypergraph& h, long long budget) {
    int n = h.vertex_count();
    if (n > 2 * kOracleVertexLimit) return std::nullopt;
    StepBudget steps{budget};
    long long best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (!steps.tick()) return std::nullopt;
        bool independent = true;
        for (const auto& e : h.edges()) {
            bool inside = true;
            for (int v : e.vertices.ids())
                if (!((mask >> v) & 1u)) { inside = false; break; }
            if (inside) { independent = false; break; }
        }
        if (independent) best = std::max(best, static_cast<long long>(__builtin_popcount(mask)));
    }
    return best;
}

std::optional<int> complete_clique_number(const Hypergraph& h, long long budget) {
    int n = h.vertex_count();
    if (n > 2 * kOracleVertexLimit) return std::nullopt;
    StepBudget steps{budget};
    // complete[mask]: every non-empty subset of mask is an edge
    std::vector<char> complete(1u << n, 0);
    int best = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (!steps.tick()) return std::nullopt;
        std::vector<int> ids;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) ids.push_back(v);
        if (!h.has_edge(Part(ids))) continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if ((mask >> v) & 1u) {
                unsigned sub = mask & ~(1u << v);
                if (sub && !complete[sub]) ok = false;
            }
        if (ok) {
            complete[mask] = 1;
            best = std::max(best, __builtin_popcount(mask));
        }
    }
    return best;
}

std::vector<BoundReport> chromatic_bounds(const Hypergraph& h, long long budget) {
    std::vector<BoundReport> out;
    UnifiedMatrix u = build_unified_matrix(h);
    Spectrum s = eigen_spectrum(u);
    double l1 = (u.order() > 0) ? s.values.front() : 0.0;

    // chi <= 1 + lambda_1 under the minimum-unified-degree hypothesis
    if (h.has_loops() || has_included_edge(h)) {
        out.push_back({"weak_chromatic_le_radius", 0, 0, BoundStatus::Inapplicable,
                       "requires loopless H with no included edges"});
    } else if (h.vertex_count() > 8) {
        out.push_back({"weak_chromatic_le_radius", 0, 0, BoundStatus::Unverified,
                       "hypothesis unverified for n > 8"});
    } else {
        bool hypothesis = true;
        int n = h.vertex_count();
        for (unsigned mask = 1; mask < (1u << n) && hypothesis; ++mask) {
            std::vector<int> w;
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1u) w.push_back(v);
            Hypergraph sub = induced_subhypergraph(h, w);
            long long dmin = min_unified_degree(sub);
            bool at_vertex = false;
            for (int v = 0; v < sub.vertex_count(); ++v)
                if (sub.degree(v) == dmin) at_vertex = true;
            if (!at_vertex) hypothesis = false;
        }
        auto chi = weak_chromatic_number(h, budget);
        if (!hypothesis) {
            out.push_back({"weak_chromatic_le_radius", 0, 0, BoundStatus::Inapplicable,
                           "min unified degree not attained at a vertex"});
        } else if (!chi) {
            out.push_back({"weak_chromatic_le_radius", 0, 0, BoundStatus::Unverified,
                           "chromatic oracle budget exceeded"});
        } else {
            out.push_back(make_bound("weak_chromatic_le_radius", *chi, 1.0 + l1, kRealTol));
        }
    }

    // chain chi_s >= chi >= chi(G) >= 1 + l1(G)/|ln(G)| >= 1 + l1(G)/|lk(H)|
    Hypergraph g = spanning_two_edge_subgraph(h);
    bool has_two_edge = !g.edges().empty();
    if (!h.is_simple() || !has_two_edge) {
        out.push_back({"chromatic_chain", 0, 0, BoundStatus::Inapplicable,
                       "requires simple H with a cardinality-2 edge"});
        return out;
    }
    auto chi_s = strong_chromatic_number(h, budget);
    auto chi = weak_chromatic_number(h, budget);
    auto chi_g = weak_chromatic_number(g, budget);
    if (!chi_s || !chi || !chi_g) {
        out.push_back({"chromatic_chain", 0, 0, BoundStatus::Unverified,
                       "chromatic oracle budget exceeded"});
        return out;
    }
    Spectrum gs = eigen_spectrum(build_unified_matrix(g));
    double gl1 = gs.values.front();
    double gln = gs.values.back();
    double lk = s.values.back();
    out.push_back(make_bound("strong_ge_weak_chromatic", *chi, *chi_s, 0.0));
    out.push_back(make_bound("weak_ge_subgraph_chromatic", *chi_g, *chi, 0.0));
    out.push_back(make_bound("subgraph_chromatic_ge_ratio", 1.0 + gl1 / std::fabs(gln), *chi_g,
                             kRealTol));
    out.push_back(make_bound("ratio_chain_tail", 1.0 + gl1 / std::fabs(lk),
                             1.0 + gl1 / std::fabs(gln), kRealTol));
    return out;
}

std::vector<BoundReport> independence_clique_bounds(const Hypergraph& h, long long budget) {
    std::vector<BoundReport> out;
    UnifiedMatrix u = build_unified_matrix(h);
    int k = u.order();
    CharPoly p = char_poly_exact(u);
    SignCounts sc = sign_counts_exact(p);

    if (h.is_simple()) {
        auto alpha = independence_number(h, budget);
        if (alpha) {
            double rhs = std::min(k - sc.positive, k - sc.negative);
            out.push_back(make_bound("independence_le_sign_counts",
                                     static_cast<double>(*alpha), rhs, 0.0,
                                     "l+=" + std::to_string(sc.positive) +
                                         " l-=" + std::to_string(sc.negative)));
        } else {
            out.push_back({"independence_le_sign_counts", 0, 0, BoundStatus::Unverified,
                           "oracle budget exceeded"});
        }
    } else {
        out.push_back({"independence_le_sign_counts", 0, 0, BoundStatus::Inapplicable,
                       "requires simple H"});
    }

    if (!h.has_multiple_edges()) {
        auto omega = complete_clique_number(h, budget);
        if (omega) {
            Spectrum s = eigen_spectrum(u);
            double l1 = (k > 0) ? s.values.front() : 0.0;
            double rhs = std::min({static_cast<double>(sc.negative + sc.zero + 1),
                                   static_cast<double>(sc.zero + sc.positive), l1});
            out.push_back(make_bound("clique_le_sign_counts", static_cast<double>(*omega), rhs,
                                     kRealTol,
                                     "n-=" + std::to_string(sc.negative) +
                                         " n0=" + std::to_string(sc.zero) +
                                         " n+=" + std::to_string(sc.positive)));
        } else {
            out.push_back({"clique_le_sign_counts", 0, 0, BoundStatus::Unverified,
                           "oracle budget exceeded"});
        }
    } else {
        out.push_back({"clique_le_sign_counts", 0, 0, BoundStatus::Inapplicable,
                       "requires no multiple edges"});
    }
    return out;
}

}  // namespace uhg

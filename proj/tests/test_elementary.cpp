#include <doctest.h>

#include <map>

#include "fixtures.hpp"
#include "uhg/charpoly.hpp"
#include "uhg/elementary.hpp"
#include "uhg/exact.hpp"
#include "uhg/io.hpp"
#include "uhg/unified_matrix.hpp"

using namespace uhg;

TEST_SUITE_BEGIN("elementary");

namespace {

// Brute-force oracle: scan every edge subset of G_H and keep those whose
// components are all single edges or cycles; count by covered vertex count.
std::map<int, long long> elementary_counts_oracle(const Hypergraph& h) {
    AssociatedGraph g = associated_graph(h);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.order(); ++i)
        for (auto [j, m] : g.neighbors[i])
            if (j > i) edges.emplace_back(i, j);
    REQUIRE(edges.size() <= 20);
    std::map<int, long long> counts;
    for (unsigned mask = 1; mask < (1u << edges.size()); ++mask) {
        std::vector<int> deg(g.order(), 0);
        std::vector<std::vector<int>> adj(g.order());
        int covered = 0;
        for (size_t t = 0; t < edges.size(); ++t) {
            if (!((mask >> t) & 1u)) continue;
            auto [a, b] = edges[t];
            if (deg[a]++ == 0) ++covered;
            if (deg[b]++ == 0) ++covered;
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        // every component must be a single edge or a cycle: every covered
        // vertex has degree 1 with exactly one incident edge component, or
        // degree 2 everywhere on its component
        bool ok = true;
        std::vector<int> comp(g.order(), -1);
        int next_comp = 0;
        for (int s = 0; s < g.order() && ok; ++s) {
            if (deg[s] == 0 || comp[s] >= 0) continue;
            std::vector<int> stack{s};
            comp[s] = next_comp;
            std::vector<int> members;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                members.push_back(v);
                for (int w : adj[v])
                    if (comp[w] < 0) {
                        comp[w] = next_comp;
                        stack.push_back(w);
                    }
            }
            ++next_comp;
            long long comp_edges = 0;
            bool all_two = true, all_one = true;
            for (int v : members) {
                comp_edges += deg[v];
                if (deg[v] != 2) all_two = false;
                if (deg[v] != 1) all_one = false;
            }
            comp_edges /= 2;
            bool is_edge = members.size() == 2 && comp_edges == 1 && all_one;
            bool is_cycle = members.size() >= 3 && comp_edges == static_cast<long long>(members.size()) && all_two;
            if (!is_edge && !is_cycle) ok = false;
        }
        if (ok) counts[covered] += 1;
    }
    return counts;
}

}  // namespace

TEST_CASE("figure-det: exactly three elementary 10-subhypergraphs") {
    Hypergraph h = fixtures::figure_det();
    auto configs = enumerate_elementary(h, 10);
    REQUIRE(configs.size() == 3);
    int with_cycle = 0, matchings = 0;
    for (const auto& c : configs) {
        CHECK(c.cycle_count() * 0 + c.q == 10);
        long long covered = 0;
        for (const auto& cy : c.cycles) covered += static_cast<long long>(cy.size());
        covered += 2LL * c.partition_count();
        CHECK(covered == 10);
        if (c.cycle_count() == 1) ++with_cycle;
        if (c.cycle_count() == 0) {
            ++matchings;
            CHECK(c.partition_count() == 5);
        }
    }
    CHECK(with_cycle == 1);
    CHECK(matchings == 2);
}

TEST_CASE("figure-det determinant decomposition") {
    Hypergraph h = fixtures::figure_det();
    // (-1)^(10-1-3) 2 + (-1)^(10-0-5) + (-1)^(10-0-5) = 2 - 1 - 1 = 0
    CHECK(det_via_elementary(h) == 0);
    CHECK(determinant(build_unified_matrix(h)) == 0);
}

TEST_CASE("triangle plus 3-edge: q=3 induced config and determinant") {
    Hypergraph h1 = fixtures::triangle_plus_edge();
    Hypergraph induced = induced_subhypergraph(h1, {0, 1, 2});
    auto configs = enumerate_elementary(induced, 3);
    REQUIRE(configs.size() == 1);
    CHECK(configs[0].cycle_count() == 1);
    CHECK(configs[0].partition_count() == 0);

    // one elementary 9-subhypergraph: det = (-1)^(9-1-3) * 2 = -2
    auto nine = enumerate_elementary(h1, 9);
    REQUIRE(nine.size() == 1);
    CHECK(det_via_elementary(h1) == -2);
    CHECK(determinant(build_unified_matrix(h1)) == -2);
}

TEST_CASE("every config satisfies the definition clauses") {
    Hypergraph h = fixtures::figure_det();
    AssociatedGraph g = associated_graph(h);
    for (int q = 2; q <= g.order(); ++q) {
        for (const auto& cfg : enumerate_elementary(h, q)) {
            // clause: lengths sum with 2|E| to q, parts disjoint overall
            std::vector<int> seen;
            long long total = 0;
            for (const auto& cy : cfg.cycles) {
                CHECK(cy.size() >= 3);
                total += static_cast<long long>(cy.size());
                for (int i : cy) seen.push_back(i);
                // consecutive parts 2-partition an edge of H
                for (size_t t = 0; t < cy.size(); ++t) {
                    const Part& a = g.parts.at(cy[t]);
                    const Part& b = g.parts.at(cy[(t + 1) % cy.size()]);
                    CHECK(a.disjoint_with(b));
                    CHECK(h.has_edge(a.set_union(b)));
                }
            }
            for (auto [i, j] : cfg.partitions) {
                total += 2;
                seen.push_back(i);
                seen.push_back(j);
                const Part& a = g.parts.at(i);
                const Part& b = g.parts.at(j);
                CHECK(a.disjoint_with(b));
                CHECK(h.has_edge(a.set_union(b)));
            }
            CHECK(total == q);
            std::sort(seen.begin(), seen.end());
            CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
            CHECK(!(cfg.cycles.empty() && cfg.partitions.empty()));
        }
    }
}

TEST_CASE("bijection: enumeration counts match the subgraph oracle") {
    Hypergraph fixtures_corpus[] = {fixtures::figure_det(), fixtures::triangle_plus_edge(),
                                    fixtures::single_edge3(), fixtures::cycle_graph(5)};
    for (const auto& h : fixtures_corpus) {
        auto oracle = elementary_counts_oracle(h);
        ElementaryAggregate agg = aggregate_elementary(h);
        for (int q = 2; q <= agg.k; ++q) {
            long long want = oracle.count(q) ? oracle.at(q) : 0;
            CHECK(agg.config_count[q] == want);
        }
    }
}

TEST_CASE("coefficients via elementary subhypergraphs, frozen cases") {
    // single 3-edge: (x^2-1)^3
    Poly x2m1({big(1), big(0), big(-1)});
    CHECK(coeffs_via_elementary(fixtures::single_edge3()) == x2m1.pow(3));

    // triangle graph: x^3 - 3x - 2
    CHECK(coeffs_via_elementary(fixtures::cycle_graph(3)).str() == "1 0 -3 -2");

    // edgeless: x^n
    CHECK(coeffs_via_elementary(fixtures::edgeless(4)) == Poly::x_power(4));
}

TEST_CASE("coefficient and determinant formulas on a random corpus") {
    Xoshiro256 rng(2024);
    int done = 0;
    while (done < 40) {
        RandomHypergraphParams p;
        p.n = 3 + static_cast<int>(rng.below(5));
        p.edge_count = 1 + static_cast<int>(rng.below(6));
        p.max_rank = 4;
        Hypergraph h = random_hypergraph_with_eindex_cap(p, 12, rng);
        ++done;
        UnifiedMatrix u = build_unified_matrix(h);
        CHECK(coeffs_via_elementary(h) == char_poly_exact(u));
        CHECK(det_via_elementary(h) == determinant(u));
    }
}

TEST_CASE("girth from coefficients, frozen cases") {
    GirthCoeffReport tri = girth_from_coeffs(fixtures::cycle_graph(3));
    CHECK(tri.odd_exact_girth == 3);
    CHECK(tri.odd_girth_cycle_count == 1);
    CHECK(tri.exact_girth == 3);
    CHECK(tri.girth_cycle_count == 1);

    // C4: c_4 = 0, omega_4 = 2 perfect matchings, gamma_4 = -2, one cycle
    GirthCoeffReport c4 = girth_from_coeffs(fixtures::cycle_graph(4));
    CHECK_FALSE(c4.odd_exact_girth.has_value());
    CHECK(c4.exact_girth == 4);
    CHECK(c4.girth_cycle_count == 1);

    GirthCoeffReport acyclic = girth_from_coeffs(fixtures::single_edge3());
    CHECK_FALSE(acyclic.exact_girth.has_value());
    CHECK_FALSE(acyclic.odd_exact_girth.has_value());
}

TEST_CASE("girth from coefficients matches enumeration on a random corpus") {
    Xoshiro256 rng(2025);
    int done = 0;
    while (done < 30) {
        RandomHypergraphParams p;
        p.n = 3 + static_cast<int>(rng.below(5));
        p.edge_count = 2 + static_cast<int>(rng.below(5));
        p.max_rank = 4;
        Hypergraph h = random_hypergraph_with_eindex_cap(p, 12, rng);
        ++done;
        GirthCoeffReport rep = girth_from_coeffs(h);
        auto cycles = enumerate_exact_cycles(h, 0);
        std::optional<int> girth, odd;
        BigInt at_girth = 0, at_odd = 0;
        for (const auto& c : cycles) {
            if (!girth || c.length() < *girth) girth = c.length();
            if (c.length() % 2 && (!odd || c.length() < *odd)) odd = c.length();
        }
        for (const auto& c : cycles) {
            if (girth && c.length() == *girth) at_girth += 1;
            if (odd && c.length() == *odd) at_odd += 1;
        }
        CHECK(rep.exact_girth == girth);
        CHECK(rep.odd_exact_girth == odd);
        if (girth) CHECK(rep.girth_cycle_count == at_girth);
        if (odd) CHECK(rep.odd_girth_cycle_count == at_odd);
    }
}

TEST_CASE("preconditions and budgets") {
    CHECK_THROWS_AS(enumerate_elementary(fixtures::example1(), 4), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_elementary(fixtures::figure_det(), 1), std::invalid_argument);
    CHECK_THROWS_AS(aggregate_elementary(fixtures::complete_graph(6), 50), budget_error);
}

TEST_SUITE_END();

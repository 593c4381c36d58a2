#include <doctest.h>

#include <algorithm>
#include <map>

#include "fixtures.hpp"
#include "uhg/exact.hpp"
#include "uhg/io.hpp"
#include "uhg/unified_matrix.hpp"

using namespace uhg;

TEST_SUITE_BEGIN("exact");

namespace {

// Part-level distance oracle straight from the definitions: parts are
// adjacent when disjoint with union an edge; shortest part path by BFS.
std::optional<int> distance_oracle(const Hypergraph& h, int u, int v) {
    if (u == v) return 0;
    EdgeIndexSet idx = edge_index(h);
    int k = idx.size();
    std::vector<std::vector<int>> adj(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            const Part& a = idx.at(i);
            const Part& b = idx.at(j);
            if (a.disjoint_with(b) && h.has_edge(a.set_union(b))) adj[i].push_back(j);
        }
    std::optional<int> best;
    for (int s = 0; s < k; ++s) {
        if (!idx.at(s).contains(u)) continue;
        std::vector<int> dist(k, -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            for (int y : adj[x])
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
        }
        for (int t = 0; t < k; ++t) {
            if (t == s || dist[t] < 0 || !idx.at(t).contains(v)) continue;
            if (!best || dist[t] < *best) best = dist[t];
        }
    }
    return best;
}

Hypergraph overlap_chain(int n) {
    std::vector<std::vector<int>> e;
    for (int i = 0; i + 2 < n; ++i) e.push_back({i, i + 1, i + 2});
    return Hypergraph(n, e);
}

}  // namespace

TEST_CASE("walk counts: identity and first powers") {
    Hypergraph h = fixtures::single_edge3();
    CHECK(count_exact_walks(h, Part{0}, Part{0}, 0) == 1);
    CHECK(count_exact_walks(h, Part{0}, Part{1, 2}, 0) == 0);
    CHECK(count_exact_walks(h, Part{0}, Part{1, 2}, 1) == 1);
    CHECK(count_exact_walks(h, Part{0}, Part{1, 2}, 3) == 1);
    CHECK(count_exact_walks(h, Part{0}, Part{0}, 3) == 0);
    CHECK_THROWS_AS(count_exact_walks(fixtures::example1(), Part{0}, Part{1}, 1),
                    std::invalid_argument);
}

TEST_CASE("walk counts match brute force on small fixtures") {
    Xoshiro256 rng(321);
    int fixtures_done = 0;
    while (fixtures_done < 8) {
        RandomHypergraphParams p;
        p.n = 3 + static_cast<int>(rng.below(3));
        p.edge_count = 1 + static_cast<int>(rng.below(5));
        p.allow_multiple = fixtures_done % 2 == 0;
        Hypergraph h = random_hypergraph(p, rng);
        UnifiedMatrix u = build_unified_matrix(h);
        if (u.order() > 14) continue;
        ++fixtures_done;
        for (int len = 0; len <= 5; ++len) {
            BigMatrix pw = BigMatrix::from(u.m).power(len);
            for (int i = 0; i < u.order(); ++i)
                for (int j = 0; j < u.order(); ++j) {
                    auto brute =
                        count_exact_walks_enumerated(h, u.labels.at(i), u.labels.at(j), len);
                    if (u.order() <= 16) {
                        REQUIRE(brute.has_value());
                        CHECK(*brute == pw.at(i, j));
                    }
                }
        }
    }
}

TEST_CASE("exact distances, basic cases") {
    // vertices sharing an edge are at distance 1
    Hypergraph h = fixtures::single_edge3();
    CHECK(exact_distance(h, 0, 1) == 1);
    CHECK(exact_distance(h, 0, 0) == 0);

    // two disjoint edges never connect
    Hypergraph disjoint(6, {{0, 1, 2}, {3, 4, 5}});
    CHECK_FALSE(exact_distance(disjoint, 0, 3).has_value());
    CHECK_FALSE(is_exactly_connected(disjoint));
    CHECK_THROWS_AS(exact_diameter(disjoint), std::invalid_argument);
}

TEST_CASE("distance table is symmetric and zero only on the diagonal") {
    Hypergraph h = fixtures::example1_no_loop();
    auto table = exact_distance_table(h);
    int n = h.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            CHECK((table[u][v].has_value() == table[v][u].has_value()));
            if (table[u][v]) {
                CHECK(*table[u][v] == *table[v][u]);
                CHECK((*table[u][v] == 0) == (u == v));
            }
        }
}

TEST_CASE("distance matches the part-level oracle on random fixtures") {
    Xoshiro256 rng(654);
    for (int trial = 0; trial < 12; ++trial) {
        RandomHypergraphParams p;
        p.n = 4 + static_cast<int>(rng.below(3));
        p.edge_count = 2 + static_cast<int>(rng.below(4));
        Hypergraph h = random_hypergraph(p, rng);
        auto table = exact_distance_table(h);
        for (int u = 0; u < h.vertex_count(); ++u)
            for (int v = 0; v < h.vertex_count(); ++v)
                CHECK(table[u][v] == distance_oracle(h, u, v));
    }
}

TEST_CASE("semi-metric only: the frozen overlap chain violates the triangle inequality") {
    Hypergraph h = overlap_chain(7);
    REQUIRE(is_exactly_connected(h));
    auto table = exact_distance_table(h);
    CHECK(*table[0][2] == 1);
    CHECK(*table[2][6] == 2);
    CHECK(*table[0][6] == 4);
    CHECK(*table[0][6] > *table[0][2] + *table[2][6]);
}

TEST_CASE("exact girth") {
    // the worked example contains the e-triangle {0,1},{2},{3}
    Hypergraph h = fixtures::example1_no_loop();
    CHECK(exact_girth(h) == 3);
    auto cycles = enumerate_exact_cycles(h, 3);
    bool found = false;
    AssociatedGraph g = associated_graph(h);
    for (const auto& c : cycles) {
        std::vector<Part> parts;
        for (int i : c.part_indices) parts.push_back(g.parts.at(i));
        if (c.length() == 3 && std::count(parts.begin(), parts.end(), Part{0, 1}) &&
            std::count(parts.begin(), parts.end(), Part{2}) &&
            std::count(parts.begin(), parts.end(), Part{3}))
            found = true;
    }
    CHECK(found);

    CHECK_FALSE(exact_girth(fixtures::single_edge3()).has_value());
    CHECK(exact_girth(fixtures::cycle_graph(5)) == 5);
    CHECK(odd_exact_girth(fixtures::cycle_graph(5)) == 5);
    CHECK_FALSE(odd_exact_girth(fixtures::cycle_graph(4)).has_value());
}

TEST_CASE("girth search agrees with exhaustive cycle enumeration") {
    Xoshiro256 rng(454);
    for (int trial = 0; trial < 30; ++trial) {
        RandomHypergraphParams p;
        p.n = 4 + static_cast<int>(rng.below(3));
        p.edge_count = 2 + static_cast<int>(rng.below(5));
        p.max_rank = 4;
        p.allow_multiple = trial % 3 == 0;
        Hypergraph h = random_hypergraph(p, rng);
        auto cycles = enumerate_exact_cycles(h, 0);
        std::optional<int> girth, odd;
        for (const auto& c : cycles) {
            if (!girth || c.length() < *girth) girth = c.length();
            if (c.length() % 2 && (!odd || c.length() < *odd)) odd = c.length();
        }
        CHECK(exact_girth(h) == girth);
        CHECK(odd_exact_girth(h) == odd);
    }
}

TEST_CASE("exact girth of a loopless graph equals its graph girth") {
    Xoshiro256 rng(777);
    for (int trial = 0; trial < 50; ++trial) {
        RandomHypergraphParams p;
        p.n = 4 + static_cast<int>(rng.below(4));
        p.edge_count = 3 + static_cast<int>(rng.below(6));
        p.max_rank = 2;
        Hypergraph g = random_hypergraph(p, rng);
        // graph girth by brute-force cycle enumeration
        auto cycles = enumerate_exact_cycles(g, 0);
        std::optional<int> brute;
        for (const auto& c : cycles)
            if (!brute || c.length() < *brute) brute = c.length();
        CHECK(exact_girth(g) == brute);
    }
}

TEST_CASE("cycle enumeration counts and weights") {
    // doubled triangle edge: each vertex cycle counts with multiplicity weight
    Hypergraph h = Hypergraph::from_weighted(3, {{{0, 1}, 2}, {{1, 2}, 1}, {{0, 2}, 1}});
    auto cycles = enumerate_exact_cycles(h, 0);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].length() == 3);
    CHECK(cycles[0].weight == 2);
    CHECK(e_triangle_count(h) == 2);
    CHECK(e_triangle_count(fixtures::cycle_graph(3)) == 1);
}

TEST_CASE("c2 c3 theorem") {
    CHECK(check_c2_c3(fixtures::single_edge3()).pass);
    CHECK(check_c2_c3(fixtures::cycle_graph(3)).pass);
    CHECK(check_c2_c3(fixtures::edgeless(4)).pass);
    CHECK_THROWS_AS(check_c2_c3(fixtures::example1()), std::invalid_argument);

    Xoshiro256 rng(888);
    for (int trial = 0; trial < 20; ++trial) {
        RandomHypergraphParams p;
        p.n = 3 + static_cast<int>(rng.below(4));
        p.edge_count = 1 + static_cast<int>(rng.below(6));
        CHECK(check_c2_c3(random_hypergraph(p, rng)).pass);
    }
}

TEST_CASE("odd exact cycle characterization") {
    OddCycleFreeReport single = odd_cycle_free_characterization(fixtures::single_edge3());
    CHECK(single.no_odd_exact_cycle);
    CHECK(single.odd_coeffs_vanish);
    CHECK(single.spectrum_symmetric);
    CHECK(single.equivalent);

    OddCycleFreeReport tri = odd_cycle_free_characterization(fixtures::cycle_graph(3));
    CHECK_FALSE(tri.no_odd_exact_cycle);
    CHECK_FALSE(tri.odd_coeffs_vanish);
    CHECK_FALSE(tri.spectrum_symmetric);
    CHECK(tri.equivalent);

    OddCycleFreeReport c4 = odd_cycle_free_characterization(fixtures::cycle_graph(4));
    CHECK(c4.no_odd_exact_cycle);
    CHECK(c4.equivalent);

    Xoshiro256 rng(999);
    for (int trial = 0; trial < 20; ++trial) {
        RandomHypergraphParams p;
        p.n = 3 + static_cast<int>(rng.below(4));
        p.edge_count = 1 + static_cast<int>(rng.below(6));
        CHECK(odd_cycle_free_characterization(random_hypergraph(p, rng)).equivalent);
    }
}

TEST_CASE("diameter eigenvalue bounds") {
    DiameterBoundsReport k4 = diameter_eigen_bounds(fixtures::complete_graph(4));
    CHECK(k4.exact_diameter == 1);
    CHECK(k4.distinct_eigenvalues == 2);
    CHECK(k4.count_bound_holds);
    CHECK(k4.log_bound_applicable);
    CHECK(k4.log_bound_holds);

    DiameterBoundsReport p4 = diameter_eigen_bounds(fixtures::path_graph(4));
    CHECK(p4.exact_diameter == 3);
    CHECK(p4.distinct_eigenvalues == 4);
    CHECK(p4.count_bound_holds);

    Xoshiro256 rng(1234);
    int done = 0;
    while (done < 15) {
        RandomHypergraphParams p;
        p.n = 3 + static_cast<int>(rng.below(4));
        p.edge_count = 2 + static_cast<int>(rng.below(5));
        Hypergraph h = random_hypergraph(p, rng);
        if (!is_exactly_connected(h)) continue;
        ++done;
        DiameterBoundsReport r = diameter_eigen_bounds(h);
        CHECK(r.count_bound_holds);
        if (r.log_bound_applicable) CHECK(r.log_bound_holds);
    }
}

TEST_SUITE_END();

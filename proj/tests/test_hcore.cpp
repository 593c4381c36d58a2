#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "uhg/hypergraph.hpp"
#include "uhg/io.hpp"

using namespace uhg;

TEST_SUITE_BEGIN("hcore");

TEST_CASE("two_partitions basics") {
    CHECK(two_partitions(Part{1}).empty());

    auto pair = two_partitions(Part{1, 2});
    REQUIRE(pair.size() == 1);
    CHECK(pair[0].first == Part{1});
    CHECK(pair[0].second == Part{2});

    auto three = two_partitions(Part{5, 6, 7});
    CHECK(three.size() == 3);
    std::set<std::pair<Part, Part>> got;
    for (auto& [a, b] : three) got.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
    CHECK(got.count({Part{5}, Part{6, 7}}) == 1);
    CHECK(got.count({Part{6}, Part{5, 7}}) == 1);
    CHECK(got.count({Part{7}, Part{5, 6}}) == 1);
}

TEST_CASE("two_partitions count matches 2^(c-1)-1") {
    for (int c = 1; c <= 8; ++c) {
        std::vector<int> ids(c);
        for (int i = 0; i < c; ++i) ids[i] = i * 3;
        CHECK(static_cast<long long>(two_partitions(Part(ids)).size()) ==
              two_partition_count(c));
    }
}

TEST_CASE("edge_index of the worked six-vertex hypergraph") {
    EdgeIndexSet idx = edge_index(fixtures::example1());
    REQUIRE(idx.size() == 14);
    // canonical order: singletons first, then pairs sorted lexicographically
    std::vector<Part> expect = {
        Part{0}, Part{1}, Part{2}, Part{3}, Part{4}, Part{5},
        Part{0, 1}, Part{0, 2}, Part{0, 3}, Part{1, 2}, Part{1, 3},
        Part{3, 4}, Part{3, 5}, Part{4, 5}};
    for (int i = 0; i < 14; ++i) CHECK(idx.at(i) == expect[static_cast<size_t>(i)]);
    CHECK(idx.require_index(Part{4, 5}) == 13);
}

TEST_CASE("edge_index sizes") {
    CHECK(edge_index(fixtures::figure_det()).size() == 10);
    CHECK(edge_index(fixtures::edgeless(5)).size() == 5);
    CHECK(edge_index(fixtures::single_edge3()).size() == 6);
}

TEST_CASE("edge_index independent of edge input order") {
    Hypergraph a(5, {{0, 1, 2}, {2, 3}, {3, 4}});
    Hypergraph b(5, {{3, 4}, {2, 3}, {0, 1, 2}});
    EdgeIndexSet ia = edge_index(a), ib = edge_index(b);
    REQUIRE(ia.size() == ib.size());
    for (int i = 0; i < ia.size(); ++i) CHECK(ia.at(i) == ib.at(i));
}

TEST_CASE("degrees") {
    Hypergraph h = fixtures::example1();
    CHECK(h.degree(0) == 4);  // loop + doubled 3-edge + {0,1,3}
    CHECK(h.degree(1) == 3);
    CHECK(h.degree(3) == 3);
    CHECK_THROWS_AS(h.degree(6), std::invalid_argument);

    CHECK(fixtures::edgeless(4).degree(2) == 0);
    Hypergraph single = fixtures::single_edge3();
    for (int v = 0; v < 3; ++v) CHECK(single.degree(v) == 1);
}

TEST_CASE("unified degree") {
    Hypergraph h = fixtures::example1();
    for (int v = 0; v < h.vertex_count(); ++v)
        CHECK(unified_degree(h, Part::single(v)) == h.degree(v));
    CHECK(unified_degree(h, Part{1, 2}) == 2);   // only inside the doubled edge
    CHECK(unified_degree(h, Part{4, 5}) == 2);   // the edge itself plus {3,4,5}
    CHECK_THROWS_AS(unified_degree(h, Part{0, 4}), std::invalid_argument);

    CHECK(unified_degree(fixtures::single_edge3(), Part{0, 1}) == 1);
    CHECK(min_unified_degree(fixtures::single_edge3()) == 1);
}

TEST_CASE("included edge count") {
    CHECK(included_edge_count(fixtures::example1()) == 1);  // {4,5} only; the loop is excluded
    CHECK(included_edge_count(fixtures::cycle_graph(5)) == 0);
    Hypergraph h = Hypergraph::from_weighted(3, {{{0, 1}, 1}, {{0, 1, 2}, 3}});
    CHECK(included_edge_count(h) == 1);
    CHECK(has_included_edge(fixtures::example1()));
    CHECK_FALSE(has_included_edge(fixtures::figure_det()));
}

TEST_CASE("structural queries") {
    Hypergraph h = fixtures::example1();
    CHECK(h.rank() == 3);
    CHECK(fixtures::edgeless(3).rank() == 0);
    CHECK_FALSE(h.is_simple());
    CHECK(fixtures::figure_det().is_simple());
    CHECK(fixtures::single_edge3().is_uniform());
    CHECK_FALSE(h.is_uniform());
    CHECK(h.edge_multiset_size() == 7);
}

TEST_CASE("degree sum equals multiplicity-weighted size sum") {
    Hypergraph hs[] = {fixtures::example1(), fixtures::figure_det(), fixtures::single_edge3(),
                       fixtures::edgeless(4)};
    for (const auto& h : hs) {
        long long dsum = 0;
        for (int v = 0; v < h.vertex_count(); ++v) dsum += h.degree(v);
        long long esum = 0;
        for (const auto& e : h.edges()) esum += static_cast<long long>(e.multiplicity) * e.size();
        CHECK(dsum == esum);
    }
}

TEST_CASE("induced subhypergraph and vertex deletion") {
    Hypergraph h = fixtures::example1();
    std::vector<int> all{0, 1, 2, 3, 4, 5};
    Hypergraph same = induced_subhypergraph(h, all);
    CHECK(same.vertex_count() == h.vertex_count());
    CHECK(same.edges().size() == h.edges().size());
    Hypergraph nodel = delete_vertices(h, {});
    CHECK(nodel.edges().size() == h.edges().size());

    // dropping vertex 0 removes the loop and the edges through 0
    Hypergraph d0 = delete_vertices(h, {0});
    CHECK(d0.vertex_count() == 5);
    CHECK(d0.edges().size() == 3);  // {2,3}->{1,2}, {3,4,5}->{2,3,4}, {4,5}->{3,4}
    CHECK(d0.multiplicity(Part{1, 2}) == 1);

    Hypergraph sub = induced_subhypergraph(h, {0, 1, 2});
    CHECK(sub.vertex_count() == 3);
    CHECK(sub.multiplicity(Part{0, 1, 2}) == 2);
    CHECK(sub.multiplicity(Part{0}) == 1);
    CHECK(sub.edges().size() == 2);
}

TEST_CASE("disjoint union relabels blocks") {
    Hypergraph a(2, {{0, 1}});
    Hypergraph b(3, {{0, 1, 2}});
    Hypergraph u = disjoint_union({a, b});
    CHECK(u.vertex_count() == 5);
    CHECK(u.multiplicity(Part{0, 1}) == 1);
    CHECK(u.multiplicity(Part{2, 3, 4}) == 1);
}

TEST_CASE("delta* is at most the minimum degree") {
    Xoshiro256 rng(7);
    for (int i = 0; i < 30; ++i) {
        RandomHypergraphParams p;
        p.n = 3 + static_cast<int>(rng.below(4));
        p.edge_count = 1 + static_cast<int>(rng.below(5));
        p.max_rank = 4;
        Hypergraph h = random_hypergraph(p, rng);
        if (edge_index(h).size() == 0) continue;
        CHECK(min_unified_degree(h) <= h.min_degree());
    }
}

TEST_CASE("rank limit enforced") {
    std::vector<int> huge(21);
    for (int i = 0; i < 21; ++i) huge[i] = i;
    CHECK_THROWS_AS(Hypergraph(21, {huge}), std::invalid_argument);
    CHECK_NOTHROW(Hypergraph(21, {huge}, 21));
}

TEST_SUITE_END();

#include <doctest.h>

#include "fixtures.hpp"
#include "uhg/bounds.hpp"
#include "uhg/io.hpp"
#include "uhg/spectrum.hpp"
#include "uhg/unified_matrix.hpp"
#include "uhg/verify.hpp"

using namespace uhg;

TEST_SUITE_BEGIN("bounds");

namespace {

const BoundReport& find_bound(const std::vector<BoundReport>& v, const std::string& name) {
    for (const auto& r : v)
        if (r.name == name) return r;
    std::string msg = "missing bound " + name;
    REQUIRE_MESSAGE(false, msg.c_str());
    static BoundReport dummy;
    return dummy;
}

}  // namespace

TEST_CASE("exact sign counts from the charpoly") {
    // single 3-edge: (x^2-1)^3 has three +1 and three -1 roots
    SignCounts sc = sign_counts_exact(char_poly_exact(build_unified_matrix(fixtures::single_edge3())));
    CHECK(sc.positive == 3);
    CHECK(sc.zero == 0);
    CHECK(sc.negative == 3);

    SignCounts z = sign_counts_exact(char_poly_exact(build_unified_matrix(fixtures::edgeless(4))));
    CHECK(z.zero == 4);
    CHECK(z.positive == 0);
    CHECK(z.negative == 0);

    SignCounts tri = sign_counts_exact(char_poly_exact(build_unified_matrix(fixtures::cycle_graph(3))));
    CHECK(tri.positive == 1);
    CHECK(tri.negative == 2);
    CHECK(tri.zero == 0);
}

TEST_CASE("exact sign counts agree with the numeric spectrum on a corpus") {
    Xoshiro256 rng(4242);
    for (int trial = 0; trial < 25; ++trial) {
        RandomHypergraphParams p;
        p.n = 3 + static_cast<int>(rng.below(4));
        p.edge_count = 1 + static_cast<int>(rng.below(6));
        p.allow_loops = trial % 3 == 0;
        Hypergraph h = random_hypergraph(p, rng);
        UnifiedMatrix u = build_unified_matrix(h);
        SignCounts exact = sign_counts_exact(char_poly_exact(u));
        SignCounts numeric = sign_counts_numeric(eigen_spectrum(u));
        CHECK(exact.positive == numeric.positive);
        CHECK(exact.zero == numeric.zero);
        CHECK(exact.negative == numeric.negative);
    }
}

TEST_CASE("spectral radius bounds, tight cases") {
    auto kn = spectral_radius_bounds(fixtures::complete_graph(5));
    CHECK(find_bound(kn, "abs_eigen_le_max_degree").status == BoundStatus::Tight);
    CHECK(find_bound(kn, "radius_ge_min_unified_degree").status == BoundStatus::Tight);
    CHECK(find_bound(kn, "rank_partition_le_subgraph_radius").status == BoundStatus::Tight);
    CHECK(find_bound(kn, "radius_ge_average_unified_degree").status == BoundStatus::Tight);

    auto single = spectral_radius_bounds(fixtures::single_edge3());
    for (const auto& r : single)
        CHECK(r.status != BoundStatus::Violated);
    CHECK(find_bound(single, "abs_eigen_le_max_degree").status == BoundStatus::Tight);
}

TEST_CASE("interlacing") {
    Hypergraph h = fixtures::example1_no_loop();
    std::vector<int> all{0, 1, 2, 3, 4, 5};
    CHECK(interlacing_check(h, all).ok());
    CHECK(interlacing_check(h, {0}).ok());
    CHECK(interlacing_check(h, {0, 1, 2}).ok());

    Xoshiro256 rng(5151);
    for (int trial = 0; trial < 20; ++trial) {
        RandomHypergraphParams p;
        p.n = 4 + static_cast<int>(rng.below(4));
        p.edge_count = 2 + static_cast<int>(rng.below(5));
        p.allow_loops = trial % 4 == 0;
        Hypergraph rh = random_hypergraph(p, rng);
        std::vector<int> w;
        for (int v = 0; v < rh.vertex_count(); ++v)
            if (rng.below(2)) w.push_back(v);
        if (w.empty()) w.push_back(0);
        CHECK(interlacing_check(rh, w).ok());
    }
}

TEST_CASE("combinatorial oracles, frozen values") {
    Hypergraph single = fixtures::single_edge3();
    CHECK(weak_chromatic_number(single) == 2);
    CHECK(strong_chromatic_number(single) == 3);
    CHECK(independence_number(single) == 2);
    CHECK(complete_clique_number(single) == 0);

    // complete hypergraph on two vertices
    Hypergraph complete2(2, {{0}, {1}, {0, 1}});
    CHECK(complete_clique_number(complete2) == 2);
    CHECK_THROWS_AS(weak_chromatic_number(complete2), std::invalid_argument);

    Hypergraph empty = fixtures::edgeless(5);
    CHECK(weak_chromatic_number(empty) == 1);
    CHECK(independence_number(empty) == 5);
    CHECK(complete_clique_number(empty) == 0);

    CHECK(weak_chromatic_number(fixtures::complete_graph(4)) == 4);
    CHECK(strong_chromatic_number(fixtures::complete_graph(4)) == 4);
    CHECK(weak_chromatic_number(fixtures::cycle_graph(5)) == 3);
    CHECK(independence_number(fixtures::cycle_graph(5)) == 2);
}

TEST_CASE("oracle monotonicity spot checks") {
    // deleting an edge cannot shrink an independent set
    Hypergraph with_edge(4, {{0, 1}, {1, 2}, {2, 3}});
    Hypergraph without(4, {{0, 1}, {2, 3}});
    CHECK(*independence_number(without) >= *independence_number(with_edge));

    // adding loops grows the complete-clique number at most
    Hypergraph base(2, {{0, 1}});
    Hypergraph richer(2, {{0}, {1}, {0, 1}});
    CHECK(*complete_clique_number(richer) >= *complete_clique_number(base));
}

TEST_CASE("chromatic bounds") {
    auto kn = chromatic_bounds(fixtures::complete_graph(5));
    const auto& head = find_bound(kn, "weak_chromatic_le_radius");
    CHECK(head.status == BoundStatus::Tight);  // chi = n, 1 + lambda_1 = n

    // bipartite graph: symmetric spectrum makes the ratio bound tight
    auto bip = chromatic_bounds(fixtures::cycle_graph(4));
    const auto& ratio = find_bound(bip, "subgraph_chromatic_ge_ratio");
    CHECK(ratio.status == BoundStatus::Tight);

    for (const auto& r : chromatic_bounds(fixtures::example1_no_loop()))
        CHECK(r.status != BoundStatus::Violated);
}

TEST_CASE("independence and clique bounds, frozen cases") {
    // edgeless: alpha = n = k - 0
    auto empty = independence_clique_bounds(fixtures::edgeless(4));
    const auto& a = find_bound(empty, "independence_le_sign_counts");
    CHECK(a.status == BoundStatus::Tight);

    // single 3-edge: alpha = 2 <= 6 - 3 = 3
    auto single = independence_clique_bounds(fixtures::single_edge3());
    const auto& a3 = find_bound(single, "independence_le_sign_counts");
    CHECK(a3.status == BoundStatus::Holds);
    CHECK(a3.lhs == 2);
    CHECK(a3.rhs == 3);

    // complete hypergraph on 2 vertices: omega = 2, spectrum {2, 0}
    auto c2 = independence_clique_bounds(Hypergraph(2, {{0}, {1}, {0, 1}}));
    const auto& w = find_bound(c2, "clique_le_sign_counts");
    CHECK(w.status == BoundStatus::Tight);
    CHECK(w.lhs == 2);
}

TEST_CASE("numeric sign counts are stable under tolerance wiggle on separated fixtures") {
    Hypergraph fixtures_corpus[] = {fixtures::example1(), fixtures::figure_det(),
                                    fixtures::single_edge3(), fixtures::cycle_graph(5),
                                    fixtures::complete_graph(4)};
    for (const auto& h : fixtures_corpus) {
        UnifiedMatrix u = build_unified_matrix(h);
        SignCounts exact = sign_counts_exact(char_poly_exact(u));
        for (double scale : {0.9e-8, 1e-8, 1.1e-8}) {
            SignCounts numeric = sign_counts_numeric(eigen_spectrum(u, kDefaultNumTol, scale));
            CHECK(numeric.positive == exact.positive);
            CHECK(numeric.zero == exact.zero);
            CHECK(numeric.negative == exact.negative);
        }
    }
}

TEST_CASE("all applicable bounds hold on a random corpus") {
    Xoshiro256 rng(6001);
    for (int trial = 0; trial < 20; ++trial) {
        RandomHypergraphParams p;
        p.n = 3 + static_cast<int>(rng.below(5));
        p.edge_count = 1 + static_cast<int>(rng.below(6));
        p.allow_loops = trial % 5 == 0;
        p.allow_multiple = trial % 7 == 0;
        Hypergraph h = random_hypergraph(p, rng);
        VerifyResult r = verify_bounds(h, "t" + std::to_string(trial), kDefaultBudget);
        for (const auto& line : r.lines) {
            INFO(line);
            CHECK(line.find("status=FAIL") == std::string::npos);
        }
    }
}

TEST_SUITE_END();

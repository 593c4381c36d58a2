#ifndef UHG_ELEMENTARY_HPP
#define UHG_ELEMENTARY_HPP

#include <optional>
#include <vector>

#include "uhg/charpoly.hpp"
#include "uhg/exact.hpp"
#include "uhg/hypergraph.hpp"

namespace uhg {

/// An elementary q-subhypergraph: disjoint exact cycles plus edge
/// 2-partitions whose covers are pairwise part-disjoint, with
/// sum of cycle lengths + 2 |E| = q. Parts referenced by I(H) index.
struct ElementaryConfig {
    int q = 0;
    std::vector<std::vector<int>> cycles;          // canonical part-index cycles
    std::vector<std::pair<int, int>> partitions;   // part-index pairs, first < second

    int cycle_count() const { return static_cast<int>(cycles.size()); }
    int partition_count() const { return static_cast<int>(partitions.size()); }
};

/// All elementary q-subhypergraphs of a simple H, via the elementary
/// subgraphs of G_H on q vertices.
std::vector<ElementaryConfig> enumerate_elementary(const Hypergraph& h, int q,
                                                   long long budget = kDefaultBudget);

/// One sweep over every elementary subgraph of G_H, bucketed by size.
struct ElementaryAggregate {
    int k = 0;
    std::vector<BigInt> signed_sum;      // index t: sum of (-1)^(c+e) 2^c
    std::vector<long long> config_count; // number of elementary t-subhypergraphs
    std::vector<long long> matchings;    // omega_t: configs with no cycle
};
ElementaryAggregate aggregate_elementary(const Hypergraph& h,
                                         long long budget = kDefaultBudget);

/// det U(H) = sum over elementary k-subhypergraphs of (-1)^(k-c-e) 2^c.
BigInt det_via_elementary(const Hypergraph& h, long long budget = kDefaultBudget);

/// Characteristic polynomial from elementary subhypergraph counts.
CharPoly coeffs_via_elementary(const Hypergraph& h, long long budget = kDefaultBudget);

/// Exact girths and cycle counts read off the charpoly coefficients.
struct GirthCoeffReport {
    std::optional<int> odd_exact_girth;
    BigInt odd_girth_cycle_count = 0;
    std::optional<int> exact_girth;
    BigInt girth_cycle_count = 0;
};
GirthCoeffReport girth_from_coeffs(const Hypergraph& h, long long budget = kDefaultBudget);

}  // namespace uhg

#endif

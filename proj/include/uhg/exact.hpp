#ifndef UHG_EXACT_HPP
#define UHG_EXACT_HPP

#include <optional>
#include <string>
#include <vector>

#include "uhg/charpoly.hpp"
#include "uhg/identities.hpp"
#include "uhg/unified_matrix.hpp"

namespace uhg {

/// Thrown when an enumeration exceeds its step budget.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr long long kDefaultBudget = 10'000'000;

/// Exact-walk count of the given length between two parts, via the exact
/// integer matrix power (U^len)_{S,S'}. Requires loopless H.
BigInt count_exact_walks(const Hypergraph& h, const Part& from, const Part& to, int len);

/// Brute-force walk enumeration over part sequences, weighting parallel
/// copies; the independent oracle for count_exact_walks. Returns nothing
/// beyond the len <= 8, k <= 16 caps.
std::optional<BigInt> count_exact_walks_enumerated(const Hypergraph& h, const Part& from,
                                                   const Part& to, int len);

/// Exact distance between vertices: the shortest exact path joining parts
/// S ∋ u and S' ∋ v with S != S'; nullopt when no such pair is connected.
std::optional<int> exact_distance(const Hypergraph& h, int u, int v);

/// n x n table of exact distances; entry (u,u) = 0.
std::vector<std::vector<std::optional<int>>> exact_distance_table(const Hypergraph& h);

bool is_exactly_connected(const Hypergraph& h);

/// Maximum exact distance; throws when H is not exactly connected.
int exact_diameter(const Hypergraph& h);

/// A cycle of G_H as a canonical part-index sequence (lowest index first,
/// direction fixed); weight is the product of edge multiplicities, the
/// number of exact cycles over parallel copies.
struct ExactCycle {
    std::vector<int> part_indices;
    long long weight = 1;

    int length() const { return static_cast<int>(part_indices.size()); }
};

/// All exact cycles of length <= max_len (0 = no limit); loopless H.
std::vector<ExactCycle> enumerate_exact_cycles(const Hypergraph& h, int max_len,
                                               long long budget = kDefaultBudget);

std::optional<int> exact_girth(const Hypergraph& h);
std::optional<int> odd_exact_girth(const Hypergraph& h);

/// Number of exact cycles of length 3, weighted by edge multiplicities.
long long e_triangle_count(const Hypergraph& h, long long budget = kDefaultBudget);

/// c_2 = (partial(H) - sum of unified degrees)/2 and -c_3 = twice the
/// e-triangle count; simple H only.
CheckReport check_c2_c3(const Hypergraph& h);

/// Three-way equivalence for simple H: no odd exact cycle, vanishing odd
/// charpoly coefficients, spectrum symmetric about the origin.
struct OddCycleFreeReport {
    bool no_odd_exact_cycle = false;
    bool odd_coeffs_vanish = false;
    bool spectrum_symmetric = false;
    bool equivalent = false;
};
OddCycleFreeReport odd_cycle_free_characterization(const Hypergraph& h);

/// ED(H) <= (number of distinct eigenvalues) - 1, plus the eigenvector-gap
/// bound when its hypotheses hold.
struct DiameterBoundsReport {
    int exact_diameter = 0;
    int distinct_eigenvalues = 0;
    bool count_bound_holds = false;
    bool log_bound_applicable = false;
    std::string log_bound_note;
    long long log_bound_value = 0;
    bool log_bound_holds = true;
};
DiameterBoundsReport diameter_eigen_bounds(const Hypergraph& h);

}  // namespace uhg

#endif

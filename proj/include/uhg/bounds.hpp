#ifndef UHG_BOUNDS_HPP
#define UHG_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "uhg/charpoly.hpp"
#include "uhg/exact.hpp"
#include "uhg/hypergraph.hpp"
#include "uhg/spectrum.hpp"

namespace uhg {

enum class BoundStatus { Holds, Tight, Violated, Inapplicable, Unverified };

std::string to_string(BoundStatus s);

struct BoundReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    BoundStatus status = BoundStatus::Inapplicable;
    std::string note;

    bool ok() const { return status != BoundStatus::Violated; }
};

BoundReport make_bound(const std::string& name, double lhs, double rhs, double tol,
                       const std::string& note = "");

/// Exact eigenvalue sign counts from the charpoly: the zero multiplicity is
/// the trailing-zero valuation; positive/negative counts come from Descartes'
/// rule, exact because all roots are real.
SignCounts sign_counts_exact(const CharPoly& p);

/// Spectral-radius family: the (k-1)/k degree-sum bound, |lambda| <= Delta,
/// lambda_1 >= delta* - partial/k, the rank-partition bound against the
/// 2-edge spanning subgraph, and lambda_1 >= average unified degree.
std::vector<BoundReport> spectral_radius_bounds(const Hypergraph& h);

/// Interlacing of the induced subhypergraph on W inside H.
BoundReport interlacing_check(const Hypergraph& h, const std::vector<int>& w);

inline constexpr int kOracleVertexLimit = 10;

/// Exhaustive oracles; nullopt when n exceeds the desk-scale limit or the
/// budget runs out.
std::optional<int> weak_chromatic_number(const Hypergraph& h,
                                         long long budget = kDefaultBudget);
std::optional<int> strong_chromatic_number(const Hypergraph& h,
                                           long long budget = kDefaultBudget);
std::optional<long long> independence_number(const Hypergraph& h,
                                             long long budget = kDefaultBudget);
std::optional<int> complete_clique_number(const Hypergraph& h,
                                          long long budget = kDefaultBudget);

/// chi <= 1 + lambda_1 (hypotheses checked exhaustively for n <= 8) and the
/// strong/weak/subgraph chain against the 2-edge spanning subgraph.
std::vector<BoundReport> chromatic_bounds(const Hypergraph& h,
                                          long long budget = kDefaultBudget);

/// alpha <= min(k - l+, k - l-) and
/// omega <= min(n- + n0 + 1, n0 + n+, lambda_1).
std::vector<BoundReport> independence_clique_bounds(const Hypergraph& h,
                                                    long long budget = kDefaultBudget);

}  // namespace uhg

#endif

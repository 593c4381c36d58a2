#ifndef UHG_IDENTITIES_HPP
#define UHG_IDENTITIES_HPP

#include <string>
#include <vector>

#include "uhg/charpoly.hpp"
#include "uhg/hypergraph.hpp"
#include "uhg/spectrum.hpp"
#include "uhg/unified_matrix.hpp"

namespace uhg {

/// Outcome of one verification; failures are collected, not thrown.
struct CheckReport {
    std::string name;
    bool pass = true;
    std::vector<std::string> notes;

    void fail(const std::string& msg) {
        pass = false;
        notes.push_back("FAIL: " + msg);
    }
    void note(const std::string& msg) { notes.push_back(msg); }
};

/// Row sums at singleton parts equal vertex degrees, and the degree sum
/// equals the multiplicity-weighted sum of edge cardinalities.
CheckReport check_row_sum_lemma(const Hypergraph& h);

/// Sum of squared eigenvalues (numeric) and tr(U^2) (exact) against
/// 2 sum m(e)^2 |tau(e)| + sum of squared loop multiplicities; plus the
/// degree-sum form when H has no multiple edges.
CheckReport check_trace_square_identity(const Hypergraph& h);

struct MinorSumResult {
    long long sqrt_abs_minor_sum = 0;  // sum of sqrt|det U[T|T]| over 2-sets T
    long long tau_weighted_sum = 0;    // sum of m(e) |tau(e)|
    bool equal = false;
    bool simple_form_checked = false;  // signed-minor form, simple H only
    long long signed_minor_sum = 0;
    long long tau_sum = 0;
    bool simple_equal = false;
};

/// 2x2 principal-minor theorem for loopless H; throws on loops.
MinorSumResult two_set_minor_sum(const Hypergraph& h);

/// U(H) equals A(G_H) entrywise (loopless H).
CheckReport check_unified_equals_associated(const Hypergraph& h);

/// Numeric spectrum vs exact charpoly: Newton sums for p = 1,2,3 and a
/// root-residual guard |P(lambda_i)| <= k * tol * max(1,||M||)^k.
CheckReport check_charpoly_spectrum_consistency(const UnifiedMatrix& u,
                                                double num_tol = kDefaultNumTol);

}  // namespace uhg

#endif

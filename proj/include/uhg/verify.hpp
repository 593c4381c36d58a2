#ifndef UHG_VERIFY_HPP
#define UHG_VERIFY_HPP

#include <string>
#include <vector>

#include "uhg/constructions.hpp"
#include "uhg/hypergraph.hpp"
#include "uhg/io.hpp"

namespace uhg {

/// Aggregated outcome of a verification run; lines are deterministic given
/// identical inputs.
struct VerifyResult {
    std::vector<std::string> lines;
    int pass = 0;
    int fail = 0;
    int unverified = 0;

    bool ok() const { return fail == 0; }
    void add(const std::string& check, const std::string& tag, bool passed,
             const std::string& note = "");
    void add_unverified(const std::string& check, const std::string& tag,
                        const std::string& note);
    void merge(const VerifyResult& other);
    std::string summary(const std::string& suite) const;
};

/// Row-sum, trace-square, minor-sum, associated-graph equality, walk-count,
/// c2/c3 and odd-cycle checks, as applicable to the fixture.
VerifyResult verify_identities(const Hypergraph& h, const std::string& tag, long long budget);

/// Elementary-subhypergraph coefficient and determinant formulas plus
/// girth-from-coefficients against direct enumeration. Simple H only.
VerifyResult verify_elementary(const Hypergraph& h, const std::string& tag, long long budget);

/// Closed-form spectrum vs the numeric spectrum of the generated hypergraph,
/// and the component census.
VerifyResult verify_closed_form(const PartSizeProfile& profile, bool cycle,
                                const std::string& tag);

/// Pendant, coalescence, edge-attachment and disjoint-union identities on
/// the fixture (attachment points drawn from the rng).
VerifyResult verify_operations(const Hypergraph& h, const Hypergraph& other,
                               const std::string& tag, Xoshiro256& rng);

/// Every applicable bound of the bounds module.
VerifyResult verify_bounds(const Hypergraph& h, const std::string& tag, long long budget);

}  // namespace uhg

#endif

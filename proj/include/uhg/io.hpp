#ifndef UHG_IO_HPP
#define UHG_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "uhg/charpoly.hpp"
#include "uhg/hypergraph.hpp"
#include "uhg/unified_matrix.hpp"

namespace uhg {

/// xoshiro256** with splitmix64 seeding; fully determined by the seed.
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed);
    std::uint64_t next();
    /// uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t s_[4];
};

/// Text format: optional '#' comments, a header line "n <count>", then one
/// edge per line as space-separated vertex ids; repeated lines accumulate
/// multiplicity.
Hypergraph parse_hg(std::istream& in, const std::string& source = "<input>");
Hypergraph parse_hg_string(const std::string& text, const std::string& source = "<string>");
Hypergraph load_hg(const std::string& path);

/// Compatibility shim: {"n": <count>, "edges": [[ids...], ...]}.
Hypergraph parse_json_string(const std::string& text, const std::string& source = "<json>");

/// Dispatches on the extension: .json through the shim, anything else as .hg.
Hypergraph load_any(const std::string& path);

std::string emit_hg(const Hypergraph& h);
void save_hg(const Hypergraph& h, const std::string& path);

/// Labeled nonzero entries, one per line: S_i <TAB> S_j <TAB> value.
std::string matrix_triplets(const UnifiedMatrix& u);

/// Dense CSV with quoted part labels on the first row and column.
std::string matrix_csv(const UnifiedMatrix& u);

/// Coefficients highest degree first, space separated.
std::string charpoly_line(const CharPoly& p);

/// 12 significant digits, fixed across platforms.
std::string format_double(double x);

struct RandomHypergraphParams {
    int n = 6;
    int edge_count = 5;
    int max_rank = 4;
    bool allow_loops = false;
    bool allow_multiple = false;
};

Hypergraph random_hypergraph(const RandomHypergraphParams& params, Xoshiro256& rng);

/// Regenerates (shedding edges if needed) until the e-index fits the cap.
Hypergraph random_hypergraph_with_eindex_cap(const RandomHypergraphParams& params,
                                             int eindex_cap, Xoshiro256& rng);

/// Enumeration budget: US_BUDGET from the environment, else the default.
long long budget_from_env();

}  // namespace uhg

#endif

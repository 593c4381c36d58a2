#ifndef UHG_SPECTRUM_HPP
#define UHG_SPECTRUM_HPP

#include <utility>
#include <vector>

#include "uhg/unified_matrix.hpp"

namespace uhg {

/// Eigenvalues of a symmetric matrix, descending. Householder reduction to
/// tridiagonal form followed by implicit-shift QL; deterministic.
std::vector<double> symmetric_eigenvalues(const IntMatrix& m);
std::vector<double> symmetric_eigenvalues(const std::vector<double>& dense, int n);

struct EigenSystem {
    std::vector<double> values;                 // descending
    std::vector<std::vector<double>> vectors;   // vectors[i] pairs with values[i], unit norm
};

/// Full eigendecomposition by cyclic Jacobi rotations; deterministic.
EigenSystem symmetric_eigensystem(const IntMatrix& m);

struct Spectrum {
    std::vector<double> values;                  // descending
    std::vector<std::pair<double, int>> groups;  // (representative, multiplicity)
    double group_tol = 0.0;

    int multiplicity_of(double value) const;     // 0 if no group within tolerance
    int distinct_count() const { return static_cast<int>(groups.size()); }
};

inline constexpr double kDefaultNumTol = 1e-10;
inline constexpr double kDefaultGroupScale = 1e-8;

/// Numeric spectrum with multiplicity grouping at
/// group_scale * max(1, ||M||_inf).
Spectrum eigen_spectrum(const UnifiedMatrix& u, double num_tol = kDefaultNumTol,
                        double group_scale = kDefaultGroupScale);
Spectrum group_values(std::vector<double> values_desc, double tol);

/// Counts of eigenvalues >, ==, < 0 under the grouping tolerance.
struct SignCounts {
    int positive = 0;
    int zero = 0;
    int negative = 0;
};
SignCounts sign_counts_numeric(const Spectrum& s);

}  // namespace uhg

#endif

#ifndef UHG_CHARPOLY_HPP
#define UHG_CHARPOLY_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "uhg/unified_matrix.hpp"

namespace uhg {

using BigInt = mpz_class;

/// gmpxx has no long long overloads; go through long (64-bit here).
inline BigInt big(long long v) { return BigInt(static_cast<long>(v)); }

/// Integer polynomial, coefficients highest degree first. Normalized so the
/// leading coefficient is nonzero (the zero polynomial is {0}).
class Poly {
public:
    Poly() : c_{0} {}
    explicit Poly(std::vector<BigInt> coeffs_high_first);
    static Poly constant(BigInt v);
    static Poly x_power(int j);  // x^j

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }
    const std::vector<BigInt>& coeffs() const { return c_; }

    /// Coefficient c_i of x^(degree-i); i = 0 is the leading coefficient.
    const BigInt& coeff_from_top(int i) const { return c_[i]; }
    /// Coefficient of x^p (0 if p > degree).
    BigInt coeff_of_power(int p) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const BigInt& s) const;
    Poly times_x_power(int j) const;
    Poly pow(int e) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    double eval(double x) const;

    /// "1 0 -3 -2" (highest degree first)
    std::string str() const;

private:
    std::vector<BigInt> c_;
};

/// Monic characteristic polynomial det(xI - M), exact coefficients.
using CharPoly = Poly;

/// Division-free (Berkowitz) characteristic polynomial of a square integer
/// matrix; degree equals the order, leading coefficient 1.
CharPoly char_poly_exact(const IntMatrix& m);
CharPoly char_poly_exact(const UnifiedMatrix& u);

/// Exact determinant, equal to (-1)^k times the constant charpoly coefficient.
BigInt determinant(const IntMatrix& m);
BigInt determinant(const UnifiedMatrix& u);

/// Dense arbitrary-precision matrix for exact powers (walk counting).
struct BigMatrix {
    int n = 0;
    std::vector<BigInt> a;

    explicit BigMatrix(int order) : n(order), a(static_cast<size_t>(order) * order, 0) {}
    static BigMatrix identity(int order);
    static BigMatrix from(const IntMatrix& m);

    BigInt& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const BigInt& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    BigMatrix operator*(const BigMatrix& o) const;
    BigMatrix power(long long e) const;
    BigInt trace() const;
};

}  // namespace uhg

#endif

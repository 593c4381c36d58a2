#include "uhg/charpoly.hpp"

#include <stdexcept>

namespace uhg {

namespace {

void normalize(std::vector<BigInt>& c) {
    size_t lead = 0;
    while (lead + 1 < c.size() && c[lead] == 0) ++lead;
    if (lead) c.erase(c.begin(), c.begin() + static_cast<long>(lead));
}

}  // namespace

Poly::Poly(std::vector<BigInt> coeffs_high_first) : c_(std::move(coeffs_high_first)) {
    if (c_.empty()) c_ = {BigInt(0)};
    normalize(c_);
}

Poly Poly::constant(BigInt v) { return Poly({std::move(v)}); }

Poly Poly::x_power(int j) {
    std::vector<BigInt> c(static_cast<size_t>(j) + 1, 0);
    c[0] = 1;
    return Poly(std::move(c));
}

BigInt Poly::coeff_of_power(int p) const {
    int d = degree();
    if (p < 0 || p > d) return 0;
    return c_[static_cast<size_t>(d - p)];
}

Poly Poly::operator+(const Poly& o) const {
    size_t n = std::max(c_.size(), o.c_.size());
    std::vector<BigInt> out(n, 0);
    for (size_t i = 0; i < c_.size(); ++i) out[n - c_.size() + i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[n - o.c_.size() + i] += o.c_[i];
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& o) const {
    size_t n = std::max(c_.size(), o.c_.size());
    std::vector<BigInt> out(n, 0);
    for (size_t i = 0; i < c_.size(); ++i) out[n - c_.size() + i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[n - o.c_.size() + i] -= o.c_[i];
    return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<BigInt> out(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(out));
}

Poly Poly::operator*(const BigInt& s) const {
    std::vector<BigInt> out(c_);
    for (auto& v : out) v *= s;
    return Poly(std::move(out));
}

Poly Poly::times_x_power(int j) const {
    if (is_zero()) return Poly();
    std::vector<BigInt> out(c_);
    out.resize(out.size() + static_cast<size_t>(j), 0);
    return Poly(std::move(out));
}

Poly Poly::pow(int e) const {
    Poly acc = Poly::constant(1);
    for (int i = 0; i < e; ++i) acc = acc * (*this);
    return acc;
}

double Poly::eval(double x) const {
    double acc = 0.0;
    for (const auto& v : c_) acc = acc * x + v.get_d();
    return acc;
}

std::string Poly::str() const {
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ' ';
        s += c_[i].get_str();
    }
    return s;
}

CharPoly char_poly_exact(const IntMatrix& m) {
    int n = m.n;
    // Berkowitz iteration: v_r = T_r v_{r-1}, where the Toeplitz column of
    // T_r is [1, -a_rr, -(R C), -(R M C), -(R M^2 C), ...].
    std::vector<BigInt> v{1};
    for (int r = 1; r <= n; ++r) {
        int p = r - 1;  // order of the leading block M
        std::vector<BigInt> col(static_cast<size_t>(r) + 1);
        col[0] = 1;
        col[1] = -big(m.at(p, p));
        if (p > 0) {
            std::vector<BigInt> w(p);  // w = M^j C
            for (int i = 0; i < p; ++i) w[i] = big(m.at(i, p));
            for (int j = 2; j <= r; ++j) {
                BigInt dot = 0;
                for (int i = 0; i < p; ++i) dot += big(m.at(p, i)) * w[i];
                col[static_cast<size_t>(j)] = -dot;
                if (j < r) {
                    std::vector<BigInt> next(p, 0);
                    for (int i = 0; i < p; ++i)
                        for (int t = 0; t < p; ++t) next[i] += big(m.at(i, t)) * w[t];
                    w = std::move(next);
                }
            }
        }
        std::vector<BigInt> out(static_cast<size_t>(r) + 1, 0);
        for (size_t j = 0; j < v.size(); ++j)
            for (size_t i = 0; i + j <= static_cast<size_t>(r); ++i)
                out[i + j] += col[i] * v[j];
        v = std::move(out);
    }
    if (v[0] < 0)
        for (auto& x : v) x = -x;
    return Poly(std::move(v));
}

CharPoly char_poly_exact(const UnifiedMatrix& u) { return char_poly_exact(u.m); }

BigInt determinant(const IntMatrix& m) {
    CharPoly p = char_poly_exact(m);
    BigInt ck = p.coeff_from_top(p.degree());
    return (m.n % 2 == 0) ? ck : -ck;
}

BigInt determinant(const UnifiedMatrix& u) { return determinant(u.m); }

BigMatrix BigMatrix::identity(int order) {
    BigMatrix m(order);
    for (int i = 0; i < order; ++i) m.at(i, i) = 1;
    return m;
}

BigMatrix BigMatrix::from(const IntMatrix& src) {
    BigMatrix m(src.n);
    for (size_t i = 0; i < src.a.size(); ++i) m.a[i] = big(src.a[i]);
    return m;
}

BigMatrix BigMatrix::operator*(const BigMatrix& o) const {
    if (n != o.n) throw std::invalid_argument("BigMatrix: size mismatch");
    BigMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < n; ++t) {
            const BigInt& v = at(i, t);
            if (v == 0) continue;
            for (int j = 0; j < n; ++j) out.at(i, j) += v * o.at(t, j);
        }
    return out;
}

BigMatrix BigMatrix::power(long long e) const {
    if (e < 0) throw std::invalid_argument("BigMatrix: negative power");
    BigMatrix acc = identity(n);
    BigMatrix base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

BigInt BigMatrix::trace() const {
    BigInt t = 0;
    for (int i = 0; i < n; ++i) t += at(i, i);
    return t;
}

}  // namespace uhg

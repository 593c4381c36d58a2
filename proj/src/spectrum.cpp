#include "uhg/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uhg {

namespace {

// Householder reduction of a symmetric matrix (row-major, destroyed) to
// tridiagonal form; d gets the diagonal, e the subdiagonal (e[0] unused).
void tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d,
                    std::vector<double>& e) {
    auto A = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    d.assign(n, 0.0);
    e.assign(n, 0.0);
    for (int i = n - 1; i > 0; --i) {
        int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::fabs(A(i, k));
            if (scale == 0.0) {
                e[i] = A(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    A(i, k) /= scale;
                    h += A(i, k) * A(i, k);
                }
                double f = A(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                A(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += A(j, k) * A(i, k);
                    for (int k = j + 1; k <= l; ++k) g += A(k, j) * A(i, k);
                    e[j] = g / h;
                    f += e[j] * A(i, j);
                }
                double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = A(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k) A(j, k) -= f * e[k] + g * A(i, k);
                }
            }
        } else {
            e[i] = A(i, l);
        }
        d[i] = h;
    }
    for (int i = 0; i < n; ++i) d[i] = A(i, i);
}

// Implicit-shift QL on a tridiagonal matrix; eigenvalues land in d.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, int n) {
    if (n == 0) return;
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= 1e-15 * dd) break;
            }
            if (m != l) {
                if (iter++ == 100)
                    throw std::runtime_error("eigensolver: QL failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

std::vector<double> symmetric_eigenvalues(const std::vector<double>& dense, int n) {
    std::vector<double> a(dense);
    std::vector<double> d, e;
    tridiagonalize(a, n, d, e);
    ql_implicit(d, e, n);
    std::sort(d.begin(), d.end(), std::greater<double>());
    return d;
}

std::vector<double> symmetric_eigenvalues(const IntMatrix& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("eigensolver: matrix not symmetric");
    std::vector<double> a(m.a.size());
    for (size_t i = 0; i < m.a.size(); ++i) a[i] = static_cast<double>(m.a[i]);
    return symmetric_eigenvalues(a, m.n);
}

EigenSystem symmetric_eigensystem(const IntMatrix& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("eigensolver: matrix not symmetric");
    int n = m.n;
    std::vector<double> a(static_cast<size_t>(n) * n);
    for (size_t i = 0; i < a.size(); ++i) a[i] = static_cast<double>(m.a[i]);
    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;
    auto A = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    auto V = [&](int i, int j) -> double& { return v[static_cast<size_t>(i) * n + j]; };

    const double conv = 1e-14 * (static_cast<double>(m.inf_norm()) + 1.0);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += A(p, q) * A(p, q);
        if (off <= conv * conv || n < 2) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = A(p, q);
                if (apq == 0.0) continue;
                double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
                double t = std::copysign(1.0, theta) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int i = 0; i < n; ++i) {
                    double aip = A(i, p), aiq = A(i, q);
                    A(i, p) = c * aip - s * aiq;
                    A(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = A(p, i), aqi = A(q, i);
                    A(p, i) = c * api - s * aqi;
                    A(q, i) = s * api + c * aqi;
                }
                for (int i = 0; i < n; ++i) {
                    double vip = V(i, p), viq = V(i, q);
                    V(i, p) = c * vip - s * viq;
                    V(i, q) = s * vip + c * viq;
                }
            }
        }
    }

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (A(x, x) != A(y, y)) return A(x, x) > A(y, y);
        return x < y;
    });

    EigenSystem out;
    out.values.resize(n);
    out.vectors.assign(n, std::vector<double>(n));
    for (int idx = 0; idx < n; ++idx) {
        int col = order[idx];
        out.values[idx] = A(col, col);
        for (int i = 0; i < n; ++i) out.vectors[idx][i] = V(i, col);
    }
    return out;
}

Spectrum group_values(std::vector<double> values_desc, double tol) {
    Spectrum s;
    s.values = std::move(values_desc);
    s.group_tol = tol;
    size_t i = 0;
    while (i < s.values.size()) {
        size_t j = i + 1;
        while (j < s.values.size() && s.values[j - 1] - s.values[j] <= tol) ++j;
        double sum = 0.0;
        for (size_t t = i; t < j; ++t) sum += s.values[t];
        s.groups.emplace_back(sum / static_cast<double>(j - i), static_cast<int>(j - i));
        i = j;
    }
    return s;
}

Spectrum eigen_spectrum(const UnifiedMatrix& u, double num_tol, double group_scale) {
    std::vector<double> vals = symmetric_eigenvalues(u.m);
    double tol =
        std::max(num_tol, group_scale * std::max(1.0, static_cast<double>(u.m.inf_norm())));
    return group_values(std::move(vals), tol);
}

int Spectrum::multiplicity_of(double value) const {
    for (const auto& [rep, mult] : groups)
        if (std::fabs(rep - value) <= group_tol) return mult;
    return 0;
}

SignCounts sign_counts_numeric(const Spectrum& s) {
    SignCounts c;
    for (const auto& [rep, mult] : s.groups) {
        if (rep > s.group_tol) c.positive += mult;
        else if (rep < -s.group_tol) c.negative += mult;
        else c.zero += mult;
    }
    return c;
}

}  // namespace uhg

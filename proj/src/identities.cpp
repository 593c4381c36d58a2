#include "uhg/identities.hpp"

#include <cmath>
#include <stdexcept>

namespace uhg {

CheckReport check_row_sum_lemma(const Hypergraph& h) {
    CheckReport r;
    r.name = "row_sum_lemma";
    UnifiedMatrix u = build_unified_matrix(h);
    long long degree_total = 0;
    for (int v = 0; v < h.vertex_count(); ++v) {
        long long deg = h.degree(v);
        degree_total += deg;
        int i = u.labels.require_index(Part::single(v));
        long long row = u.m.row_sum(i);
        if (row != deg)
            r.fail("row sum at {" + std::to_string(v) + "} is " + std::to_string(row) +
                   ", degree is " + std::to_string(deg));
    }
    long long size_total = 0;
    for (const auto& e : h.edges()) size_total += static_cast<long long>(e.multiplicity) * e.size();
    if (degree_total != size_total)
        r.fail("sum of degrees " + std::to_string(degree_total) + " != sum of |e| " +
               std::to_string(size_total));
    if (h.is_uniform() && !h.edges().empty()) {
        long long m = h.edges().front().size();
        if (degree_total != m * h.edge_multiset_size())
            r.fail("uniform form: sum of degrees != m * |E(H)|");
    }
    r.note("degree_sum=" + std::to_string(degree_total));
    return r;
}

CheckReport check_trace_square_identity(const Hypergraph& h) {
    CheckReport r;
    r.name = "trace_square_identity";
    UnifiedMatrix u = build_unified_matrix(h);
    long long rhs = 0;
    for (const auto& e : h.edges()) {
        long long m = e.multiplicity;
        if (e.is_loop()) rhs += m * m;
        else rhs += 2 * m * m * two_partition_count(e.size());
    }
    long long tr2 = u.m.trace_square();
    if (tr2 != rhs)
        r.fail("tr(U^2)=" + std::to_string(tr2) + " != " + std::to_string(rhs));

    Spectrum s = eigen_spectrum(u);
    double lambda_sq = 0.0;
    for (double v : s.values) lambda_sq += v * v;
    double tol = 1e-8 * std::max<double>(1.0, static_cast<double>(rhs));
    if (std::fabs(lambda_sq - static_cast<double>(rhs)) > tol)
        r.fail("numeric sum of lambda^2 deviates from " + std::to_string(rhs));

    if (!h.has_multiple_edges()) {
        long long alt = unified_degree_sum(h) - included_edge_count(h);
        if (alt != rhs)
            r.fail("degree-sum form " + std::to_string(alt) + " != " + std::to_string(rhs));
        r.note("degree_sum_form=" + std::to_string(alt));
    }
    r.note("trace_square=" + std::to_string(tr2));
    return r;
}

MinorSumResult two_set_minor_sum(const Hypergraph& h) {
    if (h.has_loops()) throw std::invalid_argument("two_set_minor_sum: loops present");
    MinorSumResult out;
    UnifiedMatrix u = build_unified_matrix(h);
    int k = u.order();
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            // loopless: det U[T|T] = -U_ij^2, so sqrt|det| = U_ij
            long long det = u.at(i, i) * u.at(j, j) - u.at(i, j) * u.at(j, i);
            out.sqrt_abs_minor_sum += static_cast<long long>(std::llround(std::sqrt(
                static_cast<double>(std::llabs(det)))));
            out.signed_minor_sum += det;
        }
    for (const auto& e : h.edges())
        out.tau_weighted_sum += e.multiplicity * two_partition_count(e.size());
    out.equal = out.sqrt_abs_minor_sum == out.tau_weighted_sum;
    if (h.is_simple()) {
        out.simple_form_checked = true;
        for (const auto& e : h.edges()) out.tau_sum += two_partition_count(e.size());
        out.simple_equal = out.signed_minor_sum == -out.tau_sum;
    }
    return out;
}

CheckReport check_unified_equals_associated(const Hypergraph& h) {
    CheckReport r;
    r.name = "unified_equals_associated";
    UnifiedMatrix u = build_unified_matrix(h);
    AssociatedGraph g = associated_graph(h);
    if (g.adjacency.n != u.m.n) {
        r.fail("order mismatch");
        return r;
    }
    for (int i = 0; i < u.m.n; ++i)
        for (int j = 0; j < u.m.n; ++j)
            if (g.adjacency.at(i, j) != u.at(i, j)) {
                r.fail("entry (" + std::to_string(i) + "," + std::to_string(j) + ") differs");
                return r;
            }
    return r;
}

CheckReport check_charpoly_spectrum_consistency(const UnifiedMatrix& u, double num_tol) {
    CheckReport r;
    r.name = "charpoly_spectrum_consistency";
    CharPoly p = char_poly_exact(u);
    Spectrum s = eigen_spectrum(u, num_tol);
    int k = u.order();

    // Newton sums for p = 1, 2, 3
    BigMatrix b = BigMatrix::from(u.m);
    BigMatrix pw = b;
    for (int e = 1; e <= 3; ++e) {
        if (e > 1) pw = pw * b;
        double numeric = 0.0;
        for (double v : s.values) numeric += std::pow(v, e);
        BigInt exact = pw.trace();
        double tol = 1e-7 * (std::fabs(exact.get_d()) + 1.0);
        if (std::fabs(numeric - exact.get_d()) > tol)
            r.fail("Newton sum p=" + std::to_string(e) + " mismatch");
    }

    double norm = std::max(1.0, static_cast<double>(u.m.inf_norm()));
    double guard = k * num_tol * std::pow(norm, k);
    for (double v : s.values) {
        double residual = std::fabs(p.eval(v));
        if (residual > std::max(guard, 1e-6))
            r.fail("charpoly residual " + std::to_string(residual) + " at eigenvalue");
    }
    return r;
}

}  // namespace uhg

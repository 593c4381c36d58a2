#include "uhg/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "uhg/unified_matrix.hpp"

namespace uhg {

namespace {

void check_profile(const PartSizeProfile& p, const char* who) {
    for (int s : p.sizes)
        if (s < 1) throw std::invalid_argument(std::string(who) + ": part size below 1");
}

std::vector<std::vector<int>> profile_blocks(const PartSizeProfile& p) {
    std::vector<std::vector<int>> blocks;
    int next = 0;
    for (int s : p.sizes) {
        std::vector<int> b(s);
        for (int i = 0; i < s; ++i) b[i] = next++;
        blocks.push_back(std::move(b));
    }
    return blocks;
}

std::vector<int> merged(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// count of K_2 components arising between adjacent blocks of sizes a, b
long long straddle_pairs(int a, int b) {
    if (a == 1 || b == 1) return 0;
    long long la = (1LL << a) - 2;  // non-empty proper subsets of the left block
    long long lb = (1LL << b) - 2;
    return la * lb / 2;
}

CharPoly principal_delete_charpoly(const UnifiedMatrix& u, const std::vector<Part>& parts) {
    return char_poly_exact(principal_delete(u, parts));
}

}  // namespace

Hypergraph gen_unified_cycle(const PartSizeProfile& profile) {
    check_profile(profile, "gen_unified_cycle");
    int n = profile.length();
    if (n < 3) throw std::invalid_argument("gen_unified_cycle: length below 3");
    auto blocks = profile_blocks(profile);
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back(merged(blocks[i], blocks[(i + 1) % n]));
    int total = 0;
    for (int s : profile.sizes) total += s;
    return Hypergraph(total, edges);
}

Hypergraph gen_unified_path(const PartSizeProfile& profile) {
    check_profile(profile, "gen_unified_path");
    int m = profile.length();
    if (m < 2) throw std::invalid_argument("gen_unified_path: need at least two parts");
    auto blocks = profile_blocks(profile);
    std::vector<std::vector<int>> edges;
    for (int i = 0; i + 1 < m; ++i) edges.push_back(merged(blocks[i], blocks[i + 1]));
    int total = 0;
    for (int s : profile.sizes) total += s;
    return Hypergraph(total, edges);
}

std::vector<double> ClosedFormSpectrum::full() const {
    std::vector<double> out(trig);
    for (long long i = 0; i < pm_one; ++i) {
        out.push_back(1.0);
        out.push_back(-1.0);
    }
    const double r2 = std::sqrt(2.0);
    for (long long i = 0; i < zero_sqrt2; ++i) {
        out.push_back(0.0);
        out.push_back(r2);
        out.push_back(-r2);
    }
    std::sort(out.begin(), out.end(), std::greater<double>());
    return out;
}

long long ClosedFormSpectrum::total() const {
    return static_cast<long long>(trig.size()) + 2 * pm_one + 3 * zero_sqrt2;
}

ClosedFormSpectrum cycle_spectrum_closed_form(const PartSizeProfile& profile) {
    check_profile(profile, "cycle_spectrum_closed_form");
    int n = profile.length();
    if (n < 3) throw std::invalid_argument("cycle_spectrum_closed_form: length below 3");
    ClosedFormSpectrum out;
    for (int k = 1; k <= n; ++k)
        out.trig.push_back(2.0 * std::cos(2.0 * std::numbers::pi * k / n));
    long long t1 = 0;
    long long tau_sum = 0;
    for (int i = 0; i < n; ++i) {
        int a = profile.sizes[(i + n - 1) % n];
        int b = profile.sizes[i];
        t1 += straddle_pairs(a, b);
        tau_sum += two_partition_count(a + b);
    }
    out.pm_one = t1;
    out.zero_sqrt2 = (tau_sum - n - t1) / 2;
    return out;
}

ClosedFormSpectrum path_spectrum_closed_form(const PartSizeProfile& profile) {
    check_profile(profile, "path_spectrum_closed_form");
    int m = profile.length();
    int n = m - 1;  // number of edges
    if (n < 2)
        throw std::invalid_argument("path_spectrum_closed_form: length below 2");
    ClosedFormSpectrum out;
    for (int k = 1; k <= n + 1; ++k)
        out.trig.push_back(2.0 * std::cos(std::numbers::pi * k / (n + 2)));
    long long t1 = 0;
    long long tau_sum = 0;
    for (int i = 1; i <= n; ++i) {
        t1 += straddle_pairs(profile.sizes[i - 1], profile.sizes[i]);
        tau_sum += two_partition_count(profile.sizes[i - 1] + profile.sizes[i]);
    }
    long long t = t1;
    int s0 = profile.sizes.front(), sn = profile.sizes.back();
    if (s0 > 1) t += (1LL << s0) - 2;
    if (sn > 1) t += (1LL << sn) - 2;
    out.pm_one = t;
    out.zero_sqrt2 = (tau_sum - n - t) / 2;
    return out;
}

ComponentCensus component_census(const Hypergraph& h) {
    AssociatedGraph g = associated_graph(h);
    std::vector<int> comp = component_ids(g);
    int count = 0;
    for (int c : comp) count = std::max(count, c + 1);
    std::vector<int> vertices(count, 0);
    std::vector<long long> edges(count, 0);
    for (int v = 0; v < g.order(); ++v) {
        vertices[comp[v]] += 1;
        for (auto [w, m] : g.neighbors[v])
            if (w > v) edges[comp[v]] += m;
    }
    std::map<std::pair<int, long long>, int> shapes;
    for (int c = 0; c < count; ++c) shapes[{vertices[c], edges[c]}] += 1;
    ComponentCensus out;
    out.total_components = count;
    for (const auto& [shape, num] : shapes) out.shape_counts.emplace_back(shape, num);
    return out;
}

bool is_g_vertex(const Hypergraph& h, int u) {
    h.require_vertex(u);
    for (const auto& e : h.edges())
        if (e.size() > 2 && e.vertices.contains(u)) return false;
    return true;
}

OperationReport pendant_attach(const Hypergraph& h, int u) {
    if (!h.is_simple()) throw std::invalid_argument("pendant_attach: H must be simple");
    h.require_vertex(u);
    OperationReport rep;
    rep.name = "pendant";
    int n = h.vertex_count();
    std::vector<std::vector<int>> edges;
    for (const auto& e : h.edges()) edges.push_back(e.vertices.ids());
    edges.push_back({u, n});
    rep.result = Hypergraph(n + 1, edges);

    UnifiedMatrix uh = build_unified_matrix(h);
    CharPoly ph = char_poly_exact(uh);
    CharPoly pdel = principal_delete_charpoly(uh, {Part::single(u)});
    rep.direct = char_poly_exact(build_unified_matrix(rep.result));
    rep.via_identity = ph.times_x_power(1) - pdel;
    rep.holds = rep.direct == rep.via_identity;

    if (is_g_vertex(h, u)) {
        rep.g_form_applicable = true;
        CharPoly pminus = char_poly_exact(build_unified_matrix(delete_vertices(h, {u})));
        rep.g_form_holds = rep.direct == (ph.times_x_power(1) - pminus);
    }
    return rep;
}

OperationReport coalesce(const Hypergraph& h1, int u, const Hypergraph& h2, int v) {
    if (!h1.is_simple() || !h2.is_simple())
        throw std::invalid_argument("coalesce: hypergraphs must be simple");
    h1.require_vertex(u);
    h2.require_vertex(v);
    OperationReport rep;
    rep.name = "coalesce";

    int n1 = h1.vertex_count();
    int n2 = h2.vertex_count();
    // v maps onto u; the remaining h2 vertices follow h1's block
    auto map2 = [&](int w) {
        if (w == v) return u;
        return n1 + (w < v ? w : w - 1);
    };
    std::vector<std::vector<int>> edges;
    for (const auto& e : h1.edges()) edges.push_back(e.vertices.ids());
    for (const auto& e : h2.edges()) {
        std::vector<int> ids;
        for (int w : e.vertices.ids()) ids.push_back(map2(w));
        edges.push_back(std::move(ids));
    }
    rep.result = Hypergraph(n1 + n2 - 1, edges);

    UnifiedMatrix u1 = build_unified_matrix(h1);
    UnifiedMatrix u2 = build_unified_matrix(h2);
    CharPoly p1 = char_poly_exact(u1);
    CharPoly p2 = char_poly_exact(u2);
    CharPoly p1d = principal_delete_charpoly(u1, {Part::single(u)});
    CharPoly p2d = principal_delete_charpoly(u2, {Part::single(v)});
    rep.direct = char_poly_exact(build_unified_matrix(rep.result));
    rep.via_identity = p1 * p2d + p1d * p2 - (p1d * p2d).times_x_power(1);
    rep.holds = rep.direct == rep.via_identity;

    if (is_g_vertex(h1, u) && is_g_vertex(h2, v)) {
        rep.g_form_applicable = true;
        CharPoly q1 = char_poly_exact(build_unified_matrix(delete_vertices(h1, {u})));
        CharPoly q2 = char_poly_exact(build_unified_matrix(delete_vertices(h2, {v})));
        CharPoly rhs = p1 * q2 + q1 * p2 - (q1 * q2).times_x_power(1);
        rep.g_form_holds = rep.direct == rhs;
    }
    return rep;
}

OperationReport attach_edge(const Hypergraph& h, int u, int v, int s) {
    if (!h.is_simple()) throw std::invalid_argument("attach_edge: H must be simple");
    h.require_vertex(u);
    h.require_vertex(v);
    if (u == v) throw std::invalid_argument("attach_edge: u and v must differ");
    if (s < 1) throw std::invalid_argument("attach_edge: need at least one new vertex");
    OperationReport rep;
    int n = h.vertex_count();
    std::vector<std::vector<int>> edges;
    for (const auto& e : h.edges()) edges.push_back(e.vertices.ids());
    std::vector<int> new_edge{u, v};
    for (int i = 0; i < s; ++i) new_edge.push_back(n + i);
    edges.push_back(new_edge);
    rep.result = Hypergraph(n + s, edges);
    rep.direct = char_poly_exact(build_unified_matrix(rep.result));

    bool case_i = false;
    for (const auto& e : h.edges())
        if (e.size() > 2 && e.vertices.contains(u) && e.vertices.contains(v)) case_i = true;

    UnifiedMatrix uh = build_unified_matrix(h);
    CharPoly ph = char_poly_exact(uh);
    Part pu = Part::single(u);
    Part pv = Part::single(v);
    CharPoly p_u = principal_delete_charpoly(uh, {pu});
    CharPoly p_v = principal_delete_charpoly(uh, {pv});
    CharPoly p_T = principal_delete_charpoly(uh, {pu, pv});

    Poly x2m1 = Poly({BigInt(1), BigInt(0), BigInt(-1)});  // x^2 - 1
    if (case_i) {
        rep.name = "attach_edge_case_i";
        Part puv({u, v});
        CharPoly p_uv = principal_delete_charpoly(uh, {puv});
        CharPoly p_Tp = principal_delete_charpoly(uh, {pu, puv});   // {u}, {u,v}
        CharPoly p_W = principal_delete_charpoly(uh, {pv, puv});    // {v}, {u,v}
        CharPoly p_Z = principal_delete_charpoly(uh, {pu, pv, puv});
        long long alpha1 = (1LL << (s + 1)) - 4;  // 0 when s = 1
        // pendant-edge theorem applied at {u}, {v} and {u,v} in turn
        Poly bracket = ph.times_x_power(3) - p_u.times_x_power(2) - p_v.times_x_power(2) +
                       p_T.times_x_power(1) - p_uv.times_x_power(2) + p_Tp.times_x_power(1) +
                       p_W.times_x_power(1) - p_Z;
        rep.via_identity = x2m1.pow(static_cast<int>(alpha1)) * bracket;
    } else {
        rep.name = "attach_edge_case_ii";
        // alpha2 = 2^(s+1) - 3 for every s >= 1: the 2-partitions of the new
        // edge minus the two pendant partitions at {u} and {v}
        long long alpha2 = (1LL << (s + 1)) - 3;
        Poly bracket =
            ph.times_x_power(2) - p_u.times_x_power(1) - p_v.times_x_power(1) + p_T;
        rep.via_identity = x2m1.pow(static_cast<int>(alpha2)) * bracket;
    }
    rep.holds = rep.direct == rep.via_identity;
    return rep;
}

UnionReport disjoint_union_charpoly(const std::vector<Hypergraph>& hs) {
    UnionReport rep;
    rep.result = disjoint_union(hs);
    rep.product = Poly::constant(1);
    for (const auto& h : hs) rep.product = rep.product * char_poly_exact(build_unified_matrix(h));
    rep.direct = char_poly_exact(build_unified_matrix(rep.result));
    rep.holds = rep.product == rep.direct;
    return rep;
}

}  // namespace uhg

#include "uhg/exact.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "uhg/spectrum.hpp"

namespace uhg {

namespace {

void require_loopless(const Hypergraph& h, const char* who) {
    if (h.has_loops()) throw std::invalid_argument(std::string(who) + ": loops present");
}

}  // namespace

BigInt count_exact_walks(const Hypergraph& h, const Part& from, const Part& to, int len) {
    require_loopless(h, "count_exact_walks");
    if (len < 0) throw std::invalid_argument("count_exact_walks: negative length");
    UnifiedMatrix u = build_unified_matrix(h);
    int i = u.labels.require_index(from);
    int j = u.labels.require_index(to);
    BigMatrix p = BigMatrix::from(u.m).power(len);
    return p.at(i, j);
}

std::optional<BigInt> count_exact_walks_enumerated(const Hypergraph& h, const Part& from,
                                                   const Part& to, int len) {
    require_loopless(h, "count_exact_walks_enumerated");
    AssociatedGraph g = associated_graph(h);
    if (len > 8 || g.order() > 16) return std::nullopt;
    int src = g.parts.require_index(from);
    int dst = g.parts.require_index(to);

    BigInt total = 0;
    // walk = sequence of parts; parallel copies of an edge count separately
    struct Frame {
        int vertex;
        BigInt ways;
        int steps_left;
    };
    std::vector<Frame> stack{{src, BigInt(1), len}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.steps_left == 0) {
            if (f.vertex == dst) total += f.ways;
            continue;
        }
        for (auto [w, m] : g.neighbors[f.vertex])
            stack.push_back({w, f.ways * m, f.steps_left - 1});
    }
    return total;
}

std::optional<int> exact_distance(const Hypergraph& h, int u, int v) {
    h.require_vertex(u);
    h.require_vertex(v);
    if (u == v) return 0;
    require_loopless(h, "exact_distance");
    AssociatedGraph g = associated_graph(h);
    std::optional<int> best;
    for (int s = 0; s < g.order(); ++s) {
        if (!g.parts.at(s).contains(u)) continue;
        std::vector<int> dist = bfs_distances(g, s);
        for (int t = 0; t < g.order(); ++t) {
            if (t == s || dist[t] < 0 || !g.parts.at(t).contains(v)) continue;
            if (!best || dist[t] < *best) best = dist[t];
        }
    }
    return best;
}

std::vector<std::vector<std::optional<int>>> exact_distance_table(const Hypergraph& h) {
    require_loopless(h, "exact_distance_table");
    int n = h.vertex_count();
    std::vector<std::vector<std::optional<int>>> table(
        n, std::vector<std::optional<int>>(n, std::nullopt));
    AssociatedGraph g = associated_graph(h);
    int k = g.order();
    std::vector<std::vector<int>> dist(k);
    for (int s = 0; s < k; ++s) dist[s] = bfs_distances(g, s);
    for (int u = 0; u < n; ++u) table[u][u] = 0;
    for (int s = 0; s < k; ++s)
        for (int t = 0; t < k; ++t) {
            if (s == t || dist[s][t] < 0) continue;
            for (int u : g.parts.at(s).ids())
                for (int v : g.parts.at(t).ids()) {
                    if (u == v) continue;
                    if (!table[u][v] || dist[s][t] < *table[u][v]) table[u][v] = dist[s][t];
                }
        }
    return table;
}

bool is_exactly_connected(const Hypergraph& h) {
    auto table = exact_distance_table(h);
    int n = h.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (!table[u][v]) return false;
    return true;
}

int exact_diameter(const Hypergraph& h) {
    auto table = exact_distance_table(h);
    int n = h.vertex_count();
    int best = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (!table[u][v])
                throw std::invalid_argument("exact_diameter: H is not exactly connected");
            best = std::max(best, *table[u][v]);
        }
    return best;
}

namespace {

// Cycles of the underlying simple graph with min vertex first; reflections
// deduplicated by requiring second < last.
void cycle_dfs(const AssociatedGraph& g, int start, std::vector<int>& path,
               std::vector<bool>& on_path, int max_len, long long& steps, long long budget,
               std::vector<ExactCycle>& out) {
    if (++steps > budget) throw budget_error("cycle enumeration budget exceeded");
    int v = path.back();
    for (auto [w, m] : g.neighbors[v]) {
        if (w == start && path.size() >= 3) {
            if (path[1] < path.back()) {
                ExactCycle c;
                c.part_indices = path;
                for (size_t i = 0; i < path.size(); ++i) {
                    int a = path[i];
                    int b = path[(i + 1) % path.size()];
                    c.weight *= g.adjacency.at(a, b);
                }
                out.push_back(std::move(c));
            }
            continue;
        }
        if (w <= start || on_path[w]) continue;
        if (max_len > 0 && static_cast<int>(path.size()) >= max_len) continue;
        path.push_back(w);
        on_path[w] = true;
        cycle_dfs(g, start, path, on_path, max_len, steps, budget, out);
        on_path[w] = false;
        path.pop_back();
    }
}

}  // namespace

std::vector<ExactCycle> enumerate_exact_cycles(const Hypergraph& h, int max_len,
                                               long long budget) {
    require_loopless(h, "enumerate_exact_cycles");
    AssociatedGraph g = associated_graph(h);
    std::vector<ExactCycle> out;
    long long steps = 0;
    for (int s = 0; s < g.order(); ++s) {
        std::vector<int> path{s};
        std::vector<bool> on_path(g.order(), false);
        on_path[s] = true;
        cycle_dfs(g, s, path, on_path, max_len, steps, budget, out);
    }
    std::sort(out.begin(), out.end(), [](const ExactCycle& a, const ExactCycle& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.part_indices < b.part_indices;
    });
    return out;
}

std::optional<int> exact_girth(const Hypergraph& h) {
    require_loopless(h, "exact_girth");
    AssociatedGraph g = associated_graph(h);
    // shortest cycle of the underlying simple graph: delete each edge, BFS
    std::optional<int> best;
    for (int u = 0; u < g.order(); ++u) {
        for (auto [v, m] : g.neighbors[u]) {
            if (v < u) continue;
            // BFS from u to v avoiding the edge (u,v)
            std::vector<int> dist(g.order(), -1);
            std::deque<int> q{u};
            dist[u] = 0;
            while (!q.empty()) {
                int x = q.front();
                q.pop_front();
                for (auto [y, mm] : g.neighbors[x]) {
                    if ((x == u && y == v) || (x == v && y == u)) continue;
                    if (dist[y] < 0) {
                        dist[y] = dist[x] + 1;
                        q.push_back(y);
                    }
                }
            }
            if (dist[v] >= 0 && dist[v] + 1 >= 3) {
                int len = dist[v] + 1;
                if (!best || len < *best) best = len;
            }
        }
    }
    return best;
}

std::optional<int> odd_exact_girth(const Hypergraph& h) {
    require_loopless(h, "odd_exact_girth");
    AssociatedGraph g = associated_graph(h);
    // shortest odd closed walk via BFS on the bipartite double cover
    std::optional<int> best;
    int k = g.order();
    for (int s = 0; s < k; ++s) {
        std::vector<std::array<int, 2>> dist(k, {-1, -1});
        std::deque<std::pair<int, int>> q;
        dist[s][0] = 0;
        q.emplace_back(s, 0);
        while (!q.empty()) {
            auto [v, side] = q.front();
            q.pop_front();
            for (auto [w, m] : g.neighbors[v]) {
                if (dist[w][1 - side] < 0) {
                    dist[w][1 - side] = dist[v][side] + 1;
                    q.emplace_back(w, 1 - side);
                }
            }
        }
        if (dist[s][1] >= 0 && (!best || dist[s][1] < *best)) best = dist[s][1];
    }
    return best;
}

long long e_triangle_count(const Hypergraph& h, long long budget) {
    long long total = 0;
    for (const auto& c : enumerate_exact_cycles(h, 3, budget))
        if (c.length() == 3) total += c.weight;
    return total;
}

CheckReport check_c2_c3(const Hypergraph& h) {
    if (!h.is_simple()) throw std::invalid_argument("check_c2_c3: H must be simple");
    CheckReport r;
    r.name = "c2_c3";
    UnifiedMatrix u = build_unified_matrix(h);
    CharPoly p = char_poly_exact(u);
    BigInt c2 = (p.degree() >= 2) ? p.coeff_from_top(2) : BigInt(0);

    long long minor2 = 0;
    for (int i = 0; i < u.order(); ++i)
        for (int j = i + 1; j < u.order(); ++j)
            minor2 += u.at(i, i) * u.at(j, j) - u.at(i, j) * u.at(j, i);
    long long rhs2 = (included_edge_count(h) - unified_degree_sum(h)) / 2;
    if (c2 != big(minor2)) r.fail("c_2 != sum of 2x2 principal minors");
    if (c2 != big(rhs2)) r.fail("c_2=" + c2.get_str() + " != (partial - degree sum)/2 = " +
                           std::to_string(rhs2));

    BigInt c3 = (p.degree() >= 3) ? p.coeff_from_top(3) : BigInt(0);
    long long t = e_triangle_count(h);
    if (-c3 != big(2 * t))
        r.fail("-c_3=" + BigInt(-c3).get_str() + " != 2t with t=" + std::to_string(t));
    r.note("c2=" + c2.get_str());
    r.note("triangles=" + std::to_string(t));
    return r;
}

OddCycleFreeReport odd_cycle_free_characterization(const Hypergraph& h) {
    if (!h.is_simple())
        throw std::invalid_argument("odd_cycle_free_characterization: H must be simple");
    OddCycleFreeReport out;
    out.no_odd_exact_cycle = !odd_exact_girth(h).has_value();

    UnifiedMatrix u = build_unified_matrix(h);
    CharPoly p = char_poly_exact(u);
    out.odd_coeffs_vanish = true;
    for (int i = 1; i <= p.degree(); i += 2)
        if (p.coeff_from_top(i) != 0) out.odd_coeffs_vanish = false;

    Spectrum s = eigen_spectrum(u);
    out.spectrum_symmetric = true;
    for (const auto& [rep, mult] : s.groups) {
        bool found = false;
        for (const auto& [rep2, mult2] : s.groups)
            if (std::fabs(rep2 + rep) <= 2 * s.group_tol && mult2 == mult) found = true;
        if (!found) out.spectrum_symmetric = false;
    }
    out.equivalent = (out.no_odd_exact_cycle == out.odd_coeffs_vanish) &&
                     (out.odd_coeffs_vanish == out.spectrum_symmetric);
    return out;
}

DiameterBoundsReport diameter_eigen_bounds(const Hypergraph& h) {
    DiameterBoundsReport out;
    out.exact_diameter = exact_diameter(h);

    UnifiedMatrix u = build_unified_matrix(h);
    Spectrum s = eigen_spectrum(u);
    out.distinct_eigenvalues = s.distinct_count();
    out.count_bound_holds = out.exact_diameter <= out.distinct_eigenvalues - 1;

    AssociatedGraph g = associated_graph(h);
    auto comp = component_ids(g);
    bool connected = true;
    for (int c : comp)
        if (c != 0) { connected = false; break; }
    if (!connected) {
        out.log_bound_note = "inapplicable: associated graph disconnected";
        return out;
    }

    EigenSystem es = symmetric_eigensystem(u.m);
    int k = u.order();
    if (k < 2) {
        out.log_bound_note = "inapplicable: order < 2";
        return out;
    }
    // order by |lambda|
    std::vector<int> by_abs(k);
    for (int i = 0; i < k; ++i) by_abs[i] = i;
    std::sort(by_abs.begin(), by_abs.end(), [&](int a, int b) {
        return std::fabs(es.values[a]) > std::fabs(es.values[b]);
    });
    double l1 = std::fabs(es.values[by_abs[0]]);
    double l2 = std::fabs(es.values[by_abs[1]]);
    double tol = s.group_tol;
    if (l1 - l2 <= tol) {
        out.log_bound_note = "inapplicable: |lambda_1| not simple";
        return out;
    }
    if (l2 <= tol) {
        out.log_bound_note = "inapplicable: |lambda_2| = 0";
        return out;
    }
    std::vector<double> vec = es.vectors[by_abs[0]];
    double mx = 0.0;
    for (double x : vec)
        if (std::fabs(x) > std::fabs(mx)) mx = x;
    if (mx < 0)
        for (double& x : vec) x = -x;
    double omega = vec[0];
    for (double x : vec) omega = std::min(omega, x);
    if (omega <= tol) {
        out.log_bound_note = "inapplicable: eigenvector not strictly positive";
        return out;
    }
    out.log_bound_applicable = true;
    double val = std::log((1.0 - omega * omega) / (omega * omega)) / std::log(l1 / l2);
    out.log_bound_value = static_cast<long long>(std::ceil(val));
    out.log_bound_holds = out.exact_diameter <= out.log_bound_value;
    out.log_bound_note = "omega=" + std::to_string(omega);
    return out;
}

}  // namespace uhg

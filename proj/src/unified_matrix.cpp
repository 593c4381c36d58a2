#include "uhg/unified_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>

namespace uhg {

bool IntMatrix::is_symmetric() const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

long long IntMatrix::trace() const {
    long long t = 0;
    for (int i = 0; i < n; ++i) t += at(i, i);
    return t;
}

long long IntMatrix::trace_square() const {
    long long t = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t += at(i, j) * at(j, i);
    return t;
}

long long IntMatrix::inf_norm() const {
    long long best = 0;
    for (int i = 0; i < n; ++i) {
        long long s = 0;
        for (int j = 0; j < n; ++j) s += std::llabs(at(i, j));
        best = std::max(best, s);
    }
    return best;
}

long long IntMatrix::row_sum(int i) const {
    long long s = 0;
    for (int j = 0; j < n; ++j) s += at(i, j);
    return s;
}

UnifiedMatrix build_unified_matrix(const Hypergraph& h) {
    UnifiedMatrix u;
    u.labels = edge_index(h);
    int k = u.labels.size();
    u.m = IntMatrix(k);
    for (const auto& e : h.edges()) {
        if (e.is_loop()) {
            // only loops populate the diagonal
            int i = u.labels.require_index(e.vertices);
            u.m.at(i, i) = e.multiplicity;
            continue;
        }
        for (const auto& [s, t] : two_partitions(e.vertices)) {
            int i = u.labels.require_index(s);
            int j = u.labels.require_index(t);
            u.m.at(i, j) = e.multiplicity;
            u.m.at(j, i) = e.multiplicity;
        }
    }
    return u;
}

LabeledSubmatrix submatrix_delete(const UnifiedMatrix& u, const std::vector<Part>& rows,
                                  const std::vector<Part>& cols) {
    std::vector<bool> drop_row(u.order(), false), drop_col(u.order(), false);
    for (const auto& p : rows) drop_row[u.labels.require_index(p)] = true;
    for (const auto& p : cols) drop_col[u.labels.require_index(p)] = true;

    LabeledSubmatrix out;
    std::vector<int> ri, ci;
    for (int i = 0; i < u.order(); ++i) {
        if (!drop_row[i]) { ri.push_back(i); out.row_labels.push_back(u.labels.at(i)); }
        if (!drop_col[i]) { ci.push_back(i); out.col_labels.push_back(u.labels.at(i)); }
    }
    out.a.reserve(ri.size() * ci.size());
    for (int i : ri)
        for (int j : ci) out.a.push_back(u.at(i, j));
    return out;
}

UnifiedMatrix principal_delete(const UnifiedMatrix& u, const std::vector<Part>& parts) {
    LabeledSubmatrix s = submatrix_delete(u, parts, parts);
    UnifiedMatrix out;
    out.labels = EdgeIndexSet(s.row_labels);
    out.m = IntMatrix(static_cast<int>(s.row_labels.size()));
    out.m.a = std::move(s.a);
    return out;
}

long long AssociatedGraph::weighted_edge_count() const {
    long long total = 0;
    for (int i = 0; i < order(); ++i)
        for (auto [j, w] : neighbors[i])
            if (j > i) total += w;
    return total;
}

AssociatedGraph associated_graph(const Hypergraph& h) {
    if (h.has_loops())
        throw std::invalid_argument("associated graph defined only for loopless H");
    AssociatedGraph g;
    UnifiedMatrix u = build_unified_matrix(h);
    g.parts = std::move(u.labels);
    g.adjacency = std::move(u.m);
    g.neighbors.resize(g.adjacency.n);
    for (int i = 0; i < g.adjacency.n; ++i)
        for (int j = 0; j < g.adjacency.n; ++j)
            if (g.adjacency.at(i, j) != 0)
                g.neighbors[i].emplace_back(j, static_cast<int>(g.adjacency.at(i, j)));
    return g;
}

std::vector<int> bfs_distances(const AssociatedGraph& g, int src) {
    std::vector<int> dist(g.order(), -1);
    std::deque<int> q;
    dist[src] = 0;
    q.push_back(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (auto [w, m] : g.neighbors[v]) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<int> component_ids(const AssociatedGraph& g) {
    std::vector<int> comp(g.order(), -1);
    int next = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (auto [w, m] : g.neighbors[v]) {
                if (comp[w] < 0) {
                    comp[w] = next;
                    q.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

bool is_bipartite(const AssociatedGraph& g) {
    std::vector<int> side(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (auto [w, m] : g.neighbors[v]) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    q.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace uhg

#ifndef UHG_UNIFIED_MATRIX_HPP
#define UHG_UNIFIED_MATRIX_HPP

#include <utility>
#include <vector>

#include "uhg/hypergraph.hpp"

namespace uhg {

/// Dense square integer matrix, row-major.
struct IntMatrix {
    int n = 0;
    std::vector<long long> a;

    IntMatrix() = default;
    explicit IntMatrix(int order) : n(order), a(static_cast<size_t>(order) * order, 0) {}

    long long& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    long long at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    bool is_symmetric() const;
    long long trace() const;
    long long trace_square() const;  // tr(M^2) for symmetric M
    long long inf_norm() const;      // max absolute row sum
    long long row_sum(int i) const;
};

/// U(H): symmetric integer matrix indexed by the canonical I(H).
struct UnifiedMatrix {
    EdgeIndexSet labels;
    IntMatrix m;

    int order() const { return m.n; }
    long long at(int i, int j) const { return m.at(i, j); }
};

UnifiedMatrix build_unified_matrix(const Hypergraph& h);

/// Rectangular label-carrying submatrix produced by row/column deletion.
struct LabeledSubmatrix {
    std::vector<Part> row_labels;
    std::vector<Part> col_labels;
    std::vector<long long> a;  // row-major

    long long at(int i, int j) const {
        return a[static_cast<size_t>(i) * col_labels.size() + j];
    }
};

/// M(S|T): deletes the listed rows and columns. Labels are retained.
LabeledSubmatrix submatrix_delete(const UnifiedMatrix& u, const std::vector<Part>& rows,
                                  const std::vector<Part>& cols);

/// Principal deletion; result keeps the unified-matrix shape.
UnifiedMatrix principal_delete(const UnifiedMatrix& u, const std::vector<Part>& parts);

/// Loopless graph on I(H) with c parallel edges between the parts of a
/// multiplicity-c edge; its adjacency matrix equals U(H) entrywise.
struct AssociatedGraph {
    EdgeIndexSet parts;
    IntMatrix adjacency;
    std::vector<std::vector<std::pair<int, int>>> neighbors;  // (part index, multiplicity)

    int order() const { return adjacency.n; }
    long long weighted_edge_count() const;
    int simple_degree(int v) const { return static_cast<int>(neighbors[v].size()); }
};

AssociatedGraph associated_graph(const Hypergraph& h);

/// BFS distances in G from src; -1 where unreachable.
std::vector<int> bfs_distances(const AssociatedGraph& g, int src);

/// Connected component id per vertex, components numbered by smallest vertex.
std::vector<int> component_ids(const AssociatedGraph& g);

bool is_bipartite(const AssociatedGraph& g);

}  // namespace uhg

#endif

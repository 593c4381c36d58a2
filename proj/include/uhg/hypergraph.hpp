#ifndef UHG_HYPERGRAPH_HPP
#define UHG_HYPERGRAPH_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "uhg/part.hpp"

namespace uhg {

/// An edge is a vertex set with a positive multiplicity. Cardinality 1 = loop.
struct Edge {
    Part vertices;
    int multiplicity = 1;

    int size() const { return vertices.size(); }
    bool is_loop() const { return vertices.size() == 1; }
};

inline constexpr int kDefaultRankLimit = 20;

/// Finite hypergraph on vertices 0..n-1. The edge multiset is normalized to
/// (set, multiplicity) pairs sorted in the canonical Part order; immutable
/// after construction.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Each entry is one edge occurrence; repeated sets accumulate multiplicity.
    Hypergraph(int n, const std::vector<std::vector<int>>& edge_lists,
               int rank_limit = kDefaultRankLimit);

    /// Edges given directly as (vertex set, multiplicity) pairs.
    static Hypergraph from_weighted(int n,
                                    const std::vector<std::pair<std::vector<int>, int>>& edges,
                                    int rank_limit = kDefaultRankLimit);

    int vertex_count() const { return n_; }

    /// E*(H): the distinct underlying sets, each with its multiplicity.
    const std::vector<Edge>& edges() const { return edges_; }

    /// |E(H)| as a multiset.
    long long edge_multiset_size() const;

    /// Multiplicity of the given set as an edge; 0 if absent.
    int multiplicity(const Part& s) const;
    bool has_edge(const Part& s) const { return multiplicity(s) > 0; }

    int rank() const;
    bool has_loops() const;
    bool has_multiple_edges() const;
    bool is_loopless() const { return !has_loops(); }
    bool is_simple() const { return !has_loops() && !has_multiple_edges(); }
    bool is_uniform() const;

    /// Multiplicity-weighted number of edges containing v.
    long long degree(int v) const;
    long long min_degree() const;
    long long max_degree() const;

    void require_vertex(int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

/// tau(e): all unordered 2-partitions {S, e\S}. Empty for loops.
std::vector<std::pair<Part, Part>> two_partitions(const Part& e);

/// |tau(e)| = 2^(|e|-1) - 1 for |e| >= 2; 0 for loops.
long long two_partition_count(int cardinality);

/// Canonically ordered I(H): every singleton of V(H) plus every part of
/// every edge of cardinality >= 2.
class EdgeIndexSet {
public:
    EdgeIndexSet() = default;
    explicit EdgeIndexSet(std::vector<Part> sorted_parts);

    int size() const { return static_cast<int>(parts_.size()); }
    const Part& at(int i) const { return parts_[i]; }
    const std::vector<Part>& parts() const { return parts_; }
    std::optional<int> index_of(const Part& s) const;
    int require_index(const Part& s) const;

private:
    std::vector<Part> parts_;
};

EdgeIndexSet edge_index(const Hypergraph& h);

/// Multiplicity-weighted number of edges containing S. S must be in I(H).
long long unified_degree(const Hypergraph& h, const Part& s);

/// delta*(H) = min unified degree over I(H).
long long min_unified_degree(const Hypergraph& h);

/// Sum of d_H(S) over all S in I(H).
long long unified_degree_sum(const Hypergraph& h);

/// d(H) bar = unified_degree_sum / k.
double average_unified_degree(const Hypergraph& h);

/// partial(H): multiplicity-weighted count of edges of cardinality >= 2
/// strictly contained in another edge.
long long included_edge_count(const Hypergraph& h);

/// True if some edge is strictly contained in another (any cardinality).
bool has_included_edge(const Hypergraph& h);

/// Edges fully inside W, vertices relabeled order-preserving to 0..|W|-1.
Hypergraph induced_subhypergraph(const Hypergraph& h, const std::vector<int>& w);

/// Removes the vertices of T and every edge meeting T; same as the induced
/// subhypergraph on V minus T.
Hypergraph delete_vertices(const Hypergraph& h, const std::vector<int>& t);

/// Vertex sets laid out consecutively, edge lists concatenated.
Hypergraph disjoint_union(const std::vector<Hypergraph>& hs);

/// Spanning subgraph made of all cardinality-2 edges of H on V(H).
Hypergraph spanning_two_edge_subgraph(const Hypergraph& h);

}  // namespace uhg

#endif

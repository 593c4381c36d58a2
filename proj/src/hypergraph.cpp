#include "uhg/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace uhg {

namespace {

std::vector<Edge> normalize_edges(int n, std::vector<std::pair<Part, int>> raw,
                                  int rank_limit) {
    std::map<Part, int> acc;
    for (auto& [p, m] : raw) {
        if (m <= 0) throw std::invalid_argument("Hypergraph: multiplicity must be positive");
        if (p.size() > rank_limit)
            throw std::invalid_argument("Hypergraph: edge cardinality " +
                                        std::to_string(p.size()) + " exceeds rank limit " +
                                        std::to_string(rank_limit));
        if (p.max_id() >= n)
            throw std::invalid_argument("Hypergraph: edge vertex " + std::to_string(p.max_id()) +
                                        " out of range (n=" + std::to_string(n) + ")");
        acc[p] += m;
    }
    std::vector<Edge> out;
    out.reserve(acc.size());
    for (auto& [p, m] : acc) out.push_back(Edge{p, m});
    return out;
}

}  // namespace

Hypergraph::Hypergraph(int n, const std::vector<std::vector<int>>& edge_lists, int rank_limit)
    : n_(n) {
    if (n < 0) throw std::invalid_argument("Hypergraph: negative vertex count");
    std::vector<std::pair<Part, int>> raw;
    raw.reserve(edge_lists.size());
    for (const auto& ids : edge_lists) raw.emplace_back(Part(ids), 1);
    edges_ = normalize_edges(n, std::move(raw), rank_limit);
}

Hypergraph Hypergraph::from_weighted(int n,
                                     const std::vector<std::pair<std::vector<int>, int>>& edges,
                                     int rank_limit) {
    Hypergraph h;
    if (n < 0) throw std::invalid_argument("Hypergraph: negative vertex count");
    h.n_ = n;
    std::vector<std::pair<Part, int>> raw;
    raw.reserve(edges.size());
    for (const auto& [ids, m] : edges) raw.emplace_back(Part(ids), m);
    h.edges_ = normalize_edges(n, std::move(raw), rank_limit);
    return h;
}

long long Hypergraph::edge_multiset_size() const {
    long long total = 0;
    for (const auto& e : edges_) total += e.multiplicity;
    return total;
}

int Hypergraph::multiplicity(const Part& s) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), s,
                               [](const Edge& e, const Part& p) { return e.vertices < p; });
    if (it != edges_.end() && it->vertices == s) return it->multiplicity;
    return 0;
}

int Hypergraph::rank() const {
    int r = 0;
    for (const auto& e : edges_) r = std::max(r, e.size());
    return r;
}

bool Hypergraph::has_loops() const {
    for (const auto& e : edges_)
        if (e.is_loop()) return true;
    return false;
}

bool Hypergraph::has_multiple_edges() const {
    for (const auto& e : edges_)
        if (e.multiplicity >= 2) return true;
    return false;
}

bool Hypergraph::is_uniform() const {
    for (const auto& e : edges_)
        if (e.size() != edges_.front().size()) return false;
    return true;
}

long long Hypergraph::degree(int v) const {
    require_vertex(v);
    long long d = 0;
    for (const auto& e : edges_)
        if (e.vertices.contains(v)) d += e.multiplicity;
    return d;
}

long long Hypergraph::min_degree() const {
    long long d = 0;
    for (int v = 0; v < n_; ++v) d = (v == 0) ? degree(v) : std::min(d, degree(v));
    return d;
}

long long Hypergraph::max_degree() const {
    long long d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

void Hypergraph::require_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("unknown vertex " + std::to_string(v));
}

std::vector<std::pair<Part, Part>> two_partitions(const Part& e) {
    std::vector<std::pair<Part, Part>> out;
    int c = e.size();
    if (c < 2) return out;
    const auto& ids = e.ids();
    // masks with bit 0 set enumerate each unordered pair once
    unsigned full = (1u << c) - 1;
    for (unsigned mask = 1; mask < full; mask += 2) {
        std::vector<int> a, b;
        for (int i = 0; i < c; ++i) ((mask >> i) & 1u ? a : b).push_back(ids[i]);
        out.emplace_back(Part(std::move(a)), Part(std::move(b)));
    }
    return out;
}

long long two_partition_count(int cardinality) {
    if (cardinality < 2) return 0;
    return (1LL << (cardinality - 1)) - 1;
}

EdgeIndexSet::EdgeIndexSet(std::vector<Part> sorted_parts) : parts_(std::move(sorted_parts)) {}

std::optional<int> EdgeIndexSet::index_of(const Part& s) const {
    auto it = std::lower_bound(parts_.begin(), parts_.end(), s);
    if (it != parts_.end() && *it == s) return static_cast<int>(it - parts_.begin());
    return std::nullopt;
}

int EdgeIndexSet::require_index(const Part& s) const {
    auto idx = index_of(s);
    if (!idx) throw std::invalid_argument("part " + s.str() + " not in I(H)");
    return *idx;
}

EdgeIndexSet edge_index(const Hypergraph& h) {
    std::set<Part> parts;
    for (int v = 0; v < h.vertex_count(); ++v) parts.insert(Part::single(v));
    for (const auto& e : h.edges()) {
        int c = e.size();
        if (c < 2) continue;
        const auto& ids = e.vertices.ids();
        unsigned full = (1u << c) - 1;
        // every non-empty proper subset of e is a part of some 2-partition
        for (unsigned mask = 1; mask < full; ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < c; ++i)
                if ((mask >> i) & 1u) sub.push_back(ids[i]);
            parts.insert(Part(std::move(sub)));
        }
    }
    return EdgeIndexSet(std::vector<Part>(parts.begin(), parts.end()));
}

long long unified_degree(const Hypergraph& h, const Part& s) {
    bool in_index = s.size() == 1 && s.max_id() < h.vertex_count();
    if (!in_index) {
        for (const auto& e : h.edges())
            if (s.proper_subset_of(e.vertices)) { in_index = true; break; }
    }
    if (!in_index) throw std::invalid_argument("part " + s.str() + " not in I(H)");
    long long d = 0;
    for (const auto& e : h.edges())
        if (s.subset_of(e.vertices)) d += e.multiplicity;
    return d;
}

long long min_unified_degree(const Hypergraph& h) {
    EdgeIndexSet idx = edge_index(h);
    if (idx.size() == 0) throw std::invalid_argument("min_unified_degree: empty I(H)");
    long long best = -1;
    for (const auto& s : idx.parts()) {
        long long d = unified_degree(h, s);
        if (best < 0 || d < best) best = d;
    }
    return best;
}

long long unified_degree_sum(const Hypergraph& h) {
    long long total = 0;
    EdgeIndexSet idx = edge_index(h);
    for (const auto& s : idx.parts()) total += unified_degree(h, s);
    return total;
}

double average_unified_degree(const Hypergraph& h) {
    EdgeIndexSet idx = edge_index(h);
    if (idx.size() == 0) throw std::invalid_argument("average_unified_degree: empty I(H)");
    return static_cast<double>(unified_degree_sum(h)) / idx.size();
}

long long included_edge_count(const Hypergraph& h) {
    long long total = 0;
    for (const auto& e : h.edges()) {
        if (e.size() < 2) continue;
        for (const auto& f : h.edges()) {
            if (e.vertices.proper_subset_of(f.vertices)) {
                total += e.multiplicity;
                break;
            }
        }
    }
    return total;
}

bool has_included_edge(const Hypergraph& h) {
    for (const auto& e : h.edges())
        for (const auto& f : h.edges())
            if (e.vertices.proper_subset_of(f.vertices)) return true;
    return false;
}

Hypergraph induced_subhypergraph(const Hypergraph& h, const std::vector<int>& w) {
    std::vector<int> keep(w);
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (int v : keep) h.require_vertex(v);
    std::vector<int> relabel(h.vertex_count(), -1);
    for (size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = static_cast<int>(i);

    std::vector<std::pair<std::vector<int>, int>> edges;
    for (const auto& e : h.edges()) {
        std::vector<int> ids;
        bool inside = true;
        for (int v : e.vertices.ids()) {
            if (relabel[v] < 0) { inside = false; break; }
            ids.push_back(relabel[v]);
        }
        if (inside) edges.emplace_back(std::move(ids), e.multiplicity);
    }
    return Hypergraph::from_weighted(static_cast<int>(keep.size()), edges);
}

Hypergraph delete_vertices(const Hypergraph& h, const std::vector<int>& t) {
    std::vector<bool> drop(h.vertex_count(), false);
    for (int v : t) {
        h.require_vertex(v);
        drop[v] = true;
    }
    std::vector<int> keep;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (!drop[v]) keep.push_back(v);
    return induced_subhypergraph(h, keep);
}

Hypergraph disjoint_union(const std::vector<Hypergraph>& hs) {
    int n = 0;
    std::vector<std::pair<std::vector<int>, int>> edges;
    for (const auto& h : hs) {
        for (const auto& e : h.edges()) {
            std::vector<int> ids;
            for (int v : e.vertices.ids()) ids.push_back(v + n);
            edges.emplace_back(std::move(ids), e.multiplicity);
        }
        n += h.vertex_count();
    }
    return Hypergraph::from_weighted(n, edges);
}

Hypergraph spanning_two_edge_subgraph(const Hypergraph& h) {
    std::vector<std::pair<std::vector<int>, int>> edges;
    for (const auto& e : h.edges())
        if (e.size() == 2) edges.emplace_back(e.vertices.ids(), e.multiplicity);
    return Hypergraph::from_weighted(h.vertex_count(), edges);
}

}  // namespace uhg

#ifndef UHG_CONSTRUCTIONS_HPP
#define UHG_CONSTRUCTIONS_HPP

#include <string>
#include <vector>

#include "uhg/charpoly.hpp"
#include "uhg/hypergraph.hpp"
#include "uhg/spectrum.hpp"

namespace uhg {

/// Part sizes along a unified path or cycle (cyclic for cycles).
struct PartSizeProfile {
    std::vector<int> sizes;

    int length() const { return static_cast<int>(sizes.size()); }
};

/// Unified cycle of length n >= 3: pairwise-disjoint fresh vertex blocks
/// S_0..S_{n-1}, edges e_i = S_{i-1} (union) S_i taken cyclically.
Hypergraph gen_unified_cycle(const PartSizeProfile& profile);

/// Unified path on blocks S_0..S_n, edges e_i = S_{i-1} (union) S_i.
Hypergraph gen_unified_path(const PartSizeProfile& profile);

/// Spectrum known in closed form: a trigonometric family plus +-1 and
/// {0, +-sqrt 2} families with stated multiplicities.
struct ClosedFormSpectrum {
    std::vector<double> trig;       // one entry per claimed eigenvalue
    long long pm_one = 0;           // multiplicity of each of +1, -1
    long long zero_sqrt2 = 0;       // multiplicity of each of 0, +sqrt2, -sqrt2

    std::vector<double> full() const;  // complete multiset, descending
    long long total() const;
};

ClosedFormSpectrum cycle_spectrum_closed_form(const PartSizeProfile& profile);
ClosedFormSpectrum path_spectrum_closed_form(const PartSizeProfile& profile);

/// Component census of an associated graph: (vertex count, edge count) -> n.
struct ComponentCensus {
    std::vector<std::pair<std::pair<int, long long>, int>> shape_counts;  // sorted
    int total_components = 0;
};
ComponentCensus component_census(const Hypergraph& h);

/// Outcome of one charpoly-identity operation.
struct OperationReport {
    std::string name;
    Hypergraph result;
    CharPoly direct;       // charpoly of the constructed hypergraph
    CharPoly via_identity; // right-hand side of the identity
    bool holds = false;
    bool g_form_applicable = false;
    bool g_form_holds = true;
};

/// New vertex joined to u by a 2-edge; checks
/// P(H_uv) = x P(H) - P(U(H)({u}|{u})), and the H\{u} form at a g-vertex.
OperationReport pendant_attach(const Hypergraph& h, int u);

/// True if u lies in no edge of cardinality > 2.
bool is_g_vertex(const Hypergraph& h, int u);

/// Identify u in h1 with v in h2 (h2 relabeled onto fresh ids).
OperationReport coalesce(const Hypergraph& h1, int u, const Hypergraph& h2, int v);

/// Add s fresh vertices S and the edge S + {u,v}; checks the case (i) or
/// case (ii) identity with the (x^2-1)^alpha factor.
OperationReport attach_edge(const Hypergraph& h, int u, int v, int s);

/// Charpoly of a disjoint union as the product of the factors' charpolys.
struct UnionReport {
    Hypergraph result;
    CharPoly product;
    CharPoly direct;
    bool holds = false;
};
UnionReport disjoint_union_charpoly(const std::vector<Hypergraph>& hs);

}  // namespace uhg

#endif

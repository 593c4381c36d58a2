#ifndef UHG_TESTS_FIXTURES_HPP
#define UHG_TESTS_FIXTURES_HPP

#include <vector>

#include "uhg/hypergraph.hpp"

namespace uhg::fixtures {

// Six vertices, edges {0}, 2x{0,1,2}, {0,1,3}, {2,3}, {3,4,5}, {4,5}.
// The loop sits inside a 3-edge and {4,5} sits inside {3,4,5}.
inline Hypergraph example1() {
    return Hypergraph(6, {{0}, {0, 1, 2}, {0, 1, 2}, {0, 1, 3}, {2, 3}, {3, 4, 5}, {4, 5}});
}

inline Hypergraph example1_no_loop() {
    return Hypergraph(6, {{0, 1, 2}, {0, 1, 2}, {0, 1, 3}, {2, 3}, {3, 4, 5}, {4, 5}});
}

// A 4-cycle of 2-edges plus one disjoint 3-edge; e-index 10, determinant 0.
inline Hypergraph figure_det() {
    return Hypergraph(7, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5, 6}});
}

// Singleton triangle plus one disjoint 3-edge.
inline Hypergraph triangle_plus_edge() {
    return Hypergraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4, 5}});
}

inline Hypergraph single_edge3() { return Hypergraph(3, {{0, 1, 2}}); }

inline Hypergraph edgeless(int n) { return Hypergraph(n, {}); }

inline Hypergraph cycle_graph(int n) {
    std::vector<std::vector<int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Hypergraph(n, e);
}

inline Hypergraph path_graph(int n) {
    std::vector<std::vector<int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Hypergraph(n, e);
}

inline Hypergraph complete_graph(int n) {
    std::vector<std::vector<int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Hypergraph(n, e);
}

}  // namespace uhg::fixtures

#endif

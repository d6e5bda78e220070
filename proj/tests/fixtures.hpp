#pragma once

#include "diwallkit/didrawing.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace fixtures {

using diwallkit::Didrawing;
using diwallkit::Digraph;

inline Didrawing from_xy(int n, const std::vector<std::pair<int, int>>& edges,
                         const std::vector<std::pair<double, double>>& xy) {
    Digraph g(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return diwallkit::drawing_from_coordinates(g, xy);
}

// 0 at the top, then clockwise 1 (lower right) and 2 (lower left).
inline Didrawing clockwise_triangle() {
    return from_xy(3, {{0, 1}, {1, 2}, {2, 0}}, {{0, 1}, {1, -1}, {-1, -1}});
}

inline Didrawing directed_path3() {
    return from_xy(3, {{0, 1}, {1, 2}}, {{0, 0}, {1, 0}, {2, 0}});
}

// Outer triangle 0,1,2 with centre 3.
inline Didrawing k4() {
    return from_xy(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}}, {{0, 1}, {1, -1}, {-1, -1}, {0, 0}});
}

// Two triangles sharing vertex 0.
inline Didrawing bowtie() {
    return from_xy(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}},
                   {{0, 0}, {1, 1}, {1, -1}, {-1, -1}, {-1, 1}});
}

// Two vertices joined by m parallel edges all directed 0 -> 1.
inline Didrawing parallel_bundle(int m) {
    Digraph g(2);
    std::vector<std::vector<int>> rot(2);
    for (int i = 0; i < m; ++i) {
        g.add_edge(0, 1);
        rot[0].push_back(2 * i);
    }
    for (int i = m - 1; i >= 0; --i) rot[1].push_back(2 * i + 1);
    return Didrawing(g, rot);
}

inline Didrawing directed_cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<double, double>> xy;
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
        double t = 6.283185307179586 * i / n;
        xy.push_back({std::sin(t), std::cos(t)});
    }
    return from_xy(n, edges, xy);
}

} // namespace fixtures

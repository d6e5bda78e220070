#pragma once

#include "diwallkit/didrawing.hpp"

#include <span>
#include <vector>

namespace diwallkit {

enum class DualSide { Right, Left };

/// Directed dual of a connected drawing. Dual vertex f is primal face f and
/// dual edge e crosses primal edge e. In the right dual, edge e runs from the
/// face left of e to the face right of e; the left dual reverses every edge.
struct DualMap {
    Didrawing dual;
    DualSide side = DualSide::Right;
    /// Primal vertex -> dual face that surrounds it.
    std::vector<int> vertex_to_region;
    /// Dual face -> primal vertex it surrounds.
    std::vector<int> region_to_vertex;

    /// Dual dart crossing primal dart d (same edge index).
    int dual_dart(int primal_dart) const { return side == DualSide::Right ? primal_dart : (primal_dart ^ 1); }
    int primal_dart(int dual_dart) const { return side == DualSide::Right ? dual_dart : (dual_dart ^ 1); }
};

/// Throws Disconnected unless the drawing is connected with at least one edge.
DualMap dual(const Didrawing& g, DualSide side = DualSide::Right);

/// Number of change-vertices of a path or cycle given as a dart sequence
/// (dart i leaves the i-th vertex of the walk). A sequence that returns to
/// its start is a cycle. Throws NotWalk.
int change_number(const Didrawing& g, std::span<const int> walk);
int change_number(const Digraph& g, std::span<const int> walk);

struct BondCycle {
    int change_number = 0;
    /// The dual cycle as darts of the right dual (equal to primal dart ids).
    std::vector<int> dual_darts;
};

/// Change number of the bond between side[v] != 0 and side[v] == 0, read off
/// the right dual. Throws NotBond if either side is empty or not weakly
/// connected, Disconnected if g is.
BondCycle bond_change_number(const Didrawing& g, std::span<const char> side);

/// True if both sides are nonempty and induce weakly connected subgraphs.
bool is_bond_partition(const Digraph& g, std::span<const char> side);

} // namespace diwallkit

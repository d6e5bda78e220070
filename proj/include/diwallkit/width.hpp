#pragma once

#include "diwallkit/didrawing.hpp"
#include "diwallkit/walls.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace diwallkit {

/// Ternary tree whose leaves are in bijection with a ground set 0..n-1.
struct Carving {
    int node_count = 0;
    std::vector<std::pair<int, int>> tree_edges;
    /// Ground element -> leaf node.
    std::vector<int> leaf;

    int ground_size() const { return static_cast<int>(leaf.size()); }
    /// For each tree edge (a, b): mask of the ground elements on b's side.
    std::vector<std::vector<char>> sides() const;
    /// Parent of every node when the tree is hung from `root` (-1 at the root).
    std::vector<int> parent_array(int root = 0) const;
};

/// Tree, degrees one or three, leaves exactly the images of the ground set.
CheckResult check_carving(const Carving& c, int ground_size);

struct WidthResult {
    int width = 0;
    Carving carving;
};

/// Subset dynamic programming handles up to this many ground elements
/// unless DIWALLKIT_SCALE_OVERRIDE is set (hard cap 20).
inline constexpr int kExactWidthMaxElements = 16;

/// Largest bond change number over the tree edges, or nullopt if some tree
/// edge does not induce a bond.
std::optional<int> diwidth_of(const Didrawing& g, const Carving& c);

/// Exact diwidth by dynamic programming over vertex subsets: a carving hung
/// from the leaf of vertex 0 is a recursive split of the other vertices, and
/// every split side must be a bond. Throws NotTwoWeak, HasLoop, ScaleExceeded.
WidthResult diwidth_exact(const Didrawing& g);

/// Carving of width at most k grown from the star split at vertex 0 by
/// splitting classes along dual paths through their disc; nullopt means no
/// carving was found, not that none exists. Throws NotTwoWeak, HasLoop.
std::optional<Carving> diwidth_greedy(const Didrawing& g, int k);

/// Smallest k <= k_max for which diwidth_greedy succeeds.
std::optional<WidthResult> diwidth_greedy_bound(const Didrawing& g, int k_max);

/// A closed curve meeting the drawing only in the listed edges (crossed at
/// an interior point) and vertices, passing through regions[i] between
/// steps[i-1] and steps[i] (cyclically).
struct CurveStep {
    int edge = -1;        // crossed edge, or -1
    int vertex = -1;      // vertex passed through, or -1
    int enter_corner = -1;  // corners are darts a; corner a lies between a and cw_next(a)
    int exit_corner = -1;
};

struct GoodCurve {
    std::vector<int> regions;
    std::vector<CurveStep> steps;  // steps[i] leads from regions[i] to regions[i+1]
};

/// side[d] for every dart d (2e = tail end of e, 2e+1 = head end), normalised
/// so that dart 0 is on side 0.
struct DartPartition {
    std::vector<char> side;
    int change_regions = 0;
    int vertices_on_curve = 0;

    int cost() const { return change_regions + vertices_on_curve; }
};

/// Calls `visit` for every good curve (as a cycle of the region / edge /
/// vertex incidence structure) whose dart partition has two nonempty sides.
/// Each curve is met once per direction. Throws CutEdge, HasLoop.
void enumerate_good_curves(const Didrawing& g, const std::function<void(const GoodCurve&, const DartPartition&)>& visit);

/// Dart partition and cost of one curve; nullopt if the curve is not good or
/// leaves a side without darts.
std::optional<DartPartition> curve_partition(const Didrawing& g, const GoodCurve& curve);

/// Every sensible dart partition (bit d = side of dart d, normalised) with
/// its cost. Needs at most 64 darts.
std::map<std::uint64_t, int> sensible_partitions(const Didrawing& g);

/// Largest cost over the tree edges of a dart carving, or nullopt if some
/// partition is not sensible.
std::optional<int> dart_width_of(const Carving& c, const std::map<std::uint64_t, int>& sensible);

/// Exact dart-width by dynamic programming over dart subsets. Throws CutEdge,
/// HasLoop, ScaleExceeded.
WidthResult dart_width_exact(const Didrawing& g);

/// Upper bound from the diwidth of the blowup, with the carving of the
/// blowup read as a carving of the darts.
WidthResult dart_width_via_blowup(const Didrawing& g);

} // namespace diwallkit

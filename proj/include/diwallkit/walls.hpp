#pragma once

#include "diwallkit/didrawing.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace diwallkit {

enum class GridKind {
    Diwall,         // rows plus paired columns, no drawn diagonals
    DiwallClassic,  // the presentation with explicit diagonal edges
    Alternating,
    Semigrid,
    Cylindrical,
    AcyclicA,
    AcyclicB,
};

GridKind parse_grid_kind(std::string_view name);
std::string_view grid_kind_name(GridKind kind);

/// A directed path (or, with `cyclic`, a directed cycle) given by its vertices
/// and the edges between consecutive ones.
struct DirectedPath {
    std::vector<int> vertices;
    std::vector<int> edges;
    bool cyclic = false;

    static DirectedPath from_edges(const Digraph& g, const std::vector<int>& edges);
};

struct CheckResult {
    bool ok = true;
    std::string reason;

    explicit operator bool() const { return ok; }
    static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

CheckResult check_directed_path(const Digraph& g, const DirectedPath& p);

/// Horizontal and vertical path families a generator was built from.
struct GridCertificate {
    std::vector<DirectedPath> horizontal, vertical;
};

struct GeneratedGrid {
    GridKind kind{};
    int k1 = 0, k2 = 0;
    Didrawing drawing;
    GridCertificate certificate;
    /// Edges shared by a horizontal and a vertical path (diwalls only).
    std::vector<int> diagonal_edges;
};

/// k1 horizontal paths by k2 vertical paths (k1 cycles by k2 spokes for the
/// cylindrical grid). Diwalls, alternating grids and semigrids need both even;
/// cylindrical grids need an even number of spokes, at least 4.
/// Throws BadParity or TooSmall.
GeneratedGrid generate(GridKind kind, int k1, int k2);

/// Every path directed, each family pairwise vertex-disjoint, each horizontal
/// meets each vertical in one vertex (or one shared diagonal edge when
/// `shared_edge`), and the paths cover every edge.
CheckResult verify_grid(const Digraph& g, const GridCertificate& c, bool shared_edge);

/// Horizontal paths P_1..P_k and vertical paths Q_1..Q_k.
struct DiwallLayout {
    std::vector<DirectedPath> P, Q;
};

/// Checks the layout conditions: directed, vertex-disjoint families; each
/// P_i ∩ Q_j a path R_ij; for odd i the R_ij occur in order along P_i and
/// for even i in reverse; for even j the R_ij occur in order along Q_j and
/// for odd j in reverse.
CheckResult verify_layout(const Digraph& g, const DiwallLayout& layout, int k);

/// Layout read off a generated diwall's own paths.
DiwallLayout diwall_layout(const GeneratedGrid& wall);

/// Subdigraph formed by the edges of the layout (all vertices kept).
Digraph layout_union(const Digraph& g, const DiwallLayout& layout);

/// Vertex id of v_{i,j} (1-based row i from the top, column j) in the
/// alternating grid produced by generate(Alternating, k1, k2).
inline int grid_vertex(int i, int j, int k2) { return (i - 1) * k2 + (j - 1); }

/// eta: vertices of the alternating grid -> disjoint vertex sets of G,
/// edges of the alternating grid -> edges of G.
struct BoxSystem {
    int k1 = 0, k2 = 0;
    std::vector<std::vector<int>> box;
    std::vector<int> edge_image;
};

CheckResult verify_box_system(const Digraph& g, const BoxSystem& bs);

/// eta(v) = {v}, eta(e) = e, for G the alternating grid itself.
BoxSystem identity_box_system(int k1, int k2);

/// k x k diwall layout from a k x 3k box system. Rows become P'_i; columns
/// 1, 6, 7, 12, 13, ... carry snake paths that weave through three columns.
/// Throws RoutingFailed if a box lacks a required internal path.
DiwallLayout box_to_layout(const Digraph& g, const BoxSystem& bs);

/// Images of the vertices of H (branch sets; singletons for subdivisions)
/// and of its edges (directed paths in G, as edge ids).
struct SubdivisionModel {
    std::vector<std::vector<int>> branch;
    std::vector<std::vector<int>> paths;
};

struct EmbedOptions {
    /// Lifts the soft scale limits; the DIWALLKIT_SCALE_OVERRIDE environment
    /// variable has the same effect.
    bool scale_override = false;
};

/// Soft limits on the exhaustive search.
inline constexpr int kEmbedMaxPatternEdges = 12;
inline constexpr int kEmbedMaxHostVertices = 40;

bool scale_override_requested(const EmbedOptions& options);

/// Whether G has a subdigraph isomorphic to a subdivision of H. Exhaustive
/// backtracking over branch-vertex images and internally disjoint directed
/// routings; the model returned is the first in the search order (vertices
/// of H by BFS order, candidates and path extensions by increasing id).
/// Throws ScaleExceeded beyond the soft limits.
std::optional<SubdivisionModel> embeds(const Digraph& G, const Digraph& H, const EmbedOptions& options = {});

/// Same search with arbitrary candidate branch sets per vertex of H.
/// Paths start in the tail's set, end in the head's set, and have their
/// interior outside every branch set; paths are internally vertex-disjoint
/// and edge-disjoint.
std::optional<SubdivisionModel> find_branch_model(const Digraph& G, const Digraph& H,
                                                  const std::vector<std::vector<std::vector<int>>>& candidates);

/// Checks a model; with `strong_branch_sets` each branch set must induce a
/// strongly connected subdigraph, otherwise it must be a single vertex.
CheckResult verify_model(const Digraph& G, const Digraph& H, const SubdivisionModel& model, bool strong_branch_sets);

} // namespace diwallkit

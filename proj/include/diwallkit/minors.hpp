#pragma once

#include "diwallkit/didrawing.hpp"
#include "diwallkit/walls.hpp"

#include <optional>
#include <string>
#include <vector>

namespace diwallkit {

/// One contraction: a butterfly edge or a strongly connected vertex set.
struct ContractionStep {
    enum class Kind { Butterfly, Strong };

    Kind kind = Kind::Butterfly;
    int edge = -1;
    std::vector<int> vertices;

    static ContractionStep butterfly(int e);
    static ContractionStep strong(std::vector<int> vertices);

    /// Log line for replay, e.g. "butterfly 3" or "strong 0 2 5".
    std::string describe() const;
};

struct Contraction {
    Digraph graph;
    /// Present when the input was a drawing; graph() equals `graph`.
    std::optional<Didrawing> drawing;
    /// New index of every old vertex.
    std::vector<int> vertex_map;
    /// New index of every old edge, or -1 if it was contracted away.
    std::vector<int> edge_map;
    bool has_loops = false;
    std::vector<std::string> log;
};

/// Butterfly: the non-loop edge uv with out-degree(u) = 1 or in-degree(v) = 1
/// is contracted, v merging into u. Strong: the induced subdigraph on a
/// nonempty strongly connected set is contracted to its least vertex. Loops
/// that arise are kept and flagged. Throws NotButterfly, NotStrong.
Contraction contract(const Digraph& g, const ContractionStep& step);
/// Same on a drawing; the rotation at the merged vertex is spliced along a
/// spanning tree of the set, so the result is always drawn. Vertex numbering
/// follows the splicing and may differ from the abstract version.
Contraction contract(const Didrawing& g, const ContractionStep& step);

/// Applies the steps in order, composing the maps and the log.
Contraction replay(const Digraph& g, const std::vector<ContractionStep>& steps);

inline constexpr int kMinorMaxHostVertices = 10;
inline constexpr int kMinorMaxPatternEdges = 8;

/// Whether some directed subdivision of H is a strong minor of G, i.e. G has
/// disjoint strongly connected branch sets for V(H) joined by internally
/// disjoint directed paths. Exhaustive over strongly connected vertex sets.
/// Throws HasLoop (loop in H), ScaleExceeded beyond the limits above.
std::optional<SubdivisionModel> semi_strong_minor_model(const Digraph& H, const Digraph& G,
                                                        const EmbedOptions& options = {});
bool is_semi_strong_minor(const Digraph& H, const Digraph& G, const EmbedOptions& options = {});

} // namespace diwallkit

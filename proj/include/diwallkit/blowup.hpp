#pragma once

#include "diwallkit/didrawing.hpp"
#include "diwallkit/walls.hpp"
#include "diwallkit/width.hpp"

#include <vector>

namespace diwallkit {

/// Each edge of G doubly subdivided, a clockwise cycle C_v joining the
/// subdivision vertices next to v, and the vertices of G deleted.
/// The vertex of J next to v on edge e is numbered by the dart of G at v on e.
struct Blowup {
    Didrawing source;
    Didrawing J;
    /// C_v as J vertices and J edges in clockwise order around v.
    std::vector<std::vector<int>> cycle_vertices, cycle_edges;
    /// Edge e of G -> middle edge of J (same direction).
    std::vector<int> edge_map;
    /// Dart of G -> vertex of J.
    std::vector<int> dart_map;
};

/// Throws HasLoop, NotTwoEdgeConnected.
Blowup blow_up(const Didrawing& g);

/// Contracts every C_v; the result has the vertices, edges and rotations of
/// the source.
Didrawing recover(const Blowup& b);

/// Reads a vertex carving of J as a dart carving of the source and checks
/// that every tree edge gives a sensible dart partition of cost at most the
/// carving's width on J. Throws TransferCostExceeded, PreconditionViolated
/// (carving not a bond carving of J).
Carving transfer_carving(const Blowup& b, const Carving& c);

/// For the blowup of the alternating grid Γ_{k1,k2} (with vertex and edge
/// numbering of generate): box of v = C_v, image of e = middle edge.
BoxSystem blowup_box_system(const Blowup& b, int k1, int k2);

} // namespace diwallkit

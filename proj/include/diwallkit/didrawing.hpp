#pragma once

#include "diwallkit/digraph.hpp"

#include <span>
#include <utility>
#include <vector>

namespace diwallkit {

/// A digraph drawn on the sphere, given by the clockwise cyclic order of darts
/// around every vertex.
///
/// Faces are traced with face_next(d) = cw_next(reverse(d)): leave along d,
/// arrive at the far end and turn to the next dart clockwise there. The face
/// traced through d lies on the left of d, so face_of(2e) is the region left
/// of edge e and face_of(2e+1) the region to its right.
class Didrawing {
public:
    Didrawing() = default;

    /// Validates the rotation and the Euler formula on every component that
    /// has an edge. Throws DanglingDart, DuplicateDart or NotSphere.
    Didrawing(Digraph graph, std::vector<std::vector<int>> rotation, bool loops_allowed = true);

    const Digraph& graph() const { return graph_; }
    int vertex_count() const { return graph_.vertex_count(); }
    int edge_count() const { return graph_.edge_count(); }
    int dart_count() const { return graph_.dart_count(); }
    bool loops_allowed() const { return loops_allowed_; }

    const std::vector<int>& rotation(int v) const { return rotation_[v]; }
    const std::vector<std::vector<int>>& rotations() const { return rotation_; }

    int cw_next(int d) const { return cw_next_[d]; }
    int ccw_next(int d) const { return ccw_next_[d]; }
    int face_next(int d) const { return cw_next_[d ^ 1]; }
    /// Position of dart d within the rotation list of its vertex.
    int rotation_index(int d) const { return rotation_index_[d]; }

    int face_count() const { return static_cast<int>(faces_.size()); }
    int face_of(int d) const { return face_of_[d]; }
    /// Darts of a face in walk order (the face lies to their left).
    const std::vector<int>& face(int f) const { return faces_[f]; }
    const std::vector<std::vector<int>>& faces() const { return faces_; }
    int left_face(int e) const { return face_of_[2 * e]; }
    int right_face(int e) const { return face_of_[2 * e + 1]; }
    /// Face containing the corner between d and cw_next(d).
    int corner_face(int d) const { return face_of_[cw_next_[d]]; }

    /// Number of weak components that contain at least one edge, plus isolated vertices.
    int component_count() const;

    /// Drawing obtained by deleting the flagged edges; edge indices are
    /// renumbered densely, and `old_edge` (if given) receives the original index
    /// of every surviving edge.
    Didrawing without_edges(std::span<const char> removed, std::vector<int>* old_edge = nullptr) const;
    /// Drawing obtained by deleting the flagged vertices and their edges.
    /// `old_vertex` and `old_edge` receive original indices when given.
    Didrawing without_vertices(std::span<const char> removed, std::vector<int>* old_vertex = nullptr,
                               std::vector<int>* old_edge = nullptr) const;

    /// Same drawing with every edge reversed. Dart 2e now sits at the old head,
    /// so darts are relabelled d -> d^1 in the rotations.
    Didrawing reversed() const;

    /// Drawing with the non-loop edge e contracted: its head merges into its
    /// tail, the two rotations spliced at e. Edges parallel to e become loops.
    /// Throws HasLoop if e is a loop.
    Didrawing contracted(int e, std::vector<int>* old_vertex = nullptr, std::vector<int>* old_edge = nullptr) const;

private:
    Digraph graph_;
    std::vector<std::vector<int>> rotation_;
    bool loops_allowed_ = true;
    std::vector<int> cw_next_, ccw_next_, rotation_index_;
    std::vector<int> face_of_;
    std::vector<std::vector<int>> faces_;
};

/// Clockwise rotation read off planar straight-line coordinates: the darts at
/// each vertex are sorted by decreasing angle of the neighbour.
Didrawing drawing_from_coordinates(const Digraph& g, std::span<const std::pair<double, double>> xy);

/// Maximum over vertices of the number of maximal same-direction blocks in
/// the cyclic rotation. Throws HasLoop.
int interleaving(const Didrawing& g);
int vertex_interleaving(const Didrawing& g, int v);

ConnectivityProfile connectivity_profile(const Didrawing& g);

/// Invariant of the drawing up to orientation-preserving map isomorphism that
/// keeps edge directions. Two drawings are isomorphic iff their codes agree.
/// With directed = false the edge directions are ignored.
std::vector<int> canonical_code(const Didrawing& g, bool directed = true);
bool map_isomorphic(const Didrawing& a, const Didrawing& b);

} // namespace diwallkit

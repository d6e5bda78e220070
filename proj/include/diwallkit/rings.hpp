#pragma once

#include "diwallkit/didrawing.hpp"
#include "diwallkit/walls.hpp"

#include <array>
#include <optional>
#include <vector>

namespace diwallkit {

/// Four consecutive arcs R1..R4 of the dual cycle around vertex v, given as
/// blocks of the darts at v in anticlockwise order. A block may be empty, in
/// which case its arc is the single region between its neighbours.
struct RingArcs {
    int vertex = -1;
    /// Darts at v, anticlockwise, starting with the first dart of R1.
    std::vector<int> order;
    std::array<int, 4> sizes{};

    /// Darts of R_i (i = 1..4).
    std::vector<int> block(int i) const;
};

/// Arcs starting at `first` (a dart at v) with the given block sizes, which
/// must add up to the degree of v. Throws PreconditionViolated.
RingArcs make_arcs(const Didrawing& g, int v, int first, std::array<int, 4> sizes);

/// Regions of g (dual vertices) on R_i, in order along the arc.
std::vector<int> arc_regions(const Didrawing& g, const RingArcs& arcs, int i);

/// Directed cycles C_1..C_k through v, each stored as edge ids starting with
/// the edge leaving v.
struct Ring {
    int vertex = -1;
    std::vector<std::vector<int>> cycles;
    bool disjointed = false;

    int size() const { return static_cast<int>(cycles.size()); }
    /// e_i and f_i: the edges of C_i with tail v and with head v.
    int out_edge(int i) const { return cycles[i].front(); }
    int in_edge(int i) const { return cycles[i].back(); }
};

/// Directed cycles through v, pairwise edge-disjoint and non-crossing, with
/// f_1, e_2, f_3, ... e_1 in anticlockwise order around v.
CheckResult check_ring(const Didrawing& g, const Ring& ring);
/// check_ring plus: e_i in R4 and f_i in R2 for odd i, the reverse for even i.
CheckResult check_ring_from(const Didrawing& g, const Ring& ring, const RingArcs& arcs);
/// Pairwise vertex-disjoint except for v.
bool is_disjointed(const Digraph& g, const Ring& ring);

/// Faces of g on the two sides of a cycle (side[f] = 0 or 1, face 0 on side 0).
std::vector<char> cycle_sides(const Didrawing& g, const std::vector<int>& cycle_edges);
/// One side of each cycle includes one side of the other.
bool non_crossing(const Didrawing& g, const std::vector<int>& a, const std::vector<int>& b);

struct RingSearch {
    std::optional<Ring> ring;
    /// Otherwise: a path of the right dual between regions of R1 and R3, as
    /// dual darts (equal to primal dart ids), with change number < k.
    std::vector<int> dual_path;
    int change_number = 0;
};

/// Alternating ring of size k from R2 to R4, or a low-change dual path
/// between R1 and R3, by a multicut of the dual with R1 and R3 contracted.
/// Throws HasLoop (loop at v), NotOneWeak (g or g - v not weakly connected),
/// SameVertex (R1 and R3 share a region), PreconditionViolated.
RingSearch find_ring(const Didrawing& g, const RingArcs& arcs, int k);

/// Keeps C_1, C_{lambda+1}, C_{2 lambda+1}, ... (k cycles). Throws NotOdd,
/// RingTooSmall, PreconditionViolated (result not disjointed, which can only
/// happen when some vertex other than v has interleaving above 2 lambda).
Ring thin_ring(const Digraph& g, const Ring& ring, int lambda, int k);

/// For every h and i < j: some subpath of C_h with one end v holds all of
/// C_h ∩ D_i and meets D_j only in v.
CheckResult check_nesting(const Digraph& g, const Ring& C, const Ring& D);

/// Diwall layout from a disjointed ring (C_1..C_k), k even, and a disjointed
/// ring (D_1..D_3k) meeting it in nested order: rows are C_i - v, columns
/// zigzag between rows along minimal subpaths of the D_j. Throws
/// NestingViolated.
DiwallLayout rings_to_layout(const Didrawing& g, const Ring& C, const Ring& D);

} // namespace diwallkit

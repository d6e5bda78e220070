#include "diwallkit/duality.hpp"

#include "diwallkit/error.hpp"

#include <algorithm>
#include <set>

namespace diwallkit {

DualMap dual(const Didrawing& g, DualSide side) {
    if (g.edge_count() == 0 || !is_weakly_connected(g.graph()))
        throw Error(Errc::Disconnected, "duals need a connected drawing with an edge");
    DualMap m;
    m.side = side;
    Digraph d;
    for (int f = 0; f < g.face_count(); ++f) d.add_vertex("f" + std::to_string(f));
    for (int e = 0; e < g.edge_count(); ++e) {
        int l = g.left_face(e), r = g.right_face(e);
        if (side == DualSide::Right)
            d.add_edge(l, r, g.graph().edge_name(e));
        else
            d.add_edge(r, l, g.graph().edge_name(e));
    }
    // The face walk goes anticlockwise around its face, so the clockwise
    // rotation of the dual vertex is the walk reversed.
    std::vector<std::vector<int>> rot(g.face_count());
    for (int f = 0; f < g.face_count(); ++f) {
        const auto& walk = g.face(f);
        for (auto it = walk.rbegin(); it != walk.rend(); ++it) rot[f].push_back(m.dual_dart(*it));
    }
    m.dual = Didrawing(std::move(d), std::move(rot));

    // The dual face around v is traced by the dual darts of the primal darts
    // pointing into v.
    m.vertex_to_region.assign(g.vertex_count(), -1);
    m.region_to_vertex.assign(m.dual.face_count(), -1);
    for (int x = 0; x < g.dart_count(); ++x) {
        int v = g.graph().dart_target(x);
        int region = m.dual.face_of(m.dual_dart(x));
        if (m.vertex_to_region[v] < 0) m.vertex_to_region[v] = region;
        if (m.vertex_to_region[v] != region || (m.region_to_vertex[region] >= 0 && m.region_to_vertex[region] != v))
            throw Error(Errc::PreconditionViolated, "dual face correspondence is inconsistent");
        m.region_to_vertex[region] = v;
    }
    return m;
}

int change_number(const Digraph& g, std::span<const int> walk) {
    if (walk.empty()) return 0;
    const int m = static_cast<int>(walk.size());
    for (int d : walk)
        if (d < 0 || d >= g.dart_count()) throw Error(Errc::NotWalk, "unknown dart in walk");
    for (int i = 0; i + 1 < m; ++i)
        if (g.dart_target(walk[i]) != g.dart_vertex(walk[i + 1]))
            throw Error(Errc::NotWalk, "consecutive darts do not meet");
    bool cycle = g.dart_target(walk[m - 1]) == g.dart_vertex(walk[0]);
    std::set<int> verts, edges;
    for (int i = 0; i < m; ++i) {
        if (!edges.insert(dart_edge(walk[i])).second) throw Error(Errc::NotWalk, "edge repeated in walk");
        if (!verts.insert(g.dart_vertex(walk[i])).second) throw Error(Errc::NotWalk, "vertex repeated in walk");
    }
    if (!cycle && !verts.insert(g.dart_target(walk[m - 1])).second)
        throw Error(Errc::NotWalk, "vertex repeated in walk");
    if (cycle && m == 1) return 0;

    // The vertex after dart a is the head of a's edge iff a is a tail dart;
    // the vertex before dart b is the head of b's edge iff b is a head dart.
    int count = 0;
    for (int i = 0; i + 1 < m; ++i)
        if (!dart_is_head(walk[i]) == dart_is_head(walk[i + 1])) ++count;
    if (cycle && !dart_is_head(walk[m - 1]) == dart_is_head(walk[0])) ++count;
    return count;
}

int change_number(const Didrawing& g, std::span<const int> walk) {
    return change_number(g.graph(), walk);
}

bool is_bond_partition(const Digraph& g, std::span<const char> side) {
    std::vector<char> other(side.size());
    bool any_a = false, any_b = false;
    for (std::size_t i = 0; i < side.size(); ++i) {
        other[i] = side[i] ? 0 : 1;
        (side[i] ? any_a : any_b) = true;
    }
    return any_a && any_b && induces_weakly_connected(g, side) && induces_weakly_connected(g, other);
}

BondCycle bond_change_number(const Didrawing& g, std::span<const char> side) {
    const Digraph& gr = g.graph();
    if (static_cast<int>(side.size()) != g.vertex_count())
        throw Error(Errc::NotBond, "side mask has the wrong length");
    if (!is_weakly_connected(gr)) throw Error(Errc::Disconnected, "drawing is not connected");
    if (!is_bond_partition(gr, side)) throw Error(Errc::NotBond, "a side is empty or not weakly connected");

    std::vector<int> cut;
    std::vector<int> out(g.face_count(), 0), in(g.face_count(), 0);
    std::vector<std::vector<int>> at_face(g.face_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = gr.edge(e);
        if ((side[ed.tail] != 0) == (side[ed.head] != 0)) continue;
        cut.push_back(e);
        ++out[g.left_face(e)];
        ++in[g.right_face(e)];
        at_face[g.left_face(e)].push_back(2 * e);
        at_face[g.right_face(e)].push_back(2 * e + 1);
    }
    BondCycle bc;
    for (int f = 0; f < g.face_count(); ++f)
        if (out[f] == 2 || in[f] == 2) ++bc.change_number;

    // Walk the dual cycle starting forward along the first cut edge.
    int cur = 2 * cut.front();
    do {
        bc.dual_darts.push_back(cur);
        int arrive = cur ^ 1;
        int face = g.face_of(arrive);
        const auto& ends = at_face[face];
        if (ends.size() != 2) throw Error(Errc::NotBond, "cut edges do not form one dual cycle");
        int next = ends[0] == arrive ? ends[1] : ends[0];
        cur = next;
    } while (cur != 2 * cut.front());
    if (bc.dual_darts.size() != cut.size()) throw Error(Errc::NotBond, "cut edges do not form one dual cycle");
    return bc;
}

} // namespace diwallkit

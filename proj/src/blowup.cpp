#include "diwallkit/blowup.hpp"

#include "diwallkit/error.hpp"
#include "diwallkit/io.hpp"

#include <algorithm>
#include <sstream>

namespace diwallkit {

Blowup blow_up(const Didrawing& g) {
    const Digraph& G = g.graph();
    if (G.has_loop()) throw Error(Errc::HasLoop, "blowup needs a loopless drawing");
    if (G.edge_count() == 0 || !is_weakly_two_edge_connected(G))
        throw Error(Errc::NotTwoEdgeConnected, "blowup needs a weakly 2-edge-connected drawing");
    Blowup b;
    b.source = g;
    Digraph J;
    for (int d = 0; d < G.dart_count(); ++d) J.add_vertex(dart_token(G, d));
    for (int e = 0; e < G.edge_count(); ++e) b.edge_map.push_back(J.add_edge(2 * e, 2 * e + 1, G.edge_name(e)));
    for (int d = 0; d < G.dart_count(); ++d) b.dart_map.push_back(d);

    std::vector<int> cycle_out(G.dart_count()), cycle_in(G.dart_count());
    b.cycle_vertices.resize(G.vertex_count());
    b.cycle_edges.resize(G.vertex_count());
    for (int v = 0; v < G.vertex_count(); ++v) {
        const auto& rot = g.rotation(v);
        for (std::size_t i = 0; i < rot.size(); ++i) {
            int a = rot[i], next = rot[(i + 1) % rot.size()];
            std::ostringstream name;
            name << "C" << G.vertex_name(v) << "_" << i;
            int e = J.add_edge(a, next, name.str());
            cycle_out[a] = e;
            cycle_in[next] = e;
            b.cycle_vertices[v].push_back(a);
            b.cycle_edges[v].push_back(e);
        }
    }
    // Around a_d: the middle edge, the cycle edge to the clockwise successor,
    // then the cycle edge from the predecessor.
    std::vector<std::vector<int>> rotation(J.vertex_count());
    for (int d = 0; d < G.dart_count(); ++d) rotation[d] = {d, 2 * cycle_out[d], 2 * cycle_in[d] + 1};
    b.J = Didrawing(std::move(J), std::move(rotation));
    return b;
}

Didrawing recover(const Blowup& b) {
    // Contract each C_v minus one edge; that last edge becomes a loop.
    Didrawing d = b.J;
    std::vector<int> orig_edge(d.edge_count()), orig_vertex(d.vertex_count());
    for (int e = 0; e < d.edge_count(); ++e) orig_edge[e] = e;
    for (int v = 0; v < d.vertex_count(); ++v) orig_vertex[v] = v;
    for (const auto& cyc : b.cycle_edges)
        for (std::size_t i = 0; i + 1 < cyc.size(); ++i) {
            int cur = static_cast<int>(std::find(orig_edge.begin(), orig_edge.end(), cyc[i]) - orig_edge.begin());
            std::vector<int> old_vertex, old_edge;
            d = d.contracted(cur, &old_vertex, &old_edge);
            std::vector<int> ne, nv;
            for (int x : old_edge) ne.push_back(orig_edge[x]);
            for (int x : old_vertex) nv.push_back(orig_vertex[x]);
            orig_edge = std::move(ne);
            orig_vertex = std::move(nv);
        }
    const Digraph& G = b.source.graph();
    std::vector<int> g_edge(b.J.edge_count(), -1);
    for (int e = 0; e < G.edge_count(); ++e) g_edge[b.edge_map[e]] = e;
    std::vector<int> dart_of_vertex(b.J.vertex_count());
    for (int x = 0; x < G.dart_count(); ++x) dart_of_vertex[b.dart_map[x]] = x;

    Digraph out;
    for (int v = 0; v < G.vertex_count(); ++v) out.add_vertex(G.vertex_name(v));
    for (int e = 0; e < G.edge_count(); ++e) out.add_edge(G.edge(e).tail, G.edge(e).head, G.edge_name(e));
    std::vector<std::vector<int>> rotation(G.vertex_count());
    for (int v = 0; v < d.vertex_count(); ++v) {
        int gv = G.dart_vertex(dart_of_vertex[orig_vertex[v]]);
        for (int x : d.rotation(v)) {
            int ge = g_edge[orig_edge[x >> 1]];
            if (ge >= 0) rotation[gv].push_back(2 * ge + (x & 1));
        }
    }
    return Didrawing(std::move(out), std::move(rotation));
}

Carving transfer_carving(const Blowup& b, const Carving& c) {
    auto width = diwidth_of(b.J, c);
    if (!width) throw Error(Errc::PreconditionViolated, "carving is not a bond carving of the blowup");
    const Digraph& G = b.source.graph();
    Carving out = c;
    for (int d = 0; d < G.dart_count(); ++d) out.leaf[d] = c.leaf[b.dart_map[d]];
    auto table = sensible_partitions(b.source);
    auto sides = out.sides();
    for (std::size_t t = 0; t < sides.size(); ++t) {
        std::uint64_t key = 0;
        bool flip = sides[t][0] != 0;
        for (int d = 0; d < G.dart_count(); ++d)
            if ((sides[t][d] != 0) != flip) key |= std::uint64_t(1) << d;
        auto it = table.find(key);
        std::ostringstream os;
        os << "tree edge " << t;
        if (it == table.end()) throw Error(Errc::TransferCostExceeded, os.str() + " gives a dart partition that is not sensible");
        if (it->second > *width) {
            os << " costs " << it->second << " > " << *width;
            throw Error(Errc::TransferCostExceeded, os.str());
        }
    }
    return out;
}

BoxSystem blowup_box_system(const Blowup& b, int k1, int k2) {
    BoxSystem bs{k1, k2, b.cycle_vertices, b.edge_map};
    return bs;
}

} // namespace diwallkit

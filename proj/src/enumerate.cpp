#include "diwallkit/enumerate.hpp"

#include "diwallkit/error.hpp"

#include <algorithm>
#include <set>

namespace diwallkit {

namespace {

bool adjacent(const Digraph& g, int a, int b) {
    for (const Edge& e : g.edges())
        if ((e.tail == a && e.head == b) || (e.tail == b && e.head == a)) return true;
    return false;
}

// Inserts dart `dart` directly after `after` in the rotation (or as the only
// dart when after < 0).
void insert_after(std::vector<int>& rot, int after, int dart) {
    if (after < 0) {
        rot.push_back(dart);
        return;
    }
    auto it = std::find(rot.begin(), rot.end(), after);
    rot.insert(it + 1, dart);
}

Didrawing add_pendant(const Didrawing& g, int corner, int v, bool outward) {
    Digraph d = g.graph();
    int w = d.add_vertex();
    int e = outward ? d.add_edge(v, w) : d.add_edge(w, v);
    auto rot = g.rotations();
    rot.emplace_back();
    insert_after(rot[v], corner, outward ? 2 * e : 2 * e + 1);
    rot[w].push_back(outward ? 2 * e + 1 : 2 * e);
    return Didrawing(std::move(d), std::move(rot));
}

// Chord from the corner after x to the corner after y; both corners lie in the
// same face.
Didrawing add_chord(const Didrawing& g, int x, int y, bool tail_at_x, bool swap_loop_order) {
    Digraph d = g.graph();
    int vx = d.dart_vertex(x), vy = d.dart_vertex(y);
    int e = tail_at_x ? d.add_edge(vx, vy) : d.add_edge(vy, vx);
    int dx = tail_at_x ? 2 * e : 2 * e + 1;
    auto rot = g.rotations();
    if (x == y) {
        insert_after(rot[vx], x, swap_loop_order ? dx ^ 1 : dx);
        insert_after(rot[vx], swap_loop_order ? dx ^ 1 : dx, swap_loop_order ? dx : dx ^ 1);
    } else {
        insert_after(rot[vx], x, dx);
        insert_after(rot[vy], y, dx ^ 1);
    }
    return Didrawing(std::move(d), std::move(rot));
}

template <class Visit>
void for_each_extension(const Didrawing& g, const MapFilter& filter, Visit&& visit) {
    const int orients = filter.directed ? 2 : 1;
    if (g.edge_count() == 0) {
        for (int o = 0; o < orients; ++o) visit(add_pendant(g, -1, 0, o == 0));
        if (filter.allow_loops) {
            Digraph d = g.graph();
            d.add_edge(0, 0);
            visit(Didrawing(std::move(d), {{0, 1}}));
        }
        return;
    }
    for (int x = 0; x < g.dart_count(); ++x)
        for (int o = 0; o < orients; ++o) visit(add_pendant(g, x, g.graph().dart_vertex(x), o == 0));
    for (int x = 0; x < g.dart_count(); ++x)
        for (int y = x; y < g.dart_count(); ++y) {
            if (g.corner_face(x) != g.corner_face(y)) continue;
            int vx = g.graph().dart_vertex(x), vy = g.graph().dart_vertex(y);
            if (vx == vy && !filter.allow_loops) continue;
            if (vx != vy && !filter.allow_parallel && adjacent(g.graph(), vx, vy)) continue;
            for (int o = 0; o < orients; ++o) {
                if (x == y) {
                    for (int s = 0; s < 2; ++s) visit(add_chord(g, x, y, o == 0, s == 1));
                } else {
                    visit(add_chord(g, x, y, o == 0, false));
                }
            }
        }
}

} // namespace

std::vector<Didrawing> enumerate_connected_maps(int max_edges, MapFilter filter) {
    std::vector<Didrawing> out;
    Digraph one(1);
    std::vector<Didrawing> layer{Didrawing(one, std::vector<std::vector<int>>(1))};
    for (int m = 1; m <= max_edges; ++m) {
        std::set<std::vector<int>> seen;
        std::vector<Didrawing> next;
        for (const auto& g : layer)
            for_each_extension(g, filter, [&](Didrawing h) {
                if (seen.insert(canonical_code(h, filter.directed)).second) next.push_back(std::move(h));
            });
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

Didrawing reverse_edge(const Didrawing& g, int e) {
    Digraph d;
    for (int v = 0; v < g.vertex_count(); ++v) d.add_vertex(g.graph().vertex_name(v));
    for (int f = 0; f < g.edge_count(); ++f) {
        const Edge& ed = g.graph().edge(f);
        if (f == e)
            d.add_edge(ed.head, ed.tail, g.graph().edge_name(f));
        else
            d.add_edge(ed.tail, ed.head, g.graph().edge_name(f));
    }
    auto rot = g.rotations();
    for (auto& r : rot)
        for (int& x : r)
            if (dart_edge(x) == e) x ^= 1;
    return Didrawing(std::move(d), std::move(rot), g.loops_allowed());
}

std::vector<Didrawing> all_orientations(const Didrawing& g) {
    if (g.edge_count() > 20) throw Error(Errc::ScaleExceeded, "too many orientations");
    std::vector<Didrawing> out;
    std::set<std::vector<int>> seen;
    for (std::uint32_t mask = 0; mask < (1u << g.edge_count()); ++mask) {
        Didrawing h = g;
        for (int e = 0; e < g.edge_count(); ++e)
            if (mask >> e & 1u) h = reverse_edge(h, e);
        if (seen.insert(canonical_code(h)).second) out.push_back(std::move(h));
    }
    return out;
}

Didrawing random_map(std::mt19937_64& rng, int edges, double pendant_bias, bool allow_parallel) {
    Digraph one(1);
    Didrawing g(one, std::vector<std::vector<int>>(1));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    while (g.edge_count() < edges) {
        bool outward = coin(rng) < 0.5;
        if (g.edge_count() == 0) {
            g = add_pendant(g, -1, 0, outward);
            continue;
        }
        std::uniform_int_distribution<int> pick(0, g.dart_count() - 1);
        if (coin(rng) < pendant_bias) {
            int x = pick(rng);
            g = add_pendant(g, x, g.graph().dart_vertex(x), outward);
            continue;
        }
        // Chord between two corners of a random face at distinct vertices.
        int x = pick(rng);
        std::vector<int> options;
        for (int y = 0; y < g.dart_count(); ++y) {
            if (g.corner_face(y) != g.corner_face(x)) continue;
            int vx = g.graph().dart_vertex(x), vy = g.graph().dart_vertex(y);
            if (vx == vy) continue;
            if (!allow_parallel && adjacent(g.graph(), vx, vy)) continue;
            options.push_back(y);
        }
        if (options.empty()) continue;
        int y = options[std::uniform_int_distribution<int>(0, static_cast<int>(options.size()) - 1)(rng)];
        g = add_chord(g, x, y, outward, false);
    }
    return g;
}

} // namespace diwallkit

#include "diwallkit/didrawing.hpp"

#include "diwallkit/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace diwallkit {

Didrawing::Didrawing(Digraph graph, std::vector<std::vector<int>> rotation, bool loops_allowed)
    : graph_(std::move(graph)), rotation_(std::move(rotation)), loops_allowed_(loops_allowed) {
    const int n = graph_.vertex_count();
    const int darts = graph_.dart_count();
    if (static_cast<int>(rotation_.size()) != n)
        throw Error(Errc::DanglingDart, "rotation list count differs from vertex count");
    if (!loops_allowed_ && graph_.has_loop()) throw Error(Errc::HasLoop, "loops are not allowed here");

    cw_next_.assign(darts, -1);
    ccw_next_.assign(darts, -1);
    rotation_index_.assign(darts, -1);
    for (int v = 0; v < n; ++v) {
        const auto& rot = rotation_[v];
        for (std::size_t i = 0; i < rot.size(); ++i) {
            int d = rot[i];
            if (d < 0 || d >= darts)
                throw Error(Errc::DanglingDart, "rotation of vertex " + graph_.vertex_name(v) + " names an unknown dart");
            if (rotation_index_[d] >= 0)
                throw Error(Errc::DuplicateDart, "dart " + std::to_string(d) + " appears twice");
            if (graph_.dart_vertex(d) != v)
                throw Error(Errc::DanglingDart, "dart " + std::to_string(d) + " listed at the wrong vertex " +
                                                    graph_.vertex_name(v));
            rotation_index_[d] = static_cast<int>(i);
            int next = rot[(i + 1) % rot.size()];
            cw_next_[d] = next;
        }
        for (std::size_t i = 0; i < rot.size(); ++i) ccw_next_[cw_next_[rot[i]]] = rot[i];
    }
    for (int d = 0; d < darts; ++d)
        if (rotation_index_[d] < 0)
            throw Error(Errc::DanglingDart, "dart " + std::to_string(d) + " is missing from every rotation");

    face_of_.assign(darts, -1);
    for (int d = 0; d < darts; ++d) {
        if (face_of_[d] >= 0) continue;
        int f = static_cast<int>(faces_.size());
        faces_.emplace_back();
        int x = d;
        do {
            face_of_[x] = f;
            faces_.back().push_back(x);
            x = face_next(x);
        } while (x != d);
    }

    // Euler's formula per component with at least one edge.
    Components comp = weak_components(graph_);
    std::vector<int> verts(comp.count, 0), edges(comp.count, 0), faces(comp.count, 0);
    for (int v = 0; v < n; ++v) ++verts[comp.component[v]];
    for (const Edge& e : graph_.edges()) ++edges[comp.component[e.tail]];
    for (const auto& face : faces_) ++faces[comp.component[graph_.dart_vertex(face.front())]];
    for (int c = 0; c < comp.count; ++c) {
        if (edges[c] == 0) continue;
        if (verts[c] - edges[c] + faces[c] != 2)
            throw Error(Errc::NotSphere, "Euler characteristic " + std::to_string(verts[c] - edges[c] + faces[c]) +
                                             " on a component; rotation is not spherical");
    }
}

int Didrawing::component_count() const {
    return weak_components(graph_).count;
}

Didrawing Didrawing::without_edges(std::span<const char> removed, std::vector<int>* old_edge) const {
    std::vector<int> new_id(edge_count(), -1);
    Digraph g;
    for (int v = 0; v < vertex_count(); ++v) g.add_vertex(graph_.vertex_name(v));
    std::vector<int> back;
    for (int e = 0; e < edge_count(); ++e) {
        if (removed[e]) continue;
        new_id[e] = g.add_edge(graph_.edge(e).tail, graph_.edge(e).head, graph_.edge_name(e));
        back.push_back(e);
    }
    std::vector<std::vector<int>> rot(vertex_count());
    for (int v = 0; v < vertex_count(); ++v)
        for (int d : rotation_[v])
            if (new_id[d >> 1] >= 0) rot[v].push_back(2 * new_id[d >> 1] + (d & 1));
    if (old_edge) *old_edge = back;
    return Didrawing(std::move(g), std::move(rot), loops_allowed_);
}

Didrawing Didrawing::without_vertices(std::span<const char> removed, std::vector<int>* old_vertex,
                                      std::vector<int>* old_edge) const {
    std::vector<int> vid(vertex_count(), -1), eid(edge_count(), -1);
    std::vector<int> vback, eback;
    Digraph g;
    for (int v = 0; v < vertex_count(); ++v)
        if (!removed[v]) {
            vid[v] = g.add_vertex(graph_.vertex_name(v));
            vback.push_back(v);
        }
    for (int e = 0; e < edge_count(); ++e) {
        const Edge& ed = graph_.edge(e);
        if (removed[ed.tail] || removed[ed.head]) continue;
        eid[e] = g.add_edge(vid[ed.tail], vid[ed.head], graph_.edge_name(e));
        eback.push_back(e);
    }
    std::vector<std::vector<int>> rot(g.vertex_count());
    for (int v = 0; v < vertex_count(); ++v) {
        if (removed[v]) continue;
        for (int d : rotation_[v])
            if (eid[d >> 1] >= 0) rot[vid[v]].push_back(2 * eid[d >> 1] + (d & 1));
    }
    if (old_vertex) *old_vertex = vback;
    if (old_edge) *old_edge = eback;
    return Didrawing(std::move(g), std::move(rot), loops_allowed_);
}

Didrawing Didrawing::contracted(int e, std::vector<int>* old_vertex, std::vector<int>* old_edge) const {
    const Edge& ce = graph_.edge(e);
    if (ce.is_loop()) throw Error(Errc::HasLoop, "cannot contract loop " + graph_.edge_name(e));
    int u = ce.tail, w = ce.head;
    std::vector<int> vid(vertex_count(), -1), eid(edge_count(), -1), vback, eback;
    Digraph g;
    for (int v = 0; v < vertex_count(); ++v)
        if (v != w) {
            vid[v] = g.add_vertex(graph_.vertex_name(v));
            vback.push_back(v);
        }
    vid[w] = vid[u];
    for (int f = 0; f < edge_count(); ++f) {
        if (f == e) continue;
        eid[f] = g.add_edge(vid[graph_.edge(f).tail], vid[graph_.edge(f).head], graph_.edge_name(f));
        eback.push_back(f);
    }
    auto relabel = [&](int d) { return 2 * eid[d >> 1] + (d & 1); };
    std::vector<std::vector<int>> rot(g.vertex_count());
    for (int v = 0; v < vertex_count(); ++v) {
        if (v == u || v == w) continue;
        for (int d : rotation_[v]) rot[vid[v]].push_back(relabel(d));
    }
    // Sweep u after its dart of e, then w after its dart of e.
    auto& merged = rot[vid[u]];
    for (int side : {0, 1}) {
        int start = 2 * e + side;
        for (int d = cw_next_[start]; d != start; d = cw_next_[d]) merged.push_back(relabel(d));
    }
    if (old_vertex) *old_vertex = vback;
    if (old_edge) *old_edge = eback;
    return Didrawing(std::move(g), std::move(rot), loops_allowed_);
}

Didrawing Didrawing::reversed() const {
    std::vector<std::vector<int>> rot = rotation_;
    for (auto& r : rot)
        for (int& d : r) d ^= 1;
    return Didrawing(graph_.reversed(), std::move(rot), loops_allowed_);
}

Didrawing drawing_from_coordinates(const Digraph& g, std::span<const std::pair<double, double>> xy) {
    std::vector<std::vector<std::pair<double, int>>> keyed(g.vertex_count());
    for (int d = 0; d < g.dart_count(); ++d) {
        int v = g.dart_vertex(d), w = g.dart_target(d);
        double ang = std::atan2(xy[w].second - xy[v].second, xy[w].first - xy[v].first);
        keyed[v].push_back({-ang, d});
    }
    std::vector<std::vector<int>> rot(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::sort(keyed[v].begin(), keyed[v].end());
        for (auto& [_, d] : keyed[v]) rot[v].push_back(d);
    }
    return Didrawing(g, std::move(rot));
}

int vertex_interleaving(const Didrawing& g, int v) {
    const auto& rot = g.rotation(v);
    if (rot.empty()) return 0;
    int changes = 0;
    for (std::size_t i = 0; i < rot.size(); ++i) {
        int prev = rot[(i + rot.size() - 1) % rot.size()];
        if ((prev & 1) != (rot[i] & 1)) ++changes;
    }
    return changes == 0 ? 1 : changes;
}

int interleaving(const Didrawing& g) {
    if (g.graph().has_loop()) throw Error(Errc::HasLoop, "interleaving is defined for loopless drawings");
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, vertex_interleaving(g, v));
    return best;
}

ConnectivityProfile connectivity_profile(const Didrawing& g) {
    return connectivity_profile(g.graph());
}

namespace {

// Breadth-first relabelling of the darts reachable from `start`; the code
// lists, in label order, the labels of cw_next and reverse plus the end tag.
std::vector<int> code_from(const Didrawing& g, int start, std::vector<int>& label, bool directed) {
    std::vector<int> order;
    std::fill(label.begin(), label.end(), -1);
    label[start] = 0;
    order.push_back(start);
    std::vector<int> code;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int d = order[i];
        for (int nb : {g.cw_next(d), d ^ 1}) {
            if (label[nb] < 0) {
                label[nb] = static_cast<int>(order.size());
                order.push_back(nb);
            }
            code.push_back(label[nb]);
        }
        if (directed) code.push_back(d & 1);
    }
    return code;
}

} // namespace

std::vector<int> canonical_code(const Didrawing& g, bool directed) {
    Components comp = weak_components(g.graph());
    std::vector<std::vector<int>> best(comp.count);
    std::vector<int> label(g.dart_count());
    for (int d = 0; d < g.dart_count(); ++d) {
        int c = comp.component[g.graph().dart_vertex(d)];
        auto code = code_from(g, d, label, directed);
        if (best[c].empty() || code < best[c]) best[c] = std::move(code);
    }
    std::vector<std::vector<int>> parts;
    int isolated = 0;
    for (int c = 0; c < comp.count; ++c) {
        if (best[c].empty())
            ++isolated;
        else
            parts.push_back(std::move(best[c]));
    }
    std::sort(parts.begin(), parts.end());
    std::vector<int> out{isolated, static_cast<int>(parts.size())};
    for (auto& p : parts) {
        out.push_back(static_cast<int>(p.size()));
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

bool map_isomorphic(const Didrawing& a, const Didrawing& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_code(a) == canonical_code(b);
}

} // namespace diwallkit

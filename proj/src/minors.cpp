#include "diwallkit/minors.hpp"

#include "diwallkit/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace diwallkit {

namespace {

std::vector<char> checked_set(int n, const std::vector<int>& vertices) {
    if (vertices.empty()) throw Error(Errc::NotStrong, "empty vertex set");
    std::vector<char> mask(n, 0);
    for (int v : vertices) {
        if (v < 0 || v >= n) throw Error(Errc::NotStrong, "vertex out of range");
        mask[v] = 1;
    }
    return mask;
}

void check_step(const Digraph& g, const ContractionStep& step) {
    if (step.kind == ContractionStep::Kind::Butterfly) {
        if (step.edge < 0 || step.edge >= g.edge_count()) throw Error(Errc::NotButterfly, "edge out of range");
        const Edge& e = g.edge(step.edge);
        if (e.is_loop()) throw Error(Errc::NotButterfly, "edge " + g.edge_name(step.edge) + " is a loop");
        if (g.out_degree(e.tail) != 1 && g.in_degree(e.head) != 1)
            throw Error(Errc::NotButterfly, "edge " + g.edge_name(step.edge) + " fails both degree conditions");
        return;
    }
    if (!induces_strongly_connected(g, checked_set(g.vertex_count(), step.vertices)))
        throw Error(Errc::NotStrong, "vertex set does not induce a strongly connected subdigraph");
}

bool any_loop(const Digraph& g) { return g.has_loop(); }

} // namespace

ContractionStep ContractionStep::butterfly(int e) {
    ContractionStep s;
    s.kind = Kind::Butterfly;
    s.edge = e;
    return s;
}

ContractionStep ContractionStep::strong(std::vector<int> vertices) {
    ContractionStep s;
    s.kind = Kind::Strong;
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    s.vertices = std::move(vertices);
    return s;
}

std::string ContractionStep::describe() const {
    std::ostringstream os;
    if (kind == Kind::Butterfly) {
        os << "butterfly " << edge;
    } else {
        os << "strong";
        for (int v : vertices) os << ' ' << v;
    }
    return os.str();
}

Contraction contract(const Digraph& g, const ContractionStep& step) {
    check_step(g, step);
    int n = g.vertex_count();
    std::vector<char> merged(n, 0), dropped(g.edge_count(), 0);
    int keep;
    if (step.kind == ContractionStep::Kind::Butterfly) {
        keep = g.edge(step.edge).tail;
        merged[keep] = merged[g.edge(step.edge).head] = 1;
        dropped[step.edge] = 1;
    } else {
        keep = step.vertices.front();
        for (int v : step.vertices) merged[v] = 1;
        for (int e = 0; e < g.edge_count(); ++e)
            if (merged[g.edge(e).tail] && merged[g.edge(e).head]) dropped[e] = 1;
    }
    Contraction c;
    c.vertex_map.assign(n, -1);
    for (int v = 0; v < n; ++v)
        if (!merged[v] || v == keep) c.vertex_map[v] = c.graph.add_vertex(g.vertex_name(v));
    for (int v = 0; v < n; ++v)
        if (merged[v]) c.vertex_map[v] = c.vertex_map[keep];
    c.edge_map.assign(g.edge_count(), -1);
    for (int e = 0; e < g.edge_count(); ++e)
        if (!dropped[e])
            c.edge_map[e] = c.graph.add_edge(c.vertex_map[g.edge(e).tail], c.vertex_map[g.edge(e).head], g.edge_name(e));
    c.has_loops = any_loop(c.graph);
    c.log.push_back(step.describe());
    return c;
}

Contraction contract(const Didrawing& g, const ContractionStep& step) {
    check_step(g.graph(), step);
    int n = g.vertex_count();
    // Current index of every original vertex and edge while splicing.
    std::vector<int> vmap(n), emap(g.edge_count());
    std::iota(vmap.begin(), vmap.end(), 0);
    std::iota(emap.begin(), emap.end(), 0);
    Didrawing cur = g;
    auto splice = [&](int original_edge) {
        std::vector<int> old_vertex, old_edge;
        cur = cur.contracted(emap[original_edge], &old_vertex, &old_edge);
        std::vector<int> vnew(old_vertex.size() + 1, -1), enew(old_edge.size() + 1, -1);
        for (std::size_t i = 0; i < old_vertex.size(); ++i) vnew[old_vertex[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < old_edge.size(); ++i) enew[old_edge[i]] = static_cast<int>(i);
        const Edge& ce = g.graph().edge(original_edge);
        int tail_now = vnew[vmap[ce.tail]];
        for (int& v : vmap) v = vnew[v] < 0 ? tail_now : vnew[v];
        for (int& e : emap)
            if (e >= 0) e = enew[e];
    };
    if (step.kind == ContractionStep::Kind::Butterfly) {
        splice(step.edge);
    } else {
        std::vector<char> in_set = checked_set(n, step.vertices);
        // Spanning tree of the set, grown along edges in either direction.
        std::vector<int> tree;
        std::vector<char> reached(n, 0);
        reached[step.vertices.front()] = 1;
        for (bool grew = true; grew;) {
            grew = false;
            for (int e = 0; e < g.edge_count(); ++e) {
                const Edge& ed = g.graph().edge(e);
                if (!in_set[ed.tail] || !in_set[ed.head] || reached[ed.tail] == reached[ed.head]) continue;
                reached[ed.tail] = reached[ed.head] = 1;
                tree.push_back(e);
                grew = true;
            }
        }
        for (int e : tree) splice(e);
        std::vector<char> removed(cur.edge_count(), 0);
        for (int e = 0; e < g.edge_count(); ++e)
            if (emap[e] >= 0 && in_set[g.graph().edge(e).tail] && in_set[g.graph().edge(e).head]) {
                removed[emap[e]] = 1;
                emap[e] = -1;
            }
        std::vector<int> old_edge;
        cur = cur.without_edges(removed, &old_edge);
        std::vector<int> enew(removed.size(), -1);
        for (std::size_t i = 0; i < old_edge.size(); ++i) enew[old_edge[i]] = static_cast<int>(i);
        for (int& e : emap)
            if (e >= 0) e = enew[e];
    }
    Contraction c;
    c.graph = cur.graph();
    c.drawing = std::move(cur);
    c.vertex_map = std::move(vmap);
    c.edge_map = std::move(emap);
    c.has_loops = any_loop(c.graph);
    c.log.push_back(step.describe());
    return c;
}

Contraction replay(const Digraph& g, const std::vector<ContractionStep>& steps) {
    Contraction total;
    total.graph = g;
    total.vertex_map.resize(g.vertex_count());
    total.edge_map.resize(g.edge_count());
    std::iota(total.vertex_map.begin(), total.vertex_map.end(), 0);
    std::iota(total.edge_map.begin(), total.edge_map.end(), 0);
    for (const auto& step : steps) {
        Contraction c = contract(total.graph, step);
        for (int& v : total.vertex_map) v = c.vertex_map[v];
        for (int& e : total.edge_map)
            if (e >= 0) e = c.edge_map[e];
        total.graph = std::move(c.graph);
        total.log.push_back(c.log.front());
    }
    total.has_loops = any_loop(total.graph);
    return total;
}

std::optional<SubdivisionModel> semi_strong_minor_model(const Digraph& H, const Digraph& G,
                                                        const EmbedOptions& options) {
    if (H.has_loop()) throw Error(Errc::HasLoop, "pattern has a loop");
    int n = G.vertex_count();
    if (!scale_override_requested(options) && (n > kMinorMaxHostVertices || H.edge_count() > kMinorMaxPatternEdges)) {
        std::ostringstream os;
        os << "semi-strong minor search limited to |V(G)| <= " << kMinorMaxHostVertices << " and |E(H)| <= "
           << kMinorMaxPatternEdges << " (got " << n << ", " << H.edge_count() << ")";
        throw Error(Errc::ScaleExceeded, os.str());
    }
    if (n > 30) throw Error(Errc::ScaleExceeded, "vertex subsets need |V(G)| <= 30");
    if (H.vertex_count() > n || H.edge_count() > G.edge_count()) return std::nullopt;
    struct Set {
        std::vector<int> vertices;
        int out = 0, in = 0;
    };
    std::vector<Set> sets;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<char> m(n);
        Set s;
        for (int v = 0; v < n; ++v)
            if ((m[v] = (mask >> v) & 1u)) s.vertices.push_back(v);
        if (s.vertices.size() > 1 && !induces_strongly_connected(G, m)) continue;
        for (const Edge& e : G.edges()) {
            if (m[e.tail] && !m[e.head]) ++s.out;
            if (!m[e.tail] && m[e.head]) ++s.in;
        }
        sets.push_back(std::move(s));
    }
    std::stable_sort(sets.begin(), sets.end(),
                     [](const Set& a, const Set& b) { return a.vertices.size() < b.vertices.size(); });
    std::vector<std::vector<std::vector<int>>> candidates(H.vertex_count());
    for (int h = 0; h < H.vertex_count(); ++h)
        for (const Set& s : sets)
            if (s.out >= H.out_degree(h) && s.in >= H.in_degree(h)) candidates[h].push_back(s.vertices);
    return find_branch_model(G, H, candidates);
}

bool is_semi_strong_minor(const Digraph& H, const Digraph& G, const EmbedOptions& options) {
    return semi_strong_minor_model(H, G, options).has_value();
}

} // namespace diwallkit

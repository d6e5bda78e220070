#include "diwallkit/digraph.hpp"

#include "diwallkit/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace diwallkit {

Digraph::Digraph(int vertex_count) {
    for (int i = 0; i < vertex_count; ++i) add_vertex();
}

int Digraph::add_vertex(std::string name) {
    int id = vertex_count();
    if (name.empty()) name = std::to_string(id);
    vertex_names_.push_back(std::move(name));
    return id;
}

int Digraph::add_edge(int tail, int head, std::string name) {
    if (tail < 0 || tail >= vertex_count() || head < 0 || head >= vertex_count())
        throw Error(Errc::PreconditionViolated, "edge endpoint out of range");
    int id = edge_count();
    if (name.empty()) name = "e" + std::to_string(id);
    edges_.push_back({tail, head});
    edge_names_.push_back(std::move(name));
    return id;
}

std::optional<int> Digraph::find_vertex(std::string_view name) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (vertex_names_[v] == name) return v;
    return std::nullopt;
}

std::optional<int> Digraph::find_edge(std::string_view name) const {
    for (int e = 0; e < edge_count(); ++e)
        if (edge_names_[e] == name) return e;
    return std::nullopt;
}

int Digraph::dart_vertex(int d) const {
    const Edge& e = edge(dart_edge(d));
    return dart_is_head(d) ? e.head : e.tail;
}

bool Digraph::has_loop() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

int Digraph::out_degree(int v) const {
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.tail == v; }));
}

int Digraph::in_degree(int v) const {
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.head == v; }));
}

std::vector<std::vector<int>> Digraph::incident_darts() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(vertex_count()));
    for (int d = 0; d < dart_count(); ++d) out[dart_vertex(d)].push_back(d);
    return out;
}

Digraph Digraph::reversed() const {
    Digraph r = *this;
    for (auto& e : r.edges_) std::swap(e.tail, e.head);
    return r;
}

Digraph Digraph::edge_subgraph(std::span<const int> edges) const {
    Digraph g;
    g.vertex_names_ = vertex_names_;
    for (int e : edges) g.add_edge(edge(e).tail, edge(e).head, edge_name(e));
    return g;
}

// ---------------------------------------------------------------------------

Components weak_components(const Digraph& g, std::span<const char> vertex_mask,
                           std::span<const char> edge_removed) {
    int n = g.vertex_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto in_mask = [&](int v) { return vertex_mask.empty() || vertex_mask[v]; };
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!edge_removed.empty() && edge_removed[e]) continue;
        const Edge& ed = g.edge(e);
        if (!in_mask(ed.tail) || !in_mask(ed.head)) continue;
        parent[find(ed.tail)] = find(ed.head);
    }
    Components c;
    c.component.assign(n, -1);
    std::vector<int> label(n, -1);
    for (int v = 0; v < n; ++v) {
        if (!in_mask(v)) continue;
        int r = find(v);
        if (label[r] < 0) label[r] = c.count++;
        c.component[v] = label[r];
    }
    return c;
}

bool is_weakly_connected(const Digraph& g) {
    return weak_components(g).count == 1;
}

bool induces_weakly_connected(const Digraph& g, std::span<const char> mask) {
    return weak_components(g, mask).count == 1;
}

bool is_two_weak(const Digraph& g) {
    int n = g.vertex_count();
    if (n < 2 || !is_weakly_connected(g)) return false;
    if (n == 2) return true;
    std::vector<char> mask(n, 1);
    for (int v = 0; v < n; ++v) {
        mask[v] = 0;
        bool ok = induces_weakly_connected(g, mask);
        mask[v] = 1;
        if (!ok) return false;
    }
    return true;
}

std::vector<int> bridges(const Digraph& g) {
    std::vector<int> out;
    std::vector<char> removed(g.edge_count(), 0);
    int base = weak_components(g).count;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.edge(e).is_loop()) continue;
        removed[e] = 1;
        if (weak_components(g, {}, removed).count > base) out.push_back(e);
        removed[e] = 0;
    }
    return out;
}

bool is_weakly_two_edge_connected(const Digraph& g) {
    return g.vertex_count() >= 1 && is_weakly_connected(g) && bridges(g).empty();
}

std::vector<char> reachable_from(const Digraph& g, int source, std::span<const char> mask) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> out(n);
    for (const Edge& e : g.edges()) out[e.tail].push_back(e.head);
    std::vector<char> seen(n, 0);
    auto in_mask = [&](int v) { return mask.empty() || mask[v]; };
    if (!in_mask(source)) return seen;
    std::vector<int> stack{source};
    seen[source] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : out[x])
            if (!seen[y] && in_mask(y)) {
                seen[y] = 1;
                stack.push_back(y);
            }
    }
    return seen;
}

bool induces_strongly_connected(const Digraph& g, std::span<const char> mask) {
    int first = -1, size = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mask[v]) {
            if (first < 0) first = v;
            ++size;
        }
    if (size == 0) return false;
    auto fw = reachable_from(g, first, mask);
    Digraph r = g.reversed();
    auto bw = reachable_from(r, first, mask);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mask[v] && (!fw[v] || !bw[v])) return false;
    return true;
}

bool is_strongly_connected(const Digraph& g) {
    std::vector<char> all(g.vertex_count(), 1);
    return induces_strongly_connected(g, all);
}

bool is_acyclic(const Digraph& g) {
    int n = g.vertex_count();
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> out(n);
    for (const Edge& e : g.edges()) {
        out[e.tail].push_back(e.head);
        ++indeg[e.head];
    }
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    std::size_t seen = 0;
    while (seen < queue.size()) {
        int x = queue[seen++];
        for (int y : out[x])
            if (--indeg[y] == 0) queue.push_back(y);
    }
    return static_cast<int>(seen) == n;
}

ConnectivityProfile connectivity_profile(const Digraph& g) {
    ConnectivityProfile p;
    p.one_weak = g.vertex_count() >= 1 && is_weakly_connected(g);
    p.two_weak = is_two_weak(g);
    p.weakly_two_edge_connected = is_weakly_two_edge_connected(g);
    p.strongly_connected = g.vertex_count() >= 1 && is_strongly_connected(g);
    return p;
}

} // namespace diwallkit

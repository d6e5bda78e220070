#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diwallkit {

struct Edge {
    int tail = -1;
    int head = -1;

    bool is_loop() const { return tail == head; }
};

// Darts are numbered 2*e (the tail end of edge e) and 2*e+1 (its head end).
// The reversal of dart d is d ^ 1.
inline constexpr int dart_of(int edge, bool head_end) { return 2 * edge + (head_end ? 1 : 0); }
inline constexpr int dart_edge(int dart) { return dart >> 1; }
inline constexpr bool dart_is_head(int dart) { return (dart & 1) != 0; }
inline constexpr int dart_reverse(int dart) { return dart ^ 1; }

/// A finite digraph with named vertices and edges. Parallel edges and loops
/// are permitted; vertex and edge indices are dense and stable.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int vertex_count);

    int add_vertex(std::string name = {});
    int add_edge(int tail, int head, std::string name = {});

    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int dart_count() const { return 2 * edge_count(); }

    const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
    std::span<const Edge> edges() const { return edges_; }

    const std::string& vertex_name(int v) const { return vertex_names_.at(static_cast<std::size_t>(v)); }
    const std::string& edge_name(int e) const { return edge_names_.at(static_cast<std::size_t>(e)); }
    std::optional<int> find_vertex(std::string_view name) const;
    std::optional<int> find_edge(std::string_view name) const;

    /// Vertex at which dart d sits.
    int dart_vertex(int d) const;
    /// Vertex at the far end of dart d.
    int dart_target(int d) const { return dart_vertex(dart_reverse(d)); }

    bool has_loop() const;
    int out_degree(int v) const;
    int in_degree(int v) const;
    int degree(int v) const { return out_degree(v) + in_degree(v); }

    /// Darts sitting at each vertex, in increasing dart order.
    std::vector<std::vector<int>> incident_darts() const;

    /// Same vertices and edges, every edge reversed.
    Digraph reversed() const;

    /// Subdigraph induced by the listed edges (all vertices kept).
    Digraph edge_subgraph(std::span<const int> edges) const;

private:
    std::vector<std::string> vertex_names_;
    std::vector<std::string> edge_names_;
    std::vector<Edge> edges_;
};

/// Undirected components; entries of `component` are -1 for masked vertices.
struct Components {
    int count = 0;
    std::vector<int> component;
};

/// Components of the underlying graph restricted to `vertex_mask` (empty = all)
/// and ignoring edges flagged in `edge_removed` (empty = none removed).
Components weak_components(const Digraph& g, std::span<const char> vertex_mask = {},
                           std::span<const char> edge_removed = {});

bool is_weakly_connected(const Digraph& g);
/// G is 2-weak: at least two vertices, weakly connected, and no cut vertex.
bool is_two_weak(const Digraph& g);
bool is_weakly_two_edge_connected(const Digraph& g);
bool is_strongly_connected(const Digraph& g);
/// Weakly connected induced subgraph on the vertices with mask[v] != 0.
bool induces_weakly_connected(const Digraph& g, std::span<const char> mask);
/// Strongly connected induced subgraph on the vertices with mask[v] != 0.
bool induces_strongly_connected(const Digraph& g, std::span<const char> mask);
/// Vertices reachable from `source` along directed edges (inside `mask` if given).
std::vector<char> reachable_from(const Digraph& g, int source, std::span<const char> mask = {});
bool is_acyclic(const Digraph& g);

/// Bridges of the underlying multigraph.
std::vector<int> bridges(const Digraph& g);

struct ConnectivityProfile {
    bool one_weak = false;
    bool two_weak = false;
    bool weakly_two_edge_connected = false;
    bool strongly_connected = false;
};

ConnectivityProfile connectivity_profile(const Digraph& g);

} // namespace diwallkit

#include "diwallkit/width.hpp"

#include "diwallkit/blowup.hpp"
#include "diwallkit/duality.hpp"
#include "diwallkit/error.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace diwallkit {

namespace {

constexpr int kInf = INT_MAX / 2;

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

void check_scale(int elements, const char* what) {
    bool override = std::getenv("DIWALLKIT_SCALE_OVERRIDE") != nullptr;
    if (elements > 20 || (elements > kExactWidthMaxElements && !override)) {
        std::ostringstream os;
        os << "exact " << what << " limited to " << kExactWidthMaxElements << " elements (got " << elements << ")";
        throw Error(Errc::ScaleExceeded, os.str());
    }
}

// Min-max carving of {0..n-1} hung from the leaf of element 0. cost[X] is the
// cost of the split (X, rest) for masks X without bit 0; kInf forbids it.
WidthResult carve(int n, const std::vector<int>& cost) {
    if (n < 2) throw Error(Errc::PreconditionViolated, "a carving needs at least two elements");
    std::uint32_t full = ((1u << n) - 1) & ~1u;
    std::vector<int> best(std::size_t(1) << n, kInf), choice(std::size_t(1) << n, 0);
    for (std::uint32_t x = 2; x <= full; x += 2) {
        if (std::popcount(x) == 1) {
            best[x] = cost[x];
            continue;
        }
        if (cost[x] >= kInf) continue;
        std::uint32_t low = x & (~x + 1);
        int inner = kInf;
        for (std::uint32_t y = (x - 1) & x; y; y = (y - 1) & x) {
            if (!(y & low)) continue;
            int v = std::max(best[y], best[x ^ y]);
            if (v < inner) {
                inner = v;
                choice[x] = static_cast<int>(y);
            }
        }
        best[x] = std::max(cost[x], inner);
    }
    if (best[full] >= kInf) throw Error(Errc::PreconditionViolated, "no admissible carving exists");

    WidthResult out;
    Carving& c = out.carving;
    c.leaf.assign(n, -1);
    std::function<int(std::uint32_t)> build = [&](std::uint32_t x) -> int {
        if (std::popcount(x) == 1) {
            int node = c.node_count++;
            c.leaf[std::countr_zero(x)] = node;
            return node;
        }
        int node = c.node_count++;
        std::uint32_t y = static_cast<std::uint32_t>(choice[x]);
        c.tree_edges.push_back({node, build(y)});
        c.tree_edges.push_back({node, build(x ^ y)});
        return node;
    };
    int root_leaf = c.node_count++;
    c.leaf[0] = root_leaf;
    c.tree_edges.push_back({root_leaf, build(full)});
    out.width = best[full];
    return out;
}

void require_two_weak(const Didrawing& g) {
    if (g.graph().has_loop()) throw Error(Errc::HasLoop, "diwidth needs a loopless drawing");
    if (g.vertex_count() < 2 || !is_two_weak(g.graph())) throw Error(Errc::NotTwoWeak, "diwidth needs a 2-weak drawing");
}

void require_two_edge_connected(const Didrawing& g) {
    if (g.graph().has_loop()) throw Error(Errc::HasLoop, "dart-width needs a loopless drawing");
    if (!is_weakly_connected(g.graph()) || g.edge_count() == 0)
        throw Error(Errc::CutEdge, "dart-width needs a connected drawing with an edge");
    if (!bridges(g.graph()).empty()) throw Error(Errc::CutEdge, "drawing has a cut-edge");
}

std::optional<int> bond_cost(const Didrawing& g, const std::vector<char>& side) {
    if (!is_bond_partition(g.graph(), side)) return std::nullopt;
    return bond_change_number(g, side).change_number;
}

} // namespace

// ---------------------------------------------------------------------------
// Carvings

std::vector<std::vector<char>> Carving::sides() const {
    std::vector<std::vector<int>> adj(node_count);
    for (auto [a, b] : tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> element_at(node_count, -1);
    for (int s = 0; s < ground_size(); ++s) element_at[leaf[s]] = s;
    std::vector<std::vector<char>> out;
    for (auto [a, b] : tree_edges) {
        std::vector<char> side(ground_size(), 0);
        std::vector<int> stack{b};
        std::vector<char> seen(node_count, 0);
        seen[a] = seen[b] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (element_at[x] >= 0) side[element_at[x]] = 1;
            for (int y : adj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        out.push_back(std::move(side));
    }
    return out;
}

std::vector<int> Carving::parent_array(int root) const {
    std::vector<std::vector<int>> adj(node_count);
    for (auto [a, b] : tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> parent(node_count, -2);
    parent[root] = -1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x])
            if (parent[y] == -2) {
                parent[y] = x;
                stack.push_back(y);
            }
    }
    return parent;
}

CheckResult check_carving(const Carving& c, int ground_size) {
    if (ground_size < 2) return CheckResult::fail("ground set needs at least two elements");
    if (c.ground_size() != ground_size) return CheckResult::fail("leaf map has the wrong size");
    if (static_cast<int>(c.tree_edges.size()) != c.node_count - 1) return CheckResult::fail("not a tree");
    std::vector<int> degree(c.node_count, 0);
    UnionFind uf(c.node_count);
    for (auto [a, b] : c.tree_edges) {
        if (a < 0 || b < 0 || a >= c.node_count || b >= c.node_count || a == b)
            return CheckResult::fail("bad tree edge");
        if (uf.find(a) == uf.find(b)) return CheckResult::fail("tree has a cycle");
        uf.unite(a, b);
        ++degree[a];
        ++degree[b];
    }
    std::vector<char> is_image(c.node_count, 0);
    for (int x : c.leaf) {
        if (x < 0 || x >= c.node_count || is_image[x]) return CheckResult::fail("leaf map is not injective");
        is_image[x] = 1;
    }
    for (int x = 0; x < c.node_count; ++x) {
        if (degree[x] != 1 && degree[x] != 3) return CheckResult::fail("tree node of degree other than one or three");
        if ((degree[x] == 1) != (is_image[x] != 0)) return CheckResult::fail("leaves and ground set do not match");
    }
    return {};
}

// ---------------------------------------------------------------------------
// Diwidth

std::optional<int> diwidth_of(const Didrawing& g, const Carving& c) {
    if (!check_carving(c, g.vertex_count())) return std::nullopt;
    int width = 0;
    for (const auto& side : c.sides()) {
        auto cost = bond_cost(g, side);
        if (!cost) return std::nullopt;
        width = std::max(width, *cost);
    }
    return width;
}

WidthResult diwidth_exact(const Didrawing& g) {
    require_two_weak(g);
    int n = g.vertex_count();
    check_scale(n, "diwidth");
    std::vector<int> cost(std::size_t(1) << n, kInf);
    std::vector<char> side(n);
    for (std::uint32_t x = 2; x < (1u << n); x += 2) {
        for (int v = 0; v < n; ++v) side[v] = (x >> v) & 1u;
        if (auto c = bond_cost(g, side)) cost[x] = *c;
    }
    return carve(n, cost);
}

namespace {

class GreedyCarver {
public:
    GreedyCarver(const Didrawing& g, int k) : g_(g), k_(k), n_(g.vertex_count()) {}

    std::optional<Carving> run() {
        std::vector<char> rest(n_, 1);
        rest[0] = 0;
        auto c = bond_cost(g_, rest);
        if (!c || *c > k_) return std::nullopt;
        out_.leaf.assign(n_, -1);
        int root_leaf = out_.node_count++;
        out_.leaf[0] = root_leaf;
        std::vector<int> others;
        for (int v = 1; v < n_; ++v) others.push_back(v);
        auto sub = build(others);
        if (!sub) return std::nullopt;
        out_.tree_edges.push_back({root_leaf, *sub});
        return out_;
    }

private:
    const Didrawing& g_;
    int k_, n_;
    Carving out_;
    std::set<std::vector<int>> failed_;

    struct Split {
        std::vector<int> a, b;
        int cost;
    };

    std::optional<int> cost_of(const std::vector<int>& part) const {
        std::vector<char> side(n_, 0);
        for (int v : part) side[v] = 1;
        return bond_cost(g_, side);
    }

    // Splits of A: all of them for small classes, otherwise along simple
    // dual paths between faces of the bounding dual cycle that stay inside A's disc.
    std::vector<Split> candidates(const std::vector<int>& A) const {
        std::set<std::vector<int>> seen;
        std::vector<Split> out;
        auto consider = [&](std::vector<int> a, std::vector<int> b) {
            if (a.empty() || b.empty()) return;
            if (b.front() < a.front()) std::swap(a, b);
            if (!seen.insert(a).second) return;
            auto ca = cost_of(a), cb = cost_of(b);
            if (!ca || !cb || *ca > k_ || *cb > k_) return;
            out.push_back({std::move(a), std::move(b), std::max(*ca, *cb)});
        };
        std::vector<char> in_a(n_, 0);
        for (int v : A) in_a[v] = 1;
        const Digraph& G = g_.graph();
        int size = static_cast<int>(A.size());
        if (size <= 10) {
            for (std::uint32_t mask = 1; mask + 1 < (1u << size); mask += 2) {
                std::vector<int> a, b;
                for (int t = 0; t < size; ++t) ((mask >> t) & 1u ? a : b).push_back(A[t]);
                consider(std::move(a), std::move(b));
            }
        } else {
            std::vector<char> on_cycle(g_.face_count(), 0);
            std::vector<std::vector<std::pair<int, int>>> adj(g_.face_count());
            for (int e = 0; e < G.edge_count(); ++e) {
                bool t = in_a[G.edge(e).tail], h = in_a[G.edge(e).head];
                int lf = g_.left_face(e), rf = g_.right_face(e);
                if (t != h) on_cycle[lf] = on_cycle[rf] = 1;
                if (t && h && lf != rf) {
                    adj[lf].push_back({e, rf});
                    adj[rf].push_back({e, lf});
                }
            }
            long budget = 20000;
            std::vector<int> path;
            std::vector<char> visited(g_.face_count(), 0);
            auto split_by = [&](const std::vector<int>& cut) {
                std::vector<char> removed(G.edge_count(), 0);
                for (int e : cut) removed[e] = 1;
                UnionFind uf(n_);
                for (int e = 0; e < G.edge_count(); ++e)
                    if (!removed[e] && in_a[G.edge(e).tail] && in_a[G.edge(e).head])
                        uf.unite(G.edge(e).tail, G.edge(e).head);
                std::map<int, std::vector<int>> parts;
                for (int v : A) parts[uf.find(v)].push_back(v);
                if (parts.size() == 2) consider(parts.begin()->second, std::next(parts.begin())->second);
            };
            std::function<void(int, int)> dfs = [&](int start, int x) {
                for (auto [e, y] : adj[x]) {
                    if (--budget < 0 || out.size() >= 64) return;
                    if (visited[y]) continue;
                    path.push_back(e);
                    if (on_cycle[y]) {
                        if (y != start) split_by(path);
                    } else {
                        visited[y] = 1;
                        dfs(start, y);
                        visited[y] = 0;
                    }
                    path.pop_back();
                }
            };
            for (int f = 0; f < g_.face_count(); ++f)
                if (on_cycle[f]) {
                    visited[f] = 1;
                    dfs(f, f);
                    visited[f] = 0;
                }
        }
        std::stable_sort(out.begin(), out.end(), [](const Split& x, const Split& y) {
            auto balance = [](const Split& s) { return std::abs(int(s.a.size()) - int(s.b.size())); };
            return std::pair{x.cost, balance(x)} < std::pair{y.cost, balance(y)};
        });
        return out;
    }

    // Subtree for class A (whose own cut was already accepted); node id or nullopt.
    std::optional<int> build(const std::vector<int>& A) {
        if (A.size() == 1) {
            int node = out_.node_count++;
            out_.leaf[A[0]] = node;
            return node;
        }
        if (failed_.count(A)) return std::nullopt;
        auto options = candidates(A);
        if (options.size() > 12) options.resize(12);
        for (const auto& s : options) {
            int nodes = out_.node_count;
            std::size_t edges = out_.tree_edges.size();
            int node = out_.node_count++;
            auto left = build(s.a);
            auto right = left ? build(s.b) : std::nullopt;
            if (left && right) {
                out_.tree_edges.push_back({node, *left});
                out_.tree_edges.push_back({node, *right});
                return node;
            }
            out_.node_count = nodes;
            out_.tree_edges.resize(edges);
        }
        failed_.insert(A);
        return std::nullopt;
    }
};

} // namespace

std::optional<Carving> diwidth_greedy(const Didrawing& g, int k) {
    require_two_weak(g);
    return GreedyCarver(g, k).run();
}

std::optional<WidthResult> diwidth_greedy_bound(const Didrawing& g, int k_max) {
    require_two_weak(g);
    for (int k = 0; k <= k_max; ++k)
        if (auto c = GreedyCarver(g, k).run()) return WidthResult{*diwidth_of(g, *c), *c};
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Good curves and dart partitions

std::optional<DartPartition> curve_partition(const Didrawing& g, const GoodCurve& curve) {
    const Digraph& G = g.graph();
    int n = G.vertex_count(), m = static_cast<int>(curve.steps.size());
    if (m < 1 || static_cast<int>(curve.regions.size()) != m) return std::nullopt;
    // A single step must leave a region through a vertex and come back to it.
    if (m == 1 && (curve.steps[0].vertex < 0 || curve.steps[0].enter_corner == curve.steps[0].exit_corner))
        return std::nullopt;
    std::vector<char> region_used(g.face_count(), 0), crossed(G.edge_count(), 0), on_curve(n, 0);
    std::vector<char> corner_cut(G.dart_count(), 0);
    for (int i = 0; i < m; ++i) {
        int r = curve.regions[i], next = curve.regions[(i + 1) % m];
        if (r < 0 || r >= g.face_count() || region_used[r]) return std::nullopt;
        region_used[r] = 1;
        const CurveStep& s = curve.steps[i];
        if ((s.edge >= 0) == (s.vertex >= 0)) return std::nullopt;
        if (s.edge >= 0) {
            int lf = g.left_face(s.edge), rf = g.right_face(s.edge);
            if (crossed[s.edge] || lf == rf || !((lf == r && rf == next) || (lf == next && rf == r)))
                return std::nullopt;
            crossed[s.edge] = 1;
        } else {
            int v = s.vertex;
            if (on_curve[v] || s.enter_corner < 0 || s.exit_corner < 0) return std::nullopt;
            if (G.dart_vertex(s.enter_corner) != v || G.dart_vertex(s.exit_corner) != v) return std::nullopt;
            if (g.corner_face(s.enter_corner) != r || g.corner_face(s.exit_corner) != next) return std::nullopt;
            on_curve[v] = 1;
            corner_cut[s.enter_corner] = corner_cut[s.exit_corner] = 1;
        }
    }
    // Elements: vertex v off the curve -> v; edge interiors -> n + 2e (tail
    // half, or the whole edge when uncrossed) and n + 2e + 1 (head half).
    UnionFind uf(n + 2 * G.edge_count());
    constexpr int kCut = -1;
    for (int f = 0; f < g.face_count(); ++f) {
        std::vector<int> items;
        for (int d : g.face(f)) {
            int o = G.dart_vertex(d), e = d >> 1;
            if (!on_curve[o]) items.push_back(o);
            else if (corner_cut[g.ccw_next(d)]) items.push_back(kCut);
            if (crossed[e]) {
                int near = n + 2 * e + (d & 1), far = n + 2 * e + 1 - (d & 1);
                items.push_back(near);
                items.push_back(kCut);
                items.push_back(far);
            } else {
                items.push_back(n + 2 * e);
            }
        }
        std::vector<std::size_t> cuts;
        for (std::size_t t = 0; t < items.size(); ++t)
            if (items[t] == kCut) cuts.push_back(t);
        if (cuts.size() != 0 && cuts.size() != 2) return std::nullopt;
        if ((cuts.size() == 2) != (region_used[f] != 0)) return std::nullopt;
        std::size_t start = cuts.empty() ? 0 : cuts[0];
        int anchor = -1;
        for (std::size_t s = 1; s <= items.size(); ++s) {
            int x = items[(start + s) % items.size()];
            if (x == kCut) {
                anchor = -1;
                continue;
            }
            if (anchor >= 0) uf.unite(anchor, x);
            anchor = x;
        }
    }
    // A dart at a vertex on the curve goes with its own half of the edge.
    auto half = [&](int d) { return n + 2 * (d >> 1) + (crossed[d >> 1] ? (d & 1) : 0); };
    auto dart_element = [&](int d) { return on_curve[G.dart_vertex(d)] ? half(d) : G.dart_vertex(d); };
    std::set<int> roots;
    for (int d = 0; d < G.dart_count(); ++d) roots.insert(uf.find(dart_element(d)));
    if (roots.size() != 2) return std::nullopt;

    DartPartition p;
    p.side.assign(G.dart_count(), 0);
    int zero = uf.find(dart_element(0));
    for (int d = 0; d < G.dart_count(); ++d) p.side[d] = uf.find(dart_element(d)) != zero;
    for (int i = 0; i < m; ++i) {
        const CurveStep& in = curve.steps[(i + m - 1) % m];
        const CurveStep& out = curve.steps[i];
        if (in.edge < 0 || out.edge < 0) continue;
        if (uf.find(dart_element(2 * in.edge + 1)) != uf.find(dart_element(2 * out.edge + 1))) ++p.change_regions;
    }
    p.vertices_on_curve = static_cast<int>(std::count(on_curve.begin(), on_curve.end(), 1));
    return p;
}

void enumerate_good_curves(const Didrawing& g,
                           const std::function<void(const GoodCurve&, const DartPartition&)>& visit) {
    require_two_edge_connected(g);
    const Digraph& G = g.graph();
    int F = g.face_count();
    std::vector<std::vector<std::pair<int, int>>> edge_steps(F);  // (edge, other face)
    for (int e = 0; e < G.edge_count(); ++e) {
        int lf = g.left_face(e), rf = g.right_face(e);
        if (lf == rf) continue;
        edge_steps[lf].push_back({e, rf});
        edge_steps[rf].push_back({e, lf});
    }
    std::vector<std::vector<int>> corners_in(F), corners_at(G.vertex_count());
    for (int a = 0; a < G.dart_count(); ++a) {
        corners_in[g.corner_face(a)].push_back(a);
        corners_at[G.dart_vertex(a)].push_back(a);
    }
    GoodCurve curve;
    std::vector<char> region_used(F, 0), crossed(G.edge_count(), 0), on_curve(G.vertex_count(), 0);

    std::function<void(int, int)> extend = [&](int start, int r) {
        auto step_to = [&](int next, const CurveStep& s, auto&& apply, auto&& undo) {
            if (next == start) {
                if (curve.steps.empty() && s.vertex < 0) return;
                curve.steps.push_back(s);
                if (auto p = curve_partition(g, curve)) visit(curve, *p);
                curve.steps.pop_back();
                return;
            }
            if (next < start || region_used[next]) return;
            apply();
            region_used[next] = 1;
            curve.steps.push_back(s);
            curve.regions.push_back(next);
            extend(start, next);
            curve.regions.pop_back();
            curve.steps.pop_back();
            region_used[next] = 0;
            undo();
        };
        for (auto [e, next] : edge_steps[r]) {
            if (crossed[e]) continue;
            CurveStep s;
            s.edge = e;
            step_to(
                next, s,
                [&] { crossed[e] = 1; }, [&] { crossed[e] = 0; });
        }
        for (int a : corners_in[r]) {
            int v = G.dart_vertex(a);
            if (on_curve[v]) continue;
            for (int b : corners_at[v]) {
                int next = g.corner_face(b);
                if (b == a || (next == r && !(r == start && curve.steps.empty()))) continue;
                CurveStep s;
                s.vertex = v;
                s.enter_corner = a;
                s.exit_corner = b;
                step_to(
                    next, s,
                    [&] { on_curve[v] = 1; }, [&] { on_curve[v] = 0; });
            }
        }
    };
    for (int start = 0; start < F; ++start) {
        region_used[start] = 1;
        curve.regions = {start};
        curve.steps.clear();
        extend(start, start);
        region_used[start] = 0;
    }
}

std::map<std::uint64_t, int> sensible_partitions(const Didrawing& g) {
    if (g.dart_count() > 64) throw Error(Errc::ScaleExceeded, "sensible partitions limited to 64 darts");
    std::map<std::uint64_t, int> table;
    enumerate_good_curves(g, [&](const GoodCurve&, const DartPartition& p) {
        std::uint64_t key = 0;
        for (std::size_t d = 0; d < p.side.size(); ++d)
            if (p.side[d]) key |= std::uint64_t(1) << d;
        auto [it, fresh] = table.emplace(key, p.cost());
        if (!fresh) it->second = std::min(it->second, p.cost());
    });
    return table;
}

std::optional<int> dart_width_of(const Carving& c, const std::map<std::uint64_t, int>& sensible) {
    int width = 0;
    for (const auto& side : c.sides()) {
        std::uint64_t key = 0;
        bool flip = side[0] != 0;
        for (std::size_t d = 0; d < side.size(); ++d)
            if ((side[d] != 0) != flip) key |= std::uint64_t(1) << d;
        auto it = sensible.find(key);
        if (it == sensible.end()) return std::nullopt;
        width = std::max(width, it->second);
    }
    return width;
}

WidthResult dart_width_exact(const Didrawing& g) {
    require_two_edge_connected(g);
    int n = g.dart_count();
    check_scale(n, "dart-width");
    auto table = sensible_partitions(g);
    std::vector<int> cost(std::size_t(1) << n, kInf);
    for (auto [key, c] : table) cost[key] = c;
    return carve(n, cost);
}

WidthResult dart_width_via_blowup(const Didrawing& g) {
    require_two_edge_connected(g);
    Blowup b = blow_up(g);
    WidthResult source;
    if (b.J.vertex_count() <= kExactWidthMaxElements) {
        source = diwidth_exact(b.J);
    } else {
        auto r = diwidth_greedy_bound(b.J, 2 * b.J.edge_count());
        if (!r) throw Error(Errc::PreconditionViolated, "no carving of the blowup found");
        source = *r;
    }
    return {source.width, transfer_carving(b, source.carving)};
}

} // namespace diwallkit

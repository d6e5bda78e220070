#include "diwallkit/error.hpp"
#include "diwallkit/walls.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace diwallkit {

namespace {

class Search {
public:
    Search(const Digraph& G, const Digraph& H, const std::vector<std::vector<std::vector<int>>>& candidates)
        : G_(G), H_(H), candidates_(candidates), out_(G.vertex_count()), owner_(G.vertex_count(), -1),
          busy_(G.vertex_count(), 0), edge_used_(G.edge_count(), 0) {
        for (int e = 0; e < G.edge_count(); ++e) out_[G.edge(e).tail].push_back({G.edge(e).head, e});
        for (auto& l : out_) std::sort(l.begin(), l.end());
        order_vertices();
        model_.branch.assign(H.vertex_count(), {});
        model_.paths.assign(H.edge_count(), {});
    }

    std::optional<SubdivisionModel> run() {
        if (place(0)) return model_;
        return std::nullopt;
    }

private:
    const Digraph& G_;
    const Digraph& H_;
    const std::vector<std::vector<std::vector<int>>>& candidates_;
    std::vector<std::vector<std::pair<int, int>>> out_;
    std::vector<int> order_, position_;
    std::vector<std::vector<int>> new_edges_;  // H edges completed by placing order_[i]
    std::vector<int> owner_;                   // H vertex whose branch set holds x, or -1
    std::vector<char> busy_;                   // in a branch set or inside a path
    std::vector<char> edge_used_;
    SubdivisionModel model_;

    // BFS over the undirected H from its highest-degree vertex, per component.
    void order_vertices() {
        int n = H_.vertex_count();
        std::vector<std::vector<int>> adj(n);
        for (const Edge& e : H_.edges()) {
            adj[e.tail].push_back(e.head);
            adj[e.head].push_back(e.tail);
        }
        for (auto& l : adj) std::sort(l.begin(), l.end());
        std::vector<int> by_degree(n);
        for (int v = 0; v < n; ++v) by_degree[v] = v;
        std::stable_sort(by_degree.begin(), by_degree.end(),
                         [&](int a, int b) { return H_.degree(a) > H_.degree(b); });
        position_.assign(n, -1);
        for (int root : by_degree) {
            if (position_[root] >= 0) continue;
            std::deque<int> q{root};
            position_[root] = static_cast<int>(order_.size());
            order_.push_back(root);
            while (!q.empty()) {
                int x = q.front();
                q.pop_front();
                for (int y : adj[x])
                    if (position_[y] < 0) {
                        position_[y] = static_cast<int>(order_.size());
                        order_.push_back(y);
                        q.push_back(y);
                    }
            }
        }
        new_edges_.assign(n, {});
        for (int e = 0; e < H_.edge_count(); ++e) {
            int last = std::max(position_[H_.edge(e).tail], position_[H_.edge(e).head]);
            new_edges_[last].push_back(e);
        }
    }

    bool place(std::size_t idx) {
        if (idx == order_.size()) return true;
        int h = order_[idx];
        for (const auto& set : candidates_[h]) {
            bool free = std::all_of(set.begin(), set.end(), [&](int x) { return !busy_[x]; });
            if (!free) continue;
            for (int x : set) {
                busy_[x] = 1;
                owner_[x] = h;
            }
            model_.branch[h] = set;
            if (route(idx, 0)) return true;
            for (int x : set) {
                busy_[x] = 0;
                owner_[x] = -1;
            }
        }
        return false;
    }

    // Can every pending edge still reach its head through free vertices?
    bool feasible(const std::vector<int>& pending, std::size_t from) const {
        for (std::size_t t = from; t < pending.size(); ++t) {
            const Edge& he = H_.edge(pending[t]);
            std::vector<char> seen(G_.vertex_count(), 0);
            std::deque<int> q;
            for (int x : model_.branch[he.tail]) {
                seen[x] = 1;
                q.push_back(x);
            }
            bool hit = false;
            while (!q.empty() && !hit) {
                int x = q.front();
                q.pop_front();
                for (auto [y, e] : out_[x]) {
                    if (edge_used_[e]) continue;
                    if (owner_[y] == he.head) {
                        hit = true;
                        break;
                    }
                    if (busy_[y] || seen[y]) continue;
                    seen[y] = 1;
                    q.push_back(y);
                }
            }
            if (!hit) return false;
        }
        return true;
    }

    bool route(std::size_t idx, std::size_t t) {
        const auto& pending = new_edges_[idx];
        if (!feasible(pending, t)) return false;
        if (t == pending.size()) return place(idx + 1);
        int he = pending[t];
        int target = H_.edge(he).head;
        std::vector<int>& path = model_.paths[he];
        path.clear();
        // DFS over simple paths; interior vertices become busy while on the path.
        std::function<bool(int)> extend = [&](int x) {
            for (auto [y, e] : out_[x]) {
                if (edge_used_[e]) continue;
                if (owner_[y] == target) {
                    path.push_back(e);
                    edge_used_[e] = 1;
                    if (route(idx, t + 1)) return true;
                    edge_used_[e] = 0;
                    path.pop_back();
                    continue;
                }
                if (busy_[y]) continue;
                busy_[y] = 1;
                path.push_back(e);
                edge_used_[e] = 1;
                if (extend(y)) return true;
                edge_used_[e] = 0;
                path.pop_back();
                busy_[y] = 0;
            }
            return false;
        };
        for (int x : model_.branch[H_.edge(he).tail])
            if (extend(x)) return true;
        return false;
    }
};

} // namespace

bool scale_override_requested(const EmbedOptions& options) {
    return options.scale_override || std::getenv("DIWALLKIT_SCALE_OVERRIDE") != nullptr;
}

std::optional<SubdivisionModel> find_branch_model(const Digraph& G, const Digraph& H,
                                                  const std::vector<std::vector<std::vector<int>>>& candidates) {
    if (static_cast<int>(candidates.size()) != H.vertex_count())
        throw Error(Errc::PreconditionViolated, "one candidate list per pattern vertex expected");
    if (H.vertex_count() == 0) return SubdivisionModel{};
    return Search(G, H, candidates).run();
}

std::optional<SubdivisionModel> embeds(const Digraph& G, const Digraph& H, const EmbedOptions& options) {
    if (!scale_override_requested(options) &&
        (H.edge_count() > kEmbedMaxPatternEdges || G.vertex_count() > kEmbedMaxHostVertices)) {
        std::ostringstream os;
        os << "embedding search limited to |E(H)| <= " << kEmbedMaxPatternEdges << " and |V(G)| <= "
           << kEmbedMaxHostVertices << " (got " << H.edge_count() << ", " << G.vertex_count() << ")";
        throw Error(Errc::ScaleExceeded, os.str());
    }
    if (H.vertex_count() > G.vertex_count()) return std::nullopt;
    std::vector<std::vector<std::vector<int>>> candidates(H.vertex_count());
    for (int h = 0; h < H.vertex_count(); ++h)
        for (int g = 0; g < G.vertex_count(); ++g)
            if (G.out_degree(g) >= H.out_degree(h) && G.in_degree(g) >= H.in_degree(h)) candidates[h].push_back({g});
    return find_branch_model(G, H, candidates);
}

CheckResult verify_model(const Digraph& G, const Digraph& H, const SubdivisionModel& model, bool strong_branch_sets) {
    if (static_cast<int>(model.branch.size()) != H.vertex_count() ||
        static_cast<int>(model.paths.size()) != H.edge_count())
        return CheckResult::fail("model size does not match the pattern");
    std::vector<int> owner(G.vertex_count(), -1);
    for (int h = 0; h < H.vertex_count(); ++h) {
        const auto& set = model.branch[h];
        if (set.empty()) return CheckResult::fail("empty branch set");
        if (!strong_branch_sets && set.size() != 1) return CheckResult::fail("branch sets must be single vertices");
        std::vector<char> mask(G.vertex_count(), 0);
        for (int x : set) {
            if (x < 0 || x >= G.vertex_count()) return CheckResult::fail("branch vertex out of range");
            if (owner[x] >= 0) return CheckResult::fail("branch sets overlap");
            owner[x] = h;
            mask[x] = 1;
        }
        if (strong_branch_sets && !induces_strongly_connected(G, mask))
            return CheckResult::fail("branch set is not strongly connected");
    }
    std::vector<char> interior(G.vertex_count(), 0), used(G.edge_count(), 0);
    for (int he = 0; he < H.edge_count(); ++he) {
        const auto& path = model.paths[he];
        if (path.empty()) return CheckResult::fail("empty path for " + H.edge_name(he));
        int at = G.edge(path.front()).tail;
        if (owner[at] != H.edge(he).tail) return CheckResult::fail("path does not leave the tail's branch set");
        for (std::size_t t = 0; t < path.size(); ++t) {
            int e = path[t];
            if (e < 0 || e >= G.edge_count() || G.edge(e).tail != at) return CheckResult::fail("path is not directed");
            if (used[e]) return CheckResult::fail("edge used twice");
            used[e] = 1;
            at = G.edge(e).head;
            if (t + 1 < path.size()) {
                if (owner[at] >= 0 || interior[at]) return CheckResult::fail("paths are not internally disjoint");
                interior[at] = 1;
            }
        }
        if (owner[at] != H.edge(he).head) return CheckResult::fail("path does not reach the head's branch set");
    }
    return {};
}

} // namespace diwallkit

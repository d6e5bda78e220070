#include "diwallkit/multicut.hpp"

#include "diwallkit/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace diwallkit {

bool is_pattern(const Pattern& pi) {
    return !pi.empty() && std::all_of(pi.begin(), pi.end(), [](int x) { return x == 1 || x == -1; });
}

bool is_alternating(const Pattern& pi) {
    if (!is_pattern(pi)) return false;
    for (std::size_t i = 0; i + 1 < pi.size(); ++i)
        if (pi[i] == pi[i + 1]) return false;
    return true;
}

Pattern negated(const Pattern& pi) {
    Pattern out(pi);
    for (int& x : out) x = -x;
    return out;
}

Pattern extended(const Pattern& pi) {
    Pattern out;
    out.push_back(-pi.front());
    out.insert(out.end(), pi.begin(), pi.end());
    out.push_back(-pi.back());
    return out;
}

Pattern parse_pattern(std::string_view text) {
    Pattern out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '+') {
            out.push_back(1);
        } else if (c == '-') {
            if (i + 1 < text.size() && text[i + 1] == '1') ++i;
            out.push_back(-1);
        } else if (c == '1') {
            out.push_back(1);
        } else if (c != ',' && c != ' ') {
            throw Error(Errc::ParseError, "pattern: unexpected character '" + std::string(1, c) + "'");
        }
    }
    if (out.empty()) throw Error(Errc::ParseError, "pattern: empty");
    return out;
}

std::vector<int> Multicut::levels(int vertex_count) const {
    std::vector<int> lv(vertex_count, -1);
    for (int i = 0; i < static_cast<int>(parts.size()); ++i)
        for (int x : parts[i])
            if (x >= 0 && x < vertex_count) lv[x] = i;
    return lv;
}

Multicut Multicut::from_levels(std::span<const int> levels, const Pattern& pattern) {
    Multicut mc;
    mc.pattern = pattern;
    mc.parts.assign(pattern.size() + 1, {});
    for (int x = 0; x < static_cast<int>(levels.size()); ++x)
        if (levels[x] >= 0) mc.parts[levels[x]].push_back(x);
    return mc;
}

bool verify_multicut(const Digraph& g, int u, int v, const Pattern& pi, const Multicut& mc) {
    if (!is_pattern(pi) || mc.k() != static_cast<int>(pi.size())) return false;
    std::vector<int> lv(g.vertex_count(), -1);
    for (int i = 0; i <= mc.k(); ++i)
        for (int x : mc.parts[i]) {
            if (x < 0 || x >= g.vertex_count() || lv[x] >= 0) return false;
            lv[x] = i;
        }
    if (std::count(lv.begin(), lv.end(), -1) != 0) return false;
    if (lv[u] != 0 || lv[v] != mc.k()) return false;
    for (const Edge& e : g.edges()) {
        int a = lv[e.tail], b = lv[e.head];
        if (std::abs(a - b) >= 2) return false;
        if (b == a + 1 && pi[a] == -1) return false;
        if (a == b + 1 && pi[b] == 1) return false;
    }
    return true;
}

std::vector<int> crossing_profile(const Digraph& g, std::span<const int> path_darts, const Multicut& mc) {
    auto lv = mc.levels(g.vertex_count());
    std::vector<int> out(mc.k(), 0);
    for (int d : path_darts) {
        const Edge& e = g.edge(dart_edge(d));
        int a = lv[e.tail], b = lv[e.head];
        if (a >= 0 && b >= 0 && std::abs(a - b) == 1) ++out[std::min(a, b)];
    }
    return out;
}

int crossing_count(const Digraph& g, const Multicut& mc) {
    auto lv = mc.levels(g.vertex_count());
    int c = 0;
    for (const Edge& e : g.edges())
        if (std::abs(lv[e.tail] - lv[e.head]) == 1) ++c;
    return c;
}

namespace {

// A digraph whose vertices are classes of original vertices; edges keep
// their original ids so witness paths can be lifted.
struct Quotient {
    int n = 0;
    std::vector<int> tail, head, id;
};

Quotient contract(const Quotient& q, const std::vector<int>& cls, int classes) {
    Quotient out;
    out.n = classes;
    for (std::size_t i = 0; i < q.id.size(); ++i) {
        int a = cls[q.tail[i]], b = cls[q.head[i]];
        if (a == b) continue;
        out.tail.push_back(a);
        out.head.push_back(b);
        out.id.push_back(q.id[i]);
    }
    return out;
}

// Vertex reached from `start` by walking the listed original edges of q.
int walk_end(const Quotient& q, int start, const std::vector<int>& path, const std::map<int, int>& pos) {
    int x = start;
    for (int id : path) {
        int i = pos.at(id);
        x = q.tail[i] == x ? q.head[i] : q.tail[i];
    }
    return x;
}

struct Result {
    bool found = false;
    std::vector<int> level;  // per quotient vertex
    std::vector<int> path;   // original edge ids from u
};

Result solve(Quotient q, int u, int v, Pattern pi) {
    // Loops were dropped by contract(); reverse so that the last term is +1.
    if (pi.back() == -1) {
        std::swap(q.tail, q.head);
        pi = negated(pi);
    }
    const int k = static_cast<int>(pi.size());
    std::map<int, int> pos;
    for (std::size_t i = 0; i < q.id.size(); ++i) pos[q.id[i]] = static_cast<int>(i);

    if (k == 1) {
        // A_1 must be closed under out-edges and contain v.
        std::vector<char> reach(q.n, 0);
        std::vector<int> parent_edge(q.n, -1), stack{v};
        reach[v] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (std::size_t i = 0; i < q.id.size(); ++i)
                if (q.tail[i] == x && !reach[q.head[i]]) {
                    reach[q.head[i]] = 1;
                    parent_edge[q.head[i]] = static_cast<int>(i);
                    stack.push_back(q.head[i]);
                }
        }
        Result r;
        if (!reach[u]) {
            r.found = true;
            r.level.resize(q.n);
            for (int x = 0; x < q.n; ++x) r.level[x] = reach[x] ? 1 : 0;
            return r;
        }
        // Directed path v -> u, reported from u.
        for (int x = u; x != v; x = q.tail[parent_edge[x]]) r.path.push_back(q.id[parent_edge[x]]);
        return r;
    }

    int out_edge = -1;
    for (std::size_t i = 0; i < q.id.size(); ++i)
        if (q.tail[i] == v) {
            out_edge = static_cast<int>(i);
            break;
        }

    if (out_edge >= 0) {
        int w = q.head[out_edge];
        if (w == u) return Result{false, {}, {q.id[out_edge]}};
        // w must share the last part with v.
        std::vector<int> cls(q.n);
        int next = 0;
        for (int x = 0; x < q.n; ++x) cls[x] = (x == w) ? -1 : next++;
        cls[w] = cls[v];
        Result sub = solve(contract(q, cls, next), cls[u], cls[v], pi);
        Result r;
        r.found = sub.found;
        if (sub.found) {
            r.level.resize(q.n);
            for (int x = 0; x < q.n; ++x) r.level[x] = sub.level[cls[x]];
        } else {
            r.path = sub.path;
            if (walk_end(q, u, r.path, pos) == w) r.path.push_back(q.id[out_edge]);
        }
        return r;
    }

    // Every edge at v points into v; merge v with its in-neighbours N.
    std::vector<char> in_n(q.n, 0);
    std::vector<int> into_v(q.n, -1);
    for (std::size_t i = 0; i < q.id.size(); ++i)
        if (q.head[i] == v) {
            in_n[q.tail[i]] = 1;
            if (into_v[q.tail[i]] < 0) into_v[q.tail[i]] = static_cast<int>(i);
        }
    if (in_n[u]) return Result{false, {}, {q.id[into_v[u]]}};
    std::vector<int> cls(q.n);
    int next = 0;
    for (int x = 0; x < q.n; ++x) cls[x] = (in_n[x] || x == v) ? -1 : next++;
    int merged = next++;
    for (int x = 0; x < q.n; ++x)
        if (cls[x] < 0) cls[x] = merged;
    Pattern shorter(pi.begin(), pi.end() - 1);
    Result sub = solve(contract(q, cls, next), cls[u], merged, shorter);
    Result r;
    r.found = sub.found;
    if (sub.found) {
        r.level.resize(q.n);
        for (int x = 0; x < q.n; ++x) r.level[x] = sub.level[cls[x]];
        for (int x = 0; x < q.n; ++x)
            if (in_n[x]) r.level[x] = k - 1;
        r.level[v] = k;
    } else {
        r.path = sub.path;
        int end = walk_end(q, u, r.path, pos);
        if (end != v) r.path.push_back(q.id[into_v[end]]);
    }
    return r;
}

std::vector<int> edges_to_darts(const Digraph& g, int u, const std::vector<int>& edges) {
    std::vector<int> darts;
    int x = u;
    for (int e : edges) {
        const Edge& ed = g.edge(e);
        int d = ed.tail == x ? 2 * e : 2 * e + 1;
        darts.push_back(d);
        x = g.dart_target(d);
    }
    return darts;
}

} // namespace

MulticutSearch find_multicut_or_path(const Digraph& g, int u, int v, const Pattern& pi) {
    if (!is_pattern(pi)) throw Error(Errc::PreconditionViolated, "pattern terms must be +1 or -1");
    if (u == v) throw Error(Errc::SameVertex, "u and v must differ");
    if (!is_weakly_connected(g)) throw Error(Errc::NotOneWeak, "digraph is not weakly connected");
    Quotient q;
    q.n = g.vertex_count();
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.edge(e).is_loop()) continue;
        q.tail.push_back(g.edge(e).tail);
        q.head.push_back(g.edge(e).head);
        q.id.push_back(e);
    }
    Result r = solve(std::move(q), u, v, pi);
    MulticutSearch out;
    if (r.found)
        out.multicut = Multicut::from_levels(r.level, pi);
    else
        out.witness_path = edges_to_darts(g, u, r.path);
    return out;
}

std::optional<Multicut> find_multicut(const Digraph& g, int u, int v, const Pattern& pi) {
    return find_multicut_or_path(g, u, v, pi).multicut;
}

Multicut connectify(const Digraph& g, int u, int v, const Multicut& input) {
    if (!verify_multicut(g, u, v, input.pattern, input)) throw Error(Errc::InvalidMulticut, "input is not a multicut");
    const int n = g.vertex_count();
    const int k = input.k();
    std::vector<int> lv = input.levels(n);
    int crossings = crossing_count(g, input);

    // Least component (by sorted vertex list) of the masked subgraph that
    // avoids `keep`, or empty if the mask is connected.
    auto stray = [&](const std::vector<char>& mask, int keep) {
        Components c = weak_components(g, mask);
        std::vector<int> best;
        if (c.count <= 1) return best;
        std::vector<std::vector<int>> comps(c.count);
        for (int x = 0; x < n; ++x)
            if (c.component[x] >= 0) comps[c.component[x]].push_back(x);
        for (auto& comp : comps) {
            if (std::find(comp.begin(), comp.end(), keep) != comp.end()) continue;
            if (best.empty() || comp < best) best = comp;
        }
        return best;
    };

    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 1; i <= k && !changed; ++i) {
            std::vector<char> prefix(n), suffix(n);
            for (int x = 0; x < n; ++x) {
                prefix[x] = lv[x] < i;
                suffix[x] = lv[x] >= i;
            }
            if (auto y = stray(prefix, u); !y.empty()) {
                for (int x : y) lv[x] = i;
                changed = true;
            } else if (auto z = stray(suffix, v); !z.empty()) {
                for (int x : z) lv[x] = i - 1;
                changed = true;
            }
        }
        if (changed) {
            Multicut step = Multicut::from_levels(lv, input.pattern);
            int now = crossing_count(g, step);
            if (!verify_multicut(g, u, v, input.pattern, step) || now >= crossings)
                throw Error(Errc::InvalidMulticut, "exchange step failed; the digraph is probably not 1-weak");
            crossings = now;
        }
    }
    return Multicut::from_levels(lv, input.pattern);
}

std::vector<std::tuple<int, int, int>> Concatenation::merged_segments() const {
    std::vector<std::tuple<int, int, int>> out;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        int a = breakpoints[i], b = breakpoints[i + 1];
        if (a == b) continue;
        if (!out.empty() && std::get<2>(out.back()) == signs[i] && std::get<1>(out.back()) == a)
            std::get<1>(out.back()) = b;
        else
            out.emplace_back(a, b, signs[i]);
    }
    return out;
}

namespace {

void check_path(const Digraph& g, std::span<const int> darts) {
    if (darts.empty()) throw Error(Errc::NotPath, "path has no edges");
    std::set<int> seen{g.dart_vertex(darts.front())};
    for (std::size_t i = 0; i < darts.size(); ++i) {
        int d = darts[i];
        if (d < 0 || d >= g.dart_count()) throw Error(Errc::NotPath, "unknown dart");
        if (i > 0 && g.dart_vertex(d) != g.dart_target(darts[i - 1])) throw Error(Errc::NotPath, "darts do not meet");
        if (!seen.insert(g.dart_target(d)).second) throw Error(Errc::NotPath, "vertex repeated");
    }
}

} // namespace

bool verify_concatenation(const Digraph& g, std::span<const int> path_darts, const Concatenation& c) {
    const int m = static_cast<int>(path_darts.size());
    if (c.breakpoints.size() != c.signs.size() + 1 || c.breakpoints.front() != 0 || c.breakpoints.back() != m)
        return false;
    for (std::size_t i = 0; i + 1 < c.breakpoints.size(); ++i) {
        int a = c.breakpoints[i], b = c.breakpoints[i + 1];
        if (a > b) return false;
        for (int j = a; j < b; ++j)
            if ((dart_is_head(path_darts[j]) ? -1 : 1) != c.signs[i]) return false;
    }
    (void)g;
    return true;
}

PathCase path_case(const Digraph& g, std::span<const int> path_darts, const Pattern& pi) {
    if (!is_alternating(pi)) throw Error(Errc::NotAlternating, "pattern must alternate");
    check_path(g, path_darts);
    const int m = static_cast<int>(path_darts.size());
    const int k = static_cast<int>(pi.size());
    std::vector<int> sign(m);
    for (int j = 0; j < m; ++j) sign[j] = dart_is_head(path_darts[j]) ? -1 : 1;

    // A multicut exists iff pi is a subsequence of the edge signs; the
    // earliest matching gives monotone levels.
    std::vector<int> match;
    for (int j = 0; j < m && static_cast<int>(match.size()) < k; ++j)
        if (sign[j] == pi[match.size()]) match.push_back(j);

    PathCase out;
    if (static_cast<int>(match.size()) == k) {
        std::vector<int> lv(g.vertex_count(), -1);
        int level = 0;
        lv[g.dart_vertex(path_darts[0])] = 0;
        for (int j = 0, t = 0; j < m; ++j) {
            if (t < k && match[t] == j) {
                ++level;
                ++t;
            }
            lv[g.dart_target(path_darts[j])] = level;
        }
        out.multicut = Multicut::from_levels(lv, pi);
        return out;
    }

    // Otherwise cover the maximal runs greedily with the segments of -pi.
    Pattern sigma = negated(pi);
    Concatenation c;
    c.signs = sigma;
    c.breakpoints.push_back(0);
    int seg = 0;
    for (int j = 0; j < m;) {
        int r = j;
        while (r < m && sign[r] == sign[j]) ++r;
        while (seg < k && sigma[seg] != sign[j]) {
            c.breakpoints.push_back(j);
            ++seg;
        }
        if (seg == k) throw Error(Errc::PreconditionViolated, "path admits neither certificate");
        c.breakpoints.push_back(r);
        ++seg;
        j = r;
    }
    while (seg < k) {
        c.breakpoints.push_back(m);
        ++seg;
    }
    out.concatenation = c;
    return out;
}

} // namespace diwallkit

#include "diwallkit/rings.hpp"

#include "diwallkit/duality.hpp"
#include "diwallkit/error.hpp"
#include "diwallkit/multicut.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace diwallkit {

std::vector<int> RingArcs::block(int i) const {
    int start = 0;
    for (int t = 0; t < i - 1; ++t) start += sizes[t];
    return std::vector<int>(order.begin() + start, order.begin() + start + sizes[i - 1]);
}

RingArcs make_arcs(const Didrawing& g, int v, int first, std::array<int, 4> sizes) {
    const Digraph& G = g.graph();
    if (v < 0 || v >= G.vertex_count()) throw Error(Errc::PreconditionViolated, "ring vertex out of range");
    if (first < 0 || first >= G.dart_count() || G.dart_vertex(first) != v)
        throw Error(Errc::PreconditionViolated, "first arc dart is not at the ring vertex");
    int total = 0;
    for (int s : sizes) {
        if (s < 0) throw Error(Errc::PreconditionViolated, "negative arc size");
        total += s;
    }
    if (total != static_cast<int>(g.rotation(v).size()))
        throw Error(Errc::PreconditionViolated, "arc sizes must add up to the degree of the ring vertex");
    RingArcs arcs;
    arcs.vertex = v;
    arcs.sizes = sizes;
    int d = first;
    for (int t = 0; t < total; ++t, d = g.ccw_next(d)) arcs.order.push_back(d);
    return arcs;
}

std::vector<int> arc_regions(const Didrawing& g, const RingArcs& arcs, int i) {
    // The region between anticlockwise neighbours a, b at v is corner_face(b).
    int m = static_cast<int>(arcs.order.size());
    int start = 0;
    for (int t = 0; t < i - 1; ++t) start += arcs.sizes[t];
    std::vector<int> out;
    for (int t = 0; t <= arcs.sizes[i - 1]; ++t) out.push_back(g.corner_face(arcs.order[(start + t) % m]));
    return out;
}

namespace {

// Anticlockwise position of each dart at v.
std::map<int, int> anticlockwise_positions(const Didrawing& g, int v) {
    std::map<int, int> pos;
    const auto& rot = g.rotation(v);
    int m = static_cast<int>(rot.size());
    for (int t = 0; t < m; ++t) pos[rot[(m - t) % m]] = t;
    return pos;
}

CheckResult check_cycle(const Digraph& G, int v, const std::vector<int>& c) {
    if (c.empty()) return CheckResult::fail("empty cycle");
    int at = v;
    std::set<int> seen;
    for (int e : c) {
        if (e < 0 || e >= G.edge_count() || G.edge(e).tail != at) return CheckResult::fail("cycle is not directed");
        if (!seen.insert(at).second) return CheckResult::fail("cycle repeats a vertex");
        at = G.edge(e).head;
    }
    if (at != v) return CheckResult::fail("cycle does not return to the ring vertex");
    return {};
}

// Vertices of the cycle other than v, in order from the edge leaving v.
std::vector<int> inner_vertices(const Digraph& G, const std::vector<int>& cycle) {
    std::vector<int> out;
    for (std::size_t t = 0; t + 1 < cycle.size(); ++t) out.push_back(G.edge(cycle[t]).head);
    return out;
}

} // namespace

std::vector<char> cycle_sides(const Didrawing& g, const std::vector<int>& cycle_edges) {
    std::vector<char> on(g.edge_count(), 0);
    for (int e : cycle_edges) on[e] = 1;
    std::vector<int> side(g.face_count(), -1);
    std::vector<std::vector<std::pair<int, int>>> adj(g.face_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        int a = g.left_face(e), b = g.right_face(e);
        adj[a].push_back({b, e});
        adj[b].push_back({a, e});
    }
    // Faces across a cycle edge lie on opposite sides.
    std::deque<int> q{0};
    side[0] = 0;
    while (!q.empty()) {
        int f = q.front();
        q.pop_front();
        for (auto [h, e] : adj[f]) {
            int s = side[f] ^ on[e];
            if (side[h] < 0) {
                side[h] = s;
                q.push_back(h);
            } else if (side[h] != s) {
                throw Error(Errc::PreconditionViolated, "edge set is not a cycle of the drawing");
            }
        }
    }
    return std::vector<char>(side.begin(), side.end());
}

bool non_crossing(const Didrawing& g, const std::vector<int>& a, const std::vector<int>& b) {
    auto sa = cycle_sides(g, a), sb = cycle_sides(g, b);
    int F = g.face_count();
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            bool a_in_b = true, b_in_a = true;
            for (int f = 0; f < F; ++f) {
                if (sa[f] == x && sb[f] != y) a_in_b = false;
                if (sb[f] == y && sa[f] != x) b_in_a = false;
            }
            if (a_in_b || b_in_a) return true;
        }
    return false;
}

bool is_disjointed(const Digraph& g, const Ring& ring) {
    std::vector<int> owner(g.vertex_count(), -1);
    for (int i = 0; i < ring.size(); ++i)
        for (int x : inner_vertices(g, ring.cycles[i])) {
            if (owner[x] >= 0 && owner[x] != i) return false;
            owner[x] = i;
        }
    return true;
}

CheckResult check_ring(const Didrawing& g, const Ring& ring) {
    const Digraph& G = g.graph();
    int v = ring.vertex;
    if (v < 0 || v >= G.vertex_count()) return CheckResult::fail("ring vertex out of range");
    int k = ring.size();
    if (k == 0) return CheckResult::fail("empty ring");
    std::vector<int> used(G.edge_count(), -1);
    for (int i = 0; i < k; ++i) {
        if (auto r = check_cycle(G, v, ring.cycles[i]); !r) return r;
        for (int e : ring.cycles[i]) {
            if (used[e] >= 0) return CheckResult::fail("cycles share an edge");
            used[e] = i;
        }
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (!non_crossing(g, ring.cycles[i], ring.cycles[j])) {
                std::ostringstream os;
                os << "cycles " << i + 1 << " and " << j + 1 << " cross";
                return CheckResult::fail(os.str());
            }
    // f_1, e_2, f_3, ... then back down to e_1.
    std::vector<int> seq;
    for (int i = 0; i < k; ++i) seq.push_back(i % 2 == 0 ? 2 * ring.in_edge(i) + 1 : 2 * ring.out_edge(i));
    for (int i = k - 1; i >= 0; --i) seq.push_back(i % 2 == 0 ? 2 * ring.out_edge(i) : 2 * ring.in_edge(i) + 1);
    auto pos = anticlockwise_positions(g, v);
    int descents = 0;
    for (std::size_t t = 0; t < seq.size(); ++t)
        if (pos[seq[(t + 1) % seq.size()]] < pos[seq[t]]) ++descents;
    if (descents != 1) return CheckResult::fail("end edges are not in the alternating anticlockwise order");
    if (ring.disjointed && !is_disjointed(G, ring)) return CheckResult::fail("ring marked disjointed shares vertices");
    return {};
}

CheckResult check_ring_from(const Didrawing& g, const Ring& ring, const RingArcs& arcs) {
    if (auto r = check_ring(g, ring); !r) return r;
    if (arcs.vertex != ring.vertex) return CheckResult::fail("arcs belong to another vertex");
    auto r2 = arcs.block(2), r4 = arcs.block(4);
    auto in = [](const std::vector<int>& block, int d) { return std::find(block.begin(), block.end(), d) != block.end(); };
    for (int i = 0; i < ring.size(); ++i) {
        int e = 2 * ring.out_edge(i), f = 2 * ring.in_edge(i) + 1;
        bool ok = i % 2 == 0 ? (in(r4, e) && in(r2, f)) : (in(r2, e) && in(r4, f));
        if (!ok) {
            std::ostringstream os;
            os << "end edges of cycle " << i + 1 << " are not in the expected arcs";
            return CheckResult::fail(os.str());
        }
    }
    return {};
}

RingSearch find_ring(const Didrawing& g, const RingArcs& arcs, int k) {
    const Digraph& G = g.graph();
    int v = arcs.vertex;
    if (k < 1) throw Error(Errc::PreconditionViolated, "ring size must be positive");
    if (v < 0 || v >= G.vertex_count()) throw Error(Errc::PreconditionViolated, "ring vertex out of range");
    for (int d : g.rotation(v))
        if (G.edge(dart_edge(d)).is_loop()) throw Error(Errc::HasLoop, "loop at the ring vertex");
    if (arcs.order.size() != g.rotation(v).size())
        throw Error(Errc::PreconditionViolated, "arcs do not cover the darts at the ring vertex");
    if (!is_weakly_connected(G)) throw Error(Errc::NotOneWeak, "drawing is not weakly connected");
    std::vector<char> rest(G.vertex_count(), 1);
    rest[v] = 0;
    if (G.vertex_count() > 1 && !induces_weakly_connected(G, rest))
        throw Error(Errc::NotOneWeak, "removing the ring vertex disconnects the drawing");

    // H: the right dual with R1 contracted to u and R3 to w.
    int F = g.face_count();
    std::vector<int> hv(F, -1);
    auto r1 = arc_regions(g, arcs, 1), r3 = arc_regions(g, arcs, 3);
    for (int f : r1) hv[f] = 0;
    for (int f : r3) {
        if (hv[f] == 0) throw Error(Errc::SameVertex, "arcs R1 and R3 share a region");
        hv[f] = 1;
    }
    int next = 2;
    for (int f = 0; f < F; ++f)
        if (hv[f] < 0) hv[f] = next++;
    std::set<int> contracted;
    for (int i : {1, 3})
        for (int d : arcs.block(i)) contracted.insert(dart_edge(d));
    Digraph H(next);
    std::vector<int> h_to_g;
    for (int e = 0; e < G.edge_count(); ++e) {
        if (contracted.count(e)) continue;
        int a = hv[g.left_face(e)], b = hv[g.right_face(e)];
        if (a == b) continue;
        H.add_edge(a, b);
        h_to_g.push_back(e);
    }

    Pattern pi(k);
    for (int i = 0; i < k; ++i) pi[i] = i % 2 == 0 ? 1 : -1;
    auto search = find_multicut_or_path(H, 0, 1, pi);
    RingSearch out;
    if (!search.multicut) {
        for (int d : search.witness_path) out.dual_path.push_back(2 * h_to_g[dart_edge(d)] + (d & 1));
        out.change_number = change_number(dual(g).dual, out.dual_path);
        return out;
    }
    Multicut mc = connectify(H, 0, 1, *search.multicut);
    auto level = mc.levels(H.vertex_count());
    Ring ring;
    ring.vertex = v;
    for (int i = 1; i <= k; ++i) {
        std::vector<int> out_at(G.vertex_count(), -1);
        int count = 0;
        for (int h = 0; h < H.edge_count(); ++h) {
            int a = level[H.edge(h).tail], b = level[H.edge(h).head];
            if (std::min(a, b) != i - 1 || std::max(a, b) != i) continue;
            int e = h_to_g[h];
            if (out_at[G.edge(e).tail] >= 0) throw Error(Errc::InvalidMulticut, "cut is not a directed cycle");
            out_at[G.edge(e).tail] = e;
            ++count;
        }
        std::vector<int> cycle;
        int at = v;
        while (out_at[at] >= 0 && static_cast<int>(cycle.size()) < count) {
            cycle.push_back(out_at[at]);
            at = G.edge(out_at[at]).head;
            if (at == v) break;
        }
        if (at != v || static_cast<int>(cycle.size()) != count)
            throw Error(Errc::InvalidMulticut, "cut is not a directed cycle through the ring vertex");
        ring.cycles.push_back(cycle);
    }
    ring.disjointed = is_disjointed(G, ring);
    out.ring = ring;
    return out;
}

Ring thin_ring(const Digraph& g, const Ring& ring, int lambda, int k) {
    if (lambda < 1 || lambda % 2 == 0) throw Error(Errc::NotOdd, "lambda must be a positive odd integer");
    if (k < 1) throw Error(Errc::PreconditionViolated, "ring size must be positive");
    if (ring.size() < lambda * k) {
        std::ostringstream os;
        os << "ring of size " << ring.size() << " is smaller than lambda * k = " << lambda * k;
        throw Error(Errc::RingTooSmall, os.str());
    }
    Ring out;
    out.vertex = ring.vertex;
    for (int i = 0; i < k; ++i) out.cycles.push_back(ring.cycles[i * lambda]);
    if (!is_disjointed(g, out))
        throw Error(Errc::PreconditionViolated, "thinned ring is not disjointed; interleaving exceeds 2 lambda");
    out.disjointed = true;
    return out;
}

CheckResult check_nesting(const Digraph& g, const Ring& C, const Ring& D) {
    if (C.vertex != D.vertex) return CheckResult::fail("rings pass through different vertices");
    std::vector<std::vector<char>> in_d;
    for (const auto& cycle : D.cycles) {
        std::vector<char> mask(g.vertex_count(), 0);
        for (int x : inner_vertices(g, cycle)) mask[x] = 1;
        in_d.push_back(mask);
    }
    for (int h = 0; h < C.size(); ++h) {
        auto row = inner_vertices(g, C.cycles[h]);
        int n = static_cast<int>(row.size());
        // First and last position of each D_j on C_h - v.
        std::vector<int> lo(D.size(), n), hi(D.size(), -1);
        for (int t = 0; t < n; ++t)
            for (int j = 0; j < D.size(); ++j)
                if (in_d[j][row[t]]) {
                    lo[j] = std::min(lo[j], t);
                    hi[j] = std::max(hi[j], t);
                }
        for (int i = 0; i < D.size(); ++i)
            for (int j = i + 1; j < D.size(); ++j) {
                if (hi[i] < 0 || hi[j] < 0) continue;
                if (hi[i] < lo[j] || hi[j] < lo[i]) continue;
                std::ostringstream os;
                os << "C_" << h + 1 << " meets D_" << i + 1 << " and D_" << j + 1 << " interleaved";
                return CheckResult::fail(os.str());
            }
    }
    return {};
}

DiwallLayout rings_to_layout(const Didrawing& g, const Ring& C, const Ring& D) {
    const Digraph& G = g.graph();
    int k = C.size();
    if (k < 2 || k % 2 != 0) throw Error(Errc::NestingViolated, "the row ring needs an even size >= 2");
    if (D.size() != 3 * k) throw Error(Errc::NestingViolated, "the column ring needs size 3k");
    for (const Ring* r : {&C, &D}) {
        if (auto ok = check_ring(g, *r); !ok) throw Error(Errc::NestingViolated, "not an alternating ring: " + ok.reason);
        if (!is_disjointed(G, *r)) throw Error(Errc::NestingViolated, "rings must be disjointed");
    }
    if (auto r = check_nesting(G, C, D); !r) throw Error(Errc::NestingViolated, r.reason);

    std::vector<std::vector<int>> rows;         // C_i - v as vertices
    std::vector<std::vector<int>> row_edges;    // and its edges
    std::vector<std::vector<int>> row_pos;      // vertex -> position on row i, or -1
    for (const auto& c : C.cycles) {
        rows.push_back(inner_vertices(G, c));
        row_edges.emplace_back(c.begin() + 1, c.end() - 1);
        std::vector<int> pos(G.vertex_count(), -1);
        for (std::size_t t = 0; t < rows.back().size(); ++t) pos[rows.back()[t]] = static_cast<int>(t);
        row_pos.push_back(pos);
    }
    // Columns are numbered in the order P_1 meets them.
    std::vector<int> first_on_row1(D.size(), -1);
    for (int j = 0; j < D.size(); ++j)
        for (int x : inner_vertices(G, D.cycles[j]))
            if (row_pos[0][x] >= 0 && (first_on_row1[j] < 0 || row_pos[0][x] < first_on_row1[j]))
                first_on_row1[j] = row_pos[0][x];
    std::vector<int> column(D.size());
    std::iota(column.begin(), column.end(), 0);
    if (first_on_row1.front() > first_on_row1.back()) std::reverse(column.begin(), column.end());

    // Minimal subpath of D_j - v between rows i and i+1 (0-based), as
    // (edges, start vertex, end vertex, downward).
    struct Rung {
        std::vector<int> edges;
        int start = -1, end = -1;
        bool down = false;
    };
    auto rung = [&](int i, int c) {
        const auto& cyc = D.cycles[column[c]];
        auto verts = inner_vertices(G, cyc);
        int last = -1, last_row = -1;
        for (int t = 0; t < static_cast<int>(verts.size()); ++t) {
            int x = verts[t];
            int on = row_pos[i][x] >= 0 ? i : (row_pos[i + 1][x] >= 0 ? i + 1 : -1);
            if (on < 0) continue;
            if (last >= 0 && on != last_row) {
                Rung r;
                r.edges.assign(cyc.begin() + last + 1, cyc.begin() + t + 1);
                r.start = verts[last];
                r.end = x;
                r.down = on == i + 1;
                return r;
            }
            last = t;
            last_row = on;
        }
        std::ostringstream os;
        os << "D_" << column[c] + 1 << " has no subpath between C_" << i + 1 << " and C_" << i + 2;
        throw Error(Errc::NestingViolated, os.str());
    };
    auto along_row = [&](int i, int from, int to, std::vector<int>& edges) {
        int a = row_pos[i][from], b = row_pos[i][to];
        if (a > b) {
            std::ostringstream os;
            os << "columns meet C_" << i + 1 << " in the wrong order";
            throw Error(Errc::NestingViolated, os.str());
        }
        edges.insert(edges.end(), row_edges[i].begin() + a, row_edges[i].begin() + b);
    };

    DiwallLayout layout;
    for (int i = 0; i < k; ++i) layout.P.push_back(DirectedPath::from_edges(G, row_edges[i]));
    // Column numbers below are 1-based as in the construction: upward
    // zigzags use columns 6t+1 and 6t+3, downward ones 6t-2 and 6t.
    for (int t = 0; t < k / 2; ++t) {
        for (bool down : {false, true}) {
            std::vector<int> edges;
            int prev_end = -1;
            for (int s = 0; s + 1 < k; ++s) {
                int i = down ? s : k - 2 - s;  // rung between rows i and i+1
                int c = down ? (i % 2 == 0 ? 6 * (t + 1) : 6 * (t + 1) - 2) : (i % 2 == 0 ? 6 * t + 1 : 6 * t + 3);
                Rung r = rung(i, c - 1);
                if (r.down != down) {
                    std::ostringstream os;
                    os << "column " << c << " runs the wrong way between C_" << i + 1 << " and C_" << i + 2;
                    throw Error(Errc::NestingViolated, os.str());
                }
                if (prev_end >= 0) along_row(down ? i : i + 1, prev_end, r.start, edges);
                edges.insert(edges.end(), r.edges.begin(), r.edges.end());
                prev_end = r.end;
            }
            layout.Q.push_back(DirectedPath::from_edges(G, edges));
        }
    }
    if (auto r = verify_layout(G, layout, k); !r) throw Error(Errc::NestingViolated, "rings do not give a layout: " + r.reason);
    return layout;
}

} // namespace diwallkit

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

#include "diwallkit/duality.hpp"
#include "diwallkit/enumerate.hpp"
#include "diwallkit/error.hpp"
#include "diwallkit/rings.hpp"

#include <functional>

using namespace diwallkit;

namespace {

struct ApexGrid {
    Didrawing drawing;
    int apex = -1;
    // Darts at the apex by the grid side they reach.
    std::vector<int> top, bottom, left, right;
    std::vector<std::vector<int>> row_cycles, column_cycles;
};

// Alternating grid with k rows and m columns plus a vertex in the outer face
// that closes every row and every column into a directed cycle.
ApexGrid apex_grid(int k, int m) {
    auto grid = generate(GridKind::Alternating, k, m);
    const Didrawing& base = grid.drawing;
    const Digraph& B = base.graph();
    int outer = 0;
    for (int f = 0; f < base.face_count(); ++f)
        if (base.face(f).size() > base.face(outer).size()) outer = f;

    Digraph g = B;
    int a = g.add_vertex("apex");
    // (boundary vertex, edge id, side) for every apex edge.
    struct Link {
        int x, e;
        char side;
    };
    std::vector<Link> links;
    auto row_edge = [&](int i, int j) {  // edge between v_{i,j} and v_{i,j+1}
        for (int e = 0; e < B.edge_count(); ++e) {
            const Edge& ed = B.edge(e);
            int x = grid_vertex(i, j, m), y = grid_vertex(i, j + 1, m);
            if ((ed.tail == x && ed.head == y) || (ed.tail == y && ed.head == x)) return e;
        }
        return -1;
    };
    auto col_edge = [&](int i, int j) {
        for (int e = 0; e < B.edge_count(); ++e) {
            const Edge& ed = B.edge(e);
            int x = grid_vertex(i, j, m), y = grid_vertex(i + 1, j, m);
            if ((ed.tail == x && ed.head == y) || (ed.tail == y && ed.head == x)) return e;
        }
        return -1;
    };
    ApexGrid out;
    out.apex = a;
    for (int i = 1; i <= k; ++i) {
        bool rightward = i % 2 == 1;
        int first = grid_vertex(i, rightward ? 1 : m, m), last = grid_vertex(i, rightward ? m : 1, m);
        int in = g.add_edge(a, first), back = g.add_edge(last, a);
        links.push_back({first, in, rightward ? 'L' : 'R'});
        links.push_back({last, back, rightward ? 'R' : 'L'});
        std::vector<int> cyc{in};
        for (int s = 1; s < m; ++s) cyc.push_back(row_edge(i, rightward ? s : m - s));
        cyc.push_back(back);
        out.row_cycles.push_back(cyc);
    }
    for (int j = 1; j <= m; ++j) {
        bool up = j % 2 == 1;
        int first = grid_vertex(up ? k : 1, j, m), last = grid_vertex(up ? 1 : k, j, m);
        int in = g.add_edge(a, first), back = g.add_edge(last, a);
        links.push_back({first, in, up ? 'B' : 'T'});
        links.push_back({last, back, up ? 'T' : 'B'});
        std::vector<int> cyc{in};
        for (int s = 1; s < k; ++s) cyc.push_back(col_edge(up ? k - s : s, j));
        cyc.push_back(back);
        out.column_cycles.push_back(cyc);
    }
    auto dart_at = [&](const Link& l) { return g.edge(l.e).tail == l.x ? 2 * l.e : 2 * l.e + 1; };
    auto apex_dart = [&](const Link& l) { return dart_at(l) ^ 1; };
    // Side rank for links at a corner: walk order around the outer face.
    std::string walk_sides = "TRBL";
    for (int attempt = 0; attempt < 4; ++attempt) {
        bool flip_corner = attempt & 1, flip_apex = attempt & 2;
        auto rot = base.rotations();
        rot.push_back({});
        std::vector<int> apex_order;
        for (int d : base.face(outer)) {
            int x = B.dart_vertex(d);
            std::vector<Link> here;
            for (const auto& l : links)
                if (l.x == x) here.push_back(l);
            // Corners meet two sides; order them along the walk.
            std::sort(here.begin(), here.end(), [&](const Link& p, const Link& q) {
                return walk_sides.find(p.side) < walk_sides.find(q.side);
            });
            if (here.size() == 2 && walk_sides.find(here[0].side) == 0 && walk_sides.find(here[1].side) == 3)
                std::swap(here[0], here[1]);
            if (flip_corner) std::reverse(here.begin(), here.end());
            auto& r = rot[x];
            auto pos = std::find(r.begin(), r.end(), d);
            std::vector<int> darts;
            for (const auto& l : here) darts.push_back(dart_at(l));
            r.insert(pos, darts.begin(), darts.end());
            for (const auto& l : here) apex_order.push_back(apex_dart(l));
        }
        if (!flip_apex) std::reverse(apex_order.begin(), apex_order.end());
        rot[a] = apex_order;
        try {
            out.drawing = Didrawing(g, rot);
        } catch (const Error&) {
            continue;
        }
        for (const auto& l : links) {
            int d = apex_dart(l);
            (l.side == 'T' ? out.top : l.side == 'B' ? out.bottom : l.side == 'L' ? out.left : out.right).push_back(d);
        }
        return out;
    }
    throw Error(Errc::PreconditionViolated, "apex grid did not embed");
}

// Arcs with R1 on the top side and R3 on the bottom; which of left/right is
// R2 follows from the anticlockwise order at the apex.
RingArcs grid_arcs(const ApexGrid& ag, int rotate) {
    const Didrawing& g = ag.drawing;
    int v = ag.apex;
    auto side_of = [&](int d) {
        auto has = [&](const std::vector<int>& s) { return std::find(s.begin(), s.end(), d) != s.end(); };
        return has(ag.top) ? 0 : has(ag.left) ? 1 : has(ag.bottom) ? 2 : 3;
    };
    // Anticlockwise order starting with a top dart that follows a non-top one.
    int start = ag.top.front();
    while (side_of(g.cw_next(start)) == 0) start = g.cw_next(start);
    std::vector<int> order;
    for (int d = start, t = 0; t < static_cast<int>(g.rotation(v).size()); ++t, d = g.ccw_next(d)) order.push_back(d);
    std::vector<int> blocks;
    std::vector<int> sizes;
    for (int d : order) {
        int s = side_of(d);
        if (blocks.empty() || blocks.back() != s) {
            blocks.push_back(s);
            sizes.push_back(0);
        }
        ++sizes.back();
    }
    REQUIRE(blocks.size() == 4);
    std::array<int, 4> sz{};
    int first = start;
    for (int r = 0; r < rotate; ++r)
        for (int t = 0; t < sizes[r]; ++t) first = g.ccw_next(first);
    for (int i = 0; i < 4; ++i) sz[i] = sizes[(i + rotate) % 4];
    return make_arcs(g, v, first, sz);
}

// Directed cycles through v, as edge lists starting at v.
std::vector<std::vector<int>> cycles_through(const Digraph& g, int v) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::vector<char> on(g.vertex_count(), 0);
    on[v] = 1;
    std::function<void(int)> go = [&](int x) {
        for (int e = 0; e < g.edge_count(); ++e) {
            if (g.edge(e).tail != x) continue;
            int y = g.edge(e).head;
            cur.push_back(e);
            if (y == v) out.push_back(cur);
            else if (!on[y]) {
                on[y] = 1;
                go(y);
                on[y] = 0;
            }
            cur.pop_back();
        }
    };
    go(v);
    return out;
}

bool brute_ring_exists(const Didrawing& g, const RingArcs& arcs, int k) {
    auto cycles = cycles_through(g.graph(), arcs.vertex);
    Ring r;
    r.vertex = arcs.vertex;
    std::function<bool()> go = [&]() {
        if (r.size() == k) return static_cast<bool>(check_ring_from(g, r, arcs));
        for (const auto& c : cycles) {
            r.cycles.push_back(c);
            bool ok = go();
            r.cycles.pop_back();
            if (ok) return true;
        }
        return false;
    };
    return go();
}

int brute_min_change(const Didrawing& g, const RingArcs& arcs) {
    DualMap d = dual(g);
    int best = 1 << 20;
    for (int a : arc_regions(g, arcs, 1))
        for (int b : arc_regions(g, arcs, 3)) {
            if (a == b) return 0;
            for (const auto& p : oracles::undirected_paths(d.dual.graph(), a, b))
                best = std::min(best, change_number(d.dual.graph(), p));
        }
    return best;
}

void check_dual_path(const Didrawing& g, const RingArcs& arcs, const RingSearch& s, int k) {
    REQUIRE_FALSE(s.dual_path.empty());
    DualMap d = dual(g);
    const Digraph& D = d.dual.graph();
    auto r1 = arc_regions(g, arcs, 1), r3 = arc_regions(g, arcs, 3);
    int from = D.dart_vertex(s.dual_path.front()), to = D.dart_target(s.dual_path.back());
    CHECK(std::find(r1.begin(), r1.end(), from) != r1.end());
    CHECK(std::find(r3.begin(), r3.end(), to) != r3.end());
    for (std::size_t t = 0; t + 1 < s.dual_path.size(); ++t)
        CHECK(D.dart_target(s.dual_path[t]) == D.dart_vertex(s.dual_path[t + 1]));
    CHECK(change_number(D, s.dual_path) == s.change_number);
    CHECK(s.change_number < k);
}

} // namespace

TEST_CASE("apex grid rings") {
    auto ag = apex_grid(2, 6);
    const Didrawing& g = ag.drawing;
    CHECK(g.vertex_count() == 13);
    auto arcs = grid_arcs(ag, 0);
    // The rows close into a ring from R2 to R4, ordered from the R1 side.
    Ring rows;
    rows.vertex = ag.apex;
    rows.cycles = ag.row_cycles;
    bool plain = check_ring_from(g, rows, arcs).ok;
    std::reverse(rows.cycles.begin(), rows.cycles.end());
    bool reversed = check_ring_from(g, rows, arcs).ok;
    CHECK(plain != reversed);
    CHECK(non_crossing(g, ag.row_cycles[0], ag.row_cycles[1]));
    CHECK_FALSE(non_crossing(g, ag.row_cycles[0], ag.column_cycles[0]));

    auto found = find_ring(g, arcs, 2);
    REQUIRE(found.ring);
    auto r = check_ring_from(g, *found.ring, arcs);
    CHECK_MESSAGE(r.ok, r.reason);
    CHECK(found.ring->disjointed);

    // Three rows are not there: a dual path with change number below 3.
    auto none = find_ring(g, arcs, 3);
    CHECK_FALSE(none.ring);
    check_dual_path(g, arcs, none, 3);

    auto cross = grid_arcs(ag, 1);
    auto cols = find_ring(g, cross, 6);
    REQUIRE(cols.ring);
    r = check_ring_from(g, *cols.ring, cross);
    CHECK_MESSAGE(r.ok, r.reason);
}

TEST_CASE("rings to layout") {
    for (int k : {2, 4}) {
        auto ag = apex_grid(k, 3 * k);
        const Didrawing& g = ag.drawing;
        auto C = find_ring(g, grid_arcs(ag, 0), k);
        auto D = find_ring(g, grid_arcs(ag, 1), 3 * k);
        REQUIRE(C.ring);
        REQUIRE(D.ring);
        CHECK(check_nesting(g.graph(), *C.ring, *D.ring));
        auto layout = rings_to_layout(g, *C.ring, *D.ring);
        auto r = verify_layout(g.graph(), layout, k);
        CHECK_MESSAGE(r.ok, r.reason);
        if (k == 2) {
            Digraph u = layout_union(g.graph(), layout);
            Digraph wall = generate(GridKind::Diwall, 2, 2).drawing.graph();
            auto model = embeds(u, wall, EmbedOptions{true});
            REQUIRE(model);
            CHECK(verify_model(u, wall, *model, false));
        }
    }
    // Wrong sizes and broken nesting are refused.
    auto ag = apex_grid(2, 6);
    const Didrawing& g = ag.drawing;
    Ring C = *find_ring(g, grid_arcs(ag, 0), 2).ring;
    Ring D = *find_ring(g, grid_arcs(ag, 1), 6).ring;
    Ring short_d = D;
    short_d.cycles.pop_back();
    CHECK_THROWS_AS(rings_to_layout(g, C, short_d), Error);
    Ring shuffled = D;
    std::swap(shuffled.cycles[0], shuffled.cycles[2]);
    try {
        rings_to_layout(g, C, shuffled);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NestingViolated);
    }
}

TEST_CASE("thin rings") {
    auto ag = apex_grid(2, 6);
    const Didrawing& g = ag.drawing;
    Ring D = *find_ring(g, grid_arcs(ag, 1), 6).ring;
    Ring same = thin_ring(g.graph(), D, 1, 6);
    CHECK(same.cycles == D.cycles);
    CHECK(same.disjointed);
    Ring third = thin_ring(g.graph(), D, 3, 2);
    REQUIRE(third.size() == 2);
    CHECK(third.cycles[0] == D.cycles[0]);
    CHECK(third.cycles[1] == D.cycles[3]);
    CHECK(check_ring(g, third));
    Ring single = thin_ring(g.graph(), D, 3, 1);
    CHECK(single.size() == 1);
    try {
        thin_ring(g.graph(), D, 2, 1);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotOdd);
    }
    try {
        thin_ring(g.graph(), D, 3, 3);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::RingTooSmall);
    }
}

TEST_CASE("find_ring against brute force") {
    int rings = 0, paths = 0, both = 0;
    for (const auto& g : enumerate_connected_maps(6)) {
        const Digraph& G = g.graph();
        for (int v = 0; v < G.vertex_count(); ++v) {
            int deg = static_cast<int>(g.rotation(v).size());
            if (deg < 2) continue;
            std::vector<char> rest(G.vertex_count(), 1);
            rest[v] = 0;
            if (G.vertex_count() < 2 || !induces_weakly_connected(G, rest)) continue;
            // One start dart, every split into four arcs.
            for (int s1 = 0; s1 <= deg; ++s1)
                for (int s2 = 0; s1 + s2 <= deg; ++s2)
                    for (int s3 = 0; s1 + s2 + s3 <= deg; ++s3) {
                        auto arcs = make_arcs(g, v, g.rotation(v).front(), {s1, s2, s3, deg - s1 - s2 - s3});
                        auto r1 = arc_regions(g, arcs, 1), r3 = arc_regions(g, arcs, 3);
                        bool shared = false;
                        for (int f : r1) shared = shared || std::find(r3.begin(), r3.end(), f) != r3.end();
                        if (shared) continue;
                        for (int k : {1, 2}) {
                            auto found = find_ring(g, arcs, k);
                            bool ring = brute_ring_exists(g, arcs, k);
                            bool path = brute_min_change(g, arcs) < k;
                            if (found.ring) {
                                ++rings;
                                auto r = check_ring_from(g, *found.ring, arcs);
                                CHECK_MESSAGE(r.ok, r.reason);
                                CHECK(found.ring->size() == k);
                                CHECK(ring);
                            } else {
                                ++paths;
                                check_dual_path(g, arcs, found, k);
                                CHECK(path);
                            }
                            CHECK((ring || path));
                            if (ring && path) ++both;
                        }
                    }
        }
    }
    CHECK(rings > 100);
    CHECK(paths > 100);
    MESSAGE("instances with both a ring and a low-change path: " << both);
}

TEST_CASE("both branches can hold at once") {
    // A directed triangle through v with k = 1: the triangle itself is a ring
    // of size 1, and the single dual edge across the far side is a path with
    // change number 0.
    auto g = fixtures::clockwise_triangle();
    int v = 0;
    int out = -1, in = -1;
    for (int d : g.rotation(v)) (d % 2 == 0 ? out : in) = d;
    // R2 = {f}, R4 = {e}, R1 and R3 empty.
    int first = g.ccw_next(in) == out ? in : out;
    auto arcs = make_arcs(g, v, first, {0, 1, 0, 1});
    if (arcs.block(2).front() != in) arcs = make_arcs(g, v, g.ccw_next(first), {0, 1, 0, 1});
    REQUIRE(arcs.block(2).front() == in);
    CHECK(brute_ring_exists(g, arcs, 1));
    CHECK(brute_min_change(g, arcs) == 0);
}

#include "doctest.h"
#include "fixtures.hpp"

#include "diwallkit/blowup.hpp"
#include "diwallkit/error.hpp"
#include "diwallkit/minors.hpp"

#include <functional>
#include <random>

using namespace diwallkit;

namespace {

Digraph random_digraph(std::mt19937& rng, int n, int m, bool loops) {
    Digraph g(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    while (g.edge_count() < m) {
        int a = pick(rng), b = pick(rng);
        if (a == b && !loops) continue;
        g.add_edge(a, b);
    }
    return g;
}

// Directed cycles as edge sequences, each listed once from its least edge.
std::vector<std::vector<int>> directed_cycles(const Digraph& g) {
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> on(g.vertex_count(), 0);
    for (int first = 0; first < g.edge_count(); ++first) {
        int start = g.edge(first).tail;
        std::function<void(int)> walk = [&](int x) {
            if (x == start) {
                out.push_back(path);
                return;
            }
            if (on[x]) return;
            on[x] = 1;
            for (int e = first + 1; e < g.edge_count(); ++e) {
                if (g.edge(e).tail != x) continue;
                path.push_back(e);
                walk(g.edge(e).head);
                path.pop_back();
            }
            on[x] = 0;
        };
        path = {first};
        on[start] = 1;
        walk(g.edge(first).head);
        on[start] = 0;
    }
    return out;
}

// Closed walk of g through the preimages of a cycle of g / e, inserting e
// where the cycle passes the merged vertex from u to v. Empty if it fails.
std::vector<int> lift_cycle(const Digraph& g, int e, const Contraction& c, const std::vector<int>& cycle) {
    std::vector<int> back(c.graph.edge_count(), -1);
    for (int f = 0; f < g.edge_count(); ++f)
        if (c.edge_map[f] >= 0) back[c.edge_map[f]] = f;
    int u = g.edge(e).tail, v = g.edge(e).head;
    std::vector<int> walk;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        int f = back[cycle[i]], next = back[cycle[(i + 1) % cycle.size()]];
        walk.push_back(f);
        int at = g.edge(f).head, want = g.edge(next).tail;
        if (at == want) continue;
        if (at == u && want == v) {
            walk.push_back(e);
            continue;
        }
        return {};
    }
    return walk;
}

// Strong minor oracle: contract every family of disjoint strongly connected
// sets of size at least two, then look for a subdivision of H.
bool brute_semi_strong(const Digraph& H, const Digraph& G) {
    int n = G.vertex_count();
    std::vector<std::vector<int>> strong_sets;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        std::vector<char> m(n);
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if ((m[v] = (mask >> v) & 1u)) vs.push_back(v);
        if (induces_strongly_connected(G, m)) strong_sets.push_back(vs);
    }
    std::vector<std::vector<int>> chosen;
    std::vector<char> used(n, 0);
    std::function<bool(std::size_t)> pick = [&](std::size_t from) {
        // Contract the chosen sets one after another, tracking renumbering.
        Contraction c;
        c.graph = G;
        c.vertex_map.resize(n);
        for (int v = 0; v < n; ++v) c.vertex_map[v] = v;
        for (const auto& s : chosen) {
            std::vector<int> now;
            for (int v : s) now.push_back(c.vertex_map[v]);
            Contraction next = contract(c.graph, ContractionStep::strong(now));
            for (int& v : c.vertex_map) v = next.vertex_map[v];
            c.graph = std::move(next.graph);
        }
        if (embeds(c.graph, H)) return true;
        for (std::size_t i = from; i < strong_sets.size(); ++i) {
            const auto& s = strong_sets[i];
            if (std::any_of(s.begin(), s.end(), [&](int v) { return used[v]; })) continue;
            for (int v : s) used[v] = 1;
            chosen.push_back(s);
            bool hit = pick(i + 1);
            chosen.pop_back();
            for (int v : s) used[v] = 0;
            if (hit) return true;
        }
        return false;
    };
    return pick(0);
}

Digraph two_cycle() {
    Digraph h(2);
    h.add_edge(0, 1);
    h.add_edge(1, 0);
    return h;
}

} // namespace

TEST_CASE("butterfly contraction") {
    // u -> v with v of in-degree one.
    Digraph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 3);
    g.add_edge(3, 0);
    g.add_edge(2, 3);
    Contraction c = contract(g, ContractionStep::butterfly(0));
    CHECK(c.graph.vertex_count() == 3);
    CHECK(c.graph.edge_count() == 4);
    CHECK(c.vertex_map[1] == c.vertex_map[0]);
    CHECK(c.edge_map[0] == -1);
    CHECK(c.graph.edge(c.edge_map[2]).tail == c.vertex_map[0]);
    CHECK_FALSE(c.has_loops);
    CHECK(c.log == std::vector<std::string>{"butterfly 0"});
    // 2 -> 3 : out-degree(2) = 1 passes; 0 -> 2 : in-degree(2) = 1 passes.
    CHECK_NOTHROW(contract(g, ContractionStep::butterfly(4)));
    Digraph h(3);
    h.add_edge(0, 1);
    h.add_edge(0, 2);
    h.add_edge(2, 1);
    try {
        contract(h, ContractionStep::butterfly(0));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotButterfly);
    }
    // Contracting one edge of a 2-cycle leaves a flagged loop.
    Contraction loop = contract(two_cycle(), ContractionStep::butterfly(0));
    CHECK(loop.has_loops);
    CHECK(loop.graph.edge_count() == 1);
}

TEST_CASE("strong contraction") {
    // Directed triangle 0 1 2 with external edges to and from 3 and 4.
    Digraph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(3, 0);
    g.add_edge(2, 4);
    g.add_edge(1, 4);
    Contraction c = contract(g, ContractionStep::strong({2, 0, 1}));
    CHECK(c.graph.vertex_count() == 3);
    CHECK(c.graph.edge_count() == 3);
    CHECK(c.graph.out_degree(c.vertex_map[0]) == 2);
    CHECK(c.graph.in_degree(c.vertex_map[0]) == 1);
    CHECK(c.log == std::vector<std::string>{"strong 0 1 2"});
    for (auto bad : {std::vector<int>{0, 1}, std::vector<int>{}, std::vector<int>{3, 4}}) {
        try {
            contract(g, ContractionStep::strong(bad));
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::NotStrong);
        }
    }
    CHECK_NOTHROW(contract(g, ContractionStep::strong({3})));
}

TEST_CASE("contraction on drawings keeps a valid rotation") {
    auto grid = generate(GridKind::Alternating, 2, 4).drawing;
    const Digraph& g = grid.graph();
    int done = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.out_degree(g.edge(e).tail) != 1 && g.in_degree(g.edge(e).head) != 1) continue;
        Contraction a = contract(grid, ContractionStep::butterfly(e));
        Contraction b = contract(g, ContractionStep::butterfly(e));
        REQUIRE(a.drawing.has_value());
        CHECK(a.graph.vertex_count() == b.graph.vertex_count());
        CHECK(a.graph.edge_count() == b.graph.edge_count());
        for (int f = 0; f < g.edge_count(); ++f) {
            if (a.edge_map[f] < 0) continue;
            CHECK(a.graph.edge(a.edge_map[f]).tail == a.vertex_map[g.edge(f).tail]);
            CHECK(a.graph.edge(a.edge_map[f]).head == a.vertex_map[g.edge(f).head]);
        }
        ++done;
    }
    CHECK(done > 0);
    // A directed 4-cycle of the blowup is contracted to one vertex.
    Blowup bl = blow_up(generate(GridKind::Alternating, 2, 2).drawing);
    Contraction s = contract(bl.J, ContractionStep::strong(bl.cycle_vertices[0]));
    REQUIRE(s.drawing.has_value());
    CHECK(s.graph.vertex_count() == bl.J.vertex_count() - 1);
    CHECK(s.graph.edge_count() == bl.J.edge_count() - 2);
    for (int f = 0; f < bl.J.edge_count(); ++f) {
        if (s.edge_map[f] < 0) continue;
        CHECK(s.graph.edge(s.edge_map[f]).tail == s.vertex_map[bl.J.graph().edge(f).tail]);
        CHECK(s.graph.edge(s.edge_map[f]).head == s.vertex_map[bl.J.graph().edge(f).head]);
    }
}

TEST_CASE("butterfly contraction lifts directed cycles") {
    std::mt19937 rng(20261016);
    int lifted = 0, through_e = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = 3 + trial % 4;
        Digraph g = random_digraph(rng, n, n + trial % 5, false);
        for (int e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            if (g.out_degree(ed.tail) != 1 && g.in_degree(ed.head) != 1) continue;
            Contraction c = contract(g, ContractionStep::butterfly(e));
            for (const auto& cyc : directed_cycles(c.graph)) {
                auto walk = lift_cycle(g, e, c, cyc);
                REQUIRE_FALSE(walk.empty());
                ++lifted;
                if (walk.size() > cyc.size()) ++through_e;
            }
        }
    }
    CHECK(lifted > 1000);
    CHECK(through_e > 100);
}

TEST_CASE("semi-strong minor examples") {
    Digraph edge(2);
    edge.add_edge(0, 1);
    CHECK(is_semi_strong_minor(edge, fixtures::directed_path3().graph()));
    Digraph dag(4);
    dag.add_edge(0, 1);
    dag.add_edge(1, 2);
    dag.add_edge(0, 2);
    dag.add_edge(2, 3);
    dag.add_edge(0, 3);
    CHECK_FALSE(is_semi_strong_minor(two_cycle(), dag));
    auto gamma = generate(GridKind::Alternating, 2, 2).drawing.graph();
    Blowup bl = blow_up(generate(GridKind::Alternating, 2, 2).drawing);
    auto model = semi_strong_minor_model(gamma, bl.J.graph());
    REQUIRE(model.has_value());
    CHECK(verify_model(bl.J.graph(), gamma, *model, true).ok);
    // A vertex of in- and out-degree two needs a cycle of the blowup.
    Digraph bowtie_pattern(3);
    bowtie_pattern.add_edge(0, 1);
    bowtie_pattern.add_edge(1, 0);
    bowtie_pattern.add_edge(0, 2);
    bowtie_pattern.add_edge(2, 0);
    auto cyc = fixtures::directed_cycle(3).graph();
    CHECK_FALSE(is_semi_strong_minor(bowtie_pattern, cyc));
    CHECK(is_semi_strong_minor(two_cycle(), generate(GridKind::Diwall, 2, 2).drawing.graph()));
    Digraph loop(1);
    loop.add_edge(0, 0);
    CHECK_THROWS_AS(is_semi_strong_minor(loop, cyc), Error);
    Digraph big(11);
    try {
        is_semi_strong_minor(edge, big);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ScaleExceeded);
    }
}

TEST_CASE("semi-strong minors agree with contraction oracle and are monotone") {
    std::mt19937 rng(7);
    int positives = 0, negatives = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int hn = 2 + trial % 2;
        Digraph H = random_digraph(rng, hn, hn + trial % 3, false);
        int gn = 3 + trial % 3;
        Digraph G = random_digraph(rng, gn, gn + 1 + trial % 4, false);
        auto model = semi_strong_minor_model(H, G);
        bool brute = brute_semi_strong(H, G);
        REQUIRE(model.has_value() == brute);
        if (model) {
            CHECK(verify_model(G, H, *model, true).ok);
            ++positives;
        } else {
            ++negatives;
        }
        Digraph more = G;
        std::uniform_int_distribution<int> pick(0, gn - 1);
        int a = pick(rng), b = (a + 1 + pick(rng) % (gn - 1)) % gn;
        more.add_edge(a, b);
        if (model) CHECK(is_semi_strong_minor(H, more));
    }
    CHECK(positives > 30);
    CHECK(negatives > 30);
}

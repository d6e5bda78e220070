#include "fixtures.hpp"
#include "oracles.hpp"

#include "diwallkit/duality.hpp"
#include "diwallkit/enumerate.hpp"
#include "diwallkit/error.hpp"

#include <doctest.h>

#include <random>

using namespace diwallkit;

TEST_CASE("right dual of a clockwise triangle") {
    auto t = fixtures::clockwise_triangle();
    auto m = dual(t, DualSide::Right);
    CHECK(m.dual.vertex_count() == 2);
    CHECK(m.dual.edge_count() == 3);
    // The bounded face is right of every edge, so all dual edges point into it.
    int inner = t.right_face(0);
    for (const Edge& e : m.dual.graph().edges()) CHECK(e.head == inner);
}

TEST_CASE("left of right and right of right") {
    for (const auto& g : {fixtures::clockwise_triangle(), fixtures::k4(), fixtures::bowtie(), fixtures::directed_path3()}) {
        auto r = dual(g, DualSide::Right).dual;
        CHECK(map_isomorphic(dual(r, DualSide::Left).dual, g));
        CHECK(map_isomorphic(dual(g, DualSide::Left).dual, r.reversed()));
        auto rr = dual(r, DualSide::Right).dual;
        CHECK(map_isomorphic(rr, g.reversed()));
        CHECK(map_isomorphic(dual(dual(rr, DualSide::Right).dual, DualSide::Right).dual, g));
    }
}

TEST_CASE("dual involution on enumerated maps") {
    for (const auto& g : enumerate_connected_maps(4, {.allow_loops = true})) {
        auto m = dual(g, DualSide::Right);
        CHECK(map_isomorphic(dual(m.dual, DualSide::Left).dual, g));
        for (int v = 0; v < g.vertex_count(); ++v) CHECK(m.region_to_vertex[m.vertex_to_region[v]] == v);
        auto l = dual(g, DualSide::Left);
        for (int v = 0; v < g.vertex_count(); ++v) CHECK(l.region_to_vertex[l.vertex_to_region[v]] == v);
    }
}

TEST_CASE("disconnected drawing has no dual") {
    Digraph g(2);
    Didrawing d(g, std::vector<std::vector<int>>(2));
    CHECK_THROWS_AS(dual(d), Error);
}

TEST_CASE("change number examples") {
    auto c = fixtures::directed_cycle(5);
    std::vector<int> walk{0, 2, 4, 6, 8};
    CHECK(change_number(c, walk) == 0);

    // u1->u2, u3->u2, u3->u4, u1->u4 walked u1 u2 u3 u4.
    Digraph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 1);
    g.add_edge(2, 3);
    g.add_edge(0, 3);
    std::vector<int> square{0, 3, 4, 7};
    CHECK(change_number(g, square) == 4);
    CHECK(oracles::change_vertices(g, square, true) == 4);

    std::vector<int> path{0, 3};
    CHECK(change_number(g, path) == 1);

    std::vector<int> broken{0, 4};
    CHECK_THROWS_AS(change_number(g, broken), Error);
}

TEST_CASE("change number parity and directed cycles on sampled cycles") {
    std::mt19937_64 rng(7);
    int sampled = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_map(rng, 9);
        for (const auto& cyc : oracles::undirected_cycles(g.graph())) {
            int c = change_number(g, cyc);
            CHECK(c == oracles::change_vertices(g.graph(), cyc, true));
            CHECK(c % 2 == 0);
            bool directed = true;
            for (int d : cyc) directed = directed && !dart_is_head(d);
            bool reverse_directed = true;
            for (int d : cyc) reverse_directed = reverse_directed && dart_is_head(d);
            CHECK((c == 0) == (directed || reverse_directed || cyc.size() == 1));
            ++sampled;
        }
    }
    CHECK(sampled > 100);
}

TEST_CASE("bond change number") {
    auto t = fixtures::clockwise_triangle();
    std::vector<char> a{1, 0, 0};
    auto bc = bond_change_number(t, a);
    CHECK(bc.change_number == 2);
    CHECK(bc.dual_darts.size() == 2);
    std::vector<char> b{0, 1, 1};
    CHECK(bond_change_number(t, b).change_number == 2);

    auto bundle = fixtures::parallel_bundle(3);
    std::vector<char> s{1, 0};
    CHECK(bond_change_number(bundle, s).change_number == 0);

    std::vector<char> bad{1, 0, 1, 0, 1};
    CHECK_THROWS_AS(bond_change_number(fixtures::bowtie(), bad), Error);
}

TEST_CASE("bond change number agrees with the dual cycle and the left dual") {
    for (const auto& g : enumerate_connected_maps(5)) {
        auto right = dual(g, DualSide::Right);
        auto left = dual(g, DualSide::Left);
        int n = g.vertex_count();
        for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
            std::vector<char> side(n);
            for (int v = 0; v < n; ++v) side[v] = (mask >> v) & 1u;
            if (!is_bond_partition(g.graph(), side)) continue;
            auto bc = bond_change_number(g, side);
            CHECK(change_number(right.dual, bc.dual_darts) == bc.change_number);
            std::vector<int> left_walk;
            for (int d : bc.dual_darts) left_walk.push_back(left.dual_dart(d));
            CHECK(oracles::change_vertices(left.dual.graph(), left_walk, true) == bc.change_number);
        }
    }
}

TEST_CASE("bonds and dual cycles have the same edge sets") {
    for (const auto& g : enumerate_connected_maps(6, {.allow_loops = true, .directed = false})) {
        auto m = dual(g);
        CHECK(oracles::bond_edge_sets(g.graph()) == oracles::undirected_cycle_edge_sets(m.dual.graph()));
    }
}

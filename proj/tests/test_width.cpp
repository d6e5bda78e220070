#include "doctest.h"
#include "fixtures.hpp"

#include "diwallkit/duality.hpp"
#include "diwallkit/enumerate.hpp"
#include "diwallkit/error.hpp"
#include "diwallkit/width.hpp"

#include <functional>
#include <map>
#include <set>

using namespace diwallkit;

namespace {

// Change number of a bond counted on the left dual: a dual vertex is a
// change vertex when both cut edges at it point the same way.
int left_dual_change_number(const Didrawing& g, const std::vector<char>& side) {
    DualMap d = dual(g, DualSide::Left);
    std::vector<int> in(d.dual.vertex_count(), 0), out(d.dual.vertex_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (side[g.graph().edge(e).tail] == side[g.graph().edge(e).head]) continue;
        ++out[d.dual.graph().edge(e).tail];
        ++in[d.dual.graph().edge(e).head];
    }
    int count = 0;
    for (int f = 0; f < d.dual.vertex_count(); ++f)
        if (in[f] == 2 || out[f] == 2) ++count;
    return count;
}

// Every carving on n >= 2 labelled leaves, grown by subdividing a tree edge
// and hanging the next leaf there.
void all_carvings(int n, const std::function<void(const Carving&)>& visit) {
    Carving c;
    c.node_count = 2;
    c.leaf = {0, 1};
    c.tree_edges = {{0, 1}};
    std::function<void()> grow = [&]() {
        if (c.ground_size() == n) {
            visit(c);
            return;
        }
        std::size_t m = c.tree_edges.size();
        for (std::size_t t = 0; t < m; ++t) {
            Carving saved = c;
            auto [a, b] = c.tree_edges[t];
            int x = c.node_count++, leaf = c.node_count++;
            c.tree_edges[t] = {a, x};
            c.tree_edges.push_back({x, b});
            c.tree_edges.push_back({x, leaf});
            c.leaf.push_back(leaf);
            grow();
            c = saved;
        }
    };
    grow();
}

std::optional<int> brute_diwidth(const Didrawing& g) {
    std::optional<int> best;
    all_carvings(g.vertex_count(), [&](const Carving& c) {
        int w = 0;
        for (const auto& s : c.sides()) {
            if (!is_bond_partition(g.graph(), s)) return;
            w = std::max(w, left_dual_change_number(g, s));
        }
        if (!best || w < *best) best = w;
    });
    return best;
}

std::vector<Didrawing> two_weak_maps(int max_edges, int max_vertices) {
    std::vector<Didrawing> out;
    for (auto& g : enumerate_connected_maps(max_edges))
        if (g.vertex_count() >= 2 && g.vertex_count() <= max_vertices && is_two_weak(g.graph()))
            out.push_back(g);
    return out;
}

std::vector<Didrawing> bridgeless_maps(int max_edges) {
    std::vector<Didrawing> out;
    for (auto& g : enumerate_connected_maps(max_edges))
        if (bridges(g.graph()).empty()) out.push_back(g);
    return out;
}

} // namespace

TEST_CASE("small diwidths") {
    CHECK(diwidth_exact(fixtures::clockwise_triangle()).width == 2);
    CHECK(diwidth_exact(fixtures::parallel_bundle(3)).width == 0);
    CHECK(diwidth_exact(fixtures::directed_cycle(5)).width == 2);
    auto r = diwidth_exact(fixtures::k4());
    CHECK(check_carving(r.carving, 4));
    CHECK(diwidth_of(fixtures::k4(), r.carving) == r.width);
    CHECK_THROWS_AS(diwidth_exact(fixtures::directed_path3()), Error);
    CHECK_THROWS_AS(diwidth_exact(fixtures::bowtie()), Error);
}

TEST_CASE("carving checks") {
    Carving c;
    c.node_count = 4;
    c.tree_edges = {{0, 3}, {1, 3}, {2, 3}};
    c.leaf = {0, 1, 2};
    CHECK(check_carving(c, 3));
    CHECK_FALSE(check_carving(c, 4));
    c.tree_edges.pop_back();
    CHECK_FALSE(check_carving(c, 3));
    int count = 0;
    all_carvings(5, [&](const Carving& t) {
        CHECK(check_carving(t, 5));
        ++count;
    });
    CHECK(count == 15);
}

TEST_CASE("exact diwidth agrees with carving enumeration") {
    auto maps = two_weak_maps(6, 6);
    REQUIRE(maps.size() > 50);
    for (const auto& g : maps) {
        auto r = diwidth_exact(g);
        REQUIRE(check_carving(r.carving, g.vertex_count()));
        CHECK(diwidth_of(g, r.carving) == r.width);
        auto brute = brute_diwidth(g);
        REQUIRE(brute.has_value());
        CHECK(*brute == r.width);
    }
}

TEST_CASE("bond change number matches the left dual count") {
    for (const auto& g : two_weak_maps(6, 6)) {
        int n = g.vertex_count();
        for (unsigned mask = 1; mask + 1 < (1u << n); mask += 2) {
            std::vector<char> s(n);
            for (int v = 0; v < n; ++v) s[v] = (mask >> v) & 1u;
            if (!is_bond_partition(g.graph(), s)) continue;
            CHECK(bond_change_number(g, s).change_number == left_dual_change_number(g, s));
        }
    }
}

TEST_CASE("greedy carvings are valid upper bounds") {
    for (const auto& g : two_weak_maps(7, 7)) {
        int exact = diwidth_exact(g).width;
        auto b = diwidth_greedy_bound(g, 6);
        REQUIRE(b.has_value());
        CHECK(b->width >= exact);
        REQUIRE(check_carving(b->carving, g.vertex_count()));
        CHECK(diwidth_of(g, b->carving) <= b->width);
        auto c = diwidth_greedy(g, b->width);
        REQUIRE(c.has_value());
        CHECK(diwidth_of(g, *c) <= b->width);
    }
}

TEST_CASE("good curves on a directed triangle") {
    auto g = fixtures::clockwise_triangle();
    int crossing_only = 0;
    enumerate_good_curves(g, [&](const GoodCurve& curve, const DartPartition& p) {
        CHECK(curve.regions.size() == curve.steps.size());
        auto again = curve_partition(g, curve);
        REQUIRE(again.has_value());
        CHECK(again->side == p.side);
        CHECK(again->cost() == p.cost());
        CHECK(p.side[0] == 0);
        if (p.vertices_on_curve == 0) {
            ++crossing_only;
            CHECK(p.cost() == 2);
        }
    });
    // Three vertex cuts, each met in both directions.
    CHECK(crossing_only == 6);
    CHECK(dart_width_exact(g).width == 2);
}

TEST_CASE("curve costs without vertices are bond change numbers") {
    for (const auto& g : bridgeless_maps(5)) {
        int n = g.vertex_count();
        std::map<std::vector<char>, std::set<int>> costs;
        enumerate_good_curves(g, [&](const GoodCurve&, const DartPartition& p) {
            costs[p.side].insert(p.cost());
            if (p.vertices_on_curve != 0) return;
            std::vector<char> s(n, 0);
            for (int d = 0; d < g.dart_count(); ++d) s[g.graph().dart_vertex(d)] = p.side[d];
            for (int d = 0; d < g.dart_count(); ++d) REQUIRE(s[g.graph().dart_vertex(d)] == p.side[d]);
            if (n < 2 || !is_bond_partition(g.graph(), s)) return;
            CHECK(p.change_regions == bond_change_number(g, s).change_number);
        });
        // The cost depends on the partition alone.
        for (const auto& [side, set] : costs) CHECK(set.size() == 1);
    }
}

TEST_CASE("dart-width agrees with carving enumeration") {
    int checked = 0;
    for (const auto& g : bridgeless_maps(4)) {
        if (g.vertex_count() < 2) continue;
        auto table = sensible_partitions(g);
        std::optional<int> best;
        all_carvings(g.dart_count(), [&](const Carving& c) {
            auto w = dart_width_of(c, table);
            if (w && (!best || *w < *best)) best = w;
        });
        REQUIRE(best.has_value());
        CHECK(dart_width_exact(g).width == *best);
        ++checked;
    }
    CHECK(checked > 10);
}

TEST_CASE("dart-width exact versus blowup bound") {
    CHECK(dart_width_exact(fixtures::directed_cycle(3)).width == 2);
    CHECK_THROWS_AS(dart_width_exact(fixtures::directed_path3()), Error);
    int checked = 0;
    for (const auto& g : bridgeless_maps(5)) {
        if (g.vertex_count() < 2) continue;
        auto exact = dart_width_exact(g);
        auto table = sensible_partitions(g);
        REQUIRE(check_carving(exact.carving, g.dart_count()));
        CHECK(dart_width_of(exact.carving, table) == exact.width);
        auto via = dart_width_via_blowup(g);
        REQUIRE(check_carving(via.carving, g.dart_count()));
        auto w = dart_width_of(via.carving, table);
        REQUIRE(w.has_value());
        CHECK(*w <= via.width);
        CHECK(exact.width <= via.width);
        ++checked;
    }
    CHECK(checked > 20);
}

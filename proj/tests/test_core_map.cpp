#include "fixtures.hpp"

#include "diwallkit/error.hpp"
#include "diwallkit/io.hpp"

#include <doctest.h>

using namespace diwallkit;

TEST_CASE("triangle has two faces") {
    auto t = fixtures::clockwise_triangle();
    CHECK(t.face_count() == 2);
    // Clockwise travel keeps the bounded face on the right.
    int inner = t.right_face(0);
    CHECK(t.right_face(1) == inner);
    CHECK(t.right_face(2) == inner);
    CHECK(t.left_face(0) != inner);
}

TEST_CASE("K4 has four faces and a twisted rotation is rejected") {
    auto k = fixtures::k4();
    CHECK(k.face_count() == 4);
    auto rot = k.rotations();
    std::swap(rot[3][0], rot[3][1]);
    CHECK_THROWS_AS(Didrawing(k.graph(), rot), Error);
    try {
        Didrawing bad(k.graph(), rot);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotSphere);
    }
}

TEST_CASE("rotation validation errors") {
    auto t = fixtures::clockwise_triangle();
    auto rot = t.rotations();
    rot[0].push_back(rot[0][0]);
    try {
        Didrawing bad(t.graph(), rot);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DuplicateDart);
    }
    rot = t.rotations();
    rot[0].pop_back();
    try {
        Didrawing bad(t.graph(), rot);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DanglingDart);
    }
}

TEST_CASE("interleaving") {
    CHECK(interleaving(fixtures::directed_cycle(5)) == 2);
    CHECK(interleaving(fixtures::parallel_bundle(3)) == 1);

    // A star whose rotation alternates in, out, in, out.
    Digraph g(5);
    g.add_edge(1, 0);
    g.add_edge(0, 2);
    g.add_edge(3, 0);
    g.add_edge(0, 4);
    Didrawing star(g, {{1, 2, 5, 6}, {0}, {3}, {4}, {7}});
    CHECK(vertex_interleaving(star, 0) == 4);
    CHECK(interleaving(star) == 4);

    Digraph lg(1);
    lg.add_edge(0, 0);
    Didrawing loop(lg, {{0, 1}});
    CHECK_THROWS_AS(interleaving(loop), Error);

    Digraph iso(2);
    iso.add_edge(0, 0);
    CHECK(vertex_interleaving(Didrawing(iso, {{0, 1}, {}}), 1) == 0);
}

TEST_CASE("connectivity profile") {
    auto p = connectivity_profile(fixtures::directed_cycle(3));
    CHECK(p.one_weak);
    CHECK(p.two_weak);
    CHECK(p.weakly_two_edge_connected);
    CHECK(p.strongly_connected);

    auto b = connectivity_profile(fixtures::bowtie());
    CHECK(b.one_weak);
    CHECK_FALSE(b.two_weak);

    auto path = connectivity_profile(fixtures::directed_path3());
    CHECK_FALSE(path.strongly_connected);
    CHECK_FALSE(path.weakly_two_edge_connected);
}

TEST_CASE("serialization round trip is byte identical") {
    for (const auto& g : {fixtures::clockwise_triangle(), fixtures::k4(), fixtures::bowtie(), fixtures::parallel_bundle(4)}) {
        std::string a = write_didrawing(g);
        auto parsed = parse_didrawing(a);
        CHECK(write_didrawing(parsed) == a);
        CHECK(map_isomorphic(parsed, g));
    }
}

TEST_CASE("parse errors carry locations") {
    try {
        parse_didrawing("{\"vertices\": [\"a\",}");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
        CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
    try {
        parse_didrawing(R"({"vertices":["a","b"],"edges":[{"id":"x","tail":"a","head":"b"}],
                            "rotations":{"a":["x:T"],"b":["x:Q"]}})");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
        CHECK(std::string(e.what()).find("/rotations/b/0") != std::string::npos);
    }
    try {
        parse_didrawing(R"({"vertices":["a","b"],"edges":[{"id":"x","tail":"a","head":"b"}],
                            "rotations":{"a":["x:T"],"b":["y:H"]}})");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DanglingDart);
    }
}

TEST_CASE("map isomorphism distinguishes mirror images and directions") {
    auto t = fixtures::clockwise_triangle();
    CHECK(map_isomorphic(t, t));
    // On the sphere the reversed triangle is the same map seen from the other face.
    CHECK(map_isomorphic(t, t.reversed()));
    auto p = fixtures::directed_path3();
    Digraph g(3);
    g.add_edge(0, 1);
    g.add_edge(2, 1);
    Didrawing q(g, {{0}, {1, 3}, {2}});
    CHECK_FALSE(map_isomorphic(p, q));
}

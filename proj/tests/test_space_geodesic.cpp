#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace netcf;
using namespace netcf::testing;

TEST_CASE("space construction enforces the structural invariants") {
    CHECK_THROWS_AS(NetworkSpace(SpaceKind::Tree, {0, 1, 2},
                                 {{0, 0, 1, Rational(2)}, {1, 1, 2, Rational(3)}}),
                    std::invalid_argument);  // degree-2 middle node
    CHECK_THROWS_AS(NetworkSpace(SpaceKind::Tree, {0, 1}, {{0, 0, 1, Rational(0)}}),
                    std::invalid_argument);  // zero length
    CHECK_THROWS_AS(NetworkSpace(SpaceKind::Tree, {0, 1, 2}, {{0, 0, 1, Rational(1)}}),
                    std::invalid_argument);  // disconnected
    CHECK_THROWS_AS(NetworkSpace(SpaceKind::Tree, {0, 1, 2, 3},
                                 {{0, 0, 1, Rational(1)},
                                  {1, 1, 2, Rational(1)},
                                  {2, 2, 0, Rational(1)},
                                  {3, 0, 3, Rational(1)}}),
                    std::invalid_argument);  // cycle in a tree space

    NetworkSpace star = star_space(3);
    CHECK(star.leaf_count() == 3);
    CHECK(star.internal_count() == 1);
    CHECK(star.is_internal(0));
}

TEST_CASE("point canonicalization") {
    NetworkSpace s = single_edge_space(Rational(4));
    CHECK(s.canonical(PointOnSpace::on_edge(0, Rational(0))) == PointOnSpace::at_node(0));
    CHECK(s.canonical(PointOnSpace::on_edge(0, Rational(4))) == PointOnSpace::at_node(1));
    PointOnSpace mid = s.canonical(PointOnSpace::on_edge(0, Rational(2)));
    CHECK(!mid.is_node());
    CHECK_THROWS_AS(s.canonical(PointOnSpace::on_edge(0, Rational(5))), std::invalid_argument);
    CHECK_THROWS_AS(s.canonical(PointOnSpace::on_edge(9, Rational(1))), std::invalid_argument);
}

TEST_CASE("geodesic distance on a two-edge path") {
    NetworkSpace s = two_edge_path(Rational(2), Rational(3));
    PointOnSpace p = PointOnSpace::on_edge(0, Rational(1));
    PointOnSpace q = PointOnSpace::on_edge(1, Rational(1));
    CHECK(geodesic_distance(s, p, q) == Rational(2));
    CHECK(geodesic_distance(s, p, p) == Rational(0));
}

TEST_CASE("geodesic distance picks the short way around K4") {
    NetworkSpace k4 = k4_space();
    CHECK(geodesic_distance(k4, PointOnSpace::at_node(1), PointOnSpace::at_node(3)) ==
          Rational(1));
    // interior to interior across a node
    PointOnSpace a = PointOnSpace::on_edge(0, Rational(3, 4));  // on edge 0-1
    PointOnSpace b = PointOnSpace::on_edge(3, Rational(1, 4));  // on edge 1-2
    CHECK(geodesic_distance(k4, a, b) == Rational(1, 2));
}

TEST_CASE("geodesic distance is a metric on random points") {
    std::mt19937_64 rng(5);
    NetworkSpace k4 = k4_space(Rational(3, 2));
    NetworkSpace star = star_space(4, Rational(5, 2));
    for (const NetworkSpace& s : {k4, star}) {
        for (int iter = 0; iter < 150; ++iter) {
            PointOnSpace p = rand_point(rng, s);
            PointOnSpace q = rand_point(rng, s);
            PointOnSpace r = rand_point(rng, s);
            Rational dpq = geodesic_distance(s, p, q);
            Rational dqp = geodesic_distance(s, q, p);
            CHECK(dpq == dqp);
            CHECK((dpq == Rational(0)) == (p == q));
            CHECK(dpq + geodesic_distance(s, q, r) >= geodesic_distance(s, p, r));
        }
    }
}

namespace {

// Independent oracle: membership of grid-sampled points by direct distance
// computation, compared against the extent's fragment representation.
void check_extent_against_grid(const NetworkSpace& s, const Ball& b) {
    SubtreeRegion ext = ball_extent(s, b);
    for (const Edge& e : s.edges()) {
        for (long long i = 0; i * Rational(1, 8) <= e.length; ++i) {
            Rational off = Rational(i, 8);
            if (off > e.length) break;
            PointOnSpace p = s.canonical(PointOnSpace::on_edge(e.id, off));
            bool inside = geodesic_distance(s, b.center, p) <= b.radius;
            CAPTURE(e.id, off.str());
            CHECK(ext.contains_point(s, p) == inside);
        }
    }
}

}  // namespace

TEST_CASE("ball extent on a 3-star matches the direct-distance oracle") {
    NetworkSpace star = star_space(3, Rational(10));
    Ball b{7, PointOnSpace::on_edge(1, Rational(2)), Rational(5)};
    SubtreeRegion ext = ball_extent(star, b);

    REQUIRE(ext.fragments.count(1) == 1);
    CHECK(ext.fragments.at(1) == std::vector<Interval>{{Rational(0), Rational(7)}});
    CHECK(ext.fragments.at(2) == std::vector<Interval>{{Rational(0), Rational(3)}});
    CHECK(ext.fragments.at(3) == std::vector<Interval>{{Rational(0), Rational(3)}});
    check_extent_against_grid(star, b);
}

TEST_CASE("zero-radius ball extent is the center point") {
    NetworkSpace star = star_space(3, Rational(2));
    Ball b{1, PointOnSpace::on_edge(2, Rational(1, 2)), Rational(0)};
    SubtreeRegion ext = ball_extent(star, b);
    CHECK(ext.total_length() == Rational(0));
    CHECK(ext.contains_point(star, b.center));
    CHECK_FALSE(ext.contains_point(star, PointOnSpace::at_node(0)));
    CHECK(region_leaf_count(star, ext) == 1);
}

TEST_CASE("K4 ball of radius 2/3 covers a third of each incident edge") {
    NetworkSpace k4 = k4_space();
    Ball b{1, PointOnSpace::at_node(0), Rational(2, 3)};
    SubtreeRegion ext = ball_extent(k4, b);
    int touched = 0;
    for (const Edge& e : k4.edges()) {
        if (e.u != 0 && e.v != 0) {
            CHECK(ext.fragments.count(e.id) == 0);
            continue;
        }
        ++touched;
        REQUIRE(ext.fragments.count(e.id) == 1);
        Interval iv = ext.fragments.at(e.id).front();
        CHECK(iv.length() == Rational(2, 3));
        CHECK(iv.contains(k4.node_offset_on_edge(e.id, 0)));
    }
    CHECK(touched == 3);
    check_extent_against_grid(k4, b);
}

TEST_CASE("ball extents are connected and boundary points sit at full distance") {
    std::mt19937_64 rng(23);
    NetworkSpace k4 = k4_space(Rational(2));
    NetworkSpace star = star_space(5, Rational(3));
    for (const NetworkSpace& s : {k4, star}) {
        for (int iter = 0; iter < 60; ++iter) {
            Ball b{0, rand_point(rng, s), rand_rational(rng, 3)};
            SubtreeRegion ext = ball_extent(s, b);
            CHECK(region_is_connected(s, ext));
            for (const auto& [eid, frags] : ext.fragments) {
                for (const Interval& iv : frags) {
                    for (const Rational& end : {iv.a, iv.b}) {
                        PointOnSpace p = s.canonical(PointOnSpace::on_edge(eid, end));
                        Rational d = geodesic_distance(s, b.center, p);
                        bool at_boundary = (d == b.radius);
                        bool at_space_node = p.is_node();
                        CHECK((at_boundary || at_space_node || d < b.radius));
                    }
                }
            }
            check_extent_against_grid(s, b);
        }
    }
}

TEST_CASE("coverage follows the definition") {
    NetworkSpace s = single_edge_space(Rational(10));
    Ball b{0, PointOnSpace::on_edge(0, Rational(2)), Rational(5)};
    auto cov = coverage(s, b, 0);  // distance 2
    REQUIRE(cov.has_value());
    CHECK(*cov == Rational(3));

    Ball tight{1, PointOnSpace::on_edge(0, Rational(5)), Rational(5)};
    auto boundary = coverage(s, tight, 0);
    REQUIRE(boundary.has_value());
    CHECK(*boundary == Rational(0));

    Ball small{2, PointOnSpace::on_edge(0, Rational(2)), Rational(1)};
    CHECK_FALSE(coverage(s, small, 1).has_value());
}

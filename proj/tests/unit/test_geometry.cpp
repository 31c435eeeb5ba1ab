#include "common.hpp"

#include "fmbend/geometry.hpp"

using namespace fmbtest;

TEST_SUITE("exact_geometry") {
  TEST_CASE("orientation examples") {
    CHECK(orientation(P(0, 0), P(1, 0), P(0, 1)) == Orientation::Left);
    CHECK(orientation(P(0, 0), P(1, 1), P(2, 2)) == Orientation::Collinear);
    CHECK(orientation(P(0, 0), P(1, 0), P(1, 1, -1, 3)) == Orientation::Right);
  }

  TEST_CASE("orientation is antisymmetric in its last two arguments") {
    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
      auto r = [&] { return ratio(static_cast<long>(pick(rng, 21)) - 10, static_cast<long>(between(rng, 1, 4))); };
      Point2 a(r(), r()), b(r(), r()), c(r(), r());
      CHECK(static_cast<int>(orientation(a, b, c)) == -static_cast<int>(orientation(a, c, b)));
    }
  }

  TEST_CASE("segments_intersect examples") {
    auto x = segments_intersect({P(0, 0), P(2, 2)}, {P(0, 2), P(2, 0)});
    CHECK(x.relation == SegmentRelation::ProperCrossing);
    CHECK(*x.witness == P(1, 1));
    CHECK(segments_intersect({P(0, 0), P(1, 0)}, {P(1, 0), P(2, 1)}).relation == SegmentRelation::SharedEndpoint);
    CHECK(segments_intersect({P(0, 0), P(2, 0)}, {P(1, 0), P(3, 0)}).relation == SegmentRelation::Overlap);
    CHECK(segments_intersect({P(0, 0), P(2, 0)}, {P(1, 0), P(1, 5)}).relation == SegmentRelation::EndpointInInterior);
    CHECK(segments_intersect({P(0, 0), P(1, 0)}, {P(0, 1), P(1, 1)}).relation == SegmentRelation::Disjoint);
    CHECK(segments_intersect({P(0, 0), P(1, 0)}, {P(2, 0), P(3, 0)}).relation == SegmentRelation::Disjoint);
  }

  TEST_CASE("convex_hull examples") {
    std::vector<Point2> tri{P(0, 0), P(4, 0), P(0, 4)};
    Hull h = convex_hull(tri);
    CHECK(h.kind == HullKind::Polygon);
    CHECK(h.vertices == std::vector<Point2>{P(0, 0), P(4, 0), P(0, 4)});
    std::vector<Point2> with_inner{P(0, 0), P(4, 0), P(0, 4), P(1, 1)};
    CHECK(convex_hull(with_inner).vertices == h.vertices);
    std::vector<Point2> one{P(3, 3)};
    CHECK(convex_hull(one).kind == HullKind::Point);
    std::vector<Point2> line{P(0, 0), P(2, 2), P(1, 1)};
    Hull seg = convex_hull(line);
    CHECK(seg.kind == HullKind::Segment);
    CHECK(seg.vertices == std::vector<Point2>{P(0, 0), P(2, 2)});
  }

  TEST_CASE("convex_hull matches the brute-force hull and is idempotent") {
    Rng rng(12);
    for (int i = 0; i < 150; ++i) {
      std::vector<Point2> pts;
      for (int k = 0; k < 10; ++k) {
        pts.emplace_back(ratio(static_cast<long>(pick(rng, 13)) - 6, static_cast<long>(between(rng, 1, 3))),
                         ratio(static_cast<long>(pick(rng, 13)) - 6, static_cast<long>(between(rng, 1, 3))));
      }
      Hull h = convex_hull(pts);
      CHECK(hull_matches_oracle(pts, h));
      Hull again = convex_hull(h.vertices);
      CHECK(again.kind == h.kind);
      CHECK(again.vertices == h.vertices);
    }
  }

  TEST_CASE("point_in_polygon examples") {
    ConvexPolygon tri{{P(0, 0), P(3, 0), P(0, 3)}};
    CHECK(point_in_polygon(centroid(tri), tri) == Location::Interior);
    CHECK(point_in_polygon(P(3, 0), tri) == Location::Boundary);
    CHECK(point_in_polygon(P(10, 10), tri) == Location::Exterior);
  }

  TEST_CASE("clip_polygon_by_line examples") {
    ConvexPolygon square{{P(0, 0), P(1, 0), P(1, 1), P(0, 1)}};
    ClipResult r = clip_polygon_by_line(square, {P(1, 2, 0, 1), P(1, 2, 1, 1)});
    REQUIRE(r.left);
    REQUIRE(r.right);
    CHECK(area(*r.left) == ratio(1, 2));
    CHECK(area(*r.right) == ratio(1, 2));
    CHECK(r.left->vertices == std::vector<Point2>{P(0, 0), P(1, 2, 0, 1), P(1, 2, 1, 1), P(0, 1)});
    CHECK(r.right->vertices == std::vector<Point2>{P(1, 2, 0, 1), P(1, 0), P(1, 1), P(1, 2, 1, 1)});

    ConvexPolygon tri{{P(0, 0), P(4, 0), P(0, 4)}};
    ClipResult miss = clip_polygon_by_line(tri, {P(0, -1), P(1, -1)});
    REQUIRE(miss.left);
    CHECK(miss.left->vertices == tri.vertices);
    CHECK_FALSE(miss.right);
  }

  TEST_CASE("clip pieces partition the polygon area and lie on their sides") {
    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
      std::vector<Point2> pts;
      for (int k = 0; k < 8; ++k) pts.emplace_back(static_cast<long>(pick(rng, 11)), static_cast<long>(pick(rng, 11)));
      Hull h = convex_hull(pts);
      if (!h.full_dimensional()) continue;
      ConvexPolygon poly = h.polygon();
      Line line{P(static_cast<long>(pick(rng, 11)), static_cast<long>(pick(rng, 11))),
                P(static_cast<long>(pick(rng, 11)) + 20, static_cast<long>(pick(rng, 31)) - 10)};
      ClipResult r = clip_polygon_by_line(poly, line);
      Rational total(0);
      if (r.left) {
        total += area(*r.left);
        for (const auto& v : r.left->vertices) CHECK(orientation(line.a, line.b, v) != Orientation::Right);
        CHECK(signed_area(*r.left) > 0);
      }
      if (r.right) {
        total += area(*r.right);
        for (const auto& v : r.right->vertices) CHECK(orientation(line.a, line.b, v) != Orientation::Left);
      }
      CHECK(total == area(poly));
    }
  }

  TEST_CASE("polygons_intersect examples") {
    ConvexPolygon a{{P(0, 0), P(1, 0), P(1, 1), P(0, 1)}};
    ConvexPolygon b{{P(2, 0), P(3, 0), P(3, 1), P(2, 1)}};
    CHECK_FALSE(polygons_intersect(a, b));
    ConvexPolygon outer{{P(0, 0), P(9, 0), P(0, 9)}};
    ConvexPolygon inner{{P(1, 1), P(2, 1), P(1, 2)}};
    CHECK(polygons_intersect(outer, inner));
    CHECK(polygons_intersect(inner, outer));
    ConvexPolygon corner{{P(1, 1), P(2, 1), P(2, 2)}};
    CHECK(polygons_intersect(a, corner));
  }

  TEST_CASE("polygons_intersect agrees with a brute-force edge/containment test") {
    Rng rng(14);
    auto random_poly = [&] {
      for (;;) {
        std::vector<Point2> pts;
        long ox = static_cast<long>(pick(rng, 8)), oy = static_cast<long>(pick(rng, 8));
        for (int k = 0; k < 5; ++k) pts.emplace_back(ox + static_cast<long>(pick(rng, 5)), oy + static_cast<long>(pick(rng, 5)));
        Hull h = convex_hull(pts);
        if (h.full_dimensional()) return h.polygon();
      }
    };
    for (int i = 0; i < 1000; ++i) {
      ConvexPolygon a = random_poly(), b = random_poly();
      bool brute = point_in_polygon(a.vertices[0], b) != Location::Exterior ||
                   point_in_polygon(b.vertices[0], a) != Location::Exterior;
      for (std::size_t x = 0; x < a.size() && !brute; ++x)
        for (std::size_t y = 0; y < b.size() && !brute; ++y)
          if (segments_intersect(a.edge(x), b.edge(y)).relation != SegmentRelation::Disjoint) brute = true;
      CHECK(polygons_intersect(a, b) == brute);
    }
  }
}

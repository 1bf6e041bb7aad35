#include <doctest.h>

#include <random>

#include "ncycle/geometry.hpp"

using namespace ncycle;
namespace ix = ncycle::intersection;

namespace {

Point P(std::int64_t x, std::int64_t y) { return Point{Rational(x), Rational(y)}; }
Segment S(Point a, Point b, std::size_t i = 0) { return Segment(std::move(a), std::move(b), i); }

Orientation flip(Orientation o) { return static_cast<Orientation>(-static_cast<int>(o)); }

}  // namespace

TEST_CASE("rational normalizes to lowest terms with a positive denominator") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, -5).str() == "0/1");
  CHECK(Rational(7).str() == "7/1");
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational parse accepts p/q and integers, rejects junk") {
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("+5/10") == Rational(1, 2));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational::parse("123456789012345678901234567890/3").str() == "41152263004115226300411522630/1");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("-"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
}

TEST_CASE("rational decimal rendering rounds half away from zero") {
  CHECK(Rational(1, 3).to_decimal(6) == "0.333333");
  CHECK(Rational(2, 3).to_decimal(6) == "0.666667");
  CHECK(Rational(-2, 3).to_decimal(6) == "-0.666667");
  CHECK(Rational(1, 2).to_decimal(0) == "1");
  CHECK(Rational(-1, 2).to_decimal(0) == "-1");
  CHECK(Rational(5).to_decimal(2) == "5.00");
  CHECK(Rational(-1, 10000000).to_decimal(6) == "0.000000");
  CHECK(Rational(1005, 1000).to_decimal(2) == "1.01");
}

TEST_CASE("rational arithmetic is exact") {
  Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(third * Rational(3) == Rational(1));
  CHECK(Rational(1) / third == Rational(3));
  CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(abs(Rational(-3, 4)) == Rational(3, 4));
}

TEST_CASE("orientation examples") {
  CHECK(orientation(P(0, 0), P(1, 0), P(0, 1)) == Orientation::CCW);
  CHECK(orientation(P(0, 0), P(1, 1), P(2, 2)) == Orientation::Collinear);
  CHECK(orientation(P(0, 0), P(0, 1), P(1, 0)) == Orientation::CW);
}

TEST_CASE("orientation is exact where doubles are not") {
  // 0.1 + 0.2 style inputs: exactly collinear as rationals.
  const Point a{Rational(1, 10), Rational(1, 10)};
  const Point b{Rational(2, 10), Rational(2, 10)};
  const Point c{Rational(3, 10), Rational(3, 10)};
  CHECK(orientation(a, b, c) == Orientation::Collinear);
  const Point d{Rational(3, 10), Rational(3, 10) + Rational(1, std::int64_t{1} << 60)};
  CHECK(orientation(a, b, d) == Orientation::CCW);
}

TEST_CASE("segment_intersection examples") {
  CHECK(segment_intersection(S(P(0, 0), P(2, 2)), S(P(0, 2), P(2, 0))) == IntersectionResult{ix::ProperCrossing{P(1, 1)}});
  CHECK(segment_intersection(S(P(0, 0), P(1, 0)), S(P(1, 0), P(1, 1))) == IntersectionResult{ix::EndpointTouch{P(1, 0)}});
  CHECK(segment_intersection(S(P(0, 0), P(1, 0)), S(P(0, 1), P(1, 1))) == IntersectionResult{ix::Disjoint{}});
  CHECK(segment_intersection(S(P(0, 0), P(2, 0)), S(P(1, 0), P(3, 0))) == IntersectionResult{ix::CollinearOverlap{}});
}

TEST_CASE("segment_intersection edge cases") {
  SUBCASE("T junction is an endpoint touch") {
    CHECK(segment_intersection(S(P(0, 0), P(4, 0)), S(P(2, 0), P(2, 3))) == IntersectionResult{ix::EndpointTouch{P(2, 0)}});
  }
  SUBCASE("collinear end to end touch") {
    CHECK(segment_intersection(S(P(0, 0), P(1, 1)), S(P(2, 2), P(1, 1))) == IntersectionResult{ix::EndpointTouch{P(1, 1)}});
  }
  SUBCASE("collinear with a gap") {
    CHECK(segment_intersection(S(P(0, 0), P(1, 1)), S(P(2, 2), P(3, 3))) == IntersectionResult{ix::Disjoint{}});
  }
  SUBCASE("containment overlaps") {
    CHECK(segment_intersection(S(P(0, 0), P(4, 0)), S(P(1, 0), P(2, 0))) == IntersectionResult{ix::CollinearOverlap{}});
  }
  SUBCASE("lines cross outside both segments") {
    CHECK(segment_intersection(S(P(0, 0), P(1, 0)), S(P(2, -1), P(2, 1))) == IntersectionResult{ix::Disjoint{}});
  }
  SUBCASE("rational crossing point") {
    const auto r = segment_intersection(S(P(0, 0), P(3, 1)), S(P(0, 1), P(1, 0)));
    REQUIRE(std::holds_alternative<ix::ProperCrossing>(r));
    CHECK(std::get<ix::ProperCrossing>(r).point == Point{Rational(3, 4), Rational(1, 4)});
  }
}

TEST_CASE("sort_points_along examples") {
  const Segment s = S(P(0, 0), P(4, 0));
  CHECK(sort_points_along(s, {P(3, 0), P(1, 0)}) == std::vector<Point>{P(1, 0), P(3, 0)});
  CHECK(sort_points_along(s, {P(2, 0), P(2, 0)}) == std::vector<Point>{P(2, 0)});
  CHECK_THROWS_AS(sort_points_along(s, {P(1, 1)}), PointNotOnSegment);
  CHECK_THROWS_AS(sort_points_along(s, {P(5, 0)}), PointNotOnSegment);
  // Direction follows a -> b.
  CHECK(sort_points_along(S(P(4, 4), P(0, 0)), {P(1, 1), P(3, 3), P(0, 0)}) ==
        std::vector<Point>{P(3, 3), P(1, 1), P(0, 0)});
}

TEST_CASE("segment rejects coincident endpoints") { CHECK_THROWS_AS(S(P(1, 1), P(1, 1)), DegenerateSegment); }

TEST_CASE("property: orientation antisymmetry, intersection symmetry and scaling") {
  std::mt19937_64 rng(42);
  // Small grid so collinear and touching cases are frequent.
  auto coord = [&] { return static_cast<std::int64_t>(rng() % 7); };
  auto rnd = [&] { return P(coord(), coord()); };
  std::size_t crossings = 0;
  std::size_t touches = 0;
  std::size_t overlaps = 0;
  for (int iter = 0; iter < 3000; ++iter) {
    const Point p = rnd(), q = rnd(), r = rnd();
    const Orientation o = orientation(p, q, r);
    CHECK(orientation(q, p, r) == flip(o));
    CHECK(orientation(p, r, q) == flip(o));
    CHECK(orientation(r, q, p) == flip(o));

    Point a = rnd(), b = rnd(), c = rnd(), d = rnd();
    if (a == b || c == d) continue;
    const Segment s1 = S(a, b, 0), s2 = S(c, d, 1);
    const auto r12 = segment_intersection(s1, s2);
    CHECK(r12 == segment_intersection(s2, s1));
    CHECK(r12 == segment_intersection(S(b, a), S(d, c)));

    if (const auto* x = std::get_if<ix::ProperCrossing>(&r12)) {
      ++crossings;
      CHECK(orientation(a, b, x->point) == Orientation::Collinear);
      CHECK(orientation(c, d, x->point) == Orientation::Collinear);
      CHECK_FALSE(x->point == a);
      CHECK_FALSE(x->point == c);
    }
    if (const auto* t = std::get_if<ix::EndpointTouch>(&r12)) {
      ++touches;
      CHECK((t->point == a || t->point == b || t->point == c || t->point == d));
      CHECK(on_segment(t->point, s1));
      CHECK(on_segment(t->point, s2));
    }
    overlaps += std::holds_alternative<ix::CollinearOverlap>(r12);

    const Rational k(static_cast<std::int64_t>(rng() % 9 + 1), static_cast<std::int64_t>(rng() % 5 + 1));
    auto scale = [&](const Point& pt) { return Point{pt.x * k, pt.y * k}; };
    const auto scaled = segment_intersection(S(scale(a), scale(b)), S(scale(c), scale(d)));
    CHECK(scaled.index() == r12.index());
    if (const auto* x = std::get_if<ix::ProperCrossing>(&r12)) {
      CHECK(std::get<ix::ProperCrossing>(scaled).point == scale(x->point));
    }
    if (const auto* t = std::get_if<ix::EndpointTouch>(&r12)) {
      CHECK(std::get<ix::EndpointTouch>(scaled).point == scale(t->point));
    }
  }
  // The generator must actually reach every variant.
  CHECK(crossings > 100);
  CHECK(touches > 100);
  CHECK(overlaps > 10);
}

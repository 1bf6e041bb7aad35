#include "ncycle/geometry.hpp"

#include <algorithm>
#include <utility>

namespace ncycle {

std::string to_string(const Point& p) { return "(" + p.x.str() + ", " + p.y.str() + ")"; }

Segment::Segment(Point a, Point b, std::size_t cycle_index)
    : a_(std::move(a)), b_(std::move(b)), cycle_index_(cycle_index) {
  if (a_ == b_) throw DegenerateSegment();
}

Rational cross(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  return static_cast<Orientation>(cross(p, q, r).sign());
}

namespace {

bool within_box(const Point& p, const Point& a, const Point& b) {
  const auto [xlo, xhi] = std::minmax(a.x, b.x);
  const auto [ylo, yhi] = std::minmax(a.y, b.y);
  return xlo <= p.x && p.x <= xhi && ylo <= p.y && p.y <= yhi;
}

IntersectionResult collinear_case(const Segment& s1, const Segment& s2) {
  // Lexicographic order on points is a total order along any common line.
  const auto [lo1, hi1] = std::minmax(s1.a(), s1.b());
  const auto [lo2, hi2] = std::minmax(s2.a(), s2.b());
  const Point& lo = std::max(lo1, lo2);
  const Point& hi = std::min(hi1, hi2);
  if (hi < lo) return intersection::Disjoint{};
  if (lo == hi) return intersection::EndpointTouch{lo};
  return intersection::CollinearOverlap{};
}

}  // namespace

bool on_segment(const Point& p, const Segment& s) {
  return orientation(s.a(), s.b(), p) == Orientation::Collinear && within_box(p, s.a(), s.b());
}

IntersectionResult segment_intersection(const Segment& s1, const Segment& s2) {
  const Rational d1 = cross(s2.a(), s2.b(), s1.a());
  const Rational d2 = cross(s2.a(), s2.b(), s1.b());
  const Rational d3 = cross(s1.a(), s1.b(), s2.a());
  const Rational d4 = cross(s1.a(), s1.b(), s2.b());

  if (d1.is_zero() && d2.is_zero()) return collinear_case(s1, s2);

  if (d1.sign() * d2.sign() < 0 && d3.sign() * d4.sign() < 0) {
    const Rational t = d1 / (d1 - d2);
    return intersection::ProperCrossing{
        Point{s1.a().x + t * (s1.b().x - s1.a().x), s1.a().y + t * (s1.b().y - s1.a().y)}};
  }

  // Not collinear, so at most one shared point, and it must be an endpoint.
  if (d1.is_zero() && within_box(s1.a(), s2.a(), s2.b())) return intersection::EndpointTouch{s1.a()};
  if (d2.is_zero() && within_box(s1.b(), s2.a(), s2.b())) return intersection::EndpointTouch{s1.b()};
  if (d3.is_zero() && within_box(s2.a(), s1.a(), s1.b())) return intersection::EndpointTouch{s2.a()};
  if (d4.is_zero() && within_box(s2.b(), s1.a(), s1.b())) return intersection::EndpointTouch{s2.b()};
  return intersection::Disjoint{};
}

std::vector<Point> sort_points_along(const Segment& s, std::vector<Point> pts) {
  const Rational dx = s.b().x - s.a().x;
  const Rational dy = s.b().y - s.a().y;
  std::vector<std::pair<Rational, Point>> keyed;
  keyed.reserve(pts.size());
  for (auto& p : pts) {
    if (!on_segment(p, s)) throw PointNotOnSegment(p);
    Rational key = (p.x - s.a().x) * dx + (p.y - s.a().y) * dy;
    keyed.emplace_back(std::move(key), std::move(p));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<Point> out;
  out.reserve(keyed.size());
  for (auto& [key, p] : keyed) {
    if (out.empty() || !(out.back() == p)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace ncycle

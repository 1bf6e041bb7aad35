#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ncycle/rational.hpp"

namespace ncycle {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point&, const Point&) = default;
};

std::string to_string(const Point& p);

/// A straight connection between two consecutive corners of a cycle.
/// `cycle_index` is the position i of the connection corner i -> corner i+1.
class Segment {
 public:
  Segment(Point a, Point b, std::size_t cycle_index);

  const Point& a() const { return a_; }
  const Point& b() const { return b_; }
  std::size_t cycle_index() const { return cycle_index_; }

 private:
  Point a_;
  Point b_;
  std::size_t cycle_index_;
};

class DegenerateSegment : public std::invalid_argument {
 public:
  DegenerateSegment() : std::invalid_argument("segment endpoints coincide") {}
};

class PointNotOnSegment : public std::invalid_argument {
 public:
  explicit PointNotOnSegment(const Point& p)
      : std::invalid_argument("point " + to_string(p) + " does not lie on the segment") {}
};

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

/// Sign of the cross product (q - p) x (r - p).
Orientation orientation(const Point& p, const Point& q, const Point& r);

/// The exact cross product (q - p) x (r - p).
Rational cross(const Point& p, const Point& q, const Point& r);

/// True if p lies on the closed segment s.
bool on_segment(const Point& p, const Segment& s);

namespace intersection {
struct Disjoint {
  friend bool operator==(const Disjoint&, const Disjoint&) = default;
};
/// Crossing strictly interior to both segments.
struct ProperCrossing {
  Point point;
  friend bool operator==(const ProperCrossing&, const ProperCrossing&) = default;
};
/// Single shared point that is an endpoint of at least one segment.
struct EndpointTouch {
  Point point;
  friend bool operator==(const EndpointTouch&, const EndpointTouch&) = default;
};
/// Collinear segments sharing more than one point.
struct CollinearOverlap {
  friend bool operator==(const CollinearOverlap&, const CollinearOverlap&) = default;
};
}  // namespace intersection

using IntersectionResult = std::variant<intersection::Disjoint, intersection::ProperCrossing,
                                        intersection::EndpointTouch, intersection::CollinearOverlap>;

IntersectionResult segment_intersection(const Segment& s1, const Segment& s2);

/// Orders points on s from s.a() towards s.b(), merging duplicates.
/// Throws PointNotOnSegment if any point is off the segment.
std::vector<Point> sort_points_along(const Segment& s, std::vector<Point> pts);

}  // namespace ncycle

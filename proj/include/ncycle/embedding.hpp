#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncycle/errors.hpp"
#include "ncycle/geometry.hpp"

namespace ncycle {

/// N corners in cycle order. Segment i joins corner i to corner (i + 1) mod N.
///
/// Only the size is checked on construction; coincident corners and other
/// degeneracies are representable and reported by validate_general_position.
class CycleEmbedding {
 public:
  explicit CycleEmbedding(std::vector<Point> corners);

  std::size_t size() const { return corners_.size(); }
  const std::vector<Point>& corners() const { return corners_; }
  const Point& corner(std::size_t i) const { return corners_.at(i); }

  /// Throws DegenerateSegment if corners i and i+1 coincide.
  Segment segment(std::size_t i) const;

  friend bool operator==(const CycleEmbedding&, const CycleEmbedding&) = default;

 private:
  std::vector<Point> corners_;
};

struct TriplePoint {
  Point point;
  std::vector<std::size_t> segments;
  friend bool operator==(const TriplePoint&, const TriplePoint&) = default;
};

/// Every way an embedding fails general position. Empty means general position.
struct DegeneracyReport {
  std::vector<TriplePoint> triple_points;
  /// (corner index, cycle index of a non-incident segment containing it)
  std::vector<std::pair<std::size_t, std::size_t>> corner_incidences;
  std::vector<std::pair<std::size_t, std::size_t>> collinear_overlaps;
  std::vector<std::pair<std::size_t, std::size_t>> coincident_corners;

  bool empty() const {
    return triple_points.empty() && corner_incidences.empty() && collinear_overlaps.empty() &&
           coincident_corners.empty();
  }
  std::string summary() const;
};

class DegenerateInput : public std::runtime_error {
 public:
  explicit DegenerateInput(DegeneracyReport report);
  const DegeneracyReport& report() const { return report_; }

 private:
  DegeneracyReport report_;
};

inline constexpr int kDefaultPolygonDigits = 10;
inline constexpr int kPerturbRetries = 64;

/// Vertices of a regular k-gon of circumradius `scale`, starting at angle 0
/// and going counter-clockwise. cos/sin are rounded to `digits` decimals.
std::vector<Point> regular_polygon_points(std::size_t k, const Rational& scale, int digits);

/// Star polygon for odd n: cycle position i sits on polygon vertex i*(n-1)/2 mod n.
/// Every segment crosses every other one.
CycleEmbedding construct_odd(std::size_t n, std::uint64_t seed = 0);

/// Corner labels (0-based) of the even construction listed in cycle order,
/// starting from corner 0. Labels are the corners' positions around the
/// polygon. Throws ConstructionNotACycle if the segment set is not one cycle.
std::vector<std::size_t> even_cycle_order(std::size_t n);

/// Places corner label c of `order` on vertex (c + rotation) mod k of a
/// regular k-gon, k >= order.size().
CycleEmbedding place_on_polygon(const std::vector<std::size_t>& order, std::size_t k, std::size_t rotation,
                                int digits = kDefaultPolygonDigits);

/// Even-n construction with two splitters and n-2 one-off splitters, placed on
/// n of the n+1 vertices of a regular (n+1)-gon and perturbed if degenerate.
CycleEmbedding construct_even(std::size_t n, std::uint64_t seed = 0);

/// Dispatches on parity.
CycleEmbedding construct_optimal(std::size_t n, std::uint64_t seed = 0);

DegeneracyReport validate_general_position(const CycleEmbedding& emb);

/// 1e-4 times the largest coordinate distance of a corner from the bounding-box center.
Rational default_perturbation_epsilon(const CycleEmbedding& emb);

/// Displaces each corner by a seeded rational offset of length <= epsilon,
/// retrying up to kPerturbRetries times until the result is in general position.
/// Throws std::invalid_argument for epsilon <= 0, PerturbationFailed when
/// retries run out.
CycleEmbedding perturb(const CycleEmbedding& emb, const Rational& epsilon, std::uint64_t seed);

/// Returns emb unchanged when already in general position, otherwise perturbs
/// it with the default epsilon.
CycleEmbedding ensure_general_position(const CycleEmbedding& emb, std::uint64_t seed);

}  // namespace ncycle

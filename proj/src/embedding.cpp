#include "ncycle/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "ncycle/arrangement.hpp"
#include "ncycle/formulas.hpp"

namespace ncycle {

CycleEmbedding::CycleEmbedding(std::vector<Point> corners) : corners_(std::move(corners)) {
  if (corners_.size() < 3) throw InvalidN("a cycle embedding needs at least 3 corners");
}

Segment CycleEmbedding::segment(std::size_t i) const {
  return Segment(corners_.at(i), corners_.at((i + 1) % corners_.size()), i);
}

std::string DegeneracyReport::summary() const {
  std::ostringstream out;
  out << triple_points.size() << " triple point(s), " << corner_incidences.size() << " corner incidence(s), "
      << collinear_overlaps.size() << " collinear overlap(s), " << coincident_corners.size()
      << " coincident corner pair(s)";
  if (!coincident_corners.empty()) {
    out << "; first coincident pair: corners " << coincident_corners.front().first << " and "
        << coincident_corners.front().second;
  } else if (!collinear_overlaps.empty()) {
    out << "; first overlap: segments " << collinear_overlaps.front().first << " and "
        << collinear_overlaps.front().second;
  } else if (!corner_incidences.empty()) {
    out << "; first incidence: corner " << corner_incidences.front().first << " on segment "
        << corner_incidences.front().second;
  } else if (!triple_points.empty()) {
    out << "; first triple point at " << to_string(triple_points.front().point);
  }
  return out.str();
}

DegenerateInput::DegenerateInput(DegeneracyReport report)
    : std::runtime_error("degenerate embedding: " + report.summary()), report_(std::move(report)) {}

std::vector<Point> regular_polygon_points(std::size_t k, const Rational& scale, int digits) {
  if (k < 3) throw std::invalid_argument("regular polygon needs k >= 3");
  if (digits < 4 || digits > 18) throw std::invalid_argument("polygon digits must be in [4, 18]");
  std::int64_t denom = 1;
  for (int i = 0; i < digits; ++i) denom *= 10;
  const long double d = static_cast<long double>(denom);

  std::vector<Point> pts;
  pts.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(j) /
                              static_cast<long double>(k);
    const Rational x(std::llround(std::cos(angle) * d), denom);
    const Rational y(std::llround(std::sin(angle) * d), denom);
    pts.push_back(Point{scale * x, scale * y});
  }
  std::vector<Point> sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("too few digits to keep polygon vertices distinct");
  }
  return pts;
}

CycleEmbedding place_on_polygon(const std::vector<std::size_t>& order, std::size_t k, std::size_t rotation,
                                int digits) {
  if (k < order.size()) throw std::invalid_argument("polygon has fewer vertices than the cycle");
  const auto pts = regular_polygon_points(k, Rational(1), digits);
  std::vector<Point> corners;
  corners.reserve(order.size());
  for (std::size_t label : order) {
    if (label >= k) throw std::invalid_argument("corner label outside the polygon");
    corners.push_back(pts[(label + rotation) % k]);
  }
  return CycleEmbedding(std::move(corners));
}

CycleEmbedding construct_odd(std::size_t n, std::uint64_t seed) {
  if (n < 3 || n % 2 == 0) throw InvalidN("construct_odd needs odd n >= 3, got " + std::to_string(n));
  const std::size_t step = (n - 1) / 2;
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = (i * step) % n;
  return ensure_general_position(place_on_polygon(order, n, 0), seed);
}

std::vector<std::size_t> even_cycle_order(std::size_t n) {
  if (n < 4 || n % 2 != 0) throw InvalidN("even construction needs even n >= 4, got " + std::to_string(n));
  // Labels 1..n here, matching the usual presentation; converted to 0-based on return.
  auto edge = [](std::size_t a, std::size_t b) { return std::pair{std::min(a, b), std::max(a, b)}; };
  const std::size_t step = (n - 2) / 2;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t c = 1; c <= n; ++c) edges.insert(edge(c, (c + step - 1) % n + 1));

  const std::size_t half = n / 2;
  if (edges.erase(edge(1, half)) != 1 || edges.erase(edge(half + 1, n)) != 1) {
    throw ConstructionNotACycle("swapped pair missing from the step-" + std::to_string(step) + " segments");
  }
  edges.insert(edge(1, half + 1));
  edges.insert(edge(half, n));

  std::vector<std::vector<std::size_t>> adj(n + 1);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (std::size_t c = 1; c <= n; ++c) {
    if (adj[c].size() != 2) throw ConstructionNotACycle("corner " + std::to_string(c) + " has degree != 2");
    std::sort(adj[c].begin(), adj[c].end());
  }

  std::vector<std::size_t> order{0};
  std::size_t prev = 1;
  std::size_t cur = adj[1][0];
  while (cur != 1) {
    if (order.size() == n) break;
    order.push_back(cur - 1);
    const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
  }
  if (order.size() != n || cur != 1) {
    throw ConstructionNotACycle("segments close a cycle of length " + std::to_string(order.size()) +
                                " instead of " + std::to_string(n));
  }
  return order;
}

CycleEmbedding construct_even(std::size_t n, std::uint64_t seed) {
  const auto order = even_cycle_order(n);
  const auto target = f_max(static_cast<std::int64_t>(n));
  // Rotation 0 leaves the unused polygon vertex between corners n-1 and 0,
  // the shared neighbours of the two swapped segments.
  for (std::size_t rotation = 0; rotation <= n; ++rotation) {
    CycleEmbedding emb = place_on_polygon(order, n + 1, rotation);
    try {
      emb = ensure_general_position(emb, seed);
    } catch (const PerturbationFailed&) {
      continue;
    }
    const auto splits = splitter_analysis(emb);
    if (region_count_euler(build_arrangement(emb)) == target && splits.splitters() == 2 &&
        splits.one_off_splitters() == n - 2) {
      return emb;
    }
  }
  throw ConstructionFailed("no rotation of the even construction reached f(" + std::to_string(n) + ")");
}

CycleEmbedding construct_optimal(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw InvalidN("n must be at least 3, got " + std::to_string(n));
  return n % 2 == 1 ? construct_odd(n, seed) : construct_even(n, seed);
}

DegeneracyReport validate_general_position(const CycleEmbedding& emb) {
  DegeneracyReport report;
  const std::size_t n = emb.size();
  const auto& c = emb.corners();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (c[i] == c[j]) report.coincident_corners.emplace_back(i, j);
    }
  }

  std::vector<std::optional<Segment>> segs(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(c[i] == c[(i + 1) % n])) segs[i].emplace(emb.segment(i));
  }

  std::map<Point, std::set<std::size_t>> meeting;
  for (std::size_t i = 0; i < n; ++i) {
    if (!segs[i]) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!segs[j]) continue;
      const auto r = segment_intersection(*segs[i], *segs[j]);
      if (std::holds_alternative<intersection::CollinearOverlap>(r)) {
        report.collinear_overlaps.emplace_back(i, j);
      } else if (const auto* x = std::get_if<intersection::ProperCrossing>(&r)) {
        meeting[x->point].insert({i, j});
      } else if (const auto* t = std::get_if<intersection::EndpointTouch>(&r)) {
        meeting[t->point].insert({i, j});
      }
    }
  }
  for (auto& [p, s] : meeting) {
    if (s.size() >= 3) report.triple_points.push_back(TriplePoint{p, {s.begin(), s.end()}});
  }

  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t before = (k + n - 1) % n;
    for (std::size_t s = 0; s < n; ++s) {
      if (s == k || s == before || !segs[s]) continue;
      if (on_segment(c[k], *segs[s])) report.corner_incidences.emplace_back(k, s);
    }
  }
  return report;
}

Rational default_perturbation_epsilon(const CycleEmbedding& emb) {
  const auto& c = emb.corners();
  const auto [xlo, xhi] = std::minmax_element(c.begin(), c.end(), [](auto& a, auto& b) { return a.x < b.x; });
  const auto [ylo, yhi] = std::minmax_element(c.begin(), c.end(), [](auto& a, auto& b) { return a.y < b.y; });
  const Rational radius = std::max(xhi->x - xlo->x, yhi->y - ylo->y) / Rational(2);
  const Rational eps = radius / Rational(10000);
  return eps.is_zero() ? Rational(1, 10000) : eps;
}

CycleEmbedding perturb(const CycleEmbedding& emb, const Rational& epsilon, std::uint64_t seed) {
  if (epsilon.sign() <= 0) throw std::invalid_argument("perturbation epsilon must be positive");
  // Offsets are multiples of epsilon / (2 * kSteps) in [-epsilon/2, epsilon/2]
  // per coordinate, so each displacement has length below epsilon.
  constexpr std::uint64_t kSteps = 1u << 20;
  const Rational unit = epsilon / Rational(static_cast<std::int64_t>(2 * kSteps));

  for (int retry = 0; retry < kPerturbRetries; ++retry) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(retry)};
    std::mt19937_64 rng(seq);
    auto offset = [&] {
      const auto k = static_cast<std::int64_t>(rng() % (2 * kSteps + 1)) - static_cast<std::int64_t>(kSteps);
      return unit * Rational(k);
    };
    std::vector<Point> moved;
    moved.reserve(emb.size());
    for (const auto& p : emb.corners()) {
      Rational dx = offset();
      Rational dy = offset();
      moved.push_back(Point{p.x + dx, p.y + dy});
    }
    CycleEmbedding candidate(std::move(moved));
    if (validate_general_position(candidate).empty()) return candidate;
  }
  throw PerturbationFailed("no general-position perturbation found within " + std::to_string(kPerturbRetries) +
                           " retries (epsilon " + epsilon.str() + ")");
}

CycleEmbedding ensure_general_position(const CycleEmbedding& emb, std::uint64_t seed) {
  if (validate_general_position(emb).empty()) return emb;
  return perturb(emb, default_perturbation_epsilon(emb), seed);
}

}  // namespace ncycle

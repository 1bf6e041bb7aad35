#include "ncycle/search.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <string>

#include "ncycle/arrangement.hpp"

namespace ncycle {

namespace {

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

std::vector<Point> random_grid_points(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = static_cast<std::int64_t>(rng() % (kGridMax + 1));
    const auto y = static_cast<std::int64_t>(rng() % (kGridMax + 1));
    pts.push_back(Point{Rational(x), Rational(y)});
  }
  return pts;
}

void shuffle(std::vector<Point>& pts, std::mt19937_64& rng) {
  // std::shuffle's draw sequence is implementation-defined; this one is fixed.
  for (std::size_t i = pts.size(); i > 1; --i) std::swap(pts[i - 1], pts[rng() % i]);
}

std::size_t interleaved_pairs(const std::size_t* order, std::size_t n) {
  std::size_t lo[kOracleMaxN + 1];
  std::size_t hi[kOracleMaxN + 1];
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t a = order[i];
    const std::size_t b = order[(i + 1) % n];
    lo[i] = std::min(a, b);
    hi[i] = std::max(a, b);
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (lo[i] == lo[j] || lo[i] == hi[j] || hi[i] == lo[j] || hi[i] == hi[j]) continue;
      const bool first_inside = lo[i] < lo[j] && lo[j] < hi[i];
      const bool second_inside = lo[i] < hi[j] && hi[j] < hi[i];
      if (first_inside != second_inside) ++count;
    }
  }
  return count;
}

}  // namespace

CyclicPermutation::CyclicPermutation(std::vector<std::size_t> order) {
  const std::size_t n = order.size();
  if (n < 3) throw std::invalid_argument("cyclic permutation needs at least 3 elements");
  std::vector<bool> seen(n, false);
  for (std::size_t v : order) {
    if (v >= n || seen[v]) throw std::invalid_argument("cyclic permutation must be a bijection on 0..n-1");
    seen[v] = true;
  }
  std::rotate(order.begin(), std::find(order.begin(), order.end(), std::size_t{0}), order.end());
  std::vector<std::size_t> reversed(order.rbegin(), order.rend() - 1);
  reversed.insert(reversed.begin(), 0);
  order_ = std::min(order, reversed);
}

std::size_t crossing_count_convex(const CyclicPermutation& perm) {
  const auto& order = perm.order();
  const std::size_t n = order.size();
  // Generic path for n beyond the oracle's fixed-size buffers.
  if (n > kOracleMaxN) {
    std::size_t count = 0;
    auto chord = [&](std::size_t i) { return std::minmax(order[i], order[(i + 1) % n]); };
    for (std::size_t i = 0; i < n; ++i) {
      const auto [a, b] = chord(i);
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto [c, d] = chord(j);
        if (a == c || a == d || b == c || b == d) continue;
        if ((a < c && c < b) != (a < d && d < b)) ++count;
      }
    }
    return count;
  }
  return interleaved_pairs(order.data(), n);
}

OracleResult oracle_max_regions_convex(std::size_t n) {
  if (n < 3) throw InvalidN("oracle needs n >= 3, got " + std::to_string(n));
  if (n > kOracleMaxN) {
    throw NTooLarge("oracle enumerates (n-1)!/2 orders; n = " + std::to_string(n) + " exceeds " +
                    std::to_string(kOracleMaxN));
  }
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});

  std::size_t best = 0;
  std::vector<std::size_t> best_order = p;
  std::uint64_t evaluated = 0;
  bool first = true;
  // next_permutation walks lexicographically, so the first strict maximum is
  // the smallest witness. p[1] < p[n-1] selects one order per reflection pair.
  do {
    if (p[1] > p[n - 1]) continue;
    ++evaluated;
    const std::size_t c = interleaved_pairs(p.data(), n);
    if (first || c > best) {
      best = c;
      best_order = p;
      first = false;
    }
  } while (std::next_permutation(p.begin() + 1, p.end()));

  return OracleResult{n, static_cast<std::int64_t>(best) + 1, CyclicPermutation(best_order), evaluated};
}

CycleEmbedding realize_convex(const CyclicPermutation& perm, std::uint64_t seed) {
  return ensure_general_position(place_on_polygon(perm.order(), perm.size(), 0), seed);
}

CycleEmbedding random_general_position_embedding(std::size_t n, std::uint64_t seed) {
  auto rng = make_rng(seed, 0);
  return ensure_general_position(CycleEmbedding(random_grid_points(n, rng)), seed);
}

SearchResult random_search(std::size_t n, std::size_t trials, std::uint64_t seed) {
  if (n < 3) throw InvalidN("random search needs n >= 3, got " + std::to_string(n));
  if (trials < 1) throw std::invalid_argument("random search needs at least one trial");

  std::optional<SearchResult> result;
  std::size_t evaluated = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = make_rng(seed, t + 1);
    auto pts = random_grid_points(n, rng);
    for (int variant = 0; variant < 2; ++variant) {
      if (variant == 1) shuffle(pts, rng);
      CycleEmbedding emb(pts);
      try {
        emb = ensure_general_position(emb, rng());
      } catch (const PerturbationFailed&) {
        continue;
      }
      ++evaluated;
      const std::int64_t regions = region_count_euler(build_arrangement(emb));
      if (!result || regions > result->best_regions) result = SearchResult{regions, std::move(emb), 0, 0};
    }
  }
  if (!result) throw PerturbationFailed("no random placement could be brought into general position");
  result->trials = trials;
  result->evaluated = evaluated;
  return *result;
}

std::size_t splitter_bound_check(std::size_t n, std::size_t trials, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw InvalidN("splitter bound check needs even n >= 4, got " + std::to_string(n));
  std::size_t most = splitter_analysis(construct_even(n, seed)).splitters();
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = make_rng(seed, t + 1);
    auto pts = random_grid_points(n, rng);
    shuffle(pts, rng);
    try {
      most = std::max(most, splitter_analysis(CycleEmbedding(std::move(pts))).splitters());
    } catch (const DegenerateInput&) {
      // overlapping or zero-length segments have no well-defined splitter count
    }
  }
  return most;
}

}  // namespace ncycle

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ncycle/embedding.hpp"

namespace ncycle {

/// Cyclic order of n corners in convex position, labelled 0..n-1 around the
/// hull. Stored canonically: rotated to start at 0, then the smaller of the
/// order and its reversal, so each dihedral class has one representative.
class CyclicPermutation {
 public:
  /// Throws std::invalid_argument unless `order` is a bijection on {0..n-1}, n >= 3.
  explicit CyclicPermutation(std::vector<std::size_t> order);

  std::size_t size() const { return order_.size(); }
  const std::vector<std::size_t>& order() const { return order_; }

  friend bool operator==(const CyclicPermutation&, const CyclicPermutation&) = default;
  friend auto operator<=>(const CyclicPermutation&, const CyclicPermutation&) = default;

 private:
  std::vector<std::size_t> order_;
};

/// Pairs of cycle segments whose endpoints alternate around the hull; for
/// points in convex position these are exactly the crossing pairs.
std::size_t crossing_count_convex(const CyclicPermutation& perm);

inline constexpr std::size_t kOracleMaxN = 11;

struct OracleResult {
  std::size_t n = 0;
  std::int64_t max_regions = 0;
  CyclicPermutation witness;  // lexicographically smallest maximiser
  std::uint64_t evaluated_count = 0;
};

/// Exhaustive maximum over all (n-1)!/2 canonical cyclic orders.
/// Throws InvalidN for n < 3, NTooLarge for n > kOracleMaxN.
OracleResult oracle_max_regions_convex(std::size_t n);

/// Places perm on a regular n-gon (perturbed into general position if
/// needed) so that cycle position i sits at hull label perm.order()[i].
CycleEmbedding realize_convex(const CyclicPermutation& perm, std::uint64_t seed = 0);

inline constexpr std::int64_t kGridMax = 1'000'000;

/// Corners sampled uniformly from the integer grid [0, kGridMax]^2 in the
/// order drawn, perturbed if not in general position.
CycleEmbedding random_general_position_embedding(std::size_t n, std::uint64_t seed);

struct SearchResult {
  std::int64_t best_regions = 0;
  CycleEmbedding best;
  std::size_t trials = 0;
  std::size_t evaluated = 0;  // placements actually counted (two per trial unless skipped)
};

/// Random placements, each counted with the drawn cycle order and with a
/// random reordering of the same corners. Deterministic per seed.
SearchResult random_search(std::size_t n, std::size_t trials, std::uint64_t seed);

/// Largest splitter count seen over construct_even(n) and `trials` random
/// placements with random cycle orders. Throws InvalidN unless n is even and >= 4.
std::size_t splitter_bound_check(std::size_t n, std::size_t trials, std::uint64_t seed);

}  // namespace ncycle

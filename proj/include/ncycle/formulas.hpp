#pragma once

#include <cstdint>

namespace ncycle {

enum class Parity { Odd, Even };

struct ParityCase {
  std::int64_t n;
  Parity parity;
};

/// Throws InvalidN for n < 3 (or n too large for 64-bit results).
ParityCase parity_case(std::int64_t n);

/// Maximum number of bounded regions of a straight-line N-cycle embedding:
///   even n: n^2/2 - 2n + 2
///   odd n:  n^2/2 - 3n/2 + 1
std::int64_t f_max(std::int64_t n);

/// Vertex count of the optimal construction: n(n-1)/2 for odd n,
/// ((n-2)^2 + 2(n-1))/2 for even n.
std::int64_t predicted_vertices(std::int64_t n);

/// Edge count of the optimal construction: n(n-2) for odd n,
/// (n-2)(n-3) + 2(n-2) for even n.
std::int64_t predicted_edges(std::int64_t n);

}  // namespace ncycle

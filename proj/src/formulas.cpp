#include "ncycle/formulas.hpp"

#include <string>

#include "ncycle/errors.hpp"

namespace ncycle {

namespace {
// Keeps n^2 well inside int64.
constexpr std::int64_t kMaxN = std::int64_t{1} << 30;
}  // namespace

ParityCase parity_case(std::int64_t n) {
  if (n < 3) throw InvalidN("n must be at least 3, got " + std::to_string(n));
  if (n > kMaxN) throw InvalidN("n too large for exact 64-bit formulas: " + std::to_string(n));
  return ParityCase{n, n % 2 == 0 ? Parity::Even : Parity::Odd};
}

std::int64_t f_max(std::int64_t n) {
  if (parity_case(n).parity == Parity::Even) return n * (n / 2) - 2 * n + 2;
  return (n * n - 3 * n + 2) / 2;
}

std::int64_t predicted_vertices(std::int64_t n) {
  if (parity_case(n).parity == Parity::Even) return ((n - 2) * (n - 2) + 2 * (n - 1)) / 2;
  return n * (n - 1) / 2;
}

std::int64_t predicted_edges(std::int64_t n) {
  if (parity_case(n).parity == Parity::Even) return (n - 2) * (n - 3) + 2 * (n - 2);
  return n * (n - 2);
}

}  // namespace ncycle

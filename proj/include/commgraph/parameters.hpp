#pragma once

#include <cstdint>
#include <string>

#include "commgraph/errors.hpp"

namespace commgraph {

/// Largest n accepted by the closed formulas (keeps every count inside 64 bits).
inline constexpr std::uint64_t kMaxFormulaOrder = std::uint64_t{1} << 30;

/// Checks that (n, r) can be the order and 2-rank of a G with non-abelian D(G):
/// 2^r divides n and n > 2^r. Returns 2^r.
inline std::uint64_t check_dihedral_parameters(std::uint64_t n, int r) {
  if (r < 0 || r > 29) {
    throw InvalidParameters("2-rank r=" + std::to_string(r) + " out of range");
  }
  if (n < 2 || n > kMaxFormulaOrder) {
    throw InvalidParameters("order n=" + std::to_string(n) + " out of range");
  }
  const std::uint64_t center = std::uint64_t{1} << r;
  if (n % center != 0) {
    throw InvalidParameters("2^r=" + std::to_string(center) + " does not divide n=" +
                            std::to_string(n));
  }
  if (n == center) {
    throw ElementaryAbelian2Error("n = 2^r = " + std::to_string(n) +
                                  ": D(G) is abelian and the formulas do not apply");
  }
  return center;
}

}  // namespace commgraph

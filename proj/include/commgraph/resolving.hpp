#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "commgraph/graph.hpp"

namespace commgraph {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultMaxResolvingVertices = 16;

/// All-pairs hop counts.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t size, std::vector<std::uint32_t> hops)
      : size_(size), hops_(std::move(hops)) {}

  std::size_t size() const noexcept { return size_; }
  std::uint32_t at(std::size_t u, std::size_t v) const noexcept { return hops_[u * size_ + v]; }
  std::uint32_t max() const noexcept;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint32_t> hops_;
};

/// Breadth-first search from every vertex. Throws DisconnectedGraph.
DistanceMatrix distance_matrix(const CommutingGraph& g);

/// Maximal twin-sets of size >= 2 plus the vertices twin to nothing.
struct TwinSetDecomposition {
  std::vector<std::vector<std::size_t>> twin_sets;
  std::vector<std::size_t> singletons;
};

TwinSetDecomposition twin_sets(const CommutingGraph& g);

/// Sum of (l - 1) over twin-sets of size l: no resolving set is smaller.
std::size_t twin_lower_bound(const TwinSetDecomposition& twins);

/// True iff the distance vectors to the landmarks, taken in ascending vertex
/// order, are pairwise distinct.
bool is_resolving(const DistanceMatrix& distances, std::span<const std::size_t> landmarks);
/// Same, landmarks given as a bit mask (graphs of at most 64 vertices).
bool is_resolving(const DistanceMatrix& distances, std::uint64_t landmarks);

/// Metric dimension: 2n - n/2^r - 2 when r >= 1, 2n - 3 when r = 0.
std::uint64_t metric_dimension_formula(std::uint64_t n, int r);

struct MetricDimensionResult {
  std::size_t beta = 0;
  std::vector<std::size_t> witness;  ///< one resolving set of size beta
};

/// Smallest resolving set by exhaustive search, ascending from the twin bound.
MetricDimensionResult metric_dimension_oracle(
    const CommutingGraph& g, std::size_t max_vertices = kDefaultMaxResolvingVertices);

/// Number of resolving subsets of exactly `size` vertices, by enumeration.
std::uint64_t count_resolving_subsets(const CommutingGraph& g, std::size_t size,
                                      std::size_t max_vertices = kDefaultMaxResolvingVertices);

/// Coefficients s_beta, ..., s_{|V|} of sum s_i x^i, where s_i counts resolving sets of size i.
class ResolvingPolynomial {
 public:
  ResolvingPolynomial() = default;
  ResolvingPolynomial(std::size_t beta, std::size_t vertex_count, std::vector<BigInt> coeffs);

  std::size_t beta() const noexcept { return beta_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  /// s_i; zero outside [beta, vertex_count].
  BigInt coefficient(std::size_t i) const;
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  BigInt total() const;

  friend bool operator==(const ResolvingPolynomial&, const ResolvingPolynomial&) = default;

 private:
  std::size_t beta_ = 0;
  std::size_t vertex_count_ = 0;
  std::vector<BigInt> coeffs_;
};

ResolvingPolynomial resolving_polynomial_formula(std::uint64_t n, int r);

/// Counts resolving sets of every size over all 2^|V| subsets. A subset whose
/// one-smaller subset resolves is counted without testing (supersets of
/// resolving sets resolve).
ResolvingPolynomial resolving_polynomial_oracle(
    const CommutingGraph& g, std::size_t max_vertices = kDefaultMaxResolvingVertices);

/// Number of subsets whose complement meets every twin-set at most once:
/// (n - 2^r + 1)(2^r + 1)^{n/2^r + 1} for r >= 1 and 2n(n + 1) for r = 0.
BigInt resolving_set_total_formula(std::uint64_t n, int r);

std::string to_string(const BigInt& value);

}  // namespace commgraph

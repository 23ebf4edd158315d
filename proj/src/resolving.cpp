#include "commgraph/resolving.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <optional>
#include <stdexcept>

#include "commgraph/errors.hpp"
#include "commgraph/parameters.hpp"

namespace commgraph {

namespace {

constexpr std::uint32_t kUnreached = static_cast<std::uint32_t>(-1);
constexpr std::size_t kMaxEnumerationVertices = 28;

void require_enumerable(const CommutingGraph& g, std::size_t max_vertices) {
  const auto cap = std::min(max_vertices, kMaxEnumerationVertices);
  if (g.vertex_count() > cap) {
    throw CapExceeded("resolving-set enumeration limited to " + std::to_string(cap) +
                      " vertices, graph has " + std::to_string(g.vertex_count()));
  }
}

std::uint64_t full_mask(std::size_t count) {
  return count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

// Calls visit(mask) for every subset of {0..count-1} with `size` elements,
// in increasing numeric order (Gosper's hack). Stops early when visit returns false.
template <typename Visit>
void for_each_subset(std::size_t count, std::size_t size, Visit&& visit) {
  if (size > count) {
    return;
  }
  if (size == 0) {
    visit(std::uint64_t{0});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << count;
  std::uint64_t x = (std::uint64_t{1} << size) - 1;
  while (x < limit) {
    if (!visit(x)) {
      return;
    }
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
}

// Same sets, but walking complements when the sets are more than half the vertices.
template <typename Visit>
void for_each_subset_or_complement(std::size_t count, std::size_t size, Visit&& visit) {
  if (2 * size <= count) {
    for_each_subset(count, size, visit);
  } else {
    const auto all = full_mask(count);
    for_each_subset(count, count - size, [&](std::uint64_t complement) {
      return visit(all ^ complement);
    });
  }
}

std::vector<std::size_t> mask_members(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (; mask != 0; mask &= mask - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
  }
  return out;
}

BigInt binomial(std::uint64_t m, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > m) {
    return 0;
  }
  BigInt out = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    out *= m - static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(j);
    out /= j;
  }
  return out;
}

BigInt power(std::uint64_t base, std::int64_t exponent) {
  BigInt out = 1;
  for (std::int64_t j = 0; j < exponent; ++j) {
    out *= base;
  }
  return out;
}

}  // namespace

std::uint32_t DistanceMatrix::max() const noexcept {
  return hops_.empty() ? 0 : *std::max_element(hops_.begin(), hops_.end());
}

DistanceMatrix distance_matrix(const CommutingGraph& g) {
  const auto count = g.vertex_count();
  std::vector<std::uint32_t> hops(count * count, kUnreached);
  std::deque<std::size_t> queue;
  for (std::size_t s = 0; s < count; ++s) {
    auto* row = hops.data() + s * count;
    row[s] = 0;
    queue.assign({s});
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < count; ++v) {
        if (row[v] == kUnreached && g.adjacent(u, v)) {
          row[v] = row[u] + 1;
          queue.push_back(v);
        }
      }
    }
    if (std::find(row, row + count, kUnreached) != row + count) {
      throw DisconnectedGraph("distance matrix needs a connected graph");
    }
  }
  return DistanceMatrix(count, std::move(hops));
}

TwinSetDecomposition twin_sets(const CommutingGraph& g) {
  TwinSetDecomposition out;
  for (auto& cls : twin_classes(g)) {
    if (cls.size() >= 2) {
      out.twin_sets.push_back(std::move(cls));
    } else {
      out.singletons.push_back(cls.front());
    }
  }
  return out;
}

std::size_t twin_lower_bound(const TwinSetDecomposition& twins) {
  std::size_t bound = 0;
  for (const auto& set : twins.twin_sets) {
    bound += set.size() - 1;
  }
  return bound;
}

bool is_resolving(const DistanceMatrix& distances, std::span<const std::size_t> landmarks) {
  const auto count = distances.size();
  std::vector<std::size_t> sorted(landmarks.begin(), landmarks.end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto s : sorted) {
    if (s >= count) {
      throw StructuralError("landmark " + std::to_string(s) + " out of range");
    }
  }
  std::vector<std::vector<std::uint32_t>> vectors(count);
  for (std::size_t v = 0; v < count; ++v) {
    vectors[v].reserve(sorted.size());
    for (const auto s : sorted) {
      vectors[v].push_back(distances.at(v, s));
    }
  }
  std::sort(vectors.begin(), vectors.end());
  return std::adjacent_find(vectors.begin(), vectors.end()) == vectors.end();
}

bool is_resolving(const DistanceMatrix& distances, std::uint64_t landmarks) {
  const auto count = distances.size();
  if (count > 64 || (count < 64 && (landmarks >> count) != 0)) {
    throw StructuralError("landmark mask does not fit the graph");
  }
  const auto size = static_cast<std::size_t>(std::popcount(landmarks));
  if (size > 16 || distances.max() > 15) {
    const auto members = mask_members(landmarks);
    return is_resolving(distances, std::span<const std::size_t>(members));
  }
  // Four bits per landmark distance.
  std::uint64_t keys[64];
  for (std::size_t v = 0; v < count; ++v) {
    std::uint64_t key = 0;
    for (auto rest = landmarks; rest != 0; rest &= rest - 1) {
      const auto s = static_cast<std::size_t>(std::countr_zero(rest));
      key = (key << 4) | distances.at(v, s);
    }
    keys[v] = key;
  }
  std::sort(keys, keys + count);
  return std::adjacent_find(keys, keys + count) == keys + count;
}

std::uint64_t metric_dimension_formula(std::uint64_t n, int r) {
  const auto center = check_dihedral_parameters(n, r);
  if (r == 0) {
    return 2 * n - 3;
  }
  return 2 * n - n / center - 2;
}

MetricDimensionResult metric_dimension_oracle(const CommutingGraph& g, std::size_t max_vertices) {
  require_enumerable(g, max_vertices);
  const auto count = g.vertex_count();
  const auto distances = distance_matrix(g);
  const auto lower = twin_lower_bound(twin_sets(g));
  for (auto size = lower; size <= count; ++size) {
    std::optional<std::uint64_t> found;
    for_each_subset_or_complement(count, size, [&](std::uint64_t mask) {
      if (is_resolving(distances, mask)) {
        found = mask;
        return false;
      }
      return true;
    });
    if (found) {
      return MetricDimensionResult{size, mask_members(*found)};
    }
  }
  // V itself always resolves, so this is unreachable for non-empty graphs.
  return MetricDimensionResult{count, mask_members(full_mask(count))};
}

std::uint64_t count_resolving_subsets(const CommutingGraph& g, std::size_t size,
                                      std::size_t max_vertices) {
  require_enumerable(g, max_vertices);
  const auto distances = distance_matrix(g);
  std::uint64_t total = 0;
  for_each_subset_or_complement(g.vertex_count(), size, [&](std::uint64_t mask) {
    total += is_resolving(distances, mask) ? 1 : 0;
    return true;
  });
  return total;
}

ResolvingPolynomial::ResolvingPolynomial(std::size_t beta, std::size_t vertex_count,
                                         std::vector<BigInt> coeffs)
    : beta_(beta), vertex_count_(vertex_count), coeffs_(std::move(coeffs)) {
  if (beta_ + coeffs_.size() != vertex_count_ + 1) {
    throw StructuralError("resolving polynomial needs one coefficient per size in [beta, |V|]");
  }
}

BigInt ResolvingPolynomial::coefficient(std::size_t i) const {
  if (i < beta_ || i > vertex_count_) {
    return 0;
  }
  return coeffs_[i - beta_];
}

BigInt ResolvingPolynomial::total() const {
  BigInt sum = 0;
  for (const auto& c : coeffs_) {
    sum += c;
  }
  return sum;
}

ResolvingPolynomial resolving_polynomial_formula(std::uint64_t n, int r) {
  const auto center = check_dihedral_parameters(n, r);
  const auto vertices = 2 * n;
  if (r == 0) {
    std::vector<BigInt> coeffs{BigInt(n) * (n - 1), BigInt(n) * n + n - 1, BigInt(2 * n), 1};
    return ResolvingPolynomial(static_cast<std::size_t>(vertices - 3),
                               static_cast<std::size_t>(vertices), std::move(coeffs));
  }

  const auto blocks = n / center;
  const auto beta = vertices - blocks - 2;
  const auto twin_count = blocks + 1;  // Omega1 and the blocks, all of size 2^r
  auto general_term = [&](std::uint64_t i) {
    const auto k = static_cast<std::int64_t>(vertices - i);
    return BigInt(n - center) * power(center, k - 1) * binomial(twin_count, k - 1) +
           power(center, k) * binomial(twin_count, k);
  };

  std::vector<BigInt> coeffs;
  const BigInt smallest = BigInt(n - center) * power(center, static_cast<std::int64_t>(blocks + 1));
  if (general_term(beta) != smallest) {
    throw std::logic_error("resolving polynomial: general term disagrees with s_beta");
  }
  coeffs.push_back(smallest);
  for (auto i = vertices - blocks - 1; i <= vertices - 2; ++i) {
    coeffs.push_back(general_term(i));
  }
  coeffs.push_back(BigInt(vertices));
  coeffs.push_back(1);
  return ResolvingPolynomial(static_cast<std::size_t>(beta), static_cast<std::size_t>(vertices),
                             std::move(coeffs));
}

ResolvingPolynomial resolving_polynomial_oracle(const CommutingGraph& g,
                                                std::size_t max_vertices) {
  require_enumerable(g, max_vertices);
  const auto count = g.vertex_count();
  const auto distances = distance_matrix(g);
  const std::uint64_t subsets = std::uint64_t{1} << count;
  std::vector<std::uint8_t> resolving(subsets, 0);
  std::vector<std::uint64_t> per_size(count + 1, 0);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    bool known = false;
    for (auto rest = mask; rest != 0; rest &= rest - 1) {
      if (resolving[mask & ~(rest & (~rest + 1))] != 0) {
        known = true;
        break;
      }
    }
    if (known || is_resolving(distances, mask)) {
      resolving[mask] = 1;
      ++per_size[static_cast<std::size_t>(std::popcount(mask))];
    }
  }
  std::size_t beta = 0;
  while (beta < count && per_size[beta] == 0) {
    ++beta;
  }
  std::vector<BigInt> coeffs;
  for (auto i = beta; i <= count; ++i) {
    coeffs.emplace_back(per_size[i]);
  }
  return ResolvingPolynomial(beta, count, std::move(coeffs));
}

BigInt resolving_set_total_formula(std::uint64_t n, int r) {
  const auto center = check_dihedral_parameters(n, r);
  if (r == 0) {
    return BigInt(2 * n) * (n + 1);
  }
  return BigInt(n - center + 1) * power(center + 1, static_cast<std::int64_t>(n / center + 1));
}

std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace commgraph

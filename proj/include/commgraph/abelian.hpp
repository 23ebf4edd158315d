#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace commgraph {

/// Largest group order accepted anywhere in the library. The exact oracles
/// downstream are exponential, so larger inputs are rejected up front.
inline constexpr std::int64_t kMaxGroupOrder = std::int64_t{1} << 20;

/// An element of Z_{m1} x ... x Z_{mk}, one reduced residue per factor.
struct GroupElement {
  std::vector<std::int64_t> residues;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// A finite abelian group given as a direct product of cyclic groups.
///
/// Trivial factors (m = 1) are dropped on construction and the factor order is
/// kept exactly as supplied. The 2-rank r is obtained by counting the
/// solutions of 2g = 0, so `Z6` and `Z2xZ3` report identical (n, r).
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<std::int64_t> moduli);

  std::span<const std::int64_t> moduli() const noexcept { return moduli_; }
  std::size_t rank() const noexcept { return moduli_.size(); }
  std::int64_t order() const noexcept { return order_; }
  int two_rank() const noexcept { return two_rank_; }
  /// |{g : g^2 = e}| = 2^r.
  std::int64_t involution_count() const noexcept { return std::int64_t{1} << two_rank_; }

  /// Canonical text form, e.g. "Z4xZ3".
  std::string spec() const;

  GroupElement identity() const;
  bool contains(const GroupElement& a) const noexcept;

  // Lexicographic rank of an element (first factor most significant) and its inverse.
  std::int64_t index_of(const GroupElement& a) const;
  GroupElement element_at(std::int64_t index) const;

  /// All n elements in lexicographic order of residue vectors.
  std::vector<GroupElement> elements() const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.moduli_ == b.moduli_;
  }

 private:
  std::vector<std::int64_t> moduli_;
  std::int64_t order_ = 1;
  int two_rank_ = 0;
};

/// Parses `Z<m>` tokens joined by `x` (case-insensitive, no whitespace).
/// Throws ParseError naming the offending token.
AbelianGroup parse_group_spec(std::string_view spec);

GroupElement add(const AbelianGroup& group, const GroupElement& a, const GroupElement& b);
GroupElement negate(const AbelianGroup& group, const GroupElement& a);
GroupElement square(const AbelianGroup& group, const GroupElement& a);

/// Every g with g^2 = e, in lexicographic order. Always 2^r elements.
std::vector<GroupElement> involutions(const AbelianGroup& group);

/// True iff every factor is Z2, i.e. D(G) is abelian.
bool is_elementary_abelian_2(const AbelianGroup& group);

/// "3,1" for the residues (3, 1).
std::string to_text(const GroupElement& a);

}  // namespace commgraph

#include "commgraph/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "commgraph/errors.hpp"

namespace commgraph {

namespace {

void require_member(const AbelianGroup& group, const GroupElement& a) {
  if (a.residues.size() != group.rank()) {
    throw StructuralError("element has " + std::to_string(a.residues.size()) +
                          " coordinates, group " + group.spec() + " has " +
                          std::to_string(group.rank()));
  }
  if (!group.contains(a)) {
    throw StructuralError("element (" + to_text(a) + ") is not reduced for " + group.spec());
  }
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<std::int64_t> moduli) {
  for (const auto m : moduli) {
    if (m < 1) {
      throw StructuralError("cyclic factor modulus must be >= 1, got " + std::to_string(m));
    }
    if (m == 1) {
      continue;
    }
    if (order_ > kMaxGroupOrder / m) {
      throw StructuralError("group order exceeds the limit of " + std::to_string(kMaxGroupOrder));
    }
    order_ *= m;
    moduli_.push_back(m);
  }
  if (moduli_.empty()) {
    throw StructuralError("group is trivial after removing Z1 factors");
  }

  // 2-rank by direct count: 2x = 0 (mod m) has solutions counted per factor,
  // and the condition on G is coordinatewise.
  std::int64_t involution_count = 1;
  for (const auto m : moduli_) {
    std::int64_t solutions = 0;
    for (std::int64_t x = 0; x < m; ++x) {
      if ((2 * x) % m == 0) {
        ++solutions;
      }
    }
    involution_count *= solutions;
  }
  while ((std::int64_t{1} << two_rank_) < involution_count) {
    ++two_rank_;
  }
}

std::string AbelianGroup::spec() const {
  std::string out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i > 0) {
      out += 'x';
    }
    out += 'Z';
    out += std::to_string(moduli_[i]);
  }
  return out;
}

GroupElement AbelianGroup::identity() const {
  return GroupElement{std::vector<std::int64_t>(moduli_.size(), 0)};
}

bool AbelianGroup::contains(const GroupElement& a) const noexcept {
  if (a.residues.size() != moduli_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (a.residues[i] < 0 || a.residues[i] >= moduli_[i]) {
      return false;
    }
  }
  return true;
}

std::int64_t AbelianGroup::index_of(const GroupElement& a) const {
  require_member(*this, a);
  std::int64_t index = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    index = index * moduli_[i] + a.residues[i];
  }
  return index;
}

GroupElement AbelianGroup::element_at(std::int64_t index) const {
  if (index < 0 || index >= order_) {
    throw StructuralError("element index " + std::to_string(index) + " out of range for " +
                          spec());
  }
  GroupElement a{std::vector<std::int64_t>(moduli_.size(), 0)};
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    a.residues[i] = index % moduli_[i];
    index /= moduli_[i];
  }
  return a;
}

std::vector<GroupElement> AbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order_));
  GroupElement current = identity();
  for (std::int64_t k = 0; k < order_; ++k) {
    out.push_back(current);
    // Odometer increment, last factor fastest.
    for (std::size_t i = moduli_.size(); i-- > 0;) {
      if (++current.residues[i] < moduli_[i]) {
        break;
      }
      current.residues[i] = 0;
    }
  }
  return out;
}

AbelianGroup parse_group_spec(std::string_view spec) {
  if (spec.empty()) {
    throw ParseError("empty group specification", "");
  }
  std::vector<std::int64_t> moduli;
  std::size_t pos = 0;
  while (true) {
    const auto end = spec.find_first_of("xX", pos);
    const auto token = spec.substr(pos, end == std::string_view::npos ? end : end - pos);
    const std::string token_text(token);
    if (token.size() < 2 || (token[0] != 'Z' && token[0] != 'z')) {
      throw ParseError("malformed factor '" + token_text + "', expected Z<m>", token_text);
    }
    const auto digits = token.substr(1);
    if (!std::all_of(digits.begin(), digits.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; })) {
      throw ParseError("malformed factor '" + token_text + "', expected Z<m>", token_text);
    }
    std::int64_t m = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec == std::errc::result_out_of_range || m > kMaxGroupOrder) {
      throw ParseError("factor '" + token_text + "' exceeds the order limit of " +
                           std::to_string(kMaxGroupOrder),
                       token_text);
    }
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw ParseError("malformed factor '" + token_text + "'", token_text);
    }
    if (m < 1) {
      throw ParseError("factor '" + token_text + "' must have modulus >= 1", token_text);
    }
    moduli.push_back(m);
    if (end == std::string_view::npos) {
      break;
    }
    pos = end + 1;
  }

  std::int64_t order = 1;
  for (const auto m : moduli) {
    if (order > kMaxGroupOrder / m) {
      throw ParseError("group order of '" + std::string(spec) + "' exceeds the limit of " +
                           std::to_string(kMaxGroupOrder),
                       std::string(spec));
    }
    order *= m;
  }
  if (order == 1) {
    throw ParseError("'" + std::string(spec) + "' is the trivial group after removing Z1 factors",
                     std::string(spec));
  }
  return AbelianGroup(std::move(moduli));
}

GroupElement add(const AbelianGroup& group, const GroupElement& a, const GroupElement& b) {
  require_member(group, a);
  require_member(group, b);
  GroupElement out{std::vector<std::int64_t>(group.rank(), 0)};
  const auto moduli = group.moduli();
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    out.residues[i] = (a.residues[i] + b.residues[i]) % moduli[i];
  }
  return out;
}

GroupElement negate(const AbelianGroup& group, const GroupElement& a) {
  require_member(group, a);
  GroupElement out{std::vector<std::int64_t>(group.rank(), 0)};
  const auto moduli = group.moduli();
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    out.residues[i] = (moduli[i] - a.residues[i]) % moduli[i];
  }
  return out;
}

GroupElement square(const AbelianGroup& group, const GroupElement& a) {
  return add(group, a, a);
}

std::vector<GroupElement> involutions(const AbelianGroup& group) {
  // Coordinatewise solutions of 2x = 0, combined in lexicographic order.
  const auto moduli = group.moduli();
  std::vector<std::vector<std::int64_t>> per_factor;
  for (const auto m : moduli) {
    std::vector<std::int64_t> roots;
    for (std::int64_t x = 0; x < m; ++x) {
      if ((2 * x) % m == 0) {
        roots.push_back(x);
      }
    }
    per_factor.push_back(std::move(roots));
  }
  std::vector<GroupElement> out{group.identity()};
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    std::vector<GroupElement> next;
    for (const auto& prefix : out) {
      for (const auto x : per_factor[i]) {
        auto e = prefix;
        e.residues[i] = x;
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_elementary_abelian_2(const AbelianGroup& group) {
  const auto moduli = group.moduli();
  return std::all_of(moduli.begin(), moduli.end(), [](std::int64_t m) { return m == 2; });
}

std::string to_text(const GroupElement& a) {
  std::string out;
  for (std::size_t i = 0; i < a.residues.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(a.residues[i]);
  }
  return out;
}

}  // namespace commgraph

#include "commgraph/dihedral.hpp"

#include <algorithm>
#include <map>

#include "commgraph/errors.hpp"

namespace commgraph {

DihedralElement d_mul(const AbelianGroup& group, const DihedralElement& x,
                      const DihedralElement& y) {
  const auto twisted = x.s == Sign::Plus ? y.g : negate(group, y.g);
  return DihedralElement{add(group, x.g, twisted), x.s * y.s};
}

bool commutes(const AbelianGroup& group, const DihedralElement& x, const DihedralElement& y) {
  if (!group.contains(x.g) || !group.contains(y.g)) {
    throw StructuralError("element does not belong to " + group.spec());
  }
  if (x.s == Sign::Plus && y.s == Sign::Plus) {
    return true;
  }
  if (x.s == Sign::Minus && y.s == Sign::Minus) {
    return square(group, x.g) == square(group, y.g);
  }
  const auto& rotation = x.s == Sign::Plus ? x.g : y.g;
  return square(group, rotation) == group.identity();
}

bool commutes_by_definition(const AbelianGroup& group, const DihedralElement& x,
                            const DihedralElement& y) {
  return d_mul(group, x, y) == d_mul(group, y, x);
}

std::vector<DihedralElement> dihedral_elements(const AbelianGroup& group) {
  const auto elements = group.elements();
  std::vector<DihedralElement> out;
  out.reserve(2 * elements.size());
  for (const auto& g : elements) {
    out.push_back({g, Sign::Plus});
  }
  for (const auto& g : elements) {
    out.push_back({g, Sign::Minus});
  }
  return out;
}

std::vector<DihedralElement> center(const AbelianGroup& group) {
  if (is_elementary_abelian_2(group)) {
    return dihedral_elements(group);
  }
  std::vector<DihedralElement> out;
  for (auto& g : involutions(group)) {
    out.push_back({std::move(g), Sign::Plus});
  }
  return out;
}

std::vector<DihedralElement> center_by_scan(const AbelianGroup& group) {
  const auto all = dihedral_elements(group);
  std::vector<DihedralElement> out;
  for (const auto& x : all) {
    const bool central = std::all_of(all.begin(), all.end(), [&](const DihedralElement& y) {
      return commutes_by_definition(group, x, y);
    });
    if (central) {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<DihedralElement> OmegaPartition::canonical_order() const {
  std::vector<DihedralElement> out;
  out.insert(out.end(), omega1.begin(), omega1.end());
  out.insert(out.end(), omega2.begin(), omega2.end());
  for (const auto& block : blocks) {
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

OmegaPartition omega_partition(const AbelianGroup& group) {
  if (is_elementary_abelian_2(group)) {
    throw ElementaryAbelian2Error(group.spec() +
                                  " is elementary abelian of exponent 2, so D(G) is abelian");
  }
  OmegaPartition partition;
  // Keyed by lexicographic index of the square, which orders the blocks.
  std::map<std::int64_t, std::vector<DihedralElement>> by_square;
  const auto identity = group.identity();
  for (auto& g : group.elements()) {
    const auto sq = square(group, g);
    if (sq == identity) {
      partition.omega1.push_back({g, Sign::Plus});
    } else {
      partition.omega2.push_back({g, Sign::Plus});
    }
    by_square[group.index_of(sq)].push_back({std::move(g), Sign::Minus});
  }
  partition.blocks.reserve(by_square.size());
  for (auto& [key, block] : by_square) {
    partition.blocks.push_back(std::move(block));
  }
  return partition;
}

std::string to_text(const DihedralElement& x) {
  return "(" + to_text(x.g) + (x.s == Sign::Plus ? ";+)" : ";-)");
}

}  // namespace commgraph

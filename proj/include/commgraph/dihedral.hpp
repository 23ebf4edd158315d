#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "commgraph/abelian.hpp"

namespace commgraph {

/// The C2 component of a D(G) element, as the multiplicative group {+1, -1}.
enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

inline Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::Plus : Sign::Minus;
}

/// An element (g, s) of D(G) = G x| C2, where -1 acts on G by inversion.
struct DihedralElement {
  GroupElement g;
  Sign s = Sign::Plus;

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

/// (g1, s1)(g2, s2) = (g1 + s1*g2, s1*s2).
DihedralElement d_mul(const AbelianGroup& group, const DihedralElement& x,
                      const DihedralElement& y);

/// Commutation via the closed criteria: two rotations always commute, two
/// reflections commute iff their squares agree, and a rotation commutes with a
/// reflection iff the rotation is central.
bool commutes(const AbelianGroup& group, const DihedralElement& x, const DihedralElement& y);

/// Commutation by multiplying both ways.
bool commutes_by_definition(const AbelianGroup& group, const DihedralElement& x,
                            const DihedralElement& y);

/// All 2n elements: sign +1 in lexicographic order, then sign -1 likewise.
std::vector<DihedralElement> dihedral_elements(const AbelianGroup& group);

/// Z(D(G)) = {(g, +1) : g^2 = e}, or all of D(G) when G is elementary abelian 2.
std::vector<DihedralElement> center(const AbelianGroup& group);

/// Center computed by testing every element against every other one.
std::vector<DihedralElement> center_by_scan(const AbelianGroup& group);

/// Omega1 (the center), Omega2 (the other rotations) and the blocks of
/// Omega3: reflections grouped by the square of their G component.
struct OmegaPartition {
  std::vector<DihedralElement> omega1;
  std::vector<DihedralElement> omega2;
  std::vector<std::vector<DihedralElement>> blocks;

  std::size_t block_count() const noexcept { return blocks.size(); }
  /// omega1, omega2, then the blocks in order. This is the vertex order of every graph.
  std::vector<DihedralElement> canonical_order() const;
};

/// Throws ElementaryAbelian2Error when D(G) is abelian.
OmegaPartition omega_partition(const AbelianGroup& group);

/// "(3,1;-)".
std::string to_text(const DihedralElement& x);

}  // namespace commgraph

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "commgraph/abelian.hpp"
#include "commgraph/dihedral.hpp"

namespace commgraph {

enum class Part : std::uint8_t { Omega1, Omega2, Omega3 };

/// Which part of the Omega partition a vertex belongs to. `block` is the
/// zero-based block index and only meaningful for Omega3.
struct PartLabel {
  Part part = Part::Omega1;
  std::size_t block = 0;

  friend bool operator==(const PartLabel&, const PartLabel&) = default;
};

std::string to_string(Part part);

/// Square 0/1 matrix with bit-packed rows.
class AdjacencyMatrix {
 public:
  AdjacencyMatrix() = default;
  explicit AdjacencyMatrix(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool test(std::size_t u, std::size_t v) const noexcept {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  /// Sets (u, v) and (v, u).
  void connect(std::size_t u, std::size_t v) noexcept {
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  }
  std::span<const std::uint64_t> row(std::size_t u) const noexcept {
    return {bits_.data() + u * words_, words_};
  }
  std::size_t row_count(std::size_t u) const noexcept;

  friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

 private:
  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// A simple undirected graph on a canonically ordered vertex list.
///
/// Graphs built from a group carry their D(G) elements; synthetic graphs from
/// `build_structural_graph` have only part labels.
class CommutingGraph {
 public:
  CommutingGraph(AdjacencyMatrix adjacency, std::vector<PartLabel> part_labels,
                 std::vector<DihedralElement> vertices = {});

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  bool adjacent(std::size_t u, std::size_t v) const noexcept { return adjacency_.test(u, v); }
  const AdjacencyMatrix& adjacency() const noexcept { return adjacency_; }
  const std::vector<PartLabel>& part_labels() const noexcept { return part_labels_; }
  const std::vector<DihedralElement>& vertices() const noexcept { return vertices_; }
  bool is_synthetic() const noexcept { return vertices_.empty(); }

  /// Element text form for group graphs, e.g. "(3;-)"; "O1:0", "O2:3", "B2:1" otherwise.
  std::string vertex_label(std::size_t v) const;

  /// Neighbourhood as a single word. Only valid for graphs of at most 64 vertices.
  std::uint64_t neighbor_mask(std::size_t v) const;

 private:
  AdjacencyMatrix adjacency_;
  std::vector<PartLabel> part_labels_;
  std::vector<DihedralElement> vertices_;
};

/// Picks the vertex set X of a commuting graph.
class VertexSelector {
 public:
  enum class Kind { All, Omega1, Omega2, Omega3, Block, Explicit };

  static VertexSelector all() { return VertexSelector(Kind::All); }
  static VertexSelector omega1() { return VertexSelector(Kind::Omega1); }
  static VertexSelector omega2() { return VertexSelector(Kind::Omega2); }
  static VertexSelector omega3() { return VertexSelector(Kind::Omega3); }
  static VertexSelector block(std::size_t index) {
    VertexSelector s(Kind::Block);
    s.block_ = index;
    return s;
  }
  static VertexSelector elements(std::vector<DihedralElement> elements) {
    VertexSelector s(Kind::Explicit);
    s.elements_ = std::move(elements);
    return s;
  }

  Kind kind() const noexcept { return kind_; }
  std::size_t block_index() const noexcept { return block_; }
  const std::vector<DihedralElement>& explicit_elements() const noexcept { return elements_; }

 private:
  explicit VertexSelector(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::size_t block_ = 0;
  std::vector<DihedralElement> elements_;
};

/// How edges are decided when building from a group.
enum class CommuteRule {
  Definition,  ///< multiply both ways and compare
  Criteria,    ///< closed criteria from `commutes`
};

/// Graphs above this many vertices are not materialised by the report.
inline constexpr std::size_t kDefaultMaxGraphVertices = 4096;

/// Commuting graph Gamma(D(G), X), vertices in canonical order, u ~ v iff uv = vu.
CommutingGraph build_commuting_graph(const AbelianGroup& group,
                                     const VertexSelector& selector = VertexSelector::all(),
                                     CommuteRule rule = CommuteRule::Definition);

/// K_{2^r} joined with (K_{n-2^r} plus n/2^r disjoint copies of K_{2^r}),
/// laid out in the same part order as a group graph.
CommutingGraph build_structural_graph(std::uint64_t n, int r);

/// True iff both adjacency matrices are identical. Throws on size mismatch.
bool edge_sets_equal(const CommutingGraph& a, const CommutingGraph& b);

/// First (u, v), u < v, where the two graphs disagree.
std::optional<std::pair<std::size_t, std::size_t>> first_edge_difference(const CommutingGraph& a,
                                                                         const CommutingGraph& b);

std::size_t degree(const CommutingGraph& g, std::size_t v);
std::size_t edge_count(const CommutingGraph& g);
bool is_connected(const CommutingGraph& g);

/// Equivalence classes of the twin relation (N[u] = N[v] or N(u) = N(v)),
/// singletons included, each sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> twin_classes(const CommutingGraph& g);

/// Graphviz DOT with one cluster per part; blocks nest inside the Omega3 cluster.
void write_dot(std::ostream& out, const CommutingGraph& g);

/// 0/1 matrix, header row of quoted vertex labels.
void write_adjacency_csv(std::ostream& out, const CommutingGraph& g);

}  // namespace commgraph

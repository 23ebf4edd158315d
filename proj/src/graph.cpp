#include "commgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

#include "commgraph/errors.hpp"

namespace commgraph {

namespace {

// Structural graphs are dense bit matrices; keep them under ~128 MiB.
constexpr std::uint64_t kMaxStructuralVertices = std::uint64_t{1} << 15;

std::string csv_quote(const std::string& text) {
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_string(Part part) {
  switch (part) {
    case Part::Omega1:
      return "omega1";
    case Part::Omega2:
      return "omega2";
    case Part::Omega3:
      return "omega3";
  }
  return "?";
}

AdjacencyMatrix::AdjacencyMatrix(std::size_t size)
    : size_(size), words_((size + 63) / 64), bits_(size * words_, 0) {}

std::size_t AdjacencyMatrix::row_count(std::size_t u) const noexcept {
  std::size_t count = 0;
  for (const auto word : row(u)) {
    count += static_cast<std::size_t>(std::popcount(word));
  }
  return count;
}

CommutingGraph::CommutingGraph(AdjacencyMatrix adjacency, std::vector<PartLabel> part_labels,
                               std::vector<DihedralElement> vertices)
    : adjacency_(std::move(adjacency)),
      part_labels_(std::move(part_labels)),
      vertices_(std::move(vertices)) {
  if (part_labels_.size() != adjacency_.size()) {
    throw StructuralError("part labels do not match the vertex count");
  }
  if (!vertices_.empty() && vertices_.size() != adjacency_.size()) {
    throw StructuralError("vertex list does not match the vertex count");
  }
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    if (adjacency_.test(v, v)) {
      throw StructuralError("self-loop at vertex " + std::to_string(v));
    }
  }
}

std::string CommutingGraph::vertex_label(std::size_t v) const {
  if (v >= vertex_count()) {
    throw StructuralError("vertex index " + std::to_string(v) + " out of range");
  }
  if (!vertices_.empty()) {
    return to_text(vertices_[v]);
  }
  // Synthetic: position within the part.
  const auto& label = part_labels_[v];
  std::size_t offset = 0;
  for (std::size_t u = v; u-- > 0;) {
    if (!(part_labels_[u] == label)) {
      break;
    }
    ++offset;
  }
  switch (label.part) {
    case Part::Omega1:
      return "O1:" + std::to_string(offset);
    case Part::Omega2:
      return "O2:" + std::to_string(offset);
    case Part::Omega3:
      return "B" + std::to_string(label.block + 1) + ":" + std::to_string(offset);
  }
  return "?";
}

std::uint64_t CommutingGraph::neighbor_mask(std::size_t v) const {
  if (vertex_count() > 64) {
    throw CapExceeded("neighbor masks need at most 64 vertices");
  }
  return adjacency_.row(v)[0];
}

CommutingGraph build_commuting_graph(const AbelianGroup& group, const VertexSelector& selector,
                                     CommuteRule rule) {
  using Kind = VertexSelector::Kind;
  const auto n = static_cast<std::size_t>(group.order());

  std::vector<DihedralElement> canonical;
  std::vector<PartLabel> canonical_labels;
  // Canonical position of (g, s), indexed by (s == Minus ? n : 0) + index_of(g).
  std::vector<std::size_t> position(2 * n);

  std::size_t omega1_size = 0;
  std::size_t omega2_size = 0;
  std::vector<std::size_t> block_start;

  if (is_elementary_abelian_2(group)) {
    if (selector.kind() != Kind::All && selector.kind() != Kind::Explicit) {
      throw ElementaryAbelian2Error(group.spec() +
                                    " has abelian D(G); partition selectors do not apply");
    }
    canonical = dihedral_elements(group);
    canonical_labels.assign(canonical.size(), PartLabel{Part::Omega1, 0});
    omega1_size = canonical.size();
  } else {
    const auto partition = omega_partition(group);
    omega1_size = partition.omega1.size();
    omega2_size = partition.omega2.size();
    canonical = partition.canonical_order();
    canonical_labels.reserve(canonical.size());
    canonical_labels.insert(canonical_labels.end(), omega1_size, PartLabel{Part::Omega1, 0});
    canonical_labels.insert(canonical_labels.end(), omega2_size, PartLabel{Part::Omega2, 0});
    std::size_t start = omega1_size + omega2_size;
    for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
      block_start.push_back(start);
      start += partition.blocks[b].size();
      canonical_labels.insert(canonical_labels.end(), partition.blocks[b].size(),
                              PartLabel{Part::Omega3, b});
    }
    block_start.push_back(start);
  }
  for (std::size_t i = 0; i < canonical.size(); ++i) {
    const auto& x = canonical[i];
    position[(x.s == Sign::Minus ? n : 0) + static_cast<std::size_t>(group.index_of(x.g))] = i;
  }

  std::vector<std::size_t> chosen;
  auto take_range = [&](std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i) {
      chosen.push_back(i);
    }
  };
  switch (selector.kind()) {
    case Kind::All:
      take_range(0, canonical.size());
      break;
    case Kind::Omega1:
      take_range(0, omega1_size);
      break;
    case Kind::Omega2:
      take_range(omega1_size, omega1_size + omega2_size);
      break;
    case Kind::Omega3:
      take_range(omega1_size + omega2_size, canonical.size());
      break;
    case Kind::Block: {
      const auto b = selector.block_index();
      if (b + 1 >= block_start.size()) {
        throw StructuralError("block index " + std::to_string(b) + " out of range, D(" +
                              group.spec() + ") has " +
                              std::to_string(block_start.empty() ? 0 : block_start.size() - 1) +
                              " blocks");
      }
      take_range(block_start[b], block_start[b + 1]);
      break;
    }
    case Kind::Explicit: {
      std::vector<bool> seen(canonical.size(), false);
      for (const auto& x : selector.explicit_elements()) {
        if (!group.contains(x.g)) {
          throw StructuralError("element " + to_text(x) + " does not belong to D(" +
                                group.spec() + ")");
        }
        const auto pos =
            position[(x.s == Sign::Minus ? n : 0) + static_cast<std::size_t>(group.index_of(x.g))];
        if (seen[pos]) {
          throw StructuralError("element " + to_text(x) + " listed twice");
        }
        seen[pos] = true;
        chosen.push_back(pos);
      }
      std::sort(chosen.begin(), chosen.end());
      break;
    }
  }

  std::vector<DihedralElement> vertices;
  std::vector<PartLabel> labels;
  vertices.reserve(chosen.size());
  labels.reserve(chosen.size());
  for (const auto pos : chosen) {
    vertices.push_back(canonical[pos]);
    labels.push_back(canonical_labels[pos]);
  }

  AdjacencyMatrix adjacency(vertices.size());
  for (std::size_t u = 0; u < vertices.size(); ++u) {
    for (std::size_t v = u + 1; v < vertices.size(); ++v) {
      const bool edge = rule == CommuteRule::Definition
                            ? commutes_by_definition(group, vertices[u], vertices[v])
                            : commutes(group, vertices[u], vertices[v]);
      if (edge) {
        adjacency.connect(u, v);
      }
    }
  }
  return CommutingGraph(std::move(adjacency), std::move(labels), std::move(vertices));
}

CommutingGraph build_structural_graph(std::uint64_t n, int r) {
  if (r < 0 || r > 30) {
    throw InvalidParameters("2-rank r=" + std::to_string(r) + " out of range");
  }
  const std::uint64_t center = std::uint64_t{1} << r;
  if (n < 2 || n % center != 0) {
    throw InvalidParameters("2^r=" + std::to_string(center) + " must divide n=" +
                            std::to_string(n));
  }
  if (n == center) {
    throw ElementaryAbelian2Error("n = 2^r describes an abelian D(G)");
  }
  if (2 * n > kMaxStructuralVertices) {
    throw CapExceeded("structural graph with " + std::to_string(2 * n) +
                      " vertices exceeds the limit of " + std::to_string(kMaxStructuralVertices));
  }

  const auto c = static_cast<std::size_t>(center);
  const auto rotations = static_cast<std::size_t>(n);
  const auto blocks = rotations / c;
  const auto total = 2 * rotations;

  std::vector<PartLabel> labels;
  labels.reserve(total);
  labels.insert(labels.end(), c, PartLabel{Part::Omega1, 0});
  labels.insert(labels.end(), rotations - c, PartLabel{Part::Omega2, 0});
  for (std::size_t b = 0; b < blocks; ++b) {
    labels.insert(labels.end(), c, PartLabel{Part::Omega3, b});
  }

  AdjacencyMatrix adjacency(total);
  // Join part: K_{2^r} adjacent to everything.
  for (std::size_t u = 0; u < c; ++u) {
    for (std::size_t v = u + 1; v < total; ++v) {
      adjacency.connect(u, v);
    }
  }
  auto clique = [&](std::size_t first, std::size_t last) {
    for (std::size_t u = first; u < last; ++u) {
      for (std::size_t v = u + 1; v < last; ++v) {
        adjacency.connect(u, v);
      }
    }
  };
  clique(c, rotations);
  for (std::size_t b = 0; b < blocks; ++b) {
    clique(rotations + b * c, rotations + (b + 1) * c);
  }
  return CommutingGraph(std::move(adjacency), std::move(labels));
}

std::optional<std::pair<std::size_t, std::size_t>> first_edge_difference(const CommutingGraph& a,
                                                                         const CommutingGraph& b) {
  if (a.vertex_count() != b.vertex_count()) {
    throw StructuralError("graphs have " + std::to_string(a.vertex_count()) + " and " +
                          std::to_string(b.vertex_count()) + " vertices");
  }
  for (std::size_t u = 0; u < a.vertex_count(); ++u) {
    for (std::size_t v = u + 1; v < a.vertex_count(); ++v) {
      if (a.adjacent(u, v) != b.adjacent(u, v)) {
        return std::pair{u, v};
      }
    }
  }
  return std::nullopt;
}

bool edge_sets_equal(const CommutingGraph& a, const CommutingGraph& b) {
  if (a.vertex_count() != b.vertex_count()) {
    throw StructuralError("graphs have " + std::to_string(a.vertex_count()) + " and " +
                          std::to_string(b.vertex_count()) + " vertices");
  }
  return a.adjacency() == b.adjacency();
}

std::size_t degree(const CommutingGraph& g, std::size_t v) {
  if (v >= g.vertex_count()) {
    throw StructuralError("vertex index " + std::to_string(v) + " out of range");
  }
  return g.adjacency().row_count(v);
}

std::size_t edge_count(const CommutingGraph& g) {
  std::size_t total = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    total += g.adjacency().row_count(v);
  }
  return total / 2;
}

bool is_connected(const CommutingGraph& g) {
  const auto count = g.vertex_count();
  if (count == 0) {
    return true;
  }
  std::vector<bool> seen(count, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < count; ++v) {
      if (!seen[v] && g.adjacent(u, v)) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == count;
}

std::vector<std::vector<std::size_t>> twin_classes(const CommutingGraph& g) {
  const auto count = g.vertex_count();
  const auto& adj = g.adjacency();
  auto twins = [&](std::size_t u, std::size_t v) {
    const auto ru = adj.row(u);
    const auto rv = adj.row(v);
    const bool open_equal = std::equal(ru.begin(), ru.end(), rv.begin());
    if (open_equal) {
      return true;
    }
    // Closed neighbourhoods: add each vertex to its own row.
    for (std::size_t w = 0; w < ru.size(); ++w) {
      auto cu = ru[w];
      auto cv = rv[w];
      if (u / 64 == w) {
        cu |= std::uint64_t{1} << (u % 64);
      }
      if (v / 64 == w) {
        cv |= std::uint64_t{1} << (v % 64);
      }
      if (cu != cv) {
        return false;
      }
    }
    return true;
  };

  std::vector<bool> assigned(count, false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t u = 0; u < count; ++u) {
    if (assigned[u]) {
      continue;
    }
    assigned[u] = true;
    std::vector<std::size_t> cls{u};
    for (std::size_t v = u + 1; v < count; ++v) {
      if (!assigned[v] && twins(u, v)) {
        assigned[v] = true;
        cls.push_back(v);
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

void write_dot(std::ostream& out, const CommutingGraph& g) {
  const auto& labels = g.part_labels();
  auto emit_vertices = [&](const std::string& indent, auto&& predicate) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (predicate(labels[v])) {
        out << indent << 'v' << v << " [label=\"" << g.vertex_label(v) << "\"];\n";
      }
    }
  };
  auto has = [&](auto&& predicate) { return std::any_of(labels.begin(), labels.end(), predicate); };

  out << "graph commuting {\n";
  out << "  node [shape=ellipse];\n";
  for (const auto part : {Part::Omega1, Part::Omega2}) {
    auto in_part = [part](const PartLabel& l) { return l.part == part; };
    if (!has(in_part)) {
      continue;
    }
    const auto name = part == Part::Omega1 ? std::string("Omega1") : std::string("Omega2");
    out << "  subgraph cluster_" << to_string(part) << " {\n";
    out << "    label=\"" << name << "\";\n";
    emit_vertices("    ", in_part);
    out << "  }\n";
  }
  auto in_omega3 = [](const PartLabel& l) { return l.part == Part::Omega3; };
  if (has(in_omega3)) {
    out << "  subgraph cluster_omega3 {\n";
    out << "    label=\"Omega3\";\n";
    std::size_t block_count = 0;
    for (const auto& l : labels) {
      if (l.part == Part::Omega3) {
        block_count = std::max(block_count, l.block + 1);
      }
    }
    for (std::size_t b = 0; b < block_count; ++b) {
      auto in_block = [b](const PartLabel& l) { return l.part == Part::Omega3 && l.block == b; };
      if (!has(in_block)) {
        continue;
      }
      out << "    subgraph cluster_block" << b + 1 << " {\n";
      out << "      label=\"B" << b + 1 << "\";\n";
      emit_vertices("      ", in_block);
      out << "    }\n";
    }
    out << "  }\n";
  }
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v) {
      if (g.adjacent(u, v)) {
        out << "  v" << u << " -- v" << v << ";\n";
      }
    }
  }
  out << "}\n";
}

void write_adjacency_csv(std::ostream& out, const CommutingGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (v > 0) {
      out << ',';
    }
    out << csv_quote(g.vertex_label(v));
  }
  out << '\n';
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (v > 0) {
        out << ',';
      }
      out << (g.adjacent(u, v) ? '1' : '0');
    }
    out << '\n';
  }
}

}  // namespace commgraph

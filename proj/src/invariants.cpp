#include "commgraph/invariants.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <set>

#include "commgraph/errors.hpp"
#include "commgraph/parameters.hpp"
#include "json.hpp"

namespace commgraph {

std::uint64_t degree_formula(std::uint64_t n, int r, Part part) {
  const auto center = check_dihedral_parameters(n, r);
  switch (part) {
    case Part::Omega1:
      return 2 * n - 1;
    case Part::Omega2:
      return n - 1;
    case Part::Omega3:
      return 2 * center - 1;
  }
  throw InvalidParameters("unknown part");
}

std::uint64_t edge_count_formula(std::uint64_t n, int r) {
  const auto center = check_dihedral_parameters(n, r);
  // n(3*2^r + n - 2) is even: n even, or n odd with r = 0 and n - 2 + 3 even.
  return n * (3 * center + n - 2) / 2;
}

std::uint64_t chromatic_number_formula(std::uint64_t n, int r) {
  check_dihedral_parameters(n, r);
  return n;
}

std::vector<std::size_t> construct_coloring(const CommutingGraph& g) {
  const auto& labels = g.part_labels();
  std::vector<std::size_t> omega1;
  std::vector<std::size_t> omega2;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v].part == Part::Omega1) {
      omega1.push_back(v);
    } else if (labels[v].part == Part::Omega2) {
      omega2.push_back(v);
    }
  }
  if (omega2.empty()) {
    throw ElementaryAbelian2Error("graph has no Omega2 part; D(G) is abelian or not whole");
  }

  std::vector<std::size_t> colors(g.vertex_count(), 0);
  std::size_t next = 0;
  for (const auto v : omega1) {
    colors[v] = next++;
  }
  std::vector<std::size_t> omega2_colors;
  for (const auto v : omega2) {
    omega2_colors.push_back(next);
    colors[v] = next++;
  }
  // k-th member of every block takes the colour of the k-th Omega2 vertex.
  std::size_t previous_block = static_cast<std::size_t>(-1);
  std::size_t offset = 0;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v].part != Part::Omega3) {
      continue;
    }
    if (labels[v].block != previous_block) {
      previous_block = labels[v].block;
      offset = 0;
    }
    if (offset >= omega2_colors.size()) {
      throw StructuralError("block " + std::to_string(labels[v].block + 1) +
                            " is larger than Omega2");
    }
    colors[v] = omega2_colors[offset++];
  }
  return colors;
}

bool is_proper_coloring(const CommutingGraph& g, const std::vector<std::size_t>& colors) {
  if (colors.size() != g.vertex_count()) {
    throw StructuralError("colouring has " + std::to_string(colors.size()) + " entries for " +
                          std::to_string(g.vertex_count()) + " vertices");
  }
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v) {
      if (g.adjacent(u, v) && colors[u] == colors[v]) {
        return false;
      }
    }
  }
  return true;
}

std::size_t color_count(const std::vector<std::size_t>& colors) {
  return std::set<std::size_t>(colors.begin(), colors.end()).size();
}

namespace {

class DsaturSearch {
 public:
  explicit DsaturSearch(const CommutingGraph& g) : count_(g.vertex_count()) {
    for (std::size_t v = 0; v < count_; ++v) {
      neighbors_.push_back(g.neighbor_mask(v));
    }
  }

  /// Greedy clique from every start vertex; a lower bound on the chromatic number.
  std::size_t clique_lower_bound() const {
    std::size_t best = count_ == 0 ? 0 : 1;
    for (std::size_t start = 0; start < count_; ++start) {
      std::uint64_t candidates = neighbors_[start];
      std::size_t size = 1;
      while (candidates != 0) {
        // Take the candidate with the most neighbours among the remaining candidates.
        std::size_t pick = 0;
        int pick_score = -1;
        for (auto rest = candidates; rest != 0; rest &= rest - 1) {
          const auto v = static_cast<std::size_t>(std::countr_zero(rest));
          const int score = std::popcount(neighbors_[v] & candidates);
          if (score > pick_score) {
            pick_score = score;
            pick = v;
          }
        }
        candidates &= neighbors_[pick];
        ++size;
      }
      best = std::max(best, size);
    }
    return best;
  }

  bool colorable(std::size_t k) {
    colors_.assign(count_, kNone);
    return extend(k, 0, 0);
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::uint64_t neighbor_colors(std::size_t v) const {
    std::uint64_t used = 0;
    for (auto rest = neighbors_[v]; rest != 0; rest &= rest - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(rest));
      if (colors_[u] != kNone) {
        used |= std::uint64_t{1} << colors_[u];
      }
    }
    return used;
  }

  bool extend(std::size_t k, std::size_t colored, std::size_t used_colors) {
    if (colored == count_) {
      return true;
    }
    // DSATUR: most distinct neighbour colours, then most uncoloured neighbours.
    std::size_t pick = kNone;
    int best_saturation = -1;
    int best_degree = -1;
    std::uint64_t uncolored = 0;
    for (std::size_t v = 0; v < count_; ++v) {
      if (colors_[v] == kNone) {
        uncolored |= std::uint64_t{1} << v;
      }
    }
    for (std::size_t v = 0; v < count_; ++v) {
      if (colors_[v] != kNone) {
        continue;
      }
      const int saturation = std::popcount(neighbor_colors(v));
      const int deg = std::popcount(neighbors_[v] & uncolored);
      if (saturation > best_saturation || (saturation == best_saturation && deg > best_degree)) {
        pick = v;
        best_saturation = saturation;
        best_degree = deg;
      }
    }
    const auto forbidden = neighbor_colors(pick);
    // Colours above used_colors are interchangeable, so try only the first fresh one.
    const auto limit = std::min(k, used_colors + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if ((forbidden >> c) & 1U) {
        continue;
      }
      colors_[pick] = c;
      if (extend(k, colored + 1, std::max(used_colors, c + 1))) {
        return true;
      }
    }
    colors_[pick] = kNone;
    return false;
  }

  std::size_t count_;
  std::vector<std::uint64_t> neighbors_;
  std::vector<std::size_t> colors_;
};

}  // namespace

std::size_t chromatic_number_oracle(const CommutingGraph& g, std::size_t max_vertices) {
  if (g.vertex_count() > max_vertices || g.vertex_count() > 64) {
    throw CapExceeded("chromatic oracle limited to " + std::to_string(std::min<std::size_t>(
                                                           max_vertices, 64)) +
                      " vertices, graph has " + std::to_string(g.vertex_count()));
  }
  if (g.vertex_count() == 0) {
    return 0;
  }
  DsaturSearch search(g);
  for (auto k = search.clique_lower_bound(); k <= g.vertex_count(); ++k) {
    if (search.colorable(k)) {
      return k;
    }
  }
  return g.vertex_count();
}

void write_coloring_json(std::ostream& out, const CommutingGraph& g,
                         const std::vector<std::size_t>& colors) {
  if (colors.size() != g.vertex_count()) {
    throw StructuralError("colouring does not match the graph");
  }
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    doc[g.vertex_label(v)] = colors[v];
  }
  out << doc.dump(2) << '\n';
}

}  // namespace commgraph

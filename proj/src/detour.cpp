#include "commgraph/detour.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <unordered_map>

#include "commgraph/errors.hpp"
#include "commgraph/parameters.hpp"

namespace commgraph {

namespace {

constexpr std::size_t kMaxMaskVertices = 64;
constexpr std::size_t kMaxMemoEntries = std::size_t{1} << 23;

std::uint64_t bit(std::size_t v) { return std::uint64_t{1} << v; }

void require_searchable(const CommutingGraph& g, std::size_t max_vertices,
                        std::initializer_list<std::size_t> endpoints) {
  const auto cap = std::min(max_vertices, kMaxMaskVertices);
  if (g.vertex_count() > cap) {
    throw CapExceeded("detour oracle limited to " + std::to_string(cap) +
                      " vertices, graph has " + std::to_string(g.vertex_count()));
  }
  for (const auto v : endpoints) {
    if (v >= g.vertex_count()) {
      throw StructuralError("vertex index " + std::to_string(v) + " out of range");
    }
  }
  if (!is_connected(g)) {
    throw DisconnectedGraph("detour distances need a connected graph");
  }
}

// Longest simple path search over <= 64 vertices, optionally forced to end at `target`.
class LongestPathSearch {
 public:
  LongestPathSearch(const CommutingGraph& g, std::optional<std::size_t> target)
      : target_(target) {
    const auto count = g.vertex_count();
    for (std::size_t v = 0; v < count; ++v) {
      neighbors_.push_back(g.neighbor_mask(v));
    }
    class_of_.assign(count, 0);
    for (auto members : twin_classes(g)) {
      // A fixed endpoint is not interchangeable with its twins.
      if (target_ && std::find(members.begin(), members.end(), *target_) != members.end() &&
          members.size() > 1) {
        std::erase(members, *target_);
        add_class({*target_});
      }
      add_class(members);
    }
  }

  /// Longest path length from `start`, or -1 when no path reaches the target.
  int longest_from(std::size_t start) { return extend(start, bit(start)); }

 private:
  struct Key {
    std::uint64_t visited;
    std::size_t current;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.visited * 0x9E3779B97F4A7C15ULL ^ k.current);
    }
  };

  void add_class(const std::vector<std::size_t>& members) {
    const auto id = class_mask_.size();
    std::uint64_t mask = 0;
    std::vector<std::uint64_t> prefixes{0};
    for (const auto v : members) {
      class_of_[v] = id;
      mask |= bit(v);
      prefixes.push_back(mask);
    }
    class_mask_.push_back(mask);
    prefix_masks_.push_back(std::move(prefixes));
  }

  // Maps a state to a representative of its orbit under permutations within
  // twin classes: the visited members of each class become its lowest members
  // and the current vertex becomes the lowest member of its class.
  Key canonical(std::size_t current, std::uint64_t visited) const {
    std::uint64_t mask = 0;
    for (std::size_t c = 0; c < class_mask_.size(); ++c) {
      const auto taken = static_cast<std::size_t>(std::popcount(visited & class_mask_[c]));
      mask |= prefix_masks_[c][taken];
    }
    const auto representative =
        static_cast<std::size_t>(std::countr_zero(class_mask_[class_of_[current]]));
    return Key{mask, representative};
  }

  std::uint64_t reachable(std::size_t current, std::uint64_t visited) const {
    std::uint64_t seen = 0;
    std::uint64_t frontier = neighbors_[current] & ~visited;
    while (frontier != 0) {
      seen |= frontier;
      std::uint64_t next = 0;
      for (auto rest = frontier; rest != 0; rest &= rest - 1) {
        next |= neighbors_[static_cast<std::size_t>(std::countr_zero(rest))];
      }
      frontier = next & ~visited & ~seen;
    }
    return seen;
  }

  int extend(std::size_t current, std::uint64_t visited) {
    if (target_ && current == *target_) {
      return 0;
    }
    const auto reach = reachable(current, visited);
    if (target_ && (reach & bit(*target_)) == 0) {
      return -1;
    }
    const int bound = std::popcount(reach);
    if (bound == 0) {
      return 0;
    }
    const auto key = canonical(current, visited);
    if (const auto it = memo_.find(key); it != memo_.end()) {
      return it->second;
    }

    int best = target_ ? -1 : 0;
    for (auto candidates = neighbors_[current] & ~visited; candidates != 0;
         candidates &= candidates - 1) {
      const auto next = static_cast<std::size_t>(std::countr_zero(candidates));
      // Unvisited twins of `next` lead to isomorphic subtrees; try the lowest only.
      const auto free_twins = class_mask_[class_of_[next]] & ~visited;
      if (static_cast<std::size_t>(std::countr_zero(free_twins)) != next) {
        continue;
      }
      const int rest = extend(next, visited | bit(next));
      if (rest >= 0) {
        best = std::max(best, rest + 1);
      }
      if (best == bound) {
        break;
      }
    }
    if (memo_.size() < kMaxMemoEntries) {
      memo_.emplace(key, best);
    }
    return best;
  }

  std::optional<std::size_t> target_;
  std::vector<std::uint64_t> neighbors_;
  std::vector<std::size_t> class_of_;
  std::vector<std::uint64_t> class_mask_;
  std::vector<std::vector<std::uint64_t>> prefix_masks_;
  std::unordered_map<Key, int, KeyHash> memo_;
};

std::size_t plain_longest(const std::vector<std::uint64_t>& neighbors, std::size_t current,
                          std::uint64_t visited) {
  std::size_t best = 0;
  for (auto candidates = neighbors[current] & ~visited; candidates != 0;
       candidates &= candidates - 1) {
    const auto next = static_cast<std::size_t>(std::countr_zero(candidates));
    best = std::max(best, 1 + plain_longest(neighbors, next, visited | bit(next)));
  }
  return best;
}

}  // namespace

std::size_t detour_ecc_oracle(const CommutingGraph& g, std::size_t v, std::size_t max_vertices) {
  require_searchable(g, max_vertices, {v});
  LongestPathSearch search(g, std::nullopt);
  return static_cast<std::size_t>(search.longest_from(v));
}

std::size_t detour_ecc_reference(const CommutingGraph& g, std::size_t v,
                                 std::size_t max_vertices) {
  require_searchable(g, max_vertices, {v});
  std::vector<std::uint64_t> neighbors;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    neighbors.push_back(g.neighbor_mask(u));
  }
  return plain_longest(neighbors, v, bit(v));
}

std::size_t detour_distance_oracle(const CommutingGraph& g, std::size_t u, std::size_t v,
                                   std::size_t max_vertices) {
  require_searchable(g, max_vertices, {u, v});
  LongestPathSearch search(g, v);
  return static_cast<std::size_t>(search.longest_from(u));
}

DetourProfile detour_profile(const CommutingGraph& g, std::size_t max_vertices) {
  require_searchable(g, max_vertices, {});
  DetourProfile profile;
  if (g.vertex_count() == 0) {
    return profile;
  }
  // The memo only depends on the graph, so one search serves every start vertex.
  LongestPathSearch search(g, std::nullopt);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    profile.eccentricity.push_back(static_cast<std::size_t>(search.longest_from(v)));
  }
  profile.radius = *std::min_element(profile.eccentricity.begin(), profile.eccentricity.end());
  profile.diameter = *std::max_element(profile.eccentricity.begin(), profile.eccentricity.end());
  return profile;
}

std::uint64_t detour_ecc_formula(std::uint64_t n, int r, Part part) {
  const auto center = check_dihedral_parameters(n, r);
  const auto blocks = n / center;
  if (part == Part::Omega1) {
    return blocks < center ? 2 * n - 1 : n + center * (center - 1) - 1;
  }
  return blocks <= center ? 2 * n - 1 : n + center * center - 1;
}

DetourExtremes detour_radius_diameter_formula(std::uint64_t n, int r) {
  return DetourExtremes{detour_ecc_formula(n, r, Part::Omega1),
                        detour_ecc_formula(n, r, Part::Omega2)};
}

}  // namespace commgraph

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "commgraph/graph.hpp"

namespace commgraph {

inline constexpr std::size_t kDefaultMaxDetourVertices = 20;
inline constexpr std::size_t kDefaultMaxReferenceDetourVertices = 12;

/// Per-vertex detour eccentricities (lengths in edges) with their extremes.
struct DetourProfile {
  std::vector<std::size_t> eccentricity;
  std::size_t radius = 0;
  std::size_t diameter = 0;
};

struct DetourExtremes {
  std::uint64_t radius = 0;
  std::uint64_t diameter = 0;

  friend bool operator==(const DetourExtremes&, const DetourExtremes&) = default;
};

/// Length of a longest simple path starting at `v`.
///
/// Exhaustive search with three exact reductions: unvisited twins are
/// interchangeable (swapping twins is an automorphism), so only one per twin
/// class is tried and search states are memoised up to that symmetry; and a
/// branch stops as soon as its path covers every vertex still reachable.
std::size_t detour_ecc_oracle(const CommutingGraph& g, std::size_t v,
                              std::size_t max_vertices = kDefaultMaxDetourVertices);

/// Plain enumeration of every simple path from `v`, for cross-checking the oracle.
std::size_t detour_ecc_reference(const CommutingGraph& g, std::size_t v,
                                 std::size_t max_vertices = kDefaultMaxReferenceDetourVertices);

/// Length of a longest simple u-v path.
std::size_t detour_distance_oracle(const CommutingGraph& g, std::size_t u, std::size_t v,
                                   std::size_t max_vertices = kDefaultMaxDetourVertices);

DetourProfile detour_profile(const CommutingGraph& g,
                             std::size_t max_vertices = kDefaultMaxDetourVertices);

/// Closed-form detour eccentricity by part. Omega2 and Omega3 share one formula.
std::uint64_t detour_ecc_formula(std::uint64_t n, int r, Part part);

/// Radius from the Omega1 case, diameter from the Omega2/Omega3 case.
DetourExtremes detour_radius_diameter_formula(std::uint64_t n, int r);

}  // namespace commgraph

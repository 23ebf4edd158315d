#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "commgraph/graph.hpp"

namespace commgraph {

/// Degree of a vertex of Gamma(D(G)) by part: 2n-1, n-1 or 2^{r+1}-1.
std::uint64_t degree_formula(std::uint64_t n, int r, Part part);

/// |E| = n(3*2^r + n - 2)/2, the integer form of 3n*2^{r-1} + n(n-2)/2.
std::uint64_t edge_count_formula(std::uint64_t n, int r);

/// The chromatic number of Gamma(D(G)) is n.
std::uint64_t chromatic_number_formula(std::uint64_t n, int r);

/// The explicit n-colouring: distinct colours on Omega1 and Omega2, and every
/// block reuses the first 2^r colours of Omega2. Colours are 0-based.
std::vector<std::size_t> construct_coloring(const CommutingGraph& g);

bool is_proper_coloring(const CommutingGraph& g, const std::vector<std::size_t>& colors);
std::size_t color_count(const std::vector<std::size_t>& colors);

inline constexpr std::size_t kDefaultMaxChromaticVertices = 24;

/// Exact chromatic number by DSATUR-ordered backtracking.
std::size_t chromatic_number_oracle(const CommutingGraph& g,
                                    std::size_t max_vertices = kDefaultMaxChromaticVertices);

/// JSON object mapping vertex label to colour index.
void write_coloring_json(std::ostream& out, const CommutingGraph& g,
                         const std::vector<std::size_t>& colors);

}  // namespace commgraph

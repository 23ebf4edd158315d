// Recomputes the cheaper frozen rows with the brute-force reference, so the
// table cannot drift from the code that produced it.
#include <gtest/gtest.h>

#include <sstream>

#include "frozen_values.hpp"
#include "naive.hpp"

namespace {

std::vector<int> moduli_of(const std::string& spec) {
  std::vector<int> moduli;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, 'x');) {
    moduli.push_back(std::stoi(part.substr(1)));
  }
  return moduli;
}

}  // namespace

TEST(NaiveReference, ReproducesFrozenRows) {
  for (const auto& row : frozen::rows()) {
    if (2 * row.n > 12) {
      continue;
    }
    const auto g = naive::commuting_graph(moduli_of(row.spec));
    EXPECT_EQ(naive::edges(g), row.edges) << row.spec;
    EXPECT_EQ(static_cast<int>(naive::center(moduli_of(row.spec)).size()), row.center_size);
    EXPECT_EQ(naive::chromatic_number(g), row.chromatic) << row.spec;
    const auto ecc = naive::detour_eccentricities(g);
    EXPECT_EQ(*std::min_element(ecc.begin(), ecc.end()), row.detour_radius) << row.spec;
    EXPECT_EQ(*std::max_element(ecc.begin(), ecc.end()), row.detour_diameter) << row.spec;
    EXPECT_EQ(naive::metric_dimension(g), row.metric_dimension) << row.spec;
    const auto counts = naive::resolving_counts(g);
    EXPECT_EQ(std::vector<std::uint64_t>(counts.begin() + row.metric_dimension, counts.end()),
              row.resolving_counts)
        << row.spec;
  }
}

TEST(NaiveReference, KnownSmallGraphs) {
  naive::Graph p;
  p.n = 4;
  p.adj = {{0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}};
  EXPECT_EQ(naive::detour_eccentricities(p), (std::vector<int>{3, 2, 2, 3}));
  EXPECT_EQ(naive::metric_dimension(p), 1);
  EXPECT_EQ(naive::chromatic_number(p), 2);
}

#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "commgraph/errors.hpp"
#include "commgraph/graph.hpp"
#include "commgraph/invariants.hpp"
#include "frozen_values.hpp"
#include "graphs.hpp"
#include "naive.hpp"

using namespace commgraph;

namespace {

std::vector<int> moduli_of(const AbelianGroup& g) { return {g.moduli().begin(), g.moduli().end()}; }

}  // namespace

TEST(Graph, MatchesNaiveGraphUnderLabels) {
  for (const auto& row : frozen::rows()) {
    const auto group = parse_group_spec(row.spec);
    const auto ours = build_commuting_graph(group);
    const auto theirs = naive::commuting_graph(moduli_of(group));
    ASSERT_EQ(static_cast<int>(ours.vertex_count()), theirs.n);
    std::map<std::string, int> where;
    for (int v = 0; v < theirs.n; ++v) {
      where[theirs.labels[v]] = v;
    }
    for (std::size_t u = 0; u < ours.vertex_count(); ++u) {
      const int nu = where.at(ours.vertex_label(u));
      for (std::size_t v = 0; v < ours.vertex_count(); ++v) {
        ASSERT_EQ(ours.adjacent(u, v), theirs.adj[nu][where.at(ours.vertex_label(v))] != 0)
            << row.spec;
      }
    }
  }
}

TEST(Graph, StructuralGraphEqualsGroupGraph) {
  for (const auto& row : frozen::rows()) {
    const auto group = parse_group_spec(row.spec);
    const auto brute = build_commuting_graph(group);
    const auto model = build_structural_graph(row.n, row.r);
    EXPECT_TRUE(edge_sets_equal(brute, model)) << row.spec;
    EXPECT_FALSE(first_edge_difference(brute, model).has_value()) << row.spec;
    EXPECT_EQ(brute.part_labels(), model.part_labels()) << row.spec;
  }
}

TEST(Graph, CriteriaRuleGivesSameGraph) {
  for (const auto* spec : {"Z6", "Z2xZ4", "Z9", "Z2xZ2xZ3"}) {
    const auto group = parse_group_spec(spec);
    EXPECT_TRUE(edge_sets_equal(build_commuting_graph(group),
                                build_commuting_graph(group, VertexSelector::all(),
                                                      CommuteRule::Criteria)))
        << spec;
  }
}

TEST(Graph, DegreesAndEdgesMatchFrozenValues) {
  for (const auto& row : frozen::rows()) {
    const auto g = build_commuting_graph(parse_group_spec(row.spec));
    std::set<int> distinct;
    std::size_t degree_sum = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      distinct.insert(static_cast<int>(degree(g, v)));
      degree_sum += degree(g, v);
    }
    EXPECT_EQ(std::vector<int>(distinct.begin(), distinct.end()), row.distinct_degrees) << row.spec;
    EXPECT_EQ(static_cast<long>(edge_count(g)), row.edges) << row.spec;
    EXPECT_EQ(degree_sum, 2 * edge_count(g)) << row.spec;
  }
}

TEST(Graph, DegreeFormulaPerPart) {
  for (const auto& row : frozen::rows()) {
    const auto g = build_commuting_graph(parse_group_spec(row.spec));
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      ASSERT_EQ(degree(g, v), degree_formula(row.n, row.r, g.part_labels()[v].part))
          << row.spec << ' ' << g.vertex_label(v);
    }
    EXPECT_EQ(static_cast<long>(edge_count_formula(row.n, row.r)), row.edges) << row.spec;
  }
}

TEST(Graph, OmegaOnePlusOmegaTwoIsAClique) {
  const auto g = build_commuting_graph(parse_group_spec("Z2xZ6"));
  const std::size_t n = 12;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      EXPECT_TRUE(g.adjacent(u, v));
    }
  }
}

TEST(Graph, Selectors) {
  const auto group = parse_group_spec("Z6");
  EXPECT_EQ(build_commuting_graph(group, VertexSelector::omega1()).vertex_count(), 2U);
  EXPECT_EQ(build_commuting_graph(group, VertexSelector::omega2()).vertex_count(), 4U);
  EXPECT_EQ(build_commuting_graph(group, VertexSelector::omega3()).vertex_count(), 6U);
  const auto block = build_commuting_graph(group, VertexSelector::block(1));
  ASSERT_EQ(block.vertex_count(), 2U);
  EXPECT_EQ(block.vertex_label(0), "(1;-)");
  EXPECT_EQ(block.vertex_label(1), "(4;-)");
  EXPECT_TRUE(block.adjacent(0, 1));
  // Omega3 alone is n/2^r disjoint cliques.
  const auto reflections = build_commuting_graph(group, VertexSelector::omega3());
  EXPECT_EQ(edge_count(reflections), 3U);
  EXPECT_FALSE(is_connected(reflections));
  EXPECT_THROW(build_commuting_graph(group, VertexSelector::block(3)), StructuralError);
}

TEST(Graph, ExplicitSelectorKeepsCanonicalOrder) {
  const auto group = parse_group_spec("Z4");
  const DihedralElement a{{{1}}, Sign::Minus};
  const DihedralElement b{{{2}}, Sign::Plus};
  const auto g = build_commuting_graph(group, VertexSelector::elements({a, b}));
  ASSERT_EQ(g.vertex_count(), 2U);
  EXPECT_EQ(g.vertex_label(0), "(2;+)");
  EXPECT_EQ(g.vertex_label(1), "(1;-)");
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_THROW(build_commuting_graph(group, VertexSelector::elements({a, a})), StructuralError);
  EXPECT_THROW(build_commuting_graph(group, VertexSelector::elements({{{{4}}, Sign::Plus}})),
               StructuralError);
}

TEST(Graph, AbelianGroupGivesCompleteGraph) {
  const auto g = build_commuting_graph(parse_group_spec("Z2xZ2"));
  EXPECT_EQ(g.vertex_count(), 8U);
  EXPECT_EQ(edge_count(g), 28U);
  EXPECT_THROW(build_commuting_graph(parse_group_spec("Z2"), VertexSelector::omega2()),
               ElementaryAbelian2Error);
}

TEST(Graph, StructuralGraphValidation) {
  EXPECT_THROW(build_structural_graph(6, 2), InvalidParameters);
  EXPECT_THROW(build_structural_graph(4, 2), ElementaryAbelian2Error);
  EXPECT_THROW(build_structural_graph(6, -1), InvalidParameters);
  EXPECT_THROW(build_structural_graph(std::uint64_t{1} << 20, 1), CapExceeded);
  const auto g = build_structural_graph(6, 1);
  EXPECT_EQ(g.vertex_label(0), "O1:0");
  EXPECT_EQ(g.vertex_label(2), "O2:0");
  EXPECT_EQ(g.vertex_label(8), "B2:0");
}

TEST(Graph, ComparisonRejectsSizeMismatch) {
  EXPECT_THROW(edge_sets_equal(testing_graphs::path(3), testing_graphs::path(4)), StructuralError);
  const auto diff = first_edge_difference(testing_graphs::path(4), testing_graphs::cycle(4));
  ASSERT_TRUE(diff.has_value());
  EXPECT_EQ(*diff, std::make_pair(std::size_t{0}, std::size_t{3}));
}

TEST(Graph, ConstructorRejectsBadInput) {
  AdjacencyMatrix adj(3);
  EXPECT_THROW(CommutingGraph(adj, std::vector<PartLabel>(2)), StructuralError);
  EXPECT_THROW(CommutingGraph(adj, std::vector<PartLabel>(3), std::vector<DihedralElement>(1)),
               StructuralError);
  EXPECT_THROW(testing_graphs::path(3).vertex_label(3), StructuralError);
}

TEST(Graph, TwinClassesAreOmegaOneOmegaTwoAndBlocks) {
  for (const auto& row : frozen::rows()) {
    const auto g = build_commuting_graph(parse_group_spec(row.spec));
    const auto classes = twin_classes(g);
    const auto blocks = static_cast<std::size_t>(row.n >> row.r);
    // With r = 0 every block is one reflection and all reflections are open twins.
    EXPECT_EQ(classes.size(), row.r == 0 ? 3 : blocks + 2) << row.spec;
    std::size_t covered = 0;
    for (const auto& cls : classes) {
      covered += cls.size();
      for (const auto v : cls) {
        EXPECT_EQ(g.part_labels()[v].part, g.part_labels()[cls.front()].part) << row.spec;
        if (row.r > 0) {
          EXPECT_EQ(g.part_labels()[v].block, g.part_labels()[cls.front()].block) << row.spec;
        }
      }
    }
    EXPECT_EQ(covered, g.vertex_count());
  }
}

TEST(Graph, Connectivity) {
  EXPECT_TRUE(is_connected(testing_graphs::petersen()));
  EXPECT_FALSE(is_connected(testing_graphs::from_edges(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(is_connected(build_commuting_graph(parse_group_spec("Z9"))));
}

TEST(Graph, DotExportHasNestedClusters) {
  const auto g = build_commuting_graph(parse_group_spec("Z4"));
  std::ostringstream out;
  write_dot(out, g);
  const auto text = out.str();
  for (const auto* cluster : {"cluster_omega1", "cluster_omega2", "cluster_omega3",
                              "cluster_block1", "cluster_block2"}) {
    EXPECT_NE(text.find(cluster), std::string::npos) << cluster;
  }
  EXPECT_NE(text.find("label=\"(3;-)\""), std::string::npos);
  std::size_t edges = 0;
  for (auto pos = text.find(" -- "); pos != std::string::npos; pos = text.find(" -- ", pos + 1)) {
    ++edges;
  }
  EXPECT_EQ(edges, 16U);
}

TEST(Graph, AdjacencyCsv) {
  const auto g = build_commuting_graph(parse_group_spec("Z3"));
  std::ostringstream out;
  write_adjacency_csv(out, g);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  // Blocks follow the square of the reflection: (2;-) squares to 1, (1;-) to 2.
  EXPECT_EQ(line, "\"(0;+)\",\"(1;+)\",\"(2;+)\",\"(0;-)\",\"(2;-)\",\"(1;-)\"");
  std::getline(in, line);
  EXPECT_EQ(line, "0,1,1,1,1,1");
  std::getline(in, line);
  EXPECT_EQ(line, "1,0,1,0,0,0");
  int rows = 2;
  while (std::getline(in, line)) {
    ++rows;
  }
  EXPECT_EQ(rows, 6);
}

#include <algorithm>

#include <gtest/gtest.h>

#include "harmonic/centrality.hpp"
#include "harmonic/families.hpp"
#include "support/oracles.hpp"

using namespace harmonic;
using reference::cartesian_product;
using reference::edge_set;

namespace {

struct Counts {
  std::size_t order;
  std::size_t size;
};

// Vertex and edge counts read off each family's definition.
Counts expected_counts(const FamilySpec& s) {
  const std::size_t m = s.first, n = s.second;
  switch (s.family) {
    case Family::Path: return {m, m - 1};
    case Family::Cycle: return {m, m};
    case Family::Fan: return {m + 1, 2 * m - 1};
    case Family::Wheel: return {m + 1, 2 * m};
    case Family::CompleteBipartite: return {m + n, m * n};
    case Family::Ladder: return {2 * m, 3 * m - 2};
    case Family::Crown: return {2 * m, m * (m - 1)};
    case Family::Prism: return {2 * m, 3 * m};
    case Family::Star: return {m + 1, m};
    case Family::Book: return {2 * (m + 1), 3 * m + 1};
    case Family::Helm: return {2 * m + 1, 3 * m};
    case Family::CompleteSplit: return {m + n, m * (m - 1) / 2 + m * n};
    case Family::Complete: return {m, m * (m - 1) / 2};
  }
  return {0, 0};
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d;
  for (Vertex u = 0; u < g.order(); ++u) d.push_back(g.degree(u));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST(Families, SpecExamples) {
  auto p4 = generate(FamilySpec::of(Family::Path, 4)).graph;
  EXPECT_EQ(p4.order(), 4u);
  EXPECT_EQ(p4.size(), 3u);

  auto f3 = generate(FamilySpec::of(Family::Fan, 3)).graph;
  EXPECT_EQ(f3.order(), 4u);
  EXPECT_EQ(f3.size(), 5u);

  auto h3 = generate(FamilySpec::of(Family::Helm, 3)).graph;
  EXPECT_EQ(h3.order(), 7u);
  EXPECT_EQ(h3.size(), 9u);
}

TEST(Families, OrderAndSizeMatchDefinitions) {
  for (Family f : kAllFamilies) {
    auto [lo1, lo2] = family_minimum(f);
    for (std::size_t a = lo1; a <= lo1 + 12; ++a) {
      for (std::size_t b = lo2; b <= (family_arity(f) == 2 ? lo2 + 6 : lo2); ++b) {
        FamilySpec spec{f, a, b};
        FamilyGraph fg = generate(spec);
        Counts c = expected_counts(spec);
        EXPECT_EQ(fg.graph.order(), c.order) << spec.to_string();
        EXPECT_EQ(fg.graph.size(), c.size) << spec.to_string();
        EXPECT_EQ(fg.roles.size(), fg.graph.order()) << spec.to_string();
      }
    }
  }
}

TEST(Families, DomainErrors) {
  EXPECT_THROW(generate(FamilySpec::of(Family::Cycle, 2)), FamilyError);
  EXPECT_THROW(generate(FamilySpec::of(Family::Path, 0)), FamilyError);
  EXPECT_THROW(generate(FamilySpec::of(Family::Star, 1)), FamilyError);
  EXPECT_THROW(generate(FamilySpec::bipartite(1, 4)), FamilyError);
  EXPECT_THROW(generate(FamilySpec::split(1, 3)), FamilyError);
  EXPECT_THROW(generate(FamilySpec::split(3, 0)), FamilyError);
  EXPECT_NO_THROW(generate(FamilySpec::of(Family::Book, 1)));
}

TEST(Families, WheelOnTriangleIsK4WithWarning) {
  FamilySpec w3 = FamilySpec::of(Family::Wheel, 3);
  EXPECT_EQ(edge_set(generate(w3).graph), edge_set(generate(FamilySpec::of(Family::Complete, 4)).graph));
  EXPECT_TRUE(domain_warning(w3).has_value());
  EXPECT_FALSE(domain_warning(FamilySpec::of(Family::Wheel, 4)).has_value());
}

TEST(Families, ParseSpec) {
  EXPECT_EQ(parse_family_spec("wheel:6"), FamilySpec::of(Family::Wheel, 6));
  EXPECT_EQ(parse_family_spec("bipartite:3,2"), FamilySpec::bipartite(3, 2));
  EXPECT_EQ(parse_family_spec(" Split: 5 , 2 "), FamilySpec::split(5, 2));
  EXPECT_EQ(parse_family_spec("PATH:7"), FamilySpec::of(Family::Path, 7));
  EXPECT_THROW(parse_family_spec("cycle:2"), FamilyError);
  EXPECT_THROW(parse_family_spec("hexagon:6"), FamilyError);
  EXPECT_THROW(parse_family_spec("wheel:6,2"), FamilyError);
  EXPECT_THROW(parse_family_spec("bipartite:3"), FamilyError);
  EXPECT_THROW(parse_family_spec("wheel"), FamilyError);
  EXPECT_THROW(parse_family_spec("wheel:x"), FamilyError);
  EXPECT_THROW(parse_family_spec("wheel:-4"), FamilyError);
  for (Family f : kAllFamilies) {
    auto [lo1, lo2] = family_minimum(f);
    FamilySpec spec{f, lo1 + 1, family_arity(f) == 2 ? lo2 + 1 : 0};
    EXPECT_EQ(parse_family_spec(spec.to_string()), spec);
  }
}

TEST(Families, RoleConventions) {
  auto helm = generate(FamilySpec::of(Family::Helm, 5));
  EXPECT_EQ(helm.roles[0], (VertexRole{RoleKind::Hub, 0, 0}));
  EXPECT_EQ(helm.roles[2], (VertexRole{RoleKind::CycleVertex, 2, 0}));
  EXPECT_EQ(helm.roles[7], (VertexRole{RoleKind::Pendant, 2, 0}));
  EXPECT_TRUE(helm.graph.has_edge(2, 7));
  EXPECT_EQ(helm.graph.degree(7), 1u);

  auto book = generate(FamilySpec::of(Family::Book, 4));
  EXPECT_EQ(book.roles[5], (VertexRole{RoleKind::Hub, 0, 2}));
  EXPECT_EQ(book.roles[8], (VertexRole{RoleKind::BookPage, 3, 2}));
  EXPECT_TRUE(book.graph.has_edge(0, 5));

  auto crown = generate(FamilySpec::of(Family::Crown, 4));
  EXPECT_FALSE(crown.graph.has_edge(1, 5));
  EXPECT_TRUE(crown.graph.has_edge(1, 6));

  auto split = generate(FamilySpec::split(3, 2));
  EXPECT_EQ(split.roles[3], (VertexRole{RoleKind::Independent, 1, 0}));
  EXPECT_FALSE(split.graph.has_edge(3, 4));
  EXPECT_EQ(VertexRole({RoleKind::Rung, 2, 1}).to_string(), "rung[2,1]");
}

TEST(Families, ProductFamiliesMatchGenericProduct) {
  Graph p2 = generate(FamilySpec::of(Family::Path, 2)).graph;
  for (std::size_t m = 2; m <= 8; ++m) {
    Graph path = generate(FamilySpec::of(Family::Path, m)).graph;
    EXPECT_EQ(edge_set(generate(FamilySpec::of(Family::Ladder, m)).graph), edge_set(cartesian_product(path, p2)));

    Graph star = generate(FamilySpec::of(Family::Star, m)).graph;
    EXPECT_EQ(edge_set(generate(FamilySpec::of(Family::Book, m)).graph), edge_set(cartesian_product(star, p2)));
  }
  for (std::size_t m = 3; m <= 8; ++m) {
    Graph cycle = generate(FamilySpec::of(Family::Cycle, m)).graph;
    EXPECT_EQ(edge_set(generate(FamilySpec::of(Family::Prism, m)).graph), edge_set(cartesian_product(cycle, p2)));
  }
}

TEST(Families, CrownIsBipartiteMinusPerfectMatching) {
  for (std::size_t m = 3; m <= 10; ++m) {
    auto full = edge_set(generate(FamilySpec::bipartite(m, m)).graph);
    for (Vertex i = 0; i < m; ++i) full.erase({i, static_cast<Vertex>(m + i)});
    EXPECT_EQ(edge_set(generate(FamilySpec::of(Family::Crown, m)).graph), full);
  }
}

TEST(Families, StarMatchesK1m) {
  for (std::size_t m = 2; m <= 12; ++m) {
    Graph star = generate(FamilySpec::of(Family::Star, m)).graph;
    Graph k1m(m + 1);
    for (std::size_t j = 0; j < m; ++j) k1m.add_edge(static_cast<Vertex>(m), static_cast<Vertex>(j));
    EXPECT_EQ(degree_sequence(star), degree_sequence(k1m));
    auto a = harmonic_centralities(star);
    auto b = harmonic_centralities(k1m);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
  }
}

TEST(Families, VertexTransitiveFamiliesAreUniform) {
  for (Family f : {Family::Cycle, Family::Crown, Family::Prism, Family::Complete}) {
    for (std::size_t m = 3; m <= 15; ++m) {
      Graph g = generate(FamilySpec::of(f, m)).graph;
      auto h = harmonic_centralities(g);
      for (Vertex u = 1; u < g.order(); ++u) {
        EXPECT_EQ(g.degree(u), g.degree(0));
        EXPECT_EQ(h[u], h[0]);
      }
    }
  }
}

#include "hyperdiff/error.hpp"
#include "hyperdiff/geometry.hpp"

#include "../support/generators.hpp"

#include <gtest/gtest.h>

namespace hyperdiff {
namespace {

Point point(std::initializer_list<Rational> xs) { return Point(xs); }

TEST(Embed, StandardBasis) {
  const auto emb = embed(VertexSet::numbered(3));
  EXPECT_EQ(emb.point(0), point({1, 0, 0}));
  EXPECT_EQ(emb.point(1), point({0, 1, 0}));
  EXPECT_EQ(emb.point(2), point({0, 0, 1}));
  EXPECT_EQ(embed(VertexSet::numbered(1)).point(0), point({1}));
  EXPECT_THROW(embed(VertexSet()), Error);
}

TEST(Embed, DistinctPointsAreSqrt2Apart) {
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto emb = embed(VertexSet::numbered(n));
    for (VertexIndex i = 0; i < n; ++i) {
      for (VertexIndex j = 0; j < n; ++j) {
        EXPECT_EQ(squared_distance(emb.point(i), emb.point(j)), i == j ? 0 : 2);
      }
    }
  }
}

TEST(Cell, Barycenters) {
  const auto emb = embed(VertexSet::numbered(3));
  EXPECT_EQ(cell(Hyperedge::from_indices({0, 1}), emb).barycenter, point({Rational(1, 2), Rational(1, 2), 0}));
  EXPECT_EQ(cell(Hyperedge::from_indices({0}), emb).barycenter, point({1, 0, 0}));
  const Rational third(1, 3);
  EXPECT_EQ(cell(Hyperedge::from_indices({0, 1, 2}), emb).barycenter, point({third, third, third}));
  EXPECT_EQ(cell(Hyperedge::from_indices({0, 2}), emb).vertex_points.size(), 2u);
}

TEST(RealizationCells, CountsAndOrder) {
  const auto vs = VertexSet::numbered(3);
  const auto emb = embed(vs);
  const auto cells = realization_cells(complete(vs), emb);
  ASSERT_EQ(cells.size(), 7u);
  for (std::size_t i = 1; i < cells.size(); ++i) EXPECT_LT(cells[i - 1].hyperedge, cells[i].hyperedge);
  EXPECT_TRUE(realization_cells(Hypergraph(vs), emb).empty());

  const auto two = realization_cells(make_hypergraph(vs, {{"v0"}, {"v0", "v1"}}), emb);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_NE(two[0].barycenter, two[1].barycenter);
}

TEST(RealizationCells, RejectsForeignEmbedding) {
  const auto emb = embed(VertexSet::numbered(2));
  EXPECT_THROW(realization_cells(complete(VertexSet::numbered(3)), emb), Error);
}

TEST(Disjointness, FullSimplexOnFourVertices) {
  const auto vs = VertexSet::numbered(4);
  const auto report = check_disjointness(complete(vs), embed(vs));
  EXPECT_TRUE(report.passed);
  EXPECT_EQ(report.cells, 15u);
  EXPECT_EQ(report.pairs_checked, 105u);
  EXPECT_FALSE(report.violation.has_value());

  const auto single = check_disjointness(make_hypergraph(vs, {{"v0", "v1"}}), embed(vs));
  EXPECT_TRUE(single.passed);
  EXPECT_EQ(single.pairs_checked, 0u);
}

TEST(Disjointness, BarycentersLieInOpenFaces) {
  testing::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = std::size_t(testing::uniform_int(rng, 1, 6));
    const auto vs = VertexSet::numbered(n);
    const auto h = testing::from_masks(vs, testing::random_masks(rng, n, 6));
    const auto emb = embed(vs);
    EXPECT_TRUE(check_disjointness(h, emb).passed);
    for (const auto& c : realization_cells(h, emb)) {
      Rational sum = 0;
      const Rational weight(1, static_cast<long>(c.hyperedge.size()));
      for (VertexIndex i = 0; i < n; ++i) {
        EXPECT_EQ(c.barycenter[i], c.hyperedge.contains(i) ? weight : Rational(0));
        sum += c.barycenter[i];
      }
      EXPECT_EQ(sum, 1);
      const auto s = support(c.barycenter);
      EXPECT_TRUE(std::equal(s.begin(), s.end(), c.hyperedge.vertices().begin(), c.hyperedge.vertices().end()));
    }
  }
}

TEST(ComplementCells, TriangleBoundary) {
  const auto vs = VertexSet::numbered(3);
  const auto emb = embed(vs);
  const auto K = make_hypergraph(vs, {{"v0"}, {"v1"}, {"v2"}, {"v0", "v1"}, {"v0", "v2"}, {"v1", "v2"}});
  const auto report = check_complement_cells(complete(vs), K, emb);
  EXPECT_TRUE(report.passed);
  ASSERT_EQ(report.remaining.size(), 1u);
  EXPECT_EQ(report.remaining[0], Hyperedge::from_indices({0, 1, 2}));

  EXPECT_EQ(check_complement_cells(K, Hypergraph(vs), emb).remaining.size(), K.size());
  EXPECT_TRUE(check_complement_cells(K, K, emb).remaining.empty());
  EXPECT_THROW(check_complement_cells(K, complete(VertexSet::numbered(4)), emb), Error);
}

TEST(ComplementCells, RandomPairs) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = std::size_t(testing::uniform_int(rng, 1, 5));
    const auto vs = VertexSet::numbered(n);
    const auto h2 = testing::from_masks(vs, testing::random_masks(rng, n, 8));
    const auto h1 = testing::from_masks(vs, testing::random_masks(rng, n, 4));
    EXPECT_TRUE(check_complement_cells(h2, h1, embed(vs)).passed);
  }
}

}  // namespace
}  // namespace hyperdiff

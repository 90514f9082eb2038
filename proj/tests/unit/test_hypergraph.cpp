#include "hyperdiff/error.hpp"
#include "hyperdiff/hypergraph.hpp"

#include "../support/generators.hpp"

#include <gtest/gtest.h>

namespace hyperdiff {
namespace {

using testing::Mask;
using testing::Rng;

Hypergraph on3(const std::vector<std::vector<std::string>>& edges) {
  return make_hypergraph(VertexSet::numbered(3), edges);
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

TEST(VertexSet, KeepsDeclarationOrder) {
  VertexSet vs({"b", "a", "c"});
  EXPECT_EQ(vs.index_of("b"), 0u);
  EXPECT_EQ(vs.index_of("c"), 2u);
  EXPECT_EQ(vs.label(1), "a");
  EXPECT_FALSE(vs.find("z").has_value());
}

TEST(VertexSet, RejectsDuplicatesUnknownsAndOversize) {
  EXPECT_EQ(kind_of([] { VertexSet({"a", "a"}); }), ErrorKind::DuplicateVertex);
  EXPECT_EQ(kind_of([] { VertexSet::numbered(3).index_of("v9"); }), ErrorKind::UnknownVertex);
  EXPECT_EQ(kind_of([] { VertexSet::numbered(kDefaultMaxVertices + 1); }), ErrorKind::TooManyVertices);
  EXPECT_EQ(VertexSet::numbered(30, "v", 30).size(), 30u);
}

TEST(Hyperedge, SortsLabelsByVertexOrder) {
  const auto vs = VertexSet::numbered(6);
  const std::vector<std::string> labels{"v5", "v0", "v4", "v2"};
  const auto e = make_hyperedge(labels, vs);
  EXPECT_EQ(e.dimension(), 3);
  EXPECT_EQ(format_hyperedge(e, vs), "v0v2v4v5");

  const std::vector<std::string> single{"v3"};
  EXPECT_EQ(make_hyperedge(single, vs).dimension(), 0);
}

TEST(Hyperedge, RejectsRepeatsAndUnknownLabels) {
  const auto vs = VertexSet::numbered(3);
  const std::vector<std::string> repeated{"v1", "v1"};
  const std::vector<std::string> unknown{"v1", "w"};
  EXPECT_EQ(kind_of([&] { make_hyperedge(repeated, vs); }), ErrorKind::DuplicateVertex);
  EXPECT_EQ(kind_of([&] { make_hyperedge(unknown, vs); }), ErrorKind::UnknownVertex);
  EXPECT_EQ(kind_of([] { Hyperedge::from_indices({}); }), ErrorKind::InvalidArgument);
}

TEST(Hyperedge, OrdersByDimensionThenLexicographically) {
  const auto a = Hyperedge::from_indices({2});
  const auto b = Hyperedge::from_indices({0, 1});
  const auto c = Hyperedge::from_indices({0, 2});
  EXPECT_LT(a, b);
  EXPECT_LT(b, c);
}

TEST(Hypergraph, DeduplicatesEdges) {
  const auto h = on3({{"v0", "v1"}, {"v1", "v0"}, {"v2"}});
  EXPECT_EQ(h.size(), 2u);
  EXPECT_EQ(h.top_dimension(), 1);
  EXPECT_EQ(h.counts_by_dimension(), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(Hypergraph(VertexSet::numbered(2)).top_dimension(), -1);
}

TEST(CompleteUniform, CountsBinomials) {
  const auto v3 = VertexSet::numbered(3);
  EXPECT_EQ(complete_uniform(v3, 1), on3({{"v0", "v1"}, {"v0", "v2"}, {"v1", "v2"}}));
  EXPECT_EQ(complete_uniform(v3, 2), on3({{"v0", "v1", "v2"}}));
  EXPECT_EQ(complete_uniform(VertexSet::numbered(6), 0).size(), 6u);
  EXPECT_EQ(kind_of([&] { complete_uniform(v3, 3); }), ErrorKind::DimensionOutOfRange);
  EXPECT_EQ(kind_of([&] { complete_uniform(v3, -1); }), ErrorKind::DimensionOutOfRange);
}

TEST(Complete, HasEveryNonEmptySubset) {
  EXPECT_EQ(complete(VertexSet::numbered(3)),
            on3({{"v0"}, {"v1"}, {"v2"}, {"v0", "v1"}, {"v1", "v2"}, {"v0", "v2"}, {"v0", "v1", "v2"}}));
  EXPECT_EQ(complete(VertexSet::numbered(1)).size(), 1u);

  // Count by enumerating bit masks.
  const auto full6 = complete(VertexSet::numbered(6));
  std::size_t subsets = 0;
  for (Mask m = 1; m < (Mask(1) << 6); ++m) subsets += full6.contains(testing::edge_from_mask(m));
  EXPECT_EQ(subsets, 63u);
  EXPECT_EQ(full6.size(), 63u);
}

TEST(Complete, IsUnionOfUniformLayers) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto vs = VertexSet::numbered(n);
    std::vector<Hyperedge> all;
    for (int d = 0; d < static_cast<int>(n); ++d) {
      const auto layer = complete_uniform(vs, d);
      all.insert(all.end(), layer.edges().begin(), layer.edges().end());
    }
    EXPECT_EQ(all.size(), (std::size_t(1) << n) - 1);
    EXPECT_EQ(Hypergraph(vs, all), complete(vs));
  }
}

TEST(Complement, MatchesTriangleExamples) {
  const auto delta = complete(VertexSet::numbered(3));
  const auto K = on3({{"v0"}, {"v1"}, {"v2"}, {"v0", "v1"}, {"v0", "v2"}, {"v1", "v2"}});
  const auto L = on3({{"v0", "v1"}, {"v0", "v2"}, {"v0", "v1", "v2"}});
  EXPECT_EQ(complement(delta, K), on3({{"v0", "v1", "v2"}}));
  EXPECT_EQ(complement(delta, L), on3({{"v0"}, {"v1"}, {"v2"}, {"v1", "v2"}}));
  EXPECT_TRUE(complement(K, K).empty());
}

TEST(Complement, RequiresSameVertexSet) {
  const auto a = complete(VertexSet::numbered(3));
  const auto b = complete(VertexSet::numbered(4));
  EXPECT_EQ(kind_of([&] { complement(a, b); }), ErrorKind::VertexSetMismatch);
}

TEST(Predicates, SimplicialExamples) {
  EXPECT_TRUE(is_simplicial(on3({{"v0"}, {"v1"}, {"v2"}, {"v0", "v1"}, {"v0", "v2"}, {"v1", "v2"}})));
  EXPECT_FALSE(is_simplicial(complete_uniform(VertexSet::numbered(4), 1)));
  EXPECT_FALSE(is_simplicial(complete_uniform(VertexSet::numbered(4), 2)));
  EXPECT_TRUE(is_simplicial(Hypergraph(VertexSet::numbered(3))));
}

TEST(Predicates, CosimplicialExamples) {
  EXPECT_TRUE(is_cosimplicial(on3({{"v0", "v1"}, {"v0", "v2"}, {"v0", "v1", "v2"}})));
  EXPECT_TRUE(is_cosimplicial(complete(VertexSet::numbered(5))));
  EXPECT_FALSE(is_cosimplicial(on3({{"v0", "v1"}})));
  EXPECT_TRUE(is_cosimplicial(Hypergraph(VertexSet::numbered(3))));
}

TEST(Closure, Examples) {
  EXPECT_EQ(simplicial_closure(on3({{"v0", "v1", "v2"}})).size(), 7u);
  EXPECT_EQ(simplicial_closure(on3({{"v0", "v1"}, {"v2"}})), on3({{"v0"}, {"v1"}, {"v2"}, {"v0", "v1"}}));
  EXPECT_EQ(cosimplicial_closure(on3({{"v0", "v1", "v2"}})), on3({{"v0", "v1", "v2"}}));
  EXPECT_EQ(cosimplicial_closure(on3({{"v0", "v1"}})), on3({{"v0", "v1"}, {"v0", "v1", "v2"}}));
}

// Predicates and closures against brute-force subset enumeration.
TEST(HypergraphProperties, AgreeWithBitmaskOracles) {
  Rng rng(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = std::size_t(testing::uniform_int(rng, 1, 6));
    const auto masks = testing::random_masks(rng, n, testing::uniform_int(rng, 0, 8));
    const auto h = testing::from_masks(VertexSet::numbered(n), masks);
    EXPECT_EQ(is_simplicial(h), testing::oracle_is_simplicial(masks));
    EXPECT_EQ(is_cosimplicial(h), testing::oracle_is_cosimplicial(masks, n));
    EXPECT_EQ(testing::masks_of(simplicial_closure(h)), testing::down_closure(masks));
    EXPECT_EQ(testing::masks_of(cosimplicial_closure(h)), testing::up_closure(masks, n));
  }
}

TEST(HypergraphProperties, ClosuresAreIdempotentExtensiveMonotone) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = std::size_t(testing::uniform_int(rng, 1, 6));
    const auto vs = VertexSet::numbered(n);
    const auto small = testing::random_masks(rng, n, testing::uniform_int(rng, 0, 4));
    auto big = small;
    for (auto m : testing::random_masks(rng, n, 3)) big.insert(m);
    const auto h = testing::from_masks(vs, small);
    const auto g = testing::from_masks(vs, big);
    for (auto close : {&simplicial_closure, &cosimplicial_closure}) {
      const auto ch = close(h);
      EXPECT_EQ(close(ch), ch);
      for (const auto& e : h.edges()) EXPECT_TRUE(ch.contains(e));
      const auto cg = close(g);
      for (const auto& e : ch.edges()) EXPECT_TRUE(cg.contains(e));
    }
  }
}

TEST(HypergraphProperties, ComplementDualityAndDoubleComplement) {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = std::size_t(testing::uniform_int(rng, 1, 6));
    const auto K = testing::random_simplicial(rng, n);
    const auto L = testing::random_cosimplicial(rng, n);
    const auto delta = complete(K.vertex_set());
    EXPECT_TRUE(is_cosimplicial(complement(delta, K)));
    EXPECT_TRUE(is_simplicial(complement(delta, L)));
    const auto h = testing::from_masks(K.vertex_set(), testing::random_masks(rng, n, 5));
    EXPECT_EQ(complement(delta, complement(delta, h)), h);
  }
}

}  // namespace
}  // namespace hyperdiff

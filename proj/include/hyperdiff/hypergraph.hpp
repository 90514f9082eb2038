#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyperdiff {

using VertexIndex = std::uint32_t;

/// Guardrail on #V: the complete hypergraph has 2^#V - 1 hyperedges.
inline constexpr std::size_t kDefaultMaxVertices = 24;

/// Totally ordered finite vertex set. The order is the declaration order of
/// the labels, and every index in the library refers into it.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<std::string> labels,
                     std::size_t max_vertices = kDefaultMaxVertices);

  /// {prefix0, prefix1, ..., prefix(n-1)}.
  static VertexSet numbered(std::size_t n, std::string_view prefix = "v",
                            std::size_t max_vertices = kDefaultMaxVertices);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(VertexIndex i) const;

  std::optional<VertexIndex> find(std::string_view label) const;
  /// Throws Error{UnknownVertex}.
  VertexIndex index_of(std::string_view label) const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, VertexIndex, std::less<>> index_;
};

/// A non-empty vertex subset stored as its strictly increasing index
/// sequence. Dimension is cardinality minus one.
class Hyperedge {
 public:
  /// Sorts the indices; throws DuplicateVertex on repeats and
  /// InvalidArgument when empty.
  static Hyperedge from_indices(std::vector<VertexIndex> indices);

  std::span<const VertexIndex> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  VertexIndex operator[](std::size_t i) const { return vertices_[i]; }

  bool contains(VertexIndex v) const;
  bool is_subset_of(const Hyperedge& other) const;

  /// Face obtained by dropping the vertex at `position`; requires size() >= 2.
  Hyperedge without_position(std::size_t position) const;
  /// Coface obtained by adding `v`; requires !contains(v).
  Hyperedge with_vertex(VertexIndex v) const;

  /// Ordered by (dimension, lexicographic vertices).
  friend std::strong_ordering operator<=>(const Hyperedge& a, const Hyperedge& b);
  friend bool operator==(const Hyperedge& a, const Hyperedge& b) = default;

 private:
  explicit Hyperedge(std::vector<VertexIndex> sorted) : vertices_(std::move(sorted)) {}
  std::vector<VertexIndex> vertices_;
};

/// Resolves labels against `vertex_set`. Labels may arrive in any order.
Hyperedge make_hyperedge(std::span<const std::string> labels, const VertexSet& vertex_set);
std::vector<std::string> hyperedge_labels(const Hyperedge& edge, const VertexSet& vertex_set);
/// Concatenated labels, e.g. "v0v1v2".
std::string format_hyperedge(const Hyperedge& edge, const VertexSet& vertex_set);

/// Finite set of hyperedges on a vertex set, grouped by dimension.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(VertexSet vertex_set) : vertex_set_(std::move(vertex_set)) {}
  /// Validates indices against the vertex set and drops duplicates.
  Hypergraph(VertexSet vertex_set, std::span<const Hyperedge> edges);

  const VertexSet& vertex_set() const noexcept { return vertex_set_; }
  const std::set<Hyperedge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  bool contains(const Hyperedge& edge) const { return edges_.contains(edge); }

  /// -1 for the empty hypergraph.
  int top_dimension() const noexcept;
  /// Lexicographically ordered n-hyperedges; empty when n < 0.
  std::vector<Hyperedge> edges_of_dimension(int n) const;
  /// Entry n is the number of n-hyperedges, up to top_dimension().
  std::vector<std::size_t> counts_by_dimension() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) = default;

 private:
  VertexSet vertex_set_;
  std::set<Hyperedge> edges_;
};

Hypergraph make_hypergraph(const VertexSet& vertex_set,
                           const std::vector<std::vector<std::string>>& edges);

/// All C(#V, n+1) n-hyperedges. Throws DimensionOutOfRange unless 0 <= n < #V.
Hypergraph complete_uniform(const VertexSet& vertex_set, int n);
/// All 2^#V - 1 non-empty subsets of V.
Hypergraph complete(const VertexSet& vertex_set);
/// {sigma in h2 : sigma not in h1}. Throws VertexSetMismatch.
Hypergraph complement(const Hypergraph& h2, const Hypergraph& h1);

bool is_simplicial(const Hypergraph& h);
bool is_cosimplicial(const Hypergraph& h);

Hypergraph simplicial_closure(const Hypergraph& h);
Hypergraph cosimplicial_closure(const Hypergraph& h);

}  // namespace hyperdiff

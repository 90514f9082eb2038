#pragma once

#include "hyperdiff/hypergraph.hpp"
#include "hyperdiff/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hyperdiff {

using Point = std::vector<Rational>;

/// Standard-basis embedding of V into Q^#V: vertex i goes to e_i.
class Embedding {
 public:
  explicit Embedding(VertexSet vertex_set);

  const VertexSet& vertex_set() const noexcept { return vertex_set_; }
  std::size_t ambient_dimension() const noexcept { return vertex_set_.size(); }
  const Point& point(VertexIndex i) const { return points_.at(i); }

 private:
  VertexSet vertex_set_;
  std::vector<Point> points_;
};

/// Throws InvalidArgument for an empty vertex set.
Embedding embed(const VertexSet& vertex_set);

/// Finite stand-in for the open cell |sigma|: its corner points and the
/// barycenter, where every barycentric weight is 1/(n+1).
struct CellDescriptor {
  Hyperedge hyperedge;
  std::vector<Point> vertex_points;
  Point barycenter;
};

CellDescriptor cell(const Hyperedge& edge, const Embedding& embedding);

/// One descriptor per hyperedge, ordered by (dimension, lexicographic vertices).
std::vector<CellDescriptor> realization_cells(const Hypergraph& h, const Embedding& embedding);

Rational squared_distance(const Point& a, const Point& b);
/// Coordinates with nonzero weight.
std::vector<VertexIndex> support(const Point& p);

struct DisjointnessReport {
  bool passed = true;
  std::size_t cells = 0;
  std::size_t pairs_checked = 0;
  std::optional<std::pair<Hyperedge, Hyperedge>> violation;
};

/// Distinct hyperedges must have distinct barycenter supports, so their open
/// cells cannot meet. Also checks every barycenter lies in the open face of
/// its own cell.
DisjointnessReport check_disjointness(const Hypergraph& h, const Embedding& embedding);

struct ComplementCellsReport {
  bool passed = true;
  /// Cells of complement(h2, h1), in realization order.
  std::vector<Hyperedge> remaining;
};

/// cells(complement(h2, h1)) == cells(h2) \ cells(h1). Throws VertexSetMismatch.
ComplementCellsReport check_complement_cells(const Hypergraph& h2, const Hypergraph& h1,
                                             const Embedding& embedding);

}  // namespace hyperdiff

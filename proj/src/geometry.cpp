#include "hyperdiff/geometry.hpp"

#include "hyperdiff/error.hpp"

#include <map>

namespace hyperdiff {

Embedding::Embedding(VertexSet vertex_set) : vertex_set_(std::move(vertex_set)) {
  const std::size_t n = vertex_set_.size();
  points_.assign(n, Point(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) points_[i][i] = 1;
}

Embedding embed(const VertexSet& vertex_set) {
  if (vertex_set.empty()) throw Error(ErrorKind::InvalidArgument, "cannot embed an empty vertex set");
  return Embedding(vertex_set);
}

CellDescriptor cell(const Hyperedge& edge, const Embedding& embedding) {
  CellDescriptor out{edge, {}, Point(embedding.ambient_dimension(), Rational(0))};
  const Rational weight(1, static_cast<long>(edge.size()));
  for (auto v : edge.vertices()) {
    const Point& p = embedding.point(v);
    out.vertex_points.push_back(p);
    for (std::size_t c = 0; c < p.size(); ++c) out.barycenter[c] += weight * p[c];
  }
  return out;
}

std::vector<CellDescriptor> realization_cells(const Hypergraph& h, const Embedding& embedding) {
  if (!(h.vertex_set() == embedding.vertex_set())) {
    throw Error(ErrorKind::VertexSetMismatch, "embedding was built for a different vertex set");
  }
  std::vector<CellDescriptor> cells;
  cells.reserve(h.size());
  for (const auto& e : h.edges()) cells.push_back(cell(e, embedding));
  return cells;
}

Rational squared_distance(const Point& a, const Point& b) {
  Rational total = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    Rational d = a[i] - b[i];
    total += d * d;
  }
  return total;
}

std::vector<VertexIndex> support(const Point& p) {
  std::vector<VertexIndex> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0) out.push_back(static_cast<VertexIndex>(i));
  }
  return out;
}

DisjointnessReport check_disjointness(const Hypergraph& h, const Embedding& embedding) {
  DisjointnessReport report;
  const auto cells = realization_cells(h, embedding);
  report.cells = cells.size();
  report.pairs_checked = cells.size() * (cells.size() - (cells.empty() ? 0 : 1)) / 2;

  // Injectivity of edge -> support certifies every pair at once.
  std::map<std::vector<VertexIndex>, const Hyperedge*> seen;
  for (const auto& c : cells) {
    auto s = support(c.barycenter);
    const Rational weight(1, static_cast<long>(c.hyperedge.size()));
    bool in_open_face = std::equal(s.begin(), s.end(), c.hyperedge.vertices().begin(),
                                   c.hyperedge.vertices().end());
    for (auto v : s) in_open_face = in_open_face && c.barycenter[v] == weight;
    auto [it, inserted] = seen.emplace(std::move(s), &c.hyperedge);
    if (!inserted || !in_open_face) {
      report.passed = false;
      report.violation = std::make_pair(*it->second, c.hyperedge);
      return report;
    }
  }
  return report;
}

ComplementCellsReport check_complement_cells(const Hypergraph& h2, const Hypergraph& h1,
                                             const Embedding& embedding) {
  const auto direct = realization_cells(complement(h2, h1), embedding);

  const auto removed = realization_cells(h1, embedding);
  std::map<Hyperedge, Point> drop;
  for (const auto& c : removed) drop.emplace(c.hyperedge, c.barycenter);
  std::vector<CellDescriptor> difference;
  for (auto& c : realization_cells(h2, embedding)) {
    auto it = drop.find(c.hyperedge);
    if (it == drop.end() || it->second != c.barycenter) difference.push_back(std::move(c));
  }

  ComplementCellsReport report;
  report.passed = direct.size() == difference.size();
  for (std::size_t i = 0; report.passed && i < direct.size(); ++i) {
    report.passed = direct[i].hyperedge == difference[i].hyperedge &&
                    direct[i].barycenter == difference[i].barycenter;
  }
  for (const auto& c : direct) report.remaining.push_back(c.hyperedge);
  return report;
}

}  // namespace hyperdiff

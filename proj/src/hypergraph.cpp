#include "hyperdiff/hypergraph.hpp"

#include "hyperdiff/error.hpp"

#include <algorithm>
#include <deque>

namespace hyperdiff {

VertexSet::VertexSet(std::vector<std::string> labels, std::size_t max_vertices)
    : labels_(std::move(labels)) {
  if (labels_.size() > max_vertices) {
    throw Error(ErrorKind::TooManyVertices,
                std::to_string(labels_.size()) + " vertices exceed the limit of " +
                    std::to_string(max_vertices));
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    auto [it, inserted] = index_.emplace(labels_[i], static_cast<VertexIndex>(i));
    if (!inserted) {
      throw Error(ErrorKind::DuplicateVertex, "vertex label declared twice: " + labels_[i]);
    }
  }
}

VertexSet VertexSet::numbered(std::size_t n, std::string_view prefix, std::size_t max_vertices) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return VertexSet(std::move(labels), max_vertices);
}

const std::string& VertexSet::label(VertexIndex i) const {
  if (i >= labels_.size()) {
    throw Error(ErrorKind::UnknownVertex, "vertex index " + std::to_string(i) + " out of range");
  }
  return labels_[i];
}

std::optional<VertexIndex> VertexSet::find(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexIndex VertexSet::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorKind::UnknownVertex, "unknown vertex: " + std::string(label));
}

Hyperedge Hyperedge::from_indices(std::vector<VertexIndex> indices) {
  if (indices.empty()) throw Error(ErrorKind::InvalidArgument, "a hyperedge needs at least one vertex");
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
    throw Error(ErrorKind::DuplicateVertex, "repeated vertex in hyperedge");
  }
  return Hyperedge(std::move(indices));
}

bool Hyperedge::contains(VertexIndex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Hyperedge::is_subset_of(const Hyperedge& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

Hyperedge Hyperedge::without_position(std::size_t position) const {
  std::vector<VertexIndex> face;
  face.reserve(vertices_.size() - 1);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i != position) face.push_back(vertices_[i]);
  }
  return Hyperedge(std::move(face));
}

Hyperedge Hyperedge::with_vertex(VertexIndex v) const {
  std::vector<VertexIndex> coface(vertices_);
  coface.insert(std::upper_bound(coface.begin(), coface.end(), v), v);
  return Hyperedge(std::move(coface));
}

std::strong_ordering operator<=>(const Hyperedge& a, const Hyperedge& b) {
  if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0) return c;
  return a.vertices_ <=> b.vertices_;
}

Hyperedge make_hyperedge(std::span<const std::string> labels, const VertexSet& vertex_set) {
  std::vector<VertexIndex> indices;
  indices.reserve(labels.size());
  for (const auto& label : labels) indices.push_back(vertex_set.index_of(label));
  return Hyperedge::from_indices(std::move(indices));
}

std::vector<std::string> hyperedge_labels(const Hyperedge& edge, const VertexSet& vertex_set) {
  std::vector<std::string> out;
  out.reserve(edge.size());
  for (auto v : edge.vertices()) out.push_back(vertex_set.label(v));
  return out;
}

std::string format_hyperedge(const Hyperedge& edge, const VertexSet& vertex_set) {
  std::string out;
  for (auto v : edge.vertices()) out += vertex_set.label(v);
  return out;
}

Hypergraph::Hypergraph(VertexSet vertex_set, std::span<const Hyperedge> edges)
    : vertex_set_(std::move(vertex_set)) {
  for (const auto& e : edges) {
    if (e.vertices().back() >= vertex_set_.size()) {
      throw Error(ErrorKind::UnknownVertex, "hyperedge refers to a vertex outside the vertex set");
    }
    edges_.insert(e);
  }
}

int Hypergraph::top_dimension() const noexcept {
  return edges_.empty() ? -1 : edges_.rbegin()->dimension();
}

std::vector<Hyperedge> Hypergraph::edges_of_dimension(int n) const {
  std::vector<Hyperedge> out;
  if (n < 0) return out;
  for (const auto& e : edges_) {
    if (e.dimension() == n) out.push_back(e);
    else if (e.dimension() > n) break;
  }
  return out;
}

std::vector<std::size_t> Hypergraph::counts_by_dimension() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(top_dimension() + 1), 0);
  for (const auto& e : edges_) ++counts[static_cast<std::size_t>(e.dimension())];
  return counts;
}

Hypergraph make_hypergraph(const VertexSet& vertex_set,
                           const std::vector<std::vector<std::string>>& edges) {
  std::vector<Hyperedge> resolved;
  resolved.reserve(edges.size());
  for (const auto& labels : edges) resolved.push_back(make_hyperedge(labels, vertex_set));
  return Hypergraph(vertex_set, resolved);
}

namespace {

void append_combinations(std::size_t n, std::size_t k, std::vector<Hyperedge>& out) {
  std::vector<VertexIndex> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<VertexIndex>(i);
  while (true) {
    out.push_back(Hyperedge::from_indices(pick));
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

void require_same_vertices(const Hypergraph& a, const Hypergraph& b) {
  if (!(a.vertex_set() == b.vertex_set())) {
    throw Error(ErrorKind::VertexSetMismatch, "hypergraphs are defined on different vertex sets");
  }
}

}  // namespace

Hypergraph complete_uniform(const VertexSet& vertex_set, int n) {
  if (n < 0 || static_cast<std::size_t>(n) >= vertex_set.size()) {
    throw Error(ErrorKind::DimensionOutOfRange,
                "dimension " + std::to_string(n) + " is not in [0, " +
                    std::to_string(vertex_set.size()) + ")");
  }
  std::vector<Hyperedge> edges;
  append_combinations(vertex_set.size(), static_cast<std::size_t>(n) + 1, edges);
  return Hypergraph(vertex_set, edges);
}

Hypergraph complete(const VertexSet& vertex_set) {
  std::vector<Hyperedge> edges;
  for (std::size_t k = 1; k <= vertex_set.size(); ++k) {
    append_combinations(vertex_set.size(), k, edges);
  }
  return Hypergraph(vertex_set, edges);
}

Hypergraph complement(const Hypergraph& h2, const Hypergraph& h1) {
  require_same_vertices(h2, h1);
  std::vector<Hyperedge> kept;
  std::set_difference(h2.edges().begin(), h2.edges().end(), h1.edges().begin(), h1.edges().end(),
                      std::back_inserter(kept));
  return Hypergraph(h2.vertex_set(), kept);
}

// Closure under faces follows from closure under codimension-one faces, and
// closure under supersets from closure under single-vertex cofaces.

bool is_simplicial(const Hypergraph& h) {
  for (const auto& e : h.edges()) {
    if (e.size() < 2) continue;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!h.contains(e.without_position(i))) return false;
    }
  }
  return true;
}

bool is_cosimplicial(const Hypergraph& h) {
  const auto n = static_cast<VertexIndex>(h.vertex_set().size());
  for (const auto& e : h.edges()) {
    for (VertexIndex v = 0; v < n; ++v) {
      if (!e.contains(v) && !h.contains(e.with_vertex(v))) return false;
    }
  }
  return true;
}

Hypergraph simplicial_closure(const Hypergraph& h) {
  std::set<Hyperedge> closed = h.edges();
  std::deque<Hyperedge> pending(closed.begin(), closed.end());
  while (!pending.empty()) {
    Hyperedge e = std::move(pending.front());
    pending.pop_front();
    if (e.size() < 2) continue;
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto face = e.without_position(i);
      if (closed.insert(face).second) pending.push_back(std::move(face));
    }
  }
  std::vector<Hyperedge> edges(closed.begin(), closed.end());
  return Hypergraph(h.vertex_set(), edges);
}

Hypergraph cosimplicial_closure(const Hypergraph& h) {
  const auto n = static_cast<VertexIndex>(h.vertex_set().size());
  std::set<Hyperedge> closed = h.edges();
  std::deque<Hyperedge> pending(closed.begin(), closed.end());
  while (!pending.empty()) {
    Hyperedge e = std::move(pending.front());
    pending.pop_front();
    for (VertexIndex v = 0; v < n; ++v) {
      if (e.contains(v)) continue;
      auto coface = e.with_vertex(v);
      if (closed.insert(coface).second) pending.push_back(std::move(coface));
    }
  }
  std::vector<Hyperedge> edges(closed.begin(), closed.end());
  return Hypergraph(h.vertex_set(), edges);
}

}  // namespace hyperdiff

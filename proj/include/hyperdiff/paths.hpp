#pragma once

#include "hyperdiff/hypergraph.hpp"
#include "hyperdiff/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hyperdiff {

/// A vertex sequence v0 v1 ... vn; repeats and arbitrary order are allowed.
class ElementaryPath {
 public:
  ElementaryPath() = default;
  explicit ElementaryPath(std::vector<VertexIndex> vertices);
  ElementaryPath(std::initializer_list<VertexIndex> vertices)
      : ElementaryPath(std::vector<VertexIndex>(vertices)) {}
  explicit ElementaryPath(const Hyperedge& edge)
      : ElementaryPath(std::vector<VertexIndex>(edge.vertices().begin(), edge.vertices().end())) {}

  int grade() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const noexcept { return vertices_.size(); }
  std::span<const VertexIndex> vertices() const noexcept { return vertices_; }
  VertexIndex operator[](std::size_t i) const { return vertices_[i]; }

  friend auto operator<=>(const ElementaryPath&, const ElementaryPath&) = default;

 private:
  std::vector<VertexIndex> vertices_;
};

enum class PathClass { Cyclic, Sorted, UnsortedRegular };

PathClass classify(const ElementaryPath& path);
bool is_cyclic(const ElementaryPath& path);
bool is_sorted(const ElementaryPath& path);

/// Sparse rational combination of elementary paths of one grade. The empty
/// vector is ZERO, which has no grade and equals every other empty vector.
class PathVector {
 public:
  using Terms = std::map<ElementaryPath, Rational>;

  PathVector() = default;
  static PathVector elementary(ElementaryPath path, const Rational& coefficient = 1);

  std::optional<int> grade() const;
  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const ElementaryPath& path) const;

  /// Throws GradeMismatch when `path` has a different grade than the vector.
  void add_term(const ElementaryPath& path, const Rational& coefficient);

  PathVector& operator+=(const PathVector& other);
  PathVector& operator-=(const PathVector& other);
  PathVector& operator*=(const Rational& scalar);

  friend PathVector operator+(PathVector a, const PathVector& b) { return a += b; }
  friend PathVector operator-(PathVector a, const PathVector& b) { return a -= b; }
  friend PathVector operator*(PathVector a, const Rational& s) { return a *= s; }
  friend PathVector operator*(const Rational& s, PathVector a) { return a *= s; }
  friend PathVector operator-(PathVector a) { return a *= Rational(-1); }
  friend bool operator==(const PathVector& a, const PathVector& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Elementary paths are orthonormal; vectors of different grades give 0.
Rational inner(const PathVector& a, const PathVector& b);

/// Keeps only strictly increasing paths. Realizes the quotient by cyclic
/// paths as the sorted-hyperedge chain space.
PathVector project_sorted(const PathVector& xi);
PathVector cyclic_part(const PathVector& xi);
PathVector unsorted_regular_part(const PathVector& xi);

PathVector as_path_vector(const Hyperedge& edge, const Rational& coefficient = 1);

/// "2 · v0 v1 - 1/3 · v1 v2", or "0" for ZERO.
std::string format_path_vector(const PathVector& xi, const VertexSet& vertex_set);

}  // namespace hyperdiff

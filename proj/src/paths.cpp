#include "hyperdiff/paths.hpp"

#include "hyperdiff/error.hpp"

#include <algorithm>

namespace hyperdiff {

ElementaryPath::ElementaryPath(std::vector<VertexIndex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorKind::InvalidArgument, "an elementary path needs a vertex");
}

bool is_sorted(const ElementaryPath& path) {
  auto v = path.vertices();
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

bool is_cyclic(const ElementaryPath& path) {
  std::vector<VertexIndex> v(path.vertices().begin(), path.vertices().end());
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) != v.end();
}

PathClass classify(const ElementaryPath& path) {
  if (is_sorted(path)) return PathClass::Sorted;
  return is_cyclic(path) ? PathClass::Cyclic : PathClass::UnsortedRegular;
}

PathVector PathVector::elementary(ElementaryPath path, const Rational& coefficient) {
  PathVector out;
  out.add_term(path, coefficient);
  return out;
}

std::optional<int> PathVector::grade() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.grade();
}

Rational PathVector::coefficient(const ElementaryPath& path) const {
  auto it = terms_.find(path);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PathVector::add_term(const ElementaryPath& path, const Rational& coefficient) {
  if (coefficient == 0) return;
  if (auto g = grade(); g && *g != path.grade()) {
    throw Error(ErrorKind::GradeMismatch, "cannot add a grade " + std::to_string(path.grade()) +
                                              " path to a grade " + std::to_string(*g) + " vector");
  }
  auto [it, inserted] = terms_.try_emplace(path, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

PathVector& PathVector::operator+=(const PathVector& other) {
  for (const auto& [path, c] : other.terms_) add_term(path, c);
  return *this;
}

PathVector& PathVector::operator-=(const PathVector& other) {
  for (const auto& [path, c] : other.terms_) add_term(path, -c);
  return *this;
}

PathVector& PathVector::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [path, c] : terms_) c *= scalar;
  return *this;
}

Rational inner(const PathVector& a, const PathVector& b) {
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  Rational total = 0;
  for (const auto& [path, c] : small.terms()) {
    auto it = large.terms().find(path);
    if (it != large.terms().end()) total += c * it->second;
  }
  return total;
}

namespace {

PathVector filter(const PathVector& xi, PathClass keep) {
  PathVector out;
  for (const auto& [path, c] : xi.terms()) {
    if (classify(path) == keep) out.add_term(path, c);
  }
  return out;
}

}  // namespace

PathVector project_sorted(const PathVector& xi) { return filter(xi, PathClass::Sorted); }
PathVector cyclic_part(const PathVector& xi) { return filter(xi, PathClass::Cyclic); }
PathVector unsorted_regular_part(const PathVector& xi) {
  return filter(xi, PathClass::UnsortedRegular);
}

PathVector as_path_vector(const Hyperedge& edge, const Rational& coefficient) {
  return PathVector::elementary(ElementaryPath(edge), coefficient);
}

std::string format_path_vector(const PathVector& xi, const VertexSet& vertex_set) {
  if (xi.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [path, c] : xi.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += format_rational(negative ? Rational(-c) : c) + " ·";
    for (auto v : path.vertices()) out += " " + vertex_set.label(v);
    first = false;
  }
  return out;
}

}  // namespace hyperdiff

#include "hyperdiff/calculus.hpp"

#include "hyperdiff/error.hpp"

#include <algorithm>

namespace hyperdiff {

int sort_with_sign(std::vector<VertexIndex>& vertices) {
  int sign = 1;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    for (std::size_t j = i; j > 0 && vertices[j - 1] >= vertices[j]; --j) {
      if (vertices[j - 1] == vertices[j]) return 0;
      std::swap(vertices[j - 1], vertices[j]);
      sign = -sign;
    }
  }
  return sign;
}

template <Variance V>
ExteriorForm<V>::ExteriorForm(int grade) : grade_(grade) {
  if (grade < 0) throw Error(ErrorKind::InvalidArgument, "form grade must be non-negative");
}

template <Variance V>
ExteriorForm<V> ExteriorForm<V>::scalar(const Rational& c) {
  ExteriorForm out(0);
  out.add_monomial(std::span<const VertexIndex>{}, c);
  return out;
}

template <Variance V>
ExteriorForm<V> ExteriorForm<V>::generator(VertexIndex v, const Rational& c) {
  ExteriorForm out(1);
  out.add_monomial({v}, c);
  return out;
}

template <Variance V>
ExteriorForm<V> ExteriorForm<V>::weighted(std::span<const Rational> weights) {
  ExteriorForm out(1);
  for (std::size_t v = 0; v < weights.size(); ++v) {
    out.add_monomial({static_cast<VertexIndex>(v)}, weights[v]);
  }
  return out;
}

template <Variance V>
std::size_t ExteriorForm<V>::vertex_bound() const {
  std::size_t bound = 0;
  for (const auto& [mono, c] : terms_) {
    if (!mono.empty()) bound = std::max<std::size_t>(bound, mono.back() + 1);
  }
  return bound;
}

template <Variance V>
void ExteriorForm<V>::add_monomial(std::span<const VertexIndex> vertices, const Rational& c) {
  if (static_cast<int>(vertices.size()) != grade_) {
    throw Error(ErrorKind::GradeMismatch, "monomial of length " + std::to_string(vertices.size()) +
                                              " in a grade " + std::to_string(grade_) + " form");
  }
  Monomial key(vertices.begin(), vertices.end());
  const int sign = sort_with_sign(key);
  if (sign == 0 || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(key), sign * c);
  if (!inserted) {
    it->second += sign * c;
    if (it->second == 0) terms_.erase(it);
  }
}

template <Variance V>
Rational ExteriorForm<V>::coefficient(std::span<const VertexIndex> vertices) const {
  if (static_cast<int>(vertices.size()) != grade_) return 0;
  Monomial key(vertices.begin(), vertices.end());
  const int sign = sort_with_sign(key);
  if (sign == 0) return 0;
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : Rational(sign * it->second);
}

template <Variance V>
ExteriorForm<V>& ExteriorForm<V>::operator+=(const ExteriorForm& other) {
  if (other.grade_ != grade_) {
    throw Error(ErrorKind::GradeMismatch, "cannot add forms of different grades");
  }
  for (const auto& [mono, c] : other.terms_) add_monomial(mono, c);
  return *this;
}

template <Variance V>
ExteriorForm<V>& ExteriorForm<V>::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, c] : terms_) c *= scalar;
  return *this;
}

template class ExteriorForm<Variance::Diff>;
template class ExteriorForm<Variance::Codiff>;

template <Variance V>
ExteriorForm<V> wedge(const ExteriorForm<V>& a, const ExteriorForm<V>& b) {
  ExteriorForm<V> out(a.grade() + b.grade());
  Monomial joined;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      joined.assign(ma.begin(), ma.end());
      joined.insert(joined.end(), mb.begin(), mb.end());
      out.add_monomial(joined, ca * cb);
    }
  }
  return out;
}

template DiffForm wedge(const DiffForm&, const DiffForm&);
template CodiffForm wedge(const CodiffForm&, const CodiffForm&);

namespace {

void add_partial(VertexIndex v, std::span<const VertexIndex> path, const Rational& c,
                 PathVector& out) {
  if (path.size() < 2) return;  // grade 0 maps into the zero space
  std::vector<VertexIndex> face(path.size() - 1);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] != v) continue;
    std::copy(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(i), face.begin());
    std::copy(path.begin() + static_cast<std::ptrdiff_t>(i) + 1, path.end(),
              face.begin() + static_cast<std::ptrdiff_t>(i));
    out.add_term(ElementaryPath(face), (i % 2 == 0) ? c : Rational(-c));
  }
}

void add_insert(VertexIndex v, std::span<const VertexIndex> path, const Rational& c,
                PathVector& out) {
  std::vector<VertexIndex> longer(path.size() + 1);
  for (std::size_t i = 0; i <= path.size(); ++i) {
    std::copy(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(i), longer.begin());
    longer[i] = v;
    std::copy(path.begin() + static_cast<std::ptrdiff_t>(i), path.end(),
              longer.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    out.add_term(ElementaryPath(longer), (i % 2 == 0) ? c : Rational(-c));
  }
}

template <typename Step>
PathVector apply_single(VertexIndex v, const PathVector& xi, Step step) {
  PathVector out;
  for (const auto& [path, c] : xi.terms()) step(v, path.vertices(), c, out);
  return out;
}

template <Variance V, typename Step>
PathVector apply_form(const ExteriorForm<V>& form, const PathVector& xi, Step step) {
  PathVector out;
  for (const auto& [mono, c] : form.terms()) {
    PathVector current = xi;
    for (auto it = mono.rbegin(); it != mono.rend() && !current.is_zero(); ++it) {
      current = apply_single(*it, current, step);
    }
    out += current * c;
  }
  return out;
}

}  // namespace

PathVector d_partial(VertexIndex v, const PathVector& xi) { return apply_single(v, xi, add_partial); }

PathVector d_insert(VertexIndex v, const PathVector& xi) { return apply_single(v, xi, add_insert); }

PathVector apply_diff(const DiffForm& alpha, const PathVector& xi) {
  return apply_form(alpha, xi, add_partial);
}

PathVector apply_codiff(const CodiffForm& omega, const PathVector& xi) {
  return apply_form(omega, xi, add_insert);
}

int adjoint_sign(int k) noexcept {
  const int r = ((k % 4) + 4) % 4;
  return (r == 0 || r == 1) ? 1 : -1;
}

namespace {

template <Variance To, Variance From>
ExteriorForm<To> transpose_form(const ExteriorForm<From>& form) {
  ExteriorForm<To> out(form.grade());
  const Rational sign(adjoint_sign(form.grade()));
  for (const auto& [mono, c] : form.terms()) out.add_monomial(mono, sign * c);
  return out;
}

}  // namespace

CodiffForm adjoint(const DiffForm& alpha) { return transpose_form<Variance::Codiff>(alpha); }

DiffForm adjoint(const CodiffForm& omega) { return transpose_form<Variance::Diff>(omega); }

}  // namespace hyperdiff

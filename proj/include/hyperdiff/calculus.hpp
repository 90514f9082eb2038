#pragma once

#include "hyperdiff/hypergraph.hpp"
#include "hyperdiff/paths.hpp"
#include "hyperdiff/rational.hpp"

#include <map>
#include <span>
#include <vector>

namespace hyperdiff {

/// Diff forms are built from the partial derivatives d/dv (grade -1 on
/// paths); codiff forms from the partial differentiations dv (grade +1).
enum class Variance { Diff, Codiff };

/// Strictly increasing vertex tuple naming the wedge monomial
/// g(v1) ^ g(v2) ^ ... ^ g(vk).
using Monomial = std::vector<VertexIndex>;

/// Element of the exterior algebra T_k(V) (Diff) or T^k(V) (Codiff).
///
/// Monomials are stored in ascending vertex order with the permutation sign
/// folded into the coefficient, so equal forms have equal tables. A wedge
/// monomial acts on paths as the composition of its generators with the
/// rightmost generator applied first.
template <Variance V>
class ExteriorForm {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit ExteriorForm(int grade = 0);

  /// Grade-0 form acting as multiplication by `c`.
  static ExteriorForm scalar(const Rational& c);
  /// c * g(v), with g = d/dv or dv.
  static ExteriorForm generator(VertexIndex v, const Rational& c = 1);
  /// Sum over v of weights[v] * g(v).
  static ExteriorForm weighted(std::span<const Rational> weights);

  int grade() const noexcept { return grade_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Largest vertex index used plus one; 0 for the zero form.
  std::size_t vertex_bound() const;

  /// Adds c * g(vertices[0]) ^ ... ^ g(vertices[k-1]). The vertices may be in
  /// any order; a repeated vertex contributes nothing. Throws GradeMismatch
  /// when the tuple length differs from grade().
  void add_monomial(std::span<const VertexIndex> vertices, const Rational& c);
  void add_monomial(std::initializer_list<VertexIndex> vertices, const Rational& c) {
    add_monomial(std::span<const VertexIndex>(vertices.begin(), vertices.size()), c);
  }

  /// Coefficient of an arbitrary (possibly unsorted) tuple under the
  /// antisymmetry relations.
  Rational coefficient(std::span<const VertexIndex> vertices) const;

  ExteriorForm& operator+=(const ExteriorForm& other);
  ExteriorForm& operator*=(const Rational& scalar);
  friend ExteriorForm operator+(ExteriorForm a, const ExteriorForm& b) { return a += b; }
  friend ExteriorForm operator*(ExteriorForm a, const Rational& s) { return a *= s; }
  friend ExteriorForm operator*(const Rational& s, ExteriorForm a) { return a *= s; }
  friend bool operator==(const ExteriorForm&, const ExteriorForm&) = default;

 private:
  int grade_;
  Terms terms_;
};

using DiffForm = ExteriorForm<Variance::Diff>;
using CodiffForm = ExteriorForm<Variance::Codiff>;

extern template class ExteriorForm<Variance::Diff>;
extern template class ExteriorForm<Variance::Codiff>;

/// Sorts `vertices` in place and returns the permutation sign, or 0 when a
/// vertex repeats.
int sort_with_sign(std::vector<VertexIndex>& vertices);

/// Concatenate monomials and normalize; grades add.
template <Variance V>
ExteriorForm<V> wedge(const ExteriorForm<V>& a, const ExteriorForm<V>& b);

/// d/dv on paths: sum_i (-1)^i [v == v_i] v0 ... ^v_i ... vn. Lowers grade by one.
PathVector d_partial(VertexIndex v, const PathVector& xi);
/// dv on paths: sum_i (-1)^i u0 ... u_{i-1} v u_i ... u_{n-1}. Raises grade by one.
PathVector d_insert(VertexIndex v, const PathVector& xi);

PathVector apply_diff(const DiffForm& alpha, const PathVector& xi);
PathVector apply_codiff(const CodiffForm& omega, const PathVector& xi);

/// +1 for k = 0, 1 (mod 4), -1 for k = 2, 3 (mod 4): the sign of reversing
/// k letters.
int adjoint_sign(int k) noexcept;

/// The unique form with <alpha(eta), xi> = <eta, adjoint(alpha)(xi)>.
CodiffForm adjoint(const DiffForm& alpha);
DiffForm adjoint(const CodiffForm& omega);

}  // namespace hyperdiff

#include "hyperdiff/homology.hpp"

#include "hyperdiff/error.hpp"

#include <functional>

namespace hyperdiff {

DegreeIndex degree_decompose(int m, int t) {
  if (t < 0) throw Error(ErrorKind::InvalidArgument, "t must be non-negative");
  const int step = 2 * t + 1;
  int lambda = m / step;
  int q = m % step;
  if (q < 0) {
    q += step;
    --lambda;
  }
  return {m, t, lambda, q};
}

int step_parameter(int odd_grade) {
  if (odd_grade < 1 || odd_grade % 2 == 0) {
    throw Error(ErrorKind::GradeParity,
                "a (co)boundary operator needs odd grade, got " + std::to_string(odd_grade));
  }
  return (odd_grade - 1) / 2;
}

std::vector<Hyperedge> chain_basis(const Hypergraph& h, int d) { return h.edges_of_dimension(d); }

namespace {

template <Variance V>
void require_vertices(const Hypergraph& h, const ExteriorForm<V>& form) {
  if (form.vertex_bound() > h.vertex_set().size()) {
    throw Error(ErrorKind::UnknownVertex, "operator uses a vertex outside the carrier's vertex set");
  }
}

void require_simplicial(const Hypergraph& K) {
  if (!is_simplicial(K)) {
    throw Error(ErrorKind::NotSimplicial, "homology needs a simplicial complex (closed under faces)");
  }
}

void require_cosimplicial(const Hypergraph& L) {
  if (!is_cosimplicial(L)) {
    throw Error(ErrorKind::NotCosimplicial,
                "cohomology needs a co-simplicial complex (closed under supersets)");
  }
}

void require_even(int grade) {
  if (grade % 2 != 0) {
    throw Error(ErrorKind::GradeParity, "an induced map needs an even-grade form, got " +
                                            std::to_string(grade));
  }
}

using ImageFn = std::function<PathVector(const PathVector&)>;

// Matrix of `image` from chain_basis(h, from) to chain_basis(h, to). Every
// image term must be a sorted hyperedge of h in degree `to`.
SparseMatrix operator_matrix(const Hypergraph& h, int from, int to, const ImageFn& image) {
  const auto source = chain_basis(h, from);
  const auto target = chain_basis(h, to);
  std::map<ElementaryPath, std::size_t> row_of;
  for (std::size_t i = 0; i < target.size(); ++i) row_of.emplace(ElementaryPath(target[i]), i);

  SparseMatrix m(target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    const PathVector mapped = image(as_path_vector(source[c]));
    for (const auto& [path, coeff] : mapped.terms()) {
      auto it = row_of.find(path);
      if (it == row_of.end()) {
        throw Error(ErrorKind::NotAChainMap, "operator image leaves the carrier in degree " +
                                                 std::to_string(to));
      }
      m.set(it->second, c, coeff);
    }
  }
  return m;
}

SparseMatrix boundary_unchecked(const Hypergraph& K, const DiffForm& alpha, int d) {
  return operator_matrix(K, d, d - alpha.grade(),
                         [&](const PathVector& x) { return apply_diff(alpha, x); });
}

SparseMatrix coboundary_unchecked(const Hypergraph& L, const CodiffForm& omega, int d) {
  return operator_matrix(L, d, d + omega.grade(), [&](const PathVector& x) {
    return project_sorted(apply_codiff(omega, x));
  });
}

PathVector to_chain(const std::vector<Hyperedge>& basis, const DenseVector& x) {
  PathVector out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (x[i] != 0) out += as_path_vector(basis[i], x[i]);
  }
  return out;
}

struct Computed {
  HomologyResult result;
  std::vector<DenseVector> representatives;
  /// Linearly independent columns spanning the incoming image.
  std::vector<DenseVector> image_basis;
};

// `outgoing` leaves degree d, `incoming` lands in degree d.
Computed compute(int d, const std::vector<Hyperedge>& basis, const SparseMatrix& outgoing,
                 const SparseMatrix& incoming) {
  Computed out;
  auto& r = out.result;
  r.degree = d;
  r.chain_dimension = basis.size();

  const auto kernel = kernel_basis(outgoing);
  r.boundary_rank = rank(incoming);
  if (r.boundary_rank > kernel.size()) {
    throw Error(ErrorKind::NotAChainMap, "boundaries are not cycles in degree " + std::to_string(d));
  }
  r.dimension = kernel.size() - r.boundary_rank;
  for (const auto& z : kernel) r.cycle_basis.push_back(to_chain(basis, z));

  // Greedy pivots over [image | kernel] pick image generators first, then
  // the cycles independent of them.
  std::vector<DenseVector> columns;
  for (std::size_t c = 0; c < incoming.cols(); ++c) {
    DenseVector col(basis.size(), Rational(0));
    for (const auto& [row, v] : incoming.column(c)) col[row] = v;
    columns.push_back(std::move(col));
  }
  columns.insert(columns.end(), kernel.begin(), kernel.end());
  const auto echelon = reduced_echelon(from_columns(basis.size(), columns));
  for (auto c : echelon.pivot_columns) {
    if (c < incoming.cols()) {
      out.image_basis.push_back(columns[c]);
    } else {
      out.representatives.push_back(columns[c]);
      r.representatives.push_back(r.cycle_basis[c - incoming.cols()]);
    }
  }
  if (out.image_basis.size() != r.boundary_rank || out.representatives.size() != r.dimension) {
    throw Error(ErrorKind::NotAChainMap,
                "boundaries are not cycles in degree " + std::to_string(d));
  }
  return out;
}

Computed compute_homology(const Hypergraph& K, const DiffForm& alpha, int d) {
  return compute(d, chain_basis(K, d), boundary_unchecked(K, alpha, d),
                 boundary_unchecked(K, alpha, d + alpha.grade()));
}

Computed compute_cohomology(const Hypergraph& L, const CodiffForm& omega, int d) {
  return compute(d, chain_basis(L, d), coboundary_unchecked(L, omega, d),
                 coboundary_unchecked(L, omega, d - omega.grade()));
}

InducedMap induce(const Computed& source, const Computed& target, const SparseMatrix& map, int s) {
  InducedMap out;
  out.source = source.result;
  out.target = target.result;
  out.s = s;
  const std::size_t rows = target.result.dimension;
  const std::size_t cols = source.result.dimension;
  out.matrix.assign(rows, DenseVector(cols, Rational(0)));

  std::vector<DenseVector> frame = target.image_basis;
  frame.insert(frame.end(), target.representatives.begin(), target.representatives.end());
  const auto frame_matrix = from_columns(target.result.chain_dimension, frame);
  const std::size_t offset = target.image_basis.size();

  for (std::size_t j = 0; j < cols; ++j) {
    const auto image = map.multiply(source.representatives[j]);
    const auto coords = solve(frame_matrix, image);
    if (!coords) {
      throw Error(ErrorKind::NotAChainMap, "the map sends a cycle outside the cycles");
    }
    for (std::size_t i = 0; i < rows; ++i) out.matrix[i][j] = (*coords)[offset + i];
  }
  out.rank = rank(SparseMatrix::from_dense(out.matrix, cols));
  return out;
}

}  // namespace

SparseMatrix boundary_matrix(const Hypergraph& K, const DiffForm& alpha, int d) {
  step_parameter(alpha.grade());
  require_vertices(K, alpha);
  require_simplicial(K);
  return boundary_unchecked(K, alpha, d);
}

SparseMatrix coboundary_matrix(const Hypergraph& L, const CodiffForm& omega, int d) {
  step_parameter(omega.grade());
  require_vertices(L, omega);
  require_cosimplicial(L);
  return coboundary_unchecked(L, omega, d);
}

SparseMatrix chain_map_matrix(const Hypergraph& K, const DiffForm& beta, int d) {
  require_even(beta.grade());
  require_vertices(K, beta);
  require_simplicial(K);
  return operator_matrix(K, d, d - beta.grade(),
                         [&](const PathVector& x) { return apply_diff(beta, x); });
}

SparseMatrix cochain_map_matrix(const Hypergraph& L, const CodiffForm& mu, int d) {
  require_even(mu.grade());
  require_vertices(L, mu);
  require_cosimplicial(L);
  return operator_matrix(L, d, d + mu.grade(), [&](const PathVector& x) {
    return project_sorted(apply_codiff(mu, x));
  });
}

HomologyResult betti_at_degree(const Hypergraph& K, const DiffForm& alpha, int d) {
  step_parameter(alpha.grade());
  require_vertices(K, alpha);
  require_simplicial(K);
  return compute_homology(K, alpha, d).result;
}

HomologyResult cobetti_at_degree(const Hypergraph& L, const CodiffForm& omega, int d) {
  step_parameter(omega.grade());
  require_vertices(L, omega);
  require_cosimplicial(L);
  return compute_cohomology(L, omega, d).result;
}

namespace {

int absolute_degree(int m, int n, int grade) {
  step_parameter(grade);
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be non-negative");
  return m + n * grade;
}

}  // namespace

HomologyResult homology_group(const Hypergraph& K, const DiffForm& alpha, int m, int n) {
  return betti_at_degree(K, alpha, absolute_degree(m, n, alpha.grade()));
}

HomologyResult cohomology_group(const Hypergraph& L, const CodiffForm& omega, int m, int n) {
  return cobetti_at_degree(L, omega, absolute_degree(m, n, omega.grade()));
}

InducedMap induced_map(const Hypergraph& K, const DiffForm& alpha, const DiffForm& beta, int m,
                       int n) {
  const int d = absolute_degree(m, n, alpha.grade());
  require_even(beta.grade());
  require_vertices(K, alpha);
  require_vertices(K, beta);
  require_simplicial(K);
  const int s = beta.grade() / 2;
  const auto source = compute_homology(K, alpha, d);
  const auto target = compute_homology(K, alpha, d - 2 * s);
  const auto map = operator_matrix(K, d, d - 2 * s,
                                   [&](const PathVector& x) { return apply_diff(beta, x); });
  return induce(source, target, map, s);
}

InducedMap induced_comap(const Hypergraph& L, const CodiffForm& omega, const CodiffForm& mu, int m,
                         int n) {
  const int d = absolute_degree(m, n, omega.grade());
  require_even(mu.grade());
  require_vertices(L, omega);
  require_vertices(L, mu);
  require_cosimplicial(L);
  const int s = mu.grade() / 2;
  const auto source = compute_cohomology(L, omega, d);
  const auto target = compute_cohomology(L, omega, d + 2 * s);
  const auto map = operator_matrix(L, d, d + 2 * s, [&](const PathVector& x) {
    return project_sorted(apply_codiff(mu, x));
  });
  return induce(source, target, map, s);
}

GradedComplex build_chain_complex(const Hypergraph& K, const DiffForm& alpha) {
  step_parameter(alpha.grade());
  require_vertices(K, alpha);
  require_simplicial(K);
  GradedComplex out{K, Side::Homology, alpha.grade(), {}, {}};
  for (int d = 0; d <= K.top_dimension(); ++d) {
    out.bases.emplace(d, chain_basis(K, d));
    out.matrices.emplace(d, boundary_unchecked(K, alpha, d));
  }
  return out;
}

GradedComplex build_cochain_complex(const Hypergraph& L, const CodiffForm& omega) {
  step_parameter(omega.grade());
  require_vertices(L, omega);
  require_cosimplicial(L);
  GradedComplex out{L, Side::Cohomology, omega.grade(), {}, {}};
  for (int d = 0; d <= L.top_dimension(); ++d) {
    out.bases.emplace(d, chain_basis(L, d));
    out.matrices.emplace(d, coboundary_unchecked(L, omega, d));
  }
  return out;
}

}  // namespace hyperdiff

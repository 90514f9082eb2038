#pragma once

#include "hyperdiff/calculus.hpp"
#include "hyperdiff/hypergraph.hpp"
#include "hyperdiff/linalg.hpp"
#include "hyperdiff/paths.hpp"

#include <map>
#include <vector>

namespace hyperdiff {

/// m = lambda * (2t + 1) + q with 0 <= q <= 2t.
struct DegreeIndex {
  int m = 0;
  int t = 0;
  int lambda = 0;
  int q = 0;
};

/// Euclidean split with floor division, so m = -1, t = 1 gives (-1, 2).
DegreeIndex degree_decompose(int m, int t);

/// Odd grade k = 2t + 1 -> t. Throws GradeParity for even k.
int step_parameter(int odd_grade);

/// Dimension-d hyperedges of h in lexicographic order; empty for d < 0.
std::vector<Hyperedge> chain_basis(const Hypergraph& h, int d);

/// Matrix of alpha from chain_basis(K, d) to chain_basis(K, d - grade).
/// Throws NotSimplicial, GradeParity (even alpha), UnknownVertex.
SparseMatrix boundary_matrix(const Hypergraph& K, const DiffForm& alpha, int d);

/// Matrix of project_sorted(omega(.)) from chain_basis(L, d) to
/// chain_basis(L, d + grade). Throws NotCosimplicial, GradeParity.
SparseMatrix coboundary_matrix(const Hypergraph& L, const CodiffForm& omega, int d);

/// Matrix of an even form beta from degree d to d - grade on a simplicial K.
SparseMatrix chain_map_matrix(const Hypergraph& K, const DiffForm& beta, int d);
/// Matrix of project_sorted(mu(.)) from degree d to d + grade on a
/// co-simplicial L.
SparseMatrix cochain_map_matrix(const Hypergraph& L, const CodiffForm& mu, int d);

/// (Co)homology at one absolute degree.
struct HomologyResult {
  int degree = 0;
  std::size_t chain_dimension = 0;
  /// dim ker - boundary_rank.
  std::size_t dimension = 0;
  /// Kernel basis, as combinations of sorted hyperedges.
  std::vector<PathVector> cycle_basis;
  /// Rank of the incoming (co)boundary.
  std::size_t boundary_rank = 0;
  /// Cycles whose classes form a basis of the quotient; a subset of cycle_basis.
  std::vector<PathVector> representatives;
};

HomologyResult betti_at_degree(const Hypergraph& K, const DiffForm& alpha, int d);
HomologyResult cobetti_at_degree(const Hypergraph& L, const CodiffForm& omega, int d);

/// H_n(K, alpha, m): homology at absolute degree m + n * grade(alpha).
/// Throws InvalidArgument for n < 0.
HomologyResult homology_group(const Hypergraph& K, const DiffForm& alpha, int m, int n);
/// H^n(L, omega, m): cohomology at absolute degree m + n * grade(omega).
HomologyResult cohomology_group(const Hypergraph& L, const CodiffForm& omega, int m, int n);

/// Homomorphism induced on (co)homology by an even-grade form.
struct InducedMap {
  HomologyResult source;
  HomologyResult target;
  int s = 0;
  /// target.dimension rows by source.dimension columns, in the
  /// representative bases.
  DenseMatrix matrix;
  std::size_t rank = 0;
};

/// beta_*: H_n(K, alpha, m) -> H_n(K, alpha, m - 2s), beta in T_{2s}.
/// Throws GradeParity for odd beta; NotAChainMap if beta fails to map a
/// cycle into a cycle.
InducedMap induced_map(const Hypergraph& K, const DiffForm& alpha, const DiffForm& beta, int m,
                       int n);
/// mu_*: H^n(L, omega, m) -> H^n(L, omega, m + 2s), mu in T^{2s}.
InducedMap induced_comap(const Hypergraph& L, const CodiffForm& omega, const CodiffForm& mu,
                         int m, int n);

enum class Side { Homology, Cohomology };

/// All chain groups and (co)boundary matrices of a carrier for one odd
/// operator, over every degree that has a nonempty basis.
struct GradedComplex {
  Hypergraph carrier;
  Side side = Side::Homology;
  int operator_grade = 1;
  std::map<int, std::vector<Hyperedge>> bases;
  /// Keyed by source degree.
  std::map<int, SparseMatrix> matrices;
};

GradedComplex build_chain_complex(const Hypergraph& K, const DiffForm& alpha);
GradedComplex build_cochain_complex(const Hypergraph& L, const CodiffForm& omega);

}  // namespace hyperdiff

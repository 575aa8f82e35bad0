#pragma once

// Matrix realizations of u(m)/su(m): operator bases, the Killing metric,
// the mixed tensor representation and its Casimir element.
//
// Vectorization is row-major: vect(X Y Z) = (X (x) Z^T) vect(Y). Complex
// conjugation is entrywise in the computational basis.

#include <Eigen/Sparse>
#include <string>
#include <string_view>
#include <vector>

#include "slh/linalg.hpp"

namespace slh::lie {

using SparseMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

enum class BasisKind { pauli_pair, gell_mann, custom };

std::string_view to_string(BasisKind kind);
BasisKind basis_kind_from_string(std::string_view name);

struct OperatorBasis {
  int dim = 0;                    // m, the carrier dimension
  std::vector<CMatrix> elements;  // anti-Hermitian m x m
  BasisKind kind = BasisKind::custom;
  bool includes_identity = false;

  std::size_t size() const { return elements.size(); }
};

/// pauli_pair: m = 4, the 15 elements -i sigma_a (x) sigma_b, (a,b) != (0,0),
/// in lexicographic order, each with Tr(A^dagger A) = 4.
/// gell_mann: -i lambda_j for the generalized Gell-Mann matrices, Tr(A^dagger A) = 2.
/// With include_identity the direction -i*1 is appended (normalized like the rest).
OperatorBasis build_basis(BasisKind kind, int m, bool include_identity = false);

/// Wraps user matrices; each must be anti-Hermitian to 1e-12.
OperatorBasis custom_basis(std::vector<CMatrix> elements);

/// Copy of the basis rescaled so that every element has Tr(A^dagger A) = norm_sq.
OperatorBasis normalized(const OperatorBasis& basis, double norm_sq);

/// The 2x2 Pauli matrices sigma_0..sigma_3.
const CMatrix& pauli(int index);

struct KillingMetric {
  RMatrix matrix;  // kappa_{mu nu} = -2m Tr(A_mu^dagger A_nu)
  int scale = 0;   // m
};

/// Throws InvalidArgument if an element is not traceless.
KillingMetric killing_metric(const OperatorBasis& basis);

/// Real-linear combinations B_r of the basis with
///   sum_{mu nu} kappa^{-1}_{mu nu} X_mu (x) X_nu = -sum_r B_r (x) B_r,
/// from the Cholesky factor of -kappa^{-1}.
std::vector<CMatrix> casimir_factors(const OperatorBasis& basis);

struct Superoperator {
  CMatrix matrix;
  int k = 1;
  Index carrier_dim = 0;  // D, so matrix is D^{2k} x D^{2k}

  Index rows() const { return matrix.rows(); }
};

inline constexpr Index kDefaultMaxRows = Index{1} << 14;

/// Rows of a k-fold superoperator on a D-dimensional carrier; throws
/// GuardError above max_rows.
Index superop_rows(Index carrier_dim, int k, Index max_rows = kDefaultMaxRows);

/// pi_{k,k}(X): sum of k insertions of X on the first k slots and k
/// insertions of conj(X) on the last k slots.
SparseMatrix pi_kk_algebra_sparse(const CMatrix& x, int k, Index max_rows = kDefaultMaxRows);
Superoperator pi_kk_algebra(const CMatrix& x, int k, Index max_rows = kDefaultMaxRows);

/// U^{(x)k} (x) conj(U)^{(x)k}. Throws InvalidArgument if U is not unitary to 1e-10.
Superoperator pi_kk_group(const CMatrix& u, int k, Index max_rows = kDefaultMaxRows);

/// sum kappa^{-1}_{mu nu} pi(A_mu) pi(A_nu) as a sparse matrix, built from
/// casimir_factors. Positive semidefinite.
SparseMatrix casimir_sparse(const OperatorBasis& basis, int k, Index max_rows = kDefaultMaxRows);
Superoperator casimir_matrix(const OperatorBasis& basis, int k, Index max_rows = kDefaultMaxRows);

}  // namespace slh::lie

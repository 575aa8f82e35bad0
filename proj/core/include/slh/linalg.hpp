#pragma once

// Dense linear algebra shared by every module. Everything here works on
// Eigen's dynamic complex matrices.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace slh {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr Complex kI{0.0, 1.0};

namespace linalg {

/// Largest entry of |M - M^dagger|.
double hermiticity_error(const CMatrix& m);
/// Largest entry of |M + M^dagger|.
double antihermiticity_error(const CMatrix& m);
/// Largest entry of |U^dagger U - 1|.
double unitarity_error(const CMatrix& u);

/// Integer power with overflow check. Throws GuardError on overflow.
std::int64_t ipow(std::int64_t base, int exp);

/// Index sets of the connected components of the nonzero pattern of a
/// square matrix (entries with |m_ij| > tol couple i and j). A Hermitian
/// matrix is block diagonal with respect to these sets up to a permutation.
std::vector<std::vector<Index>> coupled_blocks(const CMatrix& m, double tol = 0.0);

struct HermitianEigen {
  RVector values;   // ascending
  CMatrix vectors;  // columns, same order as values
};

/// Eigenvalues of a Hermitian matrix in ascending order. Diagonalizes each
/// coupled block separately.
RVector eigvalsh(const CMatrix& h);
/// Full eigendecomposition of a Hermitian matrix, block by block.
HermitianEigen eigh(const CMatrix& h);

/// exp(t * H) for Hermitian H and complex t.
CMatrix expm_hermitian(const CMatrix& h, Complex t);
/// exp(t * X) for anti-Hermitian X and real t; the result is unitary.
CMatrix expm_antihermitian(const CMatrix& x, double t);
/// exp(M) for a general square matrix (Pade scaling and squaring).
CMatrix expm(const CMatrix& m);

/// Dense SVD is used up to this many rows; power iteration above.
inline constexpr Index kDenseSvdLimit = 1024;

/// Singular values in descending order.
RVector singular_values(const CMatrix& m);
/// Largest singular value (operator norm).
double spectral_norm(const CMatrix& m, double tol = 1e-9, int max_iter = 10000);
/// Sum of singular values.
double trace_norm(const CMatrix& m);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Lifts an operator acting on the listed subsystems (in the given order)
/// of `n` subsystems of dimension `d` to the full d^n space.
CMatrix embed(const CMatrix& op, std::span<const int> sites, int n, int d);

/// Reduced operator on the listed subsystems (indices into dims, any order;
/// the result keeps the original subsystem order).
CMatrix partial_trace(const CMatrix& rho, std::span<const int> dims, std::span<const int> keep);

/// Orthonormal basis of the column span of `v` (rank decided by `rel_tol`
/// relative to the largest singular value).
CMatrix orthonormal_range(const CMatrix& v, double rel_tol = 1e-10);

/// sin of the largest principal angle between two subspaces given by
/// orthonormal column bases. Returns 1 if the dimensions differ.
double max_principal_angle_sine(const CMatrix& q1, const CMatrix& q2);

/// Sorted values grouped into clusters whose members lie within `tol` of the
/// previous member. Returns (representative, count) pairs.
std::vector<std::pair<double, int>> cluster_values(const RVector& sorted_values, double tol);

}  // namespace linalg
}  // namespace slh

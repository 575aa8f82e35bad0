#include <gtest/gtest.h>

#include <random>

#include "slh/errors.hpp"
#include "slh/lie_basis.hpp"
#include "slh/rep_theory.hpp"
#include "test_support.hpp"

using namespace slh;
using slh::testing::haar_unitary;
using slh::testing::random_traceless_antihermitian;

namespace {

// Predicted spectrum of C(pi_kk) on C^m: c2 -> mult * dim, as doubles.
std::vector<std::pair<double, long>> predicted_casimir(int k, int m) {
  const auto report = rep::casimir_spectrum_report(k, m);
  std::vector<std::pair<double, long>> out;
  for (const auto& [c2, mult] : report.eigenvalues) {
    out.emplace_back(static_cast<double>(c2), static_cast<long>(mult));
  }
  return out;
}

void expect_spectrum(const RVector& values, const std::vector<std::pair<double, long>>& expected, double scale = 1.0) {
  const auto clusters = linalg::cluster_values(values, 1e-8);
  ASSERT_EQ(clusters.size(), expected.size());
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    EXPECT_NEAR(clusters[i].first, scale * expected[i].first, 1e-8);
    EXPECT_EQ(clusters[i].second, expected[i].second);
  }
}

}  // namespace

TEST(Basis, PauliPair) {
  const auto b = lie::build_basis(lie::BasisKind::pauli_pair, 4);
  ASSERT_EQ(b.size(), 15u);
  for (const auto& e : b.elements) {
    EXPECT_LT(linalg::antihermiticity_error(e), 1e-15);
    EXPECT_NEAR((e.adjoint() * e).trace().real(), 4.0, 1e-14);
  }
  // lexicographic: first element is -i sigma_0 (x) sigma_1
  EXPECT_LT((b.elements[0] - Complex(0, -1) * linalg::kron(lie::pauli(0), lie::pauli(1))).norm(), 1e-15);
  EXPECT_LT((b.elements[14] - Complex(0, -1) * linalg::kron(lie::pauli(3), lie::pauli(3))).norm(), 1e-15);
  EXPECT_THROW(lie::build_basis(lie::BasisKind::pauli_pair, 3), InvalidArgument);
  EXPECT_EQ(lie::build_basis(lie::BasisKind::pauli_pair, 4, true).size(), 16u);
}

TEST(Basis, GellMannTwoIsPauli) {
  const auto b = lie::build_basis(lie::BasisKind::gell_mann, 2);
  ASSERT_EQ(b.size(), 3u);
  for (int j = 1; j <= 3; ++j) {
    const CMatrix target = Complex(0, -1) * lie::pauli(j);
    bool found = false;
    for (const auto& e : b.elements) found = found || (e - target).norm() < 1e-14;
    EXPECT_TRUE(found) << "sigma_" << j;
  }
  for (int m = 2; m <= 5; ++m) {
    const auto g = lie::build_basis(lie::BasisKind::gell_mann, m);
    EXPECT_EQ(static_cast<int>(g.size()), m * m - 1);
    for (const auto& e : g.elements) EXPECT_LT(linalg::antihermiticity_error(e), 1e-15);
  }
}

TEST(Basis, CustomRejectsHermitian) {
  EXPECT_THROW(lie::custom_basis({lie::pauli(1)}), InvalidArgument);
  EXPECT_THROW(lie::basis_kind_from_string("spin"), InvalidArgument);
}

TEST(Killing, PauliPairAndGellMann) {
  const auto k = lie::killing_metric(lie::build_basis(lie::BasisKind::pauli_pair, 4));
  EXPECT_EQ(k.scale, 4);
  EXPECT_LT((k.matrix + 32.0 * RMatrix::Identity(15, 15)).cwiseAbs().maxCoeff(), 1e-12);
  const auto g = lie::normalized(lie::build_basis(lie::BasisKind::gell_mann, 2), 1.0);
  EXPECT_LT((lie::killing_metric(g).matrix + 4.0 * RMatrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Killing, RandomCustomBasisIsNegativeDefinite) {
  std::mt19937_64 rng(41);
  std::vector<CMatrix> els;
  for (int i = 0; i < 8; ++i) els.push_back(random_traceless_antihermitian(3, rng));
  const auto k = lie::killing_metric(lie::custom_basis(els));
  EXPECT_LT((k.matrix - k.matrix.transpose()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT(Eigen::SelfAdjointEigenSolver<RMatrix>(k.matrix).eigenvalues().maxCoeff(), 0.0);
}

TEST(Killing, IdentityDirectionRejected) {
  EXPECT_THROW(lie::killing_metric(lie::build_basis(lie::BasisKind::gell_mann, 3, true)), InvalidArgument);
}

TEST(PiKK, SingleCopyIsCommutatorForm) {
  std::mt19937_64 rng(43);
  const CMatrix x = random_traceless_antihermitian(3, rng);
  const CMatrix id = CMatrix::Identity(3, 3);
  const CMatrix expected = linalg::kron(x, id) + linalg::kron(id, x.conjugate());
  EXPECT_LT((lie::pi_kk_algebra(x, 1).matrix - expected).cwiseAbs().maxCoeff(), 1e-15);
  // acting on vect(Y) gives vect([X, Y]) for anti-Hermitian X
  const CMatrix y = slh::testing::random_hermitian(3, rng);
  const CVector lhs = lie::pi_kk_algebra(x, 1).matrix * slh::testing::vect(y);
  EXPECT_LT((lhs - slh::testing::vect(x * y - y * x)).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(PiKK, ZeroAndTrace) {
  EXPECT_EQ(lie::pi_kk_algebra(CMatrix::Zero(2, 2), 2).matrix.norm(), 0.0);
  std::mt19937_64 rng(44);
  const CMatrix x = random_traceless_antihermitian(2, rng);
  EXPECT_LT(std::abs(lie::pi_kk_algebra(x, 3).matrix.trace()), 1e-12);
}

TEST(PiKK, IdentityDirectionIsNull) {
  for (int k = 1; k <= 3; ++k) {
    const CMatrix phase = Complex(0, -1) * CMatrix::Identity(2, 2);
    EXPECT_LT(lie::pi_kk_algebra(phase, k).matrix.cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(PiKK, GroupMatchesExponentialOfAlgebra) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 3; ++trial) {
    const CMatrix x = random_traceless_antihermitian(4, rng);
    const CMatrix u = linalg::expm_antihermitian(x, 1.0);
    const CMatrix lhs = lie::pi_kk_group(u, 2).matrix;
    const CMatrix rhs = linalg::expm_antihermitian(lie::pi_kk_algebra(x, 2).matrix, 1.0);
    EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(PiKK, GroupOnStates) {
  std::mt19937_64 rng(48);
  const CMatrix u = haar_unitary(3, rng);
  const CMatrix rho = slh::testing::random_hermitian(3, rng);
  const CVector out = lie::pi_kk_group(u, 1).matrix * slh::testing::vect(rho);
  EXPECT_LT((out - slh::testing::vect(u * rho * u.adjoint())).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_LT((lie::pi_kk_group(CMatrix::Identity(2, 2), 2).matrix - CMatrix::Identity(16, 16)).norm(), 1e-15);
  EXPECT_THROW(lie::pi_kk_group(2.0 * CMatrix::Identity(2, 2), 1), InvalidArgument);
}

TEST(PiKK, Guard) {
  EXPECT_THROW(lie::pi_kk_algebra(CMatrix::Zero(4, 4), 4), GuardError);
  EXPECT_NO_THROW(lie::superop_rows(4, 4, Index{1} << 16));
}

TEST(Casimir, PauliPairSpectraMatchRepTheory) {
  const auto basis = lie::build_basis(lie::BasisKind::pauli_pair, 4);
  for (int k = 1; k <= 2; ++k) {
    const auto c = lie::casimir_matrix(basis, k);
    EXPECT_LT(linalg::hermiticity_error(c.matrix), 1e-12);
    expect_spectrum(linalg::eigvalsh(c.matrix), predicted_casimir(k, 4));
  }
}

TEST(Casimir, TwoCopyPauliPairSpectrumExplicit) {
  const auto c = lie::casimir_matrix(lie::build_basis(lie::BasisKind::pauli_pair, 4), 2);
  expect_spectrum(linalg::eigvalsh(c.matrix), {{0.0, 2}, {1.0, 60}, {1.5, 20}, {2.0, 90}, {2.5, 84}});
}

TEST(Casimir, BasisIndependence) {
  const auto pp = lie::casimir_matrix(lie::build_basis(lie::BasisKind::pauli_pair, 4), 2);
  const auto gm = lie::casimir_matrix(lie::build_basis(lie::BasisKind::gell_mann, 4), 2);
  EXPECT_LT((pp.matrix - gm.matrix).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LT((linalg::eigvalsh(pp.matrix) - linalg::eigvalsh(gm.matrix)).cwiseAbs().maxCoeff(), 1e-10);
  // the Casimir does not depend on the normalization of the basis either
  const auto scaled = lie::casimir_matrix(lie::normalized(lie::build_basis(lie::BasisKind::gell_mann, 4), 7.0), 2);
  EXPECT_LT((pp.matrix - scaled.matrix).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Casimir, OtherCarriers) {
  for (int m : {2, 3}) {
    const auto basis = lie::build_basis(lie::BasisKind::gell_mann, m);
    for (int k = 1; k <= 2; ++k) {
      expect_spectrum(linalg::eigvalsh(lie::casimir_matrix(basis, k).matrix), predicted_casimir(k, m));
    }
  }
  expect_spectrum(linalg::eigvalsh(lie::casimir_matrix(lie::build_basis(lie::BasisKind::gell_mann, 2), 3).matrix),
                  predicted_casimir(3, 2));
}

TEST(Casimir, CommutesWithGroupAction) {
  std::mt19937_64 rng(53);
  const auto basis = lie::build_basis(lie::BasisKind::pauli_pair, 4);
  for (int k = 1; k <= 2; ++k) {
    const CMatrix c = lie::casimir_matrix(basis, k).matrix;
    for (int t = 0; t < 20; ++t) {
      const CMatrix p = lie::pi_kk_group(haar_unitary(4, rng), k).matrix;
      EXPECT_LT((c * p - p * c).cwiseAbs().maxCoeff(), 1e-8);
    }
  }
}

TEST(Casimir, SmallestPositiveEigenvalueIsOne) {
  const auto basis = lie::build_basis(lie::BasisKind::gell_mann, 2);
  for (int k = 1; k <= 3; ++k) {
    const RVector ev = linalg::eigvalsh(lie::casimir_matrix(basis, k).matrix);
    double smallest = 1e300;
    for (double v : ev)
      if (v > 1e-8) smallest = std::min(smallest, v);
    EXPECT_NEAR(smallest, 1.0, 1e-10) << "k=" << k;
  }
}

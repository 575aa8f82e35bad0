#include "slh/lie_basis.hpp"

#include <array>
#include <cmath>
#include <unsupported/Eigen/KroneckerProduct>

#include "slh/errors.hpp"

namespace slh::lie {

std::string_view to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::pauli_pair: return "pauli_pair";
    case BasisKind::gell_mann: return "gell_mann";
    case BasisKind::custom: return "custom";
  }
  return "custom";
}

BasisKind basis_kind_from_string(std::string_view name) {
  if (name == "pauli_pair") return BasisKind::pauli_pair;
  if (name == "gell_mann") return BasisKind::gell_mann;
  if (name == "custom") return BasisKind::custom;
  throw InvalidArgument("unknown basis kind '" + std::string(name) + "'");
}

const CMatrix& pauli(int index) {
  static const std::array<CMatrix, 4> table = [] {
    std::array<CMatrix, 4> p;
    for (auto& m : p) m = CMatrix::Zero(2, 2);
    p[0] << 1, 0, 0, 1;
    p[1] << 0, 1, 1, 0;
    p[2] << 0, Complex(0, -1), Complex(0, 1), 0;
    p[3] << 1, 0, 0, -1;
    return p;
  }();
  if (index < 0 || index > 3) throw InvalidArgument("Pauli index must be in 0..3");
  return table[static_cast<std::size_t>(index)];
}

namespace {

void append_identity(OperatorBasis& b, double norm_sq) {
  const double c = std::sqrt(norm_sq / b.dim);
  b.elements.push_back(Complex(0, -c) * CMatrix::Identity(b.dim, b.dim));
  b.includes_identity = true;
}

}  // namespace

OperatorBasis build_basis(BasisKind kind, int m, bool include_identity) {
  OperatorBasis b;
  b.dim = m;
  b.kind = kind;
  switch (kind) {
    case BasisKind::pauli_pair: {
      if (m != 4) throw InvalidArgument("pauli_pair basis needs m = 4 (two qubits)");
      for (int a = 0; a < 4; ++a) {
        for (int c = 0; c < 4; ++c) {
          if (a == 0 && c == 0) continue;
          b.elements.push_back(Complex(0, -1) * linalg::kron(pauli(a), pauli(c)));
        }
      }
      if (include_identity) append_identity(b, 4.0);
      return b;
    }
    case BasisKind::gell_mann: {
      if (m < 2) throw InvalidArgument("gell_mann basis needs m >= 2");
      for (int j = 0; j < m; ++j) {
        for (int k = j + 1; k < m; ++k) {
          CMatrix s = CMatrix::Zero(m, m);
          s(j, k) = s(k, j) = 1.0;
          b.elements.push_back(Complex(0, -1) * s);
          CMatrix t = CMatrix::Zero(m, m);
          t(j, k) = Complex(0, -1);
          t(k, j) = Complex(0, 1);
          b.elements.push_back(Complex(0, -1) * t);
        }
      }
      for (int l = 1; l < m; ++l) {
        CMatrix h = CMatrix::Zero(m, m);
        const double c = std::sqrt(2.0 / (l * (l + 1.0)));
        for (int j = 0; j < l; ++j) h(j, j) = c;
        h(l, l) = -c * l;
        b.elements.push_back(Complex(0, -1) * h);
      }
      if (include_identity) append_identity(b, 2.0);
      return b;
    }
    case BasisKind::custom:
      throw InvalidArgument("custom bases are built with custom_basis()");
  }
  throw InvalidArgument("unsupported basis kind");
}

OperatorBasis custom_basis(std::vector<CMatrix> elements) {
  if (elements.empty()) throw InvalidArgument("custom basis is empty");
  OperatorBasis b;
  b.dim = static_cast<int>(elements.front().rows());
  b.kind = BasisKind::custom;
  for (const auto& e : elements) {
    if (e.rows() != b.dim || e.cols() != b.dim) throw InvalidArgument("custom basis elements differ in size");
    if (linalg::antihermiticity_error(e) > 1e-12) throw InvalidArgument("custom basis element is not anti-Hermitian");
  }
  b.elements = std::move(elements);
  return b;
}

OperatorBasis normalized(const OperatorBasis& basis, double norm_sq) {
  if (!(norm_sq > 0)) throw InvalidArgument("normalization must be positive");
  OperatorBasis out = basis;
  for (auto& e : out.elements) {
    const double current = e.squaredNorm();
    if (current == 0.0) throw InvalidArgument("cannot normalize a zero basis element");
    e *= std::sqrt(norm_sq / current);
  }
  return out;
}

KillingMetric killing_metric(const OperatorBasis& basis) {
  const Index r = static_cast<Index>(basis.size());
  const double tol = 1e-12;
  for (const auto& e : basis.elements) {
    if (std::abs(e.trace()) > tol * std::max(1.0, e.norm())) {
      throw InvalidArgument("Killing metric needs a traceless basis");
    }
  }
  KillingMetric km{RMatrix(r, r), basis.dim};
  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j <= i; ++j) {
      const double g = (basis.elements[i].adjoint() * basis.elements[j]).trace().real();
      km.matrix(i, j) = km.matrix(j, i) = -2.0 * basis.dim * g;
    }
  }
  return km;
}

std::vector<CMatrix> casimir_factors(const OperatorBasis& basis) {
  const KillingMetric km = killing_metric(basis);
  const RMatrix neg_inverse = -km.matrix.inverse();
  Eigen::LLT<RMatrix> llt(neg_inverse);
  if (llt.info() != Eigen::Success) throw NumericalError("Killing metric is not negative definite");
  const RMatrix l = llt.matrixL();
  std::vector<CMatrix> factors;
  factors.reserve(basis.size());
  for (Index r = 0; r < l.cols(); ++r) {
    CMatrix b = CMatrix::Zero(basis.dim, basis.dim);
    for (Index mu = r; mu < l.rows(); ++mu) b += l(mu, r) * basis.elements[mu];
    factors.push_back(std::move(b));
  }
  return factors;
}

Index superop_rows(Index carrier_dim, int k, Index max_rows) {
  if (carrier_dim < 1) throw InvalidArgument("carrier dimension must be positive");
  if (k < 1) throw InvalidArgument("tensor power k must be >= 1");
  Index rows = 1;
  for (int i = 0; i < 2 * k; ++i) {
    if (rows > max_rows / carrier_dim) {
      throw GuardError("superoperator with D=" + std::to_string(carrier_dim) + ", k=" + std::to_string(k) +
                       " exceeds the row limit " + std::to_string(max_rows));
    }
    rows *= carrier_dim;
  }
  if (rows > max_rows) throw GuardError("superoperator exceeds the row limit " + std::to_string(max_rows));
  return rows;
}

SparseMatrix pi_kk_algebra_sparse(const CMatrix& x, int k, Index max_rows) {
  if (x.rows() != x.cols()) throw InvalidArgument("pi_kk: matrix not square");
  const Index m = x.rows();
  const Index rows = superop_rows(m, k, max_rows);
  std::vector<std::pair<std::pair<Index, Index>, Complex>> nz;
  for (Index a = 0; a < m; ++a) {
    for (Index b = 0; b < m; ++b) {
      if (x(a, b) != Complex(0.0, 0.0)) nz.push_back({{a, b}, x(a, b)});
    }
  }
  std::vector<Eigen::Triplet<Complex>> trips;
  trips.reserve(static_cast<std::size_t>(2 * k) * static_cast<std::size_t>(rows / m) * nz.size());
  Index right = rows / m;
  Index left = 1;
  for (int slot = 0; slot < 2 * k; ++slot) {
    const bool conj = slot >= k;
    for (Index l = 0; l < left; ++l) {
      for (const auto& [ab, v] : nz) {
        const Complex val = conj ? std::conj(v) : v;
        const Index r0 = (l * m + ab.first) * right;
        const Index c0 = (l * m + ab.second) * right;
        for (Index r = 0; r < right; ++r) trips.emplace_back(r0 + r, c0 + r, val);
      }
    }
    left *= m;
    right /= m;
  }
  SparseMatrix out(rows, rows);
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

Superoperator pi_kk_algebra(const CMatrix& x, int k, Index max_rows) {
  return Superoperator{CMatrix(pi_kk_algebra_sparse(x, k, max_rows)), k, x.rows()};
}

Superoperator pi_kk_group(const CMatrix& u, int k, Index max_rows) {
  if (u.rows() != u.cols()) throw InvalidArgument("pi_kk_group: matrix not square");
  if (linalg::unitarity_error(u) > 1e-10) throw InvalidArgument("pi_kk_group: matrix is not unitary");
  superop_rows(u.rows(), k, max_rows);
  const CMatrix ubar = u.conjugate();
  CMatrix out = u;
  for (int i = 1; i < k; ++i) out = linalg::kron(out, u);
  for (int i = 0; i < k; ++i) out = linalg::kron(out, ubar);
  return Superoperator{std::move(out), k, u.rows()};
}

SparseMatrix casimir_sparse(const OperatorBasis& basis, int k, Index max_rows) {
  const Index rows = superop_rows(basis.dim, k, max_rows);
  SparseMatrix c(rows, rows);
  for (const auto& b : casimir_factors(basis)) {
    const SparseMatrix p = pi_kk_algebra_sparse(b, k, max_rows);
    c -= SparseMatrix(p * p);
  }
  c.prune([](Index, Index, const Complex& v) { return std::abs(v) > 1e-13; });
  return c;
}

Superoperator casimir_matrix(const OperatorBasis& basis, int k, Index max_rows) {
  return Superoperator{CMatrix(casimir_sparse(basis, k, max_rows)), k, basis.dim};
}

}  // namespace slh::lie

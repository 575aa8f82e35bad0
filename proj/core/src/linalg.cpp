#include "slh/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "slh/errors.hpp"

namespace slh::linalg {

double hermiticity_error(const CMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("hermiticity_error: matrix not square");
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double antihermiticity_error(const CMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("antihermiticity_error: matrix not square");
  if (m.size() == 0) return 0.0;
  return (m + m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_error(const CMatrix& u) {
  if (u.rows() != u.cols()) throw InvalidArgument("unitarity_error: matrix not square");
  if (u.size() == 0) return 0.0;
  return (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

std::int64_t ipow(std::int64_t base, int exp) {
  if (exp < 0) throw InvalidArgument("ipow: negative exponent");
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::int64_t>::max() / base) {
      throw GuardError("integer overflow computing " + std::to_string(base) + "^" + std::to_string(exp));
    }
    r *= base;
  }
  return r;
}

namespace {

struct DisjointSets {
  explicit DisjointSets(Index n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), Index{0});
  }
  Index find(Index x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<Index> parent;
};

}  // namespace

std::vector<std::vector<Index>> coupled_blocks(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw InvalidArgument("coupled_blocks: matrix not square");
  const Index n = m.rows();
  DisjointSets sets(n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < j; ++i) {
      if (std::abs(m(i, j)) > tol || std::abs(m(j, i)) > tol) sets.unite(i, j);
    }
  }
  std::vector<std::vector<Index>> blocks;
  std::vector<Index> slot(static_cast<std::size_t>(n), -1);
  for (Index i = 0; i < n; ++i) {
    const Index root = sets.find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<Index>(blocks.size());
      blocks.emplace_back();
    }
    blocks[slot[root]].push_back(i);
  }
  return blocks;
}

RVector eigvalsh(const CMatrix& h) {
  const auto blocks = coupled_blocks(h);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(h.rows()));
  for (const auto& idx : blocks) {
    if (idx.size() == 1) {
      values.push_back(h(idx[0], idx[0]).real());
      continue;
    }
    const CMatrix sub = h(idx, idx);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(sub, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalError("eigvalsh: eigensolver did not converge");
    for (Index i = 0; i < es.eigenvalues().size(); ++i) values.push_back(es.eigenvalues()(i));
  }
  std::sort(values.begin(), values.end());
  return Eigen::Map<RVector>(values.data(), static_cast<Index>(values.size()));
}

HermitianEigen eigh(const CMatrix& h) {
  const Index n = h.rows();
  const auto blocks = coupled_blocks(h);
  RVector values(n);
  CMatrix vectors = CMatrix::Zero(n, n);
  Index col = 0;
  for (const auto& idx : blocks) {
    if (idx.size() == 1) {
      values(col) = h(idx[0], idx[0]).real();
      vectors(idx[0], col) = 1.0;
      ++col;
      continue;
    }
    const CMatrix sub = h(idx, idx);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(sub);
    if (es.info() != Eigen::Success) throw NumericalError("eigh: eigensolver did not converge");
    for (Index c = 0; c < es.eigenvalues().size(); ++c, ++col) {
      values(col) = es.eigenvalues()(c);
      for (std::size_t r = 0; r < idx.size(); ++r) vectors(idx[r], col) = es.eigenvectors()(static_cast<Index>(r), c);
    }
  }
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return values(a) < values(b); });
  HermitianEigen out{RVector(n), CMatrix(n, n)};
  for (Index i = 0; i < n; ++i) {
    out.values(i) = values(order[i]);
    out.vectors.col(i) = vectors.col(order[i]);
  }
  return out;
}

CMatrix expm_hermitian(const CMatrix& h, Complex t) {
  const Index n = h.rows();
  CMatrix out = CMatrix::Zero(n, n);
  for (const auto& idx : coupled_blocks(h)) {
    if (idx.size() == 1) {
      out(idx[0], idx[0]) = std::exp(t * h(idx[0], idx[0]).real());
      continue;
    }
    const CMatrix sub = h(idx, idx);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(sub);
    if (es.info() != Eigen::Success) throw NumericalError("expm_hermitian: eigensolver did not converge");
    CVector phases(es.eigenvalues().size());
    for (Index i = 0; i < phases.size(); ++i) phases(i) = std::exp(t * es.eigenvalues()(i));
    const CMatrix block = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    out(idx, idx) = block;
  }
  return out;
}

CMatrix expm_antihermitian(const CMatrix& x, double t) {
  // x = -iH with H = ix Hermitian, so exp(t x) = exp(-i t H).
  const CMatrix h = kI * x;
  return expm_hermitian(0.5 * (h + h.adjoint()), Complex(0.0, -t));
}

CMatrix expm(const CMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("expm: matrix not square");
  return m.exp();
}

RVector singular_values(const CMatrix& m) {
  if (m.size() == 0) return RVector();
  if (std::max(m.rows(), m.cols()) <= 64) {
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues();
  }
  Eigen::BDCSVD<CMatrix> svd(m);
  return svd.singularValues();
}

double spectral_norm(const CMatrix& m, double tol, int max_iter) {
  if (m.size() == 0) return 0.0;
  if (m.rows() <= kDenseSvdLimit && m.cols() <= kDenseSvdLimit) return singular_values(m)(0);
  // Power iteration on M^dagger M from a deterministic dense start vector.
  CVector v(m.cols());
  for (Index i = 0; i < v.size(); ++i) v(i) = Complex(1.0 + 0.1 * std::sin(0.7 * static_cast<double>(i)), 0.05 * std::cos(1.3 * static_cast<double>(i)));
  v.normalize();
  double sigma = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    CVector w = m.adjoint() * (m * v);
    const double nw = w.norm();
    if (nw == 0.0) return 0.0;
    const double next = std::sqrt(nw);
    v = w / nw;
    if (std::abs(next - sigma) <= tol * std::max(1.0, next)) return next;
    sigma = next;
  }
  return sigma;
}

double trace_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  if (m.rows() == m.cols() && hermiticity_error(m) <= 1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff())) {
    const CMatrix h = 0.5 * (m + m.adjoint());
    return eigvalsh(h).cwiseAbs().sum();
  }
  return singular_values(m).sum();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) { return Eigen::kroneckerProduct(a, b).eval(); }

CMatrix embed(const CMatrix& op, std::span<const int> sites, int n, int d) {
  const int s = static_cast<int>(sites.size());
  const Index local_dim = ipow(d, s);
  if (op.rows() != local_dim || op.cols() != local_dim) throw InvalidArgument("embed: operator size does not match site count");
  for (std::size_t a = 0; a < sites.size(); ++a) {
    if (sites[a] < 0 || sites[a] >= n) throw InvalidArgument("embed: site out of range");
    for (std::size_t b = 0; b < a; ++b) {
      if (sites[a] == sites[b]) throw InvalidArgument("embed: repeated site");
    }
  }
  const Index dim = ipow(d, n);
  // weight of the digit belonging to site q in the global index (site 0 most significant)
  std::vector<Index> weight(static_cast<std::size_t>(s));
  for (int a = 0; a < s; ++a) weight[a] = ipow(d, n - 1 - sites[a]);
  std::vector<Index> offset(static_cast<std::size_t>(local_dim), 0);
  for (Index l = 0; l < local_dim; ++l) {
    Index rem = l;
    for (int a = s - 1; a >= 0; --a) {
      offset[l] += (rem % d) * weight[a];
      rem /= d;
    }
  }
  CMatrix out = CMatrix::Zero(dim, dim);
  for (Index c = 0; c < dim; ++c) {
    Index lc = 0;
    for (int a = 0; a < s; ++a) lc = lc * d + (c / weight[a]) % d;
    const Index rest = c - offset[lc];
    for (Index lr = 0; lr < local_dim; ++lr) {
      const Complex v = op(lr, lc);
      if (v != Complex(0.0, 0.0)) out(rest + offset[lr], c) = v;
    }
  }
  return out;
}

CMatrix partial_trace(const CMatrix& rho, std::span<const int> dims, std::span<const int> keep_list) {
  std::vector<bool> keep(dims.size(), false);
  for (int q : keep_list) {
    if (q < 0 || q >= static_cast<int>(dims.size())) throw InvalidArgument("partial_trace: subsystem out of range");
    if (keep[q]) throw InvalidArgument("partial_trace: subsystem listed twice");
    keep[q] = true;
  }
  Index total = 1, kept = 1;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 1) throw InvalidArgument("partial_trace: non-positive subsystem dimension");
    total *= dims[i];
    if (keep[i]) kept *= dims[i];
  }
  if (rho.rows() != total || rho.cols() != total) throw InvalidArgument("partial_trace: matrix size does not match dims");
  const Index traced = total / kept;
  // global index of (kept multi-index, traced multi-index)
  std::vector<Index> kept_off(static_cast<std::size_t>(kept), 0), traced_off(static_cast<std::size_t>(traced), 0);
  std::vector<Index> weight(dims.size());
  Index w = 1;
  for (std::size_t i = dims.size(); i-- > 0;) {
    weight[i] = w;
    w *= dims[i];
  }
  auto fill = [&](std::vector<Index>& off, bool flag) {
    for (std::size_t l = 0; l < off.size(); ++l) {
      Index rem = static_cast<Index>(l), acc = 0;
      for (std::size_t i = dims.size(); i-- > 0;) {
        if (keep[i] != flag) continue;
        acc += (rem % dims[i]) * weight[i];
        rem /= dims[i];
      }
      off[l] = acc;
    }
  };
  fill(kept_off, true);
  fill(traced_off, false);
  CMatrix out = CMatrix::Zero(kept, kept);
  for (Index i = 0; i < kept; ++i) {
    for (Index j = 0; j < kept; ++j) {
      Complex acc = 0.0;
      for (Index t = 0; t < traced; ++t) acc += rho(kept_off[i] + traced_off[t], kept_off[j] + traced_off[t]);
      out(i, j) = acc;
    }
  }
  return out;
}

CMatrix orthonormal_range(const CMatrix& v, double rel_tol) {
  if (v.cols() == 0) return CMatrix(v.rows(), 0);
  Eigen::BDCSVD<CMatrix> svd(v, Eigen::ComputeThinU);
  const RVector& s = svd.singularValues();
  Index rank = 0;
  const double cut = s.size() > 0 ? rel_tol * s(0) : 0.0;
  while (rank < s.size() && s(rank) > cut) ++rank;
  return svd.matrixU().leftCols(rank);
}

double max_principal_angle_sine(const CMatrix& q1, const CMatrix& q2) {
  if (q1.rows() != q2.rows()) throw InvalidArgument("max_principal_angle_sine: ambient dimensions differ");
  if (q1.cols() != q2.cols()) return 1.0;
  if (q1.cols() == 0) return 0.0;
  const CMatrix residual = q1 - q2 * (q2.adjoint() * q1);
  return singular_values(residual)(0);
}

std::vector<std::pair<double, int>> cluster_values(const RVector& sorted_values, double tol) {
  std::vector<std::pair<double, int>> out;
  double prev = 0.0;
  for (Index i = 0; i < sorted_values.size(); ++i) {
    const double v = sorted_values(i);
    if (out.empty() || std::abs(v - prev) > tol) {
      out.emplace_back(v, 1);
    } else {
      auto& [rep, count] = out.back();
      rep = (rep * count + v) / (count + 1);
      ++count;
    }
    prev = v;
  }
  return out;
}

}  // namespace slh::linalg

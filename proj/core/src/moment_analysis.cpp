#include "slh/moment_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "slh/errors.hpp"
#include "slh/parallel.hpp"

namespace slh::moment {

namespace {

// Columns vect(P_sigma) for every permutation of the k tensor factors.
CMatrix permutation_vectors(Index carrier_dim, int k, Index max_rows) {
  const Index rows = lie::superop_rows(carrier_dim, k, max_rows);
  const Index side = linalg::ipow(carrier_dim, k);
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  CMatrix v = CMatrix::Zero(rows, static_cast<Index>(perms.size()));
  std::vector<Index> digits(static_cast<std::size_t>(k));
  for (std::size_t p = 0; p < perms.size(); ++p) {
    for (Index col = 0; col < side; ++col) {
      Index rem = col;
      for (int s = k - 1; s >= 0; --s) {
        digits[s] = rem % carrier_dim;
        rem /= carrier_dim;
      }
      Index row = 0;
      for (int s = 0; s < k; ++s) row = row * carrier_dim + digits[perms[p][s]];
      v(row * side + col, static_cast<Index>(p)) = 1.0;
    }
  }
  return v;
}

}  // namespace

Superoperator haar_projector(Index carrier_dim, int k, Index max_rows) {
  const CMatrix v = permutation_vectors(carrier_dim, k, max_rows);
  const CMatrix gram = v.adjoint() * v;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(gram);
  const RVector& w = es.eigenvalues();
  const double cut = 1e-10 * w.cwiseAbs().maxCoeff();
  RVector inv(w.size());
  for (Index i = 0; i < w.size(); ++i) inv(i) = w(i) > cut ? 1.0 / w(i) : 0.0;
  const CMatrix pinv = es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().adjoint();
  return Superoperator{v * pinv * v.adjoint(), k, carrier_dim};
}

CMatrix haar_range(Index carrier_dim, int k, Index max_rows) {
  return linalg::orthonormal_range(permutation_vectors(carrier_dim, k, max_rows));
}

Superoperator local_generator(const stoch::NoiseModel& model, int k, Index max_rows) {
  stoch::validate(model);
  Superoperator c = lie::casimir_matrix(model.basis, k, max_rows);
  c.matrix *= -0.5 * model.rate();
  return c;
}

SparseMatrix global_generator_sparse(const stoch::NoiseModel& model, const stoch::InteractionGraph& graph, int k,
                                     bool include_drift, Index max_rows) {
  stoch::validate(model);
  if (model.basis.dim != graph.d * graph.d) throw InvalidArgument("noise basis must act on two sites of the graph");
  const Index dim = graph.dimension();
  const Index rows = lie::superop_rows(dim, k, max_rows);
  const auto factors = lie::casimir_factors(model.basis);
  SparseMatrix g(rows, rows);
  for (const auto& edge : graph.edges) {
    const int sites[2] = {edge.first, edge.second};
    SparseMatrix edge_part(rows, rows);
    for (const auto& b : factors) {
      const SparseMatrix p = lie::pi_kk_algebra_sparse(linalg::embed(b, sites, graph.n, graph.d), k, max_rows);
      edge_part += SparseMatrix(p * p);
    }
    g += (0.5 * model.rate()) * edge_part;
    if (include_drift) {
      if (auto it = model.drift.find(edge); it != model.drift.end()) {
        const CMatrix h = linalg::embed(it->second, sites, graph.n, graph.d);
        g += lie::pi_kk_algebra_sparse(Complex(0, -1) * h, k, max_rows);
      }
    }
  }
  g.prune([](Index, Index, const Complex& v) { return std::abs(v) > 1e-12; });
  return g;
}

Superoperator global_generator(const stoch::NoiseModel& model, const stoch::InteractionGraph& graph, int k,
                               bool include_drift, Index max_rows) {
  return Superoperator{CMatrix(global_generator_sparse(model, graph, k, include_drift, max_rows)), k,
                       graph.dimension()};
}

std::string_view to_string(GapMethod m) {
  return m == GapMethod::exact_generator ? "exact_generator" : "monte_carlo";
}

GapReport spectral_gap(const Superoperator& generator) {
  const CMatrix& g = generator.matrix;
  if (g.rows() == 0) throw InvalidArgument("spectral_gap: empty generator");
  const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  if (linalg::hermiticity_error(g) > 1e-10 * scale) {
    throw InvalidArgument("spectral_gap: generator is not Hermitian; compare singular values of the evolved map");
  }
  const RVector ev = linalg::eigvalsh(0.5 * (g + g.adjoint()));
  GapReport r;
  r.method = GapMethod::exact_generator;
  bool have_nonzero = false;
  for (Index i = 0; i < ev.size(); ++i) {
    const double v = ev(i);
    if (std::abs(v) < kKernelTolerance) {
      ++r.kernel_dim;
    } else {
      if (v > 0) throw NumericalError("generator has a positive eigenvalue " + std::to_string(v));
      if (!have_nonzero || v > r.second_eigenvalue) r.second_eigenvalue = v;
      have_nonzero = true;
    }
  }
  r.all_kernel = !have_nonzero;
  r.gap = have_nonzero ? -r.second_eigenvalue : 0.0;
  return r;
}

Superoperator moment_exact(const Superoperator& generator, double T) {
  const CMatrix& g = generator.matrix;
  const double scale = std::max(1.0, g.size() ? g.cwiseAbs().maxCoeff() : 1.0);
  CMatrix m = linalg::hermiticity_error(g) <= 1e-12 * scale
                  ? linalg::expm_hermitian(0.5 * (g + g.adjoint()), Complex(T, 0.0))
                  : linalg::expm((T * g).eval());
  return Superoperator{std::move(m), generator.k, generator.carrier_dim};
}

RVector moment_deviation_singular_values(const Superoperator& generator, const Superoperator& haar, double T) {
  if (generator.rows() != haar.rows()) throw InvalidArgument("generator and Haar projector differ in size");
  return linalg::singular_values(moment_exact(generator, T).matrix - haar.matrix);
}

namespace {

struct MomentPartial {
  CMatrix sum;
  RMatrix sum_sq;
};

}  // namespace

MomentEstimate moment_monte_carlo(const stoch::NoiseModel& model, const stoch::InteractionGraph& graph, int k,
                                  const stoch::TrajectoryConfig& cfg, Index max_rows) {
  if (cfg.samples < 1) throw InvalidArgument("samples must be >= 1");
  const Index rows = lie::superop_rows(graph.dimension(), k, max_rows);
  const stoch::Stepper stepper(model, graph);
  const std::int64_t steps = stoch::step_count(cfg.T, cfg.dt);
  auto partials = chunked_map<MomentPartial>(cfg.samples, 32, [&](std::int64_t begin, std::int64_t end) {
    MomentPartial p{CMatrix::Zero(rows, rows), RMatrix::Zero(rows, rows)};
    for (std::int64_t t = begin; t < end; ++t) {
      auto rng = stoch::trajectory_rng(cfg.seed, static_cast<std::uint64_t>(t));
      CMatrix u = CMatrix::Identity(stepper.dimension(), stepper.dimension());
      for (std::int64_t s = 0; s < steps; ++s) u = stepper.step(cfg.dt, rng) * u;
      const CMatrix rep = lie::pi_kk_group(u, k, max_rows).matrix;
      p.sum += rep;
      p.sum_sq += rep.cwiseAbs2();
    }
    return p;
  });
  CMatrix sum = CMatrix::Zero(rows, rows);
  RMatrix sum_sq = RMatrix::Zero(rows, rows);
  for (const auto& p : partials) {
    sum += p.sum;
    sum_sq += p.sum_sq;
  }
  const double n = static_cast<double>(cfg.samples);
  MomentEstimate est{Superoperator{sum / n, k, graph.dimension()}, cfg.samples, cfg.T, 0.0};
  const double var = std::max(0.0, (sum_sq / n).sum() - est.superop.matrix.squaredNorm());
  est.standard_error = std::sqrt(var / n);
  return est;
}

double tpe_distance(const Superoperator& moment, const Superoperator& haar) {
  if (moment.rows() != haar.rows() || moment.matrix.cols() != haar.matrix.cols()) {
    throw InvalidArgument("tpe_distance: dimension mismatch");
  }
  return linalg::spectral_norm(moment.matrix - haar.matrix);
}

double design_epsilon(double lambda, Index carrier_dim, int k) {
  return std::pow(static_cast<double>(carrier_dim), k) * lambda;
}

int ceil_log(int d, int k) {
  if (d < 2 || k < 1) throw InvalidArgument("ceil_log needs d >= 2 and k >= 1");
  int p = 0;
  std::int64_t power = 1;
  while (power < 4LL * k) {
    power *= d;
    ++p;
  }
  return p;
}

namespace {

double bound_prefactor(int d, int k, double a) {
  if (!(a > 0)) throw InvalidArgument("a must be positive");
  const double p = ceil_log(d, k);
  const double kd = k;
  return 850.0 * p * p * d * d * std::pow(kd, 5) * std::pow(kd, 3.1 / std::log(static_cast<double>(d))) / a;
}

}  // namespace

double tpe_time_bound(int d, int k, double lambda, double a) {
  if (!(lambda > 0 && lambda < 1)) throw InvalidArgument("lambda must lie in (0, 1)");
  return bound_prefactor(d, k, a) * std::log(1.0 / lambda);
}

double design_time_bound(int d, int k, double epsilon, double a, int n) {
  if (!(epsilon > 0)) throw InvalidArgument("epsilon must be positive");
  if (n < 1) throw InvalidArgument("n must be >= 1");
  return bound_prefactor(d, k, a) * (n * k * std::log(static_cast<double>(d)) + std::log(1.0 / epsilon));
}

nlohmann::ordered_json to_json(const GapReport& r) {
  nlohmann::ordered_json j;
  j["gap"] = r.gap;
  j["kernel_dim"] = r.kernel_dim;
  j["second_eigenvalue"] = r.second_eigenvalue;
  j["method"] = to_string(r.method);
  j["all_kernel"] = r.all_kernel;
  return j;
}

}  // namespace slh::moment

#include "slh/dissipative.hpp"

#include <cmath>
#include <random>

#include "slh/errors.hpp"
#include "slh/moment_analysis.hpp"
#include "slh/parallel.hpp"

namespace slh::diss {

void validate(const LindbladSpec& spec) {
  if (!(spec.rate > 0)) throw InvalidArgument("Lindblad rate must be positive");
  if (spec.h0.rows() != spec.h0.cols() || spec.h0.rows() == 0) throw InvalidArgument("H0 must be square and nonempty");
  if (linalg::hermiticity_error(spec.h0) > 1e-12) throw InvalidArgument("H0 is not Hermitian");
  for (const auto& b : spec.jump_ops) {
    if (b.rows() != spec.h0.rows() || b.cols() != spec.h0.cols()) throw InvalidArgument("jump operator has the wrong size");
    if (linalg::antihermiticity_error(b) > 1e-12) throw InvalidArgument("jump operator is not anti-Hermitian");
  }
}

Superoperator lindblad_generator(const LindbladSpec& spec) {
  validate(spec);
  const Index dim = spec.h0.rows();
  const CMatrix id = CMatrix::Identity(dim, dim);
  CMatrix l = Complex(0, -1) * (linalg::kron(spec.h0, id) - linalg::kron(id, spec.h0.transpose()));
  for (const auto& b : spec.jump_ops) {
    const CMatrix bb = b.adjoint() * b;
    l += spec.rate * (linalg::kron(b, b.conjugate()) - 0.5 * linalg::kron(bb, id) - 0.5 * linalg::kron(id, bb.transpose()));
  }
  return Superoperator{std::move(l), 1, dim};
}

LindbladSpec lindblad_from_model(const stoch::NoiseModel& model, const stoch::InteractionGraph& graph) {
  stoch::validate(model);
  if (model.basis.dim != graph.d * graph.d) throw InvalidArgument("noise basis must act on two sites of the graph");
  const Index dim = graph.dimension();
  LindbladSpec spec{CMatrix::Zero(dim, dim), {}, model.rate()};
  const auto factors = lie::casimir_factors(model.basis);
  for (const auto& edge : graph.edges) {
    const int sites[2] = {edge.first, edge.second};
    for (const auto& b : factors) spec.jump_ops.push_back(linalg::embed(b, sites, graph.n, graph.d));
    if (auto it = model.drift.find(edge); it != model.drift.end()) spec.h0 += linalg::embed(it->second, sites, graph.n, graph.d);
  }
  return spec;
}

void validate_state(const CMatrix& rho) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) throw InvalidArgument("state must be a nonempty square matrix");
  if (linalg::hermiticity_error(rho) > 1e-10) throw InvalidArgument("state is not Hermitian");
  if (std::abs(rho.trace() - 1.0) > 1e-10) throw InvalidArgument("state does not have unit trace");
  if (linalg::eigvalsh(0.5 * (rho + rho.adjoint())).minCoeff() < -1e-10) {
    throw InvalidArgument("state is not positive semidefinite");
  }
}

namespace {

CMatrix vect(const CMatrix& m) {
  CMatrix v(m.size(), 1);
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j, 0) = m(i, j);
  return v;
}

CMatrix devect(const CMatrix& v, Index dim) {
  CMatrix m(dim, dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) m(i, j) = v(i * dim + j, 0);
  return m;
}

}  // namespace

CMatrix evolve_master(const Superoperator& generator, const CMatrix& rho0, double T) {
  validate_state(rho0);
  const Index dim = rho0.rows();
  if (generator.rows() != dim * dim) throw InvalidArgument("generator does not match the state dimension");
  if (!(T >= 0)) throw InvalidArgument("T must be nonnegative");
  const CMatrix prop = moment::moment_exact(generator, T).matrix;
  const CMatrix rho = devect(prop * vect(rho0), dim);
  if (std::abs(rho.trace() - 1.0) > 1e-10) throw NumericalError("master equation did not preserve the trace");
  if (linalg::eigvalsh(0.5 * (rho + rho.adjoint())).minCoeff() < -1e-8) {
    throw NumericalError("master equation produced a non-positive state");
  }
  return rho;
}

double trace_distance(const CMatrix& a, const CMatrix& b) { return 0.5 * linalg::trace_norm(a - b); }

namespace {

struct StatePartial {
  CMatrix sum;
  RMatrix sum_sq;
  std::vector<CMatrix> states;
};

}  // namespace

StateAverage mc_state_average(const stoch::NoiseModel& model, const stoch::InteractionGraph& graph,
                              const CMatrix& rho0, const stoch::TrajectoryConfig& cfg, bool keep_samples) {
  validate_state(rho0);
  if (cfg.samples < 1) throw InvalidArgument("samples must be >= 1");
  const stoch::Stepper stepper(model, graph);
  const Index dim = stepper.dimension();
  if (rho0.rows() != dim) throw InvalidArgument("state does not match the graph dimension");
  const std::int64_t steps = stoch::step_count(cfg.T, cfg.dt);
  auto partials = chunked_map<StatePartial>(cfg.samples, 64, [&](std::int64_t begin, std::int64_t end) {
    StatePartial p{CMatrix::Zero(dim, dim), RMatrix::Zero(dim, dim), {}};
    for (std::int64_t t = begin; t < end; ++t) {
      auto rng = stoch::trajectory_rng(cfg.seed, static_cast<std::uint64_t>(t));
      CMatrix u = CMatrix::Identity(dim, dim);
      for (std::int64_t s = 0; s < steps; ++s) u = stepper.step(cfg.dt, rng) * u;
      CMatrix rho = u * rho0 * u.adjoint();
      p.sum += rho;
      p.sum_sq += rho.cwiseAbs2();
      if (keep_samples) p.states.push_back(std::move(rho));
    }
    return p;
  });
  StateAverage avg{CMatrix::Zero(dim, dim), cfg.samples, 0.0, {}};
  RMatrix sum_sq = RMatrix::Zero(dim, dim);
  for (auto& p : partials) {
    avg.rho += p.sum;
    sum_sq += p.sum_sq;
    for (auto& s : p.states) avg.per_sample.push_back(std::move(s));
  }
  const double n = static_cast<double>(cfg.samples);
  avg.rho /= n;
  const double var = std::max(0.0, (sum_sq / n).sum() - avg.rho.squaredNorm());
  avg.standard_error = std::sqrt(var / n);
  return avg;
}

MasterComparison compare_to_master(const StateAverage& avg, const CMatrix& exact, double dt, int resamples,
                                   std::uint64_t seed) {
  if (avg.rho.rows() != exact.rows()) throw InvalidArgument("states differ in size");
  MasterComparison c{trace_distance(avg.rho, exact), 0.0, dt, avg.samples};
  if (resamples < 2) return c;
  if (static_cast<std::int64_t>(avg.per_sample.size()) != avg.samples) {
    throw InvalidArgument("bootstrap needs the per-sample states");
  }
  std::mt19937_64 rng(mix_seed(seed, 0xb007));
  std::uniform_int_distribution<std::size_t> pick(0, avg.per_sample.size() - 1);
  std::vector<double> dists;
  dists.reserve(static_cast<std::size_t>(resamples));
  const double n = static_cast<double>(avg.per_sample.size());
  for (int b = 0; b < resamples; ++b) {
    CMatrix mean = CMatrix::Zero(exact.rows(), exact.cols());
    for (std::size_t i = 0; i < avg.per_sample.size(); ++i) mean += avg.per_sample[pick(rng)];
    dists.push_back(trace_distance(mean / n, exact));
  }
  double mu = 0.0;
  for (double d : dists) mu += d;
  mu /= resamples;
  double var = 0.0;
  for (double d : dists) var += (d - mu) * (d - mu);
  c.bootstrap_sigma = std::sqrt(var / (resamples - 1));
  return c;
}

nlohmann::ordered_json to_json(const MasterComparison& c) {
  nlohmann::ordered_json j;
  j["trace_distance"] = c.trace_distance;
  j["bootstrap_sigma"] = c.bootstrap_sigma;
  j["dt"] = c.dt;
  j["samples"] = c.samples;
  return j;
}

}  // namespace slh::diss

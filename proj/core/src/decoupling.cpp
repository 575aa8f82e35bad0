#include <cmath>

#include "slh/dissipative.hpp"
#include "slh/errors.hpp"
#include "slh/parallel.hpp"
#include "slh/pauli_walk.hpp"

namespace slh::pauli {

namespace {

constexpr double kRankCutoff = 1e-12;

struct LhsPartial {
  double sum = 0.0;
  double sum_sq = 0.0;
};

}  // namespace

DecouplingReport decoupling_check(const DecouplingSpec& spec, const stoch::NoiseModel& model,
                                  const stoch::InteractionGraph& graph, const stoch::TrajectoryConfig& cfg) {
  const int na = spec.system_qubits, ne = spec.environment_qubits;
  if (na < 1 || ne < 0) throw InvalidArgument("decoupling needs at least one system qubit");
  if (na > kMaxExactQubits) throw GuardError("decoupling check limited to n <= " + std::to_string(kMaxExactQubits));
  if (graph.n != na || graph.d != 2) throw InvalidArgument("graph must describe the system qubits");
  const int traced = spec.channel == DecouplingChannel::identity ? 0 : spec.traced_qubits;
  if (traced < 0 || traced > na) throw InvalidArgument("traced qubits must lie in 0..n");
  if (spec.channel != DecouplingChannel::partial_trace && spec.channel != DecouplingChannel::identity) {
    throw InvalidArgument("unsupported channel");
  }
  const Index da = Index{1} << na, de = Index{1} << ne, db = Index{1} << (na - traced);
  if (spec.rho_ae.rows() != da * de) throw InvalidArgument("rho_AE does not match the qubit counts");
  diss::validate_state(spec.rho_ae);
  if (cfg.samples < 2) throw InvalidArgument("decoupling needs at least two samples");

  // subsystem layout: A qubits then E qubits; B = first na - traced qubits of A
  const std::vector<int> dims(static_cast<std::size_t>(na + ne), 2);
  std::vector<int> keep_be, keep_e;
  for (int q = 0; q < na + ne; ++q) {
    if (q < na - traced || q >= na) keep_be.push_back(q);
    if (q >= na) keep_e.push_back(q);
  }
  const CMatrix rho_e = linalg::partial_trace(spec.rho_ae, dims, keep_e);
  const CMatrix tau_b = CMatrix::Identity(db, db) / static_cast<double>(db);
  const CMatrix target = linalg::kron(tau_b, rho_e);

  const stoch::Stepper stepper(model, graph);
  const std::int64_t steps = stoch::step_count(cfg.T, cfg.dt);
  const CMatrix id_e = CMatrix::Identity(de, de);
  auto partials = chunked_map<LhsPartial>(cfg.samples, 64, [&](std::int64_t begin, std::int64_t end) {
    LhsPartial p;
    for (std::int64_t t = begin; t < end; ++t) {
      auto rng = stoch::trajectory_rng(cfg.seed, static_cast<std::uint64_t>(t));
      CMatrix u = CMatrix::Identity(da, da);
      for (std::int64_t s = 0; s < steps; ++s) u = stepper.step(cfg.dt, rng) * u;
      const CMatrix full = linalg::kron(u, id_e);
      const CMatrix out = linalg::partial_trace(full * spec.rho_ae * full.adjoint(), dims, keep_be);
      const double dist = linalg::trace_norm(out - target);
      p.sum += dist;
      p.sum_sq += dist * dist;
    }
    return p;
  });
  double sum = 0.0, sum_sq = 0.0;
  for (const auto& p : partials) {
    sum += p.sum;
    sum_sq += p.sum_sq;
  }
  const double n = static_cast<double>(cfg.samples);
  DecouplingReport r;
  r.samples = cfg.samples;
  r.T = static_cast<double>(steps) * cfg.dt;
  r.lhs_mc = sum / n;
  const double var = std::max(0.0, (sum_sq - n * r.lhs_mc * r.lhs_mc) / (n - 1.0));
  r.lhs_sigma = std::sqrt(var / n);

  // Choi state of the channel on A' (x) B, A' a copy of A
  CMatrix phi = CMatrix::Zero(da * da, da * da);
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < da; ++j) phi(i * da + i, j * da + j) = 1.0 / static_cast<double>(da);
  const std::vector<int> choi_dims(static_cast<std::size_t>(2 * na), 2);
  std::vector<int> keep_choi, keep_b;
  for (int q = 0; q < 2 * na - traced; ++q) {
    keep_choi.push_back(q);
    if (q >= na) keep_b.push_back(q);
  }
  const CMatrix choi = linalg::partial_trace(phi, choi_dims, keep_choi);
  const CMatrix choi_b = linalg::partial_trace(phi, choi_dims, keep_b);

  r.h2_a_given_b = collision_entropy_h2(choi, choi_b, kRankCutoff);
  r.h2_a_given_e = collision_entropy_h2(spec.rho_ae, rho_e, kRankCutoff);
  r.rhs_bound = std::sqrt(std::pow(5.0, spec.delta * na) * std::exp2(-r.h2_a_given_b - r.h2_a_given_e));
  r.holds = r.lhs_mc <= r.rhs_bound + 3.0 * r.lhs_sigma;
  return r;
}

nlohmann::ordered_json to_json(const DecouplingReport& r) {
  nlohmann::ordered_json j;
  j["lhs_mc"] = r.lhs_mc;
  j["lhs_sigma"] = r.lhs_sigma;
  j["rhs_bound"] = r.rhs_bound;
  j["h2_a_given_b"] = r.h2_a_given_b;
  j["h2_a_given_e"] = r.h2_a_given_e;
  j["samples"] = r.samples;
  j["T"] = r.T;
  j["holds"] = r.holds;
  return j;
}

}  // namespace slh::pauli

#include "slh/stochastic_evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "slh/errors.hpp"
#include "slh/parallel.hpp"
#include "slh/serialize.hpp"

namespace slh::stoch {

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::line: return "line";
    case GraphKind::complete: return "complete";
    case GraphKind::custom: return "custom";
  }
  return "custom";
}

GraphKind graph_kind_from_string(std::string_view name) {
  if (name == "line") return GraphKind::line;
  if (name == "complete") return GraphKind::complete;
  if (name == "custom") return GraphKind::custom;
  throw InvalidArgument("unknown graph kind '" + std::string(name) + "'");
}

InteractionGraph build_graph(GraphKind kind, int n, int d) {
  if (n < 2) throw InvalidArgument("interaction graph needs n >= 2 sites");
  if (d < 2) throw InvalidArgument("local dimension must be >= 2");
  InteractionGraph g{n, d, {}, kind};
  switch (kind) {
    case GraphKind::line:
      for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
      break;
    case GraphKind::complete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
      break;
    case GraphKind::custom:
      throw InvalidArgument("custom graphs are built with custom_graph()");
  }
  return g;
}

InteractionGraph custom_graph(int n, int d, std::vector<Edge> edges) {
  if (n < 2) throw InvalidArgument("interaction graph needs n >= 2 sites");
  if (d < 2) throw InvalidArgument("local dimension must be >= 2");
  for (auto& [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw InvalidArgument("edge references a site out of range");
    if (i == j) throw InvalidArgument("self loops are not allowed");
    if (i > j) std::swap(i, j);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw InvalidArgument("duplicate edge");
  if (edges.empty()) throw InvalidArgument("graph has no edges");
  return InteractionGraph{n, d, std::move(edges), GraphKind::custom};
}

bool is_connected(const InteractionGraph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [i, j] : g.edges) parent[find(i)] = find(j);
  const int root = find(0);
  for (int v = 1; v < g.n; ++v)
    if (find(v) != root) return false;
  return true;
}

void validate(const NoiseModel& model) {
  if (!(model.a > 0)) throw InvalidArgument("noise scale a must be positive");
  if (!(model.edge_variance_scale > 0)) throw InvalidArgument("edge variance scale must be positive");
  if (model.basis.elements.empty()) throw InvalidArgument("noise basis is empty");
  if (model.basis.includes_identity) throw InvalidArgument("noise basis must be traceless");
  for (const auto& [edge, h] : model.drift) {
    if (h.rows() != model.basis.dim || h.cols() != model.basis.dim) {
      throw InvalidArgument("drift matrix has the wrong size");
    }
    if (linalg::hermiticity_error(h) > 1e-12) throw InvalidArgument("drift matrix is not Hermitian");
  }
}

NoiseModel decoupling_preset(int n) {
  if (n < 2) throw InvalidArgument("decoupling preset needs n >= 2");
  NoiseModel m;
  m.basis = lie::build_basis(lie::BasisKind::pauli_pair, 4);
  m.a = 32.0;
  m.edge_variance_scale = 2.0 / (n * (n - 1.0));
  return m;
}

std::uint64_t model_hash(const NoiseModel& model) {
  std::string bytes;
  bytes += std::string(lie::to_string(model.basis.kind)) + ";" + std::to_string(model.basis.dim) + ";";
  for (const auto& e : model.basis.elements) {
    for (Index i = 0; i < e.size(); ++i) {
      bytes += io::format_double(e.data()[i].real()) + "," + io::format_double(e.data()[i].imag()) + ";";
    }
  }
  bytes += io::format_double(model.a) + ";" + io::format_double(model.edge_variance_scale) + ";";
  for (const auto& [edge, h] : model.drift) {
    bytes += std::to_string(edge.first) + "-" + std::to_string(edge.second) + ":";
    for (Index i = 0; i < h.size(); ++i) {
      bytes += io::format_double(h.data()[i].real()) + "," + io::format_double(h.data()[i].imag()) + ";";
    }
  }
  bytes += model.suppress_noise ? "quiet" : "noisy";
  return io::fnv1a(bytes);
}

Rng trajectory_rng(std::uint64_t seed, std::uint64_t trajectory) { return Rng(mix_seed(seed, trajectory)); }

IncrementSampler::IncrementSampler(const NoiseModel& model) : model_(model) {
  validate(model_);
  const auto km = lie::killing_metric(model_.basis);
  covariance_ = -model_.rate() * km.matrix.inverse();
  covariance_ = 0.5 * (covariance_ + covariance_.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<RMatrix> es(covariance_);
  if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0) {
    throw NumericalError("noise covariance is not positive definite");
  }
  sqrt_cov_ = es.operatorSqrt();
}

RVector IncrementSampler::sample_coefficients(double dt, Rng& rng) const {
  if (!(dt > 0)) throw InvalidArgument("time step must be positive");
  const Index r = covariance_.rows();
  if (model_.suppress_noise) return RVector::Zero(r);
  std::normal_distribution<double> normal;
  RVector z(r);
  for (Index i = 0; i < r; ++i) z(i) = normal(rng);
  return sqrt_cov_ * z / std::sqrt(dt);
}

CMatrix IncrementSampler::sample_increment(const Edge& edge, double dt, Rng& rng) const {
  const RVector xi = sample_coefficients(dt, rng);
  const Index m = model_.basis.dim;
  CMatrix theta = CMatrix::Zero(m, m);
  for (Index mu = 0; mu < xi.size(); ++mu) theta += xi(mu) * model_.basis.elements[mu];
  if (auto it = model_.drift.find(edge); it != model_.drift.end()) theta -= kI * it->second;
  return theta;
}

CMatrix sample_increment(const NoiseModel& model, const Edge& edge, double dt, Rng& rng) {
  return IncrementSampler(model).sample_increment(edge, dt, rng);
}

Stepper::Stepper(const NoiseModel& model, const InteractionGraph& graph) : graph_(graph), sampler_(model) {
  const auto& basis = sampler_.model().basis;
  if (basis.dim != graph.d * graph.d) throw InvalidArgument("noise basis must act on two sites of the graph");
  if (graph.n * std::log2(static_cast<double>(graph.d)) > kMaxQudits + 1e-9) {
    throw GuardError("state space of " + std::to_string(graph.n) + " sites exceeds the qubit limit " +
                     std::to_string(kMaxQudits));
  }
  for (const auto& [edge, h] : sampler_.model().drift) {
    if (std::find(graph.edges.begin(), graph.edges.end(), edge) == graph.edges.end()) {
      throw InvalidArgument("drift given on an edge that is not in the graph");
    }
  }
  dim_ = graph.dimension();
}

CMatrix Stepper::step(double dt, Rng& rng) const {
  CMatrix theta = CMatrix::Zero(dim_, dim_);
  for (const auto& edge : graph_.edges) {
    const int sites[2] = {edge.first, edge.second};
    theta += linalg::embed(sampler_.sample_increment(edge, dt, rng), sites, graph_.n, graph_.d);
  }
  return linalg::expm_antihermitian(theta, dt);
}

CMatrix step_unitary(const NoiseModel& model, const InteractionGraph& graph, double dt, Rng& rng) {
  return Stepper(model, graph).step(dt, rng);
}

std::int64_t step_count(double T, double dt, bool* rounded) {
  if (!(dt > 0)) throw InvalidArgument("time step must be positive");
  if (!(T >= 0)) throw InvalidArgument("total time must be nonnegative");
  const double ratio = T / dt;
  const double nearest = std::round(ratio);
  const bool exact = std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, ratio);
  if (rounded) *rounded = !exact;
  return static_cast<std::int64_t>(exact ? nearest : std::ceil(ratio));
}

nlohmann::ordered_json graph_json(const InteractionGraph& g) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(g.kind);
  j["n"] = g.n;
  j["d"] = g.d;
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [i, k] : g.edges) edges.push_back({i, k});
  j["edges"] = std::move(edges);
  return j;
}

Trajectory evolve_trajectory(const NoiseModel& model, const InteractionGraph& graph, const TrajectoryConfig& cfg,
                             std::uint64_t trajectory) {
  bool rounded = false;
  const std::int64_t steps = step_count(cfg.T, cfg.dt, &rounded);
  Stepper stepper(model, graph);
  Rng rng = trajectory_rng(cfg.seed, trajectory);
  CMatrix u = CMatrix::Identity(stepper.dimension(), stepper.dimension());
  for (std::int64_t s = 0; s < steps; ++s) u = stepper.step(cfg.dt, rng) * u;

  Trajectory out{std::move(u), steps, static_cast<double>(steps) * cfg.dt, {}};
  auto& meta = out.metadata;
  meta["seed"] = cfg.seed;
  meta["trajectory"] = trajectory;
  meta["dt"] = cfg.dt;
  meta["T"] = cfg.T;
  meta["steps"] = steps;
  meta["elapsed"] = out.elapsed;
  meta["graph"] = graph_json(graph);
  meta["model_hash"] = io::hex64(model_hash(model));
  auto warnings = nlohmann::ordered_json::array();
  if (rounded) warnings.push_back("T/dt is not an integer; step count rounded up to " + std::to_string(steps));
  meta["warnings"] = std::move(warnings);
  return out;
}

}  // namespace slh::stoch

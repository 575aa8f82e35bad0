#pragma once

// Brownian motion on U(d^n) generated by fluctuating two-site Hamiltonians
// on an interaction graph.

#include <cstdint>
#include <map>
#include <nlohmann/json.hpp>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "slh/lie_basis.hpp"
#include "slh/linalg.hpp"

namespace slh::stoch {

using Edge = std::pair<int, int>;
using Rng = std::mt19937_64;

enum class GraphKind { line, complete, custom };

std::string_view to_string(GraphKind kind);
GraphKind graph_kind_from_string(std::string_view name);

struct InteractionGraph {
  int n = 0;
  int d = 2;
  std::vector<Edge> edges;  // (i, j) with i < j, lexicographic
  GraphKind kind = GraphKind::custom;

  Index dimension() const { return linalg::ipow(d, n); }
};

InteractionGraph build_graph(GraphKind kind, int n, int d = 2);
/// Edges are normalized to i < j and sorted; duplicates and self loops are rejected.
InteractionGraph custom_graph(int n, int d, std::vector<Edge> edges);
bool is_connected(const InteractionGraph& g);

struct NoiseModel {
  lie::OperatorBasis basis;               // traceless, on d^2
  double a = 1.0;                         // covariance scale
  std::map<Edge, CMatrix> drift;          // Hermitian d^2 x d^2 per edge
  double edge_variance_scale = 1.0;       // multiplies the covariance of every edge
  bool suppress_noise = false;            // test hook: forces every xi to 0

  /// a * edge_variance_scale, the effective covariance scale.
  double rate() const { return a * edge_variance_scale; }
};

/// Checks a > 0, scale > 0, traceless basis, Hermitian drift of the right size.
void validate(const NoiseModel& model);

/// pauli_pair basis, a = 32, complete-graph edge scale 2/(n(n-1)).
NoiseModel decoupling_preset(int n);

/// Stable hash of everything that affects sampling.
std::uint64_t model_hash(const NoiseModel& model);

struct TrajectoryConfig {
  double dt = 1e-3;
  double T = 0.0;
  std::uint64_t seed = 0;
  std::int64_t samples = 1;
};

inline constexpr int kMaxQudits = 12;  // n * log2(d) limit for D x D unitaries

/// RNG stream of one trajectory.
Rng trajectory_rng(std::uint64_t seed, std::uint64_t trajectory);

/// Precomputed square root of the noise covariance.
class IncrementSampler {
 public:
  explicit IncrementSampler(const NoiseModel& model);

  /// Coefficients xi_mu for one edge and step (covariance per 1/dt).
  RVector sample_coefficients(double dt, Rng& rng) const;
  /// theta = -i h0 + sum_mu A_mu xi_mu, anti-Hermitian d^2 x d^2.
  CMatrix sample_increment(const Edge& edge, double dt, Rng& rng) const;
  /// Covariance of xi times dt: rate * (-kappa^{-1}).
  const RMatrix& covariance() const { return covariance_; }
  const NoiseModel& model() const { return model_; }

 private:
  NoiseModel model_;
  RMatrix covariance_;
  RMatrix sqrt_cov_;
};

CMatrix sample_increment(const NoiseModel& model, const Edge& edge, double dt, Rng& rng);

/// Stateful stepper for one graph: exp(dt * sum_e embedded theta_e).
class Stepper {
 public:
  Stepper(const NoiseModel& model, const InteractionGraph& graph);
  CMatrix step(double dt, Rng& rng) const;
  Index dimension() const { return dim_; }

 private:
  InteractionGraph graph_;
  IncrementSampler sampler_;
  Index dim_;
};

CMatrix step_unitary(const NoiseModel& model, const InteractionGraph& graph, double dt, Rng& rng);

struct Trajectory {
  CMatrix unitary;
  std::int64_t steps = 0;
  double elapsed = 0.0;  // steps * dt
  nlohmann::ordered_json metadata;
};

/// Number of steps for T at step dt, rounding up. Sets `rounded` if T/dt is
/// not an integer.
std::int64_t step_count(double T, double dt, bool* rounded = nullptr);

/// U_T for one trajectory, newest step multiplied on the left. The RNG stream
/// is trajectory_rng(cfg.seed, trajectory).
Trajectory evolve_trajectory(const NoiseModel& model, const InteractionGraph& graph, const TrajectoryConfig& cfg,
                             std::uint64_t trajectory = 0);

nlohmann::ordered_json graph_json(const InteractionGraph& g);

}  // namespace slh::stoch

#pragma once

// Averaged dynamics of a single copy: the Lindblad generator of the noise
// model, exact integration of the master equation, and the trajectory average
// it should reproduce.

#include <cstdint>
#include <nlohmann/json.hpp>
#include <vector>

#include "slh/lie_basis.hpp"
#include "slh/stochastic_evolution.hpp"

namespace slh::diss {

using lie::Superoperator;

struct LindbladSpec {
  CMatrix h0;                     // Hermitian D x D
  std::vector<CMatrix> jump_ops;  // anti-Hermitian D x D
  double rate = 1.0;              // a > 0
};

void validate(const LindbladSpec& spec);

/// Row-major vectorization of
///   rho' = -i[H0, rho] + a sum_r (B_r rho B_r^dagger - {B_r^dagger B_r, rho}/2).
Superoperator lindblad_generator(const LindbladSpec& spec);

/// H0 = sum of embedded edge drifts, jump operators = embedded Casimir factors
/// of every edge, rate = a * edge_variance_scale.
LindbladSpec lindblad_from_model(const stoch::NoiseModel& model, const stoch::InteractionGraph& graph);

/// Throws InvalidArgument unless rho is Hermitian, unit trace and PSD (1e-10).
void validate_state(const CMatrix& rho);

/// devect(exp(T L) vect(rho0)); throws NumericalError if the trace drifts by
/// more than 1e-10 or an eigenvalue drops below -1e-8.
CMatrix evolve_master(const Superoperator& generator, const CMatrix& rho0, double T);

double trace_distance(const CMatrix& a, const CMatrix& b);

struct StateAverage {
  CMatrix rho;
  std::int64_t samples = 0;
  double standard_error = 0.0;      // Frobenius norm of the entrywise standard error
  std::vector<CMatrix> per_sample;  // only filled when requested
};

/// Mean of U_T rho0 U_T^dagger over cfg.samples trajectories.
StateAverage mc_state_average(const stoch::NoiseModel& model, const stoch::InteractionGraph& graph,
                              const CMatrix& rho0, const stoch::TrajectoryConfig& cfg, bool keep_samples = false);

struct MasterComparison {
  double trace_distance = 0.0;
  double bootstrap_sigma = 0.0;
  double dt = 0.0;
  std::int64_t samples = 0;
};

/// Trace distance of the average to `exact`, with the bootstrap standard
/// deviation of that distance over `resamples` resampled averages.
MasterComparison compare_to_master(const StateAverage& avg, const CMatrix& exact, double dt, int resamples,
                                   std::uint64_t seed);

nlohmann::ordered_json to_json(const MasterComparison& c);

}  // namespace slh::diss

#pragma once

// Generators of the k-th moment operator, the Haar projector, spectral gaps,
// Monte Carlo moment estimates and the run-time bounds for designs.

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string_view>

#include "slh/lie_basis.hpp"
#include "slh/stochastic_evolution.hpp"

namespace slh::moment {

using lie::SparseMatrix;
using lie::Superoperator;

/// Orthogonal projector onto span{vect(P_sigma)}, sigma in S_k, permuting the
/// k factors of (C^D)^{(x)k}. Built from the Gram pseudo-inverse.
Superoperator haar_projector(Index carrier_dim, int k, Index max_rows = lie::kDefaultMaxRows);
/// Orthonormal basis of the same span (rank k! when D >= k).
CMatrix haar_range(Index carrier_dim, int k, Index max_rows = lie::kDefaultMaxRows);

/// -(rate/2) C(pi_kk) for one edge. Drift is not part of the local generator.
Superoperator local_generator(const stoch::NoiseModel& model, int k, Index max_rows = lie::kDefaultMaxRows);

/// Sum over edges of the embedded local generators, plus pi_kk(-i h0) for each
/// edge drift when include_drift is set.
SparseMatrix global_generator_sparse(const stoch::NoiseModel& model, const stoch::InteractionGraph& graph, int k,
                                     bool include_drift, Index max_rows = lie::kDefaultMaxRows);
Superoperator global_generator(const stoch::NoiseModel& model, const stoch::InteractionGraph& graph, int k,
                               bool include_drift, Index max_rows = lie::kDefaultMaxRows);

enum class GapMethod { exact_generator, monte_carlo };
std::string_view to_string(GapMethod m);

inline constexpr double kKernelTolerance = 1e-9;

struct GapReport {
  double gap = 0.0;                // -(largest nonzero eigenvalue)
  int kernel_dim = 0;              // eigenvalues with |lambda| < kKernelTolerance
  double second_eigenvalue = 0.0;  // largest nonzero eigenvalue
  GapMethod method = GapMethod::exact_generator;
  bool all_kernel = false;         // every eigenvalue is zero; gap undefined
};

/// Requires a Hermitian generator (1e-10); throws InvalidArgument otherwise.
/// Throws NumericalError if an eigenvalue exceeds +kKernelTolerance.
GapReport spectral_gap(const Superoperator& generator);

/// exp(T G). Uses the Hermitian eigendecomposition when G is Hermitian.
Superoperator moment_exact(const Superoperator& generator, double T);

/// Singular values of exp(T G) - haar, descending. Works with drift.
RVector moment_deviation_singular_values(const Superoperator& generator, const Superoperator& haar, double T);

struct MomentEstimate {
  Superoperator superop;
  std::int64_t samples = 0;
  double T = 0.0;
  double standard_error = 0.0;  // Frobenius norm of the entrywise standard error of the mean
};

/// Sample mean of pi_kk_group(U_T) over cfg.samples trajectories.
MomentEstimate moment_monte_carlo(const stoch::NoiseModel& model, const stoch::InteractionGraph& graph, int k,
                                  const stoch::TrajectoryConfig& cfg, Index max_rows = lie::kDefaultMaxRows);

/// Largest singular value of M - haar.
double tpe_distance(const Superoperator& moment, const Superoperator& haar);
/// Design error implied by a TPE distance: D^k * lambda.
double design_epsilon(double lambda, Index carrier_dim, int k);

/// Smallest p with d^p >= 4k.
int ceil_log(int d, int k);
/// 850 ceil(log_d 4k)^2 d^2 k^5 k^{3.1/ln d} ln(1/lambda) / a.
double tpe_time_bound(int d, int k, double lambda, double a);
/// Same prefactor times (n k ln d + ln(1/eps)) / a.
double design_time_bound(int d, int k, double epsilon, double a, int n);

nlohmann::ordered_json to_json(const GapReport& r);

}  // namespace slh::moment

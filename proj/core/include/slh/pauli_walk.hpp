#pragma once

// Pauli-string picture of the second moment: the weight ("zero") chain, its
// stationary law, the continuous-time random walk with exponential holding
// times, the label randomization chains, Pauli coefficients of the exact
// second moment, permutation invariance and collision entropies.

#include <compare>
#include <cstdint>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "slh/linalg.hpp"
#include "slh/rep_theory.hpp"
#include "slh/stochastic_evolution.hpp"

namespace slh::pauli {

using rep::Rational;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Labels in {0,1,2,3} (I, X, Y, Z); site 0 is the most significant digit of index().
class PauliString {
 public:
  explicit PauliString(std::vector<int> labels);
  static PauliString from_index(std::uint64_t index, int n);
  static PauliString identity(int n);
  /// Parses "IXYZ" or "0123" text.
  static PauliString parse(std::string_view text);

  int n() const { return static_cast<int>(labels_.size()); }
  int weight() const;
  std::uint64_t index() const;
  const std::vector<int>& labels() const { return labels_; }
  int operator[](std::size_t i) const { return labels_[i]; }
  std::string str() const;
  CMatrix matrix() const;

  auto operator<=>(const PauliString&) const = default;

 private:
  std::vector<int> labels_;
};

/// Probability mass on Pauli strings.
using StringDistribution = std::map<PauliString, double>;

// ---- zero chain -----------------------------------------------------------

struct WeightChain {
  int n = 0;
  double dt = 0.0;
  bool continuous = false;
  RMatrix transition;  // row/column l-1 for weight l in 1..n
};

/// Largest admissible step: n(n-1) / (16 max_l l(3n-2l-1)). dt must be strictly below.
Rational zero_chain_dt_limit(int n);
/// Exact transition matrix; throws InvalidArgument if dt is not below the limit.
RationalMatrix zero_chain_matrix_exact(int n, const Rational& dt);
WeightChain zero_chain_matrix(int n, double dt);

/// omega_0(l) = 3^l C(n,l) / (4^n - 1), l = 1..n.
std::vector<Rational> stationary_distribution_exact(int n);
RVector stationary_distribution(int n);

/// The zero chain conditioned on moving.
RationalMatrix accelerated_chain_exact(int n);
RMatrix accelerated_chain_matrix(int n);

/// 16 l (3n-2l-1) / (n(n-1)).
Rational jump_rate_exact(int weight, int n);
double jump_rate(int weight, int n);

RMatrix to_double(const RationalMatrix& m);

// ---- continuous-time walk --------------------------------------------------

struct CtrwConfig {
  int n = 2;
  int start_weight = 1;
  double T = 0.0;
  std::int64_t trajectories = 1;
  std::uint64_t seed = 0;
  /// First-passage target; defaults to floor((3/4 - delta) n) clamped to [1, n].
  std::optional<int> target_weight;
  double delta = 0.05;
  /// Trajectories whose jumps are recorded (from trajectory 0 upward).
  std::int64_t record_trajectories = 0;
};

struct CtrwJump {
  std::int64_t trajectory = 0;
  std::int64_t jump_index = 0;
  int weight = 0;             // weight held during this interval
  double holding_time = 0.0;  // exponential with jump_rate(weight)
};

struct CtrwResult {
  int n = 0;
  double T = 0.0;
  int target_weight = 0;
  RVector weight_distribution;          // empirical law at T, index l-1
  std::vector<double> passage_times;    // total waiting time until the target is first hit
  RMatrix jump_counts;                  // embedded-chain transition counts over [0, T]
  std::vector<CtrwJump> jumps;          // recorded trajectories only
};

int default_target_weight(int n, double delta);
CtrwResult simulate_ctrw(const CtrwConfig& cfg);

// ---- label chains ----------------------------------------------------------

enum class LabelChain { R, L, A };

/// Edge-averaged R or L chain (or A = R/3 + 2L/3) applied to a distribution
/// over n-qubit strings.
StringDistribution apply_label_chains(const StringDistribution& dist, LabelChain which);

/// 4^n x 4^n transition matrix of the chain, row = source string index.
RMatrix label_chain_matrix(int n, LabelChain which);

/// Weight-marginal transition matrix of a string chain (rows/cols l-1,
/// weight 0 dropped). Throws NumericalError if strings of equal weight
/// disagree by more than tol.
RMatrix weight_marginal(const RMatrix& string_chain, int n, double tol = 1e-10);

// ---- exact second-moment coefficients --------------------------------------

struct PauliBlock {
  RMatrix rates;          // rates(mu, nu): generator restricted to span{sigma_mu (x) sigma_mu}
  double leakage = 0.0;   // largest norm of the generator image outside the span, relative
};

inline constexpr int kMaxExactQubits = 3;

/// Restriction of the drift-free k = 2 generator to the diagonal Pauli pairs.
/// Needs qubits (d = 2), n <= kMaxExactQubits, and no drift. Throws
/// NumericalError if the span is not invariant (leakage > 1e-9).
PauliBlock pauli_block_generator(const stoch::NoiseModel& model, const stoch::InteractionGraph& graph);

/// Q^T(mu, nu) for all strings: exp(T * rates).
RMatrix q_table(const PauliBlock& block, double T);
double q_coefficient_exact(const PauliString& mu, const PauliString& nu, const stoch::NoiseModel& model,
                           const stoch::InteractionGraph& graph, double T);

// ---- permutation invariance ------------------------------------------------

struct InvarianceResult {
  bool invariant = false;
  std::vector<int> witness;  // a largest invariant subset of qubits
};

inline constexpr int kMaxExhaustiveQubits = 4;

/// Looks for a subset of at least ceil((1-gamma)n) qubits on which the table
/// is symmetric under every permutation. The table must have all 4^n strings.
/// For n > kMaxExhaustiveQubits a candidate subset must be supplied.
InvarianceResult permutation_invariance_check(const std::map<PauliString, double>& coefficients, double gamma,
                                              const std::optional<std::vector<int>>& candidate = std::nullopt,
                                              double tol = 1e-12);

/// Tr[sigma_mu rho] for every string of an n-qubit state.
std::map<PauliString, double> pauli_coefficients(const CMatrix& rho);

// ---- collision entropy -----------------------------------------------------

/// -log2 Tr[((1 (x) s^{-1/4}) rho (1 (x) s^{-1/4}))^2] with rho on A (x) B.
/// A rank-deficient s throws unless pseudo_inverse_cutoff > 0, in which case
/// eigenvalues below the cutoff are dropped.
double collision_entropy_h2(const CMatrix& rho_ab, const CMatrix& sigma_b, double pseudo_inverse_cutoff = 0.0);

// ---- decoupling -------------------------------------------------------------

enum class DecouplingChannel { partial_trace, identity };

struct DecouplingSpec {
  int system_qubits = 1;       // A, acted on by the evolution
  int environment_qubits = 0;  // E, untouched
  CMatrix rho_ae;              // state on A (x) E, A first
  DecouplingChannel channel = DecouplingChannel::partial_trace;
  int traced_qubits = 0;       // partial trace removes the last traced_qubits of A; the rest is B
  double delta = 0.05;
};

struct DecouplingReport {
  double lhs_mc = 0.0;     // mean of || T(U rho U^dagger) - tau_B (x) rho_E ||_1
  double lhs_sigma = 0.0;  // standard error of that mean
  double rhs_bound = 0.0;  // sqrt(5^{delta n} 2^{-H2(A|B)_tau - H2(A|E)_rho})
  double h2_a_given_b = 0.0;
  double h2_a_given_e = 0.0;
  std::int64_t samples = 0;
  double T = 0.0;
  bool holds = false;      // lhs_mc <= rhs_bound + 3 lhs_sigma
};

DecouplingReport decoupling_check(const DecouplingSpec& spec, const stoch::NoiseModel& model,
                                  const stoch::InteractionGraph& graph, const stoch::TrajectoryConfig& cfg);

nlohmann::ordered_json to_json(const CtrwResult& r);
nlohmann::ordered_json to_json(const DecouplingReport& r);

}  // namespace slh::pauli

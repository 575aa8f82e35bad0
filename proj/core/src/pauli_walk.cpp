#include "slh/pauli_walk.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "slh/errors.hpp"
#include "slh/lie_basis.hpp"
#include "slh/moment_analysis.hpp"
#include "slh/parallel.hpp"

namespace slh::pauli {

using rep::Integer;

PauliString::PauliString(std::vector<int> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InvalidArgument("Pauli string needs at least one qubit");
  for (int l : labels_) {
    if (l < 0 || l > 3) throw InvalidArgument("Pauli labels must be in 0..3");
  }
}

PauliString PauliString::from_index(std::uint64_t index, int n) {
  if (n < 1 || n > 31) throw InvalidArgument("Pauli string length out of range");
  if (index >= (std::uint64_t{1} << (2 * n))) throw InvalidArgument("Pauli string index out of range");
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    labels[i] = static_cast<int>(index & 3u);
    index >>= 2;
  }
  return PauliString(std::move(labels));
}

PauliString PauliString::identity(int n) { return PauliString(std::vector<int>(static_cast<std::size_t>(n), 0)); }

PauliString PauliString::parse(std::string_view text) {
  std::vector<int> labels;
  for (char c : text) {
    switch (c) {
      case 'I': case 'i': case '0': labels.push_back(0); break;
      case 'X': case 'x': case '1': labels.push_back(1); break;
      case 'Y': case 'y': case '2': labels.push_back(2); break;
      case 'Z': case 'z': case '3': labels.push_back(3); break;
      default: throw InvalidArgument("bad Pauli label '" + std::string(1, c) + "'");
    }
  }
  return PauliString(std::move(labels));
}

int PauliString::weight() const {
  return static_cast<int>(std::count_if(labels_.begin(), labels_.end(), [](int l) { return l != 0; }));
}

std::uint64_t PauliString::index() const {
  std::uint64_t idx = 0;
  for (int l : labels_) idx = idx * 4 + static_cast<std::uint64_t>(l);
  return idx;
}

std::string PauliString::str() const {
  std::string s;
  for (int l : labels_) s += "IXYZ"[l];
  return s;
}

CMatrix PauliString::matrix() const {
  CMatrix m = lie::pauli(labels_[0]);
  for (std::size_t i = 1; i < labels_.size(); ++i) m = linalg::kron(m, lie::pauli(labels_[i]));
  return m;
}

// ---- zero chain -----------------------------------------------------------

namespace {

void check_chain_size(int n) {
  if (n < 2) throw InvalidArgument("weight chain needs n >= 2");
}

Integer binomial(int n, int k) {
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Rational zero_chain_dt_limit(int n) {
  check_chain_size(n);
  int worst = 0;
  for (int l = 1; l <= n; ++l) worst = std::max(worst, l * (3 * n - 2 * l - 1));
  return Rational(n * (n - 1), 16 * worst);
}

RationalMatrix zero_chain_matrix_exact(int n, const Rational& dt) {
  check_chain_size(n);
  if (dt <= 0) throw InvalidArgument("dt must be positive");
  if (dt >= zero_chain_dt_limit(n)) {
    throw InvalidArgument("dt must be below " + rep::to_string(zero_chain_dt_limit(n)) +
                          " to keep the zero chain nonnegative");
  }
  const Rational norm(1, n * (n - 1));
  RationalMatrix p(n, std::vector<Rational>(n, Rational(0)));
  for (int l = 1; l <= n; ++l) {
    if (l > 1) p[l - 1][l - 2] = 16 * l * (l - 1) * dt * norm;
    if (l < n) p[l - 1][l] = 48 * l * (n - l) * dt * norm;
    p[l - 1][l - 1] = 1 - jump_rate_exact(l, n) * dt;
  }
  return p;
}

WeightChain zero_chain_matrix(int n, double dt) {
  check_chain_size(n);
  if (!(dt > 0)) throw InvalidArgument("dt must be positive");
  const double limit = static_cast<double>(zero_chain_dt_limit(n));
  if (dt >= limit) {
    throw InvalidArgument("dt must be below " + std::to_string(limit) + " to keep the zero chain nonnegative");
  }
  WeightChain w{n, dt, false, RMatrix::Zero(n, n)};
  const double norm = 1.0 / (n * (n - 1.0));
  for (int l = 1; l <= n; ++l) {
    double off = 0.0;
    if (l > 1) off += w.transition(l - 1, l - 2) = 16.0 * l * (l - 1) * dt * norm;
    if (l < n) off += w.transition(l - 1, l) = 48.0 * l * (n - l) * dt * norm;
    w.transition(l - 1, l - 1) = 1.0 - off;
  }
  return w;
}

std::vector<Rational> stationary_distribution_exact(int n) {
  if (n < 1) throw InvalidArgument("stationary distribution needs n >= 1");
  Integer four_n = 1, three_l = 1;
  for (int i = 0; i < n; ++i) four_n *= 4;
  std::vector<Rational> w;
  for (int l = 1; l <= n; ++l) {
    three_l *= 3;
    w.emplace_back(three_l * binomial(n, l), four_n - 1);
  }
  return w;
}

RVector stationary_distribution(int n) {
  const auto exact = stationary_distribution_exact(n);
  RVector w(n);
  for (int i = 0; i < n; ++i) w(i) = static_cast<double>(exact[i]);
  return w;
}

RationalMatrix accelerated_chain_exact(int n) {
  check_chain_size(n);
  RationalMatrix p(n, std::vector<Rational>(n, Rational(0)));
  for (int l = 1; l <= n; ++l) {
    const int denom = 3 * n - 2 * l - 1;
    if (l > 1) p[l - 1][l - 2] = Rational(l - 1, denom);
    if (l < n) p[l - 1][l] = Rational(3 * (n - l), denom);
  }
  return p;
}

RMatrix accelerated_chain_matrix(int n) { return to_double(accelerated_chain_exact(n)); }

Rational jump_rate_exact(int weight, int n) {
  check_chain_size(n);
  if (weight < 1 || weight > n) throw InvalidArgument("weight must lie in 1..n");
  return Rational(16 * weight * (3 * n - 2 * weight - 1), n * (n - 1));
}

double jump_rate(int weight, int n) { return static_cast<double>(jump_rate_exact(weight, n)); }

RMatrix to_double(const RationalMatrix& m) {
  const Index r = static_cast<Index>(m.size());
  RMatrix out(r, r == 0 ? 0 : static_cast<Index>(m.front().size()));
  for (Index i = 0; i < out.rows(); ++i)
    for (Index j = 0; j < out.cols(); ++j) out(i, j) = static_cast<double>(m[i][j]);
  return out;
}

// ---- continuous-time walk --------------------------------------------------

int default_target_weight(int n, double delta) {
  const int t = static_cast<int>(std::floor((0.75 - delta) * n));
  return std::clamp(t, 1, n);
}

namespace {

struct CtrwPartial {
  std::vector<std::int64_t> final_counts;
  std::vector<double> passage;
  RMatrix jump_counts;
  std::vector<CtrwJump> jumps;
};

}  // namespace

CtrwResult simulate_ctrw(const CtrwConfig& cfg) {
  const int n = cfg.n;
  check_chain_size(n);
  if (cfg.start_weight < 1 || cfg.start_weight > n) throw InvalidArgument("start weight must lie in 1..n");
  if (!(cfg.T >= 0)) throw InvalidArgument("T must be nonnegative");
  if (cfg.trajectories < 1) throw InvalidArgument("trajectories must be >= 1");
  const int target = cfg.target_weight.value_or(default_target_weight(n, cfg.delta));
  if (target < 1 || target > n) throw InvalidArgument("target weight must lie in 1..n");
  const bool upward = cfg.start_weight <= target;

  std::vector<double> rate(static_cast<std::size_t>(n + 1)), forward(static_cast<std::size_t>(n + 1));
  for (int l = 1; l <= n; ++l) {
    rate[l] = jump_rate(l, n);
    forward[l] = static_cast<double>(Rational(3 * (n - l), 3 * n - 2 * l - 1));
  }

  auto partials = chunked_map<CtrwPartial>(cfg.trajectories, 256, [&](std::int64_t begin, std::int64_t end) {
    CtrwPartial p{std::vector<std::int64_t>(static_cast<std::size_t>(n), 0), {}, RMatrix::Zero(n, n), {}};
    p.passage.reserve(static_cast<std::size_t>(end - begin));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (std::int64_t tr = begin; tr < end; ++tr) {
      auto rng = stoch::trajectory_rng(cfg.seed, static_cast<std::uint64_t>(tr));
      const bool record = tr < cfg.record_trajectories;
      int l = cfg.start_weight;
      double t = 0.0;
      double passage = upward ? (l >= target ? 0.0 : -1.0) : (l <= target ? 0.0 : -1.0);
      bool placed = false;
      std::int64_t jump = 0;
      while (!(placed && passage >= 0.0)) {
        const double hold = std::exponential_distribution<double>(rate[l])(rng);
        if (!placed && t + hold > cfg.T) {
          ++p.final_counts[l - 1];
          placed = true;
        }
        const bool inside = t < cfg.T;
        if (record && inside) p.jumps.push_back({tr, jump, l, hold});
        t += hold;
        const int next = unif(rng) < forward[l] ? l + 1 : l - 1;
        if (t <= cfg.T) p.jump_counts(l - 1, next - 1) += 1.0;
        l = next;
        ++jump;
        if (passage < 0.0 && (upward ? l >= target : l <= target)) passage = t;
      }
      p.passage.push_back(passage);
    }
    return p;
  });

  CtrwResult r{n, cfg.T, target, RVector::Zero(n), {}, RMatrix::Zero(n, n), {}};
  r.passage_times.reserve(static_cast<std::size_t>(cfg.trajectories));
  for (auto& p : partials) {
    for (int i = 0; i < n; ++i) r.weight_distribution(i) += static_cast<double>(p.final_counts[i]);
    r.passage_times.insert(r.passage_times.end(), p.passage.begin(), p.passage.end());
    r.jump_counts += p.jump_counts;
    r.jumps.insert(r.jumps.end(), p.jumps.begin(), p.jumps.end());
  }
  r.weight_distribution /= static_cast<double>(cfg.trajectories);
  return r;
}

// ---- label chains ----------------------------------------------------------

namespace {

using LocalOutcome = std::vector<std::pair<std::pair<int, int>, double>>;

int shift(int label, int by) { return (label - 1 + by) % 3 + 1; }

LocalOutcome randomize_pair(int mu, int nu) {
  LocalOutcome out;
  if (mu == 0 && nu == 0) return {{{0, 0}, 1.0}};
  if (nu == 0) {
    for (int a = 1; a <= 3; ++a) out.push_back({{a, 0}, 1.0 / 3});
  } else if (mu == 0) {
    for (int a = 1; a <= 3; ++a) out.push_back({{0, a}, 1.0 / 3});
  } else {
    for (int a = 1; a <= 3; ++a) {
      out.push_back({{a, nu}, 1.0 / 6});
      out.push_back({{mu, a}, 1.0 / 6});
    }
  }
  return out;
}

// The (0, nu) case mirrors the (mu, 0) case site for site.
LocalOutcome transpose_pair(int mu, int nu) {
  LocalOutcome out;
  if (mu == 0 && nu == 0) return {{{0, 0}, 1.0}};
  if (nu == 0) {
    for (int a = 1; a <= 3; ++a) {
      out.push_back({{shift(mu, 1), a}, 1.0 / 6});
      out.push_back({{shift(mu, 2), a}, 1.0 / 6});
    }
  } else if (mu == 0) {
    for (int a = 1; a <= 3; ++a) {
      out.push_back({{a, shift(nu, 1)}, 1.0 / 6});
      out.push_back({{a, shift(nu, 2)}, 1.0 / 6});
    }
  } else {
    out.push_back({{shift(mu, 1), nu}, 1.0 / 12});
    out.push_back({{shift(mu, 2), nu}, 1.0 / 12});
    out.push_back({{mu, shift(nu, 1)}, 1.0 / 12});
    out.push_back({{mu, shift(nu, 2)}, 1.0 / 12});
    out.push_back({{shift(mu, 1), 0}, 1.0 / 6});
    out.push_back({{shift(mu, 2), 0}, 1.0 / 6});
    out.push_back({{0, shift(nu, 1)}, 1.0 / 6});
    out.push_back({{0, shift(nu, 2)}, 1.0 / 6});
  }
  return out;
}

LocalOutcome local_rule(int mu, int nu, LabelChain which) {
  switch (which) {
    case LabelChain::R: return randomize_pair(mu, nu);
    case LabelChain::L: return transpose_pair(mu, nu);
    case LabelChain::A: {
      LocalOutcome out;
      for (auto [ab, w] : randomize_pair(mu, nu)) out.push_back({ab, w / 3});
      for (auto [ab, w] : transpose_pair(mu, nu)) out.push_back({ab, 2 * w / 3});
      return out;
    }
  }
  return {};
}

template <class Emit>
void apply_to_string(const PauliString& s, LabelChain which, double mass, Emit&& emit) {
  const int n = s.n();
  const double edge_weight = 2.0 / (n * (n - 1.0));
  std::vector<int> labels = s.labels();
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      const int mu = labels[j], nu = labels[k];
      for (const auto& [ab, w] : local_rule(mu, nu, which)) {
        labels[j] = ab.first;
        labels[k] = ab.second;
        emit(labels, mass * edge_weight * w);
      }
      labels[j] = mu;
      labels[k] = nu;
    }
  }
}

}  // namespace

StringDistribution apply_label_chains(const StringDistribution& dist, LabelChain which) {
  StringDistribution out;
  int n = -1;
  for (const auto& [s, p] : dist) {
    if (n < 0) n = s.n();
    if (s.n() != n) throw InvalidArgument("strings in a distribution must have the same length");
    if (n < 2) throw InvalidArgument("label chains need n >= 2");
    apply_to_string(s, which, p, [&](const std::vector<int>& labels, double m) { out[PauliString(labels)] += m; });
  }
  return out;
}

RMatrix label_chain_matrix(int n, LabelChain which) {
  if (n < 2 || n > 5) throw GuardError("label chain matrix limited to 2 <= n <= 5");
  const Index size = linalg::ipow(4, n);
  RMatrix m = RMatrix::Zero(size, size);
  for (Index i = 0; i < size; ++i) {
    const auto s = PauliString::from_index(static_cast<std::uint64_t>(i), n);
    apply_to_string(s, which, 1.0, [&](const std::vector<int>& labels, double w) {
      std::uint64_t idx = 0;
      for (int l : labels) idx = idx * 4 + static_cast<std::uint64_t>(l);
      m(i, static_cast<Index>(idx)) += w;
    });
  }
  return m;
}

RMatrix weight_marginal(const RMatrix& string_chain, int n, double tol) {
  const Index size = linalg::ipow(4, n);
  if (string_chain.rows() != size || string_chain.cols() != size) throw InvalidArgument("string chain has the wrong size");
  std::vector<int> weight(static_cast<std::size_t>(size));
  for (Index i = 0; i < size; ++i) weight[i] = PauliString::from_index(static_cast<std::uint64_t>(i), n).weight();
  RMatrix out = RMatrix::Zero(n, n);
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  for (Index i = 0; i < size; ++i) {
    const int wi = weight[i];
    if (wi == 0) continue;
    RVector row = RVector::Zero(n + 1);
    for (Index j = 0; j < size; ++j) row(weight[j]) += string_chain(i, j);
    if (std::abs(row(0)) > tol) throw NumericalError("string chain leaks mass to the identity string");
    if (!seen[wi]) {
      out.row(wi - 1) = row.tail(n).transpose();
      seen[wi] = true;
    } else if ((out.row(wi - 1).transpose() - row.tail(n)).cwiseAbs().maxCoeff() > tol) {
      throw NumericalError("strings of weight " + std::to_string(wi) + " have different weight transitions");
    }
  }
  return out;
}

// ---- exact second-moment coefficients --------------------------------------

PauliBlock pauli_block_generator(const stoch::NoiseModel& model, const stoch::InteractionGraph& graph) {
  if (graph.d != 2) throw InvalidArgument("Pauli coefficients need qubits (d = 2)");
  if (graph.n > kMaxExactQubits) {
    throw GuardError("exact Pauli coefficients limited to n <= " + std::to_string(kMaxExactQubits));
  }
  if (!model.drift.empty()) throw InvalidArgument("Pauli coefficients need a drift-free model");
  const int n = graph.n;
  const Index dim = graph.dimension();
  const Index side = dim * dim;  // sigma (x) sigma is side x side
  const Index strings = linalg::ipow(4, n);
  const moment::SparseMatrix g = moment::global_generator_sparse(model, graph, 2, false);

  // vect(sigma_mu (x) sigma_mu): one nonzero per row of the side x side matrix.
  std::vector<std::vector<std::pair<Index, Complex>>> vecs(static_cast<std::size_t>(strings));
  for (Index s = 0; s < strings; ++s) {
    const CMatrix p = PauliString::from_index(static_cast<std::uint64_t>(s), n).matrix();
    const CMatrix pp = linalg::kron(p, p);
    auto& v = vecs[s];
    v.reserve(static_cast<std::size_t>(side));
    for (Index r = 0; r < side; ++r)
      for (Index c = 0; c < side; ++c)
        if (pp(r, c) != Complex(0.0, 0.0)) v.emplace_back(r * side + c, pp(r, c));
  }
  const double norm = static_cast<double>(side);  // <v_mu, v_mu> = 4^n
  PauliBlock block{RMatrix::Zero(strings, strings), 0.0};
  for (Index mu = 0; mu < strings; ++mu) {
    CVector v = CVector::Zero(side * side);
    for (const auto& [i, x] : vecs[mu]) v(i) = x;
    CVector w = g * v;
    const double wnorm = w.norm();
    for (Index nu = 0; nu < strings; ++nu) {
      Complex c = 0.0;
      for (const auto& [i, x] : vecs[nu]) c += std::conj(x) * w(i);
      c /= norm;
      if (std::abs(c.imag()) > 1e-9 * std::max(1.0, wnorm)) throw NumericalError("Pauli block rates are not real");
      block.rates(mu, nu) = c.real();
      for (const auto& [i, x] : vecs[nu]) w(i) -= c * x;
    }
    block.leakage = std::max(block.leakage, w.norm() / std::max(1.0, wnorm));
  }
  if (block.leakage > 1e-9) throw NumericalError("diagonal Pauli pairs do not span an invariant subspace");
  return block;
}

RMatrix q_table(const PauliBlock& block, double T) {
  if (!(T >= 0)) throw InvalidArgument("T must be nonnegative");
  if (T == 0.0) return RMatrix::Identity(block.rates.rows(), block.rates.cols());
  const RMatrix sym = 0.5 * (block.rates + block.rates.transpose());
  if ((sym - block.rates).cwiseAbs().maxCoeff() > 1e-9) return (T * block.rates).exp();
  Eigen::SelfAdjointEigenSolver<RMatrix> es(sym);
  const RVector decay = (T * es.eigenvalues()).array().exp();
  return es.eigenvectors() * decay.asDiagonal() * es.eigenvectors().transpose();
}

double q_coefficient_exact(const PauliString& mu, const PauliString& nu, const stoch::NoiseModel& model,
                           const stoch::InteractionGraph& graph, double T) {
  if (mu.n() != graph.n || nu.n() != graph.n) throw InvalidArgument("string length differs from the graph size");
  const RMatrix q = q_table(pauli_block_generator(model, graph), T);
  return q(static_cast<Index>(mu.index()), static_cast<Index>(nu.index()));
}

// ---- permutation invariance ------------------------------------------------

namespace {

bool symmetric_on(const std::map<PauliString, double>& table, const std::vector<int>& subset, double tol) {
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      for (const auto& [s, v] : table) {
        std::vector<int> labels = s.labels();
        std::swap(labels[subset[a]], labels[subset[b]]);
        if (std::abs(table.at(PauliString(labels)) - v) > tol) return false;
      }
    }
  }
  return true;
}

}  // namespace

InvarianceResult permutation_invariance_check(const std::map<PauliString, double>& coefficients, double gamma,
                                              const std::optional<std::vector<int>>& candidate, double tol) {
  if (coefficients.empty()) throw InvalidArgument("coefficient table is empty");
  if (!(gamma >= 0 && gamma <= 1)) throw InvalidArgument("gamma must lie in [0, 1]");
  const int n = coefficients.begin()->first.n();
  for (const auto& [s, v] : coefficients)
    if (s.n() != n) throw InvalidArgument("coefficient table mixes string lengths");
  if (static_cast<Index>(coefficients.size()) != linalg::ipow(4, n)) {
    throw InvalidArgument("coefficient table is incomplete: expected all 4^n strings");
  }
  const int needed = static_cast<int>(std::ceil((1.0 - gamma) * n - 1e-9));

  if (candidate) {
    for (int q : *candidate)
      if (q < 0 || q >= n) throw InvalidArgument("candidate subset references a qubit out of range");
    InvarianceResult r;
    if (symmetric_on(coefficients, *candidate, tol)) {
      r.witness = *candidate;
      r.invariant = static_cast<int>(candidate->size()) >= needed;
    }
    return r;
  }
  if (n > kMaxExhaustiveQubits) {
    throw GuardError("exhaustive subset search limited to n <= " + std::to_string(kMaxExhaustiveQubits) +
                     "; supply a candidate subset");
  }
  for (int size = n; size >= 0; --size) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != size) continue;
      std::vector<int> subset;
      for (int q = 0; q < n; ++q)
        if (mask & (1u << q)) subset.push_back(q);
      if (symmetric_on(coefficients, subset, tol)) return InvarianceResult{size >= needed, subset};
    }
  }
  return {};
}

std::map<PauliString, double> pauli_coefficients(const CMatrix& rho) {
  const Index dim = rho.rows();
  int n = 0;
  while ((Index{1} << n) < dim) ++n;
  if ((Index{1} << n) != dim || rho.cols() != dim || n < 1) throw InvalidArgument("state must be an n-qubit matrix");
  if (n > 6) throw GuardError("Pauli coefficient tables limited to n <= 6");
  std::map<PauliString, double> table;
  const Index strings = linalg::ipow(4, n);
  for (Index s = 0; s < strings; ++s) {
    const auto p = PauliString::from_index(static_cast<std::uint64_t>(s), n);
    table.emplace(p, (p.matrix() * rho).trace().real());
  }
  return table;
}

// ---- collision entropy -----------------------------------------------------

double collision_entropy_h2(const CMatrix& rho_ab, const CMatrix& sigma_b, double pseudo_inverse_cutoff) {
  const Index db = sigma_b.rows();
  if (db < 1 || sigma_b.cols() != db) throw InvalidArgument("sigma_B must be square");
  if (rho_ab.rows() != rho_ab.cols() || rho_ab.rows() % db != 0) throw InvalidArgument("rho_AB does not factor over B");
  if (linalg::hermiticity_error(rho_ab) > 1e-10) throw InvalidArgument("rho_AB is not Hermitian");
  if (linalg::hermiticity_error(sigma_b) > 1e-10) throw InvalidArgument("sigma_B is not Hermitian");
  const Index da = rho_ab.rows() / db;
  const auto eig = linalg::eigh(0.5 * (sigma_b + sigma_b.adjoint()));
  RVector w(db);
  const double full_rank_tol = 1e-12;
  for (Index i = 0; i < db; ++i) {
    const double v = eig.values(i);
    if (v > std::max(full_rank_tol, pseudo_inverse_cutoff)) {
      w(i) = std::pow(v, -0.25);
    } else if (pseudo_inverse_cutoff > 0) {
      w(i) = 0.0;
    } else {
      throw InvalidArgument("sigma_B is rank deficient; pass a pseudo-inverse cutoff");
    }
  }
  const CMatrix s = eig.vectors * w.asDiagonal() * eig.vectors.adjoint();
  const CMatrix lift = linalg::kron(CMatrix::Identity(da, da), s);
  const CMatrix m = lift * rho_ab * lift;
  const double purity = (m * m).trace().real();
  if (!(purity > 0)) throw NumericalError("collision entropy of a zero operator");
  return -std::log2(purity);
}

nlohmann::ordered_json to_json(const CtrwResult& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["T"] = r.T;
  j["target_weight"] = r.target_weight;
  j["weight_distribution"] = std::vector<double>(r.weight_distribution.data(),
                                                  r.weight_distribution.data() + r.weight_distribution.size());
  std::vector<double> sorted = r.passage_times;
  std::sort(sorted.begin(), sorted.end());
  double median = 0.0;
  if (!sorted.empty()) {
    const std::size_t mid = sorted.size() / 2;
    median = sorted.size() % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
  }
  j["passage_median"] = median;
  double mean = 0.0;
  for (double t : sorted) mean += t;
  j["passage_mean"] = sorted.empty() ? 0.0 : mean / static_cast<double>(sorted.size());
  return j;
}

}  // namespace slh::pauli

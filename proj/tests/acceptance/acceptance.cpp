// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "slh/dissipative.hpp"
#include "slh/moment_analysis.hpp"
#include "slh/pauli_walk.hpp"
#include "slh/rep_theory.hpp"
#include "test_support.hpp"

using namespace slh;
using stoch::GraphKind;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

stoch::NoiseModel pauli_model(double a = 32.0) {
  stoch::NoiseModel m;
  m.basis = lie::build_basis(lie::BasisKind::pauli_pair, 4);
  m.a = a;
  return m;
}

CMatrix ket0(Index dim) {
  CMatrix rho = CMatrix::Zero(dim, dim);
  rho(0, 0) = 1.0;
  return rho;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------

void casimir_gap(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int k = 1; k <= 5; ++k) {
    const auto r = rep::casimir_spectrum_report(k, 4);
    o.require(r.gap == 1, "gap at k=" + std::to_string(k) + " is " + rep::to_string(r.gap));
    o.require(r.divisibility_ok, "divisibility at k=" + std::to_string(k));
  }
  const double elapsed = seconds_since(t0);
  o.require(elapsed < 10.0, "runtime");
  o.detail << "N=4 k=1..5 gap 1, " << elapsed << " s";
}

void oracle_spectra(Outcome& o) {
  for (int k = 1; k <= 2; ++k) {
    // prediction straight from the decomposition: -16 c2 with multiplicity mult * dim
    std::map<double, long> predicted;
    const auto decomposition = rep::decompose_pi_kk(k, 4);
    for (const auto& [label, mult] : decomposition.entries()) {
      const double value = -16.0 * static_cast<double>(rep::casimir_eigenvalue(label));
      predicted[value] += static_cast<long>(mult * rep::weyl_dimension(label));
    }
    const auto clusters = linalg::cluster_values(linalg::eigvalsh(moment::local_generator(pauli_model(), k).matrix), 1e-8);
    o.require(clusters.size() == predicted.size(), "cluster count at k=" + std::to_string(k));
    auto it = predicted.begin();
    for (std::size_t i = 0; i < clusters.size() && it != predicted.end(); ++i, ++it) {
      o.require(std::abs(clusters[i].first - it->first) <= 1e-8 * std::max(1.0, std::abs(it->first)),
                "eigenvalue " + std::to_string(clusters[i].first));
      o.require(clusters[i].second == it->second, "multiplicity of " + std::to_string(it->first));
    }
    if (k == 2) {
      const std::vector<std::pair<double, long>> exact{{-40, 84}, {-32, 90}, {-24, 20}, {-16, 60}, {0, 2}};
      o.require(clusters.size() == exact.size(), "k=2 cluster count");
      for (std::size_t i = 0; i < std::min(clusters.size(), exact.size()); ++i) {
        o.require(std::abs(clusters[i].first - exact[i].first) <= 1e-8 && clusters[i].second == exact[i].second,
                  "k=2 cluster " + std::to_string(exact[i].first));
      }
    }
  }
  o.detail << "k=1 and k=2 spectra match; k=2 = {0x2, -16x60, -24x20, -32x90, -40x84}";
}

void two_qubit_rate(Outcome& o) {
  const auto g = moment::global_generator(pauli_model(), stoch::build_graph(GraphKind::line, 2), 2, false);
  const auto haar = moment::haar_projector(4, 2);
  double worst = 0.0;
  for (double T : {0.05, 0.1, 0.2, 0.5}) {
    const double dist = moment::tpe_distance(moment::moment_exact(g, T), haar);
    worst = std::max(worst, std::abs(dist - std::exp(-16.0 * T)));
  }
  o.require(worst <= 1e-9, "distance differs from exp(-16T)");
  o.detail << "max |dist - exp(-16T)| = " << worst;
}

void pauli_block_spectrum(Outcome& o) {
  const auto model = stoch::decoupling_preset(2);
  const auto graph = stoch::build_graph(GraphKind::line, 2);
  const double dt = 1e-3;
  const auto block = pauli::pauli_block_generator(model, graph);
  Eigen::EigenSolver<RMatrix> es(RMatrix::Identity(16, 16) + dt * block.rates, false);
  std::vector<double> ev;
  for (Index i = 0; i < 16; ++i) {
    o.require(std::abs(es.eigenvalues()(i).imag()) < 1e-12, "complex eigenvalue in the block");
    ev.push_back(es.eigenvalues()(i).real());
  }
  auto count = [&](double target) {
    return std::count_if(ev.begin(), ev.end(), [&](double x) { return std::abs(x - target) <= 1e-9 * target; });
  };
  o.require(count(1.0) == 2, "eigenvalue 1 twice");
  o.require(count(1.0 - 40 * dt) == 9, "1-40dt nine times");
  o.require(count(1.0 - 24 * dt) == 5, "1-24dt five times");
  const RVector full = linalg::eigvalsh(moment::global_generator(model, graph, 2, false).matrix);
  double second = -1e300;
  for (Index i = 0; i < full.size(); ++i)
    if (std::abs(full(i)) > 1e-9) second = std::max(second, 1.0 + dt * full(i));
  o.require(second <= (1.0 - 16 * dt) * (1.0 + 1e-9), "second eigenvalue above 1-16dt");
  o.detail << "block {1x2, (1-40dt)x9, (1-24dt)x5}; second eigenvalue " << second;
}

void zero_chain(Outcome& o) {
  for (int n = 2; n <= 20; ++n) {
    const auto w = pauli::stationary_distribution_exact(n);
    const auto p = pauli::zero_chain_matrix_exact(n, pauli::zero_chain_dt_limit(n) / 2);
    for (int j = 0; j < n; ++j) {
      pauli::Rational x = 0;
      for (int i = 0; i < n; ++i) x += w[i] * p[i][j];
      o.require(x == w[j], "fixed point at n=" + std::to_string(n));
    }
    for (int l = 1; l < n; ++l)
      o.require(w[l - 1] * p[l - 1][l] == w[l] * p[l][l - 1], "detailed balance at n=" + std::to_string(n));
  }
  const int n = 8;
  const auto r = pauli::simulate_ctrw({n, 1, 20.0, 100000, 2024});
  const double tv = 0.5 * (r.weight_distribution - pauli::stationary_distribution(n)).cwiseAbs().sum();
  o.require(tv < 0.05, "TV distance");
  const double p_fit = slh::testing::chi_square_rows_p(r.jump_counts, pauli::accelerated_chain_matrix(n));
  o.require(p_fit > 0.01, "embedded jump fit");
  o.detail << "exact fixed point and balance n<=20; TV " << tv << "; jump fit p " << p_fit;
}

void lindblad_cross_check(Outcome& o) {
  const auto model = pauli_model();
  const auto graph = stoch::build_graph(GraphKind::line, 2);
  const auto l = diss::lindblad_generator(diss::lindblad_from_model(model, graph));
  const double gen_diff = (l.matrix - moment::global_generator(model, graph, 1, true).matrix).cwiseAbs().maxCoeff();
  o.require(gen_diff <= 1e-10, "generator mismatch");
  const double dt = 1e-3, T = 0.5;
  const auto avg = diss::mc_state_average(model, graph, ket0(4), {dt, T, 6, 10000}, true);
  const auto cmp = diss::compare_to_master(avg, diss::evolve_master(l, ket0(4), T), dt, 200, 6);
  o.require(cmp.trace_distance <= 3.0 * cmp.bootstrap_sigma + 5e-3, "trace distance");
  o.detail << "generator diff " << gen_diff << "; trace distance " << cmp.trace_distance << " vs bound "
           << 3.0 * cmp.bootstrap_sigma + 5e-3;
}

void kernel_commutant(Outcome& o) {
  struct Case {
    int n, k;
  };
  double worst = 0.0;
  for (const auto [n, k] : {Case{2, 1}, Case{2, 2}, Case{3, 1}}) {
    const auto graph = stoch::build_graph(GraphKind::complete, n);
    const auto eig = linalg::eigh(moment::global_generator(pauli_model(), graph, k, false).matrix);
    std::vector<Index> kernel;
    for (Index i = 0; i < eig.values.size(); ++i)
      if (std::abs(eig.values(i)) < moment::kKernelTolerance) kernel.push_back(i);
    const CMatrix q = eig.vectors(Eigen::placeholders::all, kernel);
    const double s = linalg::max_principal_angle_sine(q, moment::haar_range(graph.dimension(), k));
    worst = std::max(worst, s);
    o.require(s < 1e-7, "n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  o.detail << "largest principal angle sine " << worst;
}

void driving_invariance(Outcome& o) {
  std::mt19937_64 rng(31);
  double worst = 0.0;
  for (int k = 1; k <= 2; ++k) {
    auto m = pauli_model();
    m.drift[{0, 1}] = slh::testing::random_hermitian(4, rng);
    const auto graph = stoch::build_graph(GraphKind::line, 2);
    const auto haar = moment::haar_projector(4, k);
    const RVector with = moment::moment_deviation_singular_values(moment::global_generator(m, graph, k, true), haar, 0.2);
    const RVector without =
        moment::moment_deviation_singular_values(moment::global_generator(m, graph, k, false), haar, 0.2);
    worst = std::max(worst, (with - without).cwiseAbs().maxCoeff());
  }
  o.require(worst <= 1e-6, "singular values differ");
  o.detail << "max singular value difference " << worst;
}

void gap_concavity(Outcome& o) {
  auto averaged_gap = [](GraphKind kind, int n) {
    const auto graph = stoch::build_graph(kind, n);
    auto g = moment::global_generator(pauli_model(), graph, 1, false);
    g.matrix /= static_cast<double>(graph.edges.size());
    return moment::spectral_gap(g).gap;
  };
  for (int n : {3, 4}) {
    const double complete = averaged_gap(GraphKind::complete, n), line = averaged_gap(GraphKind::line, n);
    o.require(complete >= line - 1e-10, "n=" + std::to_string(n));
    o.detail << "n=" << n << ": complete " << complete << " line " << line << "; ";
  }
}

void q_limits(Outcome& o) {
  const auto block = pauli::pauli_block_generator(stoch::decoupling_preset(2), stoch::build_graph(GraphKind::line, 2));
  o.require(pauli::q_table(block, 0.0) == RMatrix::Identity(16, 16), "Q^0 is not exactly the identity");
  const RMatrix q = pauli::q_table(block, 2.0);
  double worst_limit = 0.0;
  for (int mu = 1; mu < 16; ++mu)
    for (int nu = 1; nu < 16; ++nu) worst_limit = std::max(worst_limit, std::abs(q(mu, nu) - 1.0 / 15.0));
  o.require(worst_limit <= 1e-6, "limit 1/15");
  double worst_row = 0.0;
  for (double T : {0.0, 0.01, 0.1, 0.5, 2.0})
    worst_row = std::max(worst_row, (pauli::q_table(block, T).rowwise().sum().array() - 1.0).abs().maxCoeff());
  o.require(worst_row <= 1e-9, "row sums");
  o.detail << "Q^0 exact; |Q^2 - 1/15| <= " << worst_limit << "; row sum error " << worst_row;
}

void monte_carlo_rate(Outcome& o) {
  const auto graph = stoch::build_graph(GraphKind::line, 2);
  const auto exact = moment::moment_exact(moment::global_generator(pauli_model(), graph, 1, false), 0.1);
  std::vector<double> errors;
  for (std::int64_t samples : {500, 2000, 8000}) {
    const auto est = moment::moment_monte_carlo(pauli_model(), graph, 1, {1e-3, 0.1, 11, samples});
    errors.push_back((est.superop.matrix - exact.matrix).norm());
  }
  for (std::size_t i = 1; i < errors.size(); ++i) {
    const double ratio = errors[i] / errors[i - 1];
    o.require(std::abs(ratio - 0.5) <= 0.25 * 0.5, "ratio " + std::to_string(ratio));
    o.detail << "error " << errors[i - 1] << " -> " << errors[i] << " (x" << ratio << "); ";
  }
}

void formula_fidelity(Outcome& o) {
  // 850 ceil(log_2 8)^2 2^2 2^5 2^(3.1 / ln 2) ln(e) / 32
  const double hand = 850.0 * 3.0 * 3.0 * 4.0 * 32.0 * std::pow(2.0, 3.1 / std::numbers::ln2) * 1.0 / 32.0;
  const double got = moment::tpe_time_bound(2, 2, std::exp(-1.0), 32.0);
  const double rel = std::abs(got - hand) / hand;
  o.require(rel <= 1e-12, "relative error");
  o.detail << "T = " << got << " (relative error " << rel << ")";
}

void decoupling(Outcome& o) {
  CVector psi = CVector::Zero(16);
  psi(0b0000) = psi(0b1001) = 1.0 / std::sqrt(2.0);
  pauli::DecouplingSpec spec;
  spec.system_qubits = 3;
  spec.environment_qubits = 1;
  spec.rho_ae = slh::testing::pure_state(psi);
  spec.traced_qubits = 2;
  const double n = 3.0;
  const double T = n * std::log(n) * std::log(n);
  const auto r = pauli::decoupling_check(spec, stoch::decoupling_preset(3), stoch::build_graph(GraphKind::complete, 3),
                                         {1e-2, T, 13, 10000});
  o.require(r.lhs_mc <= r.rhs_bound + 3.0 * r.lhs_sigma, "inequality");
  o.detail << "statistical: lhs " << r.lhs_mc << " +- " << r.lhs_sigma << " <= rhs " << r.rhs_bound << " at T "
           << r.T;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"casimir gap independence", casimir_gap},
      {"oracle equivalence of spectra", oracle_spectra},
      {"two-qubit design rate", two_qubit_rate},
      {"Pauli block spectrum", pauli_block_spectrum},
      {"zero chain", zero_chain},
      {"Lindblad cross-validation", lindblad_cross_check},
      {"kernel equals commutant", kernel_commutant},
      {"driving invariance", driving_invariance},
      {"gap concavity", gap_concavity},
      {"Q^T limits", q_limits},
      {"Monte Carlo convergence", monte_carlo_rate},
      {"time bound formula", formula_fidelity},
      {"decoupling inequality", decoupling},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "[exception: " << e.what() << "]";
    }
    if (!o.pass) ++failures;
    std::printf("%s %2zu %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.str().c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

#include "slh/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include "slh/dissipative.hpp"
#include "slh/errors.hpp"
#include "slh/moment_analysis.hpp"
#include "slh/parallel.hpp"
#include "slh/pauli_walk.hpp"
#include "slh/rep_theory.hpp"

#ifndef SLH_VERSION
#define SLH_VERSION "0.0.0"
#endif

namespace slh::cli {

using io::Json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Kind { integer, seed, real, text, flag };

struct Param {
  std::string name;
  Kind kind;
  Json fallback;
  std::string help;
};

struct Command {
  std::string name;  // "gap", "chain ctrw", ...
  std::string help;
  std::vector<Param> params;
  bool stochastic = false;
  std::function<Json(const Json&)> body;
};

// Fields that steer output only; they are not part of the experiment.
bool is_output_field(const std::string& name) { return name == "out" || name == "format" || name == "threads"; }

// ---- parameter conversion ---------------------------------------------------

Json parse_flag_value(const Param& p, const std::string& text) {
  auto fail = [&](const char* what) { return UsageError("--" + p.name + ": expected " + what + ", got '" + text + "'"); };
  switch (p.kind) {
    case Kind::integer: {
      long long v = 0;
      const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || ptr != text.data() + text.size()) throw fail("an integer");
      return v;
    }
    case Kind::seed: {
      unsigned long long v = 0;
      const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || ptr != text.data() + text.size()) throw fail("an unsigned 64-bit integer");
      return v;
    }
    case Kind::real: {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(text, &used);
      } catch (const std::exception&) {
        throw fail("a number");
      }
      if (used != text.size() || !std::isfinite(v)) throw fail("a finite number");
      return v;
    }
    case Kind::flag:
      if (text == "true" || text == "1") return true;
      if (text == "false" || text == "0") return false;
      throw fail("true or false");
    case Kind::text:
      return text;
  }
  return nullptr;
}

Json check_config_value(const Param& p, const Json& v) {
  auto fail = [&](const char* what) { return UsageError("config field '" + p.name + "' must be " + what); };
  switch (p.kind) {
    case Kind::integer:
      if (!v.is_number_integer()) throw fail("an integer");
      return v;
    case Kind::seed:
      if (!v.is_number_unsigned()) throw fail("an unsigned integer");
      return v;
    case Kind::real:
      if (!v.is_number()) throw fail("a number");
      return v.get<double>();
    case Kind::flag:
      if (!v.is_boolean()) throw fail("a boolean");
      return v;
    case Kind::text:
      if (!v.is_string()) throw fail("a string");
      return v;
  }
  return v;
}

// ---- parameter access --------------------------------------------------------

int get_int(const Json& p, const std::string& key) { return p.at(key).get<int>(); }
double get_real(const Json& p, const std::string& key) { return p.at(key).get<double>(); }
std::string get_text(const Json& p, const std::string& key) { return p.at(key).get<std::string>(); }
std::uint64_t get_seed(const Json& p) { return p.at("seed").get<std::uint64_t>(); }

void require_at_least(const Json& p, const std::string& key, double lo) {
  if (!(p.at(key).get<double>() >= lo)) {
    throw UsageError("field '" + key + "' must be at least " + io::format_double(lo));
  }
}

void require_positive(const Json& p, const std::string& key) {
  if (!(p.at(key).get<double>() > 0)) throw UsageError("field '" + key + "' must be positive");
}

stoch::NoiseModel model_for(int d, double a) {
  if (d < 2) throw UsageError("field 'd' must be at least 2");
  stoch::NoiseModel m;
  m.basis = lie::build_basis(d == 2 ? lie::BasisKind::pauli_pair : lie::BasisKind::gell_mann, d * d);
  m.a = a;
  return m;
}

stoch::InteractionGraph graph_for(const Json& p, int d = 2) {
  const std::string kind = get_text(p, "graph");
  if (kind != "line" && kind != "complete") throw UsageError("field 'graph' must be 'line' or 'complete'");
  require_at_least(p, "n", 2);
  return stoch::build_graph(stoch::graph_kind_from_string(kind), get_int(p, "n"), d);
}

Json vector_json(const RVector& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

Json matrix_json(const RMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) rows.push_back(vector_json(m.row(i).transpose()));
  return rows;
}

Json rational_matrix_json(const pauli::RationalMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(rep::to_string(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

CMatrix ket0(Index dim) {
  CMatrix rho = CMatrix::Zero(dim, dim);
  rho(0, 0) = 1.0;
  return rho;
}

// ---- commands ----------------------------------------------------------------

Json cmd_rep(const Json& p) {
  require_at_least(p, "N", 2);
  require_at_least(p, "k", 1);
  return rep::to_json(rep::casimir_spectrum_report(get_int(p, "k"), get_int(p, "N")));
}

Json cmd_gap(const Json& p) {
  require_at_least(p, "k", 1);
  require_positive(p, "a");
  const int d = get_int(p, "d");
  const auto model = model_for(d, get_real(p, "a"));
  const auto g = moment::global_generator(model, graph_for(p, d), get_int(p, "k"), false);
  Json j = moment::to_json(moment::spectral_gap(g));
  j["generator_dim"] = g.matrix.rows();
  return j;
}

Json cmd_evolve(const Json& p) {
  require_at_least(p, "k", 1);
  require_positive(p, "a");
  require_positive(p, "dt");
  require_at_least(p, "T", 0);
  require_at_least(p, "samples", 1);
  const int d = get_int(p, "d"), k = get_int(p, "k");
  const auto model = model_for(d, get_real(p, "a"));
  const auto graph = graph_for(p, d);
  const stoch::TrajectoryConfig cfg{get_real(p, "dt"), get_real(p, "T"), get_seed(p), p.at("samples").get<std::int64_t>()};
  const auto est = moment::moment_monte_carlo(model, graph, k, cfg);
  const auto haar = moment::haar_projector(graph.dimension(), k);
  Json j;
  j["samples"] = est.samples;
  j["T"] = est.T;
  j["standard_error"] = est.standard_error;
  j["tpe_distance"] = moment::tpe_distance(est.superop, haar);
  if (p.at("exact").get<bool>()) {
    const auto exact = moment::moment_exact(moment::global_generator(model, graph, k, false), est.T);
    j["exact_tpe_distance"] = moment::tpe_distance(exact, haar);
    j["frobenius_error"] = (est.superop.matrix - exact.matrix).norm();
  }
  return j;
}

Json cmd_chain_stationary(const Json& p) {
  require_at_least(p, "n", 1);
  const int n = get_int(p, "n");
  Json exact = Json::array();
  for (const auto& w : pauli::stationary_distribution_exact(n)) exact.push_back(rep::to_string(w));
  return Json{{"n", n}, {"distribution", vector_json(pauli::stationary_distribution(n))}, {"exact", exact}};
}

Json cmd_chain_matrix(const Json& p) {
  require_at_least(p, "n", 2);
  require_positive(p, "dt");
  const int n = get_int(p, "n");
  const auto limit = pauli::zero_chain_dt_limit(n);
  if (get_real(p, "dt") >= static_cast<double>(limit)) {
    throw UsageError("field 'dt' must be below " + rep::to_string(limit) + " to keep the chain nonnegative");
  }
  const auto w = pauli::zero_chain_matrix(n, get_real(p, "dt"));
  return Json{{"n", n}, {"dt", w.dt}, {"dt_limit", rep::to_string(limit)}, {"transition", matrix_json(w.transition)}};
}

Json cmd_chain_accel(const Json& p) {
  require_at_least(p, "n", 2);
  const int n = get_int(p, "n");
  return Json{{"n", n},
              {"transition", matrix_json(pauli::accelerated_chain_matrix(n))},
              {"exact", rational_matrix_json(pauli::accelerated_chain_exact(n))}};
}

Json cmd_chain_ctrw(const Json& p) {
  require_at_least(p, "n", 2);
  require_at_least(p, "T", 0);
  require_at_least(p, "trajectories", 1);
  pauli::CtrwConfig cfg;
  cfg.n = get_int(p, "n");
  cfg.start_weight = get_int(p, "start");
  cfg.T = get_real(p, "T");
  cfg.trajectories = p.at("trajectories").get<std::int64_t>();
  cfg.seed = get_seed(p);
  cfg.delta = get_real(p, "delta");
  if (const int target = get_int(p, "target"); target > 0) cfg.target_weight = target;
  Json j = pauli::to_json(pauli::simulate_ctrw(cfg));
  j["stationary"] = vector_json(pauli::stationary_distribution(cfg.n));
  return j;
}

Json cmd_lindblad(const Json& p) {
  require_positive(p, "a");
  require_positive(p, "dt");
  require_at_least(p, "T", 0);
  require_at_least(p, "samples", 2);
  const int d = get_int(p, "d");
  const auto model = model_for(d, get_real(p, "a"));
  const auto graph = graph_for(p, d);
  const auto l = diss::lindblad_generator(diss::lindblad_from_model(model, graph));
  const double dt = get_real(p, "dt"), T = get_real(p, "T");
  const CMatrix rho0 = ket0(graph.dimension());
  const auto avg = diss::mc_state_average(model, graph, rho0, {dt, T, get_seed(p), p.at("samples").get<std::int64_t>()},
                                          true);
  Json j = diss::to_json(diss::compare_to_master(avg, diss::evolve_master(l, rho0, T), dt, get_int(p, "resamples"),
                                                 get_seed(p)));
  j["generator_difference"] =
      (l.matrix - moment::global_generator(model, graph, 1, true).matrix).cwiseAbs().maxCoeff();
  return j;
}

Json cmd_decouple(const Json& p) {
  require_at_least(p, "n", 2);
  require_positive(p, "dt");
  require_at_least(p, "samples", 2);
  const int n = get_int(p, "n");
  pauli::DecouplingSpec spec;
  spec.system_qubits = n;
  spec.environment_qubits = 1;
  spec.traced_qubits = get_int(p, "traced");
  spec.delta = get_real(p, "delta");
  const std::string channel = get_text(p, "channel");
  if (channel == "partial_trace") {
    spec.channel = pauli::DecouplingChannel::partial_trace;
  } else if (channel == "identity") {
    spec.channel = pauli::DecouplingChannel::identity;
  } else {
    throw UsageError("field 'channel' must be 'partial_trace' or 'identity'");
  }
  if (n > pauli::kMaxExactQubits) {
    throw GuardError("decoupling check limited to n <= " + std::to_string(pauli::kMaxExactQubits));
  }
  // Bell pair between the first system qubit and E, the rest of A in |0>
  const Index dim = Index{1} << (n + 1);
  CVector psi = CVector::Zero(dim);
  psi(0) = psi((Index{1} << n) | 1) = 1.0 / std::sqrt(2.0);
  spec.rho_ae = psi * psi.adjoint();
  double T = get_real(p, "T");
  if (T < 0) T = n * std::log(n) * std::log(n);
  const auto r = pauli::decoupling_check(spec, stoch::decoupling_preset(n), graph_for(p),
                                         {get_real(p, "dt"), T, get_seed(p), p.at("samples").get<std::int64_t>()});
  return pauli::to_json(r);
}

Json cmd_certify(const Json& p) {
  require_at_least(p, "k", 1);
  require_positive(p, "a");
  require_at_least(p, "T", 0);
  const double lambda = get_real(p, "lambda"), epsilon = get_real(p, "epsilon");
  if (!(lambda > 0 && lambda < 1)) throw UsageError("field 'lambda' must lie in (0, 1)");
  if (!(epsilon > 0)) throw UsageError("field 'epsilon' must be positive");
  const int d = get_int(p, "d"), k = get_int(p, "k"), n = get_int(p, "n");
  const double a = get_real(p, "a"), T = get_real(p, "T");
  const auto graph = graph_for(p, d);
  const auto g = moment::global_generator(model_for(d, a), graph, k, false);
  const auto gap = moment::spectral_gap(g);
  const double distance = moment::tpe_distance(moment::moment_exact(g, T), moment::haar_projector(graph.dimension(), k));
  const double predicted = std::exp(-gap.gap * T);
  // a Hermitian generator contracts the complement of its kernel at the gap rate
  if (distance > predicted + 1e-9) {
    throw NumericalError("moment distance " + io::format_double(distance) + " exceeds exp(-gap T) " +
                         io::format_double(predicted));
  }
  Json j;
  j["gap"] = gap.gap;
  j["tpe_distance"] = distance;
  j["predicted_distance"] = predicted;
  j["design_epsilon"] = moment::design_epsilon(distance, graph.dimension(), k);
  j["tpe_time_bound"] = moment::tpe_time_bound(d, k, lambda, a);
  j["design_time_bound"] = moment::design_time_bound(d, k, epsilon, a, n);
  return j;
}

// ---- command table -----------------------------------------------------------

std::vector<Param> common_params(bool stochastic) {
  return {
      {"seed", Kind::seed, nullptr, stochastic ? "RNG seed (required)" : "RNG seed (unused)"},
      {"out", Kind::text, "", "write the report to this path instead of standard output"},
      {"format", Kind::text, "json", "report format: json or csv"},
      {"threads", Kind::integer, 0, "worker threads (0: SLH_THREADS or hardware default)"},
  };
}

std::vector<Command> command_table() {
  const Param graph{"graph", Kind::text, "line", "interaction graph: line or complete"};
  return {
      {"rep", "irreducible content and Casimir spectrum of U^k (x) conj(U)^k",
       {{"N", Kind::integer, 4, "dimension of the defining representation"},
        {"k", Kind::integer, 2, "tensor power"}},
       false, cmd_rep},
      {"gap", "spectral gap of the k-th moment generator",
       {{"d", Kind::integer, 2, "local dimension"},
        {"k", Kind::integer, 2, "moment order"},
        {"a", Kind::real, 32.0, "noise scale"},
        {"n", Kind::integer, 2, "sites"},
        graph},
       false, cmd_gap},
      {"evolve", "Monte Carlo k-th moment of the stochastic evolution",
       {{"d", Kind::integer, 2, "local dimension"},
        {"k", Kind::integer, 1, "moment order"},
        {"a", Kind::real, 32.0, "noise scale"},
        {"n", Kind::integer, 2, "sites"},
        graph,
        {"dt", Kind::real, 1e-3, "time step"},
        {"T", Kind::real, 0.1, "total time"},
        {"samples", Kind::integer, 100, "trajectories"},
        {"exact", Kind::flag, true, "also compare with the exact moment"}},
       true, cmd_evolve},
      {"chain stationary", "stationary law of the weight chain", {{"n", Kind::integer, 2, "qubits"}}, false,
       cmd_chain_stationary},
      {"chain matrix", "one-step weight chain transition matrix",
       {{"n", Kind::integer, 2, "qubits"}, {"dt", Kind::real, 1e-3, "time step"}}, false, cmd_chain_matrix},
      {"chain accel", "weight chain conditioned on moving", {{"n", Kind::integer, 2, "qubits"}}, false,
       cmd_chain_accel},
      {"chain ctrw", "continuous-time walk on Pauli weights",
       {{"n", Kind::integer, 8, "qubits"},
        {"start", Kind::integer, 1, "initial weight"},
        {"T", Kind::real, 1.0, "total time"},
        {"trajectories", Kind::integer, 1000, "walks"},
        {"delta", Kind::real, 0.05, "target offset: target = floor((3/4 - delta) n)"},
        {"target", Kind::integer, 0, "explicit first-passage target (0: from delta)"}},
       true, cmd_chain_ctrw},
      {"lindblad", "Monte Carlo state average versus the master equation",
       {{"d", Kind::integer, 2, "local dimension"},
        {"a", Kind::real, 32.0, "noise scale"},
        {"n", Kind::integer, 2, "sites"},
        graph,
        {"dt", Kind::real, 1e-2, "time step"},
        {"T", Kind::real, 0.5, "total time"},
        {"samples", Kind::integer, 1000, "trajectories"},
        {"resamples", Kind::integer, 200, "bootstrap resamples"}},
       true, cmd_lindblad},
      {"decouple", "decoupling of a Bell pair shared with an environment qubit",
       {{"n", Kind::integer, 3, "system qubits"},
        {"graph", Kind::text, "complete", "interaction graph: line or complete"},
        {"traced", Kind::integer, 2, "system qubits removed by the partial trace"},
        {"channel", Kind::text, "partial_trace", "partial_trace or identity"},
        {"dt", Kind::real, 1e-2, "time step"},
        {"T", Kind::real, -1.0, "total time (negative: n ln^2 n)"},
        {"samples", Kind::integer, 1000, "trajectories"},
        {"delta", Kind::real, 0.05, "slack exponent"}},
       true, cmd_decouple},
      {"certify", "exact moment distance and design time bounds",
       {{"d", Kind::integer, 2, "local dimension"},
        {"k", Kind::integer, 2, "moment order"},
        {"a", Kind::real, 32.0, "noise scale"},
        {"n", Kind::integer, 2, "sites"},
        graph,
        {"T", Kind::real, 0.5, "total time"},
        {"lambda", Kind::real, std::exp(-1.0), "target expander distance"},
        {"epsilon", Kind::real, 1e-2, "target design error"}},
       false, cmd_certify},
  };
}

// ---- output --------------------------------------------------------------------

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void flatten(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_structured() && !j.empty()) {
    if (j.is_object()) {
      for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
    }
    return;
  }
  std::string value;
  if (j.is_string()) {
    value = j.get<std::string>();
  } else if (j.is_number_float()) {
    value = std::isfinite(j.get<double>()) ? io::format_double(j.get<double>()) : "";
  } else if (j.is_null()) {
    value = "";
  } else {
    value = j.dump();
  }
  out += csv_field(prefix) + "," + csv_field(value) + "\n";
}

Json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("config file '" + path + "' is not valid JSON: " + e.what());
  }
}

void apply_config(const Command& cmd, const std::vector<Param>& params, const Json& config, Json& values) {
  if (!config.is_object()) throw UsageError("config file must hold a JSON object");
  Json fields = config;
  if (config.contains("command")) {
    const auto& c = config["command"];
    if (!c.is_string() || (c.get<std::string>() != cmd.name && c.get<std::string>() != cmd.name.substr(0, cmd.name.find(' ')))) {
      throw UsageError("config field 'command' does not match '" + cmd.name + "'");
    }
    fields.erase("command");
  }
  if (config.contains("parameters")) {
    if (!config["parameters"].is_object()) throw UsageError("config field 'parameters' must be an object");
    const Json nested = config["parameters"];
    fields.erase("parameters");
    for (auto it = nested.begin(); it != nested.end(); ++it) fields[it.key()] = it.value();
  }
  for (auto it = fields.begin(); it != fields.end(); ++it) {
    const auto p = std::find_if(params.begin(), params.end(), [&](const Param& q) { return q.name == it.key(); });
    if (p == params.end()) throw UsageError("unknown config field '" + it.key() + "' for " + cmd.name);
    values[p->name] = check_config_value(*p, it.value());
  }
}

// Restores the default worker count when a run ends.
struct ThreadScope {
  explicit ThreadScope(int threads) { set_thread_count(threads); }
  ~ThreadScope() { set_thread_count(0); }
};

}  // namespace

Json make_report(const std::string& command, const Json& parameters, const Json& data) {
  Json config = Json::object();
  for (auto it = parameters.begin(); it != parameters.end(); ++it)
    if (!is_output_field(it.key())) config[it.key()] = it.value();
  Json report;
  report["metadata"] = Json{{"version", SLH_VERSION},
                            {"command", command},
                            {"seed", parameters.contains("seed") ? parameters["seed"] : Json(nullptr)},
                            {"config_hash", io::hex64(io::fnv1a(io::dump(config, -1)))},
                            {"config", config}};
  report["data"] = data;
  return report;
}

std::string emit_report(const Json& report, const std::string& format) {
  if (format == "json") return io::dump(report) + "\n";
  if (format != "csv") throw InvalidArgument("unsupported report format '" + format + "'");
  std::string out = "key,value\n";
  flatten(report, "", out);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stochastic local Hamiltonian moments, Pauli weight chains and decoupling checks", "slh"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SLH_VERSION);

  const auto commands = command_table();
  std::vector<std::vector<Param>> params(commands.size());
  std::vector<std::map<std::string, std::string>> raw(commands.size());
  std::vector<std::string> config_path(commands.size());
  std::vector<CLI::App*> apps(commands.size(), nullptr);
  std::map<std::string, CLI::App*> groups;

  for (std::size_t c = 0; c < commands.size(); ++c) {
    const auto& cmd = commands[c];
    CLI::App* parent = &app;
    std::string leaf = cmd.name;
    if (const auto space = cmd.name.find(' '); space != std::string::npos) {
      const std::string group = cmd.name.substr(0, space);
      if (!groups.count(group)) {
        groups[group] = app.add_subcommand(group, "weight chain on Pauli strings");
        groups[group]->require_subcommand(1);
      }
      parent = groups[group];
      leaf = cmd.name.substr(space + 1);
    }
    apps[c] = parent->add_subcommand(leaf, cmd.help);
    params[c] = cmd.params;
    for (auto& p : common_params(cmd.stochastic)) params[c].push_back(p);
    for (const auto& p : params[c]) {
      std::string help = p.help;
      if (!p.fallback.is_null()) help += " [" + (p.fallback.is_string() ? p.fallback.get<std::string>() : io::dump(p.fallback)) + "]";
      apps[c]->add_option("--" + p.name, raw[c][p.name], help);
    }
    apps[c]->add_option("--config", config_path[c], "JSON file whose fields override the flags");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::size_t chosen = commands.size();
  for (std::size_t c = 0; c < commands.size(); ++c)
    if (apps[c]->parsed()) chosen = c;
  const Command& cmd = commands[chosen];

  try {
    Json values = Json::object();
    for (const auto& p : params[chosen]) values[p.name] = p.fallback;
    for (const auto& p : params[chosen])
      if (apps[chosen]->count("--" + p.name) > 0) values[p.name] = parse_flag_value(p, raw[chosen][p.name]);
    if (!config_path[chosen].empty()) apply_config(cmd, params[chosen], load_config(config_path[chosen]), values);

    const std::string format = values["format"].get<std::string>();
    if (format != "json" && format != "csv") throw UsageError("field 'format' must be 'json' or 'csv'");
    if (values["threads"].get<int>() < 0) throw UsageError("field 'threads' must be nonnegative");
    if (cmd.stochastic && values["seed"].is_null()) throw UsageError("missing required field 'seed' for " + cmd.name);

    const ThreadScope threads(values["threads"].get<int>());
    const std::string text = emit_report(make_report(cmd.name, values, cmd.body(values)), format);
    const std::string path = values["out"].get<std::string>();
    if (path.empty()) {
      out << text;
    } else {
      std::ofstream file(path, std::ios::binary);
      if (!file || !(file << text)) throw UsageError("cannot write report to '" + path + "'");
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GuardError& e) {
    err << "size limit: " << e.what() << "\n";
    return kExitGuard;
  } catch (const NumericalError& e) {
    err << "numerical check failed: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const DecompositionError& e) {
    err << "decomposition failed: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace slh::cli

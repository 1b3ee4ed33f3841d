#include "fgle/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "fgle/csv.hpp"

namespace fgle {

namespace pt = boost::property_tree;

std::string to_string(RunMode m) {
  switch (m) {
    case RunMode::simulate: return "simulate";
    case RunMode::convergence: return "convergence";
    case RunMode::decay: return "decay";
    case RunMode::inviscid: return "inviscid";
    case RunMode::verify: return "verify";
  }
  return "simulate";
}

RunMode parse_mode(const std::string& s) {
  for (RunMode m : {RunMode::simulate, RunMode::convergence, RunMode::decay, RunMode::inviscid, RunMode::verify})
    if (to_string(m) == s) return m;
  throw ConfigError("run.mode: unknown mode '" + s + "'");
}

bool operator==(const ModelParams& x, const ModelParams& y) {
  return x.upsilon == y.upsilon && x.eta == y.eta && x.kappa == y.kappa && x.zeta == y.zeta &&
         x.gamma == y.gamma && x.alpha == y.alpha;
}
bool operator==(const GridSpec& x, const GridSpec& y) { return x.a == y.a && x.b == y.b && x.M == y.M; }
bool operator==(const TimeGrid& x, const TimeGrid& y) { return x.T == y.T && x.N == y.N; }
bool operator==(const SolverSettings& x, const SolverSettings& y) {
  return x.iter_tol == y.iter_tol && x.max_iters == y.max_iters;
}
bool operator==(const RunConfig& x, const RunConfig& y) {
  return x.mode == y.mode && x.model == y.model && x.grid == y.grid && x.time == y.time && x.solver == y.solver &&
         x.output_dir == y.output_dir && x.snapshot_times == y.snapshot_times && x.convergence == y.convergence &&
         x.gammas == y.gammas && x.upsilons == y.upsilons && x.kappas == y.kappas &&
         x.verify_alphas == y.verify_alphas;
}

namespace {

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s{
      {"run", {"mode", "output_dir"}},
      {"model", {"alpha", "upsilon", "eta", "kappa", "zeta", "gamma"}},
      {"grid", {"a", "b", "M", "h"}},
      {"time", {"T", "N", "tau"}},
      {"solver", {"iter_tol", "max_iters"}},
      {"output", {"snapshot_times"}},
      {"convergence", {"base_tau", "base_h", "levels", "reference", "h_ref", "tau_ref"}},
      {"decay", {"gammas"}},
      {"inviscid", {"upsilons", "kappas"}},
      {"verify", {"alphas"}},
  };
  return s;
}

double real_value(const std::string& key, const std::string& text) {
  try {
    return parse_real(text);
  } catch (const std::invalid_argument&) {
    throw ConfigError(key + ": expected a number, got '" + text + "'");
  }
}

long integer_value(const std::string& key, const std::string& text) {
  long v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto r = std::from_chars(first, last, v);
  if (r.ec != std::errc() || r.ptr != last) throw ConfigError(key + ": expected an integer, got '" + text + "'");
  return v;
}

std::vector<double> list_value(const std::string& key, const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) {
      if (out.empty() && ss.eof()) break;  // empty list
      throw ConfigError(key + ": empty list element");
    }
    out.push_back(real_value(key, item));
  }
  return out;
}

std::string list_text(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_real(v[i]);
  }
  return s;
}

template <typename F>
void guarded(const std::string& field, F&& f) {
  try {
    f();
  } catch (const DomainError& e) {
    throw ConfigError(field + ": " + e.what());
  }
}

}  // namespace

void RunConfig::validate() const {
  guarded("model", [&] { model.validate(); });
  guarded("grid", [&] { grid.validate(); });
  guarded("time", [&] { time.validate(); });
  guarded("solver", [&] { solver.validate(); });
  for (double t : snapshot_times)
    if (!(t >= 0 && t <= time.T)) throw ConfigError("output.snapshot_times: " + format_short(t) + " is outside [0,T]");
  if (!(convergence.base_tau > 0 && convergence.base_h > 0))
    throw ConfigError("convergence: base_tau and base_h must be positive");
  if (convergence.levels < 1) throw ConfigError("convergence.levels must be at least 1");
  if (!convergence.exact_reference && !(convergence.h_ref > 0 && convergence.tau_ref > 0))
    throw ConfigError("convergence: h_ref and tau_ref must be positive");
  if (upsilons.size() != kappas.size()) throw ConfigError("inviscid: upsilons and kappas must have equal length");
  for (double u : upsilons)
    if (!(u >= 0)) throw ConfigError("inviscid.upsilons: values must be non-negative");
  for (double a : verify_alphas) guarded("verify.alphas", [&] { require_alpha(a); });
  if (mode == RunMode::decay && gammas.empty()) throw ConfigError("decay.gammas must not be empty");
  if (mode == RunMode::inviscid && upsilons.empty()) throw ConfigError("inviscid: parameter sequence must not be empty");
}

RunConfig parse_config(const std::string& text) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(e.message(), e.line());
  }

  for (const auto& [section, body] : tree) {
    const auto it = schema().find(section);
    if (body.empty() && !body.data().empty())
      throw ConfigError("key '" + section + "' appears outside any section");
    if (it == schema().end()) throw ConfigError("unknown section [" + section + "]");
    for (const auto& [key, value] : body) {
      (void)value;
      if (!it->second.count(key)) throw ConfigError("unknown key '" + key + "' in section [" + section + "]");
    }
  }

  RunConfig c;
  auto get = [&](const std::string& path) -> std::optional<std::string> {
    if (auto v = tree.get_optional<std::string>(pt::ptree::path_type(path, '.'))) return *v;
    return std::nullopt;
  };
  auto real = [&](const std::string& path, double& dst) {
    if (auto v = get(path)) dst = real_value(path, *v);
  };
  auto list = [&](const std::string& path, std::vector<double>& dst) {
    if (auto v = get(path)) dst = list_value(path, *v);
  };

  if (auto v = get("run.mode")) c.mode = parse_mode(*v);
  if (auto v = get("run.output_dir")) c.output_dir = *v;

  real("model.alpha", c.model.alpha);
  real("model.upsilon", c.model.upsilon);
  real("model.eta", c.model.eta);
  real("model.kappa", c.model.kappa);
  real("model.zeta", c.model.zeta);
  real("model.gamma", c.model.gamma);

  real("grid.a", c.grid.a);
  real("grid.b", c.grid.b);
  {
    const auto M = get("grid.M");
    const auto h = get("grid.h");
    if (M && h) throw ConfigError("grid: give only one of M or h");
    if (M) {
      c.grid.M = integer_value("grid.M", *M);
    } else {
      const double spacing = h ? real_value("grid.h", *h) : 0.05;
      guarded("grid.h", [&] { c.grid = GridSpec::with_spacing(c.grid.a, c.grid.b, spacing); });
    }
  }

  real("time.T", c.time.T);
  {
    const auto N = get("time.N");
    const auto tau = get("time.tau");
    if (N && tau) throw ConfigError("time: give only one of N or tau");
    if (N) {
      c.time.N = integer_value("time.N", *N);
    } else {
      const double step = tau ? real_value("time.tau", *tau) : 0.05;
      guarded("time.tau", [&] { c.time = TimeGrid::with_step(c.time.T, step); });
    }
  }

  real("solver.iter_tol", c.solver.iter_tol);
  if (auto v = get("solver.max_iters")) c.solver.max_iters = static_cast<int>(integer_value("solver.max_iters", *v));

  list("output.snapshot_times", c.snapshot_times);

  real("convergence.base_tau", c.convergence.base_tau);
  real("convergence.base_h", c.convergence.base_h);
  if (auto v = get("convergence.levels")) c.convergence.levels = static_cast<int>(integer_value("convergence.levels", *v));
  if (auto v = get("convergence.reference")) {
    if (*v == "exact") c.convergence.exact_reference = true;
    else if (*v == "fine_grid") c.convergence.exact_reference = false;
    else throw ConfigError("convergence.reference must be 'exact' or 'fine_grid'");
  }
  real("convergence.h_ref", c.convergence.h_ref);
  real("convergence.tau_ref", c.convergence.tau_ref);

  list("decay.gammas", c.gammas);
  list("inviscid.upsilons", c.upsilons);
  list("inviscid.kappas", c.kappas);
  list("verify.alphas", c.verify_alphas);

  c.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream o;
  o << "[run]\nmode = " << to_string(c.mode) << "\noutput_dir = " << c.output_dir << "\n\n";
  o << "[model]\nalpha = " << format_real(c.model.alpha) << "\nupsilon = " << format_real(c.model.upsilon)
    << "\neta = " << format_real(c.model.eta) << "\nkappa = " << format_real(c.model.kappa)
    << "\nzeta = " << format_real(c.model.zeta) << "\ngamma = " << format_real(c.model.gamma) << "\n\n";
  o << "[grid]\na = " << format_real(c.grid.a) << "\nb = " << format_real(c.grid.b) << "\nM = " << c.grid.M << "\n\n";
  o << "[time]\nT = " << format_real(c.time.T) << "\nN = " << c.time.N << "\n\n";
  o << "[solver]\niter_tol = " << format_real(c.solver.iter_tol) << "\nmax_iters = " << c.solver.max_iters << "\n\n";
  o << "[output]\nsnapshot_times = " << list_text(c.snapshot_times) << "\n\n";
  o << "[convergence]\nbase_tau = " << format_real(c.convergence.base_tau)
    << "\nbase_h = " << format_real(c.convergence.base_h) << "\nlevels = " << c.convergence.levels
    << "\nreference = " << (c.convergence.exact_reference ? "exact" : "fine_grid")
    << "\nh_ref = " << format_real(c.convergence.h_ref) << "\ntau_ref = " << format_real(c.convergence.tau_ref)
    << "\n\n";
  o << "[decay]\ngammas = " << list_text(c.gammas) << "\n\n";
  o << "[inviscid]\nupsilons = " << list_text(c.upsilons) << "\nkappas = " << list_text(c.kappas) << "\n\n";
  o << "[verify]\nalphas = " << list_text(c.verify_alphas) << "\n";
  return o.str();
}

}  // namespace fgle

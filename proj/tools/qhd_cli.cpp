// qhd_cli: dispersion sweeps, state coefficients, verification suites, spectra

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhd/dispersion.hpp"
#include "qhd/pseudo_hermitian.hpp"
#include "verify_suites.hpp"

namespace {

using namespace qhd;
using nlohmann::ordered_json;

enum Exit { Ok = 0, InvariantFailed = 1, Usage = 2, Convergence = 3, Conditioning = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Request {
  std::string command;
  double delta = 0.5, phi = 0, beta = 2.0, theta = 0.8 * M_PI, gamma = 0, eta_phase = 0, z = 0, p = 0;
  std::string var = "phi";
  double min = 0, max = 0;
  int steps = 73;
  int dim = 64, guard = -1;
  double tol = 1e-10, validity = 0.05, max_cond = 1e12;
  std::string method = "first-order";
  std::string suite = "all";
  int figure = 0;
  std::string format = "csv", out;
  std::vector<std::pair<std::string, std::string>> echo;
};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

TruncationConfig make_cfg(const Request& r) {
  TruncationConfig cfg{r.dim, r.guard < 0 ? r.dim / 4 : r.guard, r.tol};
  if (r.dim < 8) throw UsageError("--dim must be at least 8");
  try {
    cfg.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

ordered_json cell(const std::string& v) {
  char* end = nullptr;
  const long long i = std::strtoll(v.c_str(), &end, 10);
  if (!v.empty() && end == v.c_str() + v.size()) return i;
  const double x = std::strtod(v.c_str(), &end);
  if (!v.empty() && end == v.c_str() + v.size()) return x;
  return v;
}

// one table, rendered as csv with a '#' flag echo or as json with the same schema
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> diagnostics;

  std::string render(const Request& r) const {
    std::ostringstream os;
    if (r.format == "json") {
      ordered_json j;
      ordered_json meta = ordered_json::object();
      meta["command"] = r.command;
      for (const auto& [k, v] : r.echo) meta[k] = cell(v);
      j["meta"] = meta;
      j["columns"] = columns;
      ordered_json rs = ordered_json::array();
      for (const auto& row : rows) {
        ordered_json o = ordered_json::object();
        for (std::size_t i = 0; i < columns.size(); ++i) o[columns[i]] = cell(row[i]);
        rs.push_back(o);
      }
      j["rows"] = rs;
      ordered_json d = ordered_json::object();
      for (const auto& [k, v] : diagnostics) d[k] = cell(v);
      j["diagnostics"] = d;
      os << j.dump(1) << "\n";
      return os.str();
    }
    os << "# qhd_cli " << r.command;
    for (const auto& [k, v] : r.echo) os << " --" << k << " " << v;
    os << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
      os << "\n";
    }
    for (const auto& [k, v] : diagnostics) os << "# " << k << " = " << v << "\n";
    return os.str();
  }
};

void emit(const Table& t, const Request& r) {
  const std::string text = t.render(r);
  if (r.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(r.out, std::ios::binary);
  if (!f) throw UsageError("cannot open " + r.out);
  f << text;
}

void apply_figure(Request& r, const CLI::App& sub) {
  if (r.figure == 0) return;
  SweepSettings s;
  if (r.figure == 1)
    s = figure1_settings();
  else if (r.figure == 2)
    s = figure2_settings();
  else if (r.figure == 3)
    s = figure3_settings();
  else
    throw UsageError("--figure must be 1, 2 or 3");
  auto unset = [&](const char* name) { return sub.get_option(name)->count() == 0; };
  if (unset("--delta")) r.delta = s.delta;
  if (unset("--phi")) r.phi = s.phi;
  if (unset("--beta")) r.beta = s.beta;
  if (unset("--theta")) r.theta = s.theta;
  if (unset("--var")) r.var = s.varying == SweepVariable::Phi ? "phi" : "delta";
  if (unset("--min")) r.min = s.grid.front();
  if (unset("--max")) r.max = s.grid.back();
  if (unset("--z")) r.z = s.zs.front();
  if (unset("--p")) r.p = s.ps.front();
}

int cmd_sweep_dispersion(const Request& r) {
  if (r.steps < 2) throw UsageError("--steps must be at least 2");
  if (!(r.min < r.max)) throw UsageError("--min must be below --max");
  if (r.var != "phi" && r.var != "delta") throw UsageError("--var must be phi or delta");
  if (r.method == "all-order" && (r.p != 0 || r.gamma != 0))
    throw UsageError("all-order dispersions need p = 0 and gamma = 0");
  const TruncationConfig cfg = make_cfg(r);

  Table t;
  t.columns = {"grid_value", "var_x_mus", "var_p_mus", "var_x_def", "var_p_def", "product_def", "srur_bound",
               "validity_flag"};
  for (double x : linear_grid(r.min, r.max, r.steps)) {
    const double delta = r.var == "delta" ? x : r.delta;
    const double phi = r.var == "phi" ? x : r.phi;
    const auto [mx, mp] = mus_dispersions(delta, phi);
    QuadratureStats q;
    bool valid = true;
    if (r.method == "all-order") {
      q = general_dispersion(DeformationParams::polar(delta, phi, r.beta, r.theta, 0, 0, r.z, 0), cfg.dim - 1, r.tol);
    } else {
      q = perturbed_stats(delta, phi, r.beta, r.theta, r.gamma, r.eta_phase, r.z, r.p);
      valid = first_order_norm_error(delta, phi, r.beta, r.theta, r.gamma, r.eta_phase, r.z, r.p) <= r.validity;
    }
    t.rows.push_back({num(x), num(mx), num(mp), num(q.var_x), num(q.var_p), num(q.product), num(q.srur_bound),
                      valid ? "1" : "0"});
  }
  emit(t, r);
  return Ok;
}

int cmd_state(const Request& r) {
  if (r.p != 0 || r.gamma != 0) throw UsageError("state needs p = 0 and gamma = 0");
  const TruncationConfig cfg = make_cfg(r);
  const DeformationParams d = DeformationParams::polar(r.delta, r.phi, r.beta, r.theta, 0, 0, r.z, 0);
  const int n_max = cfg.dim - 1;
  const auto [c0, diag] = normalization_c0(d, n_max, r.tol);
  const std::vector<cplx> c = unnormalized_coefficients(d, n_max);
  Table t;
  t.columns = {"n", "re_c", "im_c", "abs2_c"};
  for (int n = 0; n <= n_max; ++n) {
    const cplx v = c0 * c[n];
    t.rows.push_back({std::to_string(n), num(v.real()), num(v.imag()), num(std::norm(v))});
  }
  t.diagnostics = {{"C0", num(c0)}, {"tail_estimate", num(diag.tail_estimate)}, {"terms", std::to_string(diag.terms_used)}};
  emit(t, r);
  return Ok;
}

int cmd_verify(const Request& r) {
  const std::vector<std::string> names = verify::suite_names();
  if (r.suite != "all" && std::find(names.begin(), names.end(), r.suite) == names.end())
    throw UsageError("unknown suite " + r.suite);
  const TruncationConfig cfg = make_cfg(r);
  const std::vector<verify::CheckResult> res = verify::run(r.suite, cfg);
  bool ok = true;
  ordered_json j;
  j["dim"] = cfg.dim;
  j["guard"] = cfg.guard;
  j["suite"] = r.suite;
  ordered_json checks = ordered_json::array();
  for (const auto& c : res) {
    ok = ok && c.passed;
    ordered_json o;
    o["suite"] = c.suite;
    o["check"] = c.name;
    o["value"] = c.value;
    o["bound"] = c.bound;
    o["passed"] = c.passed;
    if (!c.error.empty()) o["error"] = c.error;
    checks.push_back(o);
  }
  j["checks"] = checks;
  j["passed"] = ok;
  const std::string text = j.dump(1) + "\n";
  if (r.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(r.out, std::ios::binary);
    if (!f) throw UsageError("cannot open " + r.out);
    f << text;
  }
  return ok ? Ok : InvariantFailed;
}

int cmd_spectrum(const Request& r) {
  const TruncationConfig cfg = make_cfg(r);
  const PseudoHermitianSystem s = build_system(std::polar(r.delta, r.phi), r.z, cfg, r.max_cond);
  const SpectrumReport h = spectrum(s.H), ht = hermitian_block_spectrum(s);
  Table t;
  t.columns = {"operator", "index", "re", "im", "deviation"};
  for (std::size_t i = 0; i < h.eigenvalues.size(); ++i)
    t.rows.push_back({"H", std::to_string(i), num(h.eigenvalues[i].real()), num(h.eigenvalues[i].imag()),
                      num(std::abs(h.eigenvalues[i] - double(i)))});
  for (std::size_t i = 0; i < ht.eigenvalues.size(); ++i)
    t.rows.push_back({"H_tilde", std::to_string(i), num(ht.eigenvalues[i].real()), num(ht.eigenvalues[i].imag()),
                      num(std::abs(ht.eigenvalues[i] - double(i)))});
  t.diagnostics = {{"eta_condition", num(s.eta_condition)},
                   {"max_deviation_H", num(h.max_deviation_from_integers)},
                   {"max_deviation_H_tilde", num(ht.max_deviation_from_integers)}};
  emit(t, r);
  return Ok;
}

}  // namespace

int main(int argc, char** argv) {
  Request r;
  CLI::App app{"deformed Heisenberg algebra states, dispersions and spectra"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* s) {
    s->add_option("--delta", r.delta);
    s->add_option("--phi", r.phi);
    s->add_option("--beta", r.beta);
    s->add_option("--theta", r.theta);
    s->add_option("--gamma", r.gamma);
    s->add_option("--eta-phase", r.eta_phase);
    s->add_option("--z", r.z);
    s->add_option("--p", r.p);
    s->add_option("--dim", r.dim);
    s->add_option("--guard", r.guard, "guard levels, default dim/4");
    s->add_option("--tol", r.tol);
    s->add_option("--format", r.format)->check(CLI::IsMember({"csv", "json"}));
    s->add_option("--out", r.out);
  };

  CLI::App* sweep = app.add_subcommand("sweep-dispersion", "quadrature dispersions along a phi or delta grid");
  add_common(sweep);
  sweep->add_option("--var", r.var)->check(CLI::IsMember({"phi", "delta"}));
  sweep->add_option("--min", r.min);
  sweep->add_option("--max", r.max);
  sweep->add_option("--steps", r.steps);
  sweep->add_option("--validity", r.validity, "largest first-order norm error flagged valid");
  sweep->add_option("--method", r.method)->check(CLI::IsMember({"first-order", "all-order"}));
  sweep->add_option("--figure", r.figure, "preset 1, 2 or 3");

  CLI::App* state = app.add_subcommand("state", "normalized Fock coefficients of a deformed squeezed state");
  add_common(state);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
  add_common(verify_cmd);
  verify_cmd->add_option("--suite", r.suite);

  CLI::App* spec = app.add_subcommand("spectrum", "spectra of H and its Hermitian image (mu = delta e^{i phi})");
  add_common(spec);
  spec->add_option("--max-cond", r.max_cond);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return Usage;
  }

  CLI::App* used = app.get_subcommands().front();
  r.command = used->get_name();
  try {
    if (used == sweep) {
      apply_figure(r, *sweep);
      if (sweep->get_option("--min")->count() == 0 && r.figure == 0) r.min = r.var == "phi" ? -M_PI / 2 : 0.0;
      if (sweep->get_option("--max")->count() == 0 && r.figure == 0) r.max = r.var == "phi" ? 1.5 * M_PI : 0.95;
    }
    r.echo = {{"delta", num(r.delta)}, {"phi", num(r.phi)},     {"beta", num(r.beta)}, {"theta", num(r.theta)},
              {"gamma", num(r.gamma)}, {"eta-phase", num(r.eta_phase)}, {"z", num(r.z)},   {"p", num(r.p)},
              {"dim", std::to_string(r.dim)}, {"guard", std::to_string(r.guard < 0 ? r.dim / 4 : r.guard)},
              {"tol", num(r.tol)}};
    if (used == sweep) {
      r.echo.insert(r.echo.end(), {{"var", r.var}, {"min", num(r.min)}, {"max", num(r.max)},
                                   {"steps", std::to_string(r.steps)}, {"validity", num(r.validity)},
                                   {"method", r.method}});
      if (r.figure) r.echo.emplace_back("figure", std::to_string(r.figure));
    }
    if (used == spec) r.echo.emplace_back("max-cond", num(r.max_cond));
    if (used == sweep) return cmd_sweep_dispersion(r);
    if (used == state) return cmd_state(r);
    if (used == verify_cmd) return cmd_verify(r);
    return cmd_spectrum(r);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return Usage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    if (e.kind() == ErrorKind::NotConverged || e.kind() == ErrorKind::TailTooHeavy) return Convergence;
    if (e.kind() == ErrorKind::IllConditioned || e.kind() == ErrorKind::NotPositiveDefinite) return Conditioning;
    if (e.kind() == ErrorKind::BadParams) return Usage;
    return InvariantFailed;
  }
}

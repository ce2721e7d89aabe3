/* Copyright 2026 The mzbell Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "mzbell/channel.hpp"
#include "mzbell/chsh.hpp"
#include "mzbell/optics.hpp"
#include "mzbell/uncertainty.hpp"
#include "mzbell/validation.hpp"

#ifndef MZBELL_VERSION_STRING
#define MZBELL_VERSION_STRING "unknown"
#endif

namespace mzbell::cli {
namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string num(std::size_t v) { return std::to_string(v); }

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + num(v[i]);
  return s;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Destination for command output: a file when a path is given, else `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error("cannot open output path '" + path + "' for writing");
      os_ = file_.get();
    }
    *os_ << std::setprecision(17);
  }
  std::ostream& operator*() { return *os_; }
  void finish() {
    os_->flush();
    if (!*os_) throw Error("write to output failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

struct Common {
  std::string out;
  std::uint64_t seed = 0;
};

void header(std::ostream& os, const std::string& command, const Common& c, const Params& params,
            const std::vector<std::string>& warnings = {}) {
  os << "# mzbell " << command << "\n";
  os << "# version: " << version() << "\n";
  os << "# seed: " << c.seed << "\n";
  for (const auto& [k, v] : params) os << "# param " << k << ": " << v << "\n";
  for (const auto& w : warnings) os << "# warning: " << w << "\n";
  os << "# timestamp: " << utc_timestamp() << "\n";
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--out,-o", c.out, "Output path (default: stdout)");
  app->add_option("--seed", c.seed, "Random seed recorded in the output header");
}

void forward_warnings(std::ostream& err, const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) err << "warning: " << w << "\n";
}

// ------------------------------------------------------------ figure disp
struct DispOpts {
  Common common;
  double beta = 3.8;
  double beta_im = 0.0;
  std::size_t dim = 60;
  std::string method = "direct";
};

DisplacementMethod parse_method(const std::string& m) {
  if (m == "direct") return DisplacementMethod::direct;
  if (m == "factorized") return DisplacementMethod::factorized;
  if (m == "laguerre") return DisplacementMethod::laguerre;
  throw DomainError("unknown displacement method '" + m + "'");
}

int cmd_disp(const DispOpts& o, std::ostream& out, std::ostream& err) {
  const Complex beta(o.beta, o.beta_im);
  if (static_cast<double>(o.dim) < 2.0 * std::norm(beta))
    throw DomainError("figure disp: dim must be >= 2|beta|^2 = " + num(2.0 * std::norm(beta)));
  if (o.dim < 2) throw DomainError("figure disp: dim must be >= 2");
  auto d = displacement_matrix(beta, TruncatedFockSpace(o.dim), parse_method(o.method));
  forward_warnings(err, d.warnings);
  Sink sink(o.common.out, out);
  header(*sink, "figure disp", o.common,
         {{"beta_re", num(o.beta)}, {"beta_im", num(o.beta_im)}, {"dim", num(o.dim)}, {"method", o.method}},
         d.warnings);
  *sink << "n,k,abs_value\n";
  const CMatrix& m = d.value.matrix();
  for (Eigen::Index n = 0; n < m.cols(); ++n)
    for (Eigen::Index k = 0; k < m.rows(); ++k) *sink << n << "," << k << "," << std::abs(m(k, n)) << "\n";
  sink.finish();
  return kOk;
}

// ------------------------------------------------------------ figure mi / gram
struct ChannelOpts {
  Common common;
  double rprime = 0.999987;
  double t = 5e-7;
  double alpha_scale = 0.1;
  bool strict = false;
};

Params channel_params(const ChannelOpts& o, const ChannelConfig& c) {
  return {{"rprime_requested", num(o.rprime)},
          {"t", num(o.t)},
          {"alpha_scale", num(o.alpha_scale)},
          {"strict_unitarity", o.strict ? "true" : "false"},
          {"rprime_effective", num(std::abs(c.R_prime))},
          {"alpha", num(std::abs(c.alpha))},
          {"t_alpha", num(std::abs(c.t_alpha()))},
          {"unitary_consistent", c.unitary_consistent ? "true" : "false"},
          {"dim", num(c.space.dim())}};
}

struct MiOpts {
  ChannelOpts ch;
  std::size_t dim = 50;
  std::vector<std::size_t> i_list{0, 10, 20, 30, 40};
};

int cmd_mi(const MiOpts& o, std::ostream& out, std::ostream&) {
  if (o.i_list.empty()) throw DomainError("figure mi: empty index list");
  if (o.dim < 2) throw DomainError("figure mi: dim must be >= 2");
  ChannelConfig c = ChannelConfig::from_moduli(o.ch.rprime, o.ch.t, o.ch.alpha_scale,
                                               TruncatedFockSpace(o.dim), o.ch.strict);
  c.i_max = std::max(c.i_max, *std::max_element(o.i_list.begin(), o.i_list.end()));
  Params p = channel_params(o.ch, c);
  p.emplace_back("i_list", join(o.i_list));
  Sink sink(o.ch.common.out, out);
  header(*sink, "figure mi", o.ch.common, p);
  for (std::size_t i : o.i_list) {
    const CMatrix m = povm_element(i, c).matrix();
    *sink << "# block: i=" << i << "\n";
    *sink << "n,nprime,abs_value\n";
    for (Eigen::Index n = 0; n < m.rows(); ++n)
      for (Eigen::Index np = 0; np < m.cols(); ++np) *sink << n << "," << np << "," << std::abs(m(n, np)) << "\n";
  }
  sink.finish();
  return kOk;
}

struct GramOpts {
  ChannelOpts ch;
  std::size_t dim = 52;
  std::size_t i_max = 40;
  double floor = -30.0;
};

int cmd_gram(const GramOpts& o, std::ostream& out, std::ostream&) {
  if (o.i_max < 1) throw DomainError("figure gram: i_max must be >= 1");
  if (o.dim < 2) throw DomainError("figure gram: dim must be >= 2");
  ChannelConfig c = ChannelConfig::from_moduli(o.ch.rprime, o.ch.t, o.ch.alpha_scale,
                                               TruncatedFockSpace(o.dim), o.ch.strict);
  c.i_max = o.i_max;
  const RMatrix g = gram_matrix(build_povm(c));
  const RMatrix lg = log10_floor(g, o.floor);
  Params p = channel_params(o.ch, c);
  p.emplace_back("i_max", num(o.i_max));
  p.emplace_back("floor", num(o.floor));
  p.emplace_back("offdiagonal_ratio", num(gram_offdiagonal_ratio(g)));
  Sink sink(o.ch.common.out, out);
  header(*sink, "figure gram", o.ch.common, p);
  *sink << "i,j,log10_abs_overlap\n";
  for (Eigen::Index i = 0; i < lg.rows(); ++i)
    for (Eigen::Index j = 0; j < lg.cols(); ++j) *sink << i << "," << j << "," << lg(i, j) << "\n";
  sink.finish();
  return kOk;
}

// ------------------------------------------------------------ chsh
struct ChshOpts {
  Common common;
  std::size_t grid_n = 99;
  std::size_t dim = 32;
  std::string format = "csv";
};

int cmd_chsh_scan(const ChshOpts& o, std::ostream& out, std::ostream&) {
  if (o.grid_n < 1) throw DomainError("chsh scan: grid-n must be >= 1");
  Sink sink(o.common.out, out);
  header(*sink, "chsh scan", o.common, {{"grid_n", num(o.grid_n)}});
  *sink << "E1,E2,lambda_eig,lambda_paper_form,lambda_corrected_form\n";
  const double step = 1.0 / static_cast<double>(o.grid_n + 1);
  for (std::size_t i = 1; i <= o.grid_n; ++i)
    for (std::size_t j = 1; j <= o.grid_n; ++j) {
      const double e1 = static_cast<double>(i) * step, e2 = static_cast<double>(j) * step;
      *sink << e1 << "," << e2 << "," << lambda_max(e1, e2, LambdaMethod::eigensolver) << ","
            << lambda_max(e1, e2, LambdaMethod::closed_form_paper) << ","
            << lambda_max(e1, e2, LambdaMethod::closed_form_corrected) << "\n";
    }
  sink.finish();
  return kOk;
}

void require_format(const std::string& f) {
  if (f != "csv" && f != "json") throw DomainError("unknown format '" + f + "'");
}

nlohmann::ordered_json json_header(const std::string& command, const Common& c) {
  nlohmann::ordered_json j;
  j["tool"] = "mzbell";
  j["command"] = command;
  j["version"] = version();
  j["seed"] = c.seed;
  j["timestamp"] = utc_timestamp();
  return j;
}

int cmd_chsh_optimal(const ChshOpts& o, std::ostream& out, std::ostream&) {
  require_format(o.format);
  const OptimalSettings s = optimal_settings(o.grid_n);
  const std::vector<std::pair<std::string, double>> rows = {
      {"E1", s.E1},
      {"E2", s.E2},
      {"delta_beta_sq", s.delta_beta_sq},
      {"lambda_eig", s.lambda},
      {"lambda_paper_form", lambda_max(s.E1, s.E2, LambdaMethod::closed_form_paper)},
      {"lambda_corrected_form", lambda_max(s.E1, s.E2, LambdaMethod::closed_form_corrected)},
      {"tsirelson", 2.0 * std::numbers::sqrt2},
      {"grid_E1", s.grid_E1},
      {"grid_E2", s.grid_E2},
      {"grid_lambda", s.grid_lambda},
      {"grid_boundary_max", s.boundary_max}};
  Sink sink(o.common.out, out);
  if (o.format == "json") {
    auto j = json_header("chsh optimal", o.common);
    j["grid_n"] = o.grid_n;
    for (const auto& [k, v] : rows) j[k] = v;
    *sink << j.dump(2) << "\n";
  } else {
    header(*sink, "chsh optimal", o.common, {{"grid_n", num(o.grid_n)}});
    *sink << "key,value\n";
    for (const auto& [k, v] : rows) *sink << k << "," << v << "\n";
  }
  sink.finish();
  return kOk;
}

int cmd_chsh_state(const ChshOpts& o, std::ostream& out, std::ostream&) {
  require_format(o.format);
  const StateVector psi = maximal_state(0.5, 0.5);
  const RVector ra = reduce_pure_state(psi, Subsystem::first, {3, 3}).eigenvalues();
  const RVector rb = reduce_pure_state(psi, Subsystem::second, {3, 3}).eigenvalues();
  const double s = std::sqrt(std::numbers::ln2);
  const ChshConfig cfg{0.0, s, 0.0, s};
  const TruncatedFockSpace mode(o.dim);
  const double fock = fock_chsh_expectation(coherent_state_form(cfg, mode), cfg, mode);
  const double residual =
      (chsh_operator(0.5, 0.5).matrix() * psi.amplitudes() - 2.0 * std::numbers::sqrt2 * psi.amplitudes()).norm();
  Sink sink(o.common.out, out);
  if (o.format == "json") {
    auto j = json_header("chsh state", o.common);
    j["dim"] = o.dim;
    std::vector<double> comp;
    for (std::size_t i = 0; i < 9; ++i) comp.push_back(psi[i].real());
    j["components"] = comp;
    j["reduction_first"] = std::vector<double>(ra.data(), ra.data() + ra.size());
    j["reduction_second"] = std::vector<double>(rb.data(), rb.data() + rb.size());
    j["eigen_residual"] = residual;
    j["fock_expectation"] = fock;
    *sink << j.dump(2) << "\n";
  } else {
    header(*sink, "chsh state", o.common,
           {{"dim", num(o.dim)}, {"eigen_residual", num(residual)}, {"fock_expectation", num(fock)}});
    *sink << "# block: components\n";
    *sink << "index,value\n";
    for (std::size_t i = 0; i < 9; ++i) *sink << i << "," << psi[i].real() << "\n";
    *sink << "# block: reduction_spectrum\n";
    *sink << "subsystem,index,eigenvalue\n";
    for (Eigen::Index i = 0; i < 3; ++i) *sink << "first," << i << "," << ra(i) << "\n";
    for (Eigen::Index i = 0; i < 3; ++i) *sink << "second," << i << "," << rb(i) << "\n";
  }
  sink.finish();
  return kOk;
}

// ------------------------------------------------------------ mu
struct MuBoundOpts {
  Common common;
  double b1 = 0.0, b1_im = 0.0;
  double b2 = std::sqrt(std::numbers::ln2), b2_im = 0.0;
  std::size_t window = 0;
};

int cmd_mu_bound(const MuBoundOpts& o, std::ostream& out, std::ostream&) {
  const Complex b1(o.b1, o.b1_im), b2(o.b2, o.b2_im);
  const double x = std::norm(b1 - b2);
  const std::size_t window =
      o.window ? o.window : static_cast<std::size_t>(std::max(60.0, std::ceil(3.0 * x) + 20.0));
  std::vector<std::pair<std::string, std::string>> rows{{"dbeta_sq", num(x)}, {"mu_bound", num(mu_bound(b1, b2))}};
  if (x > 0.0) {
    const OverlapBound c = overlap_bound_c(b1, b2, window, window);
    rows.insert(rows.end(), {{"c", num(c.c)},
                             {"argmax_n", std::to_string(c.n)},
                             {"argmax_k", std::to_string(c.k)},
                             {"minus_2log2_c", num(-2.0 * std::log2(c.c))},
                             {"cnk_max_formula", num(cnk_max_formula(x))},
                             {"stirling_bound", num(stirling_bound(x))},
                             {"simplified_bound", num(simplified_bound(x))}});
  }
  Sink sink(o.common.out, out);
  header(*sink, "mu bound", o.common,
         {{"beta1_re", num(o.b1)}, {"beta1_im", num(o.b1_im)}, {"beta2_re", num(o.b2)},
          {"beta2_im", num(o.b2_im)}, {"window", num(window)}});
  *sink << "key,value\n";
  for (const auto& [k, v] : rows) *sink << k << "," << v << "\n";
  sink.finish();
  return kOk;
}

struct MuVerifyOpts {
  Common common{{}, 7};
  std::size_t states = 200;
  std::size_t dim = 24;
  std::vector<double> dbeta_sq{0.5, std::numbers::ln2, 2.0, 4.0};
};

int cmd_mu_verify(const MuVerifyOpts& o, std::ostream& out, std::ostream& err) {
  if (o.dim < 2 || o.states < 1) throw DomainError("mu verify: need dim >= 2 and states >= 1");
  std::mt19937_64 rng(o.common.seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  const TruncatedFockSpace space(o.dim);
  std::ostringstream rows;
  rows << std::setprecision(17);
  double worst = INFINITY;
  for (double x : o.dbeta_sq) {
    if (x < 0.0) throw DomainError("mu verify: dbeta-sq must be >= 0");
    const Complex half = std::polar(0.5 * std::sqrt(x), phase(rng));
    MuVerifier v(-half, half, o.dim);
    for (std::size_t s = 0; s < o.states; ++s) {
      const MuCheck m = v.verify(haar_random_state(space, rng));
      worst = std::min(worst, m.slack);
      rows << x << "," << s << "," << m.h_p << "," << m.h_q << "," << m.bound << "," << m.slack << "\n";
    }
  }
  Sink sink(o.common.out, out);
  header(*sink, "mu verify", o.common,
         {{"states", num(o.states)}, {"dim", num(o.dim)}, {"dbeta_sq", join(o.dbeta_sq)},
          {"min_slack", num(worst)}});
  *sink << "dbeta_sq,state,h_p,h_q,bound,slack\n" << rows.str();
  sink.finish();
  if (worst < -1e-9) {
    err << "mu verify: negative slack " << worst << "\n";
    return kValidationFailed;
  }
  return kOk;
}

// ------------------------------------------------------------ validate
struct ValidateOpts {
  Common common;
  std::string suite = "all";
};

int cmd_validate(const ValidateOpts& o, std::ostream& out, std::ostream& err) {
  const Suite suite = parse_suite(o.suite);
  const auto reports = run_validation(suite, o.common.seed);
  auto j = json_header("validate", o.common);
  j["suite"] = o.suite;
  bool ok = true;
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    nlohmann::ordered_json js;
    js["suite"] = r.suite;
    js["passed"] = r.passed();
    js["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
      nlohmann::ordered_json jc;
      jc["name"] = c.name;
      jc["passed"] = c.passed;
      jc["informational"] = c.informational;
      jc["residual"] = c.residual;
      jc["tolerance"] = c.tolerance;
      jc["detail"] = c.detail;
      js["checks"].push_back(jc);
      if (!c.passed && !c.informational) err << "validate: " << r.suite << "/" << c.name << " failed\n";
    }
    suites.push_back(js);
  }
  j["passed"] = ok;
  j["suites"] = suites;
  Sink sink(o.common.out, out);
  *sink << j.dump(2) << "\n";
  sink.finish();
  return ok ? kOk : kValidationFailed;
}

}  // namespace

const char* version() { return MZBELL_VERSION_STRING; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mach-Zehnder photon-counting, displaced Fock and CHSH numerics"};
  app.name(args.empty() ? "mzbell" : args.front());
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version()));

  auto* figure = app.add_subcommand("figure", "Regenerate figure data as CSV");
  figure->require_subcommand(1);
  DispOpts disp;
  auto* c_disp = figure->add_subcommand("disp", "|<k|D(beta)|n>| over a truncation");
  add_common(c_disp, disp.common);
  c_disp->add_option("--beta", disp.beta, "Real part of beta");
  c_disp->add_option("--beta-im", disp.beta_im, "Imaginary part of beta");
  c_disp->add_option("--dim", disp.dim, "Truncation dimension");
  c_disp->add_option("--method", disp.method, "direct | factorized | laguerre");

  MiOpts mi;
  auto* c_mi = figure->add_subcommand("mi", "|M_i| entries for a list of photon counts");
  add_common(c_mi, mi.ch.common);
  c_mi->add_option("--i-list", mi.i_list, "Comma-separated photon counts")->delimiter(',');
  c_mi->add_option("--rprime", mi.ch.rprime, "|R'|");
  c_mi->add_option("--t", mi.ch.t, "|T|");
  c_mi->add_option("--alpha-scale", mi.ch.alpha_scale, "alpha = alpha_scale / |T|");
  c_mi->add_option("--dim", mi.dim, "Truncation dimension");
  c_mi->add_flag("--strict-unitarity", mi.ch.strict, "Use |R'| = sqrt(1 - |T|^2)");

  GramOpts gram;
  auto* c_gram = figure->add_subcommand("gram", "log10 |Tr(M_j^dag M_i)|");
  add_common(c_gram, gram.ch.common);
  c_gram->add_option("--i-max", gram.i_max, "Largest photon count");
  c_gram->add_option("--dim", gram.dim, "Truncation dimension");
  c_gram->add_option("--rprime", gram.ch.rprime, "|R'|");
  c_gram->add_option("--t", gram.ch.t, "|T|");
  c_gram->add_option("--alpha-scale", gram.ch.alpha_scale, "alpha = alpha_scale / |T|");
  c_gram->add_option("--floor", gram.floor, "Value written for zero overlaps");
  c_gram->add_flag("--strict-unitarity", gram.ch.strict, "Use |R'| = sqrt(1 - |T|^2)");

  auto* chsh = app.add_subcommand("chsh", "CHSH operator analysis");
  chsh->require_subcommand(1);
  ChshOpts scan, optimal, state;
  auto* c_scan = chsh->add_subcommand("scan", "lambda_max over an (E1, E2) grid");
  add_common(c_scan, scan.common);
  c_scan->add_option("--grid-n", scan.grid_n, "Grid points per axis");
  auto* c_opt = chsh->add_subcommand("optimal", "Optimal settings and lambda_max");
  add_common(c_opt, optimal.common);
  c_opt->add_option("--grid-n", optimal.grid_n, "Grid points per axis");
  c_opt->add_option("--format", optimal.format, "csv | json");
  auto* c_state = chsh->add_subcommand("state", "Maximally violating state");
  add_common(c_state, state.common);
  c_state->add_option("--dim", state.dim, "Per-mode truncation for the coherent-state form");
  c_state->add_option("--format", state.format, "csv | json");

  auto* mu = app.add_subcommand("mu", "Entropic uncertainty bound");
  mu->require_subcommand(1);
  MuBoundOpts mb;
  auto* c_mb = mu->add_subcommand("bound", "Bound and overlap constant for two displacements");
  add_common(c_mb, mb.common);
  c_mb->add_option("--beta1", mb.b1, "Real part of beta1");
  c_mb->add_option("--beta1-im", mb.b1_im, "Imaginary part of beta1");
  c_mb->add_option("--beta2", mb.b2, "Real part of beta2");
  c_mb->add_option("--beta2-im", mb.b2_im, "Imaginary part of beta2");
  c_mb->add_option("--window", mb.window, "Scan window (0 = automatic)");
  MuVerifyOpts mv;
  auto* c_mv = mu->add_subcommand("verify", "Entropy sums of random states against the bound");
  add_common(c_mv, mv.common);
  c_mv->add_option("--states", mv.states, "Random states per separation");
  c_mv->add_option("--dim", mv.dim, "State dimension");
  c_mv->add_option("--dbeta-sq", mv.dbeta_sq, "Comma-separated |beta1 - beta2|^2 values")->delimiter(',');

  ValidateOpts val;
  auto* c_val = app.add_subcommand("validate", "Run invariant suites and write a JSON report");
  add_common(c_val, val.common);
  c_val->add_option("--suite", val.suite, "all | fock | optics | povm | mu | chsh");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (c_disp->parsed()) return cmd_disp(disp, out, err);
    if (c_mi->parsed()) return cmd_mi(mi, out, err);
    if (c_gram->parsed()) return cmd_gram(gram, out, err);
    if (c_scan->parsed()) return cmd_chsh_scan(scan, out, err);
    if (c_opt->parsed()) return cmd_chsh_optimal(optimal, out, err);
    if (c_state->parsed()) return cmd_chsh_state(state, out, err);
    if (c_mb->parsed()) return cmd_mu_bound(mb, out, err);
    if (c_mv->parsed()) return cmd_mu_verify(mv, out, err);
    if (c_val->parsed()) return cmd_validate(val, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  err << "error: no command\n";
  return kUsageError;
}

}  // namespace mzbell::cli

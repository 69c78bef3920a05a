#pragma once

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gammabnd/boundary.hpp"
#include "gammabnd/contour.hpp"
#include "gammabnd/dirichlet.hpp"
#include "gammabnd/laurent.hpp"
#include "gammabnd/parallel.hpp"
#include "gammabnd/verify.hpp"
#include "gammabnd/version.hpp"

namespace gammabnd::cli {

using ordered_json = nlohmann::ordered_json;

inline constexpr double kTolFloor = 1e-14;
inline constexpr double kTolCeil = 1e-2;

// Exit codes: 0 success, 1 usage error, 2 domain error, 3 convergence error,
// 4 verification failure.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitDomain = 2,
  kExitConvergence = 3,
  kExitVerifyFailed = 4,
};

struct RunResult {
  int exit_code = kExitOk;
  std::string output;
};

struct RunConfig {
  std::string command;
  std::complex<double> u{1.0, 0.0};
  double v = 1.0;
  std::complex<double> z{1.0, 0.0};
  std::string method = "all";
  double tol = 1e-10;
  std::string format;  // per-command default when empty
  std::string out_path;
  unsigned long seed = 0;
  double perturb = 0.0;
};

// ---- complex literal parsing ("a+bi" with optional spaces) -----------------

namespace detail {

inline std::optional<double> parse_double(std::string_view s) {
  if (s.empty()) return std::nullopt;
  double value = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (*first == '+') ++first;  // from_chars rejects a leading '+'
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last) return std::nullopt;
  return value;
}

// Position of the sign splitting "a+bi" / "a-bi", skipping exponent signs.
inline std::size_t split_sign(std::string_view s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      return i;
    }
  }
  return std::string_view::npos;
}

inline std::optional<double> parse_imag_body(std::string_view body) {
  if (body.empty() || body == "+") return 1.0;
  if (body == "-") return -1.0;
  return parse_double(body);
}

}  // namespace detail

inline std::optional<std::complex<double>> parse_complex(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (const char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) return std::nullopt;
  if (s.back() == 'i' || s.back() == 'I' || s.back() == 'j') {
    const std::string_view body(s.data(), s.size() - 1);
    const std::size_t pos = detail::split_sign(body);
    if (pos == std::string_view::npos) {
      const auto im = detail::parse_imag_body(body);
      if (!im) return std::nullopt;
      return std::complex<double>(0.0, *im);
    }
    const auto re = detail::parse_double(body.substr(0, pos));
    const auto im = detail::parse_imag_body(body.substr(pos));
    if (!re || !im) return std::nullopt;
    return std::complex<double>(*re, *im);
  }
  const auto re = detail::parse_double(s);
  if (!re) return std::nullopt;
  return std::complex<double>(*re, 0.0);
}

inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// Round-trips through parse_complex.
inline std::string format_complex(std::complex<double> c) {
  if (c.imag() == 0.0) return format_double(c.real());
  std::string s = format_double(c.real());
  s += c.imag() < 0.0 ? "-" : "+";
  s += format_double(std::abs(c.imag()));
  s += "i";
  return s;
}

// ---- document plumbing ------------------------------------------------------

namespace detail {

inline RunResult json_result(int code, const ordered_json& doc) {
  // error handler: fuzzed argv bytes can reach error messages, and the
  // document must serialize regardless
  return {code,
          doc.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n"};
}

inline RunResult error_result(const std::string& command, int code,
                              const std::string& error_code,
                              const std::string& message,
                              const ordered_json& extra = ordered_json::object()) {
  ordered_json doc;
  doc["version"] = kVersionString;
  doc["command"] = command;
  doc["error"] = {{"code", error_code}, {"message", message}};
  for (const auto& [k, v] : extra.items()) doc["error"][k] = v;
  return json_result(code, doc);
}

inline RunResult map_error(const std::string& command, const Error& e) {
  ordered_json extra = ordered_json::object();
  int code = kExitUsage;
  if (const auto* ip = dynamic_cast<const InvalidParameters*>(&e)) {
    code = kExitDomain;
    extra["m"] = ip->m();
    extra["k"] = ip->k();
  } else if (dynamic_cast<const OutsideDomain*>(&e) != nullptr ||
             dynamic_cast<const GammaPole*>(&e) != nullptr) {
    code = kExitDomain;
  } else if (const auto* sc = dynamic_cast<const SlowConvergence*>(&e)) {
    code = kExitConvergence;
    extra["achieved"] = sc->achieved();
  } else if (const auto* qf = dynamic_cast<const QuadratureFailure*>(&e)) {
    code = kExitConvergence;
    extra["achieved"] = qf->achieved();
  }
  return error_result(command, code, e.code(), e.what(), extra);
}

inline void csv_header(std::ostringstream& os, const std::string& columns) {
  os << "# gammabnd " << kVersionString << "\n" << columns << "\n";
}

inline bool check_tol(const RunConfig& cfg, RunResult* out) {
  if (std::isfinite(cfg.tol) && cfg.tol >= kTolFloor && cfg.tol <= kTolCeil) {
    return true;
  }
  std::ostringstream msg;
  msg << "tol must lie in [" << kTolFloor << ", " << kTolCeil << "] (got " << cfg.tol
      << ")";
  *out = error_result(cfg.command, kExitUsage, "UsageError", msg.str());
  return false;
}

inline bool check_finite_inputs(const RunConfig& cfg, bool needs_z, RunResult* out) {
  const bool ok = std::isfinite(cfg.u.real()) && std::isfinite(cfg.u.imag()) &&
                  std::isfinite(cfg.v) &&
                  (!needs_z || (std::isfinite(cfg.z.real()) && std::isfinite(cfg.z.imag())));
  if (!ok) {
    *out = error_result(cfg.command, kExitUsage, "UsageError",
                        "u, v and z must be finite");
  }
  return ok;
}

}  // namespace detail

// ---- eval -------------------------------------------------------------------

namespace detail {

inline long terms_or_nodes(const SeriesEval& e) {
  return e.method == Method::integral ? e.n_pos : e.terms();
}

inline RunResult cmd_eval(const RunConfig& cfg) {
  RunResult gate;
  if (!check_tol(cfg, &gate) || !check_finite_inputs(cfg, true, &gate)) return gate;
  std::vector<std::string> methods;
  if (cfg.method == "all") {
    methods = {"laurent", "dirichlet", "integral"};
  } else if (cfg.method == "laurent" || cfg.method == "dirichlet" ||
             cfg.method == "integral") {
    methods = {cfg.method};
  } else {
    return error_result(cfg.command, kExitUsage, "UsageError",
                        "method must be laurent, dirichlet, integral or all");
  }

  const Parameters p{cfg.u, cfg.v};
  const AnnulusPoint z(cfg.z);
  ordered_json doc;
  doc["version"] = kVersionString;
  doc["command"] = "eval";
  doc["params"] = {{"u", format_complex(cfg.u)}, {"v", cfg.v}};
  doc["z"] = format_complex(cfg.z);
  doc["tol"] = cfg.tol;
  doc["results"] = ordered_json::array();

  std::vector<std::pair<std::string, std::complex<double>>> values;
  for (const std::string& m : methods) {
    try {
      SeriesEval e;
      if (m == "laurent") {
        e = eval_laurent(p, z, cfg.tol);
      } else if (m == "dirichlet") {
        e = eval_dirichlet(p, z, cfg.tol);
      } else {
        e = eval_integral(p, z, cfg.tol);
      }
      doc["results"].push_back({{"method", m},
                                {"value_re", e.value.real()},
                                {"value_im", e.value.imag()},
                                {"tail_bound", e.tail_bound},
                                {"terms_or_nodes", terms_or_nodes(e)}});
      values.emplace_back(m, e.value);
    } catch (const Error& err) {
      return map_error(cfg.command, err);
    }
  }
  if (values.size() > 1) {
    ordered_json diffs;
    for (std::size_t i = 0; i < values.size(); ++i) {
      for (std::size_t j = i + 1; j < values.size(); ++j) {
        const double rel =
            std::abs(values[i].second - values[j].second) /
            std::max(std::abs(values[i].second), std::abs(values[j].second));
        diffs[values[i].first + "_vs_" + values[j].first] = rel;
      }
    }
    doc["pairwise_rel_diff"] = diffs;
  }
  if (cfg.format == "csv") {
    std::ostringstream os;
    csv_header(os, "method,value_re,value_im,tail_bound,terms_or_nodes");
    for (const auto& res : doc["results"]) {
      os << res["method"].get<std::string>() << ','
         << format_double(res["value_re"].get<double>()) << ','
         << format_double(res["value_im"].get<double>()) << ','
         << format_double(res["tail_bound"].get<double>()) << ','
         << res["terms_or_nodes"].get<long>() << "\n";
    }
    return {kExitOk, os.str()};
  }
  return json_result(kExitOk, doc);
}

// ---- verify -----------------------------------------------------------------

inline RunResult cmd_verify(const RunConfig& cfg) {
  RunResult gate;
  if (!check_tol(cfg, &gate)) return gate;
  VerifyOptions opt;
  opt.seed = cfg.seed;
  opt.tol = cfg.tol;
  opt.perturb = cfg.perturb;
  const std::vector<CheckResult> checks = run_verification(opt);
  ordered_json doc;
  doc["version"] = kVersionString;
  doc["command"] = "verify";
  doc["seed"] = cfg.seed;
  doc["tol"] = cfg.tol;
  doc["perturb"] = cfg.perturb;
  doc["checks"] = ordered_json::array();
  bool all_pass = true;
  for (const CheckResult& c : checks) {
    doc["checks"].push_back({{"name", c.name},
                             {"points", c.points},
                             {"max_residual", c.max_residual},
                             {"threshold", c.threshold},
                             {"pass", c.pass}});
    all_pass = all_pass && c.pass;
  }
  doc["pass"] = all_pass;
  return json_result(all_pass ? kExitOk : kExitVerifyFailed, doc);
}

// ---- probe ------------------------------------------------------------------

inline RunResult cmd_probe(const RunConfig& cfg, double theta, int steps,
                           double closeness) {
  RunResult gate;
  if (!check_tol(cfg, &gate) || !check_finite_inputs(cfg, false, &gate)) return gate;
  if (steps < 1 || steps > 60 || !(closeness > 0.0) || closeness >= 1.0 ||
      !std::isfinite(theta)) {
    return error_result(cfg.command, kExitUsage, "UsageError",
                        "need 1 <= steps <= 60, closeness in (0, 1), finite theta");
  }
  try {
    const ProbeReport r = radial_probe({cfg.u, cfg.v}, theta, steps, closeness, cfg.tol);
    if (cfg.format == "json") {
      ordered_json doc;
      doc["version"] = kVersionString;
      doc["command"] = "probe";
      doc["params"] = {{"u", format_complex(cfg.u)}, {"v", cfg.v}};
      doc["theta"] = r.direction;
      doc["method"] = method_name(r.method);
      doc["rows"] = ordered_json::array();
      for (std::size_t i = 0; i < r.radii.size(); ++i) {
        doc["rows"].push_back({{"r", r.radii[i]},
                               {"value_re", r.values[i].real()},
                               {"value_im", r.values[i].imag()},
                               {"term_count", r.term_counts[i]},
                               {"status", r.status[i]}});
      }
      return json_result(kExitOk, doc);
    }
    std::ostringstream os;
    csv_header(os, "theta,j,r,value_re,value_im,abs_value,term_count,status");
    for (std::size_t i = 0; i < r.radii.size(); ++i) {
      os << format_double(r.direction) << ',' << (i + 1) << ','
         << format_double(r.radii[i]) << ',' << format_double(r.values[i].real())
         << ',' << format_double(r.values[i].imag()) << ','
         << format_double(std::abs(r.values[i])) << ',' << r.term_counts[i] << ','
         << r.status[i] << "\n";
    }
    return {kExitOk, os.str()};
  } catch (const Error& err) {
    return map_error(cfg.command, err);
  }
}

// ---- coeffs -----------------------------------------------------------------

inline std::optional<std::pair<long, long>> parse_range(const std::string& text) {
  const std::size_t pos = text.find("..");
  auto read = [](std::string_view sv) -> std::optional<long> {
    long value = 0;
    const auto res = std::from_chars(sv.data(), sv.data() + sv.size(), value);
    if (res.ec != std::errc() || res.ptr != sv.data() + sv.size()) return std::nullopt;
    return value;
  };
  if (pos == std::string::npos) {
    const auto single = read(text);
    if (!single) return std::nullopt;
    return std::make_pair(*single, *single);
  }
  const auto lo = read(std::string_view(text).substr(0, pos));
  const auto hi = read(std::string_view(text).substr(pos + 2));
  if (!lo || !hi || *lo > *hi) return std::nullopt;
  return std::make_pair(*lo, *hi);
}

inline RunResult cmd_coeffs(const RunConfig& cfg, const std::string& range) {
  RunResult gate;
  if (!check_finite_inputs(cfg, false, &gate)) return gate;
  const auto r = parse_range(range);
  if (!r || r->second - r->first > 2000000) {
    return error_result(cfg.command, kExitUsage, "UsageError",
                        "--n expects a range like 0..10 (at most 2e6 wide)");
  }
  try {
    const Parameters p{cfg.u, cfg.v};
    const auto seq = gamma_vertical(p, r->first, r->second);
    if (cfg.format == "json") {
      ordered_json doc;
      doc["version"] = kVersionString;
      doc["command"] = "coeffs";
      doc["params"] = {{"u", format_complex(cfg.u)}, {"v", cfg.v}};
      doc["rows"] = ordered_json::array();
      for (const auto& entry : seq) {
        ordered_json row = {{"n", entry.n},
                            {"log_modulus", entry.value.log_modulus},
                            {"argument", entry.value.argument}};
        if (entry.n >= 1) {
          const LogComplex a = asymptotic_log_gamma(p, entry.n);
          row["asymptotic_log_modulus"] = a.log_modulus;
          row["asymptotic_argument"] = a.argument;
        }
        doc["rows"].push_back(row);
      }
      return json_result(kExitOk, doc);
    }
    std::ostringstream os;
    csv_header(os,
               "n,log_modulus,argument,asymptotic_log_modulus,asymptotic_argument");
    for (const auto& entry : seq) {
      os << entry.n << ',' << format_double(entry.value.log_modulus) << ','
         << format_double(entry.value.argument) << ',';
      if (entry.n >= 1) {
        const LogComplex a = asymptotic_log_gamma(p, entry.n);
        os << format_double(a.log_modulus) << ',' << format_double(a.argument);
      } else {
        os << "nan,nan";
      }
      os << "\n";
    }
    return {kExitOk, os.str()};
  } catch (const Error& err) {
    return map_error(cfg.command, err);
  }
}

// ---- scan -------------------------------------------------------------------

inline RunResult cmd_scan(const RunConfig& cfg, int radii, int angles) {
  RunResult gate;
  if (!check_tol(cfg, &gate) || !check_finite_inputs(cfg, false, &gate)) return gate;
  if (radii < 1 || radii > 200 || angles < 1 || angles > 720) {
    return error_result(cfg.command, kExitUsage, "UsageError",
                        "need 1 <= radii <= 200 and 1 <= angles <= 720");
  }
  std::vector<std::string> methods;
  if (cfg.method == "all") {
    methods = {"laurent", "dirichlet"};
  } else if (cfg.method == "laurent" || cfg.method == "dirichlet" ||
             cfg.method == "integral") {
    methods = {cfg.method};
  } else {
    return error_result(cfg.command, kExitUsage, "UsageError",
                        "method must be laurent, dirichlet, integral or all");
  }
  const Parameters p{cfg.u, cfg.v};
  try {
    require_valid(p);
  } catch (const Error& err) {
    return map_error(cfg.command, err);
  }
  struct Row {
    double theta, r, abs_value;
    const char* method;
    std::string status;
  };
  std::vector<Row> rows(methods.size() * static_cast<std::size_t>(radii) *
                        static_cast<std::size_t>(angles));
  try {
    const double va = std::abs(cfg.v);
    parallel_for(rows.size(), [&](std::size_t idx) {
      const std::size_t per_method = static_cast<std::size_t>(radii) * angles;
      const std::size_t m = idx / per_method;
      const std::size_t within = idx % per_method;
      const long i = static_cast<long>(within) / angles + 1;
      const long j = static_cast<long>(within) % angles;
      const double log_r = va * static_cast<double>(2 * i - radii - 1) /
                           static_cast<double>(radii + 1);
      const double theta = -kPi + kTwoPi * static_cast<double>(j + 1) / angles;
      const AnnulusPoint z(std::polar(std::exp(log_r), theta));
      Row row{theta, std::exp(log_r), 0.0, methods[m].c_str(), "ok"};
      try {
        SeriesEval e;
        if (methods[m] == "laurent") {
          e = eval_laurent(p, z, cfg.tol);
        } else if (methods[m] == "dirichlet") {
          e = eval_dirichlet(p, z, cfg.tol);
        } else {
          e = eval_integral(p, z, cfg.tol);
        }
        row.abs_value = std::abs(e.value);
      } catch (const Error& err) {
        row.abs_value = std::numeric_limits<double>::quiet_NaN();
        row.status = err.code();
      }
      rows[idx] = row;
    });
  } catch (const Error& err) {
    return map_error(cfg.command, err);
  }
  if (cfg.format == "json") {
    ordered_json doc;
    doc["version"] = kVersionString;
    doc["command"] = "scan";
    doc["params"] = {{"u", format_complex(cfg.u)}, {"v", cfg.v}};
    doc["rows"] = ordered_json::array();
    for (const Row& row : rows) {
      doc["rows"].push_back({{"theta", row.theta},
                             {"r", row.r},
                             {"abs_value", row.abs_value},
                             {"method", row.method},
                             {"status", row.status}});
    }
    return json_result(kExitOk, doc);
  }
  std::ostringstream os;
  csv_header(os, "theta,r,abs_value,method,status");
  for (const Row& row : rows) {
    os << format_double(row.theta) << ',' << format_double(row.r) << ','
       << format_double(row.abs_value) << ',' << row.method << ',' << row.status
       << "\n";
  }
  return {kExitOk, os.str()};
}

// ---- gapcheck ---------------------------------------------------------------

inline RunResult cmd_gapcheck(const RunConfig& cfg, double q, long k_max,
                              double threshold) {
  if (!std::isfinite(q) || k_max < 2 || k_max > 100000 || !std::isfinite(threshold) ||
      threshold <= 0.0) {
    return error_result(cfg.command, kExitUsage, "UsageError",
                        "need finite q, 2 <= kmax <= 1e5, threshold > 0");
  }
  try {
    const GapReport r = gap_check(q, k_max, threshold);
    if (cfg.format == "json") {
      ordered_json doc;
      doc["version"] = kVersionString;
      doc["command"] = "gapcheck";
      doc["q"] = r.q;
      doc["k_max"] = r.k_max;
      doc["threshold"] = r.threshold;
      doc["strictly_increasing"] = r.strictly_increasing;
      doc["gaps_increasing"] = r.gaps_increasing;
      doc["threshold_index"] = r.threshold_index;
      doc["hypothesis_holds"] = r.hypothesis_holds;
      return json_result(kExitOk, doc);
    }
    std::ostringstream os;
    csv_header(os, "k,lambda,gap");
    for (std::size_t k = 0; k < r.gap.size(); ++k) {
      os << k << ',' << format_double(r.lambda[k]) << ',' << format_double(r.gap[k])
         << "\n";
    }
    return {kExitOk, os.str()};
  } catch (const Error& err) {
    return map_error(cfg.command, err);
  }
}

}  // namespace detail

// ---- entry points -----------------------------------------------------------

inline RunResult run_capture(const std::vector<std::string>& args) {
  RunConfig cfg;
  std::string u_text = "1";
  std::string z_text = "1";
  std::string n_range = "0..10";
  double theta = 0.0;
  int steps = 8;
  double closeness = 1e-6;
  int radii = 3;
  int angles = 8;
  double q = 2.0;
  long k_max = 20;
  double threshold = 1e6;

  CLI::App app{"Laurent series with Gamma coefficients on vertical lines: "
               "evaluation, identity verification, boundary probes"};
  app.name("gammabnd");
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* sub, bool wants_z) {
    sub->add_option("--u", u_text, "complex u, e.g. 0.5+0.3i");
    sub->add_option("--v", cfg.v, "real v (nonzero)");
    if (wants_z) sub->add_option("--z", z_text, "complex z, e.g. 1.2-0.4i");
    sub->add_option("--tol", cfg.tol, "tolerance in [1e-14, 1e-2]");
    sub->add_option("--format", cfg.format, "json or csv");
    sub->add_option("--out", cfg.out_path, "write the document to a file");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate Psi(u, v, z)");
  add_common(eval, true);
  eval->add_option("--method", cfg.method, "laurent, dirichlet, integral or all");

  CLI::App* verify = app.add_subcommand("verify", "run the identity battery");
  verify->add_option("--seed", cfg.seed, "seed for the randomized grid");
  verify->add_option("--tol", cfg.tol, "evaluation tolerance");
  verify->add_option("--perturb", cfg.perturb,
                     "test hook: scale one Laurent coefficient by 1+perturb");
  verify->add_option("--format", cfg.format, "json");
  verify->add_option("--out", cfg.out_path, "write the document to a file");

  CLI::App* probe = app.add_subcommand("probe", "radial probe toward the boundary");
  add_common(probe, false);
  probe->add_option("--theta", theta, "probe direction arg z");
  probe->add_option("--steps", steps, "number of radii e^{v(1-2^-j)}");
  probe->add_option("--closeness", closeness, "floor for 2^-j");

  CLI::App* coeffs = app.add_subcommand("coeffs", "dump the coefficient stream");
  add_common(coeffs, false);
  coeffs->add_option("--n", n_range, "index range, e.g. 0..10");

  CLI::App* scan = app.add_subcommand("scan", "polar |Psi| grid inside the annulus");
  add_common(scan, false);
  scan->add_option("--method", cfg.method, "laurent, dirichlet, integral or all");
  scan->add_option("--radii", radii, "number of radii");
  scan->add_option("--angles", angles, "number of angles");

  CLI::App* gapcheck = app.add_subcommand("gapcheck", "gap growth of q^k frequencies");
  gapcheck->add_option("--q", q, "frequency ratio (> 1)");
  gapcheck->add_option("--kmax", k_max, "largest exponent");
  gapcheck->add_option("--threshold", threshold, "gap size to certify");
  gapcheck->add_option("--format", cfg.format, "csv or json");
  gapcheck->add_option("--out", cfg.out_path, "write the document to a file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {kExitOk, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {kExitOk, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    return detail::error_result("", kExitUsage, "UsageError", e.what());
  }

  RunResult result;
  try {
    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    const auto u_parsed = parse_complex(u_text);
    const auto z_parsed = parse_complex(z_text);
    if (!u_parsed || !z_parsed) {
      return detail::error_result(cfg.command, kExitUsage, "UsageError",
                                  "could not parse a complex literal (expected a+bi)");
    }
    cfg.u = *u_parsed;
    cfg.z = *z_parsed;

    if (cfg.command == "eval") {
      result = detail::cmd_eval(cfg);
    } else if (cfg.command == "verify") {
      result = detail::cmd_verify(cfg);
    } else if (cfg.command == "probe") {
      result = detail::cmd_probe(cfg, theta, steps, closeness);
    } else if (cfg.command == "coeffs") {
      result = detail::cmd_coeffs(cfg, n_range);
    } else if (cfg.command == "scan") {
      result = detail::cmd_scan(cfg, radii, angles);
    } else {
      result = detail::cmd_gapcheck(cfg, q, k_max, threshold);
    }
  } catch (const Error& e) {
    result = detail::map_error(cfg.command, e);
  } catch (const std::invalid_argument& e) {
    result = detail::error_result(cfg.command, kExitUsage, "UsageError", e.what());
  } catch (const std::exception& e) {
    result = detail::error_result(cfg.command, kExitUsage, "InternalError", e.what());
  } catch (...) {
    result = detail::error_result(cfg.command, kExitUsage, "InternalError",
                                  "unknown failure");
  }

  if (!cfg.out_path.empty() && result.exit_code == kExitOk) {
    std::ofstream out(cfg.out_path);
    if (!out) {
      return detail::error_result(cfg.command, kExitUsage, "UsageError",
                                  "cannot open --out path " + cfg.out_path);
    }
    out << result.output;
    result.output.clear();
  }
  return result;
}

inline int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  const RunResult r = run_capture(args);
  std::cout << r.output;
  return r.exit_code;
}

}  // namespace gammabnd::cli

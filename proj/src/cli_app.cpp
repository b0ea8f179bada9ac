// Copyright 2026 The anyonint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "anyonint/cli_app.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "anyonint/interferometry.hpp"
#include "anyonint/model.hpp"
#include "anyonint/model_io.hpp"
#include "anyonint/oracle.hpp"
#include "anyonint/verify.hpp"

namespace anyonint {

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr double kOracleThreshold = 1e-10;

double cli_tolerance() {
  const char* env = std::getenv("ANYON_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTol;
  double value = 0.0;
  const char* end = env + std::string_view(env).size();
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || !(value > 0.0))
    throw DomainError("ANYON_TOL must be a positive number, got '" +
                      std::string(env) + "'");
  return value;
}

ModelPtr load_any_model(const std::string& spec) {
  const auto& names = builtin_model_names();
  if (std::find(names.begin(), names.end(), spec) != names.end())
    return builtin_model(spec);
  if (std::filesystem::exists(spec)) return load_model_file(spec);
  throw DomainError("model '" + spec +
                    "' is neither a builtin name nor an existing file");
}

std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// --target "1:0.577,psi:0.5+0.2i" -> charge name to amplitude
std::map<std::string, Complex> parse_target_flag(const std::string& text) {
  std::map<std::string, Complex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const size_t colon = item.find(':');
    if (colon == std::string::npos || colon == 0)
      throw DomainError("bad --target item '" + item +
                        "' (expected charge:amplitude)");
    const std::string name = item.substr(0, colon);
    if (out.count(name))
      throw DomainError("duplicate charge '" + name + "' in --target");
    out[name] = parse_complex_flag(item.substr(colon + 1));
  }
  if (out.empty()) throw DomainError("--target lists no amplitudes");
  return out;
}

Direction parse_direction(const std::string& text) {
  if (text == "h" || text == "horizontal") return Direction::horizontal;
  if (text == "v" || text == "vertical") return Direction::vertical;
  throw DomainError("bad probe direction '" + text +
                    "' (expected h/horizontal or v/vertical)");
}

// --probe "sigma" or --probe "sigma:h:0.6,psi:v:0.8"
ProbeSpec parse_probe_flag(const ModelPtr& model, const std::string& text,
                           bool normalize, double tol) {
  if (text.find(':') == std::string::npos) {
    if (model->find_charge(text) < 0)
      throw DomainError("unknown probe charge '" + text + "'");
    return ProbeSpec::definite(model, text);
  }
  std::vector<std::array<Complex, 2>> amps(
      model->charge_count(), {Complex{0.0, 0.0}, Complex{0.0, 0.0}});
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const size_t c1 = item.find(':');
    const size_t c2 = c1 == std::string::npos ? std::string::npos
                                              : item.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw DomainError("bad --probe item '" + item +
                        "' (expected charge:dir:amplitude)");
    const int b = model->charge_id(item.substr(0, c1));
    const Direction dir = parse_direction(item.substr(c1 + 1, c2 - c1 - 1));
    amps[b][dir == Direction::horizontal ? 0 : 1] =
        parse_complex_flag(item.substr(c2 + 1));
  }
  if (normalize) {
    double norm = 0.0;
    for (const auto& a : amps) norm += std::norm(a[0]) + std::norm(a[1]);
    if (norm <= 0.0) throw DomainError("cannot normalize a zero probe");
    const double scale = 1.0 / std::sqrt(norm);
    for (auto& a : amps) {
      a[0] *= scale;
      a[1] *= scale;
    }
  }
  return ProbeSpec(model, std::move(amps), tol);
}

BeamSplitter parse_splitter(const std::string& t_text,
                            const std::string& r_text, bool normalize,
                            double tol) {
  Complex t = parse_complex_flag(t_text);
  Complex r = parse_complex_flag(r_text);
  if (normalize) {
    const double norm = std::sqrt(std::norm(t) + std::norm(r));
    if (norm <= 0.0) throw DomainError("cannot normalize a zero beam splitter");
    t /= norm;
    r /= norm;
  }
  return BeamSplitter(t, r, tol);
}

ordered_json complex_pair(Complex v) {
  return ordered_json::array({v.real(), v.imag()});
}

ordered_json rho_to_json(const PairBasisMatrix& rho) {
  const AnyonModel& m = *rho.model();
  ordered_json rows = ordered_json::array();
  const auto& basis = rho.basis();
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) {
      if (basis[i].f != basis[j].f) continue;  // structurally zero
      const Complex v = rho.matrix()(static_cast<Eigen::Index>(i),
                                     static_cast<Eigen::Index>(j));
      rows.push_back({{"a", m.charge_name(basis[i].a)},
                      {"f", m.charge_name(basis[i].f)},
                      {"mu", basis[i].mu},
                      {"a_prime", m.charge_name(basis[j].a)},
                      {"nu", basis[j].mu},
                      {"re", v.real()},
                      {"im", v.imag()}});
    }
  return rows;
}

std::string rho_to_csv(const PairBasisMatrix& rho) {
  const AnyonModel& m = *rho.model();
  std::string out = "a,f,mu,a_prime,nu,re,im\n";
  const auto& basis = rho.basis();
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) {
      if (basis[i].f != basis[j].f) continue;
      const Complex v = rho.matrix()(static_cast<Eigen::Index>(i),
                                     static_cast<Eigen::Index>(j));
      out += m.charge_name(basis[i].a) + "," + m.charge_name(basis[i].f) + "," +
             std::to_string(basis[i].mu) + "," + m.charge_name(basis[j].a) +
             "," + std::to_string(basis[j].mu) + "," + fmt_g17(v.real()) + "," +
             fmt_g17(v.imag()) + "\n";
    }
  return out;
}

struct RunOptions {
  std::string model;
  std::string target;
  std::string probe;
  std::string t1 = "1";
  std::string r1 = "0";
  std::string t2 = "1";
  std::string r2 = "0";
  double theta1 = 0.0;
  double theta2 = 0.0;
  std::string placement = "below";
  int n_probes = -1;
  bool asymptotic_mode = false;
  bool stray_mode = false;
  std::string out_format = "json";
  bool check = false;
  bool normalize = false;
};

int cmd_verify(const std::string& model_spec, std::ostream& out) {
  const double tol = cli_tolerance();
  const ModelPtr model = load_any_model(model_spec);
  const VerificationReport report = verify_model(*model, tol);
  out << report.to_text();
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

int cmd_run(const RunOptions& opt, std::ostream& out, std::ostream& err) {
  const double tol = cli_tolerance();
  if (opt.asymptotic_mode && opt.stray_mode)
    throw DomainError("--asymptotic and --stray are mutually exclusive");
  if (!opt.asymptotic_mode && opt.n_probes < 0)
    throw DomainError("--N is required unless --asymptotic is given");

  const ModelPtr model = load_any_model(opt.model);
  const TargetState target = TargetState::from_map(
      model, parse_target_flag(opt.target), opt.normalize, tol);
  const ProbeSpec probe = parse_probe_flag(model, opt.probe, opt.normalize, tol);

  InterferometerConfig config;
  config.t1 = parse_splitter(opt.t1, opt.r1, opt.normalize, tol);
  config.t2 = parse_splitter(opt.t2, opt.r2, opt.normalize, tol);
  config.theta_1 = opt.theta1;
  config.theta_2 = opt.theta2;
  if (opt.placement == "below")
    config.placement = Placement::below;
  else if (opt.placement == "above")
    config.placement = Placement::above;
  else
    throw DomainError("bad --placement '" + opt.placement +
                      "' (expected below or above)");

  const char* mode = opt.asymptotic_mode ? "asymptotic"
                     : opt.stray_mode    ? "stray"
                                         : "evolve";

  // The stray limit is evolve at t1 = 1, r1 = 0, placement below.
  InterferometerConfig effective = config;
  if (opt.stray_mode) {
    effective.t1 = BeamSplitter{Complex{1.0, 0.0}, Complex{0.0, 0.0}};
    effective.placement = Placement::below;
  }

  ordered_json doc;
  doc["model"] = model->name().empty() ? opt.model : model->name();
  doc["mode"] = mode;
  if (!opt.asymptotic_mode) doc["N"] = opt.n_probes;
  doc["tolerance"] = tol;
  doc["placement"] = opt.placement;

  const DifferenceChannelMatrix channels = decompose_initial(target);
  ConvergenceReport convergence;

  PairBasisMatrix rho = [&]() {
    if (opt.asymptotic_mode) {
      AsymptoticResult res = asymptotic(target, probe, config, tol);
      convergence = std::move(res.report);
      return std::move(res.rho);
    }
    if (opt.stray_mode) return stray_anyon_pass(target, probe, opt.n_probes);
    return evolve(target, probe, config, opt.n_probes);
  }();

  ordered_json chans = ordered_json::array();
  for (const auto& [key, coeff] : channels.entries()) {
    const Complex factor =
        opt.asymptotic_mode
            ? channel_bracket(*model, key.e, probe, effective)
            : channel_factor(*model, key.e, probe, effective, opt.n_probes);
    chans.push_back({{"a", model->charge_name(key.a)},
                     {"a_prime", model->charge_name(key.a_prime)},
                     {"e", model->charge_name(key.e)},
                     {"alpha", key.alpha},
                     {"beta", key.beta},
                     {"coefficient", complex_pair(coeff)},
                     {"factor", complex_pair(factor)}});
  }
  doc["channels"] = std::move(chans);
  doc["rho"] = rho_to_json(rho);
  doc["trace"] = complex_pair(rho.trace());

  if (opt.asymptotic_mode) {
    ordered_json conv = ordered_json::array();
    for (const ChannelConvergence& c : convergence.channels)
      conv.push_back({{"a", model->charge_name(c.key.a)},
                      {"a_prime", model->charge_name(c.key.a_prime)},
                      {"e", model->charge_name(c.key.e)},
                      {"alpha", c.key.alpha},
                      {"beta", c.key.beta},
                      {"status", to_string(c.status)},
                      {"factor", complex_pair(c.factor)}});
    doc["convergence"] = std::move(conv);
  }

  bool check_failed = false;
  if (opt.check) {
    if (!opt.asymptotic_mode && opt.n_probes <= 12) {
      Scenario scenario{target, {probe}, effective, opt.n_probes};
      const ComparisonReport cmp =
          closed_form_vs_oracle(scenario, kOracleThreshold);
      doc["check"] = {{"max_deviation", cmp.max_deviation},
                      {"threshold", cmp.threshold},
                      {"pass", cmp.pass}};
      check_failed = !cmp.pass;
    } else {
      doc["check"] = {{"skipped", opt.asymptotic_mode
                                      ? "oracle comparison needs finite N"
                                      : "oracle comparison needs N <= 12"}};
    }
  }

  if (opt.out_format == "csv")
    out << rho_to_csv(rho);
  else
    out << doc.dump(2) << "\n";

  if (check_failed) {
    err << "oracle comparison failed: max deviation "
        << fmt_g17(doc["check"]["max_deviation"].get<double>()) << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_sweep(const RunOptions& opt, int n_max, std::ostream& out) {
  const double tol = cli_tolerance();
  if (n_max < 0) throw DomainError("--N-max must be >= 0");
  const ModelPtr model = load_any_model(opt.model);
  const TargetState target = TargetState::from_map(
      model, parse_target_flag(opt.target), opt.normalize, tol);
  const ProbeSpec probe = parse_probe_flag(model, opt.probe, opt.normalize, tol);

  InterferometerConfig config;
  config.t1 = parse_splitter(opt.t1, opt.r1, opt.normalize, tol);
  config.t2 = parse_splitter(opt.t2, opt.r2, opt.normalize, tol);
  config.theta_1 = opt.theta1;
  config.theta_2 = opt.theta2;
  config.placement = opt.placement == "above" ? Placement::above
                                              : Placement::below;

  // One row per channel (a, a', e) per N; the factor depends on e only.
  const DifferenceChannelMatrix channels = decompose_initial(target);
  std::vector<ChannelKey> keys;
  for (const auto& [key, coeff] : channels.entries()) {
    const ChannelKey flat{key.a, key.a_prime, key.e, 0, 0};
    if (keys.empty() || keys.back() != flat) keys.push_back(flat);
  }

  std::map<int, Complex> bracket;
  std::map<int, Complex> running;
  for (const ChannelKey& key : keys) {
    bracket.emplace(key.e, channel_bracket(*model, key.e, probe, config));
    running.emplace(key.e, Complex{1.0, 0.0});
  }

  if (opt.out_format == "csv") {
    out << "N,a,a_prime,e,factor_re,factor_im,factor_abs\n";
    for (int n = 0; n <= n_max; ++n) {
      for (const ChannelKey& key : keys) {
        const Complex f = running[key.e];
        out << n << "," << model->charge_name(key.a) << ","
            << model->charge_name(key.a_prime) << ","
            << model->charge_name(key.e) << "," << fmt_g17(f.real()) << ","
            << fmt_g17(f.imag()) << "," << fmt_g17(std::abs(f)) << "\n";
      }
      for (auto& [e, value] : running) value *= bracket[e];
    }
  } else {
    ordered_json rows = ordered_json::array();
    for (int n = 0; n <= n_max; ++n) {
      for (const ChannelKey& key : keys) {
        const Complex f = running[key.e];
        rows.push_back({{"N", n},
                        {"a", model->charge_name(key.a)},
                        {"a_prime", model->charge_name(key.a_prime)},
                        {"e", model->charge_name(key.e)},
                        {"factor", complex_pair(f)}});
      }
      for (auto& [e, value] : running) value *= bracket[e];
    }
    ordered_json doc;
    doc["model"] = model->name().empty() ? opt.model : model->name();
    doc["mode"] = "sweep";
    doc["N_max"] = n_max;
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace

std::complex<double> parse_complex_flag(std::string_view text) {
  // "re" or "re+imi" / "re-imi", no spaces; the imaginary part always carries
  // an explicit sign and a trailing 'i'.
  const auto bad = [&]() {
    return DomainError("cannot parse complex number '" + std::string(text) +
                       "' (expected re or re+imi / re-imi)");
  };
  if (text.empty()) throw bad();

  auto parse_double = [&](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);  // from_chars quirk
    double value = 0.0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || s.empty()) throw bad();
    return value;
  };

  if (text.back() != 'i') return {parse_double(text), 0.0};

  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the sign of the imaginary part: the last '+'/'-' that is not at
  // position 0 and not part of an exponent.
  size_t split = std::string_view::npos;
  for (size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' &&
        body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) throw bad();
  const double re = parse_double(body.substr(0, split));
  std::string_view imag = body.substr(split);  // includes the sign
  double im = 0.0;
  if (imag == "+")
    im = 1.0;
  else if (imag == "-")
    im = -1.0;
  else
    im = parse_double(imag);
  return {re, im};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"anyonic-charge interferometric decoherence toolkit"};
  app.require_subcommand(1);

  std::string verify_model_spec;
  CLI::App* verify =
      app.add_subcommand("verify", "run the model consistency checks");
  verify->add_option("--model", verify_model_spec,
                     "builtin model name or model file path")
      ->required();

  RunOptions run_opt;
  int n_max = -1;
  auto add_common = [&](CLI::App* cmd, RunOptions& o) {
    cmd->add_option("--model", o.model, "builtin model name or model file")
        ->required();
    cmd->add_option("--target", o.target,
                    "target amplitudes, charge:amplitude[,...]")
        ->required();
    cmd->add_option("--probe", o.probe,
                    "probe charge name, or charge:dir:amplitude[,...] with "
                    "dir h|v")
        ->required();
    cmd->add_option("--t1", o.t1, "first splitter transmission amplitude");
    cmd->add_option("--r1", o.r1, "first splitter reflection amplitude");
    cmd->add_option("--t2", o.t2, "second splitter transmission amplitude");
    cmd->add_option("--r2", o.r2, "second splitter reflection amplitude");
    cmd->add_option("--theta1", o.theta1, "bottom-path phase (radians)");
    cmd->add_option("--theta2", o.theta2, "top-path phase (radians)");
    cmd->add_option("--placement", o.placement,
                    "target antiparticle placement: below or above");
    cmd->add_option("--out", o.out_format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--normalize", o.normalize,
                  "renormalize target/probe amplitudes and the splitters");
  };

  CLI::App* run = app.add_subcommand("run", "compute the evolved density matrix");
  add_common(run, run_opt);
  run->add_option("--N", run_opt.n_probes, "number of probes");
  run->add_flag("--asymptotic", run_opt.asymptotic_mode,
                "take the infinite-probe limit");
  run->add_flag("--stray", run_opt.stray_mode,
                "stray-anyon passes (t1 = 1, r1 = 0); --N gives the passes");
  run->add_flag("--check", run_opt.check,
                "also run the path-enumeration oracle comparison (N <= 12)");

  CLI::App* sweep =
      app.add_subcommand("sweep", "per-channel suppression factors vs N");
  add_common(sweep, run_opt);
  sweep->add_option("--N-max", n_max, "largest N in the sweep")->required();
  sweep->parse_complete_callback([&]() {
    if (sweep->count("--out") == 0) run_opt.out_format = "csv";
  });

  std::vector<const char*> argv;
  argv.push_back("anyonint");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(verify_model_spec, out);
    if (run->parsed()) return cmd_run(run_opt, out, err);
    if (sweep->parsed()) return cmd_sweep(run_opt, n_max, out);
    err << "error: no subcommand\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace anyonint

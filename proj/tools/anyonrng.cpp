// Copyright 2026 The anyonrng Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: simulate | fcurve | certify | expand | extract |
// validate.
//
// Exit codes: 0 success, 1 failed validation or internal error, 2 usage/config/I/O
// error, 3 solver failure, 4 data-integrity error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "anyonrng/bound_solver.hpp"
#include "anyonrng/certifier.hpp"
#include "anyonrng/errors.hpp"
#include "anyonrng/mabk.hpp"
#include "anyonrng/parallel.hpp"
#include "anyonrng/physics_checks.hpp"
#include "anyonrng/protocol.hpp"
#include "anyonrng/serialization.hpp"
#include "anyonrng/toeplitz_extractor.hpp"
#include "anyonrng/trial_engine.hpp"

namespace {

using anyonrng::Json;

enum ExitCode { kOk = 0, kChecksFailed = 1, kUsage = 2, kSolver = 3, kData = 4 };

// Missing or unreadable files; reported as a usage/config error.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSON config: top-level keys set global options, an object keyed by a
// subcommand name sets that subcommand's options, e.g.
//   {"threads": 4, "simulate": {"trials": 100000, "noise-p": 0.1}}
class ConfigJson : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override {
    return {};
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    Json j;
    try {
      input >> j;
    } catch (const Json::exception& e) {
      throw CLI::ConversionError(std::string("config is not valid JSON: ") +
                                 e.what());
    }
    if (!j.is_object()) throw CLI::ConversionError("config must be a JSON object");
    std::vector<CLI::ConfigItem> items;
    collect(j, {}, items);
    return items;
  }

 private:
  static void collect(const Json& obj, const std::vector<std::string>& parents,
                      std::vector<CLI::ConfigItem>& items) {
    for (const auto& [key, value] : obj.items()) {
      if (value.is_object()) {
        auto next = parents;
        next.push_back(key);
        collect(value, next, items);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_boolean()) {
        item.inputs = {value.get<bool>() ? "true" : "false"};
      } else if (value.is_string()) {
        item.inputs = {value.get<std::string>()};
      } else if (value.is_number()) {
        item.inputs = {value.dump()};
      } else if (value.is_array()) {
        for (const auto& v : value) {
          item.inputs.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        }
      } else {
        throw CLI::ConversionError("unsupported config value for '" + key + "'");
      }
      items.push_back(std::move(item));
    }
  }
};

struct Global {
  int threads = 0;
  std::string format = "json";
  std::string out;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Writes to `path`, or stdout when empty.
void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << content;
  if (!out) throw IoError("write to '" + path + "' failed");
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw anyonrng::DataIntegrityError(what + " is not valid JSON: " + e.what());
  }
}

Json document(const std::string& command, const Json& config) {
  return Json{{"format_version", anyonrng::kFormatVersion},
              {"command", command},
              {"config", config}};
}

anyonrng::FCurveTable load_fcurve(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const Json j = parse_json(text, path);
    try {
      return anyonrng::fcurve_from_json(j.contains("fcurve") ? j.at("fcurve") : j);
    } catch (const Json::exception& e) {
      throw anyonrng::DataIntegrityError("bad f-curve JSON: " +
                                         std::string(e.what()));
    }
  }
  std::istringstream in(text);
  return anyonrng::read_fcurve_csv(in);
}

std::vector<anyonrng::TrialRecord> load_records(const std::string& path) {
  std::istringstream in(read_file(path));
  return anyonrng::read_records_csv(in);
}

anyonrng::SettingsDistribution distribution_for(std::optional<double> alpha,
                                                double k) {
  if (!alpha) return anyonrng::SettingsDistribution::uniform();
  if (!(*alpha > 0.0)) throw std::invalid_argument("--alpha must be positive");
  return anyonrng::SettingsDistribution::biased(k, *alpha);
}

Json alpha_json(const std::optional<double>& alpha) {
  return alpha ? Json(*alpha) : Json(nullptr);
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::uint64_t trials = 0;
  std::optional<double> alpha;
  double noise_p = 0.0;
  std::uint64_t seed = 1;
  std::string summary;
};

int run_simulate(const Global& g, const SimulateArgs& a) {
  if (a.trials == 0) throw CLI::ValidationError("--trials", "must be positive");
  const auto dist = distribution_for(a.alpha, static_cast<double>(a.trials));
  const auto noise = a.noise_p > 0.0 ? anyonrng::NoiseSpec::depolarizing(a.noise_p)
                                     : anyonrng::NoiseSpec::none();
  noise.validate();

  const Json config{{"trials", a.trials},
                    {"alpha", alpha_json(a.alpha)},
                    {"noise", noise.kind_name()},
                    {"noise-p", a.noise_p},
                    {"seed", a.seed},
                    {"settings", anyonrng::to_json(dist)}};
  const auto records = anyonrng::run_trials(
      a.trials, dist, noise, a.seed, anyonrng::resolve_thread_count(g.threads));
  const auto est = anyonrng::estimate(records, dist);

  std::ostringstream out;
  if (g.format == "csv") {
    anyonrng::write_records_csv(out, records, document("simulate", config));
  } else {
    Json doc = document("simulate", config);
    doc["estimate"] = anyonrng::to_json(est);
    Json rows = Json::array();
    for (const auto& r : records) {
      rows.push_back({r.settings.x, r.settings.y, r.settings.z, r.a, r.b, r.c});
    }
    doc["records_columns"] = {"x", "y", "z", "a", "b", "c"};
    doc["records"] = std::move(rows);
    out << doc.dump(2) << '\n';
  }
  write_output(g.out, out.str());

  if (!a.summary.empty()) {
    Json doc = document("simulate", config);
    doc["estimate"] = anyonrng::to_json(est);
    write_output(a.summary, doc.dump(2) + "\n");
  }
  std::cerr << "L_hat = " << anyonrng::format_double(est.l_hat) << " (k = "
            << est.k << ")\n";
  return kOk;
}

// ------------------------------------------------------------------ fcurve

struct FcurveArgs {
  std::string level = "1";
  int grid = 21;
  double tolerance = 1e-7;
  int max_iterations = 200;
  bool symmetry_dedup = false;
};

int run_fcurve(const Global& g, const FcurveArgs& a) {
  anyonrng::BoundOptions opt;
  opt.level = anyonrng::parse_level(a.level);
  opt.sdp.tolerance = a.tolerance;
  opt.sdp.max_iterations = a.max_iterations;
  opt.threads = anyonrng::resolve_thread_count(g.threads);
  opt.symmetry_dedup = a.symmetry_dedup;
  if (a.grid < 2) throw CLI::ValidationError("--grid", "must be at least 2");

  const Json config{{"level", anyonrng::to_string(opt.level)},
                    {"grid", a.grid},
                    {"tolerance", a.tolerance},
                    {"max-iterations", a.max_iterations},
                    {"symmetry-dedup", a.symmetry_dedup}};
  const auto table = anyonrng::build_fcurve(a.grid, opt);

  std::ostringstream out;
  if (g.format == "csv") {
    anyonrng::write_fcurve_csv(out, table, document("fcurve", config));
  } else {
    Json doc = document("fcurve", config);
    doc["fcurve"] = anyonrng::to_json(table);
    out << doc.dump(2) << '\n';
  }
  write_output(g.out, out.str());
  for (const auto& p : table.points) {
    std::cerr << "L = " << anyonrng::format_double(p.l)
              << "  P* = " << anyonrng::format_double(p.p_star)
              << "  f = " << anyonrng::format_double(p.f) << '\n';
  }
  return kOk;
}

// ----------------------------------------------------------------- certify

struct CertifyArgs {
  std::string records;
  std::string fcurve;
  std::optional<double> alpha;
  double delta = 0.001;
  double epsilon_prime = 0.01;
  int thresholds = 21;
};

int run_certify(const Global& g, const CertifyArgs& a) {
  if (g.format != "json") {
    throw CLI::ValidationError("--format", "certify writes JSON only");
  }
  const auto table = load_fcurve(a.fcurve);
  const auto records = load_records(a.records);
  if (records.empty()) throw anyonrng::DataIntegrityError("no trial records");
  const double k = static_cast<double>(records.size());
  const auto dist = distribution_for(a.alpha, k);

  auto params = anyonrng::CertificationParams::for_distribution(records.size(), dist);
  params.delta = a.delta;
  params.epsilon_prime = a.epsilon_prime;
  params.thresholds = anyonrng::default_thresholds(a.thresholds);

  const auto est = anyonrng::estimate(records, dist);
  const auto cert = anyonrng::certify(est, params, table);

  const Json config{{"records", a.records},
                    {"fcurve", a.fcurve},
                    {"alpha", alpha_json(a.alpha)},
                    {"delta", a.delta},
                    {"epsilon-prime", a.epsilon_prime},
                    {"thresholds", a.thresholds}};
  Json doc = document("certify", config);
  doc["estimate"] = anyonrng::to_json(est);
  doc["certificate"] = anyonrng::to_json(cert);
  write_output(g.out, doc.dump(2) + "\n");
  std::cerr << "L_hat = " << anyonrng::format_double(cert.l_hat)
            << "  bound = " << anyonrng::format_double(cert.bound_bits)
            << " bits  net = " << anyonrng::format_double(cert.net_bits)
            << " bits\n";
  return kOk;
}

// ------------------------------------------------------------------ expand

struct ExpandArgs {
  std::string fcurve;
  std::optional<double> alpha;
  double l_m = 3.9;
  double delta = 0.001;
  double epsilon_prime = 0.01;
  double k_min = 1e3;
  double k_max = 1e7;
  int per_decade = 10;
};

int run_expand(const Global& g, const ExpandArgs& a) {
  if (a.alpha && !(*a.alpha > 0.0)) {
    throw CLI::ValidationError("--alpha", "must be positive");
  }
  const auto table = load_fcurve(a.fcurve);
  const auto grid = anyonrng::log_k_grid(a.k_min, a.k_max, a.per_decade);
  const auto curve = anyonrng::net_randomness_curve(
      grid, a.alpha, a.l_m, a.delta, a.epsilon_prime, table);

  const Json config{{"fcurve", a.fcurve},
                    {"alpha", alpha_json(a.alpha)},
                    {"l-m", a.l_m},
                    {"delta", a.delta},
                    {"epsilon-prime", a.epsilon_prime},
                    {"k-min", a.k_min},
                    {"k-max", a.k_max},
                    {"per-decade", a.per_decade}};
  std::ostringstream out;
  if (g.format == "csv") {
    anyonrng::write_expansion_csv(out, curve, document("expand", config));
  } else {
    Json doc = document("expand", config);
    doc["expansion"] = anyonrng::to_json(curve);
    out << doc.dump(2) << '\n';
  }
  write_output(g.out, out.str());
  if (curve.crossing_k) {
    std::cerr << "net randomness turns positive at k = "
              << anyonrng::format_double(*curve.crossing_k) << '\n';
  } else {
    std::cerr << "net randomness stays non-positive on the grid\n";
  }
  return kOk;
}

// ----------------------------------------------------------------- extract

struct ExtractArgs {
  std::string records;
  std::string certificate;
  std::string seed_file;
  std::uint64_t seed = 1;
  double security = 1e-6;
  bool binary = false;
};

int run_extract(const Global& g, const ExtractArgs& a) {
  const auto records = load_records(a.records);
  const Json cert_doc = parse_json(read_file(a.certificate), a.certificate);
  anyonrng::EntropyCertificate cert;
  try {
    cert = anyonrng::certificate_from_json(
        cert_doc.contains("certificate") ? cert_doc.at("certificate") : cert_doc);
  } catch (const Json::exception& e) {
    throw anyonrng::DataIntegrityError("bad certificate: " + std::string(e.what()));
  }
  if (cert.params.k != records.size()) {
    throw anyonrng::DataIntegrityError(
        "certificate is for k = " + std::to_string(cert.params.k) + " but " +
        std::to_string(records.size()) + " records were given");
  }

  const auto raw = anyonrng::raw_bits_from_records(records);
  const std::size_t n = raw.size();
  const std::size_t m = std::min<std::size_t>(
      anyonrng::output_length(cert.bound_bits, a.security), n);

  anyonrng::Bits out_bits;
  anyonrng::ToeplitzSeed seed;
  if (m > 0) {
    const std::size_t need = anyonrng::ToeplitzSeed::required_length(n, m);
    if (!a.seed_file.empty()) {
      std::string hex = read_file(a.seed_file);
      while (!hex.empty() && std::isspace(static_cast<unsigned char>(hex.back()))) {
        hex.pop_back();
      }
      if (hex.size() != (need + 3) / 4) {
        throw anyonrng::DataIntegrityError(
            "seed file has " + std::to_string(hex.size()) + " hex digits, need " +
            std::to_string((need + 3) / 4) + " for " + std::to_string(need) +
            " bits");
      }
      try {
        seed.bits = anyonrng::bits_from_hex(hex, need);
      } catch (const std::invalid_argument& e) {
        throw anyonrng::DataIntegrityError(e.what());
      }
    } else {
      std::mt19937_64 rng(a.seed);
      seed = anyonrng::ToeplitzSeed::random(n, m, rng);
    }
    out_bits = anyonrng::extract(raw, seed, m);
  } else {
    std::cerr << "warning: certified bound gives no extractable bits; output "
                 "is empty\n";
  }

  if (a.binary) {
    const auto bytes = anyonrng::pack_bytes(out_bits);
    write_output(g.out, std::string(bytes.begin(), bytes.end()));
  } else {
    const Json config{{"records", a.records},
                      {"certificate", a.certificate},
                      {"seed-file", a.seed_file},
                      {"seed", a.seed_file.empty() ? Json(a.seed) : Json(nullptr)},
                      {"security", a.security}};
    Json doc = document("extract", config);
    doc["n"] = n;
    doc["m"] = m;
    doc["bound_bits"] = cert.bound_bits;
    doc["seed_hex"] = anyonrng::bits_to_hex(seed.bits);
    doc["bits_hex"] = anyonrng::bits_to_hex(out_bits);
    write_output(g.out, doc.dump(2) + "\n");
  }
  std::cerr << "extracted " << m << " bits from " << n << " raw bits\n";
  return kOk;
}

// ---------------------------------------------------------------- validate

struct ValidateArgs {
  int runs = 10000;
  std::uint64_t seed = 1;
};

Json matrix_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json gate_json(const anyonrng::GateCheck& c) {
  return Json{{"name", c.name},
              {"passed", c.passed()},
              {"deviation", c.deviation},
              {"leakage", c.leakage},
              {"phase", {c.phase.real(), c.phase.imag()}},
              {"actual", matrix_json(c.actual)}};
}

int run_validate(const Global& g, const ValidateArgs& a) {
  if (a.runs <= 0) throw CLI::ValidationError("--runs", "must be positive");
  const auto report = anyonrng::run_physics_checks(a.runs, a.seed);

  auto line = [](const std::string& name, bool ok, const std::string& detail) {
    std::cerr << (ok ? "PASS " : "FAIL ") << name << "  " << detail << '\n';
  };
  Json braids = Json::array();
  for (const auto& b : report.braids) {
    line(b.name, b.passed(), "deviation " + anyonrng::format_double(b.deviation));
    braids.push_back(gate_json(b));
  }
  line("H", report.hadamard.passed(),
       "deviation " + anyonrng::format_double(report.hadamard.deviation));
  Json branches = Json::array();
  for (const auto& c : report.cnot_branches) {
    line(c.gate.name, c.passed(),
         "deviation " + anyonrng::format_double(c.gate.deviation) + " phase " +
             anyonrng::format_double(std::arg(c.gate.phase)) + " rad");
    Json j = gate_json(c.gate);
    j["zeta"] = c.branch.zeta;
    j["eta"] = c.branch.eta;
    j["superposition_deviation"] = c.superposition_deviation;
    branches.push_back(std::move(j));
  }
  const auto& f = report.frequencies;
  line("CNOT branch frequencies", f.passed(),
       "counts " + std::to_string(f.counts[0]) + "/" + std::to_string(f.counts[1]) +
           "/" + std::to_string(f.counts[2]) + "/" + std::to_string(f.counts[3]) +
           ", max " + anyonrng::format_double(f.max_sigma) + " sigma");
  const auto& ghz = report.ghz;
  line("GHZ", ghz.passed(),
       "p000 " + anyonrng::format_double(ghz.p000) + " p111 " +
           anyonrng::format_double(ghz.p111) + " MABK " +
           anyonrng::format_double(ghz.mabk));

  const Json config{{"runs", a.runs}, {"seed", a.seed}};
  Json doc = document("validate", config);
  doc["passed"] = report.passed();
  doc["braids"] = std::move(braids);
  doc["hadamard"] = gate_json(report.hadamard);
  doc["cnot_branches"] = std::move(branches);
  doc["branch_frequencies"] = {{"runs", f.runs},
                               {"counts", f.counts},
                               {"max_sigma", f.max_sigma},
                               {"passed", f.passed()}};
  doc["ghz"] = {{"p000", ghz.p000},
                {"p111", ghz.p111},
                {"leakage", ghz.leakage},
                {"correlators", ghz.correlators},
                {"mabk", ghz.mabk},
                {"passed", ghz.passed()}};
  write_output(g.out, doc.dump(2) + "\n");
  return report.passed() ? kOk : kChecksFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological-qubit randomness certification toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.config_formatter(std::make_shared<ConfigJson>());
  app.set_config("--config", "", "JSON config file; command-line flags override it");

  Global g;
  app.add_option("--threads", g.threads, "Worker threads (0: ANYONRNG_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "Output file (default: stdout)");

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Run k protocol rounds and estimate L");
  simulate->add_option("--trials", sim.trials, "Number of rounds k")->required();
  simulate->add_option("--alpha", sim.alpha, "Biased settings with P(non-000) = alpha/sqrt(k)");
  simulate->add_option("--noise-p", sim.noise_p, "Logical depolarizing probability")
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--seed", sim.seed, "Master seed");
  simulate->add_option("--summary", sim.summary, "Also write the estimate as JSON here");

  FcurveArgs fc;
  auto* fcurve = app.add_subcommand("fcurve", "Tabulate f(L) = -log2 P*(L) on [2, 4]");
  fcurve->add_option("--level", fc.level, "Relaxation level")
      ->check(CLI::IsMember({"1", "1+AB", "2"}));
  fcurve->add_option("--grid", fc.grid, "Number of grid points");
  fcurve->add_option("--tolerance", fc.tolerance, "Solver tolerance");
  fcurve->add_option("--max-iterations", fc.max_iterations, "Solver iteration cap");
  fcurve->add_flag("--symmetry-dedup", fc.symmetry_dedup,
                   "Solve one triple per symmetry orbit");

  CertifyArgs cf;
  auto* certify = app.add_subcommand("certify", "Certified min-entropy of a record set");
  certify->add_option("--records", cf.records, "Records CSV")->required();
  certify->add_option("--fcurve", cf.fcurve, "f-curve JSON or CSV")->required();
  certify->add_option("--alpha", cf.alpha, "Settings bias used to generate the records");
  certify->add_option("--delta", cf.delta, "Soundness parameter");
  certify->add_option("--epsilon-prime", cf.epsilon_prime, "Concentration failure probability");
  certify->add_option("--thresholds", cf.thresholds, "Number of thresholds on [2, 4]");

  ExpandArgs ex;
  auto* expand = app.add_subcommand("expand", "Net randomness versus k");
  expand->add_option("--fcurve", ex.fcurve, "f-curve JSON or CSV")->required();
  expand->add_option("--alpha", ex.alpha, "Settings bias (omit for uniform)");
  expand->add_option("--l-m", ex.l_m, "Threshold L_m");
  expand->add_option("--delta", ex.delta, "Soundness parameter");
  expand->add_option("--epsilon-prime", ex.epsilon_prime, "Concentration failure probability");
  expand->add_option("--k-min", ex.k_min, "Smallest k");
  expand->add_option("--k-max", ex.k_max, "Largest k");
  expand->add_option("--per-decade", ex.per_decade, "Grid points per decade");

  ExtractArgs xt;
  auto* extract = app.add_subcommand("extract", "Toeplitz extraction of certified bits");
  extract->add_option("--records", xt.records, "Records CSV")->required();
  extract->add_option("--certificate", xt.certificate, "Certificate JSON")->required();
  extract->add_option("--seed-file", xt.seed_file, "Hex Toeplitz seed (n + m - 1 bits)");
  extract->add_option("--seed", xt.seed, "PRNG seed when no seed file is given");
  extract->add_option("--security", xt.security, "Extractor security parameter");
  extract->add_flag("--binary", xt.binary, "Write packed bytes instead of JSON");

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "Braid, CNOT and GHZ physics checks");
  validate->add_option("--runs", va.runs, "Sampled CNOTs for the branch frequencies");
  validate->add_option("--seed", va.seed, "Master seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*simulate) return run_simulate(g, sim);
    if (*fcurve) return run_fcurve(g, fc);
    if (*certify) return run_certify(g, cf);
    if (*expand) return run_expand(g, ex);
    if (*extract) return run_extract(g, xt);
    if (*validate) return run_validate(g, va);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const anyonrng::SolverError& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return kSolver;
  } catch (const anyonrng::DataIntegrityError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kChecksFailed;
  }
  return kUsage;
}

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

#include "anyonrng/serialization.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "anyonrng/errors.hpp"

namespace anyonrng {
namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

// Next non-comment, non-empty line; false at end of input.
bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    return true;
  }
  return false;
}

long long parse_int(const std::string& s) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DataIntegrityError("not an integer: '" + s + "'");
  }
  return v;
}

double parse_double(const std::string& s) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DataIntegrityError("not a number: '" + s + "'");
  }
  return v;
}

Json triple_json(const OutcomeTriple& t) {
  return Json{{"abc", t.abc}, {"xyz", t.xyz}, {"label", to_string(t)}};
}

OutcomeTriple triple_from_json(const Json& j) {
  return {j.at("abc").get<int>(), j.at("xyz").get<int>()};
}

SdpStatus status_from_string(const std::string& s) {
  for (SdpStatus st : {SdpStatus::Optimal, SdpStatus::NearOptimal,
                       SdpStatus::Infeasible, SdpStatus::Unbounded,
                       SdpStatus::MaxIterations, SdpStatus::NumericalFailure}) {
    if (to_string(st) == s) return st;
  }
  throw DataIntegrityError("unknown solver status '" + s + "'");
}

HierarchyLevel level_from_string(const std::string& s) {
  if (s == to_string(HierarchyLevel::NoSignalling)) {
    return HierarchyLevel::NoSignalling;
  }
  return parse_level(s);
}

void check_version(const Json& j) {
  if (!j.contains("format_version") ||
      j.at("format_version").get<std::string>() != kFormatVersion) {
    throw DataIntegrityError("missing or unsupported format_version");
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("double formatting failed");
  return std::string(buf, ptr);
}

void write_comment_header(std::ostream& out, const Json& config) {
  std::istringstream lines(config.dump(2));
  std::string line;
  while (std::getline(lines, line)) out << "# " << line << '\n';
}

void write_records_csv(std::ostream& out, const std::vector<TrialRecord>& records,
                       const Json& config) {
  write_comment_header(out, config);
  out << "trial,x,y,z,a,b,c\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    out << i << ',' << r.settings.x << ',' << r.settings.y << ','
        << r.settings.z << ',' << r.a << ',' << r.b << ',' << r.c << '\n';
  }
}

std::vector<TrialRecord> read_records_csv(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line) || line != "trial,x,y,z,a,b,c") {
    throw DataIntegrityError("records CSV must start with trial,x,y,z,a,b,c");
  }
  std::vector<TrialRecord> records;
  while (next_data_line(in, line)) {
    const auto f = split(line, ',');
    if (f.size() != 7) {
      throw DataIntegrityError("records CSV row has " + std::to_string(f.size()) +
                               " fields: '" + line + "'");
    }
    if (parse_int(f[0]) != static_cast<long long>(records.size())) {
      throw DataIntegrityError("records CSV trial column is not 0, 1, 2, ...");
    }
    int v[6];
    for (int i = 0; i < 6; ++i) {
      const long long bit = parse_int(f[i + 1]);
      if (bit != 0 && bit != 1) {
        throw DataIntegrityError("records CSV value is not a bit: '" + line + "'");
      }
      v[i] = static_cast<int>(bit);
    }
    TrialRecord r{{v[0], v[1], v[2]}, v[3], v[4], v[5]};
    if (mabk_setting_index(r.settings) < 0) {
      throw DataIntegrityError("records CSV settings outside the MABK set: '" +
                               line + "'");
    }
    records.push_back(r);
  }
  return records;
}

Json to_json(const ViolationEstimate& e) {
  Json counts = Json::array();
  for (int i = 0; i < 4; ++i) {
    const auto& s = kMabkSettings[i];
    counts.push_back({{"xyz", std::to_string(s.x) + std::to_string(s.y) +
                                  std::to_string(s.z)},
                      {"even", e.counts[i][0]},
                      {"odd", e.counts[i][1]}});
  }
  return Json{{"l_hat", e.l_hat}, {"k", e.k}, {"counts", counts}};
}

ViolationEstimate estimate_from_json(const Json& j) {
  ViolationEstimate e;
  e.l_hat = j.at("l_hat").get<double>();
  e.k = j.at("k").get<std::uint64_t>();
  const auto& counts = j.at("counts");
  if (counts.size() != 4) throw DataIntegrityError("estimate needs 4 count rows");
  std::uint64_t total = 0;
  for (int i = 0; i < 4; ++i) {
    e.counts[i][0] = counts[i].at("even").get<std::uint64_t>();
    e.counts[i][1] = counts[i].at("odd").get<std::uint64_t>();
    total += e.counts[i][0] + e.counts[i][1];
  }
  if (total != e.k) throw DataIntegrityError("estimate counts do not sum to k");
  return e;
}

Json to_json(const SettingsDistribution& d) {
  return Json{{"label", d.label()},
              {"probabilities", d.probabilities()},
              {"min_probability", d.min_probability()},
              {"entropy_bits", d.entropy_bits()}};
}

SettingsDistribution distribution_from_json(const Json& j) {
  return SettingsDistribution(j.at("probabilities").get<std::array<double, 4>>());
}

Json to_json(const FCurveTable& t) {
  Json points = Json::array();
  for (const auto& p : t.points) {
    points.push_back({{"L", p.l},
                      {"f", p.f},
                      {"f_raw", p.f_raw},
                      {"p_star", p.p_star},
                      {"argmax", triple_json(p.argmax)},
                      {"status", to_string(p.status)},
                      {"max_gap", p.max_gap},
                      {"solves", p.solves}});
  }
  return Json{{"format_version", kFormatVersion},
              {"level", to_string(t.level)},
              {"tolerance", t.tolerance},
              {"symmetry_dedup", t.symmetry_dedup},
              {"max_isotonic_adjustment", t.max_isotonic_adjustment},
              {"points", points}};
}

FCurveTable fcurve_from_json(const Json& j) {
  check_version(j);
  FCurveTable t;
  t.level = level_from_string(j.at("level").get<std::string>());
  t.tolerance = j.at("tolerance").get<double>();
  t.symmetry_dedup = j.at("symmetry_dedup").get<bool>();
  t.max_isotonic_adjustment = j.at("max_isotonic_adjustment").get<double>();
  for (const auto& pj : j.at("points")) {
    FCurvePoint p;
    p.l = pj.at("L").get<double>();
    p.f = pj.at("f").get<double>();
    p.f_raw = pj.at("f_raw").get<double>();
    p.p_star = pj.at("p_star").get<double>();
    p.argmax = triple_from_json(pj.at("argmax"));
    p.status = status_from_string(pj.at("status").get<std::string>());
    p.max_gap = pj.at("max_gap").get<double>();
    p.solves = pj.at("solves").get<int>();
    t.points.push_back(p);
  }
  if (t.points.size() < 2) throw DataIntegrityError("f-curve needs >= 2 points");
  for (std::size_t i = 1; i < t.points.size(); ++i) {
    if (!(t.points[i].l > t.points[i - 1].l) ||
        t.points[i].f < t.points[i - 1].f) {
      throw DataIntegrityError("f-curve is not increasing in L and f");
    }
  }
  return t;
}

void write_fcurve_csv(std::ostream& out, const FCurveTable& t, const Json& config) {
  write_comment_header(out, config);
  out << "L,f\n";
  for (const auto& p : t.points) {
    out << format_double(p.l) << ',' << format_double(p.f) << '\n';
  }
}

FCurveTable read_fcurve_csv(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line) || line != "L,f") {
    throw DataIntegrityError("f-curve CSV must start with L,f");
  }
  std::vector<std::pair<double, double>> lf;
  while (next_data_line(in, line)) {
    const auto f = split(line, ',');
    if (f.size() != 2) throw DataIntegrityError("f-curve CSV row: '" + line + "'");
    lf.emplace_back(parse_double(f[0]), parse_double(f[1]));
  }
  try {
    return FCurveTable::from_pairs(lf);
  } catch (const std::invalid_argument& e) {
    throw DataIntegrityError(e.what());
  }
}

Json to_json(const CertificationParams& p) {
  return Json{{"delta", p.delta},
              {"epsilon_prime", p.epsilon_prime},
              {"thresholds", p.thresholds},
              {"k", p.k},
              {"r", p.r},
              {"settings_entropy_bits", p.settings_entropy_bits}};
}

CertificationParams params_from_json(const Json& j) {
  CertificationParams p;
  p.delta = j.at("delta").get<double>();
  p.epsilon_prime = j.at("epsilon_prime").get<double>();
  p.thresholds = j.at("thresholds").get<std::vector<double>>();
  p.k = j.at("k").get<std::uint64_t>();
  p.r = j.at("r").get<double>();
  p.settings_entropy_bits = j.at("settings_entropy_bits").get<double>();
  return p;
}

Json to_json(const EntropyCertificate& c) {
  return Json{{"format_version", kFormatVersion},
              {"params", to_json(c.params)},
              {"l_hat", c.l_hat},
              {"m", c.m ? Json(*c.m) : Json(nullptr)},
              {"L_m", c.l_m},
              {"epsilon", c.epsilon},
              {"f_value", c.f_value},
              {"bound_bits", c.bound_bits},
              {"input_bits", c.input_bits},
              {"net_bits", c.net_bits}};
}

EntropyCertificate certificate_from_json(const Json& j) {
  check_version(j);
  EntropyCertificate c;
  c.params = params_from_json(j.at("params"));
  c.l_hat = j.at("l_hat").get<double>();
  if (!j.at("m").is_null()) c.m = j.at("m").get<int>();
  c.l_m = j.at("L_m").get<double>();
  c.epsilon = j.at("epsilon").get<double>();
  c.f_value = j.at("f_value").get<double>();
  c.bound_bits = j.at("bound_bits").get<double>();
  c.input_bits = j.at("input_bits").get<double>();
  c.net_bits = j.at("net_bits").get<double>();
  return c;
}

void write_expansion_csv(std::ostream& out, const ExpansionCurve& curve,
                         const Json& config) {
  write_comment_header(out, config);
  out << "k,bound_bits,input_bits,net_bits\n";
  for (const auto& r : curve.rows) {
    out << format_double(r.k) << ',' << format_double(r.bound_bits) << ','
        << format_double(r.input_bits) << ',' << format_double(r.net_bits)
        << '\n';
  }
}

Json to_json(const ExpansionCurve& curve) {
  Json rows = Json::array();
  for (const auto& r : curve.rows) {
    rows.push_back({{"k", r.k},
                    {"r", r.r},
                    {"epsilon", r.epsilon},
                    {"bound_bits", r.bound_bits},
                    {"input_bits", r.input_bits},
                    {"net_bits", r.net_bits}});
  }
  return Json{{"format_version", kFormatVersion},
              {"alpha", curve.alpha ? Json(*curve.alpha) : Json(nullptr)},
              {"L_m", curve.l_m},
              {"crossing_k",
               curve.crossing_k ? Json(*curve.crossing_k) : Json(nullptr)},
              {"rows", rows}};
}

Json to_json(const NoSignallingResult& r) {
  return Json{{"scope", to_string(r.scope)},
              {"status", to_string(r.status)},
              {"value", r.value},
              {"argmax", triple_json(r.argmax)},
              {"min_probability", r.min_probability}};
}

Json to_json(const AzumaCheck& c) {
  return Json{{"runs", c.runs},
              {"k", c.k},
              {"epsilon", c.epsilon},
              {"epsilon_prime", c.epsilon_prime},
              {"device_L", c.device_l},
              {"mean_l_hat", c.mean_l_hat},
              {"exceedances", c.exceedances},
              {"rate", c.rate},
              {"threshold", c.threshold},
              {"passed", c.passed}};
}

}  // namespace anyonrng

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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Informational lines start with "  info:".

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "anyonrng/bound_solver.hpp"
#include "anyonrng/certifier.hpp"
#include "anyonrng/mabk.hpp"
#include "anyonrng/parallel.hpp"
#include "anyonrng/physics_checks.hpp"
#include "anyonrng/random.hpp"
#include "anyonrng/toeplitz_extractor.hpp"
#include "anyonrng/trial_engine.hpp"

namespace {

using namespace anyonrng;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <typename... Args>
void info(const char* fmt, Args... args) {
  std::printf("  info: ");
  std::printf(fmt, args...);
  std::printf("\n");
  std::fflush(stdout);
}

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("%s criterion %d (%s): %s\n", ok ? "PASS" : "FAIL", id, name,
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

// Runs a criterion body, turning exceptions into a FAIL line.
void guarded(int id, const char* name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, name, false, std::string("exception: ") + e.what());
  }
}

void braid_fidelity() {
  const auto t0 = Clock::now();
  const auto checks = braid_checks();
  const double elapsed = seconds_since(t0);
  double worst = 0.0;
  for (const auto& c : checks) {
    info("%s deviation %.3e leakage %.3e", c.name.c_str(), c.deviation, c.leakage);
    worst = std::max({worst, c.deviation, c.leakage});
  }
  report(1, "braid matrices", worst < 1e-10 && elapsed < 1.0,
         "max deviation " + fmt("%.3e", worst) + ", " + fmt("%.3f", elapsed) + " s");
}

void hadamard_word() {
  const auto c = hadamard_check();
  report(2, "Hadamard braid word", c.deviation < 1e-10 && c.leakage < 1e-10,
         "deviation " + fmt("%.3e", c.deviation));
}

void cnot_branches() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (const auto& c : cnot_branch_checks()) {
    info("branch zeta=%+d eta=%+d: deviation %.3e, superposition %.3e, phase %.6f rad",
         c.branch.zeta, c.branch.eta, c.gate.deviation, c.superposition_deviation,
         std::arg(c.gate.phase));
    worst = std::max({worst, c.gate.deviation, c.superposition_deviation, c.gate.leakage});
  }
  const auto f = cnot_branch_frequencies(10000, 2026);
  const double elapsed = seconds_since(t0);
  info("branch counts over %d runs: %d %d %d %d (max %.2f sigma)", f.runs, f.counts[0],
       f.counts[1], f.counts[2], f.counts[3], f.max_sigma);
  report(3, "measurement-assisted CNOT",
         worst < 1e-10 && f.max_sigma <= 5.0 && elapsed < 30.0,
         "max deviation " + fmt("%.3e", worst) + ", frequencies within " +
             fmt("%.2f", f.max_sigma) + " sigma, " + fmt("%.2f", elapsed) + " s");
}

void ghz_violation(unsigned threads) {
  const auto g = ghz_check(7);
  info("GHZ |<000|psi>|^2 = %.15f, |<111|psi>|^2 = %.15f", g.p000, g.p111);
  bool ok = std::abs(g.p000 - 0.5) < 1e-10 && std::abs(g.p111 - 0.5) < 1e-10;
  const auto dist = SettingsDistribution::uniform();
  for (std::uint64_t k : {1ull, 10ull, 1000ull}) {
    const double l = estimate(run_trials(k, dist, NoiseSpec::none(), k, threads), dist).l_hat;
    ok = ok && l == 4.0;
  }
  const auto t0 = Clock::now();
  const double l = estimate(run_trials(100000, dist, NoiseSpec::none(), 5, threads), dist).l_hat;
  const double elapsed = seconds_since(t0);
  ok = ok && l == 4.0 && elapsed < 60.0;
  report(4, "GHZ and maximal violation", ok,
         "L_hat(k=1e5) = " + fmt("%.17g", l) + ", " + fmt("%.2f", elapsed) + " s");
}

FCurveTable fcurve_endpoints(unsigned threads) {
  BoundOptions opt;  // default relaxation
  opt.threads = threads;
  auto t0 = Clock::now();
  const auto table = build_fcurve(21, opt);
  const double full = seconds_since(t0);
  opt.symmetry_dedup = true;
  t0 = Clock::now();
  const auto dedup = build_fcurve(21, opt);
  const double dedup_time = seconds_since(t0);

  const double f2 = table.points.front().f;
  const double f4 = table.points.back().f;
  const double p4 = table.points.back().p_star;
  info("level %s: P*(4) = %.6f, f(4) = %.6f, max gap %.2e, status %s",
       to_string(table.level).c_str(), p4, f4, table.points.back().max_gap,
       to_string(table.points.back().status).c_str());
  info("21-point curve: %.2f s full sweep, %.2f s with symmetry dedup (f(4) = %.6f)",
       full, dedup_time, dedup.points.back().f);

  // Tighter relaxations, for information and per-solve timing.
  double slowest = 0.0;
  for (auto level : {HierarchyLevel::OneAB, HierarchyLevel::Two}) {
    BoundOptions o;
    o.level = level;
    o.threads = threads;
    for (double l : {2.0, 3.9, 4.0}) {
      t0 = Clock::now();
      const auto r = guessing_probability(l, o);
      const double per = seconds_since(t0) / std::max(1, r.solves);
      slowest = std::max(slowest, per);
      info("level %s L=%.1f: P* = %.6f, f = %.6f (%s)", to_string(level).c_str(), l,
           r.p_star, -std::log2(r.p_star), to_string(r.status).c_str());
    }
  }
  info("slowest single solve at levels 1+AB/2: %.3f s", slowest);

  const bool ok = f2 <= 1e-3 && std::abs(f4 - 0.9991) <= 5e-3 &&
                  std::abs(p4 - 0.5003) <= 3e-3 && slowest < 60.0 &&
                  full < 7200.0 && dedup_time < 900.0;
  report(5, "f-curve endpoints", ok,
         "f(2) = " + fmt("%.2e", f2) + ", f(4) = " + fmt("%.6f", f4) + " (target 0.9991)");
  return table;
}

void nosignalling_control() {
  const auto t0 = Clock::now();
  const auto r = nosignalling_max(4.0, NoSignallingScope::MabkSettings);
  const double elapsed = seconds_since(t0);
  const auto all = nosignalling_max(4.0, NoSignallingScope::AllSettings);
  info("no-signalling over all eight setting triples: max P = %.6f (%s)", all.value,
       to_string(all.status).c_str());
  report(6, "no-signalling negative control",
         std::abs(r.value - 1.0) <= 1e-6 && elapsed < 5.0,
         "max " + to_string(r.argmax) + " = " + fmt("%.9f", r.value) + ", " +
             fmt("%.3f", elapsed) + " s");
}

void certification_curve(const FCurveTable& table) {
  const double l_m = 3.9, delta = 0.001, eps = 0.01;
  const auto uniform = expansion_point(1e5, std::nullopt, l_m, delta, eps, table);
  info("uniform settings, k = 1e5: epsilon = %.4f, bound = %.1f bits", uniform.epsilon,
       uniform.bound_bits);
  const auto curve =
      net_randomness_curve(log_k_grid(1e3, 1e7, 20), 10.0, l_m, delta, eps, table);
  const bool crossed = curve.crossing_k.has_value();
  const double k = crossed ? *curve.crossing_k : 0.0;
  info("alpha = 10 net-randomness crossing: k = %.1f", k);
  report(7, "certification curve",
         uniform.bound_bits > 0.0 && crossed && k >= 1e4 && k <= 1e6,
         "bound(1e5) = " + fmt("%.1f", uniform.bound_bits) + " bits, crossing k = " +
             fmt("%.4g", k));
}

void concentration(unsigned threads) {
  const auto t0 = Clock::now();
  const auto c = azuma_empirical_check(1000, 2000, NoiseSpec::depolarizing(0.1),
                                       SettingsDistribution::uniform(), 0.01, 8, threads);
  const double elapsed = seconds_since(t0);
  info("device L = %.4f, mean L_hat = %.4f, epsilon = %.4f", c.device_l, c.mean_l_hat,
       c.epsilon);
  report(8, "concentration check", c.passed && elapsed < 600.0,
         std::to_string(c.exceedances) + "/1000 exceedances, rate " + fmt("%.4f", c.rate) +
             " <= " + fmt("%.4f", c.threshold) + ", " + fmt("%.1f", elapsed) + " s");
}

TrialRecord rec(int x, int y, int z, int a, int b, int c) { return {{x, y, z}, a, b, c}; }

void estimator_arithmetic() {
  const auto uni = SettingsDistribution::uniform();
  // (1/4)[4·1 + (-4)(-1)·3] = 4 and (1/4)[4 - 4·3] = -2.
  const std::vector<TrialRecord> ghz{rec(0, 0, 0, 0, 0, 0), rec(0, 1, 1, 1, 0, 0),
                                     rec(1, 0, 1, 0, 1, 0), rec(1, 1, 0, 0, 0, 1)};
  const std::vector<TrialRecord> even{rec(0, 0, 0, 1, 1, 0), rec(0, 1, 1, 0, 0, 0),
                                      rec(1, 0, 1, 1, 0, 1), rec(1, 1, 0, 0, 0, 0)};
  const double l4 = estimate(ghz, uni).l_hat;
  const double lm2 = estimate(even, uni).l_hat;

  std::mt19937_64 gen(1000);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  double worst = 0.0;
  for (int set = 0; set < 1000; ++set) {
    std::array<double, 4> p{u(gen), u(gen), u(gen), u(gen)};
    const double s = p[0] + p[1] + p[2] + p[3];
    for (auto& v : p) v /= s;
    const SettingsDistribution d(p);
    std::vector<TrialRecord> r(1 + gen() % 500);
    double mean = 0.0;
    for (auto& t : r) {
      t = {kMabkSettings[gen() % 4], int(gen() & 1), int(gen() & 1), int(gen() & 1)};
      mean += trial_variable(t, d);
    }
    mean /= static_cast<double>(r.size());
    worst = std::max(worst, std::abs(estimate(r, d).l_hat - mean));
  }
  report(9, "estimator arithmetic", l4 == 4.0 && lm2 == -2.0 && worst <= 1e-12,
         "hand sets give " + fmt("%g", l4) + " and " + fmt("%g", lm2) +
             ", max |estimate - mean| = " + fmt("%.2e", worst));
}

Bits random_bits(std::size_t n, std::mt19937_64& gen) {
  Bits b(n);
  for (auto& x : b) x = gen() & 1;
  return b;
}

void extractor_properties(unsigned threads) {
  std::mt19937_64 gen(10);
  bool linear = true;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + gen() % 256, m = 1 + gen() % n;
    const auto seed = ToeplitzSeed::random(n, m, gen);
    const Bits a = random_bits(n, gen), b = random_bits(n, gen);
    Bits s(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = a[j] ^ b[j];
    const Bits ya = extract(a, seed, m), yb = extract(b, seed, m), ys = extract(s, seed, m);
    for (std::size_t j = 0; j < m; ++j) linear = linear && ys[j] == (ya[j] ^ yb[j]);
  }

  // Every x and every seed for n <= 6, random samples up to n = 10.
  bool oracle = true;
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t m = 1; m <= n; ++m) {
      const std::size_t seed_len = n + m - 1;
      const bool exhaustive = n <= 6;
      const std::uint64_t xs = exhaustive ? (1ull << n) : 64;
      const std::uint64_t seeds = exhaustive ? (1ull << seed_len) : 64;
      for (std::uint64_t si = 0; si < seeds && oracle; ++si) {
        ToeplitzSeed seed;
        const std::uint64_t sbits = exhaustive ? si : gen();
        for (std::size_t j = 0; j < seed_len; ++j) seed.bits.push_back((sbits >> j) & 1);
        for (std::uint64_t xi = 0; xi < xs; ++xi) {
          const std::uint64_t xbits = exhaustive ? xi : gen();
          Bits x(n);
          for (std::size_t j = 0; j < n; ++j) x[j] = (xbits >> j) & 1;
          const Bits y = extract(x, seed, m);
          for (std::size_t i = 0; i < m; ++i) {
            int acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc ^= seed.bits[i - j + n - 1] & x[j];
            if (y[i] != acc) oracle = false;
          }
        }
      }
    }
  }

  // 1e5 independent noiseless runs of k = 8 rounds, each hashed to 4 bits
  // with a fresh seed.
  const auto t0 = Clock::now();
  const int runs = 100000;
  const auto dist = SettingsDistribution::uniform();
  std::vector<int> outputs(runs);
  parallel_for(runs, threads, [&](std::size_t i) {
    const auto records = run_trials(8, dist, NoiseSpec::none(), derive_stream_seed(77, i), 1);
    const Bits raw = raw_bits_from_records(records);
    std::mt19937_64 seed_rng(derive_stream_seed(78, i));
    const Bits y = extract(raw, ToeplitzSeed::random(raw.size(), 4, seed_rng), 4);
    outputs[i] = 8 * y[0] + 4 * y[1] + 2 * y[2] + y[3];
  });
  std::array<double, 16> counts{};
  for (int o : outputs) ++counts[o];
  const double expected = runs / 16.0;
  double chi2 = 0.0;
  for (double c : counts) chi2 += (c - expected) * (c - expected) / expected;
  const double p_value = boost::math::gamma_q(7.5, chi2 / 2.0);
  info("chi-square %.3f on 15 dof, p = %.4f (%.1f s)", chi2, p_value, seconds_since(t0));

  report(10, "extractor properties", linear && oracle && p_value > 0.001,
         std::string("linearity ") + (linear ? "ok" : "broken") + ", matrix oracle " +
             (oracle ? "ok" : "mismatch") + ", chi-square p = " + fmt("%.4f", p_value));
}

}  // namespace

int main() {
  const unsigned threads = resolve_thread_count(0);
  info("worker threads: %u", threads);
  const auto start = Clock::now();

  guarded(1, "braid matrices", braid_fidelity);
  guarded(2, "Hadamard braid word", hadamard_word);
  guarded(3, "measurement-assisted CNOT", cnot_branches);
  guarded(4, "GHZ and maximal violation", [&] { ghz_violation(threads); });
  FCurveTable table;
  bool have_table = false;
  guarded(5, "f-curve endpoints", [&] {
    table = fcurve_endpoints(threads);
    have_table = true;
  });
  guarded(6, "no-signalling negative control", nosignalling_control);
  if (have_table) {
    guarded(7, "certification curve", [&] { certification_curve(table); });
  } else {
    report(7, "certification curve", false, "no f-curve available");
  }
  guarded(8, "concentration check", [&] { concentration(threads); });
  guarded(9, "estimator arithmetic", estimator_arithmetic);
  guarded(10, "extractor properties", [&] { extractor_properties(threads); });

  info("total %.1f s", seconds_since(start));
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

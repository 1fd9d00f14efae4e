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

#include "anyonrng/physics_checks.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "anyonrng/mabk.hpp"
#include "anyonrng/protocol.hpp"
#include "anyonrng/random.hpp"

namespace anyonrng {
namespace {

using Eigen::MatrixXcd;

constexpr Amplitude kI{0.0, 1.0};

MatrixXcd mat2(Amplitude a, Amplitude b, Amplitude c, Amplitude d) {
  MatrixXcd m(2, 2);
  m << a, b, c, d;
  return m;
}

GateCheck make_check(std::string name, int n_qubits,
                     const std::function<void(LogicalState&)>& op,
                     MatrixXcd expected) {
  GateCheck check;
  check.name = std::move(name);
  check.actual = logical_action(n_qubits, op, &check.leakage);
  check.expected = std::move(expected);
  check.deviation = matrix_deviation_up_to_phase(check.actual, check.expected,
                                                 &check.phase);
  return check;
}

MatrixXcd cnot_matrix() {
  MatrixXcd m = MatrixXcd::Zero(4, 4);
  m(0, 0) = m(1, 1) = 1.0;
  m(3, 2) = m(2, 3) = 1.0;
  return m;
}

}  // namespace

LogicalState prepare_logical(int n_qubits, std::span<const Amplitude> logical,
                             std::uint64_t seed) {
  LogicalState blank = encode(n_qubits, seed);
  if (logical.size() != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument("logical amplitude vector has wrong length");
  }
  std::vector<Amplitude> amps(blank.reg().dimension());
  for (std::size_t b = 0; b < logical.size(); ++b) {
    amps[blank.register_index(b)] = logical[b];
  }
  return LogicalState(MajoranaRegister::from_amplitudes(
                          blank.reg().mode_count(), std::move(amps), seed),
                      blank.layout());
}

MatrixXcd logical_action(int n_qubits,
                         const std::function<void(LogicalState&)>& op,
                         double* leakage) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  MatrixXcd out(dim, dim);
  double worst = 0.0;
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<Amplitude> basis(dim);
    basis[col] = 1.0;
    LogicalState state = prepare_logical(n_qubits, basis);
    op(state);
    const auto amps = state.logical_amplitudes();
    for (std::size_t row = 0; row < dim; ++row) out(row, col) = amps[row];
    worst = std::max(worst, state.codespace_leakage());
  }
  if (leakage) *leakage = worst;
  return out;
}

double matrix_deviation_up_to_phase(const MatrixXcd& a, const MatrixXcd& b,
                                    Amplitude* phase) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrices differ in shape");
  }
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  Amplitude p{1.0, 0.0};
  if (std::abs(b(r, c)) > 0 && std::abs(a(r, c)) > 0) {
    const Amplitude ratio = a(r, c) / b(r, c);
    p = ratio / std::abs(ratio);
  }
  if (phase) *phase = p;
  return (a - p * b).cwiseAbs().maxCoeff();
}

std::vector<GateCheck> braid_checks() {
  const double s = 1.0 / std::numbers::sqrt2;
  std::vector<GateCheck> out;
  out.push_back(make_check(
      "B12", 1, [](LogicalState& st) { apply_b12(st, 0); },
      mat2(1.0, 0.0, 0.0, kI)));
  out.push_back(make_check(
      "B34", 1, [](LogicalState& st) { apply_b34(st, 0); },
      mat2(1.0, 0.0, 0.0, kI)));
  out.push_back(make_check(
      "B23", 1, [](LogicalState& st) { apply_b23(st, 0); },
      mat2(s, -kI * s, -kI * s, s)));
  return out;
}

GateCheck hadamard_check() {
  const double s = 1.0 / std::numbers::sqrt2;
  return make_check(
      "H", 1, [](LogicalState& st) { apply_hadamard(st, 0); },
      mat2(s, s, s, -s));
}

std::vector<CnotBranchCheck> cnot_branch_checks() {
  // Generic input with distinct magnitudes and phases.
  const std::vector<Amplitude> probe{{0.1, 0.2}, {0.3, -0.1}, {-0.4, 0.5},
                                     {0.2, 0.6}};
  double norm = 0.0;
  for (const auto& a : probe) norm += std::norm(a);
  Eigen::VectorXcd psi(4);
  for (int i = 0; i < 4; ++i) psi(i) = probe[i] / std::sqrt(norm);

  std::vector<CnotBranchCheck> out;
  for (int zeta : {+1, -1}) {
    for (int eta : {+1, -1}) {
      CnotBranchCheck check;
      check.branch = {zeta, eta};
      const auto op = [&](LogicalState& st) {
        apply_cnot(st, 0, 1, check.branch);
      };
      check.gate = make_check("CNOT(zeta=" + std::to_string(zeta) +
                                  ",eta=" + std::to_string(eta) + ")",
                              2, op, cnot_matrix());

      std::vector<Amplitude> in(psi.data(), psi.data() + 4);
      LogicalState st = prepare_logical(2, in);
      op(st);
      const auto got = st.logical_amplitudes();
      const Eigen::VectorXcd want = check.gate.phase * (cnot_matrix() * psi);
      double dev = 0.0;
      for (int i = 0; i < 4; ++i) dev = std::max(dev, std::abs(got[i] - want(i)));
      check.superposition_deviation = dev;
      out.push_back(std::move(check));
    }
  }
  return out;
}

BranchFrequencyCheck cnot_branch_frequencies(int runs, std::uint64_t seed) {
  if (runs <= 0) throw std::invalid_argument("runs must be positive");
  BranchFrequencyCheck check;
  check.runs = runs;
  for (int i = 0; i < runs; ++i) {
    LogicalState st = encode(2, derive_stream_seed(seed, i));
    apply_hadamard(st, 0);
    const CnotBranch b = apply_cnot(st, 0, 1);
    ++check.counts[2 * (b.zeta < 0) + (b.eta < 0)];
  }
  const double sigma = std::sqrt(runs * 3.0 / 16.0);
  for (int c : check.counts) {
    check.max_sigma = std::max(check.max_sigma, std::abs(c - runs / 4.0) / sigma);
  }
  return check;
}

bool GhzCheck::passed(double tol) const {
  if (std::abs(p000 - 0.5) > tol || std::abs(p111 - 0.5) > tol || leakage > tol) {
    return false;
  }
  return std::abs(mabk - 4.0) <= tol;
}

GhzCheck ghz_check(std::uint64_t seed) {
  GhzPreparation prep = prepare_ghz(seed);
  GhzCheck check;
  check.branches = prep.branches;
  const auto amps = prep.state.logical_amplitudes();
  check.p000 = std::norm(amps[0]);
  check.p111 = std::norm(amps[7]);
  check.leakage = prep.state.codespace_leakage();

  for (int i = 0; i < 4; ++i) {
    const Settings& s = kMabkSettings[i];
    LogicalState st = prep.state;
    const std::array<int, 3> settings{s.x, s.y, s.z};
    std::vector<int> modes;
    for (int q = 0; q < 3; ++q) {
      if (settings[q] == 0) {
        apply_hadamard(st, q);
      } else {
        apply_b23(st, q);
      }
      modes.push_back(st.layout().qubit_modes[q][0]);
      modes.push_back(st.layout().qubit_modes[q][1]);
    }
    // (-i c1 c2)(-i c5 c6)(-i c9 c10) = i c1 c2 c5 c6 c9 c10
    const MajoranaObservable parity(
        MajoranaString(st.reg().mode_count(), modes), kI);
    check.correlators[i] = st.reg().expectation(parity);
    check.mabk += tau(s) * check.correlators[i];
  }
  return check;
}

bool PhysicsReport::passed() const {
  for (const auto& b : braids) {
    if (!b.passed()) return false;
  }
  for (const auto& c : cnot_branches) {
    if (!c.passed()) return false;
  }
  return hadamard.passed() && frequencies.passed() && ghz.passed();
}

PhysicsReport run_physics_checks(int frequency_runs, std::uint64_t seed) {
  PhysicsReport report;
  report.braids = braid_checks();
  report.hadamard = hadamard_check();
  report.cnot_branches = cnot_branch_checks();
  report.frequencies = cnot_branch_frequencies(frequency_runs, seed);
  report.ghz = ghz_check(seed);
  return report;
}

}  // namespace anyonrng

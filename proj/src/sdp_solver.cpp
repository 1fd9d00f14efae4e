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

#include "anyonrng/sdp_solver.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace anyonrng {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kInfinity = std::numeric_limits<double>::infinity();
constexpr int kStallIterations = 8;

// Shape-aware block-diagonal helpers. Diagonal blocks are n x 1 columns.

BlockValue zeros(const SdpProblem& p) {
  BlockValue out;
  out.reserve(p.blocks.size());
  for (const auto& blk : p.blocks) {
    out.push_back(blk.diagonal ? MatrixXd::Zero(blk.size, 1)
                               : MatrixXd::Zero(blk.size, blk.size));
  }
  return out;
}

BlockValue scaled_identity(const SdpProblem& p, double scale) {
  BlockValue out = zeros(p);
  for (std::size_t k = 0; k < p.blocks.size(); ++k) {
    if (p.blocks[k].diagonal) {
      out[k].setConstant(scale);
    } else {
      out[k].diagonal().setConstant(scale);
    }
  }
  return out;
}

void add_entries(BlockValue& m, const std::vector<SdpEntry>& entries,
                 double scale, const SdpProblem& p) {
  for (const auto& e : entries) {
    if (p.blocks[e.block].diagonal) {
      m[e.block](e.row, 0) += scale * e.value;
    } else {
      m[e.block](e.row, e.col) += scale * e.value;
      if (e.row != e.col) m[e.block](e.col, e.row) += scale * e.value;
    }
  }
}

// Tr(A G) for sparse symmetric A and arbitrary (not necessarily symmetric) G.
double trace_product(const std::vector<SdpEntry>& entries, const BlockValue& g,
                     const SdpProblem& p) {
  double total = 0.0;
  for (const auto& e : entries) {
    if (p.blocks[e.block].diagonal) {
      total += e.value * g[e.block](e.row, 0);
    } else if (e.row == e.col) {
      total += e.value * g[e.block](e.row, e.row);
    } else {
      total += e.value * (g[e.block](e.row, e.col) + g[e.block](e.col, e.row));
    }
  }
  return total;
}

double dot(const BlockValue& a, const BlockValue& b) {
  double total = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    total += a[k].cwiseProduct(b[k]).sum();
  }
  return total;
}

double frobenius(const BlockValue& a) { return std::sqrt(dot(a, a)); }

void axpy(BlockValue& y, double alpha, const BlockValue& x) {
  for (std::size_t k = 0; k < y.size(); ++k) y[k] += alpha * x[k];
}

BlockValue difference(const BlockValue& a, const BlockValue& b) {
  BlockValue out = a;
  axpy(out, -1.0, b);
  return out;
}

// Product of block-diagonal operands, diagonal blocks multiplied entrywise.
BlockValue product(const BlockValue& a, const BlockValue& b,
                   const SdpProblem& p) {
  BlockValue out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    out[k] = p.blocks[k].diagonal ? MatrixXd(a[k].cwiseProduct(b[k]))
                                  : MatrixXd(a[k] * b[k]);
  }
  return out;
}

void symmetrize(BlockValue& m, const SdpProblem& p) {
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (!p.blocks[k].diagonal) m[k] = 0.5 * (m[k] + m[k].transpose()).eval();
  }
}

// Returns false if some block is not positive definite.
bool inverse(const BlockValue& m, const SdpProblem& p, BlockValue& out) {
  out.resize(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (p.blocks[k].diagonal) {
      if ((m[k].array() <= 0.0).any()) return false;
      out[k] = m[k].cwiseInverse();
    } else {
      Eigen::LLT<MatrixXd> llt(m[k]);
      if (llt.info() != Eigen::Success) return false;
      out[k] = llt.solve(MatrixXd::Identity(m[k].rows(), m[k].cols()));
    }
  }
  return true;
}

// Largest step t with m + t d still positive semidefinite (infinite when
// the direction never leaves the cone). Negative on failure.
double max_step(const BlockValue& m, const BlockValue& d, const SdpProblem& p) {
  double step = kInfinity;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (p.blocks[k].diagonal) {
      for (Eigen::Index i = 0; i < m[k].rows(); ++i) {
        if (d[k](i, 0) < 0.0) step = std::min(step, -m[k](i, 0) / d[k](i, 0));
      }
      continue;
    }
    Eigen::LLT<MatrixXd> llt(m[k]);
    if (llt.info() != Eigen::Success) return -1.0;
    const MatrixXd l = llt.matrixL();
    MatrixXd w = l.triangularView<Eigen::Lower>().solve(d[k]);
    w = l.triangularView<Eigen::Lower>().solve(w.transpose()).eval();
    w = 0.5 * (w + w.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<MatrixXd> eig(w, Eigen::EigenvaluesOnly);
    const double lambda = eig.eigenvalues().minCoeff();
    if (lambda < 0.0) step = std::min(step, -1.0 / lambda);
  }
  return step;
}

struct Direction {
  BlockValue dx;
  VectorXd dy;
  BlockValue dz;
};

}  // namespace

void SdpProblem::validate() const {
  if (blocks.empty()) throw std::invalid_argument("SDP has no blocks");
  if (b.size() != variable_count()) {
    throw std::invalid_argument("SDP objective length differs from variables");
  }
  auto check = [&](const std::vector<SdpEntry>& entries) {
    for (const auto& e : entries) {
      if (e.block < 0 || e.block >= static_cast<int>(blocks.size())) {
        throw std::invalid_argument("SDP entry block out of range");
      }
      const auto& blk = blocks[e.block];
      if (e.row < 0 || e.row > e.col || e.col >= blk.size ||
          (blk.diagonal && e.row != e.col)) {
        throw std::invalid_argument("SDP entry position invalid");
      }
    }
  };
  check(c);
  for (const auto& ai : a) check(ai);
}

std::string to_string(SdpStatus status) {
  switch (status) {
    case SdpStatus::Optimal:
      return "optimal";
    case SdpStatus::Infeasible:
      return "infeasible";
    case SdpStatus::Unbounded:
      return "unbounded";
    case SdpStatus::NearOptimal:
      return "near_optimal";
    case SdpStatus::MaxIterations:
      return "max_iterations";
    case SdpStatus::NumericalFailure:
      return "numerical_failure";
  }
  return "unknown";
}

SdpSolution solve_sdp(const SdpProblem& problem, const SdpOptions& options) {
  problem.validate();
  const SdpProblem& p = problem;
  const int m = p.variable_count();
  int n = 0;
  for (const auto& blk : p.blocks) n += blk.size;

  BlockValue c = zeros(p);
  add_entries(c, p.c, 1.0, p);
  std::vector<BlockValue> a_dense;
  a_dense.reserve(m);
  double a_norm_max = 0.0;
  double start_x = 0.0;
  for (int i = 0; i < m; ++i) {
    BlockValue ai = zeros(p);
    add_entries(ai, p.a[i], 1.0, p);
    const double norm = frobenius(ai);
    a_norm_max = std::max(a_norm_max, norm);
    start_x = std::max(start_x, n * (1.0 + std::abs(p.b(i))) / (1.0 + norm));
    a_dense.push_back(std::move(ai));
  }
  const double c_norm = frobenius(c);
  const double b_norm = p.b.norm();
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  start_x = std::max({10.0, sqrt_n, start_x});
  const double start_z = std::max({10.0, sqrt_n, c_norm, a_norm_max});

  auto apply_a = [&](const BlockValue& x) {
    VectorXd out(m);
    for (int i = 0; i < m; ++i) out(i) = trace_product(p.a[i], x, p);
    return out;
  };
  auto apply_at = [&](const VectorXd& y) {
    BlockValue out = zeros(p);
    for (int i = 0; i < m; ++i) {
      if (y(i) != 0.0) add_entries(out, p.a[i], y(i), p);
    }
    return out;
  };

  BlockValue x = scaled_identity(p, start_x);
  BlockValue z = scaled_identity(p, start_z);
  VectorXd y = VectorXd::Zero(m);

  SdpSolution sol;
  auto record = [&](SdpStatus status, int iterations) {
    sol.status = status;
    sol.iterations = iterations;
    sol.y = y;
    sol.x = x;
    sol.z = difference(c, apply_at(y));
    sol.value = p.b.dot(y) + p.objective_offset;
    sol.primal_value = dot(c, x) + p.objective_offset;
    sol.gap = sol.primal_value - sol.value;
    sol.primal_residual = (p.b - apply_a(x)).norm() / (1.0 + b_norm);
    sol.dual_residual =
        frobenius(difference(difference(c, z), apply_at(y))) / (1.0 + c_norm);
    return sol;
  };

  // Best iterate seen so far by max(relative gap, residuals). Problems
  // without a strictly feasible point lose accuracy once the Schur
  // complement becomes ill-conditioned; we then fall back to this iterate.
  struct Snapshot {
    BlockValue x, z;
    VectorXd y;
    double merit = kInfinity;
    int iteration = 0;
  } best;
  auto finish_best = [&](int it) {
    if (best.merit < kInfinity) x = best.x, z = best.z, y = best.y;
    if (best.merit < options.tolerance) return record(SdpStatus::Optimal, it);
    if (best.merit < std::sqrt(options.tolerance)) {
      return record(SdpStatus::NearOptimal, it);
    }
    return record(SdpStatus::NumericalFailure, it);
  };

  for (int it = 0; it < options.max_iterations; ++it) {
    const VectorXd rp = p.b - apply_a(x);
    const BlockValue rd = difference(difference(c, z), apply_at(y));
    const double pobj = dot(c, x);
    const double dobj = p.b.dot(y);
    const double mu = dot(x, z) / n;
    const double pinf = rp.norm() / (1.0 + b_norm);
    const double dinf = frobenius(rd) / (1.0 + c_norm);
    const double rel_gap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));

    const double merit = std::max({rel_gap, pinf, dinf});
    if (!std::isfinite(merit)) return finish_best(it);
    if (merit < options.tolerance) return record(SdpStatus::Optimal, it);
    if (merit < best.merit) {
      best = {x, z, y, merit, it};
    } else if (best.merit < std::sqrt(options.tolerance) &&
               (it - best.iteration >= kStallIterations ||
                merit > 1e3 * best.merit)) {
      return finish_best(it);
    }
    // Farkas rays: X with A(X) -> 0 and C • X < 0 proves (D) infeasible;
    // y with b^T y > 0 and Σ y_i A_i ⪯ 0 proves (P) infeasible.
    if (pobj < 0.0 && apply_a(x).norm() / -pobj < 1e-8) {
      return record(SdpStatus::Infeasible, it);
    }
    if (dobj > 0.0 && frobenius(difference(c, rd)) / dobj < 1e-8) {
      return record(SdpStatus::Unbounded, it);
    }

    BlockValue z_inv;
    if (!inverse(z, p, z_inv)) return finish_best(it);

    // Schur complement M_ij = Tr(A_i X A_j Z^-1).
    MatrixXd schur(m, m);
    for (int j = 0; j < m; ++j) {
      const BlockValue g = product(product(x, a_dense[j], p), z_inv, p);
      for (int i = 0; i < m; ++i) schur(i, j) = trace_product(p.a[i], g, p);
    }
    schur = 0.5 * (schur + schur.transpose()).eval();
    Eigen::LLT<MatrixXd> schur_llt(schur);
    if (schur_llt.info() != Eigen::Success) {
      const double shift = 1e-12 * std::max(1.0, schur.diagonal().maxCoeff());
      schur.diagonal().array() += shift;
      schur_llt.compute(schur);
      if (schur_llt.info() != Eigen::Success) {
        return finish_best(it);
      }
    }

    const BlockValue x_rd_zinv = product(product(x, rd, p), z_inv, p);
    const VectorXd a_x_rd_zinv = apply_a(x_rd_zinv);
    auto solve_direction = [&](const BlockValue& k) {
      Direction d;
      const VectorXd rhs = rp - apply_a(k) + a_x_rd_zinv;
      d.dy = schur_llt.solve(rhs);
      d.dz = difference(rd, apply_at(d.dy));
      d.dx = difference(k, product(product(x, d.dz, p), z_inv, p));
      symmetrize(d.dx, p);
      return d;
    };

    // Predictor (affine scaling, σ = 0): K = -X.
    BlockValue k_aff = x;
    for (auto& blk : k_aff) blk = -blk;
    const Direction aff = solve_direction(k_aff);
    const double ap_aff = std::min(1.0, max_step(x, aff.dx, p));
    const double ad_aff = std::min(1.0, max_step(z, aff.dz, p));
    if (ap_aff < 0.0 || ad_aff < 0.0) {
      return finish_best(it);
    }
    BlockValue x_aff = x;
    axpy(x_aff, ap_aff, aff.dx);
    BlockValue z_aff = z;
    axpy(z_aff, ad_aff, aff.dz);
    const double mu_aff = dot(x_aff, z_aff) / n;
    const double ratio = std::clamp(mu_aff / mu, 0.0, 1.0);
    const double sigma = ratio * ratio * ratio;

    // Corrector: K = σμ Z^-1 - X - dXa dZa Z^-1.
    BlockValue k_cor = z_inv;
    for (auto& blk : k_cor) blk *= sigma * mu;
    axpy(k_cor, -1.0, x);
    axpy(k_cor, -1.0, product(product(aff.dx, aff.dz, p), z_inv, p));
    const Direction cor = solve_direction(k_cor);

    const double sp = max_step(x, cor.dx, p);
    const double sd = max_step(z, cor.dz, p);
    if (sp < 0.0 || sd < 0.0) return finish_best(it);
    const double ap = std::min(1.0, 0.95 * sp);
    const double ad = std::min(1.0, 0.95 * sd);
    axpy(x, ap, cor.dx);
    symmetrize(x, p);
    y += ad * cor.dy;
    axpy(z, ad, cor.dz);
    symmetrize(z, p);
  }
  if (best.merit < options.tolerance) return finish_best(options.max_iterations);
  return record(SdpStatus::MaxIterations, options.max_iterations);
}

}  // namespace anyonrng

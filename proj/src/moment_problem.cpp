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

#include "anyonrng/moment_problem.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace anyonrng {
namespace {

int party(int letter) { return letter / 2; }

std::vector<Word> level_basis(HierarchyLevel level) {
  std::vector<Word> basis{{}};
  if (level == HierarchyLevel::NoSignalling) return basis;
  for (int l = 0; l < 6; ++l) basis.push_back({l});
  if (level == HierarchyLevel::OneAB || level == HierarchyLevel::Two) {
    for (int l1 = 0; l1 < 6; ++l1) {
      for (int l2 = l1 + 1; l2 < 6; ++l2) {
        if (party(l1) != party(l2)) basis.push_back({l1, l2});
      }
    }
  }
  if (level == HierarchyLevel::Two) {
    for (int p = 0; p < 3; ++p) {
      basis.push_back({2 * p, 2 * p + 1});
      basis.push_back({2 * p + 1, 2 * p});
    }
  }
  std::vector<Word> unique;
  for (const auto& w : basis) {
    const Word c = canonical_word(w);
    if (std::find(unique.begin(), unique.end(), c) == unique.end()) {
      unique.push_back(c);
    }
  }
  return unique;
}

void add_expr(std::vector<SdpEntry>& constant,
              std::vector<std::vector<SdpEntry>>& a, const AffineExpr& e,
              double scale, int block, int row, int col) {
  // Z = C - Σ y_v A_v, so an entry const + Σ coef y_v contributes const to
  // C and -coef to A_v.
  if (e.constant != 0.0) constant.push_back({block, row, col, scale * e.constant});
  for (const auto& [v, coef] : e.terms) {
    a[v].push_back({block, row, col, -scale * coef});
  }
}

// Merges duplicate positions produced by repeated moments.
void compress(std::vector<SdpEntry>& entries) {
  std::sort(entries.begin(), entries.end(), [](const SdpEntry& l, const SdpEntry& r) {
    return std::tie(l.block, l.row, l.col) < std::tie(r.block, r.row, r.col);
  });
  std::vector<SdpEntry> out;
  for (const auto& e : entries) {
    if (!out.empty() && out.back().block == e.block && out.back().row == e.row &&
        out.back().col == e.col) {
      out.back().value += e.value;
    } else {
      out.push_back(e);
    }
  }
  std::erase_if(out, [](const SdpEntry& e) { return e.value == 0.0; });
  entries = std::move(out);
}

}  // namespace

HierarchyLevel parse_level(const std::string& text) {
  if (text == "1") return HierarchyLevel::One;
  if (text == "1+AB") return HierarchyLevel::OneAB;
  if (text == "2") return HierarchyLevel::Two;
  throw std::invalid_argument("hierarchy level must be 1, 1+AB or 2, got '" +
                              text + "'");
}

std::string to_string(HierarchyLevel level) {
  switch (level) {
    case HierarchyLevel::One:
      return "1";
    case HierarchyLevel::OneAB:
      return "1+AB";
    case HierarchyLevel::Two:
      return "2";
    case HierarchyLevel::NoSignalling:
      return "no-signalling";
  }
  return "unknown";
}

Word canonical_word(const Word& w) {
  Word sorted = w;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](int l, int r) { return party(l) < party(r); });
  Word out;
  for (int letter : sorted) {
    if (!out.empty() && out.back() == letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

Word moment_key(const Word& w) {
  const Word forward = canonical_word(w);
  const Word backward = canonical_word(Word(w.rbegin(), w.rend()));
  return std::min(forward, backward);
}

std::string word_label(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int letter : w) {
    out += static_cast<char>('A' + party(letter));
    out += static_cast<char>('0' + letter % 2);
  }
  return out;
}

std::string to_string(const OutcomeTriple& t) {
  auto bits = [](int v) {
    return std::string{static_cast<char>('0' + ((v >> 2) & 1)),
                       static_cast<char>('0' + ((v >> 1) & 1)),
                       static_cast<char>('0' + (v & 1))};
  };
  return "P(" + bits(t.abc) + "|" + bits(t.xyz) + ")";
}

std::vector<std::pair<Word, double>> probability_expansion(
    const OutcomeTriple& triple) {
  std::vector<std::pair<Word, double>> out;
  for (int subset = 0; subset < 8; ++subset) {
    Word w;
    int sign = 1;
    for (int p = 0; p < 3; ++p) {
      if (!((subset >> (2 - p)) & 1)) continue;
      const int setting = (triple.xyz >> (2 - p)) & 1;
      const int outcome = (triple.abc >> (2 - p)) & 1;
      w.push_back(2 * p + setting);
      if (outcome) sign = -sign;
    }
    out.emplace_back(std::move(w), sign / 8.0);
  }
  return out;
}

int MomentProblem::find_moment(const Word& w) const {
  const Word key = moment_key(w);
  const auto it = std::find(moments.begin(), moments.end(), key);
  return it == moments.end() ? -1 : static_cast<int>(it - moments.begin());
}

Eigen::VectorXd MomentProblem::moment_values(const Eigen::VectorXd& y) const {
  Eigen::VectorXd out(moments.size());
  for (std::size_t i = 0; i < moments.size(); ++i) {
    double v = moment_exprs[i].constant;
    for (const auto& [var, coef] : moment_exprs[i].terms) v += coef * y(var);
    out(static_cast<Eigen::Index>(i)) = v;
  }
  return out;
}

std::string to_string(NoSignallingScope scope) {
  return scope == NoSignallingScope::MabkSettings ? "mabk_settings"
                                                  : "all_settings";
}

namespace {

MomentProblem build(HierarchyLevel level, double l_target,
                    const OutcomeTriple& objective, std::vector<int> settings) {
  if (objective.abc < 0 || objective.abc > 7 || objective.xyz < 0 ||
      objective.xyz > 7) {
    throw std::invalid_argument("outcome triple out of range");
  }
  MomentProblem mp;
  mp.level = level;
  mp.l_target = l_target;
  mp.objective = objective;
  mp.settings = std::move(settings);
  if (std::find(mp.settings.begin(), mp.settings.end(), objective.xyz) ==
      mp.settings.end()) {
    throw std::invalid_argument("objective settings are not modelled");
  }
  mp.basis = level_basis(level);

  std::map<Word, int> index;
  auto intern = [&](const Word& w) {
    const Word key = moment_key(w);
    const auto [it, inserted] =
        index.emplace(key, static_cast<int>(mp.moments.size()));
    if (inserted) mp.moments.push_back(key);
    return it->second;
  };
  intern({});

  const int d = level == HierarchyLevel::NoSignalling ? 0 : mp.matrix_dimension();
  mp.gram.assign(d, std::vector<int>(d, 0));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Word w(mp.basis[i].rbegin(), mp.basis[i].rend());
      w.insert(w.end(), mp.basis[j].begin(), mp.basis[j].end());
      mp.gram[i][j] = intern(w);
    }
  }
  const std::size_t gram_moments = mp.moments.size();
  for (int xyz : mp.settings) {
    for (const auto& [w, coef] : probability_expansion({0, xyz})) intern(w);
  }
  for (std::size_t i = gram_moments; i < mp.moments.size(); ++i) {
    mp.positivity_only.push_back(static_cast<int>(i));
  }

  // MABK equality: <A0B0C0> = l_target + <A0B1C1> + <A1B0C1> + <A1B1C0>.
  const int pivot = index.at(moment_key({0, 2, 4}));
  const int others[3] = {index.at(moment_key({0, 3, 5})),
                         index.at(moment_key({1, 2, 5})),
                         index.at(moment_key({1, 3, 4}))};

  std::vector<int> variable_of(mp.moments.size(), -1);
  int variables = 0;
  for (std::size_t i = 1; i < mp.moments.size(); ++i) {
    if (static_cast<int>(i) != pivot) variable_of[i] = variables++;
  }
  mp.moment_exprs.resize(mp.moments.size());
  mp.moment_exprs[0].constant = 1.0;
  for (std::size_t i = 1; i < mp.moments.size(); ++i) {
    if (variable_of[i] >= 0) mp.moment_exprs[i].terms = {{variable_of[i], 1.0}};
  }
  mp.moment_exprs[pivot].constant = l_target;
  for (int o : others) mp.moment_exprs[pivot].terms.push_back({variable_of[o], 1.0});

  SdpProblem& sdp = mp.sdp;
  sdp.a.assign(variables, {});
  if (d > 0) {
    sdp.blocks.push_back({d, false});
    for (int i = 0; i < d; ++i) {
      for (int j = i; j < d; ++j) {
        add_expr(sdp.c, sdp.a, mp.moment_exprs[mp.gram[i][j]], 1.0, 0, i, j);
      }
    }
  }
  const int pblock = static_cast<int>(sdp.blocks.size());
  sdp.blocks.push_back({8 * static_cast<int>(mp.settings.size()), true});

  AffineExpr objective_expr;
  for (std::size_t si = 0; si < mp.settings.size(); ++si) {
    const int xyz = mp.settings[si];
    for (int abc = 0; abc < 8; ++abc) {
      const int row = 8 * static_cast<int>(si) + abc;
      for (const auto& [w, coef] : probability_expansion({abc, xyz})) {
        const auto& e = mp.moment_exprs[index.at(moment_key(w))];
        add_expr(sdp.c, sdp.a, e, coef, pblock, row, row);
        if (OutcomeTriple{abc, xyz} == objective) {
          objective_expr.constant += coef * e.constant;
          for (const auto& [v, c] : e.terms) {
            objective_expr.terms.push_back({v, coef * c});
          }
        }
      }
    }
  }
  compress(sdp.c);
  for (auto& ai : sdp.a) compress(ai);

  sdp.b = Eigen::VectorXd::Zero(variables);
  for (const auto& [v, c] : objective_expr.terms) sdp.b(v) += c;
  sdp.objective_offset = objective_expr.constant;
  return mp;
}

std::vector<int> all_settings() { return {0, 1, 2, 3, 4, 5, 6, 7}; }

}  // namespace

MomentProblem build_moment_problem(HierarchyLevel level, double l_target,
                                   const OutcomeTriple& objective) {
  if (level == HierarchyLevel::NoSignalling) {
    return build_nosignalling_problem(l_target, objective,
                                      NoSignallingScope::AllSettings);
  }
  return build(level, l_target, objective, all_settings());
}

std::vector<int> nosignalling_settings(NoSignallingScope scope) {
  if (scope == NoSignallingScope::MabkSettings) return {0, 3, 5, 6};
  return all_settings();
}

MomentProblem build_nosignalling_problem(double l_target,
                                         const OutcomeTriple& objective,
                                         NoSignallingScope scope) {
  return build(HierarchyLevel::NoSignalling, l_target, objective,
               nosignalling_settings(scope));
}

}  // namespace anyonrng

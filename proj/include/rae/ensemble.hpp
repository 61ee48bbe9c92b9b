// Copyright 2026 The RAE Authors
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

#pragma once

// Naive, augmented, robust and argumentative ensembling.
//
// Every method first produces its candidate solutions (one per top label for
// the naive family, one per largest s-preferred extension for argumentative
// ensembling) and then applies a tie-break policy to pick one.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "rae/baf.hpp"
#include "rae/error.hpp"
#include "rae/instance.hpp"
#include "rae/preferences.hpp"
#include "rae/properties.hpp"

namespace rae {

struct SeededRandom {
  std::uint64_t seed = 0;
};
// Prefer a candidate carrying the naive-ensembling label; otherwise seeded.
struct MatchNaiveThenSeeded {
  std::uint64_t seed = 0;
};
struct ReportAll {};

using TieBreakPolicy = std::variant<SeededRandom, MatchNaiveThenSeeded, ReportAll>;

enum class SearchStrategy {
  kStructured,  // search over {Mi, ci} pairs
  kGeneric,     // argument-level search of the generic engine
};

// Model i is argument i; counterfactual i is argument m + i.
inline constexpr std::size_t kMaxModels = baf::kMaxArgs / 2;

inline baf::ArgId model_arg(ModelId i) { return i; }
inline baf::ArgId ce_arg(const RaeInstance& inst, ModelId i) { return inst.size() + i; }

inline std::size_t draw_index(std::uint64_t seed, std::size_t n) {
  if (n <= 1) return 0;
  std::mt19937_64 gen(seed);
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen);
}

namespace detail {

inline std::uint64_t seed_of(const TieBreakPolicy& tb) {
  if (const auto* s = std::get_if<SeededRandom>(&tb)) return s->seed;
  if (const auto* s = std::get_if<MatchNaiveThenSeeded>(&tb)) return s->seed;
  return 0;
}

inline Solution pick(const std::vector<Solution>& candidates, std::size_t index,
                     std::uint64_t seed) {
  Solution s = candidates.at(index);
  s.tiebreak = {seed, index, candidates.size()};
  return s;
}

// Seeded choice among `candidates`, restricted to those carrying `label`
// when at least one does.
inline Solution pick_preferring(const std::vector<Solution>& candidates,
                                std::optional<Label> label, std::uint64_t seed) {
  std::vector<std::size_t> pool;
  if (label) {
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (candidates[k].label == *label) pool.push_back(k);
    }
  }
  if (pool.empty()) {
    for (std::size_t k = 0; k < candidates.size(); ++k) pool.push_back(k);
  }
  return pick(candidates, pool[draw_index(seed, pool.size())], seed);
}

inline void require_models(const RaeInstance& inst) {
  if (inst.size() == 0) {
    fail(ErrorKind::kUsage, "empty_instance", "ensembling needs at least one model");
  }
}

inline std::vector<ModelId> models_with_label(const RaeInstance& inst, Label l) {
  std::vector<ModelId> out;
  for (ModelId i = 0; i < inst.size(); ++i) {
    if (inst.pred_x(i) == l) out.push_back(i);
  }
  return out;
}

}  // namespace detail

// One candidate per top label: the models predicting it, no counterfactuals.
inline std::vector<Solution> naive_candidates(const RaeInstance& inst) {
  detail::require_models(inst);
  std::vector<Solution> out;
  for (Label l : majority_label(inst)) {
    Solution s;
    s.method = Method::kNaive;
    s.label = l;
    s.models = detail::models_with_label(inst, l);
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<Solution> augmented_candidates(const RaeInstance& inst) {
  auto out = naive_candidates(inst);
  for (auto& s : out) {
    s.method = Method::kAugmented;
    s.ces = s.models;
  }
  return out;
}

// Keeps c_i (for Mi in the ensemble) only if it is valid for every model of
// the ensemble.
inline std::vector<Solution> robust_candidates(const RaeInstance& inst) {
  auto out = naive_candidates(inst);
  for (auto& s : out) {
    s.method = Method::kRobust;
    for (ModelId i : s.models) {
      const bool valid_everywhere = std::all_of(
          s.models.begin(), s.models.end(), [&](ModelId j) { return inst.valid(j, i); });
      if (valid_everywhere) s.ces.push_back(i);
    }
  }
  return out;
}

namespace detail {

inline Solution select_simple(std::vector<Solution> candidates, const TieBreakPolicy& tb) {
  if (std::holds_alternative<ReportAll>(tb)) return pick(candidates, 0, 0);
  const std::uint64_t seed = seed_of(tb);
  return pick(candidates, draw_index(seed, candidates.size()), seed);
}

}  // namespace detail

// Under ReportAll the first candidate is returned; use ensemble() to get all.
inline Solution naive_ensemble(const RaeInstance& inst, const TieBreakPolicy& tb) {
  return detail::select_simple(naive_candidates(inst), tb);
}

inline Solution augmented_ensemble(const RaeInstance& inst, const TieBreakPolicy& tb) {
  return detail::select_simple(augmented_candidates(inst), tb);
}

inline Solution robust_ensemble(const RaeInstance& inst, const TieBreakPolicy& tb) {
  return detail::select_simple(robust_candidates(inst), tb);
}

// Attacks:
//   (Mi, Mj)  iff Mi(x) != Mj(x) and Mi >= Mj
//   (Mi, cj)  iff Mi(cj) == Mi(x) and Mi >= Mj
//   (cj, Mi)  iff Mi(cj) == Mi(x) and Mj >= Mi
// Supports: (Mi, ci) and (ci, Mi) for every i.
inline baf::Baf build_baf(const RaeInstance& inst, const ModelPreference& mp) {
  const std::size_t m = inst.size();
  if (mp.size() != m) {
    fail(ErrorKind::kUsage, "preference_size",
         "model preference covers " + std::to_string(mp.size()) + " models, instance has " +
             std::to_string(m));
  }
  if (m > kMaxModels) {
    fail(ErrorKind::kCapacity, "too_many_models",
         std::to_string(m) + " models need " + std::to_string(2 * m) +
             " arguments; the cap is " + std::to_string(baf::kMaxArgs));
  }
  std::vector<baf::Edge> attacks, supports;
  for (ModelId i = 0; i < m; ++i) {
    for (ModelId j = 0; j < m; ++j) {
      if (i != j && inst.pred_x(i) != inst.pred_x(j) && mp.at_least(i, j)) {
        attacks.emplace_back(model_arg(i), model_arg(j));
      }
      if (!inst.valid(i, j)) {
        if (mp.at_least(i, j)) attacks.emplace_back(model_arg(i), ce_arg(inst, j));
        if (mp.at_least(j, i)) attacks.emplace_back(ce_arg(inst, j), model_arg(i));
      }
    }
    supports.emplace_back(model_arg(i), ce_arg(inst, i));
    supports.emplace_back(ce_arg(inst, i), model_arg(i));
  }
  return baf::Baf(2 * m, std::move(attacks), std::move(supports));
}

namespace detail {

inline std::vector<baf::ArgSet> pair_units(const RaeInstance& inst) {
  std::vector<baf::ArgSet> units;
  for (ModelId i = 0; i < inst.size(); ++i) {
    units.push_back(baf::ArgSet{model_arg(i), ce_arg(inst, i)});
  }
  return units;
}

inline std::vector<baf::Extension> s_preferred(const RaeInstance& inst,
                                               const baf::Baf& framework,
                                               SearchStrategy strategy, bool largest) {
  if (strategy == SearchStrategy::kStructured) {
    return baf::enumerate_preferred_over_units(framework, baf::Semantics::kSPreferred,
                                               pair_units(inst), largest);
  }
  return largest ? baf::largest_preferred(framework, baf::Semantics::kSPreferred)
                 : baf::enumerate_preferred(framework, baf::Semantics::kSPreferred);
}

}  // namespace detail

// Splits an extension of the corresponding framework into models and
// counterfactuals. The label is the shared prediction of the models.
inline Solution solution_from_extension(const RaeInstance& inst, baf::ArgSet ext) {
  Solution s;
  s.method = Method::kArgumentative;
  ext.for_each([&](baf::ArgId a) {
    if (a < inst.size()) {
      s.models.push_back(a);
    } else {
      s.ces.push_back(a - inst.size());
    }
  });
  if (!s.models.empty()) s.label = inst.pred_x(s.models.front());
  return s;
}

// All s-preferred extensions of the corresponding framework.
inline std::vector<baf::Extension> s_preferred_extensions(
    const RaeInstance& inst, const ModelPreference& mp,
    SearchStrategy strategy = SearchStrategy::kStructured) {
  detail::require_models(inst);
  return detail::s_preferred(inst, build_baf(inst, mp), strategy, false);
}

// The largest s-preferred extensions, as solutions, in lexicographic order.
inline std::vector<Solution> argumentative_candidates(
    const RaeInstance& inst, const ModelPreference& mp,
    SearchStrategy strategy = SearchStrategy::kStructured) {
  detail::require_models(inst);
  std::vector<Solution> out;
  for (baf::ArgSet ext : detail::s_preferred(inst, build_baf(inst, mp), strategy, true)) {
    out.push_back(solution_from_extension(inst, ext));
  }
  return out;
}

namespace detail {

inline Solution select_argumentative(const RaeInstance& inst,
                                     const std::vector<Solution>& candidates,
                                     const TieBreakPolicy& tb) {
  if (std::holds_alternative<ReportAll>(tb)) return pick(candidates, 0, 0);
  const std::uint64_t seed = seed_of(tb);
  std::optional<Label> naive_label;
  if (std::holds_alternative<MatchNaiveThenSeeded>(tb)) {
    naive_label = naive_ensemble(inst, SeededRandom{seed}).label;
  }
  return pick_preferring(candidates, naive_label, seed);
}

}  // namespace detail

inline Solution argumentative_ensemble(const RaeInstance& inst, const ModelPreference& mp,
                                       const TieBreakPolicy& tb,
                                       SearchStrategy strategy = SearchStrategy::kStructured) {
  return detail::select_argumentative(inst, argumentative_candidates(inst, mp, strategy), tb);
}

struct EnsembleResult {
  // The selected solution, or every candidate under ReportAll.
  std::vector<Solution> solutions;
  // More than one candidate existed.
  bool multiple = false;
  // Several candidates existed and all share one label.
  bool same_label = false;
};

inline std::vector<Solution> candidates(const RaeInstance& inst, Method method,
                                        const ModelPreference& mp,
                                        SearchStrategy strategy = SearchStrategy::kStructured) {
  switch (method) {
    case Method::kNaive: return naive_candidates(inst);
    case Method::kAugmented: return augmented_candidates(inst);
    case Method::kRobust: return robust_candidates(inst);
    case Method::kArgumentative: return argumentative_candidates(inst, mp, strategy);
  }
  fail(ErrorKind::kUsage, "unknown_method", "unknown ensembling method");
}

inline EnsembleResult ensemble(const RaeInstance& inst, Method method,
                               const ModelPreference& mp, const TieBreakPolicy& tb,
                               SearchStrategy strategy = SearchStrategy::kStructured) {
  const auto cands = candidates(inst, method, mp, strategy);
  EnsembleResult r;
  r.multiple = cands.size() > 1;
  r.same_label = r.multiple && std::all_of(cands.begin(), cands.end(), [&](const Solution& s) {
                   return s.label == cands.front().label;
                 });
  if (std::holds_alternative<ReportAll>(tb)) {
    for (std::size_t k = 0; k < cands.size(); ++k) r.solutions.push_back(detail::pick(cands, k, 0));
  } else if (method == Method::kArgumentative) {
    r.solutions.push_back(detail::select_argumentative(inst, cands, tb));
  } else {
    r.solutions.push_back(detail::select_simple(cands, tb));
  }
  return r;
}

}  // namespace rae

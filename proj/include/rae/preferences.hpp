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

// Model preferences: a total preorder over models encoded as a rank vector
// (lower rank = more preferred, equal rank = indifferent), and the
// lexicographic construction from prioritized property scores.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rae/error.hpp"
#include "rae/instance.hpp"

namespace rae {

// Property names grouped by priority, most important group first. Properties
// within one group are equally important; their scores are summed.
using PropertyPreference = std::vector<std::vector<std::string>>;

class ModelPreference {
 public:
  ModelPreference() = default;

  // Ranks are renumbered densely (0, 1, ...) preserving their order.
  explicit ModelPreference(std::vector<std::size_t> ranks) : rank_(std::move(ranks)) {
    std::vector<std::size_t> distinct = rank_;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (auto& r : rank_) {
      r = static_cast<std::size_t>(
          std::lower_bound(distinct.begin(), distinct.end(), r) - distinct.begin());
    }
  }

  // Every model equally preferred.
  static ModelPreference indifferent(std::size_t m) {
    return ModelPreference(std::vector<std::size_t>(m, 0));
  }

  std::size_t size() const { return rank_.size(); }
  std::size_t rank(ModelId i) const { return rank_[i]; }
  const std::vector<std::size_t>& ranks() const { return rank_; }

  // i is at least as preferred as j.
  bool at_least(ModelId i, ModelId j) const { return rank_[i] <= rank_[j]; }
  bool strictly(ModelId i, ModelId j) const { return rank_[i] < rank_[j]; }

  friend bool operator==(const ModelPreference&, const ModelPreference&) = default;

 private:
  std::vector<std::size_t> rank_;
};

enum class Comparison { kStrict, kEqual, kWorse };

inline Comparison prefers(const ModelPreference& mp, ModelId i, ModelId j) {
  if (i >= mp.size() || j >= mp.size()) {
    fail(ErrorKind::kUsage, "index_out_of_range",
         "model index out of range for a preference over " +
             std::to_string(mp.size()) + " models");
  }
  if (mp.rank(i) < mp.rank(j)) return Comparison::kStrict;
  if (mp.rank(i) == mp.rank(j)) return Comparison::kEqual;
  return Comparison::kWorse;
}

// Mi is preferred to Mj iff its key (per-group score sums, in priority
// order) is lexicographically larger. Equal keys share a rank.
inline ModelPreference lexicographic_preference(const RaeInstance& inst,
                                                const PropertyPreference& pp) {
  const std::size_t m = inst.size();
  std::vector<std::vector<double>> keys(m, std::vector<double>(pp.size(), 0.0));
  for (std::size_t g = 0; g < pp.size(); ++g) {
    for (const std::string& name : pp[g]) {
      const auto it = inst.meta().find(name);
      if (it == inst.meta().end()) {
        fail(ErrorKind::kValidation, "missing_property",
             "property '" + name + "' has no score for model 0");
      }
      if (it->second.size() != m) {
        fail(ErrorKind::kValidation, "missing_property",
             "property '" + name + "' has no score for model " +
                 std::to_string(it->second.size()));
      }
      for (std::size_t i = 0; i < m; ++i) keys[i][g] += it->second[i];
    }
  }
  std::vector<std::vector<double>> distinct = keys;
  std::sort(distinct.begin(), distinct.end(), std::greater<>());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::size_t> ranks(m);
  for (std::size_t i = 0; i < m; ++i) {
    ranks[i] = static_cast<std::size_t>(
        std::lower_bound(distinct.begin(), distinct.end(), keys[i], std::greater<>()) -
        distinct.begin());
  }
  return ModelPreference(std::move(ranks));
}

}  // namespace rae

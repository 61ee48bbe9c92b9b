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

// Checkers for the six desirable properties of a recourse-aware ensembling
// solution. Each flag is evaluated on one (instance, solution) pair; a false
// flag always carries a witness describing the violation.

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rae/error.hpp"
#include "rae/instance.hpp"

namespace rae {

// Labels with maximal model support on x, ascending.
inline std::vector<Label> majority_label(const RaeInstance& inst) {
  std::size_t ones = 0;
  for (ModelId i = 0; i < inst.size(); ++i) ones += inst.pred_x(i) == Label::kOne;
  const std::size_t zeros = inst.size() - ones;
  if (zeros > ones) return {Label::kZero};
  if (ones > zeros) return {Label::kOne};
  return {Label::kZero, Label::kOne};
}

struct PropertyReport {
  bool non_emptiness = false;
  bool non_triviality = false;
  bool model_agreement = false;
  bool majority_vote = false;
  bool counterfactual_validity = false;
  bool counterfactual_coherence = false;
  // Property name -> description of the violation; only false flags appear.
  std::map<std::string, std::string> witnesses;
};

inline PropertyReport check_all(const RaeInstance& inst, const Solution& sol) {
  for (ModelId i : sol.models) inst.check_model(i);
  for (ModelId j : sol.ces) inst.check_model(j);

  PropertyReport r;
  auto& w = r.witnesses;

  r.non_emptiness = !sol.models.empty() && !sol.ces.empty();
  if (!r.non_emptiness) {
    w["non_emptiness"] = sol.models.empty() ? "no models selected"
                                            : "no counterfactuals selected";
  }

  r.non_triviality = sol.models.size() > 1;
  if (!r.non_triviality) {
    w["non_triviality"] =
        "only " + std::to_string(sol.models.size()) + " model(s) selected";
  }

  r.model_agreement = true;
  for (std::size_t a = 1; a < sol.models.size() && r.model_agreement; ++a) {
    const ModelId i = sol.models[0], j = sol.models[a];
    if (inst.pred_x(i) != inst.pred_x(j)) {
      r.model_agreement = false;
      w["model_agreement"] = "M" + std::to_string(i) + " and M" +
                             std::to_string(j) + " disagree on x";
    }
  }

  // Presupposes model agreement; an empty model set has no label to defend.
  if (!r.model_agreement) {
    w["majority_vote"] = "model agreement is violated";
  } else if (sol.models.empty()) {
    w["majority_vote"] = "no models selected";
  } else {
    const Label chosen = inst.pred_x(sol.models[0]);
    std::size_t support = 0;
    for (ModelId i = 0; i < inst.size(); ++i) support += inst.pred_x(i) == chosen;
    const std::size_t other = inst.size() - support;
    r.majority_vote = other <= support;
    if (!r.majority_vote) {
      w["majority_vote"] = "label " + std::to_string(to_int(flip(chosen))) +
                           " has " + std::to_string(other) + " votes against " +
                           std::to_string(support);
    }
  }

  r.counterfactual_validity = true;
  for (ModelId i : sol.models) {
    for (ModelId j : sol.ces) {
      if (r.counterfactual_validity && !inst.valid(i, j)) {
        r.counterfactual_validity = false;
        w["counterfactual_validity"] =
            "c" + std::to_string(j) + " is invalid for M" + std::to_string(i);
      }
    }
  }

  std::vector<ModelId> ms = sol.models, cs = sol.ces;
  std::sort(ms.begin(), ms.end());
  std::sort(cs.begin(), cs.end());
  r.counterfactual_coherence = ms == cs;
  if (!r.counterfactual_coherence) {
    std::vector<ModelId> diff;
    std::set_symmetric_difference(ms.begin(), ms.end(), cs.begin(), cs.end(),
                                  std::back_inserter(diff));
    const ModelId k = diff.front();
    const bool model_only = std::binary_search(ms.begin(), ms.end(), k);
    w["counterfactual_coherence"] =
        model_only ? "M" + std::to_string(k) + " selected without c" + std::to_string(k)
                   : "c" + std::to_string(k) + " selected without M" + std::to_string(k);
  }
  return r;
}

inline nlohmann::json to_json(const PropertyReport& r) {
  nlohmann::json j = {
      {"non_emptiness", r.non_emptiness},
      {"non_triviality", r.non_triviality},
      {"model_agreement", r.model_agreement},
      {"majority_vote", r.majority_vote},
      {"counterfactual_validity", r.counterfactual_validity},
      {"counterfactual_coherence", r.counterfactual_coherence},
  };
  j["witnesses"] = r.witnesses;
  return j;
}

}  // namespace rae

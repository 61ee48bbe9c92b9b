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

// One recourse-aware ensembling problem: the predictions of m models on an
// input x and on each model's counterfactual c_j, plus per-model property
// scores. Model i and counterfactual i always belong together.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rae/error.hpp"

namespace rae {

enum class Label : std::uint8_t { kZero = 0, kOne = 1 };

constexpr int to_int(Label l) { return static_cast<int>(l); }
constexpr Label flip(Label l) { return l == Label::kZero ? Label::kOne : Label::kZero; }

inline Label label_from_int(long long v) {
  if (v != 0 && v != 1) {
    fail(ErrorKind::kValidation, "non_binary_label",
         "label " + std::to_string(v) + " is not in {0, 1}");
  }
  return v == 0 ? Label::kZero : Label::kOne;
}

using ModelId = std::size_t;
using PropertyTable = std::map<std::string, std::vector<double>>;
using FeatureMatrix = std::vector<std::vector<double>>;

class RaeInstance {
 public:
  RaeInstance() = default;

  // Validates shape, label range and the counterfactual diagonal
  // (pred_ce[i][i] must differ from pred_x[i]).
  static RaeInstance create(const std::vector<int>& pred_x,
                            const std::vector<std::vector<int>>& pred_ce,
                            PropertyTable meta = {},
                            std::optional<FeatureMatrix> ce_features = {}) {
    const std::size_t m = pred_x.size();
    if (m == 0) {
      fail(ErrorKind::kValidation, "schema_violation", "instance has no models");
    }
    if (pred_ce.size() != m) {
      fail(ErrorKind::kValidation, "non_square_matrix",
           "pred_ce has " + std::to_string(pred_ce.size()) + " rows, expected " +
               std::to_string(m));
    }
    RaeInstance inst;
    inst.m_ = m;
    for (int v : pred_x) inst.pred_x_.push_back(label_from_int(v));
    inst.pred_ce_.reserve(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      if (pred_ce[i].size() != m) {
        fail(ErrorKind::kValidation, "non_square_matrix",
             "pred_ce row " + std::to_string(i) + " has " +
                 std::to_string(pred_ce[i].size()) + " entries, expected " +
                 std::to_string(m));
      }
      for (int v : pred_ce[i]) inst.pred_ce_.push_back(label_from_int(v));
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (inst.pred_ce(i, i) == inst.pred_x(i)) {
        fail(ErrorKind::kValidation, "diagonal_violation",
             "c" + std::to_string(i) + " is not a counterfactual for model " +
                 std::to_string(i) + " (pred_ce[i][i] == pred_x[i])");
      }
    }
    for (const auto& [name, scores] : meta) {
      if (scores.size() != m) {
        fail(ErrorKind::kValidation, "schema_violation",
             "model_meta." + name + " has " + std::to_string(scores.size()) +
                 " scores, expected " + std::to_string(m));
      }
    }
    inst.meta_ = std::move(meta);
    if (ce_features) {
      if (ce_features->size() != m) {
        fail(ErrorKind::kValidation, "schema_violation",
             "ce_features must have one row per counterfactual");
      }
    }
    inst.ce_features_ = std::move(ce_features);
    return inst;
  }

  std::size_t size() const { return m_; }
  Label pred_x(ModelId i) const { return pred_x_[i]; }
  // Prediction of model i on counterfactual j.
  Label pred_ce(ModelId i, ModelId j) const { return pred_ce_[i * m_ + j]; }
  // c_j flips model i's prediction on x.
  bool valid(ModelId i, ModelId j) const { return pred_ce(i, j) != pred_x(i); }

  const PropertyTable& meta() const { return meta_; }
  const std::optional<FeatureMatrix>& ce_features() const { return ce_features_; }

  void check_model(ModelId i) const {
    if (i >= m_) {
      fail(ErrorKind::kUsage, "index_out_of_range",
           "index " + std::to_string(i) + " out of range for " +
               std::to_string(m_) + " models");
    }
  }

  friend bool operator==(const RaeInstance&, const RaeInstance&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<Label> pred_x_;
  std::vector<Label> pred_ce_;
  PropertyTable meta_;
  std::optional<FeatureMatrix> ce_features_;
};

inline bool validity(const RaeInstance& inst, ModelId i, ModelId j) {
  inst.check_model(i);
  inst.check_model(j);
  return inst.valid(i, j);
}

enum class Method { kNaive, kAugmented, kRobust, kArgumentative };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::kNaive: return "naive";
    case Method::kAugmented: return "augmented";
    case Method::kRobust: return "robust";
    case Method::kArgumentative: return "argumentative";
  }
  return "?";
}

inline Method parse_method(std::string_view s) {
  for (Method m : {Method::kNaive, Method::kAugmented, Method::kRobust,
                   Method::kArgumentative}) {
    if (to_string(m) == s) return m;
  }
  fail(ErrorKind::kUsage, "unknown_method",
       "unknown method '" + std::string(s) + "'");
}

struct TieBreakRecord {
  std::uint64_t seed = 0;
  std::size_t chosen_index = 0;
  std::size_t num_candidates = 1;
  friend bool operator==(const TieBreakRecord&, const TieBreakRecord&) = default;
};

// Selected models and counterfactuals (sorted ascending ids).
struct Solution {
  std::vector<ModelId> models;
  std::vector<ModelId> ces;
  Label label = Label::kZero;
  Method method = Method::kNaive;
  TieBreakRecord tiebreak;
  friend bool operator==(const Solution&, const Solution&) = default;
};

// ---------------------------------------------------------------------------
// JSON

namespace detail {

[[noreturn]] inline void schema_error(const std::string& what) {
  fail(ErrorKind::kValidation, "schema_violation", what);
}

inline std::vector<int> int_array(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) schema_error(where + " must contain integers");
    const auto x = v.get<long long>();
    label_from_int(x);
    out.push_back(static_cast<int>(x));
  }
  return out;
}

}  // namespace detail

inline RaeInstance instance_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) detail::schema_error("instance must be a JSON object");
  static const std::vector<std::string> kKeys = {"labels", "pred_x", "pred_ce",
                                                 "model_meta", "ce_features"};
  for (const auto& [key, _] : doc.items()) {
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      detail::schema_error("unknown top-level key '" + key + "'");
    }
  }
  for (const char* required : {"labels", "pred_x", "pred_ce"}) {
    if (!doc.contains(required)) {
      detail::schema_error(std::string("missing key '") + required + "'");
    }
  }
  auto labels = detail::int_array(doc["labels"], "labels");
  std::sort(labels.begin(), labels.end());
  if (labels != std::vector<int>{0, 1}) {
    fail(ErrorKind::kValidation, "non_binary_label", "labels must be exactly [0, 1]");
  }
  const auto pred_x = detail::int_array(doc["pred_x"], "pred_x");
  const auto& ce = doc["pred_ce"];
  if (!ce.is_array()) detail::schema_error("pred_ce must be an array of arrays");
  std::vector<std::vector<int>> pred_ce;
  for (std::size_t i = 0; i < ce.size(); ++i) {
    pred_ce.push_back(detail::int_array(ce[i], "pred_ce[" + std::to_string(i) + "]"));
  }
  PropertyTable meta;
  if (doc.contains("model_meta")) {
    const auto& mm = doc["model_meta"];
    if (!mm.is_object()) detail::schema_error("model_meta must be an object");
    for (const auto& [name, arr] : mm.items()) {
      if (!arr.is_array()) detail::schema_error("model_meta." + name + " must be an array");
      std::vector<double> scores;
      for (const auto& v : arr) {
        if (!v.is_number()) detail::schema_error("model_meta." + name + " must be numeric");
        scores.push_back(v.get<double>());
      }
      meta.emplace(name, std::move(scores));
    }
  }
  std::optional<FeatureMatrix> features;
  if (doc.contains("ce_features")) {
    const auto& cf = doc["ce_features"];
    if (!cf.is_array()) detail::schema_error("ce_features must be an array of arrays");
    FeatureMatrix rows;
    for (const auto& row : cf) {
      if (!row.is_array()) detail::schema_error("ce_features rows must be arrays");
      std::vector<double> r;
      for (const auto& v : row) {
        if (!v.is_number()) detail::schema_error("ce_features must be numeric");
        r.push_back(v.get<double>());
      }
      rows.push_back(std::move(r));
    }
    features = std::move(rows);
  }
  return RaeInstance::create(pred_x, pred_ce, std::move(meta), std::move(features));
}

inline RaeInstance load_instance(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    detail::schema_error(std::string("malformed JSON: ") + e.what());
  }
  return instance_from_json(doc);
}

inline nlohmann::json to_json(const RaeInstance& inst) {
  nlohmann::json doc;
  doc["labels"] = {0, 1};
  const std::size_t m = inst.size();
  nlohmann::json px = nlohmann::json::array();
  nlohmann::json pc = nlohmann::json::array();
  for (std::size_t i = 0; i < m; ++i) {
    px.push_back(to_int(inst.pred_x(i)));
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m; ++j) row.push_back(to_int(inst.pred_ce(i, j)));
    pc.push_back(std::move(row));
  }
  doc["pred_x"] = std::move(px);
  doc["pred_ce"] = std::move(pc);
  nlohmann::json meta = nlohmann::json::object();
  for (const auto& [name, scores] : inst.meta()) meta[name] = scores;
  doc["model_meta"] = std::move(meta);
  if (inst.ce_features()) doc["ce_features"] = *inst.ce_features();
  return doc;
}

inline nlohmann::json to_json(const Solution& s) {
  return {
      {"method", std::string(to_string(s.method))},
      {"label", to_int(s.label)},
      {"models", s.models},
      {"ces", s.ces},
      {"tiebreak",
       {{"seed", s.tiebreak.seed},
        {"num_candidates", s.tiebreak.num_candidates},
        {"chosen_index", s.tiebreak.chosen_index}}},
  };
}

}  // namespace rae

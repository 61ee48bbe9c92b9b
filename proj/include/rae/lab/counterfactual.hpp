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

// Nearest-neighbour counterfactuals over the training rows, and assembly of
// ensembling instances from a set of trained models.

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "rae/error.hpp"
#include "rae/instance.hpp"
#include "rae/lab/dataset.hpp"
#include "rae/lab/model.hpp"

namespace rae::lab {

enum class Metric { kL1, kL2 };

inline std::string to_string(Metric m) { return m == Metric::kL1 ? "L1" : "L2"; }

inline Metric parse_metric(const std::string& s) {
  if (s == "L1" || s == "l1") return Metric::kL1;
  if (s == "L2" || s == "l2") return Metric::kL2;
  fail(ErrorKind::kUsage, "unknown_metric", "unknown distance metric '" + s + "'");
}

// Squared distance for L2; monotone in the true distance.
inline double distance(const Point& a, const Point& b, Metric m) {
  double s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    s += m == Metric::kL1 ? std::abs(d) : d * d;
  }
  return s;
}

// Row index of the closest training point, distinct from x, that the model
// classifies differently from x. Ties go to the lowest row index.
inline std::size_t nn_counterfactual_row(const TrainedModel& model, const Dataset& train,
                                         const Point& x, Metric metric) {
  const Label own = model.predict(x);
  std::size_t best = train.rows();
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < train.rows(); ++r) {
    const Point& c = train.features[r];
    if (c == x) continue;
    const double d = distance(c, x, metric);
    if (d < best_d && model.predict(c) != own) {
      best = r;
      best_d = d;
    }
  }
  if (best == train.rows()) {
    fail(ErrorKind::kValidation, "ce_generation_failed",
         "no training point is classified opposite to the input");
  }
  return best;
}

inline Point nn_counterfactual(const TrainedModel& model, const Dataset& train, const Point& x,
                               Metric metric) {
  return train.features[nn_counterfactual_row(model, train, x, metric)];
}

// One counterfactual per model, then every model evaluated on every one.
inline RaeInstance assemble_instance(const std::vector<const TrainedModel*>& models,
                                     const Dataset& train, const Point& x, Metric metric) {
  const std::size_t m = models.size();
  std::vector<Point> ces;
  for (const TrainedModel* model : models) ces.push_back(nn_counterfactual(*model, train, x, metric));
  std::vector<int> pred_x(m);
  std::vector<std::vector<int>> pred_ce(m, std::vector<int>(m));
  PropertyTable meta = {{"accuracy", {}}, {"simplicity", {}}};
  for (std::size_t i = 0; i < m; ++i) {
    pred_x[i] = to_int(models[i]->predict(x));
    for (std::size_t j = 0; j < m; ++j) pred_ce[i][j] = to_int(models[i]->predict(ces[j]));
    meta["accuracy"].push_back(models[i]->accuracy);
    meta["simplicity"].push_back(models[i]->simplicity);
  }
  return RaeInstance::create(pred_x, pred_ce, std::move(meta), std::move(ces));
}

inline RaeInstance assemble_instance(const std::vector<TrainedModel>& models, const Dataset& train,
                                     const Point& x, Metric metric) {
  std::vector<const TrainedModel*> ptrs;
  for (const auto& m : models) ptrs.push_back(&m);
  return assemble_instance(ptrs, train, x, metric);
}

}  // namespace rae::lab

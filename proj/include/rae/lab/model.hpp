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

// Logistic-linear and one-hidden-layer tanh classifiers trained by plain
// SGD on the log-loss, and seeded pools of them.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "rae/error.hpp"
#include "rae/instance.hpp"
#include "rae/lab/dataset.hpp"

namespace rae::lab {

struct Architecture {
  // 0 means logistic-linear.
  std::size_t hidden_width = 0;

  bool linear() const { return hidden_width == 0; }
  bool operator==(const Architecture&) const = default;
};

inline std::string to_string(Architecture a) {
  return a.linear() ? "linear" : "shallow-" + std::to_string(a.hidden_width);
}

inline Architecture parse_architecture(const std::string& s) {
  if (s == "linear") return {};
  const std::string prefix = "shallow-";
  if (s.rfind(prefix, 0) == 0) {
    try {
      std::size_t used = 0;
      const int w = std::stoi(s.substr(prefix.size()), &used);
      if (w > 0 && used == s.size() - prefix.size()) return {static_cast<std::size_t>(w)};
    } catch (const std::exception&) {
    }
  }
  fail(ErrorKind::kUsage, "unknown_architecture", "unknown architecture '" + s + "'");
}

// Wider networks are less simple; the five standard widths get the five
// simplicity levels and anything linear is simplest.
inline const std::vector<std::size_t> kStandardWidths = {4, 6, 8, 12, 16};

inline double simplicity_of(Architecture a) {
  if (a.linear()) return 1.0;
  const auto it = std::find(kStandardWidths.begin(), kStandardWidths.end(), a.hidden_width);
  if (it == kStandardWidths.end()) {
    fail(ErrorKind::kUsage, "unknown_architecture",
         "no simplicity level for hidden width " + std::to_string(a.hidden_width));
  }
  return 1.0 - 0.25 * static_cast<double>(it - kStandardWidths.begin());
}

struct TrainingOptions {
  std::size_t epochs = 60;
  double learning_rate = 0.1;
  // Fraction of the pool's training rows each model is fitted on.
  double fit_fraction = 0.8;
};

class TrainedModel {
 public:
  TrainedModel(Architecture arch, std::size_t dims, std::vector<double> params)
      : arch_(arch), dims_(dims), params_(std::move(params)) {
    if (params_.size() != param_count(arch, dims)) {
      fail(ErrorKind::kValidation, "parameter_count", "wrong number of parameters for " + to_string(arch));
    }
  }

  static std::size_t param_count(Architecture a, std::size_t d) {
    return a.linear() ? d + 1 : a.hidden_width * (d + 2) + 1;
  }

  // Logit of class 1.
  double logit(const Point& x) const {
    if (x.size() != dims_) fail(ErrorKind::kValidation, "dimension_mismatch", "input has wrong dimension");
    const double* p = params_.data();
    if (arch_.linear()) {
      double z = p[dims_];
      for (std::size_t k = 0; k < dims_; ++k) z += p[k] * x[k];
      return z;
    }
    const std::size_t h = arch_.hidden_width;
    const double* w1 = p;
    const double* b1 = p + h * dims_;
    const double* w2 = b1 + h;
    double z = w2[h];
    for (std::size_t u = 0; u < h; ++u) {
      double a = b1[u];
      for (std::size_t k = 0; k < dims_; ++k) a += w1[u * dims_ + k] * x[k];
      z += w2[u] * std::tanh(a);
    }
    return z;
  }

  Label predict(const Point& x) const { return logit(x) > 0 ? Label::kOne : Label::kZero; }

  double accuracy_on(const Dataset& ds) const {
    if (ds.rows() == 0) return 0.0;
    std::size_t hit = 0;
    for (std::size_t r = 0; r < ds.rows(); ++r) hit += predict(ds.features[r]) == ds.labels[r];
    return static_cast<double>(hit) / static_cast<double>(ds.rows());
  }

  Architecture architecture() const { return arch_; }
  std::size_t dims() const { return dims_; }
  const std::vector<double>& params() const { return params_; }
  std::vector<double>& mutable_params() { return params_; }

  double accuracy = 0.0;
  double simplicity = 0.0;

 private:
  Architecture arch_;
  std::size_t dims_;
  std::vector<double> params_;
};

inline TrainedModel train_model(const Dataset& fit, Architecture arch, const TrainingOptions& opt,
                                std::uint64_t seed) {
  const auto ones = std::count(fit.labels.begin(), fit.labels.end(), Label::kOne);
  if (fit.rows() == 0 || ones == 0 || static_cast<std::size_t>(ones) == fit.rows()) {
    fail(ErrorKind::kValidation, "constant_labels", "training data has a single class");
  }
  const std::size_t d = fit.dims();
  std::mt19937_64 rng(seed);
  std::vector<double> params(TrainedModel::param_count(arch, d), 0.0);
  const std::size_t h = arch.hidden_width;
  if (!arch.linear()) {
    // Glorot-uniform weights, zero biases.
    std::uniform_real_distribution<double> w1(-std::sqrt(6.0 / (d + h)), std::sqrt(6.0 / (d + h)));
    std::uniform_real_distribution<double> w2(-std::sqrt(6.0 / (h + 1)), std::sqrt(6.0 / (h + 1)));
    for (std::size_t k = 0; k < h * d; ++k) params[k] = w1(rng);
    for (std::size_t u = 0; u < h; ++u) params[h * d + h + u] = w2(rng);
  }
  TrainedModel model(arch, d, std::move(params));
  auto& p = model.mutable_params();

  std::vector<std::size_t> order(fit.rows());
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> act(h);
  for (std::size_t epoch = 0; epoch < opt.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    const double lr = opt.learning_rate / (1.0 + 0.05 * static_cast<double>(epoch));
    for (std::size_t r : order) {
      const Point& x = fit.features[r];
      const double y = fit.labels[r] == Label::kOne ? 1.0 : 0.0;
      const double g = 1.0 / (1.0 + std::exp(-model.logit(x))) - y;
      if (arch.linear()) {
        for (std::size_t k = 0; k < d; ++k) p[k] -= lr * g * x[k];
        p[d] -= lr * g;
        continue;
      }
      double* w1 = p.data();
      double* b1 = w1 + h * d;
      double* w2 = b1 + h;
      for (std::size_t u = 0; u < h; ++u) {
        double a = b1[u];
        for (std::size_t k = 0; k < d; ++k) a += w1[u * d + k] * x[k];
        act[u] = std::tanh(a);
      }
      for (std::size_t u = 0; u < h; ++u) {
        const double back = g * w2[u] * (1.0 - act[u] * act[u]);
        w2[u] -= lr * g * act[u];
        for (std::size_t k = 0; k < d; ++k) w1[u * d + k] -= lr * back * x[k];
        b1[u] -= lr * back;
      }
      w2[h] -= lr * g;
    }
  }
  model.simplicity = simplicity_of(arch);
  return model;
}

struct Pool {
  // The 80% the models are developed on; also the counterfactual search space.
  Dataset train;
  // The held-out 20%: model accuracies and ensembling test inputs.
  Dataset test;
  std::vector<TrainedModel> models;
};

struct PoolConfig {
  std::size_t pool_size = 50;
  std::vector<Architecture> architectures = {{4}, {6}, {8}, {12}, {16}};
  TrainingOptions training;
  std::uint64_t seed = 0;
};

// Model k uses architecture k mod |architectures|, its own initialisation
// seed and its own random subsample of the training part.
inline Pool train_pool(const Dataset& ds, const PoolConfig& cfg) {
  validate(ds);
  if (cfg.pool_size == 0) fail(ErrorKind::kUsage, "bad_config", "pool_size must be positive");
  if (cfg.architectures.empty()) fail(ErrorKind::kUsage, "bad_config", "no architectures given");
  Split outer = split(ds, 0.8, derive_seed(cfg.seed, 0xda7a));
  validate(outer.train);
  if (outer.test.rows() == 0) fail(ErrorKind::kValidation, "empty_dataset", "held-out split is empty");
  Pool pool{std::move(outer.train), std::move(outer.test), {}};
  for (std::size_t k = 0; k < cfg.pool_size; ++k) {
    const Architecture arch = cfg.architectures[k % cfg.architectures.size()];
    const Split inner = split(pool.train, cfg.training.fit_fraction, derive_seed(cfg.seed, 0x5b1, k));
    TrainedModel m = train_model(inner.train, arch, cfg.training, derive_seed(cfg.seed, 0x1a17, k));
    m.accuracy = m.accuracy_on(pool.test);
    pool.models.push_back(std::move(m));
  }
  return pool;
}

}  // namespace rae::lab

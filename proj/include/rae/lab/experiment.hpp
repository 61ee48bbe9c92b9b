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

// Desk-scale ensembling experiments: sample model sets from a trained pool,
// build one instance per test input, run every method variant and average
// the per-input metrics over inputs and then over repeated model sets.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "rae/ensemble.hpp"
#include "rae/error.hpp"
#include "rae/instance.hpp"
#include "rae/lab/counterfactual.hpp"
#include "rae/lab/dataset.hpp"
#include "rae/lab/model.hpp"
#include "rae/lab/parallel.hpp"
#include "rae/preferences.hpp"

namespace rae::lab {

struct Variant {
  std::string name;
  Method method = Method::kArgumentative;
  PropertyPreference preference;
};

// Naive ensembling offers no counterfactuals, so its row in the metric
// table is the augmented extension (same models, their own CEs).
inline std::vector<Variant> standard_variants() {
  return {
      {"S^n", Method::kAugmented, {}},
      {"S^v", Method::kRobust, {}},
      {"S^a", Method::kArgumentative, {}},
      {"S^a-A", Method::kArgumentative, {{"accuracy"}}},
      {"S^a-S", Method::kArgumentative, {{"simplicity"}}},
      {"S^a-AS", Method::kArgumentative, {{"accuracy", "simplicity"}}},
  };
}

enum class FailureExclusion {
  kAll,           // failed inputs are left out of every averaged metric
  kValidityOnly,  // only c_val, which is undefined without counterfactuals
};

struct DatasetSource {
  std::string path;  // CSV; empty selects the synthetic generator
  std::size_t rows = 1000;
  double noise = 0.2;
  std::size_t noise_features = 0;
};

struct ExperimentConfig {
  DatasetSource dataset;
  PoolConfig pool;
  std::vector<std::size_t> set_sizes = {10, 20, 30};
  std::size_t repeats = 5;
  std::vector<Variant> variants = standard_variants();
  Metric metric = Metric::kL2;
  std::size_t max_test_inputs = 500;
  FailureExclusion exclusion = FailureExclusion::kAll;
};

inline void validate(const ExperimentConfig& cfg) {
  auto bad = [](const std::string& msg) { fail(ErrorKind::kValidation, "bad_config", msg); };
  if (cfg.repeats == 0) bad("repeats must be at least 1");
  if (cfg.set_sizes.empty()) bad("set_sizes is empty");
  if (cfg.variants.empty()) bad("no variants given");
  if (cfg.pool.pool_size == 0) bad("pool_size must be positive");
  if (cfg.max_test_inputs == 0) bad("max_test_inputs must be positive");
  for (std::size_t s : cfg.set_sizes) {
    if (s == 0 || s > cfg.pool.pool_size) {
      bad("set size " + std::to_string(s) + " outside 1.." + std::to_string(cfg.pool.pool_size));
    }
    if (s > kMaxModels) {
      fail(ErrorKind::kCapacity, "too_many_models",
           "set size " + std::to_string(s) + " exceeds the cap of " + std::to_string(kMaxModels));
    }
  }
}

namespace detail {

inline const nlohmann::json& require(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) fail(ErrorKind::kValidation, "bad_config", std::string("missing key '") + key + "'");
  return j.at(key);
}

inline std::size_t count_field(const nlohmann::json& j, const char* key) {
  if (!j.is_number_unsigned()) {
    fail(ErrorKind::kValidation, "bad_config", std::string("'") + key + "' must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

inline double real_field(const nlohmann::json& j, const char* key) {
  if (!j.is_number()) fail(ErrorKind::kValidation, "bad_config", std::string("'") + key + "' must be a number");
  return j.get<double>();
}

inline std::string string_field(const nlohmann::json& j, const char* key) {
  if (!j.is_string()) fail(ErrorKind::kValidation, "bad_config", std::string("'") + key + "' must be a string");
  return j.get<std::string>();
}

inline PropertyPreference preference_from_json(const nlohmann::json& j) {
  PropertyPreference pp;
  if (!j.is_array()) fail(ErrorKind::kValidation, "bad_config", "'prefs' must be an array of groups");
  for (const auto& group : j) {
    if (group.is_string()) {
      pp.push_back({group.get<std::string>()});
      continue;
    }
    if (!group.is_array()) fail(ErrorKind::kValidation, "bad_config", "preference group must be a list");
    std::vector<std::string> g;
    for (const auto& p : group) g.push_back(string_field(p, "prefs"));
    pp.push_back(std::move(g));
  }
  return pp;
}

inline Variant variant_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    for (const auto& v : standard_variants()) {
      if (v.name == j.get<std::string>()) return v;
    }
    fail(ErrorKind::kValidation, "bad_config", "unknown variant '" + j.get<std::string>() + "'");
  }
  if (!j.is_object()) fail(ErrorKind::kValidation, "bad_config", "variant must be a name or an object");
  for (const auto& [key, _] : j.items()) {
    if (key != "name" && key != "method" && key != "prefs") {
      fail(ErrorKind::kValidation, "bad_config", "unknown variant key '" + key + "'");
    }
  }
  Variant v;
  v.name = string_field(require(j, "name"), "name");
  try {
    v.method = parse_method(string_field(require(j, "method"), "method"));
  } catch (const Error& e) {
    fail(ErrorKind::kValidation, "bad_config", e.what());
  }
  if (j.contains("prefs")) v.preference = preference_from_json(j.at("prefs"));
  return v;
}

}  // namespace detail

// Relative dataset paths resolve against `base_dir`.
inline ExperimentConfig config_from_json(const nlohmann::json& j, const std::string& base_dir = "") {
  using namespace detail;
  if (!j.is_object()) fail(ErrorKind::kValidation, "bad_config", "config must be a JSON object");
  static const std::vector<std::string> known = {
      "dataset",  "pool_size", "architectures",   "epochs",           "learning_rate", "fit_fraction",
      "set_sizes", "repeats",  "seed",            "variants",         "metric",
      "max_test_inputs",       "failure_exclusion"};
  for (const auto& [key, _] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      fail(ErrorKind::kValidation, "bad_config", "unknown config key '" + key + "'");
    }
  }
  ExperimentConfig cfg;
  if (j.contains("dataset")) {
    const auto& d = j.at("dataset");
    if (!d.is_object()) fail(ErrorKind::kValidation, "bad_config", "'dataset' must be an object");
    for (const auto& [key, _] : d.items()) {
      if (key != "path" && key != "synthetic" && key != "rows" && key != "noise" &&
          key != "noise_features") {
        fail(ErrorKind::kValidation, "bad_config", "unknown dataset key '" + key + "'");
      }
    }
    if (d.contains("path") == d.contains("synthetic")) {
      fail(ErrorKind::kValidation, "bad_config", "dataset needs exactly one of 'path' and 'synthetic'");
    }
    if (d.contains("path")) {
      std::filesystem::path p = string_field(d.at("path"), "path");
      if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
      cfg.dataset.path = p.string();
    } else if (string_field(d.at("synthetic"), "synthetic") != "two_moons") {
      fail(ErrorKind::kValidation, "bad_config", "the only synthetic dataset is 'two_moons'");
    }
    if (d.contains("rows")) cfg.dataset.rows = count_field(d.at("rows"), "rows");
    if (d.contains("noise")) cfg.dataset.noise = real_field(d.at("noise"), "noise");
    if (d.contains("noise_features")) {
      cfg.dataset.noise_features = count_field(d.at("noise_features"), "noise_features");
    }
  }
  if (j.contains("pool_size")) cfg.pool.pool_size = count_field(j.at("pool_size"), "pool_size");
  if (j.contains("architectures")) {
    cfg.pool.architectures.clear();
    for (const auto& a : j.at("architectures")) {
      try {
        const Architecture arch = parse_architecture(string_field(a, "architectures"));
        simplicity_of(arch);
        cfg.pool.architectures.push_back(arch);
      } catch (const Error& e) {
        fail(ErrorKind::kValidation, "bad_config", e.what());
      }
    }
  }
  if (j.contains("epochs")) cfg.pool.training.epochs = count_field(j.at("epochs"), "epochs");
  if (j.contains("learning_rate")) cfg.pool.training.learning_rate = real_field(j.at("learning_rate"), "learning_rate");
  if (j.contains("fit_fraction")) {
    cfg.pool.training.fit_fraction = real_field(j.at("fit_fraction"), "fit_fraction");
    if (!(cfg.pool.training.fit_fraction > 0 && cfg.pool.training.fit_fraction <= 1)) {
      fail(ErrorKind::kValidation, "bad_config", "fit_fraction must be in (0, 1]");
    }
  }
  if (j.contains("set_sizes")) {
    cfg.set_sizes.clear();
    if (!j.at("set_sizes").is_array()) fail(ErrorKind::kValidation, "bad_config", "'set_sizes' must be an array");
    for (const auto& s : j.at("set_sizes")) cfg.set_sizes.push_back(count_field(s, "set_sizes"));
  }
  if (j.contains("repeats")) cfg.repeats = count_field(j.at("repeats"), "repeats");
  if (j.contains("seed")) cfg.pool.seed = count_field(j.at("seed"), "seed");
  if (j.contains("variants")) {
    cfg.variants.clear();
    if (!j.at("variants").is_array()) fail(ErrorKind::kValidation, "bad_config", "'variants' must be an array");
    for (const auto& v : j.at("variants")) cfg.variants.push_back(variant_from_json(v));
  }
  if (j.contains("metric")) {
    try {
      cfg.metric = parse_metric(string_field(j.at("metric"), "metric"));
    } catch (const Error& e) {
      fail(ErrorKind::kValidation, "bad_config", e.what());
    }
  }
  if (j.contains("max_test_inputs")) cfg.max_test_inputs = count_field(j.at("max_test_inputs"), "max_test_inputs");
  if (j.contains("failure_exclusion")) {
    const std::string e = string_field(j.at("failure_exclusion"), "failure_exclusion");
    if (e == "all") {
      cfg.exclusion = FailureExclusion::kAll;
    } else if (e == "validity_only") {
      cfg.exclusion = FailureExclusion::kValidityOnly;
    } else {
      fail(ErrorKind::kValidation, "bad_config", "failure_exclusion must be 'all' or 'validity_only'");
    }
  }
  validate(cfg);
  return cfg;
}

inline Dataset load_dataset(const DatasetSource& src, std::uint64_t seed) {
  if (!src.path.empty()) return load_csv_file(src.path);
  return two_moons(src.rows, src.noise, derive_seed(seed, 0x300a5), src.noise_features);
}

// Mean and population standard deviation over repeats. NaN marks a
// metric that was undefined in every repeat.
struct Stat {
  double mean = std::numeric_limits<double>::quiet_NaN();
  double std = std::numeric_limits<double>::quiet_NaN();

  bool defined() const { return !std::isnan(mean); }
};

inline Stat summarize(const std::vector<double>& values) {
  std::vector<double> v;
  for (double x : values) {
    if (!std::isnan(x)) v.push_back(x);
  }
  Stat s;
  if (v.empty()) return s;
  double sum = 0;
  for (double x : v) sum += x;
  s.mean = sum / static_cast<double>(v.size());
  double sq = 0;
  for (double x : v) sq += (x - s.mean) * (x - s.mean);
  s.std = std::sqrt(sq / static_cast<double>(v.size()));
  return s;
}

struct MetricsRow {
  std::size_t set_size = 0;
  std::string method;
  // The average single-model accuracy row carries only `acc`.
  bool single_model = false;
  Stat acc, simp, size_m, size_c, c_val, fail, mv, multiple, same;
  // Inputs whose preference had a strictly most preferred model, and how
  // many of those ensembles contain it.
  std::size_t dominant_checked = 0;
  std::size_t dominant_hits = 0;
};

struct ExperimentResult {
  std::vector<MetricsRow> rows;
  std::size_t test_inputs = 0;
  // Inputs dropped because some model had no counterfactual, summed over
  // set sizes and repeats.
  std::size_t aborted_inputs = 0;
  std::vector<TrainedModel> pool;
};

namespace detail {

// Everything about one test input that does not depend on the model set.
struct InputTable {
  Label truth = Label::kZero;
  std::vector<Label> pred_x;                  // per pool model
  std::vector<std::optional<Point>> ce;       // per pool model
  std::vector<std::vector<Label>> pred_ce;    // [model][counterfactual owner]
};

inline InputTable tabulate(const Pool& pool, const Point& x, Label truth, Metric metric) {
  const std::size_t n = pool.models.size();
  InputTable t;
  t.truth = truth;
  t.pred_x.resize(n);
  t.ce.resize(n);
  t.pred_ce.assign(n, std::vector<Label>(n, Label::kZero));
  for (std::size_t k = 0; k < n; ++k) {
    t.pred_x[k] = pool.models[k].predict(x);
    try {
      t.ce[k] = nn_counterfactual(pool.models[k], pool.train, x, metric);
    } catch (const Error& e) {
      if (e.code() != "ce_generation_failed") throw;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (t.ce[k]) t.pred_ce[i][k] = pool.models[i].predict(*t.ce[k]);
    }
  }
  return t;
}

inline std::optional<RaeInstance> instance_for(const InputTable& t, const Pool& pool,
                                               const std::vector<std::size_t>& members) {
  const std::size_t m = members.size();
  std::vector<int> px(m);
  std::vector<std::vector<int>> pc(m, std::vector<int>(m));
  PropertyTable meta = {{"accuracy", {}}, {"simplicity", {}}};
  FeatureMatrix ces;
  for (std::size_t a = 0; a < m; ++a) {
    if (!t.ce[members[a]]) return std::nullopt;
    ces.push_back(*t.ce[members[a]]);
  }
  for (std::size_t a = 0; a < m; ++a) {
    const std::size_t i = members[a];
    px[a] = to_int(t.pred_x[i]);
    for (std::size_t b = 0; b < m; ++b) pc[a][b] = to_int(t.pred_ce[i][members[b]]);
    meta["accuracy"].push_back(pool.models[i].accuracy);
    meta["simplicity"].push_back(pool.models[i].simplicity);
  }
  return RaeInstance::create(px, pc, std::move(meta), std::move(ces));
}

struct InputOutcome {
  bool failed = false;
  bool correct = false;
  bool matches_naive = false;
  bool multiple = false;
  bool same = false;
  double simp = 0, size_m = 0, size_c = 0, c_val = 0;
  bool dominant_checked = false;
  bool dominant_hit = false;
};

inline std::optional<ModelId> dominant_model(const ModelPreference& mp) {
  for (ModelId i = 0; i < mp.size(); ++i) {
    bool all = true;
    for (ModelId j = 0; j < mp.size() && all; ++j) all = j == i || mp.strictly(i, j);
    if (all) return i;
  }
  return std::nullopt;
}

inline InputOutcome evaluate(const RaeInstance& inst, const Variant& v, Label truth, std::uint64_t seed) {
  const ModelPreference mp = lexicographic_preference(inst, v.preference);
  const TieBreakPolicy tb = v.method == Method::kArgumentative ? TieBreakPolicy{MatchNaiveThenSeeded{seed}}
                                                               : TieBreakPolicy{SeededRandom{seed}};
  const EnsembleResult r = ensemble(inst, v.method, mp, tb);
  const Solution& s = r.solutions.front();
  const double m = static_cast<double>(inst.size());
  InputOutcome o;
  o.failed = s.ces.empty();
  o.correct = s.label == truth;
  o.matches_naive = s.label == naive_ensemble(inst, SeededRandom{seed}).label;
  o.multiple = r.multiple;
  o.same = r.same_label;
  o.size_m = static_cast<double>(s.models.size()) / m;
  o.size_c = static_cast<double>(s.ces.size()) / m;
  const auto& simp = inst.meta().at("simplicity");
  for (ModelId i : s.models) o.simp += simp[i];
  if (!s.models.empty()) o.simp /= static_cast<double>(s.models.size());
  std::size_t valid = 0;
  for (ModelId i : s.models) {
    for (ModelId j : s.ces) valid += inst.valid(i, j);
  }
  const std::size_t pairs = s.models.size() * s.ces.size();
  o.c_val = pairs ? static_cast<double>(valid) / static_cast<double>(pairs) : 0.0;
  if (v.method == Method::kArgumentative) {
    if (const auto top = dominant_model(mp)) {
      o.dominant_checked = true;
      o.dominant_hit = std::find(s.models.begin(), s.models.end(), *top) != s.models.end();
    }
  }
  return o;
}

inline double ratio(double num, std::size_t den) {
  return den ? num / static_cast<double>(den) : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace detail

inline std::vector<std::size_t> sample_model_set(std::size_t pool_size, std::size_t size,
                                                 std::uint64_t seed) {
  std::vector<std::size_t> idx(pool_size);
  std::iota(idx.begin(), idx.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(size);
  std::sort(idx.begin(), idx.end());
  return idx;
}

// Runs against an already trained pool. Aborted inputs are reported on
// `log` when given.
inline ExperimentResult run_experiment(const ExperimentConfig& cfg, const Pool& pool,
                                       std::ostream* log = nullptr) {
  validate(cfg);
  if (pool.models.size() < cfg.pool.pool_size) {
    fail(ErrorKind::kValidation, "bad_config", "pool is smaller than pool_size");
  }
  const std::size_t threads = thread_count();
  const std::size_t n_inputs = std::min(cfg.max_test_inputs, pool.test.rows());
  std::vector<detail::InputTable> tables(n_inputs);
  parallel_for(n_inputs, threads, [&](std::size_t k) {
    tables[k] = detail::tabulate(pool, pool.test.features[k], pool.test.labels[k], cfg.metric);
  });

  ExperimentResult result;
  result.test_inputs = n_inputs;
  result.pool = pool.models;
  const std::size_t nv = cfg.variants.size();
  for (std::size_t size : cfg.set_sizes) {
    // [variant][metric][repeat]
    std::vector<std::vector<std::vector<double>>> per_repeat(nv, std::vector<std::vector<double>>(9));
    std::vector<double> single_acc;
    std::vector<std::size_t> dom_checked(nv, 0), dom_hits(nv, 0);
    for (std::size_t rep = 0; rep < cfg.repeats; ++rep) {
      const auto members =
          sample_model_set(cfg.pool.pool_size, size, derive_seed(cfg.pool.seed, 0x5e7, size, rep));
      double acc_sum = 0;
      for (std::size_t i : members) acc_sum += pool.models[i].accuracy;
      single_acc.push_back(acc_sum / static_cast<double>(size));

      // [input] -> outcome per variant, empty when the input is aborted
      std::vector<std::vector<detail::InputOutcome>> outcomes(n_inputs);
      parallel_for(n_inputs, threads, [&](std::size_t k) {
        const auto inst = detail::instance_for(tables[k], pool, members);
        if (!inst) return;
        const std::uint64_t seed = derive_seed(cfg.pool.seed, 0x71e, size, rep, k);
        for (const Variant& v : cfg.variants) {
          outcomes[k].push_back(detail::evaluate(*inst, v, tables[k].truth, seed));
        }
      });

      for (std::size_t k = 0; k < n_inputs; ++k) {
        if (outcomes[k].empty()) {
          ++result.aborted_inputs;
          if (log) {
            *log << "aborted input " << k << " (set size " << size << ", repeat " << rep
                 << "): counterfactual generation failed\n";
          }
        }
      }
      for (std::size_t vi = 0; vi < nv; ++vi) {
        std::size_t live = 0, kept = 0, failed = 0;
        double acc = 0, simp = 0, sm = 0, sc = 0, cv = 0, mv = 0, mult = 0, same = 0;
        for (std::size_t k = 0; k < n_inputs; ++k) {
          if (outcomes[k].empty()) continue;
          const auto& o = outcomes[k][vi];
          ++live;
          failed += o.failed;
          mult += o.multiple;
          same += o.same;
          dom_checked[vi] += o.dominant_checked;
          dom_hits[vi] += o.dominant_hit;
          if (o.failed && cfg.exclusion == FailureExclusion::kAll) continue;
          ++kept;
          acc += o.correct;
          simp += o.simp;
          sm += o.size_m;
          sc += o.size_c;
          mv += o.matches_naive;
          if (!o.failed) cv += o.c_val;
        }
        auto& pr = per_repeat[vi];
        pr[0].push_back(detail::ratio(acc, kept));
        pr[1].push_back(detail::ratio(simp, kept));
        pr[2].push_back(detail::ratio(sm, kept));
        pr[3].push_back(detail::ratio(sc, kept));
        pr[4].push_back(detail::ratio(cv, live - failed));
        pr[5].push_back(detail::ratio(static_cast<double>(failed), live));
        pr[6].push_back(detail::ratio(mv, kept));
        pr[7].push_back(detail::ratio(mult, live));
        pr[8].push_back(detail::ratio(same, live));
      }
    }
    MetricsRow single;
    single.set_size = size;
    single.method = "models";
    single.single_model = true;
    single.acc = summarize(single_acc);
    result.rows.push_back(single);
    for (std::size_t vi = 0; vi < nv; ++vi) {
      MetricsRow row;
      row.set_size = size;
      row.method = cfg.variants[vi].name;
      const auto& pr = per_repeat[vi];
      row.acc = summarize(pr[0]);
      row.simp = summarize(pr[1]);
      row.size_m = summarize(pr[2]);
      row.size_c = summarize(pr[3]);
      row.c_val = summarize(pr[4]);
      row.fail = summarize(pr[5]);
      row.mv = summarize(pr[6]);
      row.multiple = summarize(pr[7]);
      row.same = summarize(pr[8]);
      row.dominant_checked = dom_checked[vi];
      row.dominant_hits = dom_hits[vi];
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

inline Pool train_pool_for(const ExperimentConfig& cfg) {
  return train_pool(load_dataset(cfg.dataset, cfg.pool.seed), cfg.pool);
}

inline ExperimentResult run_experiment(const ExperimentConfig& cfg, std::ostream* log = nullptr) {
  return run_experiment(cfg, train_pool_for(cfg), log);
}

namespace detail {

inline std::string fixed(double v) {
  if (std::isnan(v)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

inline nlohmann::json stat_json(double v) {
  if (std::isnan(v)) return nullptr;
  return std::stod(fixed(v));
}

}  // namespace detail

inline void write_csv(std::ostream& out, const ExperimentResult& r) {
  out << "set_size,method,acc,simp,size_M,size_C,c_val,fail,mv,multiple,same\n";
  for (const auto& row : r.rows) {
    out << row.set_size << ',' << row.method << ',' << detail::fixed(row.acc.mean);
    const Stat* rest[] = {&row.simp, &row.size_m, &row.size_c, &row.c_val,
                          &row.fail, &row.mv,     &row.multiple, &row.same};
    for (const Stat* s : rest) out << ',' << (row.single_model ? "" : detail::fixed(s->mean));
    out << '\n';
  }
}

inline nlohmann::json to_json(const ExperimentResult& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json mean, sd;
    auto put = [&](const char* key, const Stat& s) {
      mean[key] = detail::stat_json(s.mean);
      sd[key] = detail::stat_json(s.std);
    };
    put("acc", row.acc);
    if (!row.single_model) {
      put("simp", row.simp);
      put("size_M", row.size_m);
      put("size_C", row.size_c);
      put("c_val", row.c_val);
      put("fail", row.fail);
      put("mv", row.mv);
      put("multiple", row.multiple);
      put("same", row.same);
    }
    nlohmann::json j = {{"set_size", row.set_size}, {"method", row.method}, {"mean", mean}, {"std", sd}};
    if (!row.single_model) {
      j["dominant"] = {{"checked", row.dominant_checked}, {"hits", row.dominant_hits}};
    }
    rows.push_back(std::move(j));
  }
  nlohmann::json pool = nlohmann::json::array();
  for (const auto& m : r.pool) {
    pool.push_back({{"architecture", to_string(m.architecture())},
                    {"accuracy", detail::stat_json(m.accuracy)},
                    {"simplicity", m.simplicity}});
  }
  return {{"rows", rows}, {"test_inputs", r.test_inputs}, {"aborted_inputs", r.aborted_inputs}, {"pool", pool}};
}

}  // namespace rae::lab

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

// Tabular binary-classification data: CSV ingestion, min-max scaling, a
// two-moons generator and seeded splitting.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rae/error.hpp"
#include "rae/instance.hpp"

namespace rae::lab {

using Point = std::vector<double>;

struct Dataset {
  std::string name;
  std::vector<Point> features;
  std::vector<Label> labels;

  std::size_t rows() const { return features.size(); }
  std::size_t dims() const { return features.empty() ? 0 : features.front().size(); }
};

// splitmix64 finaliser; used to derive independent seeds from a master seed.
inline std::uint64_t mix_seed(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

template <class... Tags>
std::uint64_t derive_seed(std::uint64_t base, Tags... tags) {
  std::uint64_t s = mix_seed(base);
  ((s = mix_seed(s ^ static_cast<std::uint64_t>(tags))), ...);
  return s;
}

inline void validate(const Dataset& ds) {
  if (ds.rows() == 0 || ds.dims() == 0) {
    fail(ErrorKind::kValidation, "empty_dataset", "dataset '" + ds.name + "' has no rows or no features");
  }
  if (ds.labels.size() != ds.rows()) {
    fail(ErrorKind::kValidation, "schema_violation", "label count differs from row count");
  }
  for (std::size_t r = 0; r < ds.rows(); ++r) {
    if (ds.features[r].size() != ds.dims()) {
      fail(ErrorKind::kValidation, "ragged_rows", "row " + std::to_string(r) + " has a different width");
    }
    for (double v : ds.features[r]) {
      if (!std::isfinite(v)) {
        fail(ErrorKind::kValidation, "missing_value", "row " + std::to_string(r) + " has a non-finite value");
      }
    }
  }
  const auto ones = std::count(ds.labels.begin(), ds.labels.end(), Label::kOne);
  if (ones == 0 || static_cast<std::size_t>(ones) == ds.rows()) {
    fail(ErrorKind::kValidation, "constant_labels", "dataset '" + ds.name + "' has a single class");
  }
}

// Rescales every column to [0, 1]; constant columns become 0.
inline void min_max_normalize(Dataset& ds) {
  for (std::size_t c = 0; c < ds.dims(); ++c) {
    double lo = ds.features[0][c], hi = lo;
    for (const auto& row : ds.features) {
      lo = std::min(lo, row[c]);
      hi = std::max(hi, row[c]);
    }
    for (auto& row : ds.features) row[c] = hi > lo ? (row[c] - lo) / (hi - lo) : 0.0;
  }
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace detail

// Header row first; the last column is the 0/1 target. Features are
// min-max normalised after loading.
inline Dataset load_csv(std::istream& in, std::string name = "csv") {
  Dataset ds;
  ds.name = std::move(name);
  std::string line;
  if (!std::getline(in, line)) fail(ErrorKind::kValidation, "empty_dataset", "missing header row");
  const std::size_t width = detail::split_csv_line(line).size();
  if (width < 2) fail(ErrorKind::kValidation, "schema_violation", "need at least one feature and a target");
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::trim(line).empty()) continue;
    const auto cells = detail::split_csv_line(line);
    const std::string where = "line " + std::to_string(lineno);
    if (cells.size() != width) fail(ErrorKind::kValidation, "ragged_rows", where + ": wrong number of columns");
    Point row;
    for (std::size_t c = 0; c + 1 < width; ++c) {
      const std::string cell = detail::trim(cells[c]);
      std::size_t used = 0;
      double v = 0;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (cell.empty() || used != cell.size() || !std::isfinite(v)) {
        fail(ErrorKind::kValidation, "missing_value", where + ": bad value '" + cell + "'");
      }
      row.push_back(v);
    }
    const std::string target = detail::trim(cells.back());
    if (target != "0" && target != "1") {
      fail(ErrorKind::kValidation, "non_binary_label", where + ": target must be 0 or 1");
    }
    ds.features.push_back(std::move(row));
    ds.labels.push_back(target == "1" ? Label::kOne : Label::kZero);
  }
  validate(ds);
  min_max_normalize(ds);
  return ds;
}

inline Dataset load_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kUsage, "unreadable_file", "cannot open " + path);
  return load_csv(in, path);
}

// Two interleaved half circles with Gaussian jitter, optionally padded with
// uninformative uniform columns, normalised.
inline Dataset two_moons(std::size_t n, double noise, std::uint64_t seed,
                         std::size_t noise_features = 0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  std::normal_distribution<double> jitter(0.0, noise);
  std::uniform_real_distribution<double> filler(0.0, 1.0);
  Dataset ds;
  ds.name = "two_moons";
  for (std::size_t k = 0; k < n; ++k) {
    const bool upper = k % 2 == 0;
    const double t = angle(rng);
    const double x = upper ? std::cos(t) : 1.0 - std::cos(t);
    const double y = upper ? std::sin(t) : 0.5 - std::sin(t);
    Point row = {x + jitter(rng), y + jitter(rng)};
    for (std::size_t k = 0; k < noise_features; ++k) row.push_back(filler(rng));
    ds.features.push_back(std::move(row));
    ds.labels.push_back(upper ? Label::kZero : Label::kOne);
  }
  validate(ds);
  min_max_normalize(ds);
  return ds;
}

inline Dataset subset(const Dataset& ds, const std::vector<std::size_t>& rows) {
  Dataset out;
  out.name = ds.name;
  for (std::size_t r : rows) {
    out.features.push_back(ds.features.at(r));
    out.labels.push_back(ds.labels.at(r));
  }
  return out;
}

struct Split {
  Dataset train;
  Dataset test;
};

// Seeded shuffle, then the first `train_fraction` of rows train.
inline Split split(const Dataset& ds, double train_fraction, std::uint64_t seed) {
  std::vector<std::size_t> order(ds.rows());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  const auto cut = static_cast<std::size_t>(std::llround(train_fraction * ds.rows()));
  return {subset(ds, {order.begin(), order.begin() + cut}), subset(ds, {order.begin() + cut, order.end()})};
}

}  // namespace rae::lab

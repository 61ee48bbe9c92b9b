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

#include "rae/instance.hpp"

#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "test_support.hpp"

namespace rae {
namespace {

std::string load_error(const std::string& text) {
  std::istringstream in(text);
  try {
    load_instance(in);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kValidation);
    return e.code();
  }
  return "";
}

constexpr const char* kExample = R"({
  "labels": [0, 1],
  "pred_x": [0, 0, 0, 1, 1],
  "pred_ce": [[1, 0, 1, 1, 1],
              [0, 1, 0, 1, 1],
              [1, 1, 1, 0, 1],
              [0, 0, 0, 0, 0],
              [0, 0, 0, 0, 0]],
  "model_meta": {"accuracy": [0.85, 0.87, 0.86, 0.86, 0.87]}
})";

TEST(LoadInstance, RunningExample) {
  std::istringstream in(kExample);
  const RaeInstance inst = load_instance(in);
  ASSERT_EQ(inst.size(), 5U);
  EXPECT_EQ(inst.pred_x(3), Label::kOne);
  EXPECT_FALSE(validity(inst, 1, 0));  // c1 invalid for M2
  EXPECT_FALSE(validity(inst, 0, 1));  // c2 invalid for M1
  EXPECT_FALSE(validity(inst, 1, 2));  // c3 invalid for M2
  EXPECT_TRUE(validity(inst, 0, 2));
  EXPECT_DOUBLE_EQ(inst.meta().at("accuracy")[1], 0.87);
}

TEST(LoadInstance, MinimalInstance) {
  std::istringstream in(R"({"labels":[0,1],"pred_x":[1],"pred_ce":[[0]]})");
  const RaeInstance inst = load_instance(in);
  EXPECT_EQ(inst.size(), 1U);
  EXPECT_TRUE(validity(inst, 0, 0));
}

TEST(LoadInstance, DistinctErrorCodes) {
  EXPECT_EQ(load_error(R"({"labels":[0,1],"pred_x":[0,1,0],
      "pred_ce":[[1,0,0],[0,0,0],[0,0,0]]})"),
            "diagonal_violation");
  EXPECT_EQ(load_error(R"({"labels":[0,1],"pred_x":[0,2],"pred_ce":[[1,0],[0,0]]})"),
            "non_binary_label");
  EXPECT_EQ(load_error(R"({"labels":[0,1,2],"pred_x":[0],"pred_ce":[[1]]})"),
            "non_binary_label");
  EXPECT_EQ(load_error(R"({"labels":[0,1],"pred_x":[0,1],"pred_ce":[[1,0]]})"),
            "non_square_matrix");
  EXPECT_EQ(load_error(R"({"labels":[0,1],"pred_x":[0,1],"pred_ce":[[1,0],[0]]})"),
            "non_square_matrix");
  EXPECT_EQ(load_error(R"({"labels":[0,1],"pred_x":[0],"pred_ce":[[1]],"extra":1})"),
            "schema_violation");
  EXPECT_EQ(load_error(R"({"labels":[0,1],"pred_ce":[[1]]})"), "schema_violation");
  EXPECT_EQ(load_error(R"({"labels":[0,1],"pred_x":[0],"pred_ce":[[1]],
      "model_meta":{"accuracy":[0.5,0.6]}})"),
            "schema_violation");
  EXPECT_EQ(load_error("{not json"), "schema_violation");
}

TEST(Validity, RangeChecked) {
  const RaeInstance inst = testing::example_instance();
  EXPECT_THROW(validity(inst, 5, 0), Error);
  EXPECT_THROW(validity(inst, 0, 9), Error);
}

TEST(Validity, DiagonalAndMatrixReadOnRandomInstances) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    const auto [inst, pref] = testing::random_problem(rng, 1 + t % 8);
    for (ModelId i = 0; i < inst.size(); ++i) {
      EXPECT_TRUE(validity(inst, i, i));
      for (ModelId j = 0; j < inst.size(); ++j) {
        EXPECT_EQ(validity(inst, i, j), inst.pred_ce(i, j) != inst.pred_x(i));
      }
    }
  }
}

TEST(InstanceJson, SerializeThenLoadIsIdentity) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 40; ++t) {
    auto [inst, pref] = testing::random_problem(rng, 1 + t % 8);
    PropertyTable meta;
    std::uniform_real_distribution<double> u(0, 1);
    for (ModelId i = 0; i < inst.size(); ++i) meta["accuracy"].push_back(u(rng));
    std::optional<FeatureMatrix> feats;
    if (t % 2 == 0) feats = FeatureMatrix(inst.size(), {u(rng), u(rng)});
    std::vector<int> px;
    std::vector<std::vector<int>> pc(inst.size());
    for (ModelId i = 0; i < inst.size(); ++i) {
      px.push_back(to_int(inst.pred_x(i)));
      for (ModelId j = 0; j < inst.size(); ++j) pc[i].push_back(to_int(inst.pred_ce(i, j)));
    }
    const RaeInstance full = RaeInstance::create(px, pc, meta, feats);
    std::istringstream in(to_json(full).dump());
    EXPECT_EQ(load_instance(in), full);
  }
}

TEST(SolutionJson, Shape) {
  Solution s;
  s.models = {3, 4};
  s.ces = {3, 4};
  s.label = Label::kOne;
  s.method = Method::kArgumentative;
  s.tiebreak = {7, 0, 1};
  EXPECT_EQ(to_json(s).dump(),
            R"({"ces":[3,4],"label":1,"method":"argumentative","models":[3,4],)"
            R"("tiebreak":{"chosen_index":0,"num_candidates":1,"seed":7}})");
}

}  // namespace
}  // namespace rae

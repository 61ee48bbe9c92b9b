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


#include "rae/properties.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "rae/ensemble.hpp"
#include "test_support.hpp"
#include "guarantee_suite.hpp"

namespace rae {
namespace {

using ::rae::testing::accuracy_then_simplicity;
using ::rae::testing::example_instance;

ModelPreference example_pref() {
  return lexicographic_preference(example_instance(), accuracy_then_simplicity());
}

TEST(MajorityLabel, CountsAndTies) {
  EXPECT_EQ(majority_label(example_instance()), (std::vector<Label>{Label::kZero}));
  const auto tie = RaeInstance::create({0, 1}, {{1, 1}, {0, 0}});
  EXPECT_EQ(majority_label(tie), (std::vector<Label>{Label::kZero, Label::kOne}));
  const auto ones = RaeInstance::create({1}, {{0}});
  EXPECT_EQ(majority_label(ones), (std::vector<Label>{Label::kOne}));
}

TEST(Report, AugmentedOnRunningExample) {
  const auto inst = example_instance();
  const auto r = check_all(inst, augmented_ensemble(inst, SeededRandom{0}));
  EXPECT_TRUE(r.non_emptiness);
  EXPECT_TRUE(r.non_triviality);
  EXPECT_TRUE(r.model_agreement);
  EXPECT_TRUE(r.majority_vote);
  EXPECT_FALSE(r.counterfactual_validity);
  EXPECT_TRUE(r.counterfactual_coherence);
  EXPECT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses.at("counterfactual_validity"), "c1 is invalid for M0");
}

TEST(Report, RobustOnRunningExample) {
  const auto inst = example_instance();
  const auto r = check_all(inst, robust_ensemble(inst, SeededRandom{0}));
  EXPECT_FALSE(r.non_emptiness);
  EXPECT_TRUE(r.counterfactual_validity);
  EXPECT_FALSE(r.counterfactual_coherence);
  EXPECT_EQ(r.witnesses.at("non_emptiness"), "no counterfactuals selected");
  EXPECT_EQ(r.witnesses.at("counterfactual_coherence"), "M0 selected without c0");
}

TEST(Report, ArgumentativeOnRunningExample) {
  const auto inst = example_instance();
  const auto r = check_all(inst, argumentative_ensemble(inst, example_pref(), MatchNaiveThenSeeded{0}));
  EXPECT_TRUE(r.non_emptiness);
  EXPECT_TRUE(r.non_triviality);
  EXPECT_TRUE(r.model_agreement);
  EXPECT_FALSE(r.majority_vote);
  EXPECT_TRUE(r.counterfactual_validity);
  EXPECT_TRUE(r.counterfactual_coherence);
  EXPECT_EQ(r.witnesses.at("majority_vote"), "label 0 has 3 votes against 2");
}

TEST(Report, HandBuiltViolations) {
  const auto inst = example_instance();
  Solution s;
  s.models = {0, 3};
  s.ces = {3};
  const auto r = check_all(inst, s);
  EXPECT_FALSE(r.model_agreement);
  EXPECT_FALSE(r.majority_vote);
  EXPECT_EQ(r.witnesses.at("model_agreement"), "M0 and M3 disagree on x");
  EXPECT_EQ(r.witnesses.at("majority_vote"), "model agreement is violated");
  EXPECT_EQ(r.witnesses.at("counterfactual_coherence"), "M0 selected without c0");

  Solution empty;
  const auto e = check_all(inst, empty);
  EXPECT_FALSE(e.non_emptiness);
  EXPECT_FALSE(e.non_triviality);
  EXPECT_TRUE(e.model_agreement);
  EXPECT_FALSE(e.majority_vote);
  EXPECT_TRUE(e.counterfactual_validity);
  EXPECT_TRUE(e.counterfactual_coherence);

  Solution bad;
  bad.models = {7};
  EXPECT_THROW(check_all(inst, bad), Error);
}

TEST(Report, WitnessesExactlyForFalseFlags) {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 300; ++round) {
    const auto [inst, mp] = testing::random_problem(rng, 1 + round % 6);
    for (Method method : {Method::kNaive, Method::kAugmented, Method::kRobust, Method::kArgumentative}) {
      for (const Solution& s : candidates(inst, method, mp)) {
        const auto r = check_all(inst, s);
        const auto f = testing::flags(r);
        for (int p = 0; p < testing::kNumProps; ++p) {
          EXPECT_EQ(r.witnesses.count(testing::kPropKeys[p]), f[p] ? 0u : 1u);
        }
      }
    }
  }
}

TEST(Report, CoherenceIgnoresOrder) {
  const auto inst = example_instance();
  Solution s;
  s.models = {2, 0, 1};
  s.ces = {1, 2, 0};
  EXPECT_TRUE(check_all(inst, s).counterfactual_coherence);
}

TEST(Report, NaiveAlwaysWinsTheVote) {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 300; ++round) {
    const auto [inst, mp] = testing::random_problem(rng, 1 + round % 8);
    for (const Solution& s : naive_candidates(inst)) EXPECT_TRUE(check_all(inst, s).majority_vote);
  }
}

TEST(Report, JsonCarriesFlagsAndWitnesses) {
  const auto inst = example_instance();
  const auto j = to_json(check_all(inst, robust_ensemble(inst, SeededRandom{0})));
  EXPECT_EQ(j.at("non_emptiness"), false);
  EXPECT_EQ(j.at("model_agreement"), true);
  EXPECT_EQ(j.at("witnesses").size(), 2u);
}

class Guarantees : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { tally_ = new testing::Tally(testing::run_guarantee_suite(1000, 97)); }
  static void TearDownTestSuite() { delete tally_; }
  static testing::Tally* tally_;
};

testing::Tally* Guarantees::tally_ = nullptr;

TEST_F(Guarantees, GuaranteePatternHolds) {
  for (std::size_t k = 0; k < 3; ++k) {
    for (int p = 0; p < testing::kNumProps; ++p) {
      const auto& cell = tally_->cells[k][p];
      const auto expect = testing::kTable[k][p];
      SCOPED_TRACE(std::string(to_string(testing::kMethods[k])) + " / " + testing::kPropNames[p]);
      ASSERT_GT(cell.checked, 0u);
      if (expect == testing::Expect::kAlways) {
        EXPECT_EQ(cell.violations, 0u) << cell.witness;
      } else {
        EXPECT_GT(cell.violations, 0u);
      }
    }
    EXPECT_GT(tally_->conditional_checked[k], 0u);
    EXPECT_EQ(tally_->conditional_violations[k], 0u);
  }
}

TEST_F(Guarantees, ExtensionStructureHolds) {
  EXPECT_EQ(tally_->structure_checked.size(), 6u);
  for (const auto& [name, n] : tally_->structure_checked) {
    SCOPED_TRACE(name);
    EXPECT_GT(n, 0u);
    EXPECT_EQ(tally_->structure_violations[name], 0u);
  }
}

TEST(Guarantee, ArgumentativeNonTrivialityConditionMatters) {
  // M0 and M1 agree but invalidate each other's counterfactuals, so no
  // ensemble with two models can be defended.
  const auto inst = RaeInstance::create({0, 0, 1}, {{1, 0, 1}, {0, 1, 1}, {0, 0, 0}});
  const ModelPreference mp({0, 0, 1});
  EXPECT_FALSE(testing::argumentative_nontriviality_condition(inst, mp));
  for (const auto& s : argumentative_candidates(inst, mp)) EXPECT_EQ(s.models.size(), 1u);
}

}  // namespace
}  // namespace rae

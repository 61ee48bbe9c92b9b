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

#include "rae/baf_io.hpp"

#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "test_support.hpp"

namespace rae::baf {
namespace {

std::string error_of(const std::string& text) {
  try {
    parse_baf(text);
  } catch (const Error& e) {
    return e.code() + ": " + e.what();
  }
  return "";
}

TEST(BafText, ParsesDirectivesAndComments) {
  const Baf b = parse_baf(
      "# running example fragment\n"
      "args 3\n"
      "att 0 1   # trailing comment\n"
      "\n"
      "  sup 1 2\n");
  EXPECT_EQ(b.n_args(), 3U);
  EXPECT_EQ(b.attacks(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(b.supports(), (std::vector<Edge>{{1, 2}}));
}

TEST(BafText, RejectsMalformedInputWithLineNumbers) {
  EXPECT_EQ(error_of("args 2\natt 0 1\natt 0 1\n"),
            "duplicate_edge: line 3: duplicate att edge");
  EXPECT_EQ(error_of("args 2\nsup 0 2\n"),
            "edge_out_of_range: line 2: index out of range for args 2");
  EXPECT_EQ(error_of("att 0 1\n"), "missing_args: line 1: 'args' must precede edges");
  EXPECT_EQ(error_of("args 2\natt 0 1\nsup 0 1\n"),
            "attack_and_support: line 3: pair is both an attack and a support");
  EXPECT_EQ(error_of("args 2\nfoo 1\n"), "bad_directive: line 2: unknown directive 'foo'");
  EXPECT_EQ(error_of("args 2\natt 0 -1\n").substr(0, 9), "bad_index");
  EXPECT_EQ(error_of("# nothing\n"), "missing_args: line 1: no 'args' directive");
}

TEST(BafText, OverCapIsCapacityError) {
  try {
    parse_baf("args 65\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCapacity);
  }
}

TEST(BafText, WriteThenParseIsIdentity) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 30; ++t) {
    const auto [b, ref] = testing::random_baf(rng, 1 + t % 15, 0.2, 0.2);
    std::ostringstream out;
    write_baf(out, b);
    const Baf back = parse_baf(out.str());
    EXPECT_EQ(back.n_args(), b.n_args());
    EXPECT_EQ(back.attacks(), b.attacks());
    EXPECT_EQ(back.supports(), b.supports());
  }
}

}  // namespace
}  // namespace rae::baf

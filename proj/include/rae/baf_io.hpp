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

// Line-oriented text format for frameworks:
//
//   # comment
//   args 3
//   att 0 1
//   sup 1 2
//
// Indices are 0-based. `args` must come first and appear exactly once.

#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rae/baf.hpp"
#include "rae/error.hpp"

namespace rae::baf {

namespace detail {

[[noreturn]] inline void parse_error(std::size_t line, const std::string& code,
                                     const std::string& what) {
  fail(ErrorKind::kValidation, code,
       "line " + std::to_string(line) + ": " + what);
}

inline std::size_t parse_index(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    parse_error(line, "bad_index", "expected a non-negative integer, got '" +
                                       tok + "'");
  }
  try {
    return static_cast<std::size_t>(std::stoull(tok));
  } catch (const std::exception&) {
    parse_error(line, "bad_index", "index '" + tok + "' is too large");
  }
}

}  // namespace detail

inline Baf parse_baf(std::istream& in) {
  std::optional<std::size_t> n_args;
  std::vector<Edge> attacks, supports;
  std::set<Edge> seen_att, seen_sup;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& dir = tok[0];
    if (dir == "args") {
      if (tok.size() != 2) {
        detail::parse_error(line_no, "bad_directive", "usage: args <n>");
      }
      if (n_args) detail::parse_error(line_no, "duplicate_args", "repeated 'args'");
      n_args = detail::parse_index(tok[1], line_no);
      if (*n_args > kMaxArgs) {
        fail(ErrorKind::kCapacity, "too_many_args",
             "line " + std::to_string(line_no) + ": " +
                 std::to_string(*n_args) + " arguments exceeds the cap of " +
                 std::to_string(kMaxArgs));
      }
      continue;
    }
    if (dir != "att" && dir != "sup") {
      detail::parse_error(line_no, "bad_directive",
                          "unknown directive '" + dir + "'");
    }
    if (tok.size() != 3) {
      detail::parse_error(line_no, "bad_directive", "usage: " + dir + " <i> <j>");
    }
    if (!n_args) {
      detail::parse_error(line_no, "missing_args", "'args' must precede edges");
    }
    const Edge e{detail::parse_index(tok[1], line_no),
                 detail::parse_index(tok[2], line_no)};
    if (e.first >= *n_args || e.second >= *n_args) {
      detail::parse_error(line_no, "edge_out_of_range",
                          "index out of range for args " +
                              std::to_string(*n_args));
    }
    auto& seen = dir == "att" ? seen_att : seen_sup;
    auto& other = dir == "att" ? seen_sup : seen_att;
    if (!seen.insert(e).second) {
      detail::parse_error(line_no, "duplicate_edge", "duplicate " + dir + " edge");
    }
    if (other.count(e) != 0) {
      detail::parse_error(line_no, "attack_and_support",
                          "pair is both an attack and a support");
    }
    (dir == "att" ? attacks : supports).push_back(e);
  }
  if (!n_args) detail::parse_error(line_no, "missing_args", "no 'args' directive");
  return Baf(*n_args, std::move(attacks), std::move(supports));
}

inline Baf parse_baf(const std::string& text) {
  std::istringstream in(text);
  return parse_baf(in);
}

inline void write_baf(std::ostream& out, const Baf& baf) {
  out << "args " << baf.n_args() << '\n';
  for (const auto& [a, b] : baf.attacks()) out << "att " << a << ' ' << b << '\n';
  for (const auto& [a, b] : baf.supports()) out << "sup " << a << ' ' << b << '\n';
}

}  // namespace rae::baf

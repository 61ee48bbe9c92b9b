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

// Reference semantics for bipolar frameworks, written directly from the
// definitions over explicit edge sets. Deliberately shares no code with the
// bitset engine in rae/baf.hpp.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <set>
#include <utility>
#include <vector>

namespace rae::oracle {

using Pair = std::pair<std::size_t, std::size_t>;
using Args = std::set<std::size_t>;

struct Framework {
  std::size_t n = 0;
  std::set<Pair> att;
  std::set<Pair> sup;
};

// Nodes reachable from `from` by a walk of one or more support edges.
inline Args support_walk(const Framework& f, std::size_t from) {
  Args seen;
  std::deque<std::size_t> queue{from};
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (const auto& [a, b] : f.sup) {
      if (a == u && seen.insert(b).second) queue.push_back(b);
    }
  }
  return seen;
}

inline bool direct(const Framework& f, std::size_t x, std::size_t y) {
  return f.att.count({x, y}) != 0;
}

inline bool indirect(const Framework& f, std::size_t x, std::size_t y) {
  for (const auto& [a, z] : f.att) {
    if (a == x && support_walk(f, z).count(y) != 0) return true;
  }
  return false;
}

inline bool supported(const Framework& f, std::size_t x, std::size_t y) {
  for (std::size_t w : support_walk(f, x)) {
    if (direct(f, w, y)) return true;
  }
  return false;
}

inline bool singleton_attacks(const Framework& f, std::size_t x, std::size_t y) {
  return direct(f, x, y) || indirect(f, x, y) || supported(f, x, y);
}

inline bool set_attacks(const Framework& f, const Args& x, std::size_t a) {
  for (std::size_t b : x) {
    if (singleton_attacks(f, b, a)) return true;
  }
  return false;
}

inline bool set_supports(const Framework& f, const Args& x, std::size_t a) {
  for (std::size_t b : x) {
    if (f.sup.count({b, a}) != 0) return true;
  }
  return false;
}

inline bool defends(const Framework& f, const Args& x, std::size_t a) {
  for (std::size_t b = 0; b < f.n; ++b) {
    if (!singleton_attacks(f, b, a)) continue;
    bool countered = false;
    for (std::size_t c : x) countered = countered || singleton_attacks(f, c, b);
    if (!countered) return false;
  }
  return true;
}

inline bool conflict_free(const Framework& f, const Args& x) {
  for (std::size_t a : x) {
    for (std::size_t b : x) {
      if (singleton_attacks(f, a, b)) return false;
    }
  }
  return true;
}

inline bool safe(const Framework& f, const Args& x) {
  for (std::size_t a = 0; a < f.n; ++a) {
    if (set_attacks(f, x, a) && (set_supports(f, x, a) || x.count(a) != 0)) return false;
  }
  return true;
}

inline bool closed_for_support(const Framework& f, const Args& x) {
  for (const auto& [a, b] : f.sup) {
    if ((x.count(a) != 0) != (x.count(b) != 0)) return false;
  }
  return true;
}

enum class Kind { kD, kS, kC };

inline bool admissible(const Framework& f, const Args& x, Kind k) {
  bool base = false;
  switch (k) {
    case Kind::kD: base = conflict_free(f, x); break;
    case Kind::kS: base = safe(f, x); break;
    case Kind::kC: base = conflict_free(f, x) && closed_for_support(f, x); break;
  }
  if (!base) return false;
  for (std::size_t a : x) {
    if (!defends(f, x, a)) return false;
  }
  return true;
}

inline Args from_mask(std::uint64_t mask) {
  Args out;
  for (std::size_t i = 0; i < 64; ++i) {
    if ((mask >> i) & 1U) out.insert(i);
  }
  return out;
}

// Inclusion-maximal admissible sets, sorted lexicographically.
inline std::set<std::vector<std::size_t>> preferred(const Framework& f, Kind k) {
  std::vector<Args> adm;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.n); ++mask) {
    Args x = from_mask(mask);
    if (admissible(f, x, k)) adm.push_back(std::move(x));
  }
  std::set<std::vector<std::size_t>> out;
  for (const Args& x : adm) {
    bool maximal = true;
    for (const Args& y : adm) {
      if (y.size() > x.size() && std::includes(y.begin(), y.end(), x.begin(), x.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.insert(std::vector<std::size_t>(x.begin(), x.end()));
  }
  return out;
}

}  // namespace rae::oracle

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

// Bipolar argumentation frameworks: arguments with direct attack and direct
// support relations, the derived indirect/supported attacks, and the
// conflict-free / safe / d-, s-, c-admissible / preferred semantics.
//
// Frameworks are limited to kMaxArgs arguments so that every extension fits
// in one 64-bit word. All queries are const and thread-safe.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rae/error.hpp"

namespace rae::baf {

using ArgId = std::size_t;
using Edge = std::pair<ArgId, ArgId>;

inline constexpr std::size_t kMaxArgs = 64;
inline constexpr std::size_t kBruteForceMaxArgs = 20;

// A set of arguments (an extension), stored as a bitmask.
class ArgSet {
 public:
  constexpr ArgSet() = default;
  ArgSet(std::initializer_list<ArgId> ids) {
    for (ArgId id : ids) insert(id);
  }
  explicit ArgSet(const std::vector<ArgId>& ids) {
    for (ArgId id : ids) insert(id);
  }

  static constexpr ArgSet from_bits(std::uint64_t bits) {
    ArgSet s;
    s.bits_ = bits;
    return s;
  }
  // {0, ..., n-1}
  static constexpr ArgSet first_n(std::size_t n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(ArgId id) const {
    return id < kMaxArgs && ((bits_ >> id) & 1U) != 0;
  }
  void insert(ArgId id) {
    if (id >= kMaxArgs) {
      fail(ErrorKind::kUsage, "arg_out_of_range",
           "argument id " + std::to_string(id) + " exceeds the " +
               std::to_string(kMaxArgs) + "-argument cap");
    }
    bits_ |= std::uint64_t{1} << id;
  }
  constexpr void erase(ArgId id) {
    if (id < kMaxArgs) bits_ &= ~(std::uint64_t{1} << id);
  }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool intersects(ArgSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool is_subset_of(ArgSet o) const {
    return (bits_ & ~o.bits_) == 0;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      f(static_cast<ArgId>(std::countr_zero(b)));
    }
  }
  std::vector<ArgId> members() const {
    std::vector<ArgId> out;
    out.reserve(size());
    for_each([&](ArgId id) { out.push_back(id); });
    return out;
  }

  constexpr ArgSet operator|(ArgSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr ArgSet operator&(ArgSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr ArgSet operator-(ArgSet o) const { return from_bits(bits_ & ~o.bits_); }
  ArgSet& operator|=(ArgSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  friend constexpr bool operator==(ArgSet a, ArgSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

using Extension = ArgSet;

// Lexicographic order on sorted member lists; the canonical output order of
// every enumeration routine.
inline bool lex_less(ArgSet a, ArgSet b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(),
                                      mb.end());
}

enum class Semantics {
  kConflictFree,
  kSafe,
  kDAdmissible,
  kSAdmissible,
  kCAdmissible,
  kDPreferred,
  kSPreferred,
  kCPreferred,
};

inline std::string_view to_string(Semantics s) {
  switch (s) {
    case Semantics::kConflictFree: return "conflict-free";
    case Semantics::kSafe: return "safe";
    case Semantics::kDAdmissible: return "d-admissible";
    case Semantics::kSAdmissible: return "s-admissible";
    case Semantics::kCAdmissible: return "c-admissible";
    case Semantics::kDPreferred: return "d-preferred";
    case Semantics::kSPreferred: return "s-preferred";
    case Semantics::kCPreferred: return "c-preferred";
  }
  return "?";
}

inline Semantics parse_semantics(std::string_view name) {
  for (Semantics s :
       {Semantics::kConflictFree, Semantics::kSafe, Semantics::kDAdmissible,
        Semantics::kSAdmissible, Semantics::kCAdmissible,
        Semantics::kDPreferred, Semantics::kSPreferred,
        Semantics::kCPreferred}) {
    if (to_string(s) == name) return s;
  }
  fail(ErrorKind::kUsage, "unknown_semantics",
       "unknown semantics '" + std::string(name) + "'");
}

// The admissibility notion underlying a preferred semantics.
inline Semantics admissible_kind_of(Semantics preferred) {
  switch (preferred) {
    case Semantics::kDPreferred: return Semantics::kDAdmissible;
    case Semantics::kSPreferred: return Semantics::kSAdmissible;
    case Semantics::kCPreferred: return Semantics::kCAdmissible;
    default: break;
  }
  fail(ErrorKind::kUsage, "wrong_semantics_kind",
       std::string(to_string(preferred)) + " is not a preferred semantics");
}

// Immutable bipolar argumentation framework. The constructor validates the
// edge lists and precomputes the singleton set-attack relation
// (direct, indirect and supported attacks) by support reachability.
class Baf {
 public:
  Baf() = default;

  Baf(std::size_t n_args, std::vector<Edge> attacks, std::vector<Edge> supports)
      : n_(n_args), attacks_(std::move(attacks)), supports_(std::move(supports)) {
    if (n_ > kMaxArgs) {
      fail(ErrorKind::kCapacity, "too_many_args",
           "framework has " + std::to_string(n_) +
               " arguments; the hard cap is " + std::to_string(kMaxArgs));
    }
    att_out_.assign(n_, {});
    att_in_.assign(n_, {});
    sup_out_.assign(n_, {});
    sup_in_.assign(n_, {});
    add_edges(attacks_, att_out_, att_in_, "attack");
    add_edges(supports_, sup_out_, sup_in_, "support");
    for (const auto& [a, b] : attacks_) {
      if (sup_out_[a].contains(b)) {
        fail(ErrorKind::kValidation, "attack_and_support",
             "pair (" + std::to_string(a) + "," + std::to_string(b) +
                 ") is both an attack and a support");
      }
    }
    std::sort(attacks_.begin(), attacks_.end());
    std::sort(supports_.begin(), supports_.end());
    compute_closure();
  }

  std::size_t n_args() const { return n_; }
  ArgSet all() const { return ArgSet::first_n(n_); }
  const std::vector<Edge>& attacks() const { return attacks_; }
  const std::vector<Edge>& supports() const { return supports_; }

  void check_arg(ArgId a) const {
    if (a >= n_) {
      fail(ErrorKind::kUsage, "arg_out_of_range",
           "argument " + std::to_string(a) + " out of range (n_args=" +
               std::to_string(n_) + ")");
    }
  }
  void check_set(ArgSet x) const {
    if (!x.is_subset_of(all())) {
      fail(ErrorKind::kUsage, "arg_out_of_range",
           "extension contains arguments outside 0.." +
               std::to_string(n_ == 0 ? 0 : n_ - 1));
    }
  }

  // Raw adjacency (unchecked).
  ArgSet attackers_of(ArgId a) const { return att_in_[a]; }
  ArgSet attacked_by(ArgId a) const { return att_out_[a]; }
  ArgSet supporters_of(ArgId a) const { return sup_in_[a]; }
  ArgSet supported_by(ArgId a) const { return sup_out_[a]; }
  // Arguments reachable from `a` by one or more support edges.
  ArgSet support_reach(ArgId a) const { return sup_reach_[a]; }
  ArgSet indirect_targets(ArgId a) const { return indirect_[a]; }
  ArgSet supported_targets(ArgId a) const { return supported_[a]; }
  // Everything {a} set-attacks, and everything whose singleton set-attacks a.
  ArgSet set_attack_targets(ArgId a) const { return targets_[a]; }
  ArgSet set_attackers(ArgId a) const { return set_attackers_[a]; }

  ArgSet targets_of(ArgSet x) const {
    ArgSet out;
    x.for_each([&](ArgId a) { out |= targets_[a]; });
    return out;
  }
  ArgSet supportees_of(ArgSet x) const {
    ArgSet out;
    x.for_each([&](ArgId a) { out |= sup_out_[a]; });
    return out;
  }

 private:
  void add_edges(const std::vector<Edge>& edges, std::vector<ArgSet>& out,
                 std::vector<ArgSet>& in, const char* what) {
    for (const auto& [a, b] : edges) {
      if (a >= n_ || b >= n_) {
        fail(ErrorKind::kValidation, "edge_out_of_range",
             std::string(what) + " (" + std::to_string(a) + "," +
                 std::to_string(b) + ") references an argument >= " +
                 std::to_string(n_));
      }
      if (out[a].contains(b)) {
        fail(ErrorKind::kValidation, "duplicate_edge",
             std::string("duplicate ") + what + " (" + std::to_string(a) +
                 "," + std::to_string(b) + ")");
      }
      out[a].insert(b);
      in[b].insert(a);
    }
  }

  void compute_closure() {
    // Transitive closure of the support relation (paths of length >= 1).
    sup_reach_ = sup_out_;
    for (bool changed = true; changed;) {
      changed = false;
      for (ArgId a = 0; a < n_; ++a) {
        ArgSet next = sup_reach_[a];
        sup_reach_[a].for_each([&](ArgId b) { next |= sup_reach_[b]; });
        if (!(next == sup_reach_[a])) {
          sup_reach_[a] = next;
          changed = true;
        }
      }
    }
    indirect_.assign(n_, {});
    supported_.assign(n_, {});
    targets_.assign(n_, {});
    set_attackers_.assign(n_, {});
    for (ArgId a = 0; a < n_; ++a) {
      // attack then supports
      att_out_[a].for_each([&](ArgId z) { indirect_[a] |= sup_reach_[z]; });
      // supports then attack
      sup_reach_[a].for_each([&](ArgId w) { supported_[a] |= att_out_[w]; });
      targets_[a] = att_out_[a] | indirect_[a] | supported_[a];
    }
    for (ArgId a = 0; a < n_; ++a) {
      targets_[a].for_each([&](ArgId b) { set_attackers_[b].insert(a); });
    }
  }

  std::size_t n_ = 0;
  std::vector<Edge> attacks_;
  std::vector<Edge> supports_;
  std::vector<ArgSet> att_out_, att_in_, sup_out_, sup_in_;
  std::vector<ArgSet> sup_reach_, indirect_, supported_;
  std::vector<ArgSet> targets_, set_attackers_;
};

inline ArgSet direct_attackers(const Baf& baf, ArgId a) {
  baf.check_arg(a);
  return baf.attackers_of(a);
}

inline ArgSet direct_supporters(const Baf& baf, ArgId a) {
  baf.check_arg(a);
  return baf.supporters_of(a);
}

// An attack edge followed by one or more support edges.
inline bool indirect_attack_exists(const Baf& baf, ArgId x, ArgId y) {
  baf.check_arg(x);
  baf.check_arg(y);
  return baf.indirect_targets(x).contains(y);
}

// One or more support edges followed by an attack edge.
inline bool supported_attack_exists(const Baf& baf, ArgId x, ArgId y) {
  baf.check_arg(x);
  baf.check_arg(y);
  return baf.supported_targets(x).contains(y);
}

inline bool set_attacks(const Baf& baf, ArgSet x, ArgId a) {
  baf.check_set(x);
  baf.check_arg(a);
  return baf.set_attackers(a).intersects(x);
}

// Direct supports only; support chains are not followed.
inline bool set_supports(const Baf& baf, ArgSet x, ArgId a) {
  baf.check_set(x);
  baf.check_arg(a);
  return baf.supporters_of(a).intersects(x);
}

inline bool defends(const Baf& baf, ArgSet x, ArgId a) {
  baf.check_set(x);
  baf.check_arg(a);
  return baf.set_attackers(a).is_subset_of(baf.targets_of(x));
}

inline bool is_conflict_free(const Baf& baf, ArgSet x) {
  baf.check_set(x);
  return !baf.targets_of(x).intersects(x);
}

inline bool is_safe(const Baf& baf, ArgSet x) {
  baf.check_set(x);
  return !baf.targets_of(x).intersects(x | baf.supportees_of(x));
}

// Closure for the support relation, read in both directions: every direct
// supporter and every direct supportee of a member is itself a member. For
// frameworks whose supports are all reciprocal this coincides with forward
// closure.
inline bool is_closed_for_support(const Baf& baf, ArgSet x) {
  baf.check_set(x);
  bool closed = true;
  x.for_each([&](ArgId a) {
    if (!(baf.supported_by(a) | baf.supporters_of(a)).is_subset_of(x)) {
      closed = false;
    }
  });
  return closed;
}

inline bool defends_all(const Baf& baf, ArgSet x) {
  ArgSet need;
  x.for_each([&](ArgId a) { need |= baf.set_attackers(a); });
  return need.is_subset_of(baf.targets_of(x));
}

inline bool is_admissible(const Baf& baf, ArgSet x, Semantics kind) {
  baf.check_set(x);
  switch (kind) {
    case Semantics::kDAdmissible:
      return is_conflict_free(baf, x) && defends_all(baf, x);
    case Semantics::kSAdmissible:
      return is_safe(baf, x) && defends_all(baf, x);
    case Semantics::kCAdmissible:
      return is_conflict_free(baf, x) && is_closed_for_support(baf, x) &&
             defends_all(baf, x);
    default:
      break;
  }
  fail(ErrorKind::kUsage, "wrong_semantics_kind",
       std::string(to_string(kind)) + " is not an admissibility semantics");
}

// Membership test for any of the eight semantics. The preferred ones are
// answered by checking admissibility plus the absence of an admissible
// strict superset (via enumeration), so they are comparatively expensive.
inline bool satisfies(const Baf& baf, ArgSet x, Semantics s);

struct EnumerateOptions {
  std::size_t max_args = kMaxArgs;
};

namespace detail {

// Connected components of the undirected support graph.
inline std::vector<ArgSet> support_components(const Baf& baf) {
  std::vector<ArgSet> comps;
  ArgSet seen;
  for (ArgId a = 0; a < baf.n_args(); ++a) {
    if (seen.contains(a)) continue;
    ArgSet comp{a};
    for (ArgSet frontier = comp; !frontier.empty();) {
      ArgSet next;
      frontier.for_each([&](ArgId b) {
        next |= baf.supported_by(b) | baf.supporters_of(b);
      });
      frontier = next - comp;
      comp |= next;
    }
    seen |= comp;
    comps.push_back(comp);
  }
  return comps;
}

inline std::vector<ArgSet> singleton_units(const Baf& baf) {
  std::vector<ArgSet> units;
  for (ArgId a = 0; a < baf.n_args(); ++a) units.push_back(ArgSet{a});
  return units;
}

enum class SearchMode { kAllMaximal, kMaxCardinality };

// Branch and bound over unions of `units` (a partition of some arguments).
// Each node fixes include/exclude for one unit. Pruning:
//   * the included set must stay conflict-free (safe, for s-admissibility),
//     and units incompatible with it are excluded eagerly;
//   * every set-attacker of an included argument must still be
//     counter-attackable by some argument that is not excluded;
//   * kAllMaximal: subtrees whose reachable superset is covered by an already
//     recorded extension are skipped; kMaxCardinality: subtrees that cannot
//     reach the best cardinality found are skipped.
class UnitSearch {
 public:
  UnitSearch(const Baf& baf, Semantics admissible_kind,
             std::vector<ArgSet> units, SearchMode mode)
      : baf_(baf),
        kind_(admissible_kind),
        units_(std::move(units)),
        mode_(mode) {}

  std::vector<ArgSet> run() {
    found_.clear();
    best_ = 0;
    ArgSet avail;
    for (ArgSet u : units_) avail |= u;
    dfs(0, ArgSet{}, avail, ArgSet{}, ArgSet{});
    std::sort(found_.begin(), found_.end(), lex_less);
    return found_;
  }

 private:
  bool compatible(ArgSet in, ArgSet targets, ArgSet supportees) const {
    if (kind_ == Semantics::kSAdmissible) {
      return !targets.intersects(in | supportees);
    }
    return !targets.intersects(in);
  }

  bool defensible(ArgSet in, ArgSet avail) const {
    ArgSet need;
    in.for_each([&](ArgId a) { need |= baf_.set_attackers(a); });
    bool ok = true;
    need.for_each([&](ArgId b) {
      if (ok && !baf_.set_attackers(b).intersects(avail)) ok = false;
    });
    return ok;
  }

  void record(ArgSet x) {
    if (mode_ == SearchMode::kMaxCardinality) {
      if (x.size() > best_) {
        best_ = x.size();
        found_.clear();
      }
      if (x.size() == best_) found_.push_back(x);
      return;
    }
    for (ArgSet f : found_) {
      if (x.is_subset_of(f)) return;
    }
    std::erase_if(found_, [&](ArgSet f) { return f.is_subset_of(x); });
    found_.push_back(x);
  }

  void dfs(std::size_t k, ArgSet in, ArgSet avail, ArgSet targets,
           ArgSet supportees) {
    if (!defensible(in, avail)) return;
    if (mode_ == SearchMode::kMaxCardinality) {
      if (avail.size() < best_) return;
    } else {
      for (ArgSet f : found_) {
        if (avail.is_subset_of(f)) return;
      }
    }
    while (k < units_.size() && !units_[k].is_subset_of(avail)) ++k;
    if (k == units_.size()) {
      if (targets_cover_attackers(in, targets) && closure_ok(in)) record(in);
      return;
    }
    const ArgSet unit = units_[k];
    const ArgSet in2 = in | unit;
    const ArgSet tg2 = targets | baf_.targets_of(unit);
    const ArgSet sp2 = supportees | baf_.supportees_of(unit);
    if (compatible(in2, tg2, sp2)) {
      ArgSet avail2 = avail;
      for (std::size_t j = k + 1; j < units_.size(); ++j) {
        const ArgSet v = units_[j];
        if (!v.is_subset_of(avail2)) continue;
        if (!compatible(in2 | v, tg2 | baf_.targets_of(v),
                        sp2 | baf_.supportees_of(v))) {
          avail2 = avail2 - v;
        }
      }
      dfs(k + 1, in2, avail2, tg2, sp2);
    }
    dfs(k + 1, in, avail - unit, targets, supportees);
  }

  bool targets_cover_attackers(ArgSet in, ArgSet targets) const {
    ArgSet need;
    in.for_each([&](ArgId a) { need |= baf_.set_attackers(a); });
    return need.is_subset_of(targets);
  }

  bool closure_ok(ArgSet in) const {
    return kind_ != Semantics::kCAdmissible || is_closed_for_support(baf_, in);
  }

  const Baf& baf_;
  Semantics kind_;
  std::vector<ArgSet> units_;
  SearchMode mode_;
  std::vector<ArgSet> found_;
  std::size_t best_ = 0;
};

inline void check_capacity(const Baf& baf, std::size_t cap, const char* who) {
  if (baf.n_args() > cap) {
    fail(ErrorKind::kCapacity, "too_many_args",
         std::string(who) + ": framework has " + std::to_string(baf.n_args()) +
             " arguments, above the cap of " + std::to_string(cap));
  }
}

inline std::vector<ArgSet> default_units(const Baf& baf, Semantics kind) {
  // c-admissible sets are unions of support components.
  return kind == Semantics::kCAdmissible ? support_components(baf)
                                         : singleton_units(baf);
}

}  // namespace detail

// All preferred extensions of the given kind, in lexicographic order.
inline std::vector<Extension> enumerate_preferred(
    const Baf& baf, Semantics kind, const EnumerateOptions& opts = {}) {
  const Semantics adm = admissible_kind_of(kind);
  detail::check_capacity(baf, opts.max_args, "enumerate_preferred");
  return detail::UnitSearch(baf, adm, detail::default_units(baf, adm),
                            detail::SearchMode::kAllMaximal)
      .run();
}

// The preferred extensions of maximum cardinality.
inline std::vector<Extension> largest_preferred(
    const Baf& baf, Semantics kind, const EnumerateOptions& opts = {}) {
  const Semantics adm = admissible_kind_of(kind);
  detail::check_capacity(baf, opts.max_args, "largest_preferred");
  return detail::UnitSearch(baf, adm, detail::default_units(baf, adm),
                            detail::SearchMode::kMaxCardinality)
      .run();
}

// Preferred extensions restricted to unions of the given units. Equals
// enumerate_preferred whenever every preferred extension is such a union.
inline std::vector<Extension> enumerate_preferred_over_units(
    const Baf& baf, Semantics kind, std::vector<ArgSet> units,
    bool largest_only) {
  const Semantics adm = admissible_kind_of(kind);
  ArgSet covered;
  for (ArgSet u : units) {
    baf.check_set(u);
    if (u.intersects(covered)) {
      fail(ErrorKind::kUsage, "overlapping_units",
           "search units must be pairwise disjoint");
    }
    covered |= u;
  }
  return detail::UnitSearch(baf, adm, std::move(units),
                            largest_only ? detail::SearchMode::kMaxCardinality
                                         : detail::SearchMode::kAllMaximal)
      .run();
}

// Reference implementation: every subset is tested for admissibility and the
// inclusion-maximal ones are kept.
inline std::vector<Extension> brute_force_preferred(const Baf& baf,
                                                    Semantics kind) {
  const Semantics adm = admissible_kind_of(kind);
  detail::check_capacity(baf, kBruteForceMaxArgs, "brute_force_preferred");
  std::vector<ArgSet> admissible;
  const std::uint64_t limit = std::uint64_t{1} << baf.n_args();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const ArgSet x = ArgSet::from_bits(bits);
    if (is_admissible(baf, x, adm)) admissible.push_back(x);
  }
  std::stable_sort(admissible.begin(), admissible.end(),
                   [](ArgSet a, ArgSet b) { return a.size() > b.size(); });
  std::vector<ArgSet> maximal;
  for (ArgSet x : admissible) {
    const bool covered = std::any_of(maximal.begin(), maximal.end(),
                                     [&](ArgSet m) { return x.is_subset_of(m); });
    if (!covered) maximal.push_back(x);
  }
  std::sort(maximal.begin(), maximal.end(), lex_less);
  return maximal;
}

inline bool satisfies(const Baf& baf, ArgSet x, Semantics s) {
  baf.check_set(x);
  switch (s) {
    case Semantics::kConflictFree: return is_conflict_free(baf, x);
    case Semantics::kSafe: return is_safe(baf, x);
    case Semantics::kDAdmissible:
    case Semantics::kSAdmissible:
    case Semantics::kCAdmissible: return is_admissible(baf, x, s);
    case Semantics::kDPreferred:
    case Semantics::kSPreferred:
    case Semantics::kCPreferred: {
      const auto exts = enumerate_preferred(baf, s);
      return std::find(exts.begin(), exts.end(), x) != exts.end();
    }
  }
  return false;
}

}  // namespace rae::baf

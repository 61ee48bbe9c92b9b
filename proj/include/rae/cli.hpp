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

// Command-line front end. run_cli() takes argv-style arguments and explicit
// streams so it can be driven in-process; tools/rae.cpp wraps it.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rae/baf.hpp"
#include "rae/baf_io.hpp"
#include "rae/ensemble.hpp"
#include "rae/error.hpp"
#include "rae/instance.hpp"
#include "rae/lab/experiment.hpp"
#include "rae/preferences.hpp"
#include "rae/properties.hpp"

namespace rae::cli {

// "accuracy>simplicity" ranks accuracy first; "accuracy=simplicity" ties
// them. The empty string means no preference.
inline PropertyPreference parse_preference(const std::string& text) {
  PropertyPreference pp;
  if (text.empty()) return pp;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, '>')) {
    std::vector<std::string> names;
    std::stringstream members(group);
    std::string name;
    while (std::getline(members, name, '=')) {
      if (name.empty()) fail(ErrorKind::kUsage, "bad_prefs", "empty property name in '" + text + "'");
      names.push_back(name);
    }
    if (names.empty()) fail(ErrorKind::kUsage, "bad_prefs", "empty preference group in '" + text + "'");
    pp.push_back(std::move(names));
  }
  if (text.back() == '>' || text.back() == '=') {
    fail(ErrorKind::kUsage, "bad_prefs", "dangling separator in '" + text + "'");
  }
  return pp;
}

namespace detail {

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kUsage, "unreadable_file", "cannot open " + path);
  return in;
}

inline std::string join_ids(const std::vector<std::size_t>& ids) {
  std::string s;
  for (std::size_t k = 0; k < ids.size(); ++k) s += (k ? " " : "") + std::to_string(ids[k]);
  return s;
}

inline RaeInstance read_instance(const std::string& path) {
  auto in = open_input(path);
  return load_instance(in);
}

// All sets satisfying a non-maximal semantics, by exhaustive scan.
inline std::vector<baf::Extension> all_satisfying(const baf::Baf& b, baf::Semantics s) {
  if (b.n_args() > baf::kBruteForceMaxArgs) {
    fail(ErrorKind::kCapacity, "too_many_args",
         "listing every " + std::string(baf::to_string(s)) + " set is limited to " +
             std::to_string(baf::kBruteForceMaxArgs) + " arguments");
  }
  std::vector<baf::Extension> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << b.n_args()); ++bits) {
    const auto x = baf::ArgSet::from_bits(bits);
    if (baf::satisfies(b, x, s)) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), baf::lex_less);
  return out;
}

inline bool is_preferred(baf::Semantics s) {
  return s == baf::Semantics::kDPreferred || s == baf::Semantics::kSPreferred ||
         s == baf::Semantics::kCPreferred;
}


inline TieBreakPolicy policy_for(Method method, const std::string& name, std::uint64_t seed, bool all) {
  if (all) return ReportAll{};
  if (name == "seeded") return SeededRandom{seed};
  if (name == "match-naive") return MatchNaiveThenSeeded{seed};
  if (!name.empty()) fail(ErrorKind::kUsage, "bad_tiebreak", "unknown tie-break '" + name + "'");
  if (method == Method::kArgumentative) return MatchNaiveThenSeeded{seed};
  return SeededRandom{seed};
}

inline ModelPreference preference_for(const RaeInstance& inst, const std::string& prefs) {
  return lexicographic_preference(inst, parse_preference(prefs));
}

inline void solution_csv_header(std::ostream& out) { out << "method,label,models,ces,seed,num_candidates,chosen_index\n"; }

inline void solution_csv(std::ostream& out, const Solution& s) {
  out << to_string(s.method) << ',' << to_int(s.label) << ',' << join_ids(s.models) << ','
      << join_ids(s.ces) << ',' << s.tiebreak.seed << ',' << s.tiebreak.num_candidates << ','
      << s.tiebreak.chosen_index << '\n';
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recourse-aware ensembling toolkit"};
  app.name("rae");
  app.require_subcommand(1);
  std::string format = "json";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };

  std::string baf_input, semantics = "s-preferred";
  auto* baf_cmd = app.add_subcommand("baf", "Enumerate extensions of a bipolar framework");
  baf_cmd->add_option("--input", baf_input, "Framework file")->required();
  baf_cmd->add_option("--semantics", semantics, "Semantics name");
  add_format(baf_cmd);

  std::string instance_path, method_name, prefs, tiebreak;
  std::uint64_t seed = 0;
  bool all_solutions = false;
  auto* ens_cmd = app.add_subcommand("ensemble", "Ensemble the models of an instance");
  ens_cmd->add_option("--instance", instance_path, "Instance JSON")->required();
  ens_cmd->add_option("--method", method_name, "naive, augmented, robust or argumentative")->required();
  ens_cmd->add_option("--prefs", prefs, "Property preference, e.g. accuracy>simplicity");
  ens_cmd->add_option("--seed", seed, "Tie-break seed");
  ens_cmd->add_option("--tiebreak", tiebreak, "seeded or match-naive");
  ens_cmd->add_flag("--all-solutions", all_solutions, "Report every candidate solution");
  add_format(ens_cmd);

  auto* prop_cmd = app.add_subcommand("check-properties", "Check the properties of an ensemble");
  prop_cmd->add_option("--instance", instance_path, "Instance JSON")->required();
  prop_cmd->add_option("--method", method_name, "naive, augmented, robust or argumentative")->required();
  prop_cmd->add_option("--prefs", prefs, "Property preference, e.g. accuracy>simplicity");
  prop_cmd->add_option("--seed", seed, "Tie-break seed");
  add_format(prop_cmd);

  std::string config_path, out_path;
  auto* exp_cmd = app.add_subcommand("experiment", "Run a model-multiplicity experiment");
  exp_cmd->add_option("--config", config_path, "Experiment config JSON")->required();
  exp_cmd->add_option("--out", out_path, "CSV output path; a .json sidecar is written next to it");
  add_format(exp_cmd);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << e.what() << '\n';
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return exit_code_for(ErrorKind::kUsage);
  }

  try {
    if (baf_cmd->parsed()) {
      const auto sem = baf::parse_semantics(semantics);
      auto in = detail::open_input(baf_input);
      const baf::Baf b = baf::parse_baf(in);
      const auto exts = detail::is_preferred(sem) ? baf::enumerate_preferred(b, sem)
                                                  : detail::all_satisfying(b, sem);
      if (format == "csv") {
        out << "extension,arguments\n";
        for (std::size_t k = 0; k < exts.size(); ++k) out << k << ',' << detail::join_ids(exts[k].members()) << '\n';
      } else {
        nlohmann::json list = nlohmann::json::array();
        for (auto e : exts) list.push_back(e.members());
        out << nlohmann::json{{"semantics", baf::to_string(sem)}, {"arguments", b.n_args()}, {"extensions", list}}.dump(2)
            << '\n';
      }
      return 0;
    }

    if (ens_cmd->parsed() || prop_cmd->parsed()) {
      const Method method = parse_method(method_name);
      const RaeInstance inst = detail::read_instance(instance_path);
      const ModelPreference mp = detail::preference_for(inst, prefs);
      if (prop_cmd->parsed()) {
        const auto r = ensemble(inst, method, mp, detail::policy_for(method, "", seed, false));
        const Solution& s = r.solutions.front();
        const PropertyReport report = check_all(inst, s);
        if (format == "csv") {
          out << "property,satisfied,witness\n";
          const auto j = to_json(report);
          for (const char* key : {"non_emptiness", "non_triviality", "model_agreement", "majority_vote",
                                  "counterfactual_validity", "counterfactual_coherence"}) {
            const auto w = report.witnesses.find(key);
            out << key << ',' << (j.at(key).get<bool>() ? 1 : 0) << ','
                << (w == report.witnesses.end() ? "" : w->second) << '\n';
          }
        } else {
          out << nlohmann::json{{"solution", to_json(s)}, {"properties", to_json(report)}}.dump(2) << '\n';
        }
        return 0;
      }
      const auto r = ensemble(inst, method, mp, detail::policy_for(method, tiebreak, seed, all_solutions));
      if (format == "csv") {
        detail::solution_csv_header(out);
        for (const auto& s : r.solutions) detail::solution_csv(out, s);
      } else if (all_solutions) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& s : r.solutions) list.push_back(to_json(s));
        out << nlohmann::json{{"solutions", list}, {"multiple", r.multiple}, {"same_label", r.same_label}}.dump(2)
            << '\n';
      } else {
        out << to_json(r.solutions.front()).dump(2) << '\n';
      }
      return 0;
    }

    if (exp_cmd->parsed()) {
      auto in = detail::open_input(config_path);
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::kValidation, "bad_json", std::string("config is not valid JSON: ") + e.what());
      }
      const auto base = std::filesystem::path(config_path).parent_path().string();
      const lab::ExperimentConfig cfg = lab::config_from_json(doc, base);
      const lab::ExperimentResult result = lab::run_experiment(cfg, &err);
      if (out_path.empty()) {
        if (format == "csv") {
          lab::write_csv(out, result);
        } else {
          out << lab::to_json(result).dump(2) << '\n';
        }
        return 0;
      }
      std::filesystem::path sidecar(out_path);
      sidecar.replace_extension(".json");
      if (sidecar == std::filesystem::path(out_path)) {
        fail(ErrorKind::kUsage, "bad_out", "--out must not end in .json; the sidecar takes that name");
      }
      std::ofstream csv(out_path), js(sidecar);
      if (!csv || !js) fail(ErrorKind::kUsage, "unwritable_file", "cannot write " + out_path);
      lab::write_csv(csv, result);
      js << lab::to_json(result).dump(2) << '\n';
      return 0;
    }
  } catch (const Error& e) {
    err << "error [" << e.code() << "]: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << "error [bad_json]: " << e.what() << '\n';
    return exit_code_for(ErrorKind::kValidation);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_code_for(ErrorKind::kInternal);
  }
  return exit_code_for(ErrorKind::kInternal);
}

inline int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return run_cli(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace rae::cli

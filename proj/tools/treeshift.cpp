// Copyright 2026 The treeshift Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the library only through the C
// interface. Exit codes: 0 pass, 1 checked and failed, 2 input or usage
// error, 3 enumeration cap exceeded, 4 internal inconsistency.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "treeshift/treeshift.h"

namespace {

struct Options {
  std::string group = "odometer";
  std::string automaton;
  std::string configs;
  std::string law;
  std::string out_path;
  bool json = false;
  int depth = 3;
  int size = 1;
  int max_level = 5;
  int n = 1;
  std::optional<std::size_t> cap;
  std::size_t budget = 1000000;
  std::uint64_t seed = 20260101;
  std::vector<int> subgroup;
};

bool IsPreset(const std::string& name, const char* list) {
  std::istringstream in(list);
  std::string p;
  while (in >> p)
    if (p == name) return true;
  return false;
}

int Error(const std::string& what) {
  std::cerr << "error: " << what << "\n";
  return TS_INPUT_ERROR;
}

int Status(ts_status s) {
  if (s != TS_OK && s != TS_CHECK_FAILED)
    std::cerr << "error: " << ts_last_error() << "\n";
  return static_cast<int>(s);
}

std::optional<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Loads a group from a preset name or a JSON file.
int LoadGroup(const std::string& source, ts_group** out) {
  if (IsPreset(source, ts_group_preset_names()))
    return Status(ts_group_preset(source.c_str(), out));
  auto text = ReadFile(source);
  if (!text)
    return Error("'" + source + "' is neither a group preset (" +
                 ts_group_preset_names() + ") nor a readable file");
  return Status(ts_group_parse(text->c_str(), out));
}

int LoadAutomaton(const Options& o, const ts_group* sig, ts_automaton** out) {
  if (IsPreset(o.automaton, ts_automaton_preset_names()))
    return Status(ts_automaton_preset(o.automaton.c_str(), sig,
                                      o.subgroup.data(), o.subgroup.size(),
                                      out));
  auto text = ReadFile(o.automaton);
  if (!text)
    return Error("'" + o.automaton + "' is neither an automaton preset (" +
                 ts_automaton_preset_names() + ") nor a readable file");
  return Status(ts_automaton_parse(text->c_str(), sig, out));
}

int Emit(const Options& o, ts_status s, ts_report* r) {
  if (s != TS_OK && s != TS_CHECK_FAILED) return Status(s);
  if (o.json)
    std::cout << ts_report_json(r);
  else
    std::cout << ts_report_text(r);
  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) {
      ts_report_free(r);
      return Error("cannot write '" + o.out_path + "'");
    }
    f << ts_report_json(r);
  }
  ts_report_free(r);
  return static_cast<int>(s);
}

std::size_t Cap(const Options& o) {
  if (o.cap) return *o.cap;
  std::size_t cap = 0;
  if (ts_default_cap(&cap) != TS_OK) return 0;
  return cap;
}

// Runs a command on a loaded group and releases it.
template <typename F>
int WithGroup(const Options& o, F&& f) {
  ts_group* g = nullptr;
  if (int rc = LoadGroup(o.group, &g)) return rc;
  ts_report* r = nullptr;
  const ts_status s = f(g, &r);
  ts_group_free(g);
  return Emit(o, s, r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree shifts, self-similar groups and level quotients"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Print the JSON report instead of a table");
  app.add_option("--out", o.out_path, "Also write the JSON report to a file");
  app.add_option("--cap", o.cap,
                 "Enumeration cap (default: TREESHIFT_CAP or 1000000)")
      ->check(CLI::PositiveNumber);

  auto* quotient = app.add_subcommand("quotient", "Orders of pi_n for n <= depth");
  quotient->add_option("group", o.group, "Group preset or JSON file")->required();
  quotient->add_option("--depth", o.depth, "Largest quotient size")->required();

  auto* branch = app.add_subcommand(
      "branch-check", "Symbolic branching over Triv(size) checked in pi_depth");
  branch->add_option("group", o.group, "Group preset or JSON file")->required();
  branch->add_option("--size", o.size, "Triv level branched over")->required();
  branch->add_option("--depth", o.depth, "Quotient size n >= size + 1")->required();

  auto* search = app.add_subcommand(
      "branch-search", "Smallest Triv level with a branching certificate");
  search->add_option("group", o.group, "Group preset or JSON file")->required();
  search->add_option("--max-level", o.max_level, "Largest level tried");

  auto* sft = app.add_subcommand(
      "sft-roundtrip", "Compare the shift of finite type of pi_size with pi_(depth+1)");
  sft->add_option("group", o.group, "Group preset or JSON file")->required();
  sft->add_option("--size", o.size, "Pattern size s")->required();
  sft->add_option("--depth", o.depth, "Depth of compared blocks (>= s - 1)")->required();

  auto* aut = app.add_subcommand(
      "automaton-check", "Finite-depth acceptance of configurations");
  aut->add_option("automaton", o.automaton, "Automaton preset or JSON file")->required();
  aut->add_option("configs", o.configs, "Group preset or JSON file whose generators are checked")
      ->required();
  aut->add_option("--depth", o.depth, "Largest block size")->required();
  aut->add_option("--subgroup", o.subgroup, "Label indices of B for example1");

  auto* odo = app.add_subcommand("odometer-demo",
                                 "The odometer closure is not finitely constrained");
  odo->add_option("--n", o.n, "Pattern size minus one, 1..5")->required();

  auto* law = app.add_subcommand("law-check", "Check a group law on quotients");
  law->add_option("group", o.group, "Group preset or JSON file")->required();
  law->add_option("--law", o.law, "Law, e.g. \"[x,y]\" or \"x^2 = 1\"")->required();
  law->add_option("--depth", o.depth, "Largest quotient size")->required();
  law->add_option("--budget", o.budget, "Substitutions before sampling")
      ->check(CLI::PositiveNumber);
  law->add_option("--seed", o.seed, "Sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return TS_INPUT_ERROR;
  }

  const std::size_t cap = Cap(o);
  if (cap == 0) return Status(TS_INPUT_ERROR);

  if (*quotient)
    return WithGroup(o, [&](ts_group* g, ts_report** r) {
      return ts_quotient(g, o.depth, cap, r);
    });
  if (*branch)
    return WithGroup(o, [&](ts_group* g, ts_report** r) {
      return ts_branch_check(g, o.size, o.depth, cap, r);
    });
  if (*search)
    return WithGroup(o, [&](ts_group* g, ts_report** r) {
      return ts_branch_search(g, o.max_level, cap, r);
    });
  if (*sft)
    return WithGroup(o, [&](ts_group* g, ts_report** r) {
      return ts_sft_roundtrip(g, o.size, o.depth, cap, r);
    });
  if (*law)
    return WithGroup(o, [&](ts_group* g, ts_report** r) {
      return ts_law_check(g, o.law.c_str(), o.depth, cap, o.budget, o.seed, r);
    });
  if (*odo) {
    ts_report* r = nullptr;
    const ts_status s = ts_odometer_demo(o.n, cap, &r);
    return Emit(o, s, r);
  }
  if (*aut) {
    ts_group* configs = nullptr;
    if (int rc = LoadGroup(o.configs, &configs)) return rc;
    ts_automaton* a = nullptr;
    if (int rc = LoadAutomaton(o, configs, &a)) {
      ts_group_free(configs);
      return rc;
    }
    ts_report* r = nullptr;
    const ts_status s = ts_automaton_check(a, configs, o.depth, &r);
    ts_automaton_free(a);
    ts_group_free(configs);
    return Emit(o, s, r);
  }
  return TS_INPUT_ERROR;
}

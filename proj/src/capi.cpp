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

#include "treeshift/treeshift.h"

#include <new>
#include <string>

#include "treeshift/commands.hpp"

struct ts_group {
  treeshift::NamedGroup group;
};

struct ts_automaton {
  treeshift::AutomatonSpec spec;
};

struct ts_report {
  bool pass;
  std::string json;
  std::string text;
};

namespace {

thread_local std::string last_error;

ts_status Fail(ts_status s, const std::string& what) {
  last_error = what;
  return s;
}

// Runs f, translating exceptions into status codes.
template <typename F>
ts_status Guard(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const treeshift::Error& e) {
    switch (e.code()) {
      case treeshift::ErrorCode::kInput:
        return Fail(TS_INPUT_ERROR, e.what());
      case treeshift::ErrorCode::kCapExceeded:
        return Fail(TS_CAP_EXCEEDED, e.what());
      case treeshift::ErrorCode::kInconsistency:
        return Fail(TS_INCONSISTENT, e.what());
    }
    return Fail(TS_INCONSISTENT, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(TS_CAP_EXCEEDED, "out of memory");
  } catch (const std::exception& e) {
    return Fail(TS_INPUT_ERROR, e.what());
  }
}

ts_status Null(const char* what) {
  return Fail(TS_INPUT_ERROR, std::string(what) + " must not be NULL");
}

ts_status Emit(treeshift::CommandResult r, ts_report** out) {
  *out = new ts_report{r.pass, r.report.dump(2) + "\n", std::move(r.text)};
  return r.pass ? TS_OK : TS_CHECK_FAILED;
}

std::string JoinNames(const std::vector<std::string>& names) {
  std::string out;
  for (const std::string& n : names) out += (out.empty() ? "" : " ") + n;
  return out;
}

}  // namespace

extern "C" {

const char* ts_version(void) { return "1.0.0"; }

const char* ts_last_error(void) { return last_error.c_str(); }

ts_status ts_default_cap(size_t* out) {
  if (!out) return Null("out");
  return Guard([&] {
    *out = treeshift::DefaultCap();
    return TS_OK;
  });
}

const char* ts_group_preset_names(void) {
  static const std::string names = JoinNames(treeshift::GroupPresetNames());
  return names.c_str();
}

const char* ts_automaton_preset_names(void) {
  static const std::string names = JoinNames(treeshift::AutomatonPresetNames());
  return names.c_str();
}

ts_status ts_group_preset(const char* name, ts_group** out) {
  if (!name) return Null("name");
  if (!out) return Null("out");
  return Guard([&] {
    *out = new ts_group{treeshift::GroupPreset(name)};
    return TS_OK;
  });
}

ts_status ts_group_parse(const char* json_text, ts_group** out) {
  if (!json_text) return Null("json_text");
  if (!out) return Null("out");
  return Guard([&] {
    *out = new ts_group{
        treeshift::GroupFromJson(treeshift::ParseJsonText(json_text))};
    return TS_OK;
  });
}

void ts_group_free(ts_group* g) { delete g; }

size_t ts_group_generator_count(const ts_group* g) {
  return g ? g->group.generators.size() : 0;
}

const char* ts_group_name(const ts_group* g) {
  return g ? g->group.name.c_str() : "";
}

ts_status ts_automaton_preset(const char* name, const ts_group* signature_from,
                              const int* subgroup, size_t subgroup_len,
                              ts_automaton** out) {
  if (!name) return Null("name");
  if (!signature_from) return Null("signature_from");
  if (!out) return Null("out");
  if (subgroup_len > 0 && !subgroup) return Null("subgroup");
  return Guard([&] {
    const auto& sig = signature_from->group.signature;
    std::vector<treeshift::Label> b;
    for (size_t i = 0; i < subgroup_len; ++i) {
      if (subgroup[i] < 0 || subgroup[i] >= sig->order())
        throw treeshift::InputError("subgroup label out of range");
      b.push_back(static_cast<treeshift::Label>(subgroup[i]));
    }
    *out = new ts_automaton{treeshift::AutomatonPreset(name, sig, b)};
    return TS_OK;
  });
}

ts_status ts_automaton_parse(const char* json_text,
                             const ts_group* signature_from,
                             ts_automaton** out) {
  if (!json_text) return Null("json_text");
  if (!out) return Null("out");
  return Guard([&] {
    treeshift::SignaturePtr sig =
        signature_from ? signature_from->group.signature : nullptr;
    *out = new ts_automaton{treeshift::AutomatonFromJson(
        treeshift::ParseJsonText(json_text), sig)};
    return TS_OK;
  });
}

void ts_automaton_free(ts_automaton* a) { delete a; }

ts_status ts_quotient(const ts_group* g, int depth, size_t cap,
                      ts_report** out) {
  if (!g) return Null("group");
  if (!out) return Null("out");
  return Guard([&] {
    return Emit(treeshift::RunQuotient(g->group, depth, cap), out);
  });
}

ts_status ts_branch_check(const ts_group* g, int level, int depth, size_t cap,
                          ts_report** out) {
  if (!g) return Null("group");
  if (!out) return Null("out");
  return Guard([&] {
    return Emit(treeshift::RunBranchCheck(g->group, level, depth, cap), out);
  });
}

ts_status ts_branch_search(const ts_group* g, int max_level, size_t cap,
                           ts_report** out) {
  if (!g) return Null("group");
  if (!out) return Null("out");
  return Guard([&] {
    return Emit(treeshift::RunBranchSearch(g->group, max_level, cap), out);
  });
}

ts_status ts_sft_roundtrip(const ts_group* g, int pattern_size, int depth,
                           size_t cap, ts_report** out) {
  if (!g) return Null("group");
  if (!out) return Null("out");
  return Guard([&] {
    return Emit(treeshift::RunSftRoundtrip(g->group, pattern_size, depth, cap),
                out);
  });
}

ts_status ts_automaton_check(const ts_automaton* a, const ts_group* configs,
                             int depth, ts_report** out) {
  if (!a) return Null("automaton");
  if (!configs) return Null("configs");
  if (!out) return Null("out");
  return Guard([&] {
    return Emit(treeshift::RunAutomatonCheck(a->spec, configs->group, depth),
                out);
  });
}

ts_status ts_odometer_demo(int n, size_t cap, ts_report** out) {
  if (!out) return Null("out");
  return Guard([&] { return Emit(treeshift::RunOdometerDemo(n, cap), out); });
}

ts_status ts_law_check(const ts_group* g, const char* law, int depth,
                       size_t cap, size_t budget, uint64_t seed,
                       ts_report** out) {
  if (!g) return Null("group");
  if (!law) return Null("law");
  if (!out) return Null("out");
  return Guard([&] {
    return Emit(
        treeshift::RunLawCheck(g->group, law, depth, cap, budget, seed), out);
  });
}

const char* ts_report_json(const ts_report* r) {
  return r ? r->json.c_str() : "";
}

const char* ts_report_text(const ts_report* r) {
  return r ? r->text.c_str() : "";
}

int ts_report_passed(const ts_report* r) { return r && r->pass ? 1 : 0; }

void ts_report_free(ts_report* r) { delete r; }

}  // extern "C"

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

#include "treeshift/io.hpp"

#include <algorithm>
#include <map>

namespace treeshift {

namespace {

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

int AsInt(const Json& j, const std::string& what) {
  if (!j.is_number_integer())
    throw InputError(what + " must be an integer");
  return j.get<int>();
}

std::string AsString(const Json& j, const std::string& what) {
  if (!j.is_string()) throw InputError(what + " must be a string");
  return j.get<std::string>();
}

const Json& AsArray(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array");
  return j;
}

std::vector<int> IntArray(const Json& j, const std::string& what) {
  std::vector<int> out;
  for (const Json& x : AsArray(j, what)) out.push_back(AsInt(x, what));
  return out;
}

Label LabelFromJson(const Json& j, const Signature& sig) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    for (int a = 0; a < sig.order(); ++a)
      if (sig.LabelName(static_cast<Label>(a)) == name)
        return static_cast<Label>(a);
    throw InputError("unknown label name '" + name + "'");
  }
  const int a = AsInt(j, "label");
  if (a < 0 || a >= sig.order())
    throw InputError("label " + std::to_string(a) + " out of range");
  return static_cast<Label>(a);
}

std::map<std::string, int> NameIndex(const std::vector<std::string>& names,
                                     const std::string& what) {
  std::map<std::string, int> out;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!out.emplace(names[i], static_cast<int>(i)).second)
      throw InputError("duplicate " + what + " name '" + names[i] + "'");
  return out;
}

int Lookup(const std::map<std::string, int>& index, const Json& j,
           const std::string& what) {
  const std::string name = AsString(j, what);
  auto it = index.find(name);
  if (it == index.end()) throw InputError("unknown " + what + " '" + name + "'");
  return it->second;
}

std::vector<int> StateList(const Json& j, const std::map<std::string, int>& index,
                           const std::string& what) {
  std::vector<int> out;
  for (const Json& x : AsArray(j, what)) out.push_back(Lookup(index, x, "state"));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Json ParseJsonText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

SignaturePtr SignatureFromJson(const Json& j) {
  LabelGroup group;
  group.order = AsInt(Field(j, "order"), "order");
  if (group.order < 1) throw InputError("order must be positive");
  for (const Json& row : AsArray(Field(j, "mult"), "mult")) {
    std::vector<int> r = IntArray(row, "mult row");
    group.mult.insert(group.mult.end(), r.begin(), r.end());
  }
  group.inverse = IntArray(Field(j, "inverse"), "inverse");
  group.identity = AsInt(Field(j, "identity"), "identity");
  if (j.contains("names"))
    for (const Json& n : AsArray(j["names"], "names"))
      group.names.push_back(AsString(n, "name"));
  Action action;
  const Json& rows = AsArray(Field(j, "action"), "action");
  for (const Json& row : rows) {
    std::vector<int> r = IntArray(row, "action row");
    if (action.table.empty()) action.alphabet_size = static_cast<int>(r.size());
    if (static_cast<int>(r.size()) != action.alphabet_size)
      throw InputError("action rows have different lengths");
    action.table.insert(action.table.end(), r.begin(), r.end());
  }
  return Signature::Create(std::move(group), std::move(action));
}

Json SignatureToJson(const Signature& sig) {
  const LabelGroup& g = sig.group();
  Json j;
  j["order"] = g.order;
  Json mult = Json::array();
  for (int a = 0; a < g.order; ++a)
    mult.push_back(std::vector<int>(g.mult.begin() + a * g.order,
                                    g.mult.begin() + (a + 1) * g.order));
  j["mult"] = mult;
  j["inverse"] = g.inverse;
  j["identity"] = g.identity;
  Json action = Json::array();
  const int k = sig.arity();
  for (int a = 0; a < g.order; ++a)
    action.push_back(std::vector<int>(sig.action().table.begin() + a * k,
                                      sig.action().table.begin() + (a + 1) * k));
  j["action"] = action;
  if (!g.names.empty()) j["names"] = g.names;
  return j;
}

FsElement FsElementFromJson(const Json& j, SignaturePtr sig) {
  const Json& states = AsArray(Field(j, "states"), "states");
  if (states.empty()) throw InputError("an element needs at least one state");
  std::vector<std::string> names;
  for (const Json& s : states) names.push_back(AsString(Field(s, "name"), "state name"));
  const auto index = NameIndex(names, "state");
  std::vector<FsState> out;
  for (const Json& s : states) {
    FsState st;
    st.label = LabelFromJson(Field(s, "label"), *sig);
    const Json& secs = AsArray(Field(s, "sections"), "sections");
    if (static_cast<int>(secs.size()) != sig->arity())
      throw InputError("state '" + s["name"].get<std::string>() + "' has " +
                       std::to_string(secs.size()) + " sections, expected " +
                       std::to_string(sig->arity()));
    for (const Json& t : secs) st.sections.push_back(Lookup(index, t, "state"));
    out.push_back(std::move(st));
  }
  const int initial = Lookup(index, Field(j, "initial"), "state");
  return FsElement(std::move(sig), std::move(out), initial);
}

Json FsElementToJson(const FsElement& g) {
  Json states = Json::array();
  for (std::size_t i = 0; i < g.state_count(); ++i) {
    Json s;
    s["name"] = "q" + std::to_string(i);
    s["label"] = static_cast<int>(g.label_of(static_cast<int>(i)));
    Json secs = Json::array();
    for (int x = 0; x < g.signature()->arity(); ++x)
      secs.push_back("q" + std::to_string(g.section_of(static_cast<int>(i), x)));
    s["sections"] = secs;
    states.push_back(s);
  }
  Json j;
  j["states"] = states;
  j["initial"] = "q0";
  return j;
}

NamedGroup GroupFromJson(const Json& j) {
  if (!j.is_object()) throw InputError("a group must be a JSON object");
  if (j.contains("preset")) return GroupPreset(AsString(j["preset"], "preset"));
  NamedGroup g;
  g.name = j.contains("name") ? AsString(j["name"], "name") : "group";
  g.signature = SignatureFromJson(Field(j, "signature"));
  std::vector<std::string> names;
  for (const Json& gen : AsArray(Field(j, "generators"), "generators")) {
    std::string name = AsString(Field(gen, "name"), "generator name");
    names.push_back(name);
    g.generator_names.push_back(std::move(name));
    g.generators.push_back(FsElementFromJson(gen, g.signature));
  }
  NameIndex(names, "generator");
  return g;
}

Json GroupToJson(const NamedGroup& g) {
  Json j;
  j["name"] = g.name;
  j["signature"] = SignatureToJson(*g.signature);
  Json gens = Json::array();
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    Json e;
    e["name"] = g.generator_names[i];
    Json body = FsElementToJson(g.generators[i]);
    e["states"] = body["states"];
    e["initial"] = body["initial"];
    gens.push_back(e);
  }
  j["generators"] = gens;
  return j;
}

NamedGroup GroupFromSource(const std::string& preset_or_json) {
  const auto names = GroupPresetNames();
  if (std::find(names.begin(), names.end(), preset_or_json) != names.end())
    return GroupPreset(preset_or_json);
  return GroupFromJson(ParseJsonText(preset_or_json));
}

AutomatonSpec AutomatonPreset(const std::string& name, SignaturePtr sig,
                              const std::vector<Label>& subgroup) {
  if (name == "example1") {
    std::vector<Label> b = subgroup;
    if (b.empty()) b.push_back(sig->identity());
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    BuchiAutomaton ex = Example1Automaton(sig, b);
    return AutomatonSpec{name, ex.base, ex.initial, ex.accepting, {}};
  }
  if (name == "identity")
    return AutomatonSpec{name, IdentityAcceptor(sig), {}, {}, {}};
  if (name == "full-shift")
    return AutomatonSpec{name, FullShiftAcceptor(sig), {}, {}, {}};
  throw InputError("unknown automaton preset '" + name + "'");
}

std::vector<std::string> AutomatonPresetNames() {
  return {"example1", "identity", "full-shift"};
}

AutomatonSpec AutomatonFromJson(const Json& j, SignaturePtr fallback) {
  if (!j.is_object()) throw InputError("an automaton must be a JSON object");
  SignaturePtr sig = j.contains("signature") ? SignatureFromJson(j["signature"])
                                             : std::move(fallback);
  if (!sig) throw InputError("automaton has no signature");
  if (j.contains("preset")) {
    std::vector<Label> b;
    if (j.contains("subgroup"))
      for (const Json& a : AsArray(j["subgroup"], "subgroup"))
        b.push_back(LabelFromJson(a, *sig));
    return AutomatonPreset(AsString(j["preset"], "preset"), sig, b);
  }
  std::vector<std::string> names;
  for (const Json& s : AsArray(Field(j, "states"), "states"))
    names.push_back(AsString(s, "state name"));
  if (names.empty()) throw InputError("an automaton needs at least one state");
  const auto index = NameIndex(names, "state");
  std::vector<Bundle> bundles;
  for (const Json& b : AsArray(Field(j, "bundles"), "bundles")) {
    Bundle out;
    out.from = Lookup(index, Field(b, "from"), "state");
    out.label = LabelFromJson(Field(b, "label"), *sig);
    const Json& to = AsArray(Field(b, "to"), "bundle targets");
    if (static_cast<int>(to.size()) != sig->arity())
      throw InputError("bundle from '" + names[out.from] + "' has " +
                       std::to_string(to.size()) + " targets, expected " +
                       std::to_string(sig->arity()));
    for (const Json& t : to) out.to.push_back(Lookup(index, t, "state"));
    bundles.push_back(std::move(out));
  }
  AutomatonSpec spec{j.contains("name") ? AsString(j["name"], "name") : "automaton",
                     Automaton(sig, names, std::move(bundles)), {}, {}, {}};
  if (j.contains("initial"))
    spec.initial = StateList(j["initial"], index, "initial");
  if (j.contains("accepting"))
    spec.accepting = StateList(j["accepting"], index, "accepting");
  if (j.contains("accepting_sets"))
    for (const Json& set : AsArray(j["accepting_sets"], "accepting_sets"))
      spec.accepting_sets.push_back(StateList(set, index, "accepting set"));
  return spec;
}

Json AutomatonToJson(const AutomatonSpec& a) {
  const Automaton& aut = a.automaton;
  const auto& names = aut.state_names();
  Json j;
  j["name"] = a.name;
  j["states"] = names;
  Json bundles = Json::array();
  for (const Bundle& b : aut.bundles()) {
    Json e;
    e["from"] = names[b.from];
    e["label"] = static_cast<int>(b.label);
    Json to = Json::array();
    for (int t : b.to) to.push_back(names[t]);
    e["to"] = to;
    bundles.push_back(e);
  }
  j["bundles"] = bundles;
  auto state_names = [&](const std::vector<int>& s) {
    Json out = Json::array();
    for (int i : s) out.push_back(names[i]);
    return out;
  };
  if (!a.initial.empty()) j["initial"] = state_names(a.initial);
  if (!a.accepting.empty()) j["accepting"] = state_names(a.accepting);
  if (!a.accepting_sets.empty()) {
    Json sets = Json::array();
    for (const auto& s : a.accepting_sets) sets.push_back(state_names(s));
    j["accepting_sets"] = sets;
  }
  return j;
}

SftDefinition SftFromJson(const Json& j, SignaturePtr fallback) {
  SignaturePtr sig = j.contains("signature") ? SignatureFromJson(j["signature"])
                                             : std::move(fallback);
  if (!sig) throw InputError("shift has no signature");
  const int s = AsInt(Field(j, "block_size"), "block_size");
  std::set<BlockLabels> forbidden;
  for (const Json& b : AsArray(Field(j, "forbidden"), "forbidden")) {
    BlockLabels labels;
    for (const Json& a : AsArray(b, "forbidden block"))
      labels.push_back(LabelFromJson(a, *sig));
    forbidden.insert(std::move(labels));
  }
  return MakeSft(std::move(sig), s, std::move(forbidden));
}

Json SftToJson(const SftDefinition& def) {
  Json j;
  j["block_size"] = def.block_size;
  Json blocks = Json::array();
  for (const BlockLabels& b : def.forbidden) {
    Json row = Json::array();
    for (Label a : b) row.push_back(static_cast<int>(a));
    blocks.push_back(row);
  }
  j["forbidden"] = blocks;
  return j;
}

Json BlockToJson(const TruncatedElement& g) {
  Json j;
  j["depth"] = g.depth();
  Json labels = Json::array();
  for (Label a : g.labels()) labels.push_back(static_cast<int>(a));
  j["labels"] = labels;
  j["levels"] = g.ToString();
  return j;
}

Json WordToJson(const Word& w) { return w.ToString(); }

Json CountToJson(const BigCount& c) {
  if (auto v = c.ToU64()) return *v;
  return c.ToString();
}

Json RunToJson(const TruncatedRun& r) {
  Json j;
  j["depth"] = r.depth;
  j["states"] = r.states;
  return j;
}

}  // namespace treeshift

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

// JSON reading and writing for signatures, elements, groups, automata and
// shifts of finite type. Every parse error is an InputError.
//
// Signature: {"order", "mult" (order x order), "inverse", "identity",
//             "action" (order x k), "names" (optional)}
// Element:   {"states": [{"name", "label", "sections": [k names]}],
//             "initial": name}
// Group:     {"preset": name} or {"signature", "generators":
//             [{"name", "states", "initial"}]}
// Automaton: {"states": [names], "bundles": [{"from", "label", "to"}],
//             "initial", "accepting", "accepting_sets" (all optional),
//             "signature" (optional)} or {"preset": name, "subgroup"}
// SFT:       {"block_size", "forbidden": [[labels in word order]],
//             "signature" (optional)}
// Labels may be given as indices or as label names.

#ifndef TREESHIFT_IO_HPP_
#define TREESHIFT_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "treeshift/presets.hpp"
#include "treeshift/shifts.hpp"

namespace treeshift {

using Json = nlohmann::ordered_json;

Json ParseJsonText(const std::string& text);

SignaturePtr SignatureFromJson(const Json& j);
Json SignatureToJson(const Signature& sig);

FsElement FsElementFromJson(const Json& j, SignaturePtr sig);
// States are named q0, q1, ... in canonical order.
Json FsElementToJson(const FsElement& g);

NamedGroup GroupFromJson(const Json& j);
Json GroupToJson(const NamedGroup& g);
// A preset name or the JSON text of a group.
NamedGroup GroupFromSource(const std::string& preset_or_json);

struct AutomatonSpec {
  std::string name;
  Automaton automaton;
  std::vector<int> initial;                      // empty when unrestricted
  std::vector<int> accepting;                    // Buchi condition
  std::vector<std::vector<int>> accepting_sets;  // Rabin condition
};

// `fallback` supplies the signature when the JSON has none.
AutomatonSpec AutomatonFromJson(const Json& j, SignaturePtr fallback);
Json AutomatonToJson(const AutomatonSpec& a);
// Presets: "example1" (subgroup given as label indices, default {identity}),
// "identity", "full-shift".
AutomatonSpec AutomatonPreset(const std::string& name, SignaturePtr sig,
                              const std::vector<Label>& subgroup);
std::vector<std::string> AutomatonPresetNames();

SftDefinition SftFromJson(const Json& j, SignaturePtr fallback);
Json SftToJson(const SftDefinition& def);

Json BlockToJson(const TruncatedElement& g);
Json WordToJson(const Word& w);
Json CountToJson(const BigCount& c);
Json RunToJson(const TruncatedRun& r);

}  // namespace treeshift

#endif  // TREESHIFT_IO_HPP_

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

#include "treeshift/presets.hpp"

namespace treeshift {

FsElement OdometerElement() {
  // State 0 = a, state 1 = e.
  return FsElement(CyclicSwapSignature(), {{1, {1, 0}}, {0, {1, 1}}}, 0);
}

std::vector<FsElement> GrigorchukElements() {
  SignaturePtr sig = CyclicSwapSignature();
  // States: 0 e, 1 a, 2 b, 3 c, 4 d.
  const std::vector<FsState> states = {
      {0, {0, 0}}, {1, {0, 0}}, {0, {1, 3}}, {0, {1, 4}}, {0, {0, 2}}};
  std::vector<FsElement> out;
  for (int s = 1; s <= 4; ++s) out.emplace_back(sig, states, s);
  return out;
}

FsElement FinitaryDelta(SignaturePtr sig, const Word& w, Label label) {
  if (label >= sig->order()) throw InputError("label out of range");
  const int k = sig->arity();
  const int chain = static_cast<int>(w.size());
  // States 0..|w|-1 walk down w, state |w| carries the label, the last state
  // is the identity sink.
  const int sink = chain + 1;
  std::vector<FsState> states(chain + 2);
  for (int i = 0; i <= chain; ++i) {
    states[i].label = i == chain ? label : sig->identity();
    states[i].sections.assign(k, sink);
    if (i < chain) {
      if (w[i] >= k) throw InputError("letter out of range");
      states[i].sections[w[i]] = i + 1;
    }
  }
  states[sink] = {sig->identity(), std::vector<int>(k, sink)};
  return FsElement(std::move(sig), std::move(states), 0);
}

NamedGroup GroupPreset(const std::string& name) {
  SignaturePtr sig = CyclicSwapSignature();
  if (name == "odometer") return {name, sig, {"a"}, {OdometerElement()}};
  if (name == "grigorchuk")
    return {name, sig, {"a", "b", "c", "d"}, GrigorchukElements()};
  if (name == "trivial") return {name, sig, {}, {}};
  if (name == "finitary") {
    NamedGroup g{name, sig, {}, {}};
    for (const char* w : {"", "0", "10", "011"}) {
      g.generator_names.push_back(std::string("delta_") +
                                  (*w ? w : "e"));
      g.generators.push_back(FinitaryDelta(sig, Word::Parse(w), 1));
    }
    return g;
  }
  throw InputError("unknown group preset '" + name + "'");
}

std::vector<std::string> GroupPresetNames() {
  return {"odometer", "grigorchuk", "trivial", "finitary"};
}

BuchiAutomaton Example1Automaton(SignaturePtr sig,
                                 const std::vector<Label>& subgroup) {
  if (auto err = sig->CheckSubgroup(subgroup))
    throw InputError("B is not a subgroup: " + *err);
  const int k = sig->arity();
  std::vector<Bundle> bundles;
  for (int a = 0; a < sig->order(); ++a)
    bundles.push_back({0, static_cast<Label>(a), std::vector<int>(k, 0)});
  for (Label b : subgroup) {
    bundles.push_back({0, b, std::vector<int>(k, 1)});
    bundles.push_back({1, b, std::vector<int>(k, 1)});
  }
  Automaton base(sig, {"s1", "s2"}, std::move(bundles));
  return MakeBuchi(std::move(base), {0}, {1});
}

Automaton IdentityAcceptor(SignaturePtr sig) {
  const int k = sig->arity();
  const Label e = sig->identity();
  return Automaton(std::move(sig), {"s"}, {{0, e, std::vector<int>(k, 0)}});
}

Automaton FullShiftAcceptor(SignaturePtr sig) {
  const int k = sig->arity();
  std::vector<Bundle> bundles;
  for (int a = 0; a < sig->order(); ++a)
    bundles.push_back({0, static_cast<Label>(a), std::vector<int>(k, 0)});
  return Automaton(std::move(sig), {"s"}, std::move(bundles));
}

}  // namespace treeshift

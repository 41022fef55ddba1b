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

// Built-in groups and automata, all over the binary alphabet with
// A = C2 = {id, s} acting by swapping the letters unless stated otherwise.

#ifndef TREESHIFT_PRESETS_HPP_
#define TREESHIFT_PRESETS_HPP_

#include <string>
#include <vector>

#include "treeshift/automata.hpp"

namespace treeshift {

struct NamedGroup {
  std::string name;
  SignaturePtr signature;
  std::vector<std::string> generator_names;
  std::vector<FsElement> generators;
};

// a = s(e, a).
FsElement OdometerElement();
// a = s(e, e), b = (a, c), c = (a, d), d = (e, b), in that order.
std::vector<FsElement> GrigorchukElements();
// The element whose only nontrivial label is `label` at `w`.
FsElement FinitaryDelta(SignaturePtr sig, const Word& w, Label label);

// "odometer", "grigorchuk", "trivial" (no generators over C2) and
// "finitary" (finitary deltas at e, 0, 10 and 011).
NamedGroup GroupPreset(const std::string& name);
std::vector<std::string> GroupPresetNames();

// The two-state automaton with bundles (s1, a, s1...) for a in A,
// (s1, b, s2...) and (s2, b, s2...) for b in B; initial {s1}, accepting {s2}.
BuchiAutomaton Example1Automaton(SignaturePtr sig,
                                 const std::vector<Label>& subgroup);
// One state, one bundle with the trivial label.
Automaton IdentityAcceptor(SignaturePtr sig);
// One state, one bundle per label.
Automaton FullShiftAcceptor(SignaturePtr sig);

}  // namespace treeshift

#endif  // TREESHIFT_PRESETS_HPP_

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

// Tree automata over labeled trees.
//
// An unrestricted Rabin automaton is a finite state set with transition
// bundles (s, a, (s_x)_x). A labeling of the tree is accepted when some map
// from vertices to states uses a bundle at every vertex. Block questions are
// answered exactly with the viable states (those from which some infinite
// accepted tree hangs) and a bottom-up dynamic program over the block.

#ifndef TREESHIFT_AUTOMATA_HPP_
#define TREESHIFT_AUTOMATA_HPP_

#include <optional>
#include <string>
#include <vector>

#include "treeshift/elements.hpp"

namespace treeshift {

struct Bundle {
  int from = 0;
  Label label = 0;
  std::vector<int> to;  // one state per letter
  auto operator<=>(const Bundle&) const = default;
};

class Automaton {
 public:
  // Validates state indices, labels and bundle arity. Duplicate bundles are
  // dropped and the rest sorted.
  Automaton(SignaturePtr sig, std::vector<std::string> state_names,
            std::vector<Bundle> bundles);

  const SignaturePtr& signature() const { return sig_; }
  int state_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& state_names() const { return names_; }
  const std::vector<Bundle>& bundles() const { return bundles_; }
  // Indices into bundles() of the bundles leaving s.
  const std::vector<int>& bundles_from(int s) const { return from_[s]; }
  bool HasBundle(int from, Label label, const std::vector<int>& to) const;
  int StateIndex(const std::string& name) const;

 private:
  SignaturePtr sig_;
  std::vector<std::string> names_;
  std::vector<Bundle> bundles_;
  std::vector<std::vector<int>> from_;
};

struct BuchiAutomaton {
  Automaton base;
  std::vector<int> initial;    // nonempty, sorted
  std::vector<int> accepting;  // sorted
};

struct RabinAutomaton {
  Automaton base;
  std::vector<int> initial;
  std::vector<std::vector<int>> accepting_sets;  // each sorted; list sorted
};

BuchiAutomaton MakeBuchi(Automaton base, std::vector<int> initial,
                         std::vector<int> accepting);
RabinAutomaton MakeRabin(Automaton base, std::vector<int> initial,
                         std::vector<std::vector<int>> accepting_sets);

// A state for every vertex of X^[depth], in TreeLayout order.
struct TruncatedRun {
  int arity = 1;
  int depth = 0;
  std::vector<int> states;

  TreeLayout layout() const { return TreeLayout(arity, depth); }
  int at(const Word& w) const { return states[layout().IndexOf(w)]; }
  bool operator==(const TruncatedRun&) const = default;
};

// Checks the bundle condition at every w with |w| < run.depth, reading labels
// from g (which needs depth >= run.depth - 1). On failure the offending word
// is stored in *where when given.
bool RunIsValid(const Automaton& aut, const TruncatedElement& g,
                const TruncatedRun& run, Word* where = nullptr);

// Greatest set V of states such that each state of V has a bundle into V.
std::vector<bool> ViableStates(const Automaton& aut);

// Decides whether a block (a TruncatedElement of depth n - 1, i.e. a block of
// size n) is allowed: some run r on X^[n] into viable states satisfies the
// bundle condition at every vertex of the block. Returns the run chosen
// top-down from the dynamic program (first bundle in sorted order at each
// vertex), or nullopt when the block is not allowed. `root_state` restricts
// r(e).
std::optional<TruncatedRun> BlockAllowed(
    const Automaton& aut, const TruncatedElement& block,
    std::optional<int> root_state = std::nullopt);

// Whether every block of every size 1..max_size is allowed. Works on the
// family of reachable possible-state sets, so no block is enumerated.
// Returns the first size at which some block is rejected, if any.
std::optional<int> FirstSizeWithForbiddenBlock(const Automaton& aut,
                                               int max_size);

// Whether the size-n root block of g is allowed; evaluated on the states of g
// so the cost is linear in n.
bool ConfigAllowedToDepth(const Automaton& aut, const FsElement& g, int n);

// Grafting: given runs for a and b with a_(v) = b_(e) and
// run_a(v) = run_b(e), builds the run for Graft(a, b, v) that follows run_b
// on vX* and run_a elsewhere, and re-validates it. run_a must cover
// X^[depth(a) + 1] and run_b X^[depth(a) + 1 - |v|].
TruncatedRun GraftRun(const Automaton& aut, const TruncatedElement& a,
                      const TruncatedRun& run_a, const TruncatedElement& b,
                      const TruncatedRun& run_b, const Word& v);

RabinAutomaton BuchiToRabin(const BuchiAutomaton& b);
BuchiAutomaton UnrestrictedToBuchi(const Automaton& aut);

// Finite-state configurations whose labels are eventually in the subgroup B
// (checked on states lying on or reachable from a cycle of g's state graph).
bool DecideEventuallyInSubgroup(const FsElement& g,
                                const std::vector<Label>& subgroup);

// Whether every ray of g carries only finitely many nontrivial labels: no
// state inside a cycle of g's state graph has a nontrivial label.
bool DecideFinitelySupportedRays(const FsElement& g);

// States of g lying on some cycle.
std::vector<bool> CyclicStates(const FsElement& g);

}  // namespace treeshift

#endif  // TREESHIFT_AUTOMATA_HPP_

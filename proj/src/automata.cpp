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

#include "treeshift/automata.hpp"

#include <algorithm>
#include <set>

namespace treeshift {

namespace {

using StateSet = std::vector<char>;

std::vector<int> SortedUnique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void RequireStates(const Automaton& aut, const std::vector<int>& states,
                   const char* what) {
  for (int s : states)
    if (s < 0 || s >= aut.state_count())
      throw InputError(std::string(what) + " state " + std::to_string(s) +
                       " out of range");
}

// States s with a bundle (s, label, to) whose targets all lie in the given
// per-letter sets.
StateSet Possible(const Automaton& aut, Label label,
                  const std::vector<const StateSet*>& children) {
  StateSet out(aut.state_count(), 0);
  for (const Bundle& b : aut.bundles()) {
    if (b.label != label || out[b.from]) continue;
    bool ok = true;
    for (std::size_t x = 0; x < b.to.size() && ok; ++x)
      ok = (*children[x])[b.to[x]] != 0;
    if (ok) out[b.from] = 1;
  }
  return out;
}

bool Empty(const StateSet& s) {
  return std::none_of(s.begin(), s.end(), [](char c) { return c != 0; });
}

}  // namespace

Automaton::Automaton(SignaturePtr sig, std::vector<std::string> state_names,
                     std::vector<Bundle> bundles)
    : sig_(std::move(sig)), names_(std::move(state_names)) {
  if (!sig_) throw InputError("missing signature");
  if (names_.empty()) throw InputError("automaton needs at least one state");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size())
    throw InputError("duplicate state names");
  const int n = state_count();
  for (const Bundle& b : bundles) {
    if (b.from < 0 || b.from >= n)
      throw InputError("bundle source state out of range");
    if (b.label >= sig_->order()) throw InputError("bundle label out of range");
    if (static_cast<int>(b.to.size()) != sig_->arity())
      throw InputError("bundle has " + std::to_string(b.to.size()) +
                       " targets, expected " + std::to_string(sig_->arity()));
    for (int t : b.to)
      if (t < 0 || t >= n) throw InputError("bundle target state out of range");
  }
  std::sort(bundles.begin(), bundles.end());
  bundles.erase(std::unique(bundles.begin(), bundles.end()), bundles.end());
  bundles_ = std::move(bundles);
  from_.assign(n, {});
  for (std::size_t i = 0; i < bundles_.size(); ++i)
    from_[bundles_[i].from].push_back(static_cast<int>(i));
}

bool Automaton::HasBundle(int from, Label label,
                          const std::vector<int>& to) const {
  Bundle key{from, label, to};
  return std::binary_search(bundles_.begin(), bundles_.end(), key);
}

int Automaton::StateIndex(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InputError("unknown state '" + name + "'");
  return static_cast<int>(it - names_.begin());
}

BuchiAutomaton MakeBuchi(Automaton base, std::vector<int> initial,
                         std::vector<int> accepting) {
  initial = SortedUnique(std::move(initial));
  accepting = SortedUnique(std::move(accepting));
  if (initial.empty()) throw InputError("initial state set must be nonempty");
  RequireStates(base, initial, "initial");
  RequireStates(base, accepting, "accepting");
  return BuchiAutomaton{std::move(base), std::move(initial),
                        std::move(accepting)};
}

RabinAutomaton MakeRabin(Automaton base, std::vector<int> initial,
                         std::vector<std::vector<int>> accepting_sets) {
  initial = SortedUnique(std::move(initial));
  if (initial.empty()) throw InputError("initial state set must be nonempty");
  RequireStates(base, initial, "initial");
  for (auto& set : accepting_sets) {
    set = SortedUnique(std::move(set));
    RequireStates(base, set, "accepting-set");
  }
  std::sort(accepting_sets.begin(), accepting_sets.end(),
            [](const auto& l, const auto& r) {
              return l.size() != r.size() ? l.size() < r.size() : l < r;
            });
  accepting_sets.erase(
      std::unique(accepting_sets.begin(), accepting_sets.end()),
      accepting_sets.end());
  return RabinAutomaton{std::move(base), std::move(initial),
                        std::move(accepting_sets)};
}

bool RunIsValid(const Automaton& aut, const TruncatedElement& g,
                const TruncatedRun& run, Word* where) {
  const int k = aut.signature()->arity();
  if (run.arity != k) throw InputError("run arity does not match automaton");
  if (g.depth() < run.depth - 1)
    throw InputError("element too shallow for run of depth " +
                     std::to_string(run.depth));
  const TreeLayout lay = run.layout();
  if (run.states.size() != lay.vertex_count())
    throw InputError("run has wrong number of vertices");
  const TreeLayout glay = g.layout();
  std::vector<int> to(k);
  for (int level = 0; level < run.depth; ++level) {
    for (std::size_t r = 0; r < lay.level_size(level); ++r) {
      const std::size_t i = lay.level_offset(level) + r;
      for (int x = 0; x < k; ++x) to[x] = run.states[lay.child(level, r, x)];
      const Label a = g.label_at(glay.level_offset(level) + r);
      if (!aut.HasBundle(run.states[i], a, to)) {
        if (where) *where = lay.WordAt(i);
        return false;
      }
    }
  }
  return true;
}

std::vector<bool> ViableStates(const Automaton& aut) {
  const int n = aut.state_count();
  std::vector<bool> alive(n, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < n; ++s) {
      if (!alive[s]) continue;
      bool has = false;
      for (int bi : aut.bundles_from(s)) {
        const Bundle& b = aut.bundles()[bi];
        if (std::all_of(b.to.begin(), b.to.end(),
                        [&](int t) { return alive[t]; })) {
          has = true;
          break;
        }
      }
      if (!has) {
        alive[s] = false;
        changed = true;
      }
    }
  }
  return alive;
}

std::optional<TruncatedRun> BlockAllowed(const Automaton& aut,
                                         const TruncatedElement& block,
                                         std::optional<int> root_state) {
  RequireSameSignature(*aut.signature(), *block.signature());
  const int k = aut.signature()->arity();
  const int n = block.block_size();
  if (root_state && (*root_state < 0 || *root_state >= aut.state_count()))
    throw InputError("root state out of range");
  const TreeLayout lay(k, n);
  const std::vector<bool> viable = ViableStates(aut);
  std::vector<StateSet> possible(lay.vertex_count());
  StateSet leaf(aut.state_count());
  for (int s = 0; s < aut.state_count(); ++s) leaf[s] = viable[s] ? 1 : 0;
  for (std::size_t r = 0; r < lay.level_size(n); ++r)
    possible[lay.level_offset(n) + r] = leaf;
  std::vector<const StateSet*> kids(k);
  for (int level = n - 1; level >= 0; --level) {
    for (std::size_t r = 0; r < lay.level_size(level); ++r) {
      for (int x = 0; x < k; ++x) kids[x] = &possible[lay.child(level, r, x)];
      possible[lay.level_offset(level) + r] =
          Possible(aut, block.label_at(lay.level_offset(level) + r), kids);
    }
  }
  StateSet& root = possible[0];
  if (root_state) {
    const bool keep = root[*root_state] != 0;
    std::fill(root.begin(), root.end(), 0);
    if (keep) root[*root_state] = 1;
  }
  if (Empty(root)) return std::nullopt;

  TruncatedRun run{k, n, std::vector<int>(lay.vertex_count(), -1)};
  run.states[0] = static_cast<int>(
      std::find(root.begin(), root.end(), 1) - root.begin());
  for (int level = 0; level < n; ++level) {
    for (std::size_t r = 0; r < lay.level_size(level); ++r) {
      const std::size_t i = lay.level_offset(level) + r;
      const Label a = block.label_at(i);
      bool found = false;
      for (int bi : aut.bundles_from(run.states[i])) {
        const Bundle& b = aut.bundles()[bi];
        if (b.label != a) continue;
        bool ok = true;
        for (int x = 0; x < k && ok; ++x)
          ok = possible[lay.child(level, r, x)][b.to[x]] != 0;
        if (!ok) continue;
        for (int x = 0; x < k; ++x)
          run.states[lay.child(level, r, x)] = b.to[x];
        found = true;
        break;
      }
      if (!found)
        throw Error(ErrorCode::kInconsistency,
                    "run reconstruction found no bundle at " +
                        lay.WordAt(i).ToString());
    }
  }
  return run;
}

std::optional<int> FirstSizeWithForbiddenBlock(const Automaton& aut,
                                               int max_size) {
  const int k = aut.signature()->arity();
  const int m = aut.signature()->order();
  const std::vector<bool> viable = ViableStates(aut);
  StateSet leaf(aut.state_count());
  for (int s = 0; s < aut.state_count(); ++s) leaf[s] = viable[s] ? 1 : 0;
  std::vector<StateSet> family{leaf};
  for (int size = 1; size <= max_size; ++size) {
    std::set<StateSet> next;
    std::vector<std::size_t> pick(k, 0);
    std::vector<const StateSet*> kids(k);
    while (true) {
      for (int x = 0; x < k; ++x) kids[x] = &family[pick[x]];
      for (int a = 0; a < m; ++a) {
        StateSet p = Possible(aut, static_cast<Label>(a), kids);
        if (Empty(p)) return size;
        next.insert(std::move(p));
      }
      int x = k - 1;
      while (x >= 0 && ++pick[x] == family.size()) pick[x--] = 0;
      if (x < 0) break;
    }
    family.assign(next.begin(), next.end());
  }
  return std::nullopt;
}

bool ConfigAllowedToDepth(const Automaton& aut, const FsElement& g, int n) {
  RequireSameSignature(*aut.signature(), *g.signature());
  if (n < 1) throw InputError("block size must be at least 1");
  const int k = aut.signature()->arity();
  const int q = static_cast<int>(g.state_count());
  const std::vector<bool> viable = ViableStates(aut);
  StateSet leaf(aut.state_count());
  for (int s = 0; s < aut.state_count(); ++s) leaf[s] = viable[s] ? 1 : 0;
  // layer[p] is the possible set at a vertex in state p with the current
  // remaining height.
  std::vector<StateSet> layer(q, leaf);
  std::vector<const StateSet*> kids(k);
  for (int h = 1; h <= n; ++h) {
    std::vector<StateSet> next(q);
    for (int p = 0; p < q; ++p) {
      for (int x = 0; x < k; ++x)
        kids[x] = &layer[g.section_of(p, static_cast<Letter>(x))];
      next[p] = Possible(aut, g.label_of(p), kids);
    }
    layer = std::move(next);
  }
  return !Empty(layer[0]);
}

TruncatedRun GraftRun(const Automaton& aut, const TruncatedElement& a,
                      const TruncatedRun& run_a, const TruncatedElement& b,
                      const TruncatedRun& run_b, const Word& v) {
  const int depth = a.depth() + 1;
  if (static_cast<int>(v.size()) > a.depth())
    throw InputError("graft word deeper than element");
  if (run_a.depth < depth)
    throw InputError("run for a must cover X^[" + std::to_string(depth) + "]");
  if (run_b.depth < depth - static_cast<int>(v.size()))
    throw InputError("run for b too shallow");
  if (!RunIsValid(aut, a, run_a)) throw InputError("run for a is not a run");
  if (!RunIsValid(aut, b, run_b)) throw InputError("run for b is not a run");
  if (a.label(v) != b.label(Word()))
    throw InputError("graft hypothesis failed: label of a at v differs from "
                     "root label of b");
  if (run_a.at(v) != run_b.at(Word()))
    throw InputError("graft hypothesis failed: run_a(v) differs from "
                     "run_b(e)");
  const TruncatedElement grafted = Graft(a, b, v);
  TruncatedRun out{run_a.arity, depth, {}};
  const TreeLayout lay = out.layout();
  const TreeLayout la = run_a.layout();
  const TreeLayout lb = run_b.layout();
  out.states.resize(lay.vertex_count());
  for (std::size_t i = 0; i < lay.vertex_count(); ++i) {
    const Word w = lay.WordAt(i);
    out.states[i] = v.IsPrefixOf(w)
                        ? run_b.states[lb.IndexOf(w.Suffix(v.size()))]
                        : run_a.states[la.IndexOf(w)];
  }
  Word bad;
  if (!RunIsValid(aut, grafted, out, &bad))
    throw Error(ErrorCode::kInconsistency,
                "grafted run violates a bundle at " + bad.ToString());
  return out;
}

RabinAutomaton BuchiToRabin(const BuchiAutomaton& b) {
  const int n = b.base.state_count();
  if (n > 20) throw InputError("too many states to list accepting sets");
  std::vector<std::vector<int>> sets;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> set;
    bool meets = false;
    for (int s = 0; s < n; ++s) {
      if (!(mask >> s & 1u)) continue;
      set.push_back(s);
      meets = meets || std::binary_search(b.accepting.begin(),
                                          b.accepting.end(), s);
    }
    if (meets) sets.push_back(std::move(set));
  }
  return MakeRabin(b.base, b.initial, std::move(sets));
}

BuchiAutomaton UnrestrictedToBuchi(const Automaton& aut) {
  std::vector<int> all(aut.state_count());
  for (int s = 0; s < aut.state_count(); ++s) all[s] = s;
  return MakeBuchi(aut, all, all);
}

std::vector<bool> CyclicStates(const FsElement& g) {
  const int n = static_cast<int>(g.state_count());
  const int k = g.signature()->arity();
  std::vector<bool> cyclic(n, false);
  for (int s = 0; s < n; ++s) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack;
    for (int x = 0; x < k; ++x) {
      const int t = g.section_of(s, static_cast<Letter>(x));
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
    while (!stack.empty() && !seen[s]) {
      const int p = stack.back();
      stack.pop_back();
      for (int x = 0; x < k; ++x) {
        const int t = g.section_of(p, static_cast<Letter>(x));
        if (!seen[t]) {
          seen[t] = true;
          stack.push_back(t);
        }
      }
    }
    cyclic[s] = seen[s];
  }
  return cyclic;
}

bool DecideEventuallyInSubgroup(const FsElement& g,
                                const std::vector<Label>& subgroup) {
  if (auto err = g.signature()->CheckSubgroup(subgroup))
    throw InputError("B is not a subgroup: " + *err);
  const int n = static_cast<int>(g.state_count());
  const int k = g.signature()->arity();
  const std::vector<bool> cyclic = CyclicStates(g);
  std::vector<bool> reach(n, false);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s)
    if (cyclic[s]) {
      reach[s] = true;
      stack.push_back(s);
    }
  while (!stack.empty()) {
    const int p = stack.back();
    stack.pop_back();
    for (int x = 0; x < k; ++x) {
      const int t = g.section_of(p, static_cast<Letter>(x));
      if (!reach[t]) {
        reach[t] = true;
        stack.push_back(t);
      }
    }
  }
  for (int s = 0; s < n; ++s)
    if (reach[s] && std::find(subgroup.begin(), subgroup.end(),
                              g.label_of(s)) == subgroup.end())
      return false;
  return true;
}

bool DecideFinitelySupportedRays(const FsElement& g) {
  const std::vector<bool> cyclic = CyclicStates(g);
  const Label e = g.signature()->identity();
  for (std::size_t s = 0; s < cyclic.size(); ++s)
    if (cyclic[s] && g.label_of(static_cast<int>(s)) != e) return false;
  return true;
}

}  // namespace treeshift

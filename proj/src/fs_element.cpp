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

#include <deque>
#include <map>
#include <utility>

#include "treeshift/elements.hpp"

namespace treeshift {

namespace {

void RequireLetters(const Word& w, int k) {
  for (Letter x : w.letters())
    if (x >= k)
      throw InputError("letter " + std::to_string(x) + " outside alphabet of size " +
                       std::to_string(k));
}

// Moore partition refinement followed by breadth-first renumbering from the
// initial state. The result is a unique presentation of the portrait.
std::vector<FsState> Canonicalize(const Signature& sig,
                                  const std::vector<FsState>& states,
                                  int initial) {
  const int k = sig.arity();
  const int n = static_cast<int>(states.size());

  std::vector<int> reach_id(n, -1);
  std::vector<int> order;
  reach_id[initial] = 0;
  order.push_back(initial);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int t : states[order[i]].sections)
      if (reach_id[t] < 0) {
        reach_id[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
  const int m = static_cast<int>(order.size());

  std::vector<int> cls(m);
  for (int i = 0; i < m; ++i) cls[i] = states[order[i]].label;
  int classes = -1;
  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> next(m);
    for (int i = 0; i < m; ++i) {
      std::vector<int> key;
      key.reserve(k + 1);
      key.push_back(cls[i]);
      for (int t : states[order[i]].sections) key.push_back(cls[reach_id[t]]);
      auto [it, fresh] = ids.emplace(std::move(key), static_cast<int>(ids.size()));
      next[i] = it->second;
    }
    const int count = static_cast<int>(ids.size());
    cls = std::move(next);
    if (count == classes) break;
    classes = count;
  }

  std::vector<int> rep(classes, -1);
  for (int i = 0; i < m; ++i)
    if (rep[cls[i]] < 0) rep[cls[i]] = i;

  std::vector<int> canon(classes, -1);
  std::vector<int> queue{cls[0]};
  canon[cls[0]] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const FsState& s = states[order[rep[queue[i]]]];
    for (int t : s.sections) {
      int c = cls[reach_id[t]];
      if (canon[c] < 0) {
        canon[c] = static_cast<int>(queue.size());
        queue.push_back(c);
      }
    }
  }
  std::vector<FsState> out(queue.size());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const FsState& s = states[order[rep[queue[i]]]];
    out[i].label = s.label;
    out[i].sections.resize(k);
    for (int x = 0; x < k; ++x)
      out[i].sections[x] = canon[cls[reach_id[s.sections[x]]]];
  }
  return out;
}

}  // namespace

FsElement::FsElement(SignaturePtr sig, std::vector<FsState> states,
                     int initial)
    : sig_(std::move(sig)) {
  if (!sig_) throw InputError("missing signature");
  const int n = static_cast<int>(states.size());
  if (n == 0) throw InputError("finite-state element needs at least one state");
  if (initial < 0 || initial >= n)
    throw InputError("initial state out of range");
  for (int q = 0; q < n; ++q) {
    if (states[q].label >= sig_->order())
      throw InputError("state " + std::to_string(q) + " has label out of range");
    if (static_cast<int>(states[q].sections.size()) != sig_->arity())
      throw InputError("state " + std::to_string(q) + " has " +
                       std::to_string(states[q].sections.size()) +
                       " sections, expected " + std::to_string(sig_->arity()));
    for (int t : states[q].sections)
      if (t < 0 || t >= n)
        throw InputError("state " + std::to_string(q) +
                         " has a section out of range");
  }
  states_ = Canonicalize(*sig_, states, initial);
}

FsElement FsElement::Identity(SignaturePtr sig) {
  const int k = sig->arity();
  const Label e = sig->identity();
  return FsElement(std::move(sig), {FsState{e, std::vector<int>(k, 0)}}, 0);
}

FsElement FsElement::Finitary(const TruncatedElement& g) {
  const int k = g.signature()->arity();
  const TreeLayout lay = g.layout();
  const int n = static_cast<int>(lay.vertex_count());
  std::vector<FsState> states(n + 1);
  states[n] = FsState{g.signature()->identity(), std::vector<int>(k, n)};
  for (int level = 0; level <= g.depth(); ++level)
    for (std::size_t r = 0; r < lay.level_size(level); ++r) {
      const std::size_t i = lay.level_offset(level) + r;
      states[i].label = g.label_at(i);
      states[i].sections.resize(k);
      for (int x = 0; x < k; ++x)
        states[i].sections[x] =
            level < g.depth() ? static_cast<int>(lay.child(level, r, x)) : n;
    }
  return FsElement(g.signature(), std::move(states), 0);
}

int FsElement::StateAt(const Word& w) const {
  RequireLetters(w, sig_->arity());
  int q = 0;
  for (Letter x : w.letters()) q = states_[q].sections[x];
  return q;
}

bool FsElement::IsIdentity() const {
  return states_.size() == 1 && states_[0].label == sig_->identity();
}

bool FsElement::operator==(const FsElement& other) const {
  if (!sig_->SameAs(*other.sig_) || states_.size() != other.states_.size())
    return false;
  for (std::size_t i = 0; i < states_.size(); ++i)
    if (states_[i].label != other.states_[i].label ||
        states_[i].sections != other.states_[i].sections)
      return false;
  return true;
}

TruncatedElement Truncate(const FsElement& g, int n) {
  if (n < 0) throw InputError("truncation depth must be nonnegative");
  const int k = g.signature()->arity();
  const TreeLayout lay(k, n);
  std::vector<Label> labels(lay.vertex_count());
  std::vector<int> level_states{0};
  for (int level = 0; level <= n; ++level) {
    const std::size_t off = lay.level_offset(level);
    std::vector<int> next;
    if (level < n) next.resize(level_states.size() * k);
    for (std::size_t r = 0; r < level_states.size(); ++r) {
      labels[off + r] = g.label_of(level_states[r]);
      if (level < n)
        for (int x = 0; x < k; ++x)
          next[r * k + x] = g.section_of(level_states[r], static_cast<Letter>(x));
    }
    level_states = std::move(next);
  }
  return TruncatedElement(g.signature(), n, std::move(labels));
}

FsElement Multiply(const FsElement& g, const FsElement& h) {
  RequireSameSignature(*g.signature(), *h.signature());
  const Signature& sig = *g.signature();
  const int k = sig.arity();
  // Product state (p, q) has label l(p) l(q) and section on x equal to
  // (p's section on l(q)(x), q's section on x).
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> pairs;
  std::vector<FsState> states;
  auto intern = [&](std::pair<int, int> pq) {
    auto [it, fresh] = index.emplace(pq, static_cast<int>(pairs.size()));
    if (fresh) pairs.push_back(pq);
    return it->second;
  };
  intern({0, 0});
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [p, q] = pairs[i];
    const Label lq = h.label_of(q);
    FsState s{sig.Mul(g.label_of(p), lq), std::vector<int>(k)};
    for (int x = 0; x < k; ++x) {
      const Letter y = sig.Act(lq, static_cast<Letter>(x));
      s.sections[x] = intern({g.section_of(p, y), h.section_of(q, static_cast<Letter>(x))});
    }
    states.push_back(std::move(s));
  }
  return FsElement(g.signature(), std::move(states), 0);
}

FsElement Inverse(const FsElement& g) {
  const Signature& sig = *g.signature();
  const int k = sig.arity();
  std::vector<FsState> states(g.state_count());
  for (std::size_t q = 0; q < g.state_count(); ++q) {
    const Label inv = sig.Inv(g.label_of(static_cast<int>(q)));
    states[q].label = inv;
    states[q].sections.resize(k);
    for (int x = 0; x < k; ++x)
      states[q].sections[x] =
          g.section_of(static_cast<int>(q), sig.Act(inv, static_cast<Letter>(x)));
  }
  return FsElement(g.signature(), std::move(states), 0);
}

FsElement Power(const FsElement& g, long long e) {
  FsElement base = e < 0 ? Inverse(g) : g;
  unsigned long long n = e < 0 ? -static_cast<unsigned long long>(e) : e;
  FsElement acc = FsElement::Identity(g.signature());
  while (n > 0) {
    if (n & 1) acc = Multiply(acc, base);
    n >>= 1;
    if (n > 0) base = Multiply(base, base);
  }
  return acc;
}

FsElement Conjugate(const FsElement& h, const FsElement& g) {
  RequireSameSignature(*h.signature(), *g.signature());
  return Multiply(Multiply(Inverse(g), h), g);
}

Word Act(const FsElement& g, const Word& w) {
  const Signature& sig = *g.signature();
  RequireLetters(w, sig.arity());
  std::vector<Letter> out(w.size());
  int q = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[i] = sig.Act(g.label_of(q), w[i]);
    q = g.section_of(q, w[i]);
  }
  return Word(std::move(out));
}

Word ActInverse(const FsElement& g, const Word& w) {
  const Signature& sig = *g.signature();
  RequireLetters(w, sig.arity());
  std::vector<Letter> out(w.size());
  int q = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[i] = sig.ActInv(g.label_of(q), w[i]);
    q = g.section_of(q, out[i]);
  }
  return Word(std::move(out));
}

FsElement Section(const FsElement& g, const Word& w) {
  return FsElement(g.signature(), g.states(), g.StateAt(w));
}

FsElement Delta(const Word& v, const FsElement& g) {
  const Signature& sig = *g.signature();
  RequireLetters(v, sig.arity());
  const int k = sig.arity();
  // g's states, then the identity sink, then one chain state per letter of v.
  std::vector<FsState> states = g.states();
  const int sink = static_cast<int>(states.size());
  states.push_back(FsState{sig.identity(), std::vector<int>(k, sink)});
  const int chain = static_cast<int>(states.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    FsState s{sig.identity(), std::vector<int>(k, sink)};
    s.sections[v[i]] = i + 1 < v.size() ? chain + static_cast<int>(i) + 1 : 0;
    states.push_back(std::move(s));
  }
  const int initial = v.empty() ? 0 : chain;
  return FsElement(g.signature(), std::move(states), initial);
}

bool StabilizesLevel(const FsElement& g, int n) {
  if (n < 0) throw InputError("negative level");
  return StabilizesLevel(Truncate(g, std::max(0, n - 1)), n);
}

Distance DistanceBetween(const FsElement& f, const FsElement& g,
                         int max_depth) {
  RequireSameSignature(*f.signature(), *g.signature());
  if (max_depth < 0) throw InputError("negative max_depth");
  if (f == g) return Distance::Zero();
  const int k = f.signature()->arity();
  // Breadth-first over the synchronous product; the first level holding a
  // pair with different labels is the first differing level.
  std::map<std::pair<int, int>, bool> seen;
  std::vector<std::pair<int, int>> frontier{{0, 0}};
  seen[{0, 0}] = true;
  for (int level = 0; level <= max_depth && !frontier.empty(); ++level) {
    std::vector<std::pair<int, int>> next;
    for (auto [p, q] : frontier) {
      if (f.label_of(p) != g.label_of(q)) return Distance::Exact(level);
      for (int x = 0; x < k; ++x) {
        std::pair<int, int> pq{f.section_of(p, static_cast<Letter>(x)),
                               g.section_of(q, static_cast<Letter>(x))};
        if (seen.emplace(pq, true).second) next.push_back(pq);
      }
    }
    frontier = std::move(next);
  }
  return Distance::AtMost(max_depth + 1);
}

}  // namespace treeshift

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

#include "treeshift/analysis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "treeshift/presets.hpp"

namespace treeshift {

TransitivityReport IsLevelTransitive(const LevelQuotient& q) {
  q.RequireComplete();
  const int k = q.signature()->arity();
  TransitivityReport rep;
  for (int m = 1; m <= q.size(); ++m) {
    BigCount level_size(1);
    for (int i = 0; i < m; ++i) level_size = level_size * BigCount(k);
    if (level_size > BigCount(q.cap()))
      throw CapError("level " + std::to_string(m) + " has more than " +
                     std::to_string(q.cap()) + " words");
    std::set<Word> orbit{Word(std::vector<Letter>(m, 0))};
    std::deque<Word> todo(orbit.begin(), orbit.end());
    while (!todo.empty()) {
      const Word w = todo.front();
      todo.pop_front();
      for (const TruncatedElement& g : q.generator_images()) {
        Word img = Act(g, w);
        if (orbit.insert(img).second) todo.push_back(std::move(img));
      }
    }
    rep.orbit_size = orbit.size();
    if (BigCount(orbit.size()) != level_size) {
      rep.transitive = false;
      rep.failing_level = m;
      return rep;
    }
  }
  return rep;
}

SelfReplicationReport IsSelfReplicatingAt(SignaturePtr sig,
                                          const std::vector<FsElement>& gens,
                                          int n, std::size_t cap) {
  if (n < 2) throw InputError("self-replication needs n >= 2");
  const LevelQuotient upper = EnumerateQuotient(sig, gens, n, cap);
  const LevelQuotient lower = EnumerateQuotient(sig, gens, n - 1, cap);
  upper.RequireComplete();
  lower.RequireComplete();
  SelfReplicationReport rep;
  for (int x = 0; x < sig->arity(); ++x) {
    const Word letter{x};
    std::set<std::vector<Label>> sections;
    for (const TruncatedElement& g : upper.elements())
      if (Act(g, letter) == letter) sections.insert(Section(g, letter).labels());
    for (const TruncatedElement& h : lower.elements()) {
      if (!sections.count(h.labels())) {
        rep.replicating = false;
        rep.letter = x;
        rep.missing = h;
        return rep;
      }
    }
  }
  return rep;
}

namespace {

// The element with trivial root label and sections parts[x].
TruncatedElement AssembleTuple(const std::vector<const TruncatedElement*>& parts) {
  const SignaturePtr& sig = parts[0]->signature();
  const int k = sig->arity();
  const int d = parts[0]->depth();
  std::vector<Label> labels{sig->identity()};
  std::size_t offset = 0;
  std::size_t width = 1;
  for (int level = 0; level <= d; ++level) {
    for (int x = 0; x < k; ++x)
      labels.insert(labels.end(), parts[x]->labels().begin() + offset,
                    parts[x]->labels().begin() + offset + width);
    offset += width;
    width *= k;
  }
  return TruncatedElement(sig, d + 1, std::move(labels));
}

}  // namespace

BranchCertificate CheckBranching(SignaturePtr sig,
                                 const std::vector<FsElement>& gens, int level,
                                 int n, std::size_t cap) {
  if (level < 0) throw InputError("branching level must be nonnegative");
  if (n < 2 || n < level + 1)
    throw InputError("verification depth must satisfy n >= 2 and n >= level + 1");
  const int k = sig->arity();
  const LevelChain upper(sig, gens, n);
  const LevelChain lower(sig, gens, n - 1);
  BranchCertificate cert;
  cert.level = level;
  cert.depth = n;
  cert.triv_order = lower.TrivOrder(level);
  std::vector<TruncatedElement> checked;
  if (auto all = lower.TrivElements(level, cap)) {
    cert.mode = "exhaustive";
    checked = std::move(*all);
  } else {
    cert.mode = "generators";
    checked = lower.TrivGenerators(level);
  }

  bool delta_pass = true;
  for (const TruncatedElement& g : checked) {
    ++cert.checked;
    for (int x = 0; x < k && delta_pass; ++x) {
      TruncatedElement lifted = Delta(Word{x}, g);
      if (!upper.Contains(lifted)) {
        delta_pass = false;
        cert.witness = BranchWitness{g, x, std::move(lifted)};
      }
    }
    if (!delta_pass) break;
  }

  // Tuple form, assembled label by label rather than through Delta.
  bool tuple_pass = true;
  const TruncatedElement e = TruncatedElement::Identity(sig, n - 2);
  std::vector<const TruncatedElement*> parts(k, &e);
  BigCount tuple_count(1);
  for (int x = 0; x < k; ++x) tuple_count = tuple_count * BigCount(checked.size());
  if (cert.mode == "exhaustive" && tuple_count <= BigCount(cap)) {
    cert.tuple_mode = "all tuples";
    std::vector<std::size_t> pick(k, 0);
    while (tuple_pass) {
      for (int x = 0; x < k; ++x) parts[x] = &checked[pick[x]];
      ++cert.tuples_checked;
      tuple_pass = upper.Contains(AssembleTuple(parts));
      int x = k - 1;
      while (x >= 0 && ++pick[x] == checked.size()) pick[x--] = 0;
      if (x < 0) break;
    }
  } else {
    cert.tuple_mode = "coordinate and diagonal tuples";
    for (const TruncatedElement& g : checked) {
      for (int x = 0; x <= k && tuple_pass; ++x) {
        for (int y = 0; y < k; ++y)
          parts[y] = (x == k || x == y) ? &g : &e;
        ++cert.tuples_checked;
        tuple_pass = upper.Contains(AssembleTuple(parts));
      }
      if (!tuple_pass) break;
    }
  }
  if (tuple_pass != delta_pass)
    throw Error(ErrorCode::kInconsistency,
                "tuple-form and delta-form branching disagree at level " +
                    std::to_string(level) + ", depth " + std::to_string(n));
  cert.pass = delta_pass;
  return cert;
}

BranchSearch FindBranchingLevel(SignaturePtr sig,
                                const std::vector<FsElement>& gens,
                                int max_level, std::size_t cap) {
  BranchSearch out;
  for (int level = 0; level <= max_level; ++level) {
    bool pass = true;
    for (int n = level + 2; n <= level + 4 && pass; ++n) {
      out.attempts.push_back(CheckBranching(sig, gens, level, n, cap));
      pass = out.attempts.back().pass;
    }
    if (pass) {
      out.level = level;
      out.pattern_size = level + 1;
      return out;
    }
  }
  return out;
}

int KOf(const TruncatedRun& run, int state_count) {
  if (state_count < 1) throw InputError("automaton has no states");
  if (run.depth < 2 * state_count)
    throw InputError("run depth " + std::to_string(run.depth) +
                     " is below 2N = " + std::to_string(2 * state_count));
  const TreeLayout lay = run.layout();
  const int k = run.arity;
  // repeats[i]: the path from the root to vertex i visits some state twice.
  std::vector<char> repeats(lay.vertex_count(), 0);
  std::vector<std::vector<char>> seen(lay.vertex_count());
  seen[0].assign(state_count, 0);
  seen[0][run.states[0]] = 1;
  std::vector<bool> all_repeat(run.depth + 1, true);
  all_repeat[0] = false;
  std::vector<std::size_t> image(run.depth + 1);
  std::vector<char> in_image(state_count, 0);
  std::size_t image_size = 1;
  in_image[run.states[0]] = 1;
  image[0] = 1;
  for (int level = 0; level < run.depth; ++level) {
    for (std::size_t r = 0; r < lay.level_size(level); ++r) {
      const std::size_t i = lay.level_offset(level) + r;
      for (int x = 0; x < k; ++x) {
        const std::size_t c = lay.child(level, r, x);
        const int q = run.states[c];
        seen[c] = seen[i];
        repeats[c] = repeats[i] || seen[c][q];
        seen[c][q] = 1;
        if (!repeats[c]) all_repeat[level + 1] = false;
        if (!in_image[q]) {
          in_image[q] = 1;
          ++image_size;
        }
      }
      seen[i].clear();
      seen[i].shrink_to_fit();
    }
    image[level + 1] = image_size;
  }
  for (int m = 1; m < run.depth; ++m)
    if (all_repeat[m] && image[m] == image[m + 1]) return m;
  throw Error(ErrorCode::kInconsistency,
              "no k <= " + std::to_string(run.depth - 1) +
                  " satisfies the pigeonhole conditions");
}

TruncatedRun IdentityRun(const Automaton& aut, const TruncatedElement& g,
                         const TruncatedRun& run, int k) {
  RequireSameSignature(*aut.signature(), *g.signature());
  const int n2 = 2 * aut.state_count();
  if (g.depth() < n2 - 1 || !InTriv(g, n2))
    throw InputError("element must be trivial on X^(" + std::to_string(n2) +
                     ")");
  if (k < 1 || run.depth < k + 1)
    throw InputError("run depth must exceed k >= 1");
  Word where;
  if (!RunIsValid(aut, g, run, &where))
    throw InputError("run violates the bundles at " + where.ToString());
  const TreeLayout lay = run.layout();
  const std::size_t upto_k = lay.level_offset(k + 1);
  const std::size_t upto_k1 = lay.level_offset(k + 1) + lay.level_size(k + 1);
  std::map<int, std::size_t> beta;  // state -> first index in X^[k]
  for (std::size_t i = 0; i < upto_k; ++i) beta.emplace(run.states[i], i);
  for (std::size_t i = upto_k; i < upto_k1; ++i)
    if (!beta.count(run.states[i]))
      throw InputError("state image is not stabilized at k = " +
                       std::to_string(k));
  TruncatedRun out = run;
  for (int level = k; level < run.depth; ++level) {
    for (std::size_t r = 0; r < lay.level_size(level); ++r) {
      const std::size_t i = lay.level_offset(level) + r;
      const std::size_t b = beta.at(out.states[i]);
      const int blevel = lay.LevelOf(b);
      const std::size_t brank = b - lay.level_offset(blevel);
      for (int x = 0; x < run.arity; ++x)
        out.states[lay.child(level, r, x)] =
            run.states[lay.child(blevel, brank, x)];
    }
  }
  const TruncatedElement id =
      TruncatedElement::Identity(aut.signature(), run.depth - 1);
  if (!RunIsValid(aut, id, out, &where))
    throw Error(ErrorCode::kInconsistency,
                "identity run violates the bundles at " + where.ToString());
  return out;
}

std::vector<Word> BuildCg(const TruncatedRun& run, int k) {
  if (k < 0 || k > run.depth) throw InputError("k outside the run");
  std::set<Word> mu;
  for (const Word& w : EnumerateWords(run.arity, k, WordSet::kLevel)) {
    std::map<int, int> first;  // state -> prefix length of first visit
    std::optional<int> at;
    for (int i = 0; i <= k && !at; ++i) {
      auto [it, fresh] = first.emplace(run.at(w.Prefix(i)), i);
      if (!fresh) at = it->second;
    }
    if (!at)
      throw InputError("no state repeats along " + w.ToString() +
                       " within X^[" + std::to_string(k) + "]");
    mu.insert(w.Prefix(*at));
  }
  std::vector<Word> out;
  for (const Word& u : mu) {
    bool minimal = true;
    for (std::size_t len = 0; len < u.size() && minimal; ++len)
      minimal = !mu.count(u.Prefix(len));
    if (minimal) out.push_back(u);
  }
  return out;
}

bool IsAntichain(const std::vector<Word>& words) {
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j)
      if (i != j && words[i].IsPrefixOf(words[j])) return false;
  return true;
}

bool CoversLevel(const std::vector<Word>& words, int arity, int level) {
  for (const Word& w : EnumerateWords(arity, level, WordSet::kLevel)) {
    const bool covered =
        std::any_of(words.begin(), words.end(),
                    [&](const Word& c) { return c.IsPrefixOf(w); });
    if (!covered) return false;
  }
  return true;
}

DecompositionReport DecomposeOverCg(const TruncatedElement& g,
                                    const std::vector<Word>& antichain) {
  if (antichain.empty()) throw InputError("empty antichain");
  if (!IsAntichain(antichain)) throw InputError("words do not form an antichain");
  std::size_t longest = 0;
  for (const Word& c : antichain) longest = std::max(longest, c.size());
  if (static_cast<int>(longest) > g.depth())
    throw InputError("antichain reaches below the truncation depth");
  const int k = g.signature()->arity();
  if (!CoversLevel(antichain, k, static_cast<int>(longest)))
    throw InputError("antichain does not cover X^" + std::to_string(longest));
  const Label e = g.signature()->identity();
  for (const Word& c : antichain)
    for (std::size_t len = 0; len < c.size(); ++len)
      if (g.label(c.Prefix(len)) != e)
        throw InputError("nontrivial label at " + c.Prefix(len).ToString() +
                         " above the antichain");
  std::vector<Word> sorted = antichain;
  std::sort(sorted.begin(), sorted.end());
  auto product = [&](auto begin, auto end) {
    TruncatedElement p = TruncatedElement::Identity(g.signature(), g.depth());
    for (auto it = begin; it != end; ++it)
      p = Multiply(p, Delta(*it, Section(g, *it)));
    return p;
  };
  TruncatedElement forward = product(sorted.begin(), sorted.end());
  const TruncatedElement backward = product(sorted.rbegin(), sorted.rend());
  const bool holds = forward == g;
  const bool same = forward == backward;
  return DecompositionReport{holds, same, std::move(forward)};
}

MovementReport MovementCheck(const TruncatedElement& h, const Word& u,
                             const TruncatedElement& g) {
  RequireSameSignature(*h.signature(), *g.signature());
  if (h.depth() + static_cast<int>(u.size()) != g.depth())
    throw InputError("depth(h) + |u| must equal depth(g)");
  Word v = ActInverse(g, u);
  TruncatedElement lhs = Conjugate(Delta(u, h), g);
  TruncatedElement rhs = Delta(v, Conjugate(h, Section(g, v)));
  const bool holds = lhs == rhs;
  return MovementReport{std::move(v), std::move(lhs), std::move(rhs), holds};
}

MovementReport MovementCheck(const FsElement& h, const Word& u,
                             const FsElement& g, int depth) {
  RequireSameSignature(*h.signature(), *g.signature());
  if (depth < static_cast<int>(u.size()))
    throw InputError("depth must be at least |u|");
  Word v = ActInverse(g, u);
  TruncatedElement lhs = Truncate(Conjugate(Delta(u, h), g), depth);
  TruncatedElement rhs =
      Truncate(Delta(v, Conjugate(h, Section(g, v))), depth);
  const bool holds = lhs == rhs;
  return MovementReport{std::move(v), std::move(lhs), std::move(rhs), holds};
}

OdometerWitnessReport OdometerWitness(int n, std::size_t cap) {
  if (n < 1 || n > 5) throw InputError("n must lie in [1, 5]");
  const FsElement a = OdometerElement();
  const SignaturePtr& sig = a.signature();
  FsElement g = Delta(Word{1}, Power(a, 1LL << n));
  const LevelQuotient allowed = EnumerateQuotient(sig, {a}, n + 1, cap);
  allowed.RequireComplete();
  bool part_a = true;
  for (std::size_t p = 0; p < g.state_count() && part_a; ++p) {
    const FsElement state(sig, g.states(), static_cast<int>(p));
    part_a = allowed.Contains(Truncate(state, n));
  }
  const LevelQuotient next = EnumerateQuotient(sig, {a}, n + 2, cap);
  next.RequireComplete();
  TruncatedElement block = Truncate(g, n + 1);
  const bool part_b = !next.Contains(block);
  const std::size_t states = g.state_count();
  return OdometerWitnessReport{n,      std::move(g),    allowed.order(),
                               states, part_a,          part_b,
                               std::move(block),        next.order()};
}

}  // namespace treeshift

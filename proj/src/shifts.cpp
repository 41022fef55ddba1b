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

#include "treeshift/shifts.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace treeshift {

namespace {

// Labels of the size-(size - 1) subtree below letter x.
BlockLabels SubtreeOf(const BlockLabels& block, int k, int size, int x) {
  BlockLabels out;
  std::size_t offset = 1;
  std::size_t width = 1;
  for (int level = 1; level < size; ++level) {
    const std::size_t start = offset + x * width;
    out.insert(out.end(), block.begin() + start, block.begin() + start + width);
    offset += width * k;
    width *= k;
  }
  return out;
}

// The size-m top of a block: a prefix in layout order.
BlockLabels TopOf(const BlockLabels& block, int k, int m) {
  return BlockLabels(block.begin(), block.begin() + TreeSize(k, m - 1));
}

BlockLabels Assemble(Label root, const std::vector<const BlockLabels*>& kids,
                     int k, int size) {
  BlockLabels out{root};
  std::size_t offset = 0;
  std::size_t width = 1;
  for (int level = 1; level < size; ++level) {
    for (int x = 0; x < k; ++x)
      out.insert(out.end(), kids[x]->begin() + offset,
                 kids[x]->begin() + offset + width);
    offset += width;
    width *= k;
  }
  return out;
}

void RequireBlock(const Signature& sig, int size, const BlockLabels& b) {
  if (b.size() != TreeSize(sig.arity(), size - 1))
    throw InputError("block has " + std::to_string(b.size()) +
                     " labels, expected " +
                     std::to_string(TreeSize(sig.arity(), size - 1)));
  for (Label a : b)
    if (a >= sig.order()) throw InputError("block label out of range");
}

std::string BlockName(const Signature& sig, const BlockLabels& b) {
  if (b.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i > 0) out += ' ';
    out += sig.LabelName(b[i]);
  }
  return out;
}

}  // namespace

SftDefinition MakeSft(SignaturePtr sig, int block_size,
                      std::set<BlockLabels> forbidden) {
  if (block_size < 1) throw InputError("block size must be at least 1");
  for (const BlockLabels& b : forbidden) RequireBlock(*sig, block_size, b);
  return SftDefinition{std::move(sig), block_size, std::move(forbidden)};
}

BigCount CountAllBlocks(const Signature& sig, int size) {
  BigCount r(1);
  for (std::size_t i = 0; i < TreeSize(sig.arity(), size - 1); ++i)
    r = r * BigCount(sig.order());
  return r;
}

std::vector<BlockLabels> AllBlocks(const Signature& sig, int size,
                                   std::size_t cap) {
  if (CountAllBlocks(sig, size) > BigCount(cap))
    throw CapError("more than " + std::to_string(cap) + " blocks of size " +
                   std::to_string(size));
  const std::size_t len = TreeSize(sig.arity(), size - 1);
  std::vector<BlockLabels> out;
  BlockLabels cur(len, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = len;
    while (i > 0 && ++cur[i - 1] == sig.order()) cur[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

AllowedBlockSet AllowedWindows(const SftDefinition& def, std::size_t cap) {
  AllowedBlockSet out{def.signature, def.block_size, {}};
  for (BlockLabels& b : AllBlocks(*def.signature, def.block_size, cap))
    if (!def.forbidden.count(b)) out.blocks.insert(std::move(b));
  return out;
}

SftDefinition ForbiddenComplement(const AllowedBlockSet& allowed,
                                  std::size_t cap) {
  SftDefinition out{allowed.signature, allowed.block_size, {}};
  for (BlockLabels& b : AllBlocks(*allowed.signature, allowed.block_size, cap))
    if (!allowed.blocks.count(b)) out.forbidden.insert(std::move(b));
  return out;
}

namespace {

// Calls visit(window) for the size-s window at every vertex w with
// |w| <= depth - (s - 1); stops early when visit returns false.
bool ForEachWindow(const TruncatedElement& g, int s, int depth,
                   const std::function<bool(const BlockLabels&)>& visit) {
  const int k = g.signature()->arity();
  const int top = depth - (s - 1);
  const TreeLayout lay = g.layout();
  BlockLabels window;
  for (int level = 0; level <= top; ++level) {
    for (std::size_t r = 0; r < lay.level_size(level); ++r) {
      window.clear();
      std::size_t rank = r;
      std::size_t width = 1;
      for (int j = 0; j < s; ++j) {
        const std::size_t start = lay.level_offset(level + j) + rank;
        window.insert(window.end(), g.labels().begin() + start,
                      g.labels().begin() + start + width);
        rank *= k;
        width *= k;
      }
      if (!visit(window)) return false;
    }
  }
  return true;
}

}  // namespace

bool SftAvoids(const SftDefinition& def, const TruncatedElement& g,
               int depth) {
  RequireSameSignature(*def.signature, *g.signature());
  if (depth < def.block_size - 1)
    throw InputError("depth " + std::to_string(depth) +
                     " too small for blocks of size " +
                     std::to_string(def.block_size));
  if (depth > g.depth()) throw InputError("depth exceeds truncation depth");
  return ForEachWindow(g, def.block_size, depth, [&](const BlockLabels& w) {
    return def.forbidden.count(w) == 0;
  });
}

bool SftAvoids(const SftDefinition& def, const FsElement& g, int depth) {
  return SftAvoids(def, Truncate(g, depth), depth);
}

bool IsAdmitted(const AllowedBlockSet& allowed, const TruncatedElement& block) {
  RequireSameSignature(*allowed.signature, *block.signature());
  if (block.depth() < allowed.block_size - 1) return true;
  return ForEachWindow(block, allowed.block_size, block.depth(),
                       [&](const BlockLabels& w) {
                         return allowed.blocks.count(w) > 0;
                       });
}

AllowedBlockSet AllowedBlocks(const LevelQuotient& q) {
  q.RequireComplete();
  AllowedBlockSet out{q.signature(), q.size(), {}};
  for (const TruncatedElement& g : q.elements()) out.blocks.insert(g.labels());
  return out;
}

SftDefinition SftFromGroup(const LevelQuotient& q, std::size_t cap) {
  return ForbiddenComplement(AllowedBlocks(q), cap);
}

namespace {

template <typename Value, typename Base, typename Combine, typename Merge>
std::map<BlockLabels, Value> AdmittedRecurrence(const AllowedBlockSet& allowed,
                                                int size, Base base,
                                                Combine combine, Merge merge) {
  const int s = allowed.block_size;
  const int k = allowed.signature->arity();
  if (size < s)
    throw InputError("block size " + std::to_string(size) +
                     " below pattern size " + std::to_string(s));
  // Children windows of each allowed window.
  struct Split {
    Label root;
    BlockLabels top;
    std::vector<BlockLabels> kids;
  };
  std::vector<Split> splits;
  std::map<BlockLabels, Value> level;
  for (const BlockLabels& w : allowed.blocks) {
    Split sp{w[0], TopOf(w, k, s - 1), {}};
    for (int x = 0; x < k; ++x) {
      sp.kids.push_back(SubtreeOf(w, k, s, x));
      // Height s - 1: every window of that size is its own block.
      if (!level.count(sp.kids.back()))
        level.emplace(sp.kids.back(), base(sp.kids.back()));
    }
    splits.push_back(std::move(sp));
  }
  for (int h = s; h <= size; ++h) {
    std::map<BlockLabels, Value> next;
    for (const Split& sp : splits) {
      std::vector<const Value*> kids(k);
      bool ok = true;
      for (int x = 0; x < k && ok; ++x) {
        auto it = level.find(sp.kids[x]);
        ok = it != level.end();
        if (ok) kids[x] = &it->second;
      }
      if (!ok) continue;
      Value v = combine(sp.root, kids, h);
      auto it = next.find(sp.top);
      if (it == next.end())
        next.emplace(sp.top, std::move(v));
      else
        merge(it->second, std::move(v));
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

BigCount CountAdmitted(const AllowedBlockSet& allowed, int size) {
  auto level = AdmittedRecurrence<BigCount>(
      allowed, size, [](const BlockLabels&) { return BigCount(1); },
      [](Label, const std::vector<const BigCount*>& kids, int) {
        BigCount c(1);
        for (const BigCount* p : kids) c = c * *p;
        return c;
      },
      [](BigCount& into, BigCount v) { into = into + v; });
  BigCount total;
  for (const auto& [top, c] : level) total = total + c;
  return total;
}

std::vector<TruncatedElement> EnumerateAdmitted(const AllowedBlockSet& allowed,
                                                int size, std::size_t cap) {
  const BigCount count = CountAdmitted(allowed, size);
  if (count > BigCount(cap))
    throw CapError(count.ToString() + " admitted blocks of size " +
                   std::to_string(size) + " exceed the cap of " +
                   std::to_string(cap));
  const int k = allowed.signature->arity();
  using List = std::vector<BlockLabels>;
  auto level = AdmittedRecurrence<List>(
      allowed, size, [](const BlockLabels& b) { return List{b}; },
      [k](Label root, const std::vector<const List*>& kids, int h) {
        List out;
        std::vector<std::size_t> pick(k, 0);
        std::vector<const BlockLabels*> chosen(k);
        if (std::any_of(kids.begin(), kids.end(),
                        [](const List* l) { return l->empty(); }))
          return out;
        while (true) {
          for (int x = 0; x < k; ++x) chosen[x] = &(*kids[x])[pick[x]];
          out.push_back(Assemble(root, chosen, k, h));
          int x = k - 1;
          while (x >= 0 && ++pick[x] == kids[x]->size()) pick[x--] = 0;
          if (x < 0) break;
        }
        return out;
      },
      [](List& into, List v) {
        into.insert(into.end(), std::make_move_iterator(v.begin()),
                    std::make_move_iterator(v.end()));
      });
  std::vector<BlockLabels> all;
  for (auto& [top, list] : level)
    all.insert(all.end(), std::make_move_iterator(list.begin()),
               std::make_move_iterator(list.end()));
  std::sort(all.begin(), all.end());
  std::vector<TruncatedElement> out;
  out.reserve(all.size());
  for (BlockLabels& b : all)
    out.emplace_back(allowed.signature, size - 1, std::move(b));
  return out;
}

Automaton SftToAutomaton(const AllowedBlockSet& allowed) {
  const Signature& sig = *allowed.signature;
  const int s = allowed.block_size;
  const int k = sig.arity();
  std::map<BlockLabels, int> index;
  auto state = [&](const BlockLabels& w) {
    auto [it, fresh] = index.emplace(w, static_cast<int>(index.size()));
    return it->second;
  };
  std::vector<Bundle> bundles;
  for (const BlockLabels& w : allowed.blocks) {
    Bundle b{state(TopOf(w, k, s - 1)), w[0], {}};
    for (int x = 0; x < k; ++x) b.to.push_back(state(SubtreeOf(w, k, s, x)));
    bundles.push_back(std::move(b));
  }
  if (index.empty()) index.emplace(BlockLabels{}, 0);
  std::vector<std::string> names(index.size());
  for (const auto& [w, i] : index) names[i] = "[" + BlockName(sig, w) + "]";
  return Automaton(allowed.signature, std::move(names), std::move(bundles));
}

bool GeneratorsSectionClosed(const std::vector<FsElement>& gens) {
  std::vector<FsElement> known;
  for (const FsElement& g : gens) {
    known.push_back(g);
    known.push_back(Inverse(g));
  }
  for (const FsElement& g : gens) {
    for (std::size_t p = 0; p < g.state_count(); ++p) {
      FsElement sec(g.signature(), g.states(), static_cast<int>(p));
      if (sec.IsIdentity()) continue;
      if (std::find(known.begin(), known.end(), sec) == known.end())
        return false;
    }
  }
  return true;
}

ClosureReport ClosureVsSft(SignaturePtr sig, const std::vector<FsElement>& gens,
                           int s, int depth, std::size_t cap) {
  if (s < 1) throw InputError("pattern size must be at least 1");
  if (depth < s - 1)
    throw InputError("depth must be at least pattern size - 1");
  ClosureReport rep;
  rep.pattern_size = s;
  rep.depth = depth;
  const LevelQuotient qs = EnumerateQuotient(sig, gens, s, cap);
  const AllowedBlockSet allowed = AllowedBlocks(qs);
  rep.allowed_count = BigCount(allowed.blocks.size());
  // Allowed blocks form a subset of all blocks, so this cannot underflow;
  // BigCount has no subtraction, hence the detour through u64 when possible.
  const BigCount total = CountAllBlocks(*sig, s);
  if (auto t = total.ToU64())
    rep.forbidden_count = BigCount(*t - allowed.blocks.size());
  const int n = depth + 1;
  const LevelChain chain(sig, gens, n);
  rep.quotient_order = chain.Order();
  rep.admitted_count = CountAdmitted(allowed, n);

  if (rep.quotient_order <= BigCount(cap)) {
    rep.inclusion = "enumerated";
    const LevelQuotient qn = EnumerateQuotient(sig, gens, n, cap);
    qn.RequireComplete();
    for (const TruncatedElement& g : qn.elements()) {
      if (!IsAdmitted(allowed, g)) {
        rep.counterexample_kind = "group-not-admitted";
        rep.counterexample = g;
        return rep;
      }
    }
  } else if (GeneratorsSectionClosed(gens)) {
    rep.inclusion = "self-similar generating set";
  } else {
    throw CapError("quotient of order " + rep.quotient_order.ToString() +
                   " exceeds the cap and the generators are not closed "
                   "under sections");
  }
  if (rep.admitted_count == rep.quotient_order) {
    rep.equal = true;
    return rep;
  }
  // The counts already decide the comparison; a witness block is only
  // searched for when the admitted blocks can be listed within the cap.
  rep.counterexample_kind = "admitted-not-in-group";
  if (rep.admitted_count > BigCount(cap)) return rep;
  for (const TruncatedElement& b : EnumerateAdmitted(allowed, n, cap)) {
    if (!chain.Contains(b)) {
      rep.counterexample = b;
      return rep;
    }
  }
  throw Error(ErrorCode::kInconsistency,
              "admitted count exceeds the quotient order but every admitted "
              "block lies in the quotient");
}

namespace {

class Approximator {
 public:
  Approximator(SignaturePtr sig, const std::vector<FsElement>& gens, int s)
      : sig_(std::move(sig)), gens_(gens), s_(s) {}

  const LevelChain& Chain(int size) {
    auto it = chains_.find(size);
    if (it == chains_.end())
      it = chains_.emplace(size, LevelChain(sig_, gens_, size)).first;
    return it->second;
  }

  TruncatedElement Induct(const TruncatedElement& t, int n) {
    const int d = t.depth();
    const LevelChain& chain = Chain(d + 1);
    if (n <= s_ - 1) {
      const TruncatedElement root = t.Restrict(std::min(s_ - 1, d));
      auto lift = chain.Lift(root);
      if (!lift)
        throw Error(ErrorCode::kInconsistency,
                    "no group element has root block " + root.ToString());
      return *lift;
    }
    const TruncatedElement g = Induct(t, n - 1);
    const TruncatedElement f = Multiply(Inverse(g), t);
    TruncatedElement correction = TruncatedElement::Identity(sig_, d);
    for (int x = 0; x < sig_->arity(); ++x) {
      const Word letter{x};
      const TruncatedElement fx = Induct(Section(f, letter), n - 1);
      const TruncatedElement lifted = Delta(letter, fx);
      if (!chain.Contains(lifted))
        throw Error(ErrorCode::kInconsistency,
                    "branching lift delta_" + letter.ToString() + "(" +
                        fx.ToString() + ") is not in the quotient of size " +
                        std::to_string(d + 1));
      correction = Multiply(correction, lifted);
    }
    TruncatedElement out = Multiply(g, correction);
    if (!(out.Restrict(n) == t.Restrict(n)))
      throw Error(ErrorCode::kInconsistency,
                  "induction step does not reproduce the target on X^[" +
                      std::to_string(n) + "]");
    return out;
  }

 private:
  SignaturePtr sig_;
  std::vector<FsElement> gens_;
  int s_;
  std::map<int, LevelChain> chains_;
};

}  // namespace

Approximation ApproximateInGroup(const TruncatedElement& target,
                                 SignaturePtr sig,
                                 const std::vector<FsElement>& gens, int n,
                                 int s, ApproximationMode mode,
                                 std::size_t cap) {
  RequireSameSignature(*sig, *target.signature());
  if (s < 1) throw InputError("pattern size must be at least 1");
  if (n < 0 || n > target.depth())
    throw InputError("n must lie in [0, depth(target)]");
  const LevelQuotient qs = EnumerateQuotient(sig, gens, s, cap);
  const AllowedBlockSet allowed = AllowedBlocks(qs);
  if (!IsAdmitted(allowed, target))
    throw InputError("target contains a block of size " + std::to_string(s) +
                     " that no group element has");
  Approximator approx(sig, gens, s);
  Approximation out;
  if (mode != ApproximationMode::kLookup)
    out.induction = approx.Induct(target, n);
  if (mode != ApproximationMode::kInduction)
    out.lookup = approx.Chain(target.depth() + 1).Lift(target.Restrict(n));
  if (out.induction && out.lookup)
    out.agree = out.induction->Restrict(n) == out.lookup->Restrict(n);
  return out;
}

}  // namespace treeshift

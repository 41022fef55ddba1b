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

#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "treeshift/analysis.hpp"
#include "treeshift/presets.hpp"

using namespace treeshift;

namespace {

// Naive reading of the pigeonhole conditions at a given k.
bool PathsRepeat(const TruncatedRun& run, int k) {
  for (const Word& w : oracle::WordsOfLength(run.arity, k)) {
    std::set<int> seen;
    bool repeat = false;
    for (int i = 0; i <= k; ++i) repeat = repeat || !seen.insert(run.at(w.Prefix(i))).second;
    if (!repeat) return false;
  }
  return true;
}

std::size_t ImageSize(const TruncatedRun& run, int k) {
  std::set<int> image;
  for (const Word& w : oracle::WordsUpTo(run.arity, k)) image.insert(run.at(w));
  return image.size();
}

// mu(w): the prefix where the first repeated state along w first appears.
std::vector<Word> NaiveCg(const TruncatedRun& run, int k) {
  std::set<Word> mu;
  for (const Word& w : oracle::WordsOfLength(run.arity, k)) {
    for (int j = 1; j <= k; ++j) {
      bool found = false;
      for (int i = 0; i < j && !found; ++i)
        if (run.at(w.Prefix(i)) == run.at(w.Prefix(j))) {
          mu.insert(w.Prefix(i));
          found = true;
        }
      if (found) break;
    }
  }
  std::vector<Word> out;
  for (const Word& m : mu) {
    bool minimal = true;
    for (const Word& p : mu) minimal = minimal && !(p != m && p.IsPrefixOf(m));
    if (minimal) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Orbit of 0^m under the quotient, computed from the elements directly.
std::size_t OrbitSize(const LevelQuotient& q, int m) {
  std::set<Word> orbit;
  const Word zero(std::vector<Letter>(m, 0));
  for (const auto& g : q.elements()) orbit.insert(Act(g, zero));
  return orbit.size();
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("level transitivity") {
    for (const char* name : {"odometer", "grigorchuk"}) {
      const NamedGroup g = GroupPreset(name);
      for (int n = 1; n <= 4; ++n)
        CHECK(IsLevelTransitive(EnumerateQuotient(g.signature, g.generators, n, 100000))
                  .transitive);
    }
    const NamedGroup t = GroupPreset("trivial");
    const auto r = IsLevelTransitive(EnumerateQuotient(t.signature, t.generators, 2, 10));
    CHECK_FALSE(r.transitive);
    CHECK(r.failing_level == 1);
    oracle::Rng rng(51);
    const SignaturePtr sig = CyclicSwapSignature();
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<FsElement> gens{oracle::RandomFs(sig, 3, rng), oracle::RandomFs(sig, 3, rng)};
      const LevelQuotient q = EnumerateQuotient(sig, gens, 3, 100000);
      bool expected = true;
      for (int m = 1; m <= 3; ++m) expected = expected && OrbitSize(q, m) == (1u << m);
      CHECK(IsLevelTransitive(q).transitive == expected);
    }
  }

  TEST_CASE("self-replication") {
    for (const char* name : {"odometer", "grigorchuk"}) {
      const NamedGroup g = GroupPreset(name);
      for (int n = 2; n <= 4; ++n)
        CHECK(IsSelfReplicatingAt(g.signature, g.generators, n, 100000).replicating);
    }
    // One subtree only: the sections at 0 are odometer powers, which have
    // nontrivial root labels that no element of the group has.
    const FsElement d = Delta(Word{0}, OdometerElement());
    const auto r = IsSelfReplicatingAt(d.signature(), {d}, 3, 1000);
    CHECK_FALSE(r.replicating);
    CHECK(r.letter == 0);
    REQUIRE(r.missing.has_value());
  }

  TEST_CASE("branching certificates") {
    const NamedGroup o = GroupPreset("odometer");
    for (int level = 1; level <= 3; ++level) {
      const BranchCertificate c = CheckBranching(o.signature, o.generators, level,
                                                 level + 2, 1000000);
      CHECK_FALSE(c.pass);
      REQUIRE(c.witness.has_value());
      const LevelChain chain(o.signature, o.generators, level + 2);
      CHECK_FALSE(chain.Contains(c.witness->lifted));
      CHECK(InTriv(c.witness->element, level));
      CHECK(c.witness->lifted == Delta(Word{c.witness->letter}, c.witness->element));
      // The branched element comes from the smaller quotient.
      CHECK(LevelChain(o.signature, o.generators, level + 1).Contains(c.witness->element));
    }
    const NamedGroup g = GroupPreset("grigorchuk");
    for (int n = 4; n <= 6; ++n) {
      const BranchCertificate c = CheckBranching(g.signature, g.generators, 3, n, 1000000);
      CHECK(c.pass);
      CHECK_FALSE(c.witness.has_value());
    }
    CHECK_INPUT_ERROR(CheckBranching(g.signature, g.generators, 4, 4, 1000000));
  }

  TEST_CASE("branching forms agree on random groups") {
    oracle::Rng rng(52);
    const SignaturePtr sig = CyclicSwapSignature();
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<FsElement> gens{oracle::RandomFs(sig, 3, rng), oracle::RandomFs(sig, 3, rng)};
      const int level = rng.Int(0, 2);
      // A disagreement between the two forms would throw.
      CHECK_NOTHROW(CheckBranching(sig, gens, level, level + 2, 100000));
    }
  }

  TEST_CASE("branching level search") {
    const NamedGroup g = GroupPreset("grigorchuk");
    const BranchSearch s = FindBranchingLevel(g.signature, g.generators, 4, 1000000);
    REQUIRE(s.level.has_value());
    CHECK(*s.level == 3);
    CHECK(s.pattern_size == 4);
    const NamedGroup o = GroupPreset("odometer");
    CHECK_FALSE(FindBranchingLevel(o.signature, o.generators, 2, 1000000).level.has_value());
  }

  TEST_CASE("pigeonhole level") {
    oracle::Rng rng(53);
    for (int trial = 0; trial < 1000; ++trial) {
      const int arity = rng.Int(1, 3);
      const int states = rng.Int(1, arity == 3 ? 3 : 4);
      const TruncatedRun run = oracle::RandomRun(arity, 2 * states, rng.Int(1, states), rng);
      const int k = KOf(run, states);
      CHECK(k >= 1);
      CHECK(k <= 2 * states - 1);
      CHECK(PathsRepeat(run, k));
      CHECK(ImageSize(run, k) == ImageSize(run, k + 1));
      for (int j = 1; j < k; ++j)
        CHECK_FALSE((PathsRepeat(run, j) && ImageSize(run, j) == ImageSize(run, j + 1)));
      const auto cg = BuildCg(run, k);
      CHECK(cg == NaiveCg(run, k));
      CHECK(IsAntichain(cg));
      CHECK(CoversLevel(cg, arity, k));
    }
    const TruncatedRun constant{2, 2, std::vector<int>(7, 0)};
    CHECK(KOf(constant, 1) == 1);
    CHECK(BuildCg(constant, 1) == std::vector<Word>{Word()});
  }

  TEST_CASE("antichain helpers") {
    CHECK(IsAntichain({Word{0}, Word{1, 0}, Word{1, 1}}));
    CHECK_FALSE(IsAntichain({Word{1}, Word{1, 0}}));
    CHECK(CoversLevel({Word{0}, Word{1, 0}, Word{1, 1}}, 2, 2));
    CHECK_FALSE(CoversLevel({Word{0}, Word{1, 0}}, 2, 2));
  }

  TEST_CASE("decomposition over a covering antichain") {
    oracle::Rng rng(54);
    for (int trial = 0; trial < 500; ++trial) {
      const SignaturePtr sig = trial % 2 ? SymmetricSignature(3) : CyclicSwapSignature();
      const int k = sig->arity();
      const int level = rng.Int(0, 2);
      // A random covering antichain: refine words of the level at random.
      std::vector<Word> c{Word()};
      for (int step = 0; step < level; ++step) {
        std::vector<Word> next;
        for (const Word& w : c) {
          if (rng.Coin(0.3) && step > 0) {
            next.push_back(w);
            continue;
          }
          for (int x = 0; x < k; ++x) next.push_back(w.Append(static_cast<Letter>(x)));
        }
        c = std::move(next);
      }
      std::sort(c.begin(), c.end());
      const int depth = level + rng.Int(0, 1);
      auto g = oracle::RandomTruncated(sig, depth, rng);
      std::vector<Label> labels = g.labels();
      const TreeLayout lay(k, depth);
      for (const Word& w : c)
        for (std::size_t i = 0; i < w.size(); ++i) labels[lay.IndexOf(w.Prefix(i))] = sig->identity();
      g = TruncatedElement(sig, depth, labels);
      const auto rep = DecomposeOverCg(g, c);
      CHECK(rep.holds);
      CHECK(rep.order_independent);
      CHECK(rep.product == g);
    }
    const auto g = Truncate(OdometerElement(), 3);
    CHECK(DecomposeOverCg(g, {Word()}).holds);
  }

  TEST_CASE("identity runs") {
    oracle::Rng rng(55);
    int built = 0;
    for (int trial = 0; trial < 600; ++trial) {
      const SignaturePtr sig = CyclicSwapSignature();
      const Automaton aut = oracle::RandomAutomaton(sig, 3, rng, 0.4);
      const int n2 = 2 * aut.state_count();
      const auto block = oracle::RandomAcceptedBlock(aut, n2, rng, n2);
      if (!block) continue;
      const int k = KOf(block->run, aut.state_count());
      const TruncatedRun r = IdentityRun(aut, block->block, block->run, k);
      CHECK(RunIsValid(aut, TruncatedElement::Identity(sig, r.depth - 1), r));
      for (const Word& w : oracle::WordsUpTo(2, k)) CHECK(r.at(w) == block->run.at(w));
      ++built;
    }
    CHECK(built >= 100);
  }

  TEST_CASE("movement identity") {
    oracle::Rng rng(56);
    for (int trial = 0; trial < 300; ++trial) {
      const SignaturePtr sig = trial % 3 == 0 ? SymmetricSignature(3) : CyclicSwapSignature();
      const FsElement h = oracle::RandomFs(sig, 3, rng);
      const FsElement g = oracle::RandomFs(sig, 3, rng);
      const Word u = oracle::RandomWord(sig->arity(), rng.Int(0, 3), rng);
      const int depth = sig->arity() == 3 ? 4 : 6;
      const MovementReport m = MovementCheck(h, u, g, depth);
      CHECK(m.holds);
      CHECK(m.v == ActInverse(g, u));
      CHECK(m.lhs == Truncate(Conjugate(Delta(u, h), g), depth));
    }
    const FsElement a = OdometerElement();
    const FsElement e = FsElement::Identity(a.signature());
    const MovementReport m = MovementCheck(a, Word{0}, a, 5);
    CHECK(m.v == Word{1});
    CHECK(m.rhs == Truncate(Delta(Word{1}, a), 5));  // a^a = a
    CHECK(MovementCheck(a, Word{0, 1}, e, 4).lhs == Truncate(Delta(Word{0, 1}, a), 4));
  }

  TEST_CASE("odometer witness") {
    for (int n = 1; n <= 4; ++n) {
      const auto w = OdometerWitness(n, 1000000);
      CHECK(w.part_a);
      CHECK(w.part_b);
      CHECK(w.allowed_blocks == (std::size_t(1) << (n + 1)));
      CHECK(w.quotient_order == (std::size_t(1) << (n + 2)));
      CHECK(w.element == Delta(Word{1}, Power(OdometerElement(), 1LL << n)));
    }
    CHECK_INPUT_ERROR(OdometerWitness(0, 100));
  }
}

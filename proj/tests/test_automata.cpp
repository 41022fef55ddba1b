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

#include "doctest.h"
#include "oracle.hpp"
#include "treeshift/automata.hpp"
#include "treeshift/presets.hpp"

using namespace treeshift;

namespace {

std::vector<Label> AllLabels(const Signature& sig) {
  std::vector<Label> all;
  for (int a = 0; a < sig.order(); ++a) all.push_back(static_cast<Label>(a));
  return all;
}

// Every block of the given size over the signature, by counting in base |A|.
std::vector<TruncatedElement> EveryBlock(const SignaturePtr& sig, int size) {
  const std::size_t n = TreeSize(sig->arity(), size - 1);
  std::vector<Label> labels(n, 0);
  std::vector<TruncatedElement> out;
  while (true) {
    out.emplace_back(sig, size - 1, labels);
    std::size_t i = 0;
    while (i < n && ++labels[i] == sig->order()) labels[i++] = 0;
    if (i == n) return out;
  }
}

}  // namespace

TEST_SUITE("automata") {
  TEST_CASE("viable states are the greatest fixpoint") {
    oracle::Rng rng(21);
    const auto sigs = oracle::SignatureCorpus();
    for (int trial = 0; trial < 400; ++trial) {
      const SignaturePtr& sig = sigs[trial % sigs.size()];
      const Automaton aut = oracle::RandomAutomaton(sig, 4, rng, 0.15);
      const auto viable = ViableStates(aut);
      CHECK(viable == oracle::Viable(aut));
      // Fixpoint: every viable state has a bundle into the viable set.
      for (int s = 0; s < aut.state_count(); ++s) {
        if (!viable[s]) continue;
        bool ok = false;
        for (int i : aut.bundles_from(s)) {
          bool all = true;
          for (int t : aut.bundles()[i].to) all = all && viable[t];
          ok = ok || all;
        }
        CHECK(ok);
      }
    }
  }

  TEST_CASE("block acceptance agrees with exhaustive search") {
    oracle::Rng rng(22);
    const SignaturePtr sig = CyclicSwapSignature();
    for (int trial = 0; trial < 150; ++trial) {
      const Automaton aut = oracle::RandomAutomaton(sig, 3, rng, 0.3);
      const int depth = rng.Int(0, 1);
      const auto block = oracle::RandomTruncated(sig, depth, rng);
      const auto run = BlockAllowed(aut, block);
      CHECK(run.has_value() == oracle::BlockAllowed(aut, block));
      if (!run) continue;
      CHECK(run->depth == depth + 1);
      CHECK(RunIsValid(aut, block, *run));
      const auto viable = ViableStates(aut);
      const TreeLayout lay = run->layout();
      for (std::size_t i = lay.level_offset(depth + 1); i < lay.vertex_count(); ++i)
        CHECK(viable[run->states[i]]);
      // A pinned root state is respected.
      const auto pinned = BlockAllowed(aut, block, run->states[0]);
      REQUIRE(pinned.has_value());
      CHECK(pinned->states[0] == run->states[0]);
    }
  }

  TEST_CASE("allowed blocks are closed under restriction") {
    oracle::Rng rng(23);
    const auto sigs = oracle::SignatureCorpus();
    for (int trial = 0; trial < 300; ++trial) {
      const SignaturePtr& sig = sigs[trial % 2 == 0 ? 0 : 1];
      const Automaton aut = oracle::RandomAutomaton(sig, 4, rng, 0.3);
      const auto block = oracle::RandomAcceptedBlock(aut, 3, rng);
      if (!block) continue;
      CHECK(RunIsValid(aut, block->block, block->run));
      for (int d = 0; d <= 3; ++d)
        CHECK(BlockAllowed(aut, block->block.Restrict(d)).has_value());
    }
  }

  TEST_CASE("first forbidden size matches block enumeration") {
    oracle::Rng rng(24);
    const SignaturePtr sig = CyclicSwapSignature();
    for (int trial = 0; trial < 60; ++trial) {
      const Automaton aut = oracle::RandomAutomaton(sig, 3, rng, 0.3);
      std::optional<int> expected;
      for (int size = 1; size <= 3 && !expected; ++size)
        for (const auto& b : EveryBlock(sig, size))
          if (!BlockAllowed(aut, b)) {
            expected = size;
            break;
          }
      CHECK(FirstSizeWithForbiddenBlock(aut, 3) == expected);
    }
  }

  TEST_CASE("configuration acceptance to a depth") {
    oracle::Rng rng(25);
    const SignaturePtr sig = CyclicSwapSignature();
    for (int trial = 0; trial < 200; ++trial) {
      const Automaton aut = oracle::RandomAutomaton(sig, 3, rng, 0.3);
      const FsElement g = oracle::RandomFs(sig, 3, rng);
      for (int n = 1; n <= 4; ++n)
        CHECK(ConfigAllowedToDepth(aut, g, n) ==
              BlockAllowed(aut, Truncate(g, n - 1)).has_value());
    }
  }

  TEST_CASE("grafted runs follow the case split and re-validate") {
    oracle::Rng rng(26);
    const auto sigs = oracle::SignatureCorpus();
    int grafted = 0;
    for (int trial = 0; trial < 400; ++trial) {
      const SignaturePtr& sig = sigs[trial % 3];
      const Automaton aut = oracle::RandomAutomaton(sig, 4, rng, 0.3);
      const int depth = rng.Int(0, 3);
      const auto a = oracle::RandomAcceptedBlock(aut, depth, rng);
      if (!a) continue;
      const Word v = oracle::RandomWord(sig->arity(), rng.Int(0, depth), rng);
      const auto b = oracle::RandomAcceptedBlock(aut, depth - int(v.size()), rng, 0,
                                                 a->run.at(v), a->block.label(v));
      REQUIRE(b.has_value());
      const TruncatedRun r = GraftRun(aut, a->block, a->run, b->block, b->run, v);
      const TruncatedElement g = Graft(a->block, b->block, v);
      CHECK(RunIsValid(aut, g, r));
      for (const Word& w : oracle::WordsUpTo(sig->arity(), depth + 1))
        CHECK(r.at(w) ==
              (v.IsPrefixOf(w) ? b->run.at(w.Suffix(v.size())) : a->run.at(w)));
      ++grafted;
    }
    CHECK(grafted >= 200);
  }

  TEST_CASE("graft run rejects mismatched hypotheses") {
    const SignaturePtr sig = CyclicSwapSignature();
    const Automaton aut = FullShiftAcceptor(sig);
    const auto a = TruncatedElement::Identity(sig, 1);
    const TruncatedRun ra{2, 2, std::vector<int>(7, 0)};
    const auto b = Truncate(OdometerElement(), 0);  // root label s, a has id at 0
    const TruncatedRun rb{2, 1, std::vector<int>(3, 0)};
    CHECK_INPUT_ERROR(GraftRun(aut, a, ra, b, rb, Word{0}));
  }

  TEST_CASE("example one language") {
    const SignaturePtr sig = CyclicSwapSignature();
    const std::vector<Label> trivial{sig->identity()};
    const auto finitary = GroupPreset("finitary").generators;
    for (const FsElement& g : finitary) {
      CHECK(DecideEventuallyInSubgroup(g, trivial));
      CHECK(DecideFinitelySupportedRays(g));
    }
    const FsElement a = OdometerElement();
    CHECK_FALSE(DecideEventuallyInSubgroup(a, trivial));
    CHECK(DecideEventuallyInSubgroup(a, AllLabels(*sig)));
    const auto ex1 = Example1Automaton(sig, trivial);
    CHECK(ex1.initial == std::vector<int>{0});
    CHECK(ex1.accepting == std::vector<int>{1});
    CHECK_FALSE(FirstSizeWithForbiddenBlock(ex1.base, 6).has_value());
    CHECK_INPUT_ERROR(Example1Automaton(sig, {}));
  }

  TEST_CASE("eventual membership is monotone in the subgroup") {
    oracle::Rng rng(27);
    const SignaturePtr s3 = SymmetricSignature(3);
    // Subgroups of S3 in index order: {e}, a transposition subgroup, A3, S3.
    std::vector<std::vector<Label>> subgroups{{s3->identity()}};
    for (int a = 0; a < 6; ++a) {
      const Label x = static_cast<Label>(a);
      if (x != s3->identity() && s3->Mul(x, x) == s3->identity()) {
        subgroups.push_back({s3->identity(), x});
        break;
      }
    }
    subgroups.push_back(AllLabels(*s3));
    for (const auto& b : subgroups) CHECK_FALSE(s3->CheckSubgroup(b).has_value());
    for (int trial = 0; trial < 300; ++trial) {
      const FsElement g = oracle::RandomFs(s3, 4, rng);
      CHECK(DecideEventuallyInSubgroup(g, AllLabels(*s3)));
      for (std::size_t i = 0; i + 1 < subgroups.size(); ++i)
        if (DecideEventuallyInSubgroup(g, subgroups[i]))
          CHECK(DecideEventuallyInSubgroup(g, subgroups[i + 1]));
      if (DecideEventuallyInSubgroup(g, subgroups[0]))
        CHECK(DecideFinitelySupportedRays(g));
    }
  }

  TEST_CASE("finitely supported rays without eventual triviality") {
    // Grigorchuk b: its cycle b -> c -> d -> b carries trivial labels, but
    // the state a hanging off the cycle is nontrivial.
    const FsElement b = GrigorchukElements()[1];
    CHECK(DecideFinitelySupportedRays(b));
    CHECK_FALSE(DecideEventuallyInSubgroup(b, {0}));
  }

  TEST_CASE("finitely supported rays fail for the odometer and its deltas") {
    const FsElement a = OdometerElement();
    CHECK_FALSE(DecideFinitelySupportedRays(a));
    for (int len = 0; len <= 4; ++len)
      for (const Word& w : oracle::WordsOfLength(2, len))
        CHECK_FALSE(DecideFinitelySupportedRays(Delta(w, a)));
    const auto cyclic = CyclicStates(a);
    CHECK(cyclic == std::vector<bool>{true, true});
  }

  TEST_CASE("acceptance-condition conversions") {
    const SignaturePtr sig = CyclicSwapSignature();
    const auto ex1 = Example1Automaton(sig, {sig->identity()});
    const RabinAutomaton r = BuchiToRabin(ex1);
    // Sets meeting the accepting state {s2}, smallest first.
    CHECK(r.accepting_sets == std::vector<std::vector<int>>{{1}, {0, 1}});
    const BuchiAutomaton u = UnrestrictedToBuchi(FullShiftAcceptor(sig));
    CHECK(u.initial == std::vector<int>{0});
    CHECK(u.accepting == std::vector<int>{0});
  }

  TEST_CASE("automaton validation") {
    const SignaturePtr sig = CyclicSwapSignature();
    CHECK_INPUT_ERROR(Automaton(sig, {"s"}, {{0, 0, {0}}}));
    CHECK_INPUT_ERROR(Automaton(sig, {"s"}, {{0, 0, {0, 1}}}));
    CHECK_INPUT_ERROR(Automaton(sig, {"s"}, {{0, 7, {0, 0}}}));
    const Automaton dup(sig, {"s"}, {{0, 0, {0, 0}}, {0, 0, {0, 0}}});
    CHECK(dup.bundles().size() == 1);
  }
}

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
#include "treeshift/elements.hpp"
#include "treeshift/presets.hpp"

using namespace treeshift;

namespace {

constexpr Label kS = 1;  // the swap in C2

TruncatedElement Odo(int depth) { return Truncate(OdometerElement(), depth); }

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("word enumeration sizes and order") {
    for (int k = 1; k <= 3; ++k)
      for (int n = 0; n <= 5; ++n) {
        const auto level = EnumerateWords(k, n, WordSet::kLevel);
        const auto below = EnumerateWords(k, n, WordSet::kBelow);
        const auto upto = EnumerateWords(k, n, WordSet::kUpTo);
        std::size_t kn = 1;
        for (int i = 0; i < n; ++i) kn *= k;
        CHECK(level.size() == kn);
        CHECK(below.size() == (k == 1 ? std::size_t(n) : (kn - 1) / (k - 1)));
        CHECK(upto == oracle::WordsUpTo(k, n));
        CHECK(std::is_sorted(upto.begin(), upto.end()));
      }
    CHECK(EnumerateWords(2, 2, WordSet::kBelow) ==
          std::vector<Word>{Word(), Word{0}, Word{1}});
  }

  TEST_CASE("layout indexes words in length-then-lex order") {
    for (int k = 1; k <= 3; ++k) {
      TreeLayout lay(k, 4);
      const auto words = oracle::WordsUpTo(k, 4);
      REQUIRE(lay.vertex_count() == words.size());
      for (std::size_t i = 0; i < words.size(); ++i) {
        CHECK(lay.IndexOf(words[i]) == i);
        CHECK(lay.WordAt(i) == words[i]);
        CHECK(lay.LevelOf(i) == static_cast<int>(words[i].size()));
      }
    }
  }

  TEST_CASE("word parsing") {
    CHECK(Word::Parse("") == Word());
    CHECK(Word::Parse("e") == Word());
    CHECK(Word::Parse("0110") == (Word{0, 1, 1, 0}));
    CHECK(Word::Parse("2,11") == (Word{2, 11}));
  }

  TEST_CASE("axiom validation") {
    LabelGroup c2{2, {0, 1, 1, 0}, {0, 1}, 0, {}};
    CHECK(ValidateGroupAndAction(c2, Action{2, {0, 1, 1, 0}}).ok());
    CHECK(ValidateGroupAndAction(c2, Action{2, {0, 1, 0, 1}}).ok());
    LabelGroup broken = c2;
    broken.mult = {0, 1, 1, 1};  // s*s = s
    const auto report = ValidateGroupAndAction(broken, Action{2, {0, 1, 1, 0}});
    REQUIRE_FALSE(report.ok());
    CHECK(report.first_failure() != nullptr);
    CHECK_INPUT_ERROR(Signature::Create(broken, Action{2, {0, 1, 1, 0}}));
    // Action not a homomorphism: s acts as a 3-cycle, which has order 3.
    CHECK_FALSE(
        ValidateGroupAndAction(c2, Action{3, {0, 1, 2, 1, 2, 0}}).ok());
  }

  TEST_CASE("single-entry corruptions of S3 are rejected") {
    const SignaturePtr s3 = SymmetricSignature(3);
    const LabelGroup& g = s3->group();
    CHECK(ValidateGroupAndAction(g, s3->action()).ok());
    for (std::size_t i = 0; i < g.mult.size(); ++i) {
      LabelGroup bad = g;
      bad.mult[i] = (bad.mult[i] + 1) % g.order;
      CHECK_FALSE(ValidateGroupAndAction(bad, s3->action()).ok());
    }
  }

  TEST_CASE("subgroup check") {
    const SignaturePtr s3 = SymmetricSignature(3);
    CHECK_FALSE(s3->CheckSubgroup({s3->identity()}).has_value());
    std::vector<Label> all;
    for (int a = 0; a < 6; ++a) all.push_back(static_cast<Label>(a));
    CHECK_FALSE(s3->CheckSubgroup(all).has_value());
    CHECK(s3->CheckSubgroup({}).has_value());
  }
}

TEST_SUITE("elements") {
  TEST_CASE("portraits match the naive map representation") {
    oracle::Rng rng(1);
    for (const SignaturePtr& sig : oracle::SignatureCorpus())
      for (int d = 0; d <= oracle::MaxDepth(sig, 4); ++d) {
        const auto g = oracle::RandomTruncated(sig, d, rng);
        const auto p = oracle::ToPortrait(g);
        CHECK(oracle::FromPortrait(sig, d, p) == g);
        for (const auto& [w, a] : p) CHECK(g.label(w) == a);
      }
  }

  TEST_CASE("arithmetic agrees with the naive formulas") {
    oracle::Rng rng(2);
    for (int trial = 0; trial < 300; ++trial) {
      const auto sigs = oracle::SignatureCorpus();
      const SignaturePtr& sig = sigs[trial % sigs.size()];
      const int d = rng.Int(0, oracle::MaxDepth(sig, 5));
      const auto g = oracle::RandomTruncated(sig, d, rng);
      const auto h = oracle::RandomTruncated(sig, d, rng);
      const auto pg = oracle::ToPortrait(g), ph = oracle::ToPortrait(h);
      CHECK(oracle::ToPortrait(Multiply(g, h)) == oracle::Mul(sig, pg, ph));
      CHECK(oracle::ToPortrait(Inverse(g)) == oracle::Inv(sig, pg));
      const Word w = oracle::RandomWord(sig->arity(), rng.Int(0, d + 1), rng);
      CHECK(Act(g, w) == oracle::Act(sig, pg, w));
      CHECK(ActInverse(g, Act(g, w)) == w);
      const Word u = oracle::RandomWord(sig->arity(), rng.Int(0, d), rng);
      CHECK(oracle::ToPortrait(Section(g, u)) == oracle::Section(pg, u));
      const Word v = oracle::RandomWord(sig->arity(), rng.Int(0, 2), rng);
      const auto dv = Delta(v, g);
      CHECK(dv.depth() == d + static_cast<int>(v.size()));
      CHECK(oracle::ToPortrait(dv) == oracle::Delta(sig, v, pg, dv.depth()));
    }
  }

  TEST_CASE("group axioms on truncations") {
    oracle::Rng rng(3);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto sigs = oracle::SignatureCorpus();
      const SignaturePtr& sig = sigs[trial % sigs.size()];
      const int d = rng.Int(0, oracle::MaxDepth(sig, 4));
      const auto f = oracle::RandomTruncated(sig, d, rng);
      const auto g = oracle::RandomTruncated(sig, d, rng);
      const auto h = oracle::RandomTruncated(sig, d, rng);
      const auto e = TruncatedElement::Identity(sig, d);
      CHECK(Multiply(Multiply(f, g), h) == Multiply(f, Multiply(g, h)));
      CHECK(Multiply(f, e) == f);
      CHECK(Multiply(e, f) == f);
      CHECK(Multiply(f, Inverse(f)).IsIdentity());
      CHECK(Multiply(Inverse(f), f).IsIdentity());
      // Conjugation is a right action.
      CHECK(Conjugate(Conjugate(h, f), g) == Conjugate(h, Multiply(f, g)));
      CHECK(Conjugate(Conjugate(h, f), Inverse(f)) == h);
    }
  }

  TEST_CASE("section identities") {
    oracle::Rng rng(4);
    for (int trial = 0; trial < 600; ++trial) {
      const auto sigs = oracle::SignatureCorpus();
      const SignaturePtr& sig = sigs[trial % sigs.size()];
      const int k = sig->arity();
      const int d = rng.Int(1, oracle::MaxDepth(sig, 5));
      const auto g = oracle::RandomTruncated(sig, d, rng);
      const auto h = oracle::RandomTruncated(sig, d, rng);
      const Word w = oracle::RandomWord(k, rng.Int(0, d), rng);
      // (gh)_w = g_{h(w)} h_w
      CHECK(Section(Multiply(g, h), w) ==
            Multiply(Section(g, Act(h, w)), Section(h, w)));
      // (gh)_(w) = g_(h(w)) h_(w)
      CHECK(Multiply(g, h).label(w) == sig->Mul(g.label(Act(h, w)), h.label(w)));
      // (g_u)_v = g_uv
      const Word u = oracle::RandomWord(k, rng.Int(0, d), rng);
      const Word v = oracle::RandomWord(k, rng.Int(0, d - int(u.size())), rng);
      CHECK(Section(Section(g, u), v) == Section(g, u.Concat(v)));
      // (g^-1)_(v) = (g_(g^-1(v)))^-1
      CHECK(Inverse(g).label(w) == sig->Inv(g.label(ActInverse(g, w))));
      CHECK(Section(g, Word()) == g);
    }
  }

  TEST_CASE("disjoint supports commute") {
    oracle::Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      const SignaturePtr sig = trial % 2 ? SymmetricSignature(3) : CyclicSwapSignature();
      const int d = rng.Int(0, 3);
      const auto x = oracle::RandomTruncated(sig, d, rng);
      const auto y = oracle::RandomTruncated(sig, d, rng);
      const auto g = Delta(Word{0}, x), h = Delta(Word{1}, y);
      for (const Word& w : Support(g).words) CHECK(Word{0}.IsPrefixOf(w));
      CHECK(Multiply(g, h) == Multiply(h, g));
    }
  }

  TEST_CASE("delta identities") {
    oracle::Rng rng(6);
    for (int trial = 0; trial < 500; ++trial) {
      const auto sigs = oracle::SignatureCorpus();
      const SignaturePtr& sig = sigs[trial % sigs.size()];
      const int k = sig->arity();
      const int d = rng.Int(0, 3);
      const auto g = oracle::RandomTruncated(sig, d, rng);
      const auto h = oracle::RandomTruncated(sig, d, rng);
      const Word v = oracle::RandomWord(k, rng.Int(0, 2), rng);
      const Word u = oracle::RandomWord(k, rng.Int(0, 2), rng);
      CHECK(Delta(Word(), g) == g);
      CHECK(Section(Delta(v.Concat(u), g), v) == Delta(u, g));       // (i)
      CHECK(Delta(v, Delta(u, g)) == Delta(v.Concat(u), g));         // (ii)
      const int n = rng.Int(0, d + 1);
      const auto t = oracle::RandomTriv(sig, d, n, rng);
      CHECK(InTriv(Delta(v, t), n + static_cast<int>(v.size())));    // (iii)
      CHECK(Delta(v, Multiply(g, h)) == Multiply(Delta(v, g), Delta(v, h)));  // (iv)
      CHECK(Graft(TruncatedElement::Identity(sig, d + int(v.size())), g, v) ==
            Delta(v, g));
    }
  }

  TEST_CASE("graft follows the case split") {
    oracle::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const SignaturePtr sig = trial % 2 ? SymmetricSignature(3) : CyclicSwapSignature();
      const int d = rng.Int(0, 3);
      const auto a = oracle::RandomTruncated(sig, d, rng);
      const Word v = oracle::RandomWord(sig->arity(), rng.Int(0, d), rng);
      const auto b = oracle::RandomTruncated(sig, d - int(v.size()), rng);
      const auto gr = Graft(a, b, v);
      for (const Word& w : oracle::WordsUpTo(sig->arity(), d))
        CHECK(gr.label(w) ==
              (v.IsPrefixOf(w) ? b.label(w.Suffix(v.size())) : a.label(w)));
      CHECK(Graft(a, Section(a, v), v) == a);
    }
    const auto a = Odo(2);
    const auto g = Graft(a, TruncatedElement::Identity(a.signature(), 1), Word{1});
    CHECK(g.ToString() == "s | id id | id id id id");
  }

  TEST_CASE("odometer examples") {
    const FsElement a = OdometerElement();
    CHECK(Truncate(a, 1).ToString() == "s | id s");
    CHECK(Act(a, Word{1, 1}) == (Word{0, 0}));
    CHECK(Act(a, Word{0, 1}) == (Word{1, 1}));
    CHECK(Section(a, Word{1}) == a);
    CHECK(Section(a, Word{0}).IsIdentity());
    // a^2 = id(a, a), a^3 = s(a, a^2)
    const FsElement a2 = Multiply(a, a), a3 = Multiply(a2, a);
    CHECK(a2.root_label() == 0);
    CHECK(Section(a2, Word{0}) == a);
    CHECK(Section(a2, Word{1}) == a);
    CHECK(a3.root_label() == kS);
    CHECK(Section(a3, Word{0}) == a);
    CHECK(Section(a3, Word{1}) == a2);
    for (int n = 1; n <= 4; ++n) {
      const auto t = TrivLevelOf(Truncate(Power(a, 1LL << n), n + 1));
      CHECK(t.level == n);
      CHECK_FALSE(t.lower_bound);
    }
    const auto id = TrivLevelOf(TruncatedElement::Identity(a.signature(), 3));
    CHECK(id.level == 4);
    CHECK(id.lower_bound);
    CHECK(TrivLevelOf(Odo(3)).level == 0);
    CHECK(Power(a, -1) == Inverse(a));
    CHECK(Power(a, 0).IsIdentity());
  }

  TEST_CASE("grigorchuk truncations") {
    const auto g = GrigorchukElements();
    const auto b = Truncate(g[1], 2);
    CHECK(b.label(Word()) == 0);
    CHECK(b.label(Word{0}) == kS);
    CHECK(b.label(Word{1}) == 0);
    CHECK(b.label(Word{1, 0}) == kS);  // c = (a, d)
    CHECK(b.label(Word{1, 1}) == 0);
    for (const FsElement& x : g) CHECK(Multiply(x, x).IsIdentity());
    CHECK(Multiply(Multiply(g[1], g[2]), g[3]).IsIdentity());
  }

  TEST_CASE("finite-state arithmetic matches truncations") {
    oracle::Rng rng(8);
    for (int trial = 0; trial < 300; ++trial) {
      const auto sigs = oracle::SignatureCorpus();
      const SignaturePtr& sig = sigs[trial % sigs.size()];
      const auto g = oracle::RandomFs(sig, 3, rng);
      const auto h = oracle::RandomFs(sig, 3, rng);
      const int n = rng.Int(0, oracle::MaxDepth(sig, 6));
      CHECK(oracle::ToPortrait(Truncate(g, n)) == oracle::FsPortrait(g, n));
      CHECK(Truncate(Multiply(g, h), n) == Multiply(Truncate(g, n), Truncate(h, n)));
      CHECK(Truncate(Inverse(g), n) == Inverse(Truncate(g, n)));
      CHECK(Multiply(g, h).state_count() <= g.state_count() * h.state_count());
      CHECK(Inverse(Inverse(g)) == g);
      CHECK(Multiply(g, Inverse(g)).IsIdentity());
      const Word u = oracle::RandomWord(sig->arity(), rng.Int(0, 2), rng);
      CHECK(Truncate(Section(g, u), n) ==
            Section(Truncate(g, n + int(u.size())), u));
      CHECK(Truncate(Delta(u, g), n + int(u.size())) == Delta(u, Truncate(g, n)));
      CHECK(Act(g, ActInverse(g, u)) == u);
    }
  }

  TEST_CASE("canonical form equality is portrait equality") {
    const SignaturePtr sig = CyclicSwapSignature();
    // Two presentations of the odometer: a = s(e, a) with a duplicated state.
    std::vector<FsState> s1{{kS, {1, 0}}, {0, {1, 1}}};
    std::vector<FsState> s2{{kS, {1, 2}}, {0, {1, 1}}, {kS, {3, 0}}, {0, {3, 3}}};
    CHECK(FsElement(sig, s1, 0) == FsElement(sig, s2, 0));
    CHECK(FsElement(sig, s2, 0).state_count() == 2);
    std::vector<FsState> unreachable{{0, {0, 0}}, {kS, {1, 1}}};
    CHECK(FsElement(sig, unreachable, 0).IsIdentity());
  }

  TEST_CASE("non-faithful action separates Stab and Triv") {
    const SignaturePtr sig = oracle::CyclicSignature(6, 2);
    oracle::Rng rng(9);
    int separated = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const auto g = oracle::RandomTruncated(sig, 3, rng);
      for (int n = 0; n <= 4; ++n) {
        bool fixes = true;
        for (const Word& w : oracle::WordsOfLength(2, n)) fixes = fixes && Act(g, w) == w;
        CHECK(StabilizesLevel(g, n) == fixes);
        if (InTriv(g, n)) CHECK(fixes);
        if (fixes && !InTriv(g, n)) ++separated;
      }
    }
    CHECK(separated > 0);
    const SignaturePtr triv = CyclicTrivialSignature(2);
    const FsElement s = FinitaryDelta(triv, Word(), kS);
    for (int n = 0; n <= 5; ++n) CHECK(StabilizesLevel(s, n));
    CHECK(TrivLevelOf(Truncate(s, 3)).level == 0);
    CHECK(Inverse(Truncate(s, 3)) == Truncate(s, 3));
  }

  TEST_CASE("one-letter alphabet degrades to the ray") {
    const SignaturePtr sig = oracle::CyclicSignature(4, 1);
    oracle::Rng rng(10);
    const auto g = oracle::RandomTruncated(sig, 5, rng);
    CHECK(g.labels().size() == 6);
    for (int i = 0; i <= 5; ++i)
      CHECK(Act(g, Word(std::vector<Letter>(i, 0))).size() == std::size_t(i));
  }

  TEST_CASE("distance") {
    const FsElement a = OdometerElement();
    const FsElement e = FsElement::Identity(a.signature());
    CHECK(DistanceBetween(a, a, 5) == Distance::Zero());
    CHECK(DistanceBetween(e, a, 3) == Distance::Exact(0));
    CHECK(DistanceBetween(Delta(Word{0, 0}, a), e, 5) == Distance::Exact(2));
    // Agreement on X^[2] means the first difference is at level 3 or deeper.
    CHECK(DistanceBetween(Delta(Word{0, 0, 0, 0}, a), e, 2) == Distance::AtMost(3));
    oracle::Rng rng(11);
    const SignaturePtr sig = CyclicSwapSignature();
    for (int trial = 0; trial < 300; ++trial) {
      auto mk = [&] {
        // Mostly equal near the root so that distances vary.
        auto g = oracle::RandomTruncated(sig, 4, rng, 0.15);
        return g;
      };
      const auto f = mk(), g = mk(), h = mk();
      const auto dfg = DistanceBetween(f, g, 4), dgf = DistanceBetween(g, f, 4);
      CHECK(dfg == dgf);
      CHECK((dfg == Distance::Zero()) == (f == g));
      const auto dfh = DistanceBetween(f, h, 4), dgh = DistanceBetween(g, h, 4);
      CHECK((DistanceLessEq(dfh, dfg) || DistanceLessEq(dfh, dgh)));
    }
  }
}

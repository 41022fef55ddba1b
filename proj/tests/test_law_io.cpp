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
#include "treeshift/io.hpp"
#include "treeshift/law.hpp"
#include "treeshift/presets.hpp"

using namespace treeshift;

namespace {

std::vector<FreeLetter> Letters(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<FreeLetter> out;
  for (auto [v, s] : xs) out.push_back({v, s});
  return out;
}

LevelQuotient Quotient(const char* name, int n) {
  const NamedGroup g = GroupPreset(name);
  return EnumerateQuotient(g.signature, g.generators, n, 1000000);
}

}  // namespace

TEST_SUITE("law") {
  TEST_CASE("parsing") {
    const Law c = ParseLaw("[x,y]");
    CHECK(c.variables == std::vector<std::string>{"x", "y"});
    CHECK(c.word == Letters({{0, -1}, {1, -1}, {0, 1}, {1, 1}}));
    CHECK(ParseLaw("x^2 = 1").word == Letters({{0, 1}, {0, 1}}));
    CHECK(ParseLaw("x = x").word.empty());
    CHECK(ParseLaw(" (x y)^-1 ").word == Letters({{1, -1}, {0, -1}}));
    CHECK(ParseLaw("x1 x2 x1^-1").variables == std::vector<std::string>{"x1", "x2"});
    CHECK(ParseLaw("[[x,y],z]").word.size() == 10);
    for (const char* bad : {"", "x^", "[x,y", "(x", "X", "x = ", "x y)", "x^a", "2"})
      CHECK_INPUT_ERROR(ParseLaw(bad));
    CHECK_INPUT_ERROR(ParseLaw("x^1000", 100));
  }

  TEST_CASE("evaluation") {
    const Law c = ParseLaw("[x,y]");
    const auto a = Truncate(OdometerElement(), 3);
    const auto e = TruncatedElement::Identity(a.signature(), 3);
    CHECK(EvaluateLaw(c, {a, Multiply(a, a)}, e).IsIdentity());
    oracle::Rng rng(61);
    const SignaturePtr sig = SymmetricSignature(3);
    const auto id = TruncatedElement::Identity(sig, 2);
    for (int i = 0; i < 50; ++i) {
      const auto x = oracle::RandomTruncated(sig, 2, rng);
      const auto y = oracle::RandomTruncated(sig, 2, rng);
      CHECK(EvaluateLaw(c, {x, y}, id) ==
            Multiply(Multiply(Inverse(x), Inverse(y)), Multiply(x, y)));
      CHECK(EvaluateLaw(ParseLaw("x = y"), {x, y}, id) == Multiply(x, Inverse(y)));
    }
    CHECK_INPUT_ERROR(EvaluateLaw(c, {a}, e));
  }

  TEST_CASE("odometer quotients are abelian") {
    for (int n = 1; n <= 6; ++n) {
      const LawReport r = LawCheck(Quotient("odometer", n), ParseLaw("[x,y]"));
      CHECK(r.holds);
      CHECK(r.mode == "exhaustive");
      CHECK(r.substitutions == (std::size_t(1) << (2 * n)));
    }
  }

  TEST_CASE("grigorchuk second quotient is not abelian") {
    const LevelQuotient q = Quotient("grigorchuk", 2);
    const Law c = ParseLaw("[x,y]");
    const LawReport r = LawCheck(q, c);
    CHECK_FALSE(r.holds);
    CHECK(r.mode == "exhaustive");
    REQUIRE(r.witness.size() == 2);
    REQUIRE(r.witness_value.has_value());
    CHECK_FALSE(r.witness_value->IsIdentity());
    CHECK(*r.witness_value ==
          EvaluateLaw(c, {r.witness[0].second, r.witness[1].second},
                      TruncatedElement::Identity(q.signature(), 1)));
    // Brute force: the order-8 quotient has non-commuting pairs.
    std::size_t failing = 0;
    for (const auto& x : q.elements())
      for (const auto& y : q.elements()) failing += !(Multiply(x, y) == Multiply(y, x));
    CHECK(failing > 0);
    // The dihedral group of order 8 has exponent 4.
    CHECK(LawCheck(q, ParseLaw("x^4")).holds);
    CHECK_FALSE(LawCheck(q, ParseLaw("x^2")).holds);
  }

  TEST_CASE("sampling is seeded") {
    const LevelQuotient q = Quotient("grigorchuk", 3);
    const Law c = ParseLaw("[x,y]");
    const LawReport a = LawCheck(q, c, 50, 7);
    const LawReport b = LawCheck(q, c, 50, 7);
    CHECK(a.mode == "sampled");
    CHECK(a.space == BigCount(128 * 128));
    CHECK(a.holds == b.holds);
    CHECK(a.substitutions == b.substitutions);
    CHECK(LawCheck(Quotient("odometer", 5), c, 10, 3).holds);
  }
}

TEST_SUITE("io") {
  TEST_CASE("signature round trip") {
    for (const SignaturePtr& sig : oracle::SignatureCorpus()) {
      const SignaturePtr back = SignatureFromJson(SignatureToJson(*sig));
      CHECK(back->SameAs(*sig));
    }
    Json bad = SignatureToJson(*CyclicSwapSignature());
    bad["mult"][1][1] = 1;
    CHECK_INPUT_ERROR(SignatureFromJson(bad));
    bad = SignatureToJson(*CyclicSwapSignature());
    bad["action"] = Json::array({Json::array({0, 1})});
    CHECK_INPUT_ERROR(SignatureFromJson(bad));
  }

  TEST_CASE("element and group round trip") {
    oracle::Rng rng(71);
    for (const SignaturePtr& sig : oracle::SignatureCorpus()) {
      const FsElement g = oracle::RandomFs(sig, 4, rng);
      CHECK(FsElementFromJson(FsElementToJson(g), sig) == g);
    }
    for (const std::string& name : GroupPresetNames()) {
      const NamedGroup g = GroupPreset(name);
      const NamedGroup back = GroupFromJson(GroupToJson(g));
      CHECK(back.generator_names == g.generator_names);
      REQUIRE(back.generators.size() == g.generators.size());
      for (std::size_t i = 0; i < g.generators.size(); ++i)
        CHECK(back.generators[i] == g.generators[i]);
      CHECK(GroupFromSource(name).generators.size() == g.generators.size());
    }
    CHECK(GroupFromSource(R"({"preset": "odometer"})").generators[0] == OdometerElement());
    CHECK_INPUT_ERROR(GroupPreset("nope"));
  }

  TEST_CASE("labels by name") {
    const char* text = R"({
      "signature": {"order": 2, "mult": [[0,1],[1,0]], "inverse": [0,1],
                    "identity": 0, "action": [[0,1],[1,0]], "names": ["e","t"]},
      "generators": [{"name": "a", "initial": "p",
        "states": [{"name": "p", "label": "t", "sections": ["q","p"]},
                   {"name": "q", "label": "e", "sections": ["q","q"]}]}]})";
    const NamedGroup g = GroupFromJson(ParseJsonText(text));
    CHECK(Truncate(g.generators[0], 4) == Truncate(OdometerElement(), 4));
  }

  TEST_CASE("malformed input") {
    CHECK_INPUT_ERROR(ParseJsonText("{"));
    CHECK_INPUT_ERROR(GroupFromJson(ParseJsonText("[]")));
    const char* dangling = R"({"preset": "odometer", "x": 1})";
    CHECK_NOTHROW(GroupFromJson(ParseJsonText(dangling)));
    const SignaturePtr sig = CyclicSwapSignature();
    const char* missing = R"({"initial": "p", "states": [{"name": "p", "label": 0,
        "sections": ["p", "r"]}]})";
    CHECK_INPUT_ERROR(FsElementFromJson(ParseJsonText(missing), sig));
  }

  TEST_CASE("automaton round trip") {
    const SignaturePtr sig = CyclicSwapSignature();
    for (const std::string& name : AutomatonPresetNames()) {
      const AutomatonSpec a = AutomatonPreset(name, sig, {});
      const AutomatonSpec back = AutomatonFromJson(AutomatonToJson(a), sig);
      CHECK(back.automaton.bundles() == a.automaton.bundles());
      CHECK(back.automaton.state_names() == a.automaton.state_names());
      CHECK(back.initial == a.initial);
      CHECK(back.accepting == a.accepting);
    }
    const char* text = R"({"states": ["u"], "bundles": [{"from": "u", "label": 1,
        "to": ["u", "u"]}]})";
    const AutomatonSpec a = AutomatonFromJson(ParseJsonText(text), sig);
    CHECK(a.automaton.bundles().size() == 1);
    CHECK_INPUT_ERROR(AutomatonFromJson(ParseJsonText(text), nullptr));
    CHECK_INPUT_ERROR(AutomatonPreset("example1", sig, {1}));
  }

  TEST_CASE("sft round trip") {
    const SignaturePtr sig = CyclicSwapSignature();
    const SftDefinition def = MakeSft(sig, 2, {{0, 1, 1}, {1, 0, 0}});
    const SftDefinition back = SftFromJson(SftToJson(def), sig);
    CHECK(back.block_size == 2);
    CHECK(back.forbidden == def.forbidden);
    CHECK(back.signature->SameAs(*sig));
  }

  TEST_CASE("report fragments") {
    const auto a = Truncate(OdometerElement(), 1);
    const Json j = BlockToJson(a);
    CHECK(j["depth"] == 1);
    CHECK(j["labels"] == Json::array({1, 0, 1}));
    CHECK(j["levels"] == "s | id s");
    CHECK(CountToJson(BigCount(5)) == 5);
    CHECK(WordToJson(Word{0, 1}) == "01");
  }
}

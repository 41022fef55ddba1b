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

#include "treeshift/law.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>

namespace treeshift {

namespace {

using FreeWord = std::vector<FreeLetter>;

FreeWord InverseWord(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (FreeLetter& l : out) l.sign = -l.sign;
  return out;
}

// Appends b to a, cancelling adjacent inverse pairs.
void AppendReduced(FreeWord& a, const FreeWord& b) {
  for (const FreeLetter& l : b) {
    if (!a.empty() && a.back().variable == l.variable &&
        a.back().sign == -l.sign)
      a.pop_back();
    else
      a.push_back(l);
  }
}

class LawParser {
 public:
  LawParser(const std::string& text, std::size_t max_length)
      : text_(text), max_length_(max_length) {}

  Law Parse() {
    FreeWord word = Product();
    Skip();
    if (Peek() == '=') {
      ++pos_;
      FreeWord rhs = Product();
      AppendReduced(word, InverseWord(rhs));
    }
    Skip();
    if (pos_ != text_.size()) Fail("unexpected character");
    // Variables are numbered in order of appearance while parsing; renumber
    // them alphabetically.
    std::vector<std::string> sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> remap(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i)
      remap[i] = static_cast<int>(
          std::find(sorted.begin(), sorted.end(), names_[i]) - sorted.begin());
    for (FreeLetter& l : word) l.variable = remap[l.variable];
    return Law{text_, std::move(sorted), std::move(word)};
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw InputError("law: " + what + " at position " + std::to_string(pos_) +
                     " in \"" + text_ + "\"");
  }

  void Skip() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char Peek() {
    Skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void Expect(char c) {
    if (Peek() != c) Fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void Check(const FreeWord& w) const {
    if (w.size() > max_length_) Fail("expanded law is too long");
  }

  FreeWord Product() {
    FreeWord out;
    bool any = false;
    while (true) {
      const char c = Peek();
      if (!(std::islower(static_cast<unsigned char>(c)) || c == '1' ||
            c == '(' || c == '['))
        break;
      AppendReduced(out, Power());
      Check(out);
      any = true;
    }
    if (!any) Fail("expected a variable, '1', '(' or '['");
    return out;
  }

  FreeWord Power() {
    FreeWord base = Atom();
    if (Peek() != '^') return base;
    ++pos_;
    Skip();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    long long e = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + (text_[pos_] - '0');
      if (e > static_cast<long long>(max_length_)) Fail("exponent too large");
      ++pos_;
    }
    if (pos_ == start) Fail("expected an integer exponent");
    if (negative) base = InverseWord(base);
    FreeWord out;
    for (long long i = 0; i < e; ++i) {
      AppendReduced(out, base);
      Check(out);
    }
    return out;
  }

  FreeWord Atom() {
    const char c = Peek();
    if (c == '1') {
      ++pos_;
      return {};
    }
    if (c == '(') {
      ++pos_;
      FreeWord inner = Product();
      Expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos_;
      FreeWord u = Product();
      Expect(',');
      FreeWord v = Product();
      Expect(']');
      FreeWord out = InverseWord(u);
      AppendReduced(out, InverseWord(v));
      AppendReduced(out, u);
      AppendReduced(out, v);
      return out;
    }
    std::string name(1, c);
    ++pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      name += text_[pos_++];
    auto it = std::find(names_.begin(), names_.end(), name);
    const int index = static_cast<int>(it - names_.begin());
    if (it == names_.end()) names_.push_back(name);
    return {FreeLetter{index, 1}};
  }

  const std::string& text_;
  std::size_t max_length_;
  std::size_t pos_ = 0;
  std::vector<std::string> names_;
};

}  // namespace

Law ParseLaw(const std::string& text, std::size_t max_length) {
  return LawParser(text, max_length).Parse();
}

TruncatedElement EvaluateLaw(const Law& law,
                             const std::vector<TruncatedElement>& values,
                             const TruncatedElement& identity) {
  if (values.size() != law.variables.size())
    throw InputError("law has " + std::to_string(law.variables.size()) +
                     " variables but " + std::to_string(values.size()) +
                     " values were given");
  std::vector<TruncatedElement> inverses;
  inverses.reserve(values.size());
  for (const TruncatedElement& v : values) inverses.push_back(Inverse(v));
  TruncatedElement out = identity;
  for (const FreeLetter& l : law.word)
    out = Multiply(out, l.sign > 0 ? values[l.variable] : inverses[l.variable]);
  return out;
}

LawReport LawCheck(const LevelQuotient& q, const Law& law, std::size_t budget,
                   std::uint64_t seed) {
  q.RequireComplete();
  if (budget < 1) throw InputError("law budget must be positive");
  const std::vector<TruncatedElement>& el = q.elements();
  const std::size_t v = law.variables.size();
  const TruncatedElement e = TruncatedElement::Identity(q.signature(), q.depth());
  LawReport rep;
  rep.space = BigCount(1);
  for (std::size_t i = 0; i < v; ++i) rep.space = rep.space * BigCount(el.size());

  std::vector<std::size_t> pick(v, 0);
  std::vector<TruncatedElement> values(v, e);
  auto try_pick = [&]() {
    for (std::size_t i = 0; i < v; ++i) values[i] = el[pick[i]];
    ++rep.substitutions;
    TruncatedElement r = EvaluateLaw(law, values, e);
    if (r.IsIdentity()) return true;
    rep.holds = false;
    for (std::size_t i = 0; i < v; ++i)
      rep.witness.emplace_back(law.variables[i], values[i]);
    rep.witness_value = std::move(r);
    return false;
  };

  if (rep.space <= BigCount(budget)) {
    rep.mode = "exhaustive";
    while (try_pick()) {
      std::size_t i = v;
      while (i > 0 && ++pick[i - 1] == el.size()) pick[--i] = 0;
      if (i == 0) break;
    }
  } else {
    rep.mode = "sampled";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dist(0, el.size() - 1);
    for (std::size_t s = 0; s < budget; ++s) {
      for (std::size_t i = 0; i < v; ++i) pick[i] = dist(rng);
      if (!try_pick()) break;
    }
  }
  return rep;
}

}  // namespace treeshift

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

// Alphabets, words, finite label groups acting on the alphabet, patterns and
// the tree layout shared by every portrait-shaped table in the library.
//
// Letters and group elements are dense integer indices. Words are ordered by
// length first, then lexicographically; every list or set the library emits
// uses this order.

#ifndef TREESHIFT_CORE_HPP_
#define TREESHIFT_CORE_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "treeshift/errors.hpp"

namespace treeshift {

using Letter = std::uint8_t;
using Label = std::uint8_t;

inline constexpr int kMaxAlphabetSize = 64;
inline constexpr int kMaxGroupOrder = 255;

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<int> letters);

  // Parses "0110"-style digit strings (alphabets of size <= 10 only) or
  // comma-separated indices; "" and "e" denote the empty word.
  static Word Parse(const std::string& text);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  Word Prefix(std::size_t n) const;
  Word Suffix(std::size_t from) const;
  Word Append(Letter x) const;
  Word Concat(const Word& other) const;
  bool IsPrefixOf(const Word& other) const;

  std::string ToString() const;

  // Length first, then lexicographic.
  std::strong_ordering operator<=>(const Word& other) const;
  bool operator==(const Word& other) const = default;

 private:
  std::vector<Letter> letters_;
};

// Flat indexing of the vertices X^[n] of the k-ary tree in length-then-lex
// order: the word of level L and lexicographic rank r has index
// offset(L) + r, and its child along letter x is offset(L+1) + r*k + x.
class TreeLayout {
 public:
  TreeLayout(int arity, int depth);

  int arity() const { return arity_; }
  int depth() const { return depth_; }
  std::size_t vertex_count() const { return offsets_.back(); }
  std::size_t level_offset(int level) const { return offsets_[level]; }
  std::size_t level_size(int level) const {
    return offsets_[level + 1] - offsets_[level];
  }
  std::size_t child(int level, std::size_t rank, int x) const {
    return offsets_[level + 1] + rank * arity_ + x;
  }

  std::size_t IndexOf(const Word& w) const;
  Word WordAt(std::size_t index) const;
  int LevelOf(std::size_t index) const;

 private:
  int arity_;
  int depth_;
  std::vector<std::size_t> offsets_;  // size depth + 2
};

// Number of vertices in X^[depth]; 0 when depth < 0.
std::size_t TreeSize(int arity, int depth);

enum class WordSet { kLevel, kUpTo, kBelow };

// X^n (kLevel), X^[n] (kUpTo) or X^(n) (kBelow) in length-then-lex order.
std::vector<Word> EnumerateWords(int arity, int n, WordSet kind);

struct LabelGroup {
  int order = 0;
  std::vector<int> mult;     // order x order, row-major: mult[a*order+b] = ab
  std::vector<int> inverse;  // order
  int identity = 0;
  std::vector<std::string> names;  // optional display names
};

struct Action {
  int alphabet_size = 0;
  std::vector<int> table;  // order x alphabet_size: table[a*k+x] = a(x)
};

enum class Axiom {
  kAssociativity,
  kIdentity,
  kInverses,
  kActionHomomorphism,
  kActionBijectivity
};

const char* AxiomName(Axiom axiom);

struct AxiomCheck {
  explicit AxiomCheck(Axiom a) : axiom(a) {}
  Axiom axiom;
  bool passed = true;
  // (a, b, c) or (a, x, y) witnessing the failure; unused slots are -1.
  std::array<int, 3> witness{-1, -1, -1};
  std::string detail;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
  const AxiomCheck* first_failure() const;
};

// Checks the group axioms of the multiplication table and the left-action
// axioms of the action table. Throws InputError on dimension mismatch.
ValidationReport ValidateGroupAndAction(const LabelGroup& group,
                                        const Action& action);

// A validated (label group, action, alphabet) triple. Every other module
// takes its inputs relative to one of these.
class Signature {
 public:
  // Throws InputError naming the failed axiom and its witness.
  static std::shared_ptr<const Signature> Create(LabelGroup group,
                                                 Action action);

  int arity() const { return arity_; }
  int order() const { return group_.order; }
  Label identity() const { return static_cast<Label>(group_.identity); }

  Label Mul(Label a, Label b) const { return mult_[a * group_.order + b]; }
  Label Inv(Label a) const { return inverse_[a]; }
  Letter Act(Label a, Letter x) const { return action_[a * arity_ + x]; }
  Letter ActInv(Label a, Letter x) const {
    return action_inv_[a * arity_ + x];
  }

  const LabelGroup& group() const { return group_; }
  const Action& action() const { return action_table_; }
  std::string LabelName(Label a) const;

  // Structural equality of the tables.
  bool SameAs(const Signature& other) const;

  // Returns an error if `subset` is not closed under mult and inverse or
  // lacks the identity.
  std::optional<std::string> CheckSubgroup(const std::vector<Label>& subset) const;

 private:
  Signature() = default;

  LabelGroup group_;
  Action action_table_;
  int arity_ = 0;
  std::vector<Label> mult_;
  std::vector<Label> inverse_;
  std::vector<Letter> action_;
  std::vector<Letter> action_inv_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

// Throws InputError unless both signatures have identical tables.
void RequireSameSignature(const Signature& a, const Signature& b);

// Common signatures.
SignaturePtr CyclicSwapSignature();   // C2 = {id, s} swapping {0,1}
SignaturePtr CyclicTrivialSignature(int arity);  // C2 acting trivially
SignaturePtr TrivialGroupSignature(int arity);   // the one-element group
// The symmetric group of {0..arity-1} with its natural action; elements are
// listed in lexicographic order of their images, identity first.
SignaturePtr SymmetricSignature(int arity);

// A labelling of a finite, nonempty set of words.
class Pattern {
 public:
  explicit Pattern(std::map<Word, Label> labels);

  const std::map<Word, Label>& labels() const { return labels_; }
  // The size n if the domain is exactly X^(n) for the given arity.
  std::optional<int> BlockSize(int arity) const;

 private:
  std::map<Word, Label> labels_;
};

// d(f, g) = 2^-n where n is the first level on which f and g differ.
struct Distance {
  enum class Kind { kZero, kExact, kAtMost };
  Kind kind = Kind::kZero;
  int exponent = 0;  // kExact: d = 2^-exponent; kAtMost: d <= 2^-exponent

  static Distance Zero() { return {Kind::kZero, 0}; }
  static Distance Exact(int n) { return {Kind::kExact, n}; }
  static Distance AtMost(int n) { return {Kind::kAtMost, n}; }

  std::string ToString() const;
  bool operator==(const Distance&) const = default;
};

// Value comparison between two resolved distances (kZero or kExact).
bool DistanceLessEq(const Distance& a, const Distance& b);

}  // namespace treeshift

#endif  // TREESHIFT_CORE_HPP_

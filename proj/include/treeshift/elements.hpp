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

// Elements of the full tree shift group F(A, X, phi) in two representations.
//
// A TruncatedElement is a portrait restricted to X^[n]; the depth-n
// truncations form a finite group (the iterated wreath product of n+1 copies
// of A) and all arithmetic below is exact in it. A TruncatedElement of depth
// n is the same object as a block of size n+1.
//
// An FsElement is a finite-state wreath recursion g = a (g_x)_x. It is kept
// in canonical form: unreachable states pruned, bisimilar states merged,
// states numbered breadth-first from the initial state (which is state 0).
// Two FsElements therefore compare equal exactly when their portraits agree.
//
// Elements are identified with their portraits throughout; `Truncate` is the
// bridge between the two representations.

#ifndef TREESHIFT_ELEMENTS_HPP_
#define TREESHIFT_ELEMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "treeshift/core.hpp"

namespace treeshift {

class TruncatedElement {
 public:
  // `labels` is indexed by TreeLayout(arity, depth).
  TruncatedElement(SignaturePtr sig, int depth, std::vector<Label> labels);

  static TruncatedElement Identity(SignaturePtr sig, int depth);
  // Throws InputError unless the pattern is a block (domain X^(n), n >= 1).
  static TruncatedElement FromBlock(SignaturePtr sig, const Pattern& block);

  const SignaturePtr& signature() const { return sig_; }
  int depth() const { return depth_; }
  int block_size() const { return depth_ + 1; }
  const std::vector<Label>& labels() const { return labels_; }
  Label label(const Word& w) const;
  Label label_at(std::size_t index) const { return labels_[index]; }
  TreeLayout layout() const { return TreeLayout(sig_->arity(), depth_); }

  bool IsIdentity() const;
  // Restriction to X^[depth]; depth must not exceed this->depth().
  TruncatedElement Restrict(int depth) const;
  Pattern ToBlock() const;
  std::string ToString() const;

  bool operator==(const TruncatedElement& other) const;

 private:
  SignaturePtr sig_;
  int depth_;
  std::vector<Label> labels_;
};

struct FsState {
  Label label = 0;
  std::vector<int> sections;  // one target state per letter
};

class FsElement {
 public:
  // Builds the canonical form of the recursion rooted at `initial`.
  FsElement(SignaturePtr sig, std::vector<FsState> states, int initial);

  static FsElement Identity(SignaturePtr sig);
  // The element agreeing with `g` on X^[depth] and trivial below it.
  static FsElement Finitary(const TruncatedElement& g);

  const SignaturePtr& signature() const { return sig_; }
  std::size_t state_count() const { return states_.size(); }
  const std::vector<FsState>& states() const { return states_; }
  Label root_label() const { return states_[0].label; }
  Label label_of(int state) const { return states_[state].label; }
  int section_of(int state, Letter x) const {
    return states_[state].sections[x];
  }
  // The state reached from the initial state along w.
  int StateAt(const Word& w) const;

  bool IsIdentity() const;
  bool operator==(const FsElement& other) const;

 private:
  SignaturePtr sig_;
  std::vector<FsState> states_;
};

// Portrait of an FsElement restricted to X^[n].
TruncatedElement Truncate(const FsElement& g, int n);

// Group operations. Products are composed right to left: (gh)(w) = g(h(w)).
TruncatedElement Multiply(const TruncatedElement& g, const TruncatedElement& h);
TruncatedElement Inverse(const TruncatedElement& g);
FsElement Multiply(const FsElement& g, const FsElement& h);
FsElement Inverse(const FsElement& g);
// g^e for any integer e.
FsElement Power(const FsElement& g, long long e);
TruncatedElement Power(const TruncatedElement& g, long long e);

// h^g = g^-1 h g.
TruncatedElement Conjugate(const TruncatedElement& h, const TruncatedElement& g);
FsElement Conjugate(const FsElement& h, const FsElement& g);

// Image g(w). For truncations |w| may be at most depth + 1, since only labels
// on strict prefixes of w are consulted.
Word Act(const TruncatedElement& g, const Word& w);
Word Act(const FsElement& g, const Word& w);
Word ActInverse(const FsElement& g, const Word& w);
Word ActInverse(const TruncatedElement& g, const Word& w);

// Section g_w, whose portrait is the shift of g's portrait at w. The
// truncated section has depth depth(g) - |w|.
TruncatedElement Section(const TruncatedElement& g, const Word& w);
FsElement Section(const FsElement& g, const Word& w);

// Grafting of b onto a at v: b's labels on vX*, a's elsewhere. Requires
// |v| <= depth(a) and depth(b) >= depth(a) - |v|; the result has depth(a).
TruncatedElement Graft(const TruncatedElement& a, const TruncatedElement& b,
                       const Word& v);

// delta_v(g): g grafted onto the identity at v. The truncated result has
// depth |v| + depth(g).
TruncatedElement Delta(const Word& v, const TruncatedElement& g);
FsElement Delta(const Word& v, const FsElement& g);

// Largest n with g in Triv(n) as far as the truncation can tell. When every
// label is trivial, `level` is depth + 1 and `lower_bound` is set.
struct TrivLevel {
  int level = 0;
  bool lower_bound = false;
  std::string ToString() const;
};
TrivLevel TrivLevelOf(const TruncatedElement& g);
bool InTriv(const TruncatedElement& g, int n);

// True iff g fixes every word of X^n. Requires depth(g) >= n - 1.
bool StabilizesLevel(const TruncatedElement& g, int n);
bool StabilizesLevel(const FsElement& g, int n);

// {w in X^[depth] : g_(w) != e}.
struct SupportDescriptor {
  int depth = 0;
  std::vector<Word> words;
};
SupportDescriptor Support(const TruncatedElement& g);

// Ultrametric distance. For truncations, equal tables of equal depth give 0;
// otherwise the first differing level up to min(depths, max_depth) is
// reported, or an upper bound when none differs there. FsElements compare by
// portrait equality and otherwise report the first differing level if it is
// at most max_depth.
Distance DistanceBetween(const TruncatedElement& f, const TruncatedElement& g,
                         int max_depth);
Distance DistanceBetween(const FsElement& f, const FsElement& g, int max_depth);

}  // namespace treeshift

#endif  // TREESHIFT_ELEMENTS_HPP_

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

// Level quotients pi_n(G): the images of a group G <= F(A, X, phi) in the
// finite group of depth-(n-1) truncations, i.e. the blocks of size n realized
// by elements of G.
//
// Two representations are provided. LevelQuotient lists every element
// (breadth-first closure, bounded by a cap). LevelChain is a stabilizer chain
// along the vertices of X^(n) in layout order: the subgroup of elements
// trivial at every earlier vertex maps homomorphically onto a subgroup of A
// by reading the label at the next vertex, so the chain stores at most |A|
// coset representatives per vertex. It answers order and membership queries
// for quotients far too large to list.

#ifndef TREESHIFT_QUOTIENT_HPP_
#define TREESHIFT_QUOTIENT_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "treeshift/elements.hpp"

namespace treeshift {

inline constexpr std::size_t kDefaultCap = 1000000;

// The enumeration cap: TREESHIFT_CAP when set to a positive integer,
// otherwise kDefaultCap.
std::size_t DefaultCap();

// Generators must share one signature; `sig` is used when gens is empty.
std::vector<TruncatedElement> TruncateAll(const std::vector<FsElement>& gens,
                                          int depth);

class LevelQuotient {
 public:
  int size() const { return size_; }
  int depth() const { return size_ - 1; }
  bool complete() const { return complete_; }
  std::size_t cap() const { return cap_; }
  const SignaturePtr& signature() const { return sig_; }
  // Sorted by label table. Partial when !complete().
  const std::vector<TruncatedElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<TruncatedElement>& generator_images() const {
    return gens_;
  }
  bool Contains(const TruncatedElement& g) const;
  // Throws CapError when the enumeration stopped at the cap.
  void RequireComplete() const;

  friend LevelQuotient EnumerateQuotient(SignaturePtr sig,
                                         const std::vector<FsElement>& gens,
                                         int n, std::size_t cap);
  friend LevelQuotient EnumerateAtDepth(
      SignaturePtr sig, const std::vector<TruncatedElement>& gens, int depth,
      std::size_t cap);

 private:
  SignaturePtr sig_;
  int size_ = 0;
  bool complete_ = false;
  std::size_t cap_ = 0;
  std::vector<TruncatedElement> elements_;
  std::vector<TruncatedElement> gens_;
  std::unordered_set<std::string> index_;
};

// Breadth-first closure of the generator truncations at depth n - 1. Stops
// with complete() == false once more than `cap` elements are found. n >= 1.
LevelQuotient EnumerateQuotient(SignaturePtr sig,
                                const std::vector<FsElement>& gens, int n,
                                std::size_t cap);
// Same for generators already truncated to a common depth (0 when there are
// no generators).
LevelQuotient EnumerateQuotient(SignaturePtr sig,
                                const std::vector<TruncatedElement>& gens,
                                std::size_t cap);
// Same with the truncation depth given explicitly.
LevelQuotient EnumerateAtDepth(SignaturePtr sig,
                               const std::vector<TruncatedElement>& gens,
                               int depth, std::size_t cap);

// Exact nonnegative integers for group orders and block counts.
class BigCount {
 public:
  BigCount(std::uint64_t v = 0);  // NOLINT(runtime/explicit)
  BigCount operator+(const BigCount& o) const;
  BigCount operator*(const BigCount& o) const;
  std::strong_ordering operator<=>(const BigCount& o) const;
  bool operator==(const BigCount& o) const = default;
  std::optional<std::uint64_t> ToU64() const;
  std::string ToString() const;

 private:
  std::vector<std::uint32_t> limbs_;  // little endian, no trailing zeros
};

class LevelChain {
 public:
  // Chain for pi_n of the group generated by `gens`. n >= 1.
  LevelChain(SignaturePtr sig, const std::vector<FsElement>& gens, int n);
  LevelChain(SignaturePtr sig, const std::vector<TruncatedElement>& gens);

  int size() const { return size_; }
  int depth() const { return size_ - 1; }
  const SignaturePtr& signature() const { return sig_; }

  BigCount Order() const;
  // Order of the subgroup of elements trivial on X^(level), i.e. Triv(level).
  BigCount TrivOrder(int level) const;
  bool Contains(const TruncatedElement& g) const;
  // An element whose restriction to depth(block) is `block`, if one exists.
  std::optional<TruncatedElement> Lift(const TruncatedElement& block) const;
  // Coset representatives at every vertex of X^(size) from `level` down;
  // together they generate the Triv(level) subgroup.
  std::vector<TruncatedElement> TrivGenerators(int level) const;
  // All elements of Triv(level), sorted; nullopt if there are more than cap.
  std::optional<std::vector<TruncatedElement>> TrivElements(
      int level, std::size_t cap) const;
  // Number of representatives stored at each vertex.
  std::vector<int> TransversalSizes() const;

 private:
  void Build(const std::vector<TruncatedElement>& gens);
  // Divides h by representatives from vertex `start` on; returns the vertex
  // where a label had no representative, or vertices_ when h sifts through.
  std::size_t Sift(TruncatedElement& h, std::size_t start) const;
  void AddStrong(TruncatedElement h, std::size_t v);
  void CloseOrbit(std::size_t v);

  SignaturePtr sig_;
  int size_;
  std::size_t vertices_ = 0;  // |X^(size)|
  struct Rep {
    TruncatedElement element;
    TruncatedElement inverse;
  };
  // reps_[v][a]: an element trivial before v with label a at v.
  std::vector<std::map<Label, Rep>> reps_;
  // Strong generators and the first vertex where each has a nontrivial label.
  std::vector<TruncatedElement> strong_;
  std::vector<std::size_t> strong_level_;
};

}  // namespace treeshift

#endif  // TREESHIFT_QUOTIENT_HPP_

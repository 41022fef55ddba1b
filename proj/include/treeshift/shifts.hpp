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

// Tree shifts of finite type and their comparison with level quotients.
//
// Blocks are stored as label tables in TreeLayout order. A block of size n
// is admitted by a set of allowed size-s windows when the window rooted at
// every vertex w with |w| <= n - s is allowed. Admitted blocks are built
// bottom-up: a block of height h is a root label over k blocks of height
// h - 1, joined on the top (s - 1)-window of each child. The same recurrence
// counts admitted blocks without listing them.

#ifndef TREESHIFT_SHIFTS_HPP_
#define TREESHIFT_SHIFTS_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "treeshift/automata.hpp"
#include "treeshift/quotient.hpp"

namespace treeshift {

using BlockLabels = std::vector<Label>;

struct SftDefinition {
  SignaturePtr signature;
  int block_size = 1;
  std::set<BlockLabels> forbidden;
};

struct AllowedBlockSet {
  SignaturePtr signature;
  int block_size = 1;
  std::set<BlockLabels> blocks;
};

// Validates block sizes and labels.
SftDefinition MakeSft(SignaturePtr sig, int block_size,
                      std::set<BlockLabels> forbidden);

// Every block of the given size, in lexicographic order of label tables.
// Throws CapError when there are more than cap of them.
std::vector<BlockLabels> AllBlocks(const Signature& sig, int size,
                                   std::size_t cap);
BigCount CountAllBlocks(const Signature& sig, int size);

AllowedBlockSet AllowedWindows(const SftDefinition& def, std::size_t cap);
SftDefinition ForbiddenComplement(const AllowedBlockSet& allowed,
                                  std::size_t cap);

// True iff no forbidden block occurs in g at a vertex w with
// |w| + s - 1 <= depth. Requires s - 1 <= depth <= depth(g).
bool SftAvoids(const SftDefinition& def, const TruncatedElement& g, int depth);
bool SftAvoids(const SftDefinition& def, const FsElement& g, int depth);
// True iff every size-s window of the block that fits is allowed.
bool IsAdmitted(const AllowedBlockSet& allowed, const TruncatedElement& block);

// Root blocks of a complete quotient of size s.
AllowedBlockSet AllowedBlocks(const LevelQuotient& q);
// The complement of AllowedBlocks(q) among all blocks of size s.
SftDefinition SftFromGroup(const LevelQuotient& q, std::size_t cap);

// All admitted blocks of the given size, sorted by label table; CapError when
// the count exceeds cap. Requires size >= s.
std::vector<TruncatedElement> EnumerateAdmitted(const AllowedBlockSet& allowed,
                                                int size, std::size_t cap);
BigCount CountAdmitted(const AllowedBlockSet& allowed, int size);

// Higher-block presentation: one state per size-(s-1) window that occurs in
// an allowed window, and a bundle (top(W), W(e), (W_x)_x) for each allowed W.
// It accepts exactly the configurations all of whose size-s windows are
// allowed.
Automaton SftToAutomaton(const AllowedBlockSet& allowed);

// Whether every state of every generator is the identity, a generator or the
// inverse of one. Then the group is self-similar.
bool GeneratorsSectionClosed(const std::vector<FsElement>& gens);

struct ClosureReport {
  bool equal = false;
  int pattern_size = 0;
  int depth = 0;  // blocks of size depth + 1 are compared
  BigCount allowed_count;
  BigCount forbidden_count;
  BigCount admitted_count;
  BigCount quotient_order;
  // How the inclusion of the quotient in the admitted set was established:
  // "enumerated" or "self-similar generating set".
  std::string inclusion;
  // "admitted-not-in-group" or "group-not-admitted" when !equal. The block
  // itself is omitted when more than cap blocks are admitted.
  std::string counterexample_kind;
  std::optional<TruncatedElement> counterexample;
};

// Compares the size-(depth + 1) blocks admitted by the SFT whose allowed
// windows are the size-s root blocks of <gens> with pi_(depth + 1)(<gens>).
// The group order comes from a LevelChain; the counterexample is the first
// admitted block (in label-table order) outside the group.
ClosureReport ClosureVsSft(SignaturePtr sig, const std::vector<FsElement>& gens,
                           int s, int depth, std::size_t cap);

enum class ApproximationMode { kInduction, kLookup, kBoth };

struct Approximation {
  std::optional<TruncatedElement> induction;
  std::optional<TruncatedElement> lookup;
  bool agree = true;
};

// Finds elements of pi_(D + 1)(<gens>), D = depth(target), agreeing with the
// target on X^[n]. The induction builds g_(m+1) = g_m * prod_x delta_x(f^(x))
// from approximations of the sections of f = g_m^-1 * target, starting from
// a root-block lookup for m <= s - 1; a product factor outside the group is
// an inconsistency error. The lookup lifts target|X^[n] through the chain.
// Throws InputError when the target contains a window outside the allowed
// size-s blocks.
Approximation ApproximateInGroup(const TruncatedElement& target,
                                 SignaturePtr sig,
                                 const std::vector<FsElement>& gens, int n,
                                 int s, ApproximationMode mode,
                                 std::size_t cap);

}  // namespace treeshift

#endif  // TREESHIFT_SHIFTS_HPP_

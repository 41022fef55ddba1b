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

// Group-theoretic certificates on level quotients and the run machinery
// behind the characterization of finitely constrained groups.
//
// Every certificate here is depth-bounded: a pass at depth n is evidence
// about the quotients that were examined, not a statement about the infinite
// group.

#ifndef TREESHIFT_ANALYSIS_HPP_
#define TREESHIFT_ANALYSIS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "treeshift/automata.hpp"
#include "treeshift/quotient.hpp"

namespace treeshift {

struct TransitivityReport {
  bool transitive = true;
  // First level m (1 <= m <= size) whose orbit of 0^m is not all of X^m.
  std::optional<int> failing_level;
  std::size_t orbit_size = 0;
};

// Transitivity on X^m for every 1 <= m <= q.size(). The quotient of size n
// determines the action on words of length up to n.
TransitivityReport IsLevelTransitive(const LevelQuotient& q);

struct SelfReplicationReport {
  bool replicating = true;
  std::optional<int> letter;                  // first letter that fails
  std::optional<TruncatedElement> missing;    // first uncovered element
};

// For each letter x, the sections at x of the elements of pi_n fixing x cover
// pi_(n-1). Requires n >= 2 and both quotients within the cap.
SelfReplicationReport IsSelfReplicatingAt(SignaturePtr sig,
                                          const std::vector<FsElement>& gens,
                                          int n, std::size_t cap);

struct BranchWitness {
  TruncatedElement element;   // in Triv(level) of pi_(n-1)
  int letter = 0;
  TruncatedElement lifted;    // delta_letter(element), outside pi_n
};

struct BranchCertificate {
  int level = 0;   // the Triv level being branched over
  int depth = 0;   // n: membership is tested in pi_n
  bool pass = false;
  // "exhaustive" when every element of Triv(level) was lifted; "generators"
  // when only a generating set of it was (delta_x is a homomorphism, so this
  // suffices for the delta form).
  std::string mode;
  BigCount triv_order;
  std::size_t checked = 0;
  // "all tuples" or "coordinate and diagonal tuples".
  std::string tuple_mode;
  std::size_t tuples_checked = 0;
  std::optional<BranchWitness> witness;
};

// Whether delta_x(g) lies in pi_n for every g in Triv_(pi_(n-1))(level) and
// every letter x, together with the tuple form: the element with trivial
// root label and sections (g_x)_x lies in pi_n. The two forms must agree;
// a disagreement is an inconsistency error. Requires n >= level + 1, n >= 2.
BranchCertificate CheckBranching(SignaturePtr sig,
                                 const std::vector<FsElement>& gens, int level,
                                 int n, std::size_t cap);

struct BranchSearch {
  std::optional<int> level;   // smallest Triv level passing at every depth
  int pattern_size = 0;       // level + 1 when found
  std::vector<BranchCertificate> attempts;
};

// Tries levels 0..max_level; a level passes when CheckBranching passes at
// n = level + 2, level + 3 and level + 4.
BranchSearch FindBranchingLevel(SignaturePtr sig,
                                const std::vector<FsElement>& gens,
                                int max_level, std::size_t cap);

// Smallest k >= 1 such that every path from the root to X^k repeats a state
// and |r(X^[k])| = |r(X^[k + 1])|. Since image sizes never decrease and are
// bounded by N, k <= 2N - 1. Requires run.depth >= 2N where N = state_count.
int KOf(const TruncatedRun& run, int state_count);

// The identity run of the pigeonhole construction: r agrees with the input on
// X^[k]; below it r(wx) = run(beta(r(w)) x) where beta(q) is the first word
// of X^[k] in word order carrying q. Requires g trivial on X^(2N), a valid
// run for g, and r(X^[k]) = r(X^[k + 1]). The result is re-validated.
TruncatedRun IdentityRun(const Automaton& aut, const TruncatedElement& g,
                         const TruncatedRun& run, int k);

// mu(w) for w in X^k is the prefix at which the first repeated state along w
// first occurs; C_g keeps the prefix-minimal words of {mu(w)}. Sorted.
std::vector<Word> BuildCg(const TruncatedRun& run, int k);

bool IsAntichain(const std::vector<Word>& words);
// Every word of X^level has a prefix in `words`.
bool CoversLevel(const std::vector<Word>& words, int arity, int level);

struct DecompositionReport {
  bool holds = false;             // product in word order equals g
  bool order_independent = false; // reversed order gives the same product
  TruncatedElement product;
};

// Checks g = prod_{c in C} delta_c(g_c). Requires C to be an antichain
// covering some level, g trivial at every strict prefix of a word of C and
// depth(g) >= max |c|.
DecompositionReport DecomposeOverCg(const TruncatedElement& g,
                                    const std::vector<Word>& antichain);

struct MovementReport {
  Word v;                       // g^-1(u)
  TruncatedElement lhs;         // (delta_u(h))^g
  TruncatedElement rhs;         // delta_v(h^(g_v))
  bool holds = false;
};

// (delta_u(h))^g = delta_v(h^(g_v)) with v = g^-1(u), compared on X^[depth].
MovementReport MovementCheck(const FsElement& h, const Word& u,
                             const FsElement& g, int depth);
// Truncated form: depth(h) + |u| must equal depth(g).
MovementReport MovementCheck(const TruncatedElement& h, const Word& u,
                             const TruncatedElement& g);

struct OdometerWitnessReport {
  int n = 0;
  FsElement element;               // delta_1(a^(2^n))
  std::size_t allowed_blocks = 0;  // |pi_(n+1)(O)|
  std::size_t states_checked = 0;
  bool part_a = false;  // every size-(n+1) block of the element is allowed
  bool part_b = false;  // its size-(n+2) root block is not in pi_(n+2)(O)
  TruncatedElement separating_block;
  std::size_t quotient_order = 0;  // |pi_(n+2)(O)|
};

// Requires 1 <= n <= 5.
OdometerWitnessReport OdometerWitness(int n, std::size_t cap);

}  // namespace treeshift

#endif  // TREESHIFT_ANALYSIS_HPP_

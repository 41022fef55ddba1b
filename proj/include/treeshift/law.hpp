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

// Group laws, i.e. words in free variables, checked on level quotients.
//
// Grammar (whitespace ignored):
//   law     = product [ "=" product ]
//   product = power { power }
//   power   = atom [ "^" integer ]
//   atom    = variable | "1" | "(" product ")" | "[" product "," product "]"
//   variable = lowercase letter { digit }
// [u, v] is u^-1 v^-1 u v and "u = v" stands for u v^-1.
//
// A law holding in G holds in every quotient pi_n(G), so a failure in some
// quotient refutes it for G while a pass is only evidence.

#ifndef TREESHIFT_LAW_HPP_
#define TREESHIFT_LAW_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treeshift/quotient.hpp"

namespace treeshift {

// A letter of the free group: variable index and sign (+1 or -1).
struct FreeLetter {
  int variable = 0;
  int sign = 1;
  bool operator==(const FreeLetter&) const = default;
};

struct Law {
  std::string text;
  std::vector<std::string> variables;  // sorted
  std::vector<FreeLetter> word;        // freely reduced
};

// Throws InputError with the offending position on malformed input, and
// when the expanded word would exceed max_length letters.
Law ParseLaw(const std::string& text, std::size_t max_length = 1000000);

// Evaluates the law with values[i] substituted for variable i.
TruncatedElement EvaluateLaw(const Law& law,
                             const std::vector<TruncatedElement>& values,
                             const TruncatedElement& identity);

inline constexpr std::size_t kDefaultLawBudget = 1000000;
inline constexpr std::uint64_t kDefaultLawSeed = 20260101;

struct LawReport {
  bool holds = true;
  // "exhaustive" when every substitution was tried, otherwise "sampled".
  std::string mode;
  std::size_t substitutions = 0;
  BigCount space;  // |q|^(number of variables)
  // Variable name and value of the first failing substitution.
  std::vector<std::pair<std::string, TruncatedElement>> witness;
  std::optional<TruncatedElement> witness_value;
};

// Exhaustive over all substitutions when |q|^v <= budget, otherwise `budget`
// substitutions drawn with a seeded mt19937_64. Requires a complete quotient.
LawReport LawCheck(const LevelQuotient& q, const Law& law,
                   std::size_t budget = kDefaultLawBudget,
                   std::uint64_t seed = kDefaultLawSeed);

}  // namespace treeshift

#endif  // TREESHIFT_LAW_HPP_

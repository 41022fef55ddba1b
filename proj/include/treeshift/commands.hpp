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

// Report-producing commands. Each report is a JSON object whose first fields
// are "claim", "status", "witness", "depth" and "cap_used", followed by
// command-specific details; the text form is a short table for terminals.
// Errors propagate as treeshift::Error.

#ifndef TREESHIFT_COMMANDS_HPP_
#define TREESHIFT_COMMANDS_HPP_

#include <cstdint>
#include <string>

#include "treeshift/io.hpp"
#include "treeshift/law.hpp"

namespace treeshift {

struct CommandResult {
  bool pass = true;  // false: the check ran and failed
  Json report;
  std::string text;
};

CommandResult RunQuotient(const NamedGroup& g, int depth, std::size_t cap);
CommandResult RunBranchCheck(const NamedGroup& g, int level, int depth,
                             std::size_t cap);
CommandResult RunBranchSearch(const NamedGroup& g, int max_level,
                              std::size_t cap);
CommandResult RunSftRoundtrip(const NamedGroup& g, int pattern_size, int depth,
                              std::size_t cap);
// Checks the root blocks of every generator of `configs` up to `depth`.
CommandResult RunAutomatonCheck(const AutomatonSpec& a,
                                const NamedGroup& configs, int depth);
CommandResult RunOdometerDemo(int n, std::size_t cap);
CommandResult RunLawCheck(const NamedGroup& g, const std::string& law,
                          int depth, std::size_t cap, std::size_t budget,
                          std::uint64_t seed);

}  // namespace treeshift

#endif  // TREESHIFT_COMMANDS_HPP_

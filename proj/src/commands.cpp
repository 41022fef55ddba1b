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

#include "treeshift/commands.hpp"

#include <sstream>

#include "treeshift/analysis.hpp"

namespace treeshift {

namespace {

constexpr const char* kDepthNote =
    "depth-bounded certificate: evidence about the quotients examined, not a "
    "statement about every depth";

Json Header(const std::string& claim, bool pass, Json witness, int depth,
            std::size_t cap) {
  Json j;
  j["claim"] = claim;
  j["status"] = pass ? "pass" : "fail";
  j["witness"] = std::move(witness);
  j["depth"] = depth;
  j["cap_used"] = cap;
  return j;
}

std::string Status(bool pass) { return pass ? "PASS" : "FAIL"; }

}  // namespace

CommandResult RunQuotient(const NamedGroup& g, int depth, std::size_t cap) {
  if (depth < 1) throw InputError("--depth must be at least 1");
  CommandResult out;
  out.report = Header("level quotient orders of " + g.name, true, nullptr,
                      depth, cap);
  Json levels = Json::array();
  std::ostringstream text;
  text << "quotients of " << g.name << " (cap " << cap << ")\n";
  text << "n  |pi_n|  |Triv(m)| m=0..n  |Stab(m)| m=0..n\n";
  for (int n = 1; n <= depth; ++n) {
    const LevelQuotient q = EnumerateQuotient(g.signature, g.generators, n, cap);
    q.RequireComplete();
    const LevelChain chain(g.signature, g.generators, n);
    if (chain.Order() != BigCount(q.order()))
      throw Error(ErrorCode::kInconsistency,
                  "stabilizer chain order " + chain.Order().ToString() +
                      " differs from the enumerated order " +
                      std::to_string(q.order()));
    std::vector<std::size_t> triv(n + 1, 0);
    std::vector<std::size_t> stab(n + 1, 0);
    for (const TruncatedElement& e : q.elements()) {
      const int level = TrivLevelOf(e).level;
      for (int m = 0; m <= n; ++m) {
        if (level >= m) ++triv[m];
        if (StabilizesLevel(e, m)) ++stab[m];
      }
    }
    Json row;
    row["size"] = n;
    row["order"] = q.order();
    row["triv"] = triv;
    row["stab"] = stab;
    levels.push_back(row);
    text << n << "  " << q.order() << "  ";
    for (std::size_t t : triv) text << t << ' ';
    text << " ";
    for (std::size_t s : stab) text << s << ' ';
    text << '\n';
  }
  out.report["levels"] = levels;
  out.text = text.str();
  return out;
}

namespace {

Json CertificateToJson(const BranchCertificate& c) {
  Json j;
  j["level"] = c.level;
  j["depth"] = c.depth;
  j["status"] = c.pass ? "pass" : "fail";
  j["mode"] = c.mode;
  j["triv_order"] = CountToJson(c.triv_order);
  j["elements_checked"] = c.checked;
  j["tuple_mode"] = c.tuple_mode;
  j["tuples_checked"] = c.tuples_checked;
  return j;
}

Json BranchWitnessToJson(const BranchCertificate& c) {
  if (!c.witness) return nullptr;
  Json w;
  w["element"] = BlockToJson(c.witness->element);
  w["letter"] = c.witness->letter;
  w["lifted"] = BlockToJson(c.witness->lifted);
  return w;
}

}  // namespace

CommandResult RunBranchCheck(const NamedGroup& g, int level, int depth,
                             std::size_t cap) {
  const BranchCertificate c =
      CheckBranching(g.signature, g.generators, level, depth, cap);
  CommandResult out;
  out.pass = c.pass;
  out.report = Header("symbolic branching of " + g.name + " over Triv(" +
                          std::to_string(level) + ")",
                      c.pass, BranchWitnessToJson(c), depth, cap);
  out.report["certificate"] = CertificateToJson(c);
  out.report["pattern_size"] = level + 1;
  out.report["note"] = kDepthNote;
  std::ostringstream text;
  text << "branching of " << g.name << " over Triv(" << level << ") at depth "
       << depth << ": " << Status(c.pass) << "\n"
       << "  |Triv| = " << c.triv_order.ToString() << ", " << c.mode << ", "
       << c.checked << " elements, " << c.tuples_checked << " tuples ("
       << c.tuple_mode << ")\n";
  if (c.witness)
    text << "  delta_" << c.witness->letter << "(" << c.witness->element.ToString()
         << ") is not in pi_" << depth << "\n";
  out.text = text.str();
  return out;
}

CommandResult RunBranchSearch(const NamedGroup& g, int max_level,
                              std::size_t cap) {
  if (max_level < 0) throw InputError("--max-level must be nonnegative");
  const BranchSearch s = FindBranchingLevel(g.signature, g.generators,
                                            max_level, cap);
  CommandResult out;
  out.pass = s.level.has_value();
  Json witness = nullptr;
  if (s.level) {
    witness = Json::object();
    witness["level"] = *s.level;
    witness["pattern_size"] = s.pattern_size;
  }
  const int depth = s.attempts.empty() ? 0 : s.attempts.back().depth;
  out.report = Header("smallest branching level of " + g.name + " up to " +
                          std::to_string(max_level),
                      out.pass, witness, depth, cap);
  Json attempts = Json::array();
  for (const BranchCertificate& c : s.attempts) {
    Json a = CertificateToJson(c);
    a["witness"] = BranchWitnessToJson(c);
    attempts.push_back(a);
  }
  out.report["attempts"] = attempts;
  out.report["rule"] =
      "a level b passes when the certificate passes at depths b+2, b+3, b+4";
  out.report["note"] = kDepthNote;
  std::ostringstream text;
  text << "branching search for " << g.name << ": ";
  if (s.level)
    text << "level " << *s.level << " (pattern size " << s.pattern_size << ")\n";
  else
    text << "no level up to " << max_level << "\n";
  for (const BranchCertificate& c : s.attempts)
    text << "  b=" << c.level << " n=" << c.depth << " " << Status(c.pass)
         << " |Triv|=" << c.triv_order.ToString() << " " << c.mode << "\n";
  out.text = text.str();
  return out;
}

CommandResult RunSftRoundtrip(const NamedGroup& g, int pattern_size, int depth,
                              std::size_t cap) {
  const ClosureReport r =
      ClosureVsSft(g.signature, g.generators, pattern_size, depth, cap);
  CommandResult out;
  out.pass = r.equal;
  Json witness = nullptr;
  if (!r.equal) {
    witness = Json::object();
    witness["kind"] = r.counterexample_kind;
    witness["block"] = r.counterexample ? BlockToJson(*r.counterexample) : nullptr;
  }
  out.report = Header("blocks of size " + std::to_string(depth + 1) +
                          " admitted by the size-" +
                          std::to_string(pattern_size) +
                          " shift of finite type of " + g.name +
                          " equal the level quotient",
                      r.equal, witness, depth, cap);
  out.report["result"] = r.equal ? "equal" : "counterexample";
  out.report["pattern_size"] = pattern_size;
  out.report["allowed_blocks"] = CountToJson(r.allowed_count);
  out.report["forbidden_blocks"] = CountToJson(r.forbidden_count);
  out.report["admitted_blocks"] = CountToJson(r.admitted_count);
  out.report["quotient_order"] = CountToJson(r.quotient_order);
  out.report["inclusion"] = r.inclusion;
  out.report["note"] = kDepthNote;
  std::ostringstream text;
  text << "shift of finite type vs closure for " << g.name << ", s="
       << pattern_size << ", depth " << depth << ": "
       << (r.equal ? "equal" : "counterexample") << "\n"
       << "  allowed " << r.allowed_count.ToString() << ", admitted "
       << r.admitted_count.ToString() << ", |pi_" << depth + 1 << "| = "
       << r.quotient_order.ToString() << " (inclusion: " << r.inclusion << ")\n";
  if (!r.equal) {
    text << "  " << r.counterexample_kind << ": "
         << (r.counterexample ? r.counterexample->ToString()
                              : std::string("(too many admitted blocks to list)"))
         << "\n";
  }
  out.text = text.str();
  return out;
}

CommandResult RunAutomatonCheck(const AutomatonSpec& a,
                                const NamedGroup& configs, int depth) {
  if (depth < 1) throw InputError("--depth must be at least 1");
  RequireSameSignature(*a.automaton.signature(), *configs.signature);
  std::vector<std::string> names = configs.generator_names;
  std::vector<FsElement> elements = configs.generators;
  if (elements.empty()) {
    names.push_back("e");
    elements.push_back(FsElement::Identity(configs.signature));
  }
  CommandResult out;
  Json results = Json::array();
  Json witness = nullptr;
  std::ostringstream text;
  text << "automaton " << a.name << " on " << configs.name
       << " configurations up to block size " << depth << "\n";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    std::optional<int> rejected;
    for (int n = 1; n <= depth && !rejected; ++n)
      if (!ConfigAllowedToDepth(a.automaton, elements[i], n)) rejected = n;
    Json r;
    r["config"] = names[i];
    r["allowed"] = !rejected;
    r["rejected_at"] = rejected ? Json(*rejected) : Json(nullptr);
    results.push_back(r);
    text << "  " << names[i] << ": "
         << (rejected ? "rejected at block size " + std::to_string(*rejected)
                      : std::string("allowed"))
         << "\n";
    if (rejected && out.pass) {
      out.pass = false;
      witness = Json::object();
      witness["config"] = names[i];
      witness["block"] = BlockToJson(Truncate(elements[i], *rejected - 1));
    }
  }
  const std::vector<bool> viable = ViableStates(a.automaton);
  Json viable_names = Json::array();
  for (int s = 0; s < a.automaton.state_count(); ++s)
    if (viable[s]) viable_names.push_back(a.automaton.state_names()[s]);
  out.report = Header("root blocks of every " + configs.name +
                          " configuration are allowed by " + a.name,
                      out.pass, witness, depth, 0);
  out.report["viable_states"] = viable_names;
  out.report["results"] = results;
  out.report["note"] =
      "finite-depth pattern acceptance by the underlying unrestricted "
      "automaton; initial states and acceptance conditions concern infinite "
      "runs and are not evaluated here";
  out.text = text.str();
  return out;
}

CommandResult RunOdometerDemo(int n, std::size_t cap) {
  const OdometerWitnessReport r = OdometerWitness(n, cap);
  CommandResult out;
  out.pass = r.part_a && r.part_b;
  Json witness;
  witness["element"] = FsElementToJson(r.element);
  witness["separating_block"] = BlockToJson(r.separating_block);
  out.report = Header("delta_1(a^(2^" + std::to_string(n) +
                          ")) avoids every size-" + std::to_string(n + 1) +
                          " forbidden block of the odometer yet lies outside "
                          "pi_" + std::to_string(n + 2),
                      out.pass, witness, n + 1, cap);
  out.report["part_a"] = r.part_a ? "pass" : "fail";
  out.report["part_b"] = r.part_b ? "pass" : "fail";
  out.report["allowed_blocks"] = r.allowed_blocks;
  out.report["states_checked"] = r.states_checked;
  out.report["quotient_order"] = r.quotient_order;
  std::ostringstream text;
  text << "odometer demonstration, n = " << n << "\n"
       << "  (a) every size-" << n + 1 << " block of delta_1(a^" << (1 << n)
       << ") lies among the " << r.allowed_blocks << " allowed blocks: "
       << Status(r.part_a) << "\n"
       << "  (b) its size-" << n + 2 << " root block is outside pi_" << n + 2
       << " (order " << r.quotient_order << "): " << Status(r.part_b) << "\n"
       << "  separating block: " << r.separating_block.ToString() << "\n";
  out.text = text.str();
  return out;
}

CommandResult RunLawCheck(const NamedGroup& g, const std::string& law_text,
                          int depth, std::size_t cap, std::size_t budget,
                          std::uint64_t seed) {
  if (depth < 1) throw InputError("--depth must be at least 1");
  const Law law = ParseLaw(law_text);
  CommandResult out;
  Json levels = Json::array();
  Json witness = nullptr;
  bool sampled = false;
  std::ostringstream text;
  text << "law " << law_text << " on quotients of " << g.name << "\n";
  for (int n = 1; n <= depth; ++n) {
    const LevelQuotient q = EnumerateQuotient(g.signature, g.generators, n, cap);
    q.RequireComplete();
    const LawReport r = LawCheck(q, law, budget, seed);
    sampled = sampled || r.mode == "sampled";
    Json row;
    row["size"] = n;
    row["order"] = q.order();
    row["holds"] = r.holds;
    row["mode"] = r.mode;
    row["substitutions"] = r.substitutions;
    row["space"] = CountToJson(r.space);
    levels.push_back(row);
    text << "  pi_" << n << " (order " << q.order() << "): "
         << (r.holds ? "holds" : "fails") << " [" << r.mode << ", "
         << r.substitutions << " substitutions]\n";
    if (!r.holds) {
      out.pass = false;
      witness = Json::object();
      witness["size"] = n;
      Json assignment = Json::object();
      for (const auto& [name, value] : r.witness) {
        assignment[name] = BlockToJson(value);
        text << "    " << name << " = " << value.ToString() << "\n";
      }
      witness["assignment"] = assignment;
      witness["value"] = BlockToJson(*r.witness_value);
      break;
    }
  }
  out.report = Header("law " + law_text + " holds in the quotients of " +
                          g.name,
                      out.pass, witness, depth, cap);
  out.report["variables"] = law.variables;
  out.report["coverage"] = sampled ? "sampled" : "exhaustive";
  out.report["seed"] = seed;
  out.report["levels"] = levels;
  out.report["note"] =
      "a law failing in some quotient fails in the group; passing quotients "
      "are evidence only";
  out.text = text.str();
  return out;
}

}  // namespace treeshift

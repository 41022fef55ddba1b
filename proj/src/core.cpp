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

#include "treeshift/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace treeshift {

Word::Word(std::initializer_list<int> letters) {
  letters_.reserve(letters.size());
  for (int x : letters) letters_.push_back(static_cast<Letter>(x));
}

Word Word::Parse(const std::string& text) {
  if (text.empty() || text == "e" || text == "eps") return Word();
  std::vector<Letter> letters;
  if (text.find(',') != std::string::npos) {
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        int x = std::stoi(item);
        if (x < 0 || x >= kMaxAlphabetSize) throw std::out_of_range("letter");
        letters.push_back(static_cast<Letter>(x));
      } catch (const std::exception&) {
        throw InputError("bad letter '" + item + "' in word '" + text + "'");
      }
    }
    return Word(std::move(letters));
  }
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw InputError("bad letter '" + std::string(1, c) + "' in word '" +
                       text + "'");
    }
    letters.push_back(static_cast<Letter>(c - '0'));
  }
  return Word(std::move(letters));
}

Word Word::Prefix(std::size_t n) const {
  return Word(std::vector<Letter>(letters_.begin(),
                                  letters_.begin() + std::min(n, size())));
}

Word Word::Suffix(std::size_t from) const {
  if (from >= size()) return Word();
  return Word(std::vector<Letter>(letters_.begin() + from, letters_.end()));
}

Word Word::Append(Letter x) const {
  std::vector<Letter> out = letters_;
  out.push_back(x);
  return Word(std::move(out));
}

Word Word::Concat(const Word& other) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out));
}

bool Word::IsPrefixOf(const Word& other) const {
  return size() <= other.size() &&
         std::equal(letters_.begin(), letters_.end(), other.letters_.begin());
}

std::string Word::ToString() const {
  if (letters_.empty()) return "e";
  bool digits = std::all_of(letters_.begin(), letters_.end(),
                            [](Letter x) { return x < 10; });
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (auto c = size() <=> other.size(); c != 0) return c;
  return letters_ <=> other.letters_;
}

TreeLayout::TreeLayout(int arity, int depth) : arity_(arity), depth_(depth) {
  if (arity < 1) throw InputError("alphabet size must be positive");
  if (depth < -1) throw InputError("negative depth");
  offsets_.resize(depth + 2);
  offsets_[0] = 0;
  std::size_t level_size = 1;
  for (int level = 0; level <= depth; ++level) {
    offsets_[level + 1] = offsets_[level] + level_size;
    level_size *= arity;
  }
}

std::size_t TreeLayout::IndexOf(const Word& w) const {
  std::size_t rank = 0;
  for (std::size_t i = 0; i < w.size(); ++i) rank = rank * arity_ + w[i];
  return offsets_[w.size()] + rank;
}

int TreeLayout::LevelOf(std::size_t index) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

Word TreeLayout::WordAt(std::size_t index) const {
  int level = LevelOf(index);
  std::size_t rank = index - offsets_[level];
  std::vector<Letter> letters(level);
  for (int i = level - 1; i >= 0; --i) {
    letters[i] = static_cast<Letter>(rank % arity_);
    rank /= arity_;
  }
  return Word(std::move(letters));
}

std::size_t TreeSize(int arity, int depth) {
  if (depth < 0) return 0;
  return TreeLayout(arity, depth).vertex_count();
}

std::vector<Word> EnumerateWords(int arity, int n, WordSet kind) {
  if (arity < 1) throw InputError("alphabet size must be positive");
  std::vector<Word> out;
  int lo = kind == WordSet::kLevel ? n : 0;
  int hi = kind == WordSet::kBelow ? n - 1 : n;
  if (hi < lo) return out;
  TreeLayout layout(arity, hi);
  for (std::size_t i = layout.level_offset(lo); i < layout.vertex_count(); ++i)
    out.push_back(layout.WordAt(i));
  return out;
}

const char* AxiomName(Axiom axiom) {
  switch (axiom) {
    case Axiom::kAssociativity: return "associativity";
    case Axiom::kIdentity: return "identity";
    case Axiom::kInverses: return "inverses";
    case Axiom::kActionHomomorphism: return "action_homomorphism";
    case Axiom::kActionBijectivity: return "action_bijectivity";
  }
  return "?";
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

namespace {

void CheckDimensions(const LabelGroup& g, const Action& act) {
  const int m = g.order;
  const int k = act.alphabet_size;
  if (m < 1 || m > kMaxGroupOrder)
    throw InputError("group order must lie in [1, " +
                     std::to_string(kMaxGroupOrder) + "]");
  if (k < 1 || k > kMaxAlphabetSize)
    throw InputError("alphabet size must lie in [1, " +
                     std::to_string(kMaxAlphabetSize) + "]");
  if (g.mult.size() != static_cast<std::size_t>(m * m))
    throw InputError("mult table must be " + std::to_string(m) + "x" +
                     std::to_string(m));
  if (g.inverse.size() != static_cast<std::size_t>(m))
    throw InputError("inverse table must have " + std::to_string(m) +
                     " entries");
  if (act.table.size() != static_cast<std::size_t>(m * k))
    throw InputError("action table must be " + std::to_string(m) + "x" +
                     std::to_string(k));
  if (!g.names.empty() && g.names.size() != static_cast<std::size_t>(m))
    throw InputError("names must have " + std::to_string(m) + " entries");
  if (g.identity < 0 || g.identity >= m)
    throw InputError("identity index out of range");
  for (int v : g.mult)
    if (v < 0 || v >= m) throw InputError("mult entry out of range");
  for (int v : g.inverse)
    if (v < 0 || v >= m) throw InputError("inverse entry out of range");
  for (int v : act.table)
    if (v < 0 || v >= k) throw InputError("action entry out of range");
}

std::string Triple(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

}  // namespace

ValidationReport ValidateGroupAndAction(const LabelGroup& g,
                                        const Action& act) {
  CheckDimensions(g, act);
  const int m = g.order;
  const int k = act.alphabet_size;
  auto mul = [&](int a, int b) { return g.mult[a * m + b]; };
  auto phi = [&](int a, int x) { return act.table[a * k + x]; };

  ValidationReport report;

  AxiomCheck assoc(Axiom::kAssociativity);
  for (int a = 0; a < m && assoc.passed; ++a)
    for (int b = 0; b < m && assoc.passed; ++b)
      for (int c = 0; c < m && assoc.passed; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          assoc.passed = false;
          assoc.witness = {a, b, c};
          assoc.detail = "(ab)c != a(bc) at " + Triple(a, b, c);
        }
  report.checks.push_back(assoc);

  AxiomCheck ident(Axiom::kIdentity);
  const int e = g.identity;
  for (int a = 0; a < m && ident.passed; ++a)
    if (mul(e, a) != a || mul(a, e) != a) {
      ident.passed = false;
      ident.witness = {a, -1, -1};
      ident.detail = "identity fails against element " + std::to_string(a);
    }
  report.checks.push_back(ident);

  AxiomCheck inv(Axiom::kInverses);
  for (int a = 0; a < m && inv.passed; ++a) {
    int b = g.inverse[a];
    if (mul(a, b) != e || mul(b, a) != e) {
      inv.passed = false;
      inv.witness = {a, b, -1};
      inv.detail = "element " + std::to_string(a) + " times its listed inverse " +
                   std::to_string(b) + " is not the identity";
    }
  }
  report.checks.push_back(inv);

  AxiomCheck hom(Axiom::kActionHomomorphism);
  for (int x = 0; x < k && hom.passed; ++x)
    if (phi(e, x) != x) {
      hom.passed = false;
      hom.witness = {e, x, phi(e, x)};
      hom.detail = "identity moves letter " + std::to_string(x);
    }
  for (int a = 0; a < m && hom.passed; ++a)
    for (int b = 0; b < m && hom.passed; ++b)
      for (int x = 0; x < k && hom.passed; ++x)
        if (phi(a, phi(b, x)) != phi(mul(a, b), x)) {
          hom.passed = false;
          hom.witness = {a, b, x};
          hom.detail = "a(b(x)) != (ab)(x) at (a,b,x)=" + Triple(a, b, x);
        }
  report.checks.push_back(hom);

  AxiomCheck bij(Axiom::kActionBijectivity);
  for (int a = 0; a < m && bij.passed; ++a) {
    std::vector<int> seen(k, -1);
    for (int x = 0; x < k && bij.passed; ++x) {
      int y = phi(a, x);
      if (seen[y] >= 0) {
        bij.passed = false;
        bij.witness = {a, seen[y], x};
        bij.detail = "element " + std::to_string(a) + " maps letters " +
                     std::to_string(seen[y]) + " and " + std::to_string(x) +
                     " to the same letter";
      }
      seen[y] = x;
    }
  }
  report.checks.push_back(bij);
  return report;
}

SignaturePtr Signature::Create(LabelGroup group, Action action) {
  ValidationReport report = ValidateGroupAndAction(group, action);
  if (const AxiomCheck* bad = report.first_failure())
    throw InputError(std::string("axiom '") + AxiomName(bad->axiom) +
                     "' fails: " + bad->detail);
  auto sig = std::shared_ptr<Signature>(new Signature());
  const int m = group.order;
  const int k = action.alphabet_size;
  sig->arity_ = k;
  sig->mult_.assign(group.mult.begin(), group.mult.end());
  sig->inverse_.assign(group.inverse.begin(), group.inverse.end());
  sig->action_.assign(action.table.begin(), action.table.end());
  sig->action_inv_.resize(m * k);
  for (int a = 0; a < m; ++a)
    for (int x = 0; x < k; ++x)
      sig->action_inv_[a * k + action.table[a * k + x]] =
          static_cast<Letter>(x);
  sig->group_ = std::move(group);
  sig->action_table_ = std::move(action);
  return sig;
}

std::string Signature::LabelName(Label a) const {
  if (!group_.names.empty()) return group_.names[a];
  return std::to_string(a);
}

bool Signature::SameAs(const Signature& other) const {
  return this == &other ||
         (group_.order == other.group_.order &&
          group_.mult == other.group_.mult &&
          group_.inverse == other.group_.inverse &&
          group_.identity == other.group_.identity &&
          action_table_.alphabet_size == other.action_table_.alphabet_size &&
          action_table_.table == other.action_table_.table);
}

std::optional<std::string> Signature::CheckSubgroup(
    const std::vector<Label>& subset) const {
  std::vector<bool> in(order(), false);
  for (Label b : subset) {
    if (b >= order()) return "subgroup element " + std::to_string(b) +
                             " out of range";
    in[b] = true;
  }
  if (!in[identity()]) return std::string("subgroup lacks the identity");
  for (int a = 0; a < order(); ++a) {
    if (!in[a]) continue;
    if (!in[Inv(a)])
      return "subgroup not closed under inverse at " + std::to_string(a);
    for (int b = 0; b < order(); ++b)
      if (in[b] && !in[Mul(a, b)])
        return "subgroup not closed under mult at (" + std::to_string(a) +
               "," + std::to_string(b) + ")";
  }
  return std::nullopt;
}

void RequireSameSignature(const Signature& a, const Signature& b) {
  if (!a.SameAs(b)) throw InputError("signature mismatch");
}

SignaturePtr CyclicSwapSignature() {
  static const SignaturePtr sig = Signature::Create(
      LabelGroup{2, {0, 1, 1, 0}, {0, 1}, 0, {"id", "s"}},
      Action{2, {0, 1, 1, 0}});
  return sig;
}

SignaturePtr CyclicTrivialSignature(int arity) {
  std::vector<int> table;
  for (int a = 0; a < 2; ++a)
    for (int x = 0; x < arity; ++x) table.push_back(x);
  return Signature::Create(LabelGroup{2, {0, 1, 1, 0}, {0, 1}, 0, {"id", "s"}},
                           Action{arity, std::move(table)});
}

SignaturePtr TrivialGroupSignature(int arity) {
  std::vector<int> table(arity);
  std::iota(table.begin(), table.end(), 0);
  return Signature::Create(LabelGroup{1, {0}, {0}, 0, {"id"}},
                           Action{arity, std::move(table)});
}

SignaturePtr SymmetricSignature(int arity) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(arity);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int m = static_cast<int>(perms.size());
  if (m > kMaxGroupOrder) throw InputError("symmetric group too large");
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[perms[i]] = i;
  LabelGroup g;
  g.order = m;
  g.identity = 0;
  g.mult.resize(m * m);
  g.inverse.resize(m);
  Action act{arity, {}};
  for (int a = 0; a < m; ++a) {
    std::vector<int> inv(arity);
    for (int x = 0; x < arity; ++x) inv[perms[a][x]] = x;
    g.inverse[a] = index.at(inv);
    for (int b = 0; b < m; ++b) {
      std::vector<int> ab(arity);
      for (int x = 0; x < arity; ++x) ab[x] = perms[a][perms[b][x]];
      g.mult[a * m + b] = index.at(ab);
    }
    for (int x = 0; x < arity; ++x) act.table.push_back(perms[a][x]);
  }
  return Signature::Create(std::move(g), std::move(act));
}

Pattern::Pattern(std::map<Word, Label> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InputError("pattern domain must be nonempty");
}

std::optional<int> Pattern::BlockSize(int arity) const {
  int n = static_cast<int>(labels_.rbegin()->first.size()) + 1;
  if (labels_.size() != TreeSize(arity, n - 1)) return std::nullopt;
  for (const auto& [w, label] : labels_)
    for (Letter x : w.letters())
      if (x >= arity) return std::nullopt;
  return n;
}

std::string Distance::ToString() const {
  switch (kind) {
    case Kind::kZero: return "0";
    case Kind::kExact:
      return exponent == 0 ? "1" : "1/" + std::to_string(1ULL << exponent);
    case Kind::kAtMost: return "<= 2^-" + std::to_string(exponent);
  }
  return "?";
}

bool DistanceLessEq(const Distance& a, const Distance& b) {
  if (a.kind == Distance::Kind::kAtMost || b.kind == Distance::Kind::kAtMost)
    throw InputError("cannot order unresolved distances");
  if (a.kind == Distance::Kind::kZero) return true;
  if (b.kind == Distance::Kind::kZero) return false;
  return a.exponent >= b.exponent;
}

}  // namespace treeshift

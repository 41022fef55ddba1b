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

#include "treeshift/quotient.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

namespace treeshift {

namespace {

std::string Key(const TruncatedElement& g) {
  return std::string(g.labels().begin(), g.labels().end());
}

bool LabelLess(const TruncatedElement& a, const TruncatedElement& b) {
  return a.labels() < b.labels();
}

}  // namespace

std::size_t DefaultCap() {
  const char* env = std::getenv("TREESHIFT_CAP");
  if (env == nullptr || *env == '\0') return kDefaultCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0)
    throw InputError("TREESHIFT_CAP must be a positive integer");
  return static_cast<std::size_t>(v);
}

std::vector<TruncatedElement> TruncateAll(const std::vector<FsElement>& gens,
                                          int depth) {
  std::vector<TruncatedElement> out;
  out.reserve(gens.size());
  for (const FsElement& g : gens) {
    if (!out.empty()) RequireSameSignature(*out[0].signature(), *g.signature());
    out.push_back(Truncate(g, depth));
  }
  return out;
}

bool LevelQuotient::Contains(const TruncatedElement& g) const {
  if (g.depth() != depth())
    throw InputError("element depth " + std::to_string(g.depth()) +
                     " does not match quotient depth " +
                     std::to_string(depth()));
  return index_.count(Key(g)) > 0;
}

void LevelQuotient::RequireComplete() const {
  if (!complete_)
    throw CapError("quotient of size " + std::to_string(size_) +
                   " exceeds the enumeration cap of " + std::to_string(cap_) +
                   " elements");
}

LevelQuotient EnumerateQuotient(SignaturePtr sig,
                                const std::vector<FsElement>& gens, int n,
                                std::size_t cap) {
  if (n < 1) throw InputError("quotient size must be at least 1");
  for (const FsElement& g : gens)
    RequireSameSignature(*sig, *g.signature());
  return EnumerateAtDepth(sig, TruncateAll(gens, n - 1), n - 1, cap);
}

LevelQuotient EnumerateQuotient(SignaturePtr sig,
                                const std::vector<TruncatedElement>& gens,
                                std::size_t cap) {
  return EnumerateAtDepth(sig, gens, gens.empty() ? 0 : gens[0].depth(), cap);
}

LevelQuotient EnumerateAtDepth(SignaturePtr sig,
                               const std::vector<TruncatedElement>& gens,
                               int depth, std::size_t cap) {
  if (cap < 1) throw InputError("cap must be at least 1");
  if (!sig) throw InputError("missing signature");
  for (const TruncatedElement& g : gens) {
    RequireSameSignature(*sig, *g.signature());
    if (g.depth() != depth)
      throw InputError("generator truncations differ in depth");
  }
  LevelQuotient q;
  q.sig_ = sig;
  q.size_ = depth + 1;
  q.cap_ = cap;
  q.gens_ = gens;
  const TruncatedElement id = TruncatedElement::Identity(sig, depth);
  std::vector<TruncatedElement> found{id};
  q.index_.insert(Key(id));
  std::deque<std::size_t> frontier{0};
  bool complete = true;
  while (!frontier.empty() && complete) {
    const std::size_t i = frontier.front();
    frontier.pop_front();
    for (const TruncatedElement& g : gens) {
      TruncatedElement p = Multiply(g, found[i]);
      if (!q.index_.insert(Key(p)).second) continue;
      found.push_back(std::move(p));
      frontier.push_back(found.size() - 1);
      if (found.size() > cap) {
        complete = false;
        break;
      }
    }
  }
  std::sort(found.begin(), found.end(), LabelLess);
  q.elements_ = std::move(found);
  q.complete_ = complete;
  return q;
}

BigCount::BigCount(std::uint64_t v) {
  while (v > 0) {
    limbs_.push_back(static_cast<std::uint32_t>(v));
    v >>= 32;
  }
}

BigCount BigCount::operator+(const BigCount& o) const {
  BigCount r;
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(limbs_.size(), o.limbs_.size()) ||
                          carry;
       ++i) {
    std::uint64_t s = carry;
    if (i < limbs_.size()) s += limbs_[i];
    if (i < o.limbs_.size()) s += o.limbs_[i];
    r.limbs_.push_back(static_cast<std::uint32_t>(s));
    carry = s >> 32;
  }
  return r;
}

BigCount BigCount::operator*(const BigCount& o) const {
  BigCount r;
  if (limbs_.empty() || o.limbs_.empty()) return r;
  std::vector<std::uint64_t> acc(limbs_.size() + o.limbs_.size() + 1, 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < o.limbs_.size() || carry; ++j) {
      std::uint64_t cur = acc[i + j] + carry;
      if (j < o.limbs_.size())
        cur += static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j];
      acc[i + j] = cur & 0xffffffffULL;
      carry = cur >> 32;
    }
  }
  for (std::uint64_t a : acc) r.limbs_.push_back(static_cast<std::uint32_t>(a));
  while (!r.limbs_.empty() && r.limbs_.back() == 0) r.limbs_.pop_back();
  return r;
}

std::strong_ordering BigCount::operator<=>(const BigCount& o) const {
  if (limbs_.size() != o.limbs_.size()) return limbs_.size() <=> o.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;)
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
  return std::strong_ordering::equal;
}

std::optional<std::uint64_t> BigCount::ToU64() const {
  if (limbs_.size() > 2) return std::nullopt;
  std::uint64_t v = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
  return v;
}

std::string BigCount::ToString() const {
  if (limbs_.empty()) return "0";
  std::vector<std::uint32_t> n = limbs_;
  std::string digits;
  while (!n.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = n.size(); i-- > 0;) {
      const std::uint64_t cur = (rem << 32) | n[i];
      n[i] = static_cast<std::uint32_t>(cur / 10);
      rem = cur % 10;
    }
    digits.push_back(static_cast<char>('0' + rem));
    while (!n.empty() && n.back() == 0) n.pop_back();
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

LevelChain::LevelChain(SignaturePtr sig, const std::vector<FsElement>& gens,
                       int n)
    : sig_(std::move(sig)), size_(n) {
  if (n < 1) throw InputError("quotient size must be at least 1");
  for (const FsElement& g : gens) RequireSameSignature(*sig_, *g.signature());
  Build(TruncateAll(gens, n - 1));
}

LevelChain::LevelChain(SignaturePtr sig,
                       const std::vector<TruncatedElement>& gens)
    : sig_(std::move(sig)), size_(gens.empty() ? 1 : gens[0].depth() + 1) {
  for (const TruncatedElement& g : gens) {
    RequireSameSignature(*sig_, *g.signature());
    if (g.depth() != size_ - 1)
      throw InputError("generator truncations differ in depth");
  }
  Build(gens);
}

void LevelChain::Build(const std::vector<TruncatedElement>& gens) {
  vertices_ = TreeSize(sig_->arity(), size_ - 1);
  const TruncatedElement id = TruncatedElement::Identity(sig_, size_ - 1);
  reps_.assign(vertices_, {});
  for (auto& level : reps_) level.emplace(sig_->identity(), Rep{id, id});
  if (vertices_ == 0) return;
  for (const TruncatedElement& g : gens) {
    TruncatedElement h = g;
    const std::size_t v = Sift(h, 0);
    if (v < vertices_) AddStrong(std::move(h), v);
  }
  // Schreier-Sims, deepest vertex first. A pair (representative label,
  // strong generator) once sifted stays sifted because representatives are
  // only ever added, so the pairs already tested are remembered.
  std::vector<std::set<std::pair<Label, std::size_t>>> tested(vertices_);
  std::size_t i = vertices_ - 1;
  while (true) {
    bool added = false;
    std::vector<std::pair<Label, const Rep*>> reps;
    for (const auto& [b, rep] : reps_[i]) reps.emplace_back(b, &rep);
    for (std::size_t si = 0; si < strong_.size() && !added; ++si) {
      if (strong_level_[si] < i) continue;
      for (const auto& [b, rep] : reps) {
        if (!tested[i].insert({b, si}).second) continue;
        const TruncatedElement& s = strong_[si];
        const Label cb = sig_->Mul(s.label_at(i), b);
        TruncatedElement t =
            Multiply(reps_[i].at(cb).inverse, Multiply(s, rep->element));
        const std::size_t j = Sift(t, i + 1);
        if (j < vertices_) {
          AddStrong(std::move(t), j);
          i = j;
          added = true;
          break;
        }
      }
    }
    if (added) continue;
    if (i == 0) break;
    --i;
  }
}

std::size_t LevelChain::Sift(TruncatedElement& h, std::size_t start) const {
  const Label e = sig_->identity();
  for (std::size_t v = start; v < vertices_; ++v) {
    const Label a = h.label_at(v);
    if (a == e) continue;
    auto it = reps_[v].find(a);
    if (it == reps_[v].end()) return v;
    h = Multiply(it->second.inverse, h);
  }
  return vertices_;
}

void LevelChain::AddStrong(TruncatedElement h, std::size_t v) {
  strong_.push_back(std::move(h));
  strong_level_.push_back(v);
  CloseOrbit(v);
}

void LevelChain::CloseOrbit(std::size_t v) {
  // Everything here fixes v, so labels at v multiply: the representative
  // for c*b is s*r when s has label c and r label b.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::pair<Label, TruncatedElement>> current;
    for (const auto& [b, rep] : reps_[v]) current.emplace_back(b, rep.element);
    for (std::size_t si = 0; si < strong_.size(); ++si) {
      if (strong_level_[si] != v) continue;
      const TruncatedElement& s = strong_[si];
      for (const auto& [b, r] : current) {
        const Label cb = sig_->Mul(s.label_at(v), b);
        if (reps_[v].count(cb)) continue;
        TruncatedElement p = Multiply(s, r);
        TruncatedElement inv = Inverse(p);
        reps_[v].emplace(cb, Rep{std::move(p), std::move(inv)});
        grew = true;
      }
    }
  }
}

BigCount LevelChain::Order() const { return TrivOrder(0); }

BigCount LevelChain::TrivOrder(int level) const {
  if (level < 0 || level > size_) throw InputError("level out of range");
  BigCount r(1);
  for (std::size_t v = TreeSize(sig_->arity(), level - 1); v < vertices_; ++v)
    r = r * BigCount(reps_[v].size());
  return r;
}

bool LevelChain::Contains(const TruncatedElement& g) const {
  RequireSameSignature(*sig_, *g.signature());
  if (g.depth() != size_ - 1)
    throw InputError("element depth does not match chain depth");
  TruncatedElement h = g;
  return Sift(h, 0) == vertices_;
}

std::optional<TruncatedElement> LevelChain::Lift(
    const TruncatedElement& block) const {
  RequireSameSignature(*sig_, *block.signature());
  const int d = block.depth();
  if (d > size_ - 1) throw InputError("block deeper than chain");
  const Label e = sig_->identity();
  TruncatedElement t = block;
  TruncatedElement u = TruncatedElement::Identity(sig_, size_ - 1);
  for (std::size_t v = 0; v < t.labels().size(); ++v) {
    const Label a = t.label_at(v);
    if (a == e) continue;
    auto it = reps_[v].find(a);
    if (it == reps_[v].end()) return std::nullopt;
    t = Multiply(it->second.inverse.Restrict(d), t);
    u = Multiply(u, it->second.element);
  }
  return u;
}

std::vector<TruncatedElement> LevelChain::TrivGenerators(int level) const {
  std::vector<TruncatedElement> out;
  const Label e = sig_->identity();
  for (std::size_t v = TreeSize(sig_->arity(), level - 1); v < vertices_; ++v)
    for (const auto& [a, rep] : reps_[v])
      if (a != e) out.push_back(rep.element);
  return out;
}

std::optional<std::vector<TruncatedElement>> LevelChain::TrivElements(
    int level, std::size_t cap) const {
  const BigCount count = TrivOrder(level);
  if (count > BigCount(cap)) return std::nullopt;
  std::vector<TruncatedElement> acc{
      TruncatedElement::Identity(sig_, size_ - 1)};
  const std::size_t first = TreeSize(sig_->arity(), level - 1);
  for (std::size_t v = vertices_; v-- > first;) {
    if (reps_[v].size() == 1) continue;
    std::vector<TruncatedElement> next;
    next.reserve(acc.size() * reps_[v].size());
    for (const auto& [a, rep] : reps_[v])
      for (const TruncatedElement& t : acc)
        next.push_back(Multiply(rep.element, t));
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end(), LabelLess);
  return acc;
}

std::vector<int> LevelChain::TransversalSizes() const {
  std::vector<int> out;
  for (const auto& level : reps_) out.push_back(static_cast<int>(level.size()));
  return out;
}

}  // namespace treeshift

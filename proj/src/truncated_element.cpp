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

#include <algorithm>
#include <sstream>

#include "treeshift/elements.hpp"

namespace treeshift {

namespace {

void RequireCompatible(const TruncatedElement& g, const TruncatedElement& h) {
  RequireSameSignature(*g.signature(), *h.signature());
  if (g.depth() != h.depth())
    throw InputError("depth mismatch: " + std::to_string(g.depth()) + " vs " +
                     std::to_string(h.depth()));
}

std::size_t RankOf(const Word& w, int k) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < w.size(); ++i) r = r * k + w[i];
  return r;
}

void RequireLetters(const Word& w, int k) {
  for (Letter x : w.letters())
    if (x >= k)
      throw InputError("letter " + std::to_string(x) +
                       " outside alphabet of size " + std::to_string(k));
}

std::size_t Pow(std::size_t base, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace

TruncatedElement::TruncatedElement(SignaturePtr sig, int depth,
                                   std::vector<Label> labels)
    : sig_(std::move(sig)), depth_(depth), labels_(std::move(labels)) {
  if (!sig_) throw InputError("missing signature");
  if (depth_ < 0) throw InputError("truncation depth must be nonnegative");
  if (labels_.size() != TreeSize(sig_->arity(), depth_))
    throw InputError("label table has " + std::to_string(labels_.size()) +
                     " entries, expected " +
                     std::to_string(TreeSize(sig_->arity(), depth_)));
  for (Label a : labels_)
    if (a >= sig_->order()) throw InputError("label out of range");
}

TruncatedElement TruncatedElement::Identity(SignaturePtr sig, int depth) {
  const std::size_t n = TreeSize(sig->arity(), depth);
  const Label e = sig->identity();
  return TruncatedElement(std::move(sig), depth, std::vector<Label>(n, e));
}

TruncatedElement TruncatedElement::FromBlock(SignaturePtr sig,
                                             const Pattern& block) {
  auto size = block.BlockSize(sig->arity());
  if (!size) throw InputError("pattern domain is not of the form X^(n)");
  std::vector<Label> labels;
  labels.reserve(block.labels().size());
  // std::map iterates in length-then-lex order, which is the layout order.
  for (const auto& [w, a] : block.labels()) labels.push_back(a);
  return TruncatedElement(std::move(sig), *size - 1, std::move(labels));
}

Label TruncatedElement::label(const Word& w) const {
  if (static_cast<int>(w.size()) > depth_)
    throw InputError("word " + w.ToString() + " deeper than truncation depth " +
                     std::to_string(depth_));
  return labels_[layout().IndexOf(w)];
}

bool TruncatedElement::IsIdentity() const {
  const Label e = sig_->identity();
  return std::all_of(labels_.begin(), labels_.end(),
                     [e](Label a) { return a == e; });
}

TruncatedElement TruncatedElement::Restrict(int depth) const {
  if (depth > depth_ || depth < 0)
    throw InputError("cannot restrict depth " + std::to_string(depth_) +
                     " to " + std::to_string(depth));
  std::vector<Label> out(labels_.begin(),
                         labels_.begin() + TreeSize(sig_->arity(), depth));
  return TruncatedElement(sig_, depth, std::move(out));
}

Pattern TruncatedElement::ToBlock() const {
  std::map<Word, Label> m;
  TreeLayout lay = layout();
  for (std::size_t i = 0; i < labels_.size(); ++i) m[lay.WordAt(i)] = labels_[i];
  return Pattern(std::move(m));
}

std::string TruncatedElement::ToString() const {
  std::ostringstream out;
  TreeLayout lay = layout();
  for (int level = 0; level <= depth_; ++level) {
    if (level > 0) out << " | ";
    for (std::size_t r = 0; r < lay.level_size(level); ++r) {
      if (r > 0) out << ' ';
      out << sig_->LabelName(labels_[lay.level_offset(level) + r]);
    }
  }
  return out.str();
}

bool TruncatedElement::operator==(const TruncatedElement& other) const {
  return depth_ == other.depth_ && labels_ == other.labels_ &&
         sig_->SameAs(*other.sig_);
}

TruncatedElement Multiply(const TruncatedElement& g,
                          const TruncatedElement& h) {
  RequireCompatible(g, h);
  const Signature& sig = *g.signature();
  const int k = sig.arity();
  const TreeLayout lay = g.layout();
  std::vector<Label> out(lay.vertex_count());
  // image[r] is the rank of h(w) for the word w of rank r on this level.
  std::vector<std::size_t> image{0};
  for (int level = 0; level <= g.depth(); ++level) {
    const std::size_t off = lay.level_offset(level);
    std::vector<std::size_t> next;
    if (level < g.depth()) next.resize(image.size() * k);
    for (std::size_t r = 0; r < image.size(); ++r) {
      const Label hl = h.label_at(off + r);
      out[off + r] = sig.Mul(g.label_at(off + image[r]), hl);
      if (level < g.depth())
        for (int x = 0; x < k; ++x)
          next[r * k + x] = image[r] * k + sig.Act(hl, static_cast<Letter>(x));
    }
    image = std::move(next);
  }
  return TruncatedElement(g.signature(), g.depth(), std::move(out));
}

TruncatedElement Inverse(const TruncatedElement& g) {
  const Signature& sig = *g.signature();
  const int k = sig.arity();
  const TreeLayout lay = g.layout();
  std::vector<Label> out(lay.vertex_count());
  // pre[r] is the rank of g^-1(v) for the word v of rank r on this level.
  std::vector<std::size_t> pre{0};
  for (int level = 0; level <= g.depth(); ++level) {
    const std::size_t off = lay.level_offset(level);
    std::vector<std::size_t> next;
    if (level < g.depth()) next.resize(pre.size() * k);
    for (std::size_t r = 0; r < pre.size(); ++r) {
      const Label gl = g.label_at(off + pre[r]);
      out[off + r] = sig.Inv(gl);
      if (level < g.depth())
        for (int x = 0; x < k; ++x)
          next[r * k + x] = pre[r] * k + sig.ActInv(gl, static_cast<Letter>(x));
    }
    pre = std::move(next);
  }
  return TruncatedElement(g.signature(), g.depth(), std::move(out));
}

TruncatedElement Power(const TruncatedElement& g, long long e) {
  TruncatedElement base = e < 0 ? Inverse(g) : g;
  unsigned long long n = e < 0 ? -static_cast<unsigned long long>(e) : e;
  TruncatedElement acc = TruncatedElement::Identity(g.signature(), g.depth());
  while (n > 0) {
    if (n & 1) acc = Multiply(acc, base);
    n >>= 1;
    if (n > 0) base = Multiply(base, base);
  }
  return acc;
}

TruncatedElement Conjugate(const TruncatedElement& h,
                           const TruncatedElement& g) {
  RequireCompatible(h, g);
  return Multiply(Multiply(Inverse(g), h), g);
}

Word Act(const TruncatedElement& g, const Word& w) {
  if (static_cast<int>(w.size()) > g.depth() + 1)
    throw InputError("word of length " + std::to_string(w.size()) +
                     " too long for truncation depth " +
                     std::to_string(g.depth()));
  const Signature& sig = *g.signature();
  RequireLetters(w, sig.arity());
  const TreeLayout lay = g.layout();
  std::vector<Letter> out(w.size());
  std::size_t rank = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Label a = g.label_at(lay.level_offset(static_cast<int>(i)) + rank);
    out[i] = sig.Act(a, w[i]);
    rank = rank * sig.arity() + w[i];
  }
  return Word(std::move(out));
}

Word ActInverse(const TruncatedElement& g, const Word& w) {
  if (static_cast<int>(w.size()) > g.depth() + 1)
    throw InputError("word too long for truncation depth");
  const Signature& sig = *g.signature();
  RequireLetters(w, sig.arity());
  const TreeLayout lay = g.layout();
  std::vector<Letter> out(w.size());
  std::size_t rank = 0;  // rank of the preimage prefix
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Label a = g.label_at(lay.level_offset(static_cast<int>(i)) + rank);
    out[i] = sig.ActInv(a, w[i]);
    rank = rank * sig.arity() + out[i];
  }
  return Word(std::move(out));
}

TruncatedElement Section(const TruncatedElement& g, const Word& w) {
  const int len = static_cast<int>(w.size());
  if (len > g.depth())
    throw InputError("section word " + w.ToString() +
                     " deeper than truncation depth " +
                     std::to_string(g.depth()));
  const int k = g.signature()->arity();
  const int depth = g.depth() - len;
  const TreeLayout src = g.layout();
  const TreeLayout dst(k, depth);
  const std::size_t base = RankOf(w, k);
  std::vector<Label> out(dst.vertex_count());
  for (int level = 0; level <= depth; ++level) {
    const std::size_t width = dst.level_size(level);
    const std::size_t from = src.level_offset(len + level) + base * width;
    std::copy_n(g.labels().begin() + from, width,
                out.begin() + dst.level_offset(level));
  }
  return TruncatedElement(g.signature(), depth, std::move(out));
}

TruncatedElement Graft(const TruncatedElement& a, const TruncatedElement& b,
                       const Word& v) {
  RequireSameSignature(*a.signature(), *b.signature());
  const int len = static_cast<int>(v.size());
  if (len > a.depth())
    throw InputError("graft vertex " + v.ToString() +
                     " deeper than truncation depth " +
                     std::to_string(a.depth()));
  const int needed = a.depth() - len;
  if (b.depth() < needed)
    throw InputError("grafted element too shallow: depth " +
                     std::to_string(b.depth()) + " < " +
                     std::to_string(needed));
  const int k = a.signature()->arity();
  const TreeLayout dst = a.layout();
  const TreeLayout src = b.layout();
  std::vector<Label> out = a.labels();
  const std::size_t base = RankOf(v, k);
  for (int level = 0; level <= needed; ++level) {
    const std::size_t width = Pow(k, level);
    std::copy_n(b.labels().begin() + src.level_offset(level), width,
                out.begin() + dst.level_offset(len + level) + base * width);
  }
  return TruncatedElement(a.signature(), a.depth(), std::move(out));
}

TruncatedElement Delta(const Word& v, const TruncatedElement& g) {
  const int depth = static_cast<int>(v.size()) + g.depth();
  return Graft(TruncatedElement::Identity(g.signature(), depth), g, v);
}

std::string TrivLevel::ToString() const {
  return (lower_bound ? ">= " : "") + std::to_string(level);
}

TrivLevel TrivLevelOf(const TruncatedElement& g) {
  const Label e = g.signature()->identity();
  const TreeLayout lay = g.layout();
  for (int level = 0; level <= g.depth(); ++level)
    for (std::size_t i = lay.level_offset(level);
         i < lay.level_offset(level + 1); ++i)
      if (g.label_at(i) != e) return TrivLevel{level, false};
  return TrivLevel{g.depth() + 1, true};
}

bool InTriv(const TruncatedElement& g, int n) {
  if (n > g.depth() + 1)
    throw InputError("Triv(" + std::to_string(n) +
                     ") undecidable from depth " + std::to_string(g.depth()));
  return TrivLevelOf(g).level >= n;
}

bool StabilizesLevel(const TruncatedElement& g, int n) {
  if (n < 0) throw InputError("negative level");
  if (g.depth() < n - 1)
    throw InputError("stabilizer of level " + std::to_string(n) +
                     " needs depth >= " + std::to_string(n - 1));
  for (const Word& u : EnumerateWords(g.signature()->arity(), n,
                                      WordSet::kLevel))
    if (Act(g, u) != u) return false;
  return true;
}

SupportDescriptor Support(const TruncatedElement& g) {
  SupportDescriptor out{g.depth(), {}};
  const Label e = g.signature()->identity();
  const TreeLayout lay = g.layout();
  for (std::size_t i = 0; i < lay.vertex_count(); ++i)
    if (g.label_at(i) != e) out.words.push_back(lay.WordAt(i));
  return out;
}

Distance DistanceBetween(const TruncatedElement& f, const TruncatedElement& g,
                         int max_depth) {
  RequireSameSignature(*f.signature(), *g.signature());
  if (max_depth < 0) throw InputError("negative max_depth");
  if (f == g) return Distance::Zero();
  const int limit = std::min({f.depth(), g.depth(), max_depth});
  const TreeLayout lay(f.signature()->arity(), limit);
  for (int level = 0; level <= limit; ++level)
    for (std::size_t i = lay.level_offset(level);
         i < lay.level_offset(level + 1); ++i)
      if (f.label_at(i) != g.label_at(i)) return Distance::Exact(level);
  return Distance::AtMost(limit + 1);
}

}  // namespace treeshift

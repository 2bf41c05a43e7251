// Copyright 2026 The Authors.
//
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

// Sequence algebra over a finite ground set.
//
// A sequence is an ordered, duplicate-free tuple of ground-set elements.
// Elements are interned as dense indices 0..V-1; per-sequence membership is
// kept as a 64-bit mask, which caps the ground set at 64 elements.
//
// Operations follow these conventions everywhere in the library:
//   concat(a, b)   keeps a intact and appends b's elements that are not
//                  already present, preserving their order in b.
//   remove         deletes a set of elements (or positions) and closes the
//                  gap, preserving the order of what remains.
//   prefix         a is a prefix of b iff b starts with a verbatim; this is
//                  equivalent to the existence of c with concat(a, c) == b.
//   subsequence    a is a subsequence of b iff a can be obtained from b by
//                  deleting elements (order preserved).
//
// enumerate_sequences lists sequences length-major (shorter first) and, for
// equal lengths, lexicographically by element index. Every "first witness"
// and tie-breaking contract in the library is stated in terms of this order.

#ifndef SEQSUB_CORE_HPP_
#define SEQSUB_CORE_HPP_

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "seqsub/error.hpp"

namespace seqsub {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

// Interns element names as dense indices. Names must be unique, non-empty,
// and free of whitespace, '#', ':' and ',' so they survive the file format
// and CSV output unquoted.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw InvalidArgumentError("ground set must be non-empty");
    if (names_.size() > 64) {
      throw InvalidArgumentError("ground set larger than 64 elements is not supported");
    }
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
      const std::string& n = names_[i];
      if (n.empty()) throw InvalidArgumentError("empty element name");
      for (char c : n) {
        if (c == '#' || c == ':' || c == ',' || std::isspace(static_cast<unsigned char>(c))) {
          throw InvalidArgumentError("element name '" + n + "' contains a reserved character");
        }
      }
      if (!index_.emplace(n, i).second) {
        throw InvalidArgumentError("duplicate element name '" + n + "'");
      }
    }
  }

  // Ground set named v1..vV.
  static GroundSet numbered(int v) {
    std::vector<std::string> names;
    names.reserve(v);
    for (int i = 1; i <= v; ++i) names.push_back("v" + std::to_string(i));
    return GroundSet(std::move(names));
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  bool has(const std::string& name) const { return index_.count(name) != 0; }
  int index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw InvalidArgumentError("unknown element '" + name + "'");
    return it->second;
  }
  Mask full_mask() const {
    return size() == 64 ? ~Mask{0} : ((Mask{1} << size()) - 1);
  }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

// Ordered duplicate-free tuple of element indices.
class Sequence {
 public:
  Sequence() = default;
  explicit Sequence(std::vector<int> elems) : elems_(std::move(elems)) {
    for (int v : elems_) {
      if (v < 0 || v >= 64) throw InvalidArgumentError("element index out of range");
      Mask bit = Mask{1} << v;
      if (support_ & bit) throw InvalidArgumentError("duplicate element in sequence");
      support_ |= bit;
    }
  }

  int length() const { return static_cast<int>(elems_.size()); }
  bool empty() const { return elems_.empty(); }
  int operator[](int i) const { return elems_[i]; }
  Mask support() const { return support_; }
  bool contains(int v) const { return (support_ >> v) & 1; }
  const std::vector<int>& elements() const { return elems_; }

  // Appends one element. Precondition: not already present.
  Sequence append(int v) const {
    if (v < 0 || v >= 64 || contains(v)) {
      throw InvalidArgumentError("append: element invalid or already present");
    }
    Sequence out = *this;
    out.elems_.push_back(v);
    out.support_ |= Mask{1} << v;
    return out;
  }

  Sequence prefix(int len) const {
    if (len < 0 || len > length()) throw InvalidArgumentError("prefix length out of range");
    Sequence out;
    out.elems_.assign(elems_.begin(), elems_.begin() + len);
    for (int v : out.elems_) out.support_ |= Mask{1} << v;
    return out;
  }

  friend bool operator==(const Sequence& a, const Sequence& b) {
    return a.elems_ == b.elems_;
  }
  friend bool operator!=(const Sequence& a, const Sequence& b) { return !(a == b); }

 private:
  std::vector<int> elems_;
  Mask support_ = 0;
};

// concat(a, b): a followed by the elements of b not already in a, in b's
// order. Associative; the result's support is the union of the supports.
inline Sequence concat(const Sequence& a, const Sequence& b) {
  std::vector<int> out = a.elements();
  out.reserve(a.length() + b.length());
  for (int v : b.elements()) {
    if (!a.contains(v)) out.push_back(v);
  }
  return Sequence(std::move(out));
}

// Deletes every element whose bit is set in `removed`, preserving order.
// Bits of absent elements are ignored, so removing {v2, v4, v5} from
// (v2, v1, v5, v3) yields (v1, v3).
inline Sequence remove_elements(const Sequence& s, Mask removed) {
  std::vector<int> out;
  out.reserve(s.length());
  for (int v : s.elements()) {
    if (!((removed >> v) & 1)) out.push_back(v);
  }
  return Sequence(std::move(out));
}

// Deletes the given positions (0-based, strictly increasing), preserving the
// order of the rest.
inline Sequence remove_positions(const Sequence& s, const std::vector<int>& positions) {
  std::vector<int> out;
  out.reserve(s.length());
  std::size_t pi = 0;
  for (int i = 0; i < s.length(); ++i) {
    if (pi < positions.size() && positions[pi] == i) {
      ++pi;
      continue;
    }
    out.push_back(s[i]);
  }
  if (pi != positions.size()) {
    throw InvalidArgumentError("remove_positions: positions not strictly increasing or out of range");
  }
  return Sequence(std::move(out));
}

// True iff s starts with p verbatim.
inline bool is_prefix(const Sequence& p, const Sequence& s) {
  if (p.length() > s.length()) return false;
  for (int i = 0; i < p.length(); ++i) {
    if (p[i] != s[i]) return false;
  }
  return true;
}

// True iff a can be obtained from b by deleting elements.
inline bool is_subsequence(const Sequence& a, const Sequence& b) {
  int i = 0;
  for (int j = 0; j < b.length() && i < a.length(); ++j) {
    if (a[i] == b[j]) ++i;
  }
  return i == a.length();
}

// Number of duplicate-free sequences of length <= max_len over n allowed
// elements: sum of falling factorials. Saturates instead of overflowing.
inline std::uint64_t count_sequences(int n, int max_len) {
  const std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;  // the empty sequence
  std::uint64_t perms = 1;
  for (int len = 1; len <= std::min(max_len, n); ++len) {
    std::uint64_t factor = static_cast<std::uint64_t>(n - len + 1);
    if (perms > kMax / factor) return kMax;
    perms *= factor;
    if (total > kMax - perms) return kMax;
    total += perms;
  }
  return total;
}

// All duplicate-free sequences of length <= max_len whose elements lie in
// `allowed`, length-major and lexicographic by element index within a
// length. Throws BudgetError when the count exceeds `budget`.
inline std::vector<Sequence> enumerate_sequences(int ground_size, int max_len,
                                                 std::size_t budget,
                                                 Mask allowed = ~Mask{0}) {
  if (ground_size < 0 || ground_size > 64) {
    throw InvalidArgumentError("ground size out of range");
  }
  std::vector<int> pool;
  for (int v = 0; v < ground_size; ++v) {
    if ((allowed >> v) & 1) pool.push_back(v);
  }
  int n = static_cast<int>(pool.size());
  max_len = std::min(max_len, n);
  if (max_len < 0) max_len = 0;
  std::uint64_t total = count_sequences(n, max_len);
  if (total > budget) {
    throw BudgetError("enumeration of " + std::to_string(total) +
                      " sequences exceeds budget " + std::to_string(budget));
  }
  std::vector<Sequence> out;
  out.reserve(static_cast<std::size_t>(total));
  out.emplace_back();
  std::vector<int> cur;
  std::vector<bool> used(n, false);
  // Depth-first over pool indices in ascending order emits, for a fixed
  // length, exactly the lexicographic order of element indices.
  auto rec = [&](auto&& self, int target_len) -> void {
    if (static_cast<int>(cur.size()) == target_len) {
      out.push_back(Sequence(cur));
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      cur.push_back(pool[i]);
      self(self, target_len);
      cur.pop_back();
      used[i] = false;
    }
  };
  for (int len = 1; len <= max_len; ++len) rec(rec, len);
  return out;
}

inline std::string format_sequence(const GroundSet& gs, const Sequence& s) {
  std::string out = "(";
  for (int i = 0; i < s.length(); ++i) {
    if (i) out += ", ";
    out += gs.name(s[i]);
  }
  out += ")";
  return out;
}

}  // namespace seqsub

#endif  // SEQSUB_CORE_HPP_

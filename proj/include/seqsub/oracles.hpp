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

// Brute-force oracles: worst-case removal and optimal sequences.
//
// worst_removal minimizes h over every way to delete at most tau entries
// from a sequence. Arbitrary mode deletes any subset of positions (size
// ascending, then lexicographic by position); contiguous mode deletes a
// window of consecutive positions of the attacked sequence (empty window
// first, then by start position, then by length), so a window may straddle
// any internal structure of the sequence. Removing fewer than tau entries is
// always allowed; the empty removal is always a candidate.
//
// robust_value(f, s, m) is the post-attack value g_tau(s) = min h(s - R).
//
// brute_opt_nonrobust maximizes h over every duplicate-free sequence of
// length <= k (optionally restricted to an allowed element mask);
// brute_opt_robust maximizes g_tau. Both return the first maximizer in
// enumeration order (length-major, lexicographic by element index), making
// every result reproducible bit for bit.
//
// Budgets are hard preconditions: the candidate count is computed up front
// and a BudgetError is thrown before any evaluation when it is exceeded.

#ifndef SEQSUB_ORACLES_HPP_
#define SEQSUB_ORACLES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "seqsub/core.hpp"
#include "seqsub/error.hpp"
#include "seqsub/functions.hpp"

namespace seqsub {

enum class RemovalMode { arbitrary, contiguous };

inline const char* to_string(RemovalMode m) {
  return m == RemovalMode::arbitrary ? "arbitrary" : "contiguous";
}

struct RemovalModel {
  int tau = 0;
  RemovalMode mode = RemovalMode::arbitrary;
};

struct RobustEvaluation {
  std::vector<int> removed;  // removed elements, in position order
  Sequence attacked;         // the sequence after removal
  double value = 0;          // h(attacked)
  std::uint64_t candidates = 0;
};

struct OracleOptions {
  std::size_t budget_sequences = 200000;
  std::size_t budget_subsets = 100000;
};

namespace oracle_detail {

inline std::uint64_t count_removals(int len, const RemovalModel& m) {
  if (m.mode == RemovalMode::contiguous) {
    std::uint64_t total = 1;  // empty removal
    for (int start = 0; start < len; ++start) {
      total += static_cast<std::uint64_t>(std::min(m.tau, len - start));
    }
    return total;
  }
  // Sum of binomials C(len, 0..tau); len <= 64 so this cannot overflow
  // for any tau that could pass a sane budget.
  long double total = 0, c = 1;
  for (int j = 0; j <= std::min(m.tau, len); ++j) {
    total += c;
    c = c * (len - j) / (j + 1);
    if (total > 1e18L) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(total);
}

}  // namespace oracle_detail

inline RobustEvaluation worst_removal(const SequenceFunction& f, const Sequence& s,
                                      const RemovalModel& m,
                                      const OracleOptions& opts = {}) {
  if (m.tau < 0) throw InvalidArgumentError("tau must be non-negative");
  const int len = s.length();
  std::uint64_t candidates = oracle_detail::count_removals(len, m);
  if (candidates > opts.budget_subsets) {
    throw BudgetError("worst_removal: " + std::to_string(candidates) +
                      " removal candidates exceed budget " +
                      std::to_string(opts.budget_subsets));
  }
  RobustEvaluation best;
  best.candidates = candidates;
  bool have = false;
  auto consider = [&](const std::vector<int>& positions) {
    Sequence attacked = remove_positions(s, positions);
    double value = f.eval(attacked);
    if (!have || value < best.value) {
      have = true;
      best.value = value;
      best.attacked = std::move(attacked);
      best.removed.clear();
      for (int p : positions) best.removed.push_back(s[p]);
    }
  };
  std::vector<int> positions;
  consider(positions);
  if (m.mode == RemovalMode::contiguous) {
    for (int start = 0; start < len; ++start) {
      positions.clear();
      for (int end = start; end < std::min(len, start + m.tau); ++end) {
        positions.push_back(end);
        consider(positions);
      }
    }
  } else {
    // Subsets by ascending size, lexicographic positions within a size.
    for (int size = 1; size <= std::min(m.tau, len); ++size) {
      positions.assign(size, 0);
      for (int i = 0; i < size; ++i) positions[i] = i;
      for (;;) {
        consider(positions);
        int i = size - 1;
        while (i >= 0 && positions[i] == len - size + i) --i;
        if (i < 0) break;
        ++positions[i];
        for (int j = i + 1; j < size; ++j) positions[j] = positions[j - 1] + 1;
      }
    }
  }
  return best;
}

inline double robust_value(const SequenceFunction& f, const Sequence& s,
                           const RemovalModel& m, const OracleOptions& opts = {}) {
  return worst_removal(f, s, m, opts).value;
}

struct OptResult {
  Sequence sequence;
  double value = 0;
  std::uint64_t enumerated = 0;
};

// Maximizes h over duplicate-free sequences of length <= min(k, |allowed|)
// drawn from `allowed`. First maximizer in enumeration order.
inline OptResult brute_opt_nonrobust(const SequenceFunction& f, int k,
                                     const OracleOptions& opts = {},
                                     Mask allowed = ~Mask{0}) {
  if (k < 0) throw InvalidArgumentError("k must be non-negative");
  auto seqs = enumerate_sequences(f.ground_size(), k, opts.budget_sequences, allowed);
  OptResult best;
  best.enumerated = seqs.size();
  bool have = false;
  for (const Sequence& s : seqs) {
    double value = f.eval(s);
    if (!have || value > best.value) {
      have = true;
      best.value = value;
      best.sequence = s;
    }
  }
  return best;
}

// Maximizes g_tau (the post-attack value) over sequences of length <= k.
// The removal budget applies per candidate sequence.
inline OptResult brute_opt_robust(const SequenceFunction& f, int k,
                                  const RemovalModel& m,
                                  const OracleOptions& opts = {},
                                  Mask allowed = ~Mask{0}) {
  if (k < 0) throw InvalidArgumentError("k must be non-negative");
  auto seqs = enumerate_sequences(f.ground_size(), k, opts.budget_sequences, allowed);
  OptResult best;
  best.enumerated = seqs.size();
  bool have = false;
  for (const Sequence& s : seqs) {
    double value = robust_value(f, s, m, opts);
    if (!have || value > best.value) {
      have = true;
      best.value = value;
      best.sequence = s;
    }
  }
  return best;
}

}  // namespace seqsub

#endif  // SEQSUB_ORACLES_HPP_

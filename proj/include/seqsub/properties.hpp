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

// Exhaustive monotonicity and submodularity checkers.
//
// All scans enumerate sequences length-major, lexicographic by element index
// (see core.hpp), restricted so every evaluated concatenation stays within
// max_len distinct elements. Scan orders are part of the API:
//
//   forward / backward:  S1 outer, S2 inner, both in enumeration order.
//   mu1 / mu2:           S2 outer in enumeration order, S1 over prefixes of
//                        S2 by increasing length, then the appended element
//                        (mu1, ascending index) or sequence S3 (mu2,
//                        enumeration order) innermost.
//   mu3:                 S2 outer, S1 = S2 minus a deletion set of positions
//                        enumerated as an ascending bit counter (bit j set
//                        deletes position j), S3 innermost.
//
// Reported witnesses are the first pair/triple, in that order, to attain the
// final value (first counterexample for boolean checks, first minimizer for
// ratio constants). Pairs with S1 == S2 participate, so a ratio constant
// never exceeds 1 when any valid denominator exists. Denominators <= 0 are
// skipped.
//
// Ratio constants measure, over the scanned domain:
//   alpha  min h(S1 + S2) / h(S2)                           all pairs
//   mu1    min h((v) | S1) / h((v) | S2)                    S1 prefix of S2
//   mu2    min h(S3 | S1) / h(S3 | S2)                      S1 prefix of S2
//   mu3    min h(S3 | S1) / h(S3 | S2)                      S1 subsequence of S2
// where h(B | A) = h(A + B) - h(A) and + is concatenation. A constant is
// exact when it is 1 within 1e-9 and positive when above 1e-9; non-positive
// constants mean no positive constant exists (a hard violation of the
// corresponding parametric property). Always mu1 >= mu2 >= mu3, since each
// scan's pairs include the previous scan's.
//
// Ratio constants presuppose forward monotonicity; the checkers verify it
// first and throw NotApplicableError otherwise.

#ifndef SEQSUB_PROPERTIES_HPP_
#define SEQSUB_PROPERTIES_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "seqsub/core.hpp"
#include "seqsub/error.hpp"
#include "seqsub/functions.hpp"

namespace seqsub {

// Comparison tolerance used for every exactness and violation threshold.
inline constexpr double kTolerance = 1e-9;

struct Witness {
  Sequence s1, s2;
  std::optional<Sequence> s3;
  std::optional<int> element;
  double lhs = 0;  // the smaller side (value after S1, or h(S1 + S2))
  double rhs = 0;  // the larger side (value after S2, or h(S2))
};

struct MonotonicityReport {
  bool holds = false;
  std::optional<Witness> counterexample;
  std::uint64_t comparisons = 0;
};

struct ConstantReport {
  double value = 1.0;
  bool exact = false;     // value within 1e-9 of 1
  bool positive = false;  // value > 1e-9; false means hard violation
  std::optional<Witness> witness;
  std::uint64_t comparisons = 0;
};

struct PropertyOptions {
  // Longest support evaluated; <= 0 means the function's own limit
  // (table depth for tabular functions, ground size otherwise).
  int max_len = 0;
  // Maximum number of sequences the scan may enumerate.
  std::size_t budget_sequences = 10000;
};

namespace prop_detail {

inline int effective_max_len(const SequenceFunction& f, const PropertyOptions& opts) {
  int limit = f.max_sequence_length();
  if (opts.max_len > 0 && opts.max_len < limit) limit = opts.max_len;
  return limit;
}

struct Scan {
  std::vector<Sequence> seqs;
  std::vector<double> values;
  int max_len;

  Scan(const SequenceFunction& f, const PropertyOptions& opts)
      : max_len(effective_max_len(f, opts)) {
    seqs = enumerate_sequences(f.ground_size(), max_len, opts.budget_sequences);
    values.reserve(seqs.size());
    for (const Sequence& s : seqs) values.push_back(f.eval(s));
  }
};

inline MonotonicityReport forward_scan(const SequenceFunction& f, const Scan& scan) {
  MonotonicityReport rep;
  rep.holds = true;
  for (std::size_t i = 0; i < scan.seqs.size(); ++i) {
    const Sequence& s1 = scan.seqs[i];
    for (std::size_t j = 0; j < scan.seqs.size(); ++j) {
      const Sequence& s2 = scan.seqs[j];
      if (popcount(s1.support() | s2.support()) > scan.max_len) continue;
      ++rep.comparisons;
      double whole = f.eval(concat(s1, s2));
      if (whole < scan.values[i] - kTolerance) {
        rep.holds = false;
        rep.counterexample = Witness{s1, s2, std::nullopt, std::nullopt, whole, scan.values[i]};
        return rep;
      }
    }
  }
  return rep;
}

struct RatioTracker {
  double best = std::numeric_limits<double>::infinity();
  std::optional<Witness> witness;
  std::uint64_t comparisons = 0;

  void offer(double num, double den, Witness w) {
    ++comparisons;
    if (den <= 0) return;
    double r = num / den;
    if (r < best) {
      best = r;
      w.lhs = num;
      w.rhs = den;
      witness = std::move(w);
    }
  }

  ConstantReport report() const {
    ConstantReport rep;
    if (!witness) {
      // No valid denominator anywhere: the property holds vacuously.
      rep.value = 1.0;
    } else {
      rep.value = best < 1.0 ? best : 1.0;
    }
    rep.exact = rep.value >= 1.0 - kTolerance;
    rep.positive = rep.value > kTolerance;
    rep.witness = witness;
    rep.comparisons = comparisons;
    return rep;
  }
};

inline ConstantReport alpha_scan(const SequenceFunction& f, const Scan& scan) {
  RatioTracker t;
  for (std::size_t i = 0; i < scan.seqs.size(); ++i) {
    const Sequence& s1 = scan.seqs[i];
    for (std::size_t j = 0; j < scan.seqs.size(); ++j) {
      const Sequence& s2 = scan.seqs[j];
      if (popcount(s1.support() | s2.support()) > scan.max_len) continue;
      if (scan.values[j] <= 0) {
        ++t.comparisons;
        continue;
      }
      double whole = f.eval(concat(s1, s2));
      t.offer(whole, scan.values[j], Witness{s1, s2, std::nullopt, std::nullopt, 0, 0});
    }
  }
  return t.report();
}

inline ConstantReport mu1_scan(const SequenceFunction& f, const Scan& scan) {
  RatioTracker t;
  const int V = f.ground_size();
  for (std::size_t j = 0; j < scan.seqs.size(); ++j) {
    const Sequence& s2 = scan.seqs[j];
    for (int plen = 0; plen <= s2.length(); ++plen) {
      Sequence s1 = s2.prefix(plen);
      double h1 = plen == s2.length() ? scan.values[j] : f.eval(s1);
      for (int v = 0; v < V; ++v) {
        if (s2.contains(v)) continue;
        if (popcount(s2.support() | (Mask{1} << v)) > scan.max_len) continue;
        double den = f.eval(s2.append(v)) - scan.values[j];
        if (den <= 0) {
          ++t.comparisons;
          continue;
        }
        double num = f.eval(s1.append(v)) - h1;
        t.offer(num, den, Witness{s1, s2, std::nullopt, v, 0, 0});
      }
    }
  }
  return t.report();
}

inline ConstantReport mu2_scan(const SequenceFunction& f, const Scan& scan) {
  RatioTracker t;
  for (std::size_t j = 0; j < scan.seqs.size(); ++j) {
    const Sequence& s2 = scan.seqs[j];
    for (int plen = 0; plen <= s2.length(); ++plen) {
      Sequence s1 = s2.prefix(plen);
      double h1 = plen == s2.length() ? scan.values[j] : f.eval(s1);
      for (std::size_t m = 0; m < scan.seqs.size(); ++m) {
        const Sequence& s3 = scan.seqs[m];
        if (popcount(s2.support() | s3.support()) > scan.max_len) continue;
        double den = f.eval(concat(s2, s3)) - scan.values[j];
        if (den <= 0) {
          ++t.comparisons;
          continue;
        }
        double num = f.eval(concat(s1, s3)) - h1;
        t.offer(num, den, Witness{s1, s2, s3, std::nullopt, 0, 0});
      }
    }
  }
  return t.report();
}

inline ConstantReport mu3_scan(const SequenceFunction& f, const Scan& scan) {
  RatioTracker t;
  for (std::size_t j = 0; j < scan.seqs.size(); ++j) {
    const Sequence& s2 = scan.seqs[j];
    const std::uint32_t masks = 1u << s2.length();
    for (std::uint32_t del = 0; del < masks; ++del) {
      std::vector<int> kept;
      kept.reserve(s2.length());
      for (int p = 0; p < s2.length(); ++p) {
        if (!((del >> p) & 1)) kept.push_back(s2[p]);
      }
      Sequence s1{std::move(kept)};
      double h1 = del == 0 ? scan.values[j] : f.eval(s1);
      for (std::size_t m = 0; m < scan.seqs.size(); ++m) {
        const Sequence& s3 = scan.seqs[m];
        if (popcount(s2.support() | s3.support()) > scan.max_len) continue;
        double den = f.eval(concat(s2, s3)) - scan.values[j];
        if (den <= 0) {
          ++t.comparisons;
          continue;
        }
        double num = f.eval(concat(s1, s3)) - h1;
        t.offer(num, den, Witness{s1, s2, s3, std::nullopt, 0, 0});
      }
    }
  }
  return t.report();
}

inline void require_forward(const SequenceFunction& f, const Scan& scan, const char* what) {
  MonotonicityReport fwd = forward_scan(f, scan);
  if (!fwd.holds) {
    throw NotApplicableError(std::string(what) +
                             " requires forward monotonicity, which does not hold");
  }
}

}  // namespace prop_detail

// True iff h(S1 + S2) >= h(S1) for all scanned pairs.
inline MonotonicityReport check_forward_monotone(const SequenceFunction& f,
                                                 const PropertyOptions& opts = {}) {
  prop_detail::Scan scan(f, opts);
  return prop_detail::forward_scan(f, scan);
}

// Largest alpha with h(S1 + S2) >= alpha * h(S2) over the scanned domain.
inline ConstantReport backward_constant(const SequenceFunction& f,
                                        const PropertyOptions& opts = {}) {
  prop_detail::Scan scan(f, opts);
  prop_detail::require_forward(f, scan, "backward constant");
  return prop_detail::alpha_scan(f, scan);
}

// Largest mu1 with h((v) | S1) >= mu1 * h((v) | S2) for prefixes S1 of S2.
inline ConstantReport mu1_constant(const SequenceFunction& f,
                                   const PropertyOptions& opts = {}) {
  prop_detail::Scan scan(f, opts);
  prop_detail::require_forward(f, scan, "mu1");
  return prop_detail::mu1_scan(f, scan);
}

// Largest mu2 with h(S3 | S1) >= mu2 * h(S3 | S2) for prefixes S1 of S2.
inline ConstantReport mu2_constant(const SequenceFunction& f,
                                   const PropertyOptions& opts = {}) {
  prop_detail::Scan scan(f, opts);
  prop_detail::require_forward(f, scan, "mu2");
  return prop_detail::mu2_scan(f, scan);
}

// Largest mu3 with h(S3 | S1) >= mu3 * h(S3 | S2) for subsequences S1 of S2.
inline ConstantReport mu3_constant(const SequenceFunction& f,
                                   const PropertyOptions& opts = {}) {
  prop_detail::Scan scan(f, opts);
  prop_detail::require_forward(f, scan, "mu3");
  return prop_detail::mu3_scan(f, scan);
}

struct PropertyReport {
  int max_len = 0;
  std::size_t sequences = 0;
  MonotonicityReport forward;
  // Present only when forward monotonicity holds.
  std::optional<ConstantReport> alpha, mu1, mu2, mu3;
};

// Runs every checker off one shared enumeration. Ratio constants are only
// measured when forward monotonicity holds.
inline PropertyReport analyze_properties(const SequenceFunction& f,
                                         const PropertyOptions& opts = {}) {
  prop_detail::Scan scan(f, opts);
  PropertyReport rep;
  rep.max_len = scan.max_len;
  rep.sequences = scan.seqs.size();
  rep.forward = prop_detail::forward_scan(f, scan);
  if (rep.forward.holds) {
    rep.alpha = prop_detail::alpha_scan(f, scan);
    rep.mu1 = prop_detail::mu1_scan(f, scan);
    rep.mu2 = prop_detail::mu2_scan(f, scan);
    rep.mu3 = prop_detail::mu3_scan(f, scan);
  }
  return rep;
}

// Named combinations of the measured properties that the approximation
// guarantees key on. "exact" below means the constant is 1 within 1e-9.
struct AssumptionProfile {
  std::string id;
  std::string requirements;
  bool holds = false;
};

inline std::vector<AssumptionProfile> assumption_report(const PropertyReport& rep) {
  bool fwd = rep.forward.holds;
  auto exact = [&](const std::optional<ConstantReport>& c) { return fwd && c && c->exact; };
  auto positive = [&](const std::optional<ConstantReport>& c) { return fwd && c && c->positive; };
  std::vector<AssumptionProfile> out;
  out.push_back({"a1", "forward, exact backward, exact mu2", fwd && exact(rep.alpha) && exact(rep.mu2)});
  out.push_back({"a2", "forward, exact backward, exact mu3", fwd && exact(rep.alpha) && exact(rep.mu3)});
  out.push_back({"a3", "forward, exact backward, positive mu1 and mu2",
                 fwd && exact(rep.alpha) && positive(rep.mu1) && positive(rep.mu2)});
  out.push_back({"a4", "forward, positive alpha, mu1 and mu2",
                 fwd && positive(rep.alpha) && positive(rep.mu1) && positive(rep.mu2)});
  out.push_back({"a5", "forward, positive alpha, mu1 and mu3",
                 fwd && positive(rep.alpha) && positive(rep.mu1) && positive(rep.mu3)});
  out.push_back({"a6", "forward, positive alpha and mu1",
                 fwd && positive(rep.alpha) && positive(rep.mu1)});
  out.push_back({"a7", "forward, exact backward, positive mu1",
                 fwd && exact(rep.alpha) && positive(rep.mu1)});
  return out;
}

}  // namespace seqsub

#endif  // SEQSUB_PROPERTIES_HPP_

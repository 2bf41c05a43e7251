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

// Greedy sequence builders.
//
//   ssg                       k steps; step i appends the element maximizing
//                             the marginal value after the current prefix.
//   robust_greedy_contiguous  first builds a sacrificial prefix S1 of length
//                             tau greedily by marginal value on S1, then a
//                             tail S2 of length k - tau from the remaining
//                             elements greedily by marginal value on S2
//                             alone (ignoring S1); returns S1 + S2.
//   robust_greedy_arbitrary   same second phase, but S1 collects the tau
//                             elements of highest standalone value h((v)).
//
// The tail ignores the prefix on purpose: if an adversary deletes the prefix,
// the tail is exactly a greedy sequence on the survivors, so its value does
// not lean on anything removable.
//
// Ties break toward the lowest element index. Each run performs at most k*V
// evaluations of h: a running value makes every candidate cost one
// evaluation, the arbitrary first phase reuses its V standalone values for
// all tau picks, and the final h(S1 + S2) evaluation fits in the same budget.
//
// Traces record every candidate's score per step. Scores are marginal values
// except in the arbitrary first phase, where they are standalone values
// h((v)); the recorded gain of a step is always its chosen score.

#ifndef SEQSUB_ALGORITHMS_HPP_
#define SEQSUB_ALGORITHMS_HPP_

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "seqsub/core.hpp"
#include "seqsub/error.hpp"
#include "seqsub/functions.hpp"

namespace seqsub {

struct StepScore {
  int candidate;
  double score;
};

struct TraceStep {
  int step;   // 1-based
  int phase;  // 1 or 2; plain greedy has a single phase 1
  std::vector<StepScore> scores;
  int chosen;
  double gain;
};

struct GreedyTrace {
  Sequence sequence;
  double value = 0;          // h(sequence)
  int phase1_length = 0;     // tau for the robust algorithms, 0 for ssg
  std::vector<TraceStep> steps;
  std::uint64_t evaluations = 0;
};

namespace alg_detail {

// One greedy phase: extends `s` by `steps` picks drawn from outside
// `excluded`, scoring each candidate by f(s + v) - h(s). Returns h(s) of the
// extended sequence. h(()) = 0 is assumed, not evaluated.
inline double greedy_phase(const SequenceFunction& f, int phase, int steps,
                           Mask excluded, Sequence& s, double hs,
                           GreedyTrace& trace) {
  const int V = f.ground_size();
  for (int step = 0; step < steps; ++step) {
    TraceStep rec;
    rec.step = static_cast<int>(trace.steps.size()) + 1;
    rec.phase = phase;
    int best = -1;
    double best_val = 0, best_score = 0;
    for (int v = 0; v < V; ++v) {
      if (s.contains(v) || ((excluded >> v) & 1)) continue;
      double val = f.eval(s.append(v));
      ++trace.evaluations;
      double score = val - hs;
      rec.scores.push_back({v, score});
      if (best < 0 || score > best_score) {
        best = v;
        best_val = val;
        best_score = score;
      }
    }
    if (best < 0) throw InvalidArgumentError("greedy: ran out of candidates");
    rec.chosen = best;
    rec.gain = best_score;
    trace.steps.push_back(std::move(rec));
    s = s.append(best);
    hs = best_val;
  }
  return hs;
}

inline void check_k(int k, int V) {
  if (k < 1 || k > V) {
    throw InvalidArgumentError("k must lie in [1, ground size]");
  }
}

inline void check_k_tau(int k, int tau, int V) {
  if (k < 2 || k > V) {
    throw InvalidArgumentError("robust greedy needs 2 <= k <= ground size");
  }
  if (tau < 1 || tau > k - 1) {
    throw InvalidArgumentError("robust greedy needs 1 <= tau <= k - 1");
  }
}

}  // namespace alg_detail

inline GreedyTrace ssg(const SequenceFunction& f, int k) {
  alg_detail::check_k(k, f.ground_size());
  GreedyTrace trace;
  Sequence s;
  trace.value = alg_detail::greedy_phase(f, 1, k, 0, s, 0.0, trace);
  trace.sequence = std::move(s);
  trace.phase1_length = 0;
  return trace;
}

inline GreedyTrace robust_greedy_contiguous(const SequenceFunction& f, int k, int tau) {
  alg_detail::check_k_tau(k, tau, f.ground_size());
  GreedyTrace trace;
  trace.phase1_length = tau;
  Sequence s1;
  alg_detail::greedy_phase(f, 1, tau, 0, s1, 0.0, trace);
  Sequence s2;
  alg_detail::greedy_phase(f, 2, k - tau, s1.support(), s2, 0.0, trace);
  trace.sequence = concat(s1, s2);
  trace.value = f.eval(trace.sequence);
  ++trace.evaluations;
  return trace;
}

inline GreedyTrace robust_greedy_arbitrary(const SequenceFunction& f, int k, int tau) {
  const int V = f.ground_size();
  alg_detail::check_k_tau(k, tau, V);
  GreedyTrace trace;
  trace.phase1_length = tau;
  // Standalone values, one evaluation per element, reused for every pick.
  std::vector<double> standalone(V);
  for (int v = 0; v < V; ++v) {
    standalone[v] = f.eval(Sequence({v}));
    ++trace.evaluations;
  }
  Sequence s1;
  for (int step = 0; step < tau; ++step) {
    TraceStep rec;
    rec.step = static_cast<int>(trace.steps.size()) + 1;
    rec.phase = 1;
    int best = -1;
    for (int v = 0; v < V; ++v) {
      if (s1.contains(v)) continue;
      rec.scores.push_back({v, standalone[v]});
      if (best < 0 || standalone[v] > standalone[best]) best = v;
    }
    rec.chosen = best;
    rec.gain = standalone[best];
    trace.steps.push_back(std::move(rec));
    s1 = s1.append(best);
  }
  Sequence s2;
  alg_detail::greedy_phase(f, 2, k - tau, s1.support(), s2, 0.0, trace);
  trace.sequence = concat(s1, s2);
  trace.value = f.eval(trace.sequence);
  ++trace.evaluations;
  return trace;
}

// CSV with one row per candidate per step: step,phase,candidate,score,chosen.
// Element names come from `gs` when given, else e<index>.
inline void write_trace_csv(std::ostream& out, const GreedyTrace& trace,
                            const GroundSet* gs = nullptr) {
  out << "step,phase,candidate,score,chosen\n";
  char buf[32];
  for (const TraceStep& step : trace.steps) {
    for (const StepScore& sc : step.scores) {
      std::snprintf(buf, sizeof buf, "%.6f", sc.score);
      out << step.step << ',' << step.phase << ','
          << (gs ? gs->name(sc.candidate) : "e" + std::to_string(sc.candidate)) << ','
          << buf << ',' << (sc.candidate == step.chosen ? 1 : 0) << '\n';
    }
  }
}

}  // namespace seqsub

#endif  // SEQSUB_ALGORITHMS_HPP_

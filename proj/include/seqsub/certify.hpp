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

// End-to-end certification: measure an instance's structural constants, run
// an algorithm, compute the exact robust optimum by brute force, and check
// the strongest applicable closed-form guarantee against the observed ratio.
//
// Guarantee applicability is keyed to the (algorithm, removal mode) pair:
//
//   robust_contiguous vs contiguous removal
//     t1  (tau = 1)  and  t2         need exact backward and exact mu2
//     t4a (tau = 1, k > 2), t5a (k > 2 tau)
//                                    need exact backward, positive mu1, mu2
//     t4b (tau = 1)  and  t5b        need positive backward, mu1 and mu2
//   robust_arbitrary vs arbitrary removal
//     t3                             needs exact backward and exact mu3
//     t6                             needs positive backward, mu1 and mu3
//
// Every applicable guarantee is evaluated and the largest bound is cited.
// ssg and mismatched pairs have no guarantee here and certify as
// "uncertifiable" (with constants still reported). Verdicts:
//
//   pass           g_alg >= bound * g_opt - 1e-9
//   fail           the certified bound is violated (a soundness bug)
//   vacuous        the robust optimum itself is ~0, nothing to certify
//   uncertifiable  no guarantee applies; not a failure
//
// The corpus generator produces deterministic families from a seeded
// mt19937_64. Raw 64-bit draws map to doubles as (x >> 11) * 2^-53, and the
// draw order inside each family is fixed and documented at the generator, so
// a (family, seed, count, size range) tuple names the same corpus on any
// platform with IEEE doubles.

#ifndef SEQSUB_CERTIFY_HPP_
#define SEQSUB_CERTIFY_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "seqsub/algorithms.hpp"
#include "seqsub/bounds.hpp"
#include "seqsub/core.hpp"
#include "seqsub/error.hpp"
#include "seqsub/functions.hpp"
#include "seqsub/instance_io.hpp"
#include "seqsub/oracles.hpp"
#include "seqsub/properties.hpp"

namespace seqsub {

enum class Verdict { pass, fail, vacuous, uncertifiable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::vacuous: return "vacuous";
    default: return "uncertifiable";
  }
}

enum class AlgorithmKind { ssg, robust_contiguous, robust_arbitrary };

inline const char* to_string(AlgorithmKind a) {
  switch (a) {
    case AlgorithmKind::ssg: return "ssg";
    case AlgorithmKind::robust_contiguous: return "robust_contiguous";
    default: return "robust_arbitrary";
  }
}

inline AlgorithmKind algorithm_from_string(const std::string& s) {
  if (s == "ssg") return AlgorithmKind::ssg;
  if (s == "robust_contiguous") return AlgorithmKind::robust_contiguous;
  if (s == "robust_arbitrary") return AlgorithmKind::robust_arbitrary;
  throw InvalidArgumentError("unknown algorithm: " + s);
}

inline RemovalMode removal_mode_from_string(const std::string& s) {
  if (s == "contiguous") return RemovalMode::contiguous;
  if (s == "arbitrary") return RemovalMode::arbitrary;
  throw InvalidArgumentError("unknown removal mode: " + s);
}

struct CertifyOptions {
  PropertyOptions properties;
  OracleOptions oracle;
  double tolerance = 1e-9;
};

struct CertificationResult {
  std::string instance_id;
  std::string family;  // the function kind
  int ground_size = 0;
  int k = 0;
  int tau = 0;
  RemovalMode mode = RemovalMode::contiguous;
  AlgorithmKind algorithm = AlgorithmKind::robust_contiguous;

  bool forward = false;
  // Measured constants; NaN when the instance is not forward monotone.
  double alpha = 0, mu1 = 0, mu2 = 0, mu3 = 0;
  bool alpha_exact = false, mu1_exact = false, mu2_exact = false, mu3_exact = false;

  std::string theorem;  // empty when no guarantee applies
  double bound = 0;     // NaN when no guarantee applies
  double g_alg = 0;
  double g_opt = 0;
  double ratio = 0;  // g_alg / g_opt, NaN when the optimum is ~0
  Verdict verdict = Verdict::uncertifiable;
  std::string reason;

  Sequence algorithm_sequence;
  Sequence optimum_sequence;
};

namespace certify_detail {

struct Candidate {
  const char* id;
  double bound;
};

// All guarantees whose preconditions the measured constants meet, in a fixed
// order so an exact tie cites the earlier (stronger-by-convention) id.
inline std::vector<Candidate> applicable(const PropertyReport& rep, AlgorithmKind alg,
                                         RemovalMode mode, int k, int tau) {
  std::vector<Candidate> out;
  if (!rep.forward.holds || !rep.alpha) return out;
  const ConstantReport& alpha = *rep.alpha;
  const ConstantReport& mu1 = *rep.mu1;
  const ConstantReport& mu2 = *rep.mu2;
  const ConstantReport& mu3 = *rep.mu3;
  if (alg == AlgorithmKind::robust_contiguous && mode == RemovalMode::contiguous) {
    if (alpha.exact && mu2.exact) {
      if (tau == 1) out.push_back({"t1", ratio_theorem1(k)});
      out.push_back({"t2", ratio_theorem2(k, tau)});
    }
    if (alpha.exact && mu1.positive && mu2.positive) {
      if (tau == 1 && k > 2) out.push_back({"t4a", ratio_theorem4a(k, mu1.value, mu2.value)});
      if (k > 2 * tau) out.push_back({"t5a", ratio_theorem5a(k, tau, mu1.value, mu2.value)});
    }
    if (alpha.positive && mu1.positive && mu2.positive) {
      if (tau == 1) out.push_back({"t4b", ratio_theorem4b(alpha.value, mu1.value, mu2.value)});
      out.push_back({"t5b", ratio_theorem5b(alpha.value, mu1.value, mu2.value)});
    }
  } else if (alg == AlgorithmKind::robust_arbitrary && mode == RemovalMode::arbitrary) {
    if (alpha.exact && mu3.exact) out.push_back({"t3", ratio_theorem3(tau)});
    if (alpha.positive && mu1.positive && mu3.positive) {
      out.push_back({"t6", ratio_theorem6(tau, alpha.value, mu1.value, mu3.value)});
    }
  }
  return out;
}

inline std::string no_guarantee_reason(const PropertyReport& rep, AlgorithmKind alg,
                                       RemovalMode mode) {
  if (!rep.forward.holds) return "not forward monotone";
  if (alg == AlgorithmKind::ssg) return "no removal guarantee covers ssg";
  bool matched = (alg == AlgorithmKind::robust_contiguous && mode == RemovalMode::contiguous) ||
                 (alg == AlgorithmKind::robust_arbitrary && mode == RemovalMode::arbitrary);
  if (!matched) return "no guarantee for this algorithm and removal mode pair";
  return "measured constants satisfy no guarantee's preconditions";
}

}  // namespace certify_detail

// Certifies one (instance, k, tau, mode, algorithm) configuration. The
// property scan dominates the cost for repeated calls on one instance; pass
// a precomputed report to share it.
inline CertificationResult certify_instance(const Instance& inst, int k, int tau,
                                            RemovalMode mode, AlgorithmKind alg,
                                            const CertifyOptions& opts = {},
                                            const PropertyReport* precomputed = nullptr) {
  const SequenceFunction& f = inst.f();
  const double nan = std::numeric_limits<double>::quiet_NaN();

  CertificationResult r;
  r.instance_id = inst.id;
  r.family = f.kind();
  r.ground_size = f.ground_size();
  r.k = k;
  r.tau = tau;
  r.mode = mode;
  r.algorithm = alg;

  PropertyReport local;
  if (!precomputed) {
    local = analyze_properties(f, opts.properties);
    precomputed = &local;
  }
  const PropertyReport& rep = *precomputed;
  r.forward = rep.forward.holds;
  r.alpha = rep.alpha ? rep.alpha->value : nan;
  r.mu1 = rep.mu1 ? rep.mu1->value : nan;
  r.mu2 = rep.mu2 ? rep.mu2->value : nan;
  r.mu3 = rep.mu3 ? rep.mu3->value : nan;
  r.alpha_exact = rep.alpha && rep.alpha->exact;
  r.mu1_exact = rep.mu1 && rep.mu1->exact;
  r.mu2_exact = rep.mu2 && rep.mu2->exact;
  r.mu3_exact = rep.mu3 && rep.mu3->exact;

  GreedyTrace trace;
  switch (alg) {
    case AlgorithmKind::ssg: trace = ssg(f, k); break;
    case AlgorithmKind::robust_contiguous: trace = robust_greedy_contiguous(f, k, tau); break;
    case AlgorithmKind::robust_arbitrary: trace = robust_greedy_arbitrary(f, k, tau); break;
  }
  r.algorithm_sequence = trace.sequence;

  RemovalModel model{tau, mode};
  r.g_alg = robust_value(f, trace.sequence, model, opts.oracle);
  OptResult opt = brute_opt_robust(f, k, model, opts.oracle);
  r.g_opt = opt.value;
  r.optimum_sequence = opt.sequence;
  r.ratio = r.g_opt > opts.tolerance ? r.g_alg / r.g_opt : nan;

  auto candidates = certify_detail::applicable(rep, alg, mode, k, tau);
  if (candidates.empty()) {
    r.theorem.clear();
    r.bound = nan;
    r.verdict = Verdict::uncertifiable;
    r.reason = certify_detail::no_guarantee_reason(rep, alg, mode);
    return r;
  }
  // Bounds within 1e-12 count as ties and the earlier id wins, so label
  // choice does not depend on rounding when two formulas coincide.
  const certify_detail::Candidate* best = &candidates.front();
  for (const auto& c : candidates) {
    if (c.bound > best->bound + 1e-12) best = &c;
  }
  r.theorem = best->id;
  r.bound = best->bound;
  if (r.g_opt <= opts.tolerance) {
    r.verdict = Verdict::vacuous;
    r.reason = "robust optimum is zero";
  } else if (r.g_alg >= r.bound * r.g_opt - opts.tolerance) {
    r.verdict = Verdict::pass;
  } else {
    r.verdict = Verdict::fail;
    r.reason = "certified bound violated";
  }
  return r;
}

// The default certification grid: k from 2 to min(k_cap, V), every
// tau in [1, k - 1], each algorithm against its matching removal mode.
inline std::vector<CertificationResult> certify_corpus(const std::vector<Instance>& instances,
                                                       const CertifyOptions& opts = {},
                                                       int k_cap = 4) {
  std::vector<CertificationResult> out;
  for (const Instance& inst : instances) {
    PropertyReport rep = analyze_properties(inst.f(), opts.properties);
    int k_max = std::min(k_cap, inst.f().ground_size());
    for (int k = 2; k <= k_max; ++k) {
      for (int tau = 1; tau <= k - 1; ++tau) {
        out.push_back(certify_instance(inst, k, tau, RemovalMode::contiguous,
                                       AlgorithmKind::robust_contiguous, opts, &rep));
        out.push_back(certify_instance(inst, k, tau, RemovalMode::arbitrary,
                                       AlgorithmKind::robust_arbitrary, opts, &rep));
      }
    }
  }
  return out;
}

inline const char* kCertifyCsvHeader =
    "instance_id,family,V,k,tau,mode,algorithm,alpha,mu1,mu2,mu3,theorem,bound,"
    "g_alg,g_opt,ratio,verdict";

// One row per result; NaN-valued numeric fields print as empty cells.
inline void write_certify_csv(std::ostream& out,
                              const std::vector<CertificationResult>& results) {
  auto cell = [](double v) { return std::isnan(v) ? std::string() : format_double(v); };
  out << kCertifyCsvHeader << '\n';
  for (const CertificationResult& r : results) {
    out << r.instance_id << ',' << r.family << ',' << r.ground_size << ',' << r.k << ','
        << r.tau << ',' << to_string(r.mode) << ',' << to_string(r.algorithm) << ','
        << cell(r.alpha) << ',' << cell(r.mu1) << ',' << cell(r.mu2) << ',' << cell(r.mu3)
        << ',' << r.theorem << ',' << cell(r.bound) << ',' << cell(r.g_alg) << ','
        << cell(r.g_opt) << ',' << cell(r.ratio) << ',' << to_string(r.verdict) << '\n';
  }
}

// ---------------------------------------------------------------------------
// Corpus generation.

struct CorpusSpec {
  std::string family;  // discounted_additive | detection_decay | tabular_random
  int count = 10;
  int v_min = 3;
  int v_max = 5;
  std::uint64_t seed = 1;
};

struct CorpusResult {
  std::vector<Instance> instances;
  int discarded = 0;  // tabular_random candidates rejected as not forward monotone
};

namespace corpus_detail {

// Deterministic uniform source. Doubles use the top 53 bits of each draw so
// results do not depend on std::uniform_real_distribution's implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Inclusive on both ends.
  int uniform_int(int lo, int hi) {
    int v = lo + static_cast<int>(uniform() * (hi - lo + 1));
    return v > hi ? hi : v;
  }

 private:
  std::mt19937_64 engine_;
};

// Draw order: V; mode coin; then either a shared discount in [0.5, 1] and V
// weights in [0.5, 2], or a shared weight in [0.5, 2], a head discount in
// [0.5, 1], V - 1 decay factors in [0.6, 1], a zero-tail coin (p = 0.3) and,
// when it hits and V >= 2, a tail start in [1, V - 1].
//
// Both shapes keep the backward constant exactly 1: with one shared discount
// the value ignores order entirely, and with one shared weight the value of
// any suffix placed first only improves when its elements move to earlier,
// no-smaller discounts. Heterogeneous weights together with strictly
// decreasing discounts would break that, so the generator never mixes them.
inline Instance gen_discounted_additive(Rng& rng, int v_min, int v_max, std::string id) {
  int V = rng.uniform_int(v_min, v_max);
  bool shared_discount = rng.uniform() < 0.5;
  std::vector<double> weights(V), discounts(V);
  if (shared_discount) {
    double d = 0.5 + 0.5 * rng.uniform();
    for (int i = 0; i < V; ++i) weights[i] = 0.5 + 1.5 * rng.uniform();
    for (int i = 0; i < V; ++i) discounts[i] = d;
  } else {
    double w = 0.5 + 1.5 * rng.uniform();
    for (int i = 0; i < V; ++i) weights[i] = w;
    discounts[0] = 0.5 + 0.5 * rng.uniform();
    for (int i = 1; i < V; ++i) discounts[i] = discounts[i - 1] * (0.6 + 0.4 * rng.uniform());
    if (rng.uniform() < 0.3 && V >= 2) {
      int tail = rng.uniform_int(1, V - 1);
      for (int i = tail; i < V; ++i) discounts[i] = 0;
    }
  }
  auto f = std::make_shared<DiscountedAdditiveFunction>(std::move(weights), std::move(discounts));
  return Instance{std::move(id), GroundSet::numbered(V), std::move(f)};
}

// Draw order: V (sensor count); cell count in [3, 6]; cell importances in
// [0.5, 2]; per sensor an initial level C in [0.3, 0.9], a decay constant T
// in [0.5, 3], one cover coin (p = 0.5) per cell, and a fallback cell index
// when no coin hit. C < 1 keeps every per-position miss probability strictly
// positive, which keeps the subsequence constant strictly positive.
inline Instance gen_detection_decay(Rng& rng, int v_min, int v_max, std::string id) {
  int V = rng.uniform_int(v_min, v_max);
  int n_cells = rng.uniform_int(3, 6);
  std::vector<DetectionDecayFunction::Cell> cells(n_cells);
  for (int c = 0; c < n_cells; ++c) {
    cells[c].name = "c" + std::to_string(c + 1);
    cells[c].importance = 0.5 + 1.5 * rng.uniform();
  }
  std::vector<DetectionDecayFunction::Sensor> sensors(V);
  for (int i = 0; i < V; ++i) {
    sensors[i].c = 0.3 + 0.6 * rng.uniform();
    sensors[i].t = 0.5 + 2.5 * rng.uniform();
    Mask covers = 0;
    for (int c = 0; c < n_cells; ++c) {
      if (rng.uniform() < 0.5) covers |= Mask{1} << c;
    }
    if (covers == 0) covers = Mask{1} << rng.uniform_int(0, n_cells - 1);
    sensors[i].covers = covers;
  }
  auto f = std::make_shared<DetectionDecayFunction>(std::move(cells), std::move(sensors));
  return Instance{std::move(id), GroundSet::numbered(V), std::move(f)};
}

// Draw order: V in [v_min, min(v_max, 4)]; one step in [-0.25, 1) per
// nonempty sequence in enumeration order. Each value is the parent prefix's
// value plus the step, floored at 0; the flooring can break monotonicity, so
// the caller re-checks and discards non-monotone candidates.
inline Instance gen_tabular(Rng& rng, int v_min, int v_max, std::string id) {
  int V = rng.uniform_int(v_min, std::min(v_max, 4));
  auto f = std::make_shared<TabularFunction>(V, V);
  auto seqs = enumerate_sequences(V, V, 1 << 20);
  for (const Sequence& s : seqs) {
    if (s.empty()) {
      f->set(s, 0.0);
      continue;
    }
    double parent = f->eval(s.prefix(s.length() - 1));
    double step = -0.25 + 1.25 * rng.uniform();
    f->set(s, std::max(0.0, parent + step));
  }
  return Instance{std::move(id), GroundSet::numbered(V), std::move(f)};
}

}  // namespace corpus_detail

// Deterministic: the same spec always yields the same instances, including
// ids of the form "<prefix>-s<seed>-<index>".
inline CorpusResult generate_corpus(const CorpusSpec& spec) {
  if (spec.count < 1) throw InvalidArgumentError("corpus: count must be positive");
  if (spec.v_min < 1 || spec.v_min > spec.v_max) {
    throw InvalidArgumentError("corpus: need 1 <= v_min <= v_max");
  }
  if (spec.v_max > 64) throw InvalidArgumentError("corpus: v_max exceeds 64");
  bool da = spec.family == "discounted_additive";
  bool dd = spec.family == "detection_decay";
  bool tab = spec.family == "tabular_random";
  if (!da && !dd && !tab) throw InvalidArgumentError("corpus: unknown family " + spec.family);
  if (tab && spec.v_min > 4) throw InvalidArgumentError("corpus: tabular_random needs v_min <= 4");

  const char* prefix = da ? "da" : dd ? "dd" : "tab";
  corpus_detail::Rng rng(spec.seed);
  CorpusResult out;
  int attempts_left = spec.count * 1000;
  while (static_cast<int>(out.instances.size()) < spec.count) {
    if (--attempts_left < 0) throw Error("corpus: too many rejected candidates");
    std::string id = std::string(prefix) + "-s" + std::to_string(spec.seed) + "-" +
                     std::to_string(out.instances.size());
    Instance inst = da    ? corpus_detail::gen_discounted_additive(rng, spec.v_min, spec.v_max, id)
                    : dd  ? corpus_detail::gen_detection_decay(rng, spec.v_min, spec.v_max, id)
                          : corpus_detail::gen_tabular(rng, spec.v_min, spec.v_max, id);
    if (tab) {
      if (!check_forward_monotone(inst.f()).holds) {
        ++out.discarded;
        continue;
      }
    }
    out.instances.push_back(std::move(inst));
  }
  return out;
}

}  // namespace seqsub

#endif  // SEQSUB_CERTIFY_HPP_

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

#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "seqsub/certify.hpp"

namespace seqsub {
namespace {

Sequence S(std::vector<int> v) { return Sequence(std::move(v)); }

Instance zero_function() {
  return Instance{"zero", GroundSet::numbered(3),
                  std::make_shared<DiscountedAdditiveFunction>(
                      std::vector<double>{1, 1, 1}, std::vector<double>{0, 0, 0})};
}

Instance non_monotone() {
  auto f = std::make_shared<TabularFunction>(2, 2);
  f->set(Sequence(), 0.0);
  f->set(S({0}), 1.0);
  f->set(S({1}), 0.5);
  f->set(S({0, 1}), 0.25);
  f->set(S({1, 0}), 1.0);
  return Instance{"drop", GroundSet::numbered(2), std::move(f)};
}

TEST(CertifyInstance, Table3ContiguousTauOne) {
  Instance inst = make_table3();
  CertificationResult r = certify_instance(inst, 2, 1, RemovalMode::contiguous,
                                           AlgorithmKind::robust_contiguous);
  EXPECT_EQ(r.instance_id, "builtin:table3");
  EXPECT_EQ(r.family, "tabular");
  EXPECT_EQ(r.ground_size, 3);
  EXPECT_TRUE(r.forward);
  EXPECT_DOUBLE_EQ(r.alpha, 6.0 / 11.0);
  EXPECT_FALSE(r.alpha_exact);
  EXPECT_TRUE(r.mu1_exact);
  EXPECT_DOUBLE_EQ(r.mu2, 0.6);
  EXPECT_FALSE(r.mu2_exact);
  EXPECT_DOUBLE_EQ(r.mu3, 0.0);
  // Backward constant below 1 rules out the exact-case guarantees; of the
  // two measured-constant ones, the single-removal form is the larger.
  EXPECT_EQ(r.theorem, "t4b");
  EXPECT_DOUBLE_EQ(r.bound, 0.07301499503046432);
  EXPECT_EQ(r.algorithm_sequence, S({1, 2}));
  EXPECT_EQ(r.optimum_sequence, S({1, 2}));
  EXPECT_DOUBLE_EQ(r.g_alg, 1.0);
  EXPECT_DOUBLE_EQ(r.g_opt, 1.0);
  EXPECT_DOUBLE_EQ(r.ratio, 1.0);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_TRUE(r.reason.empty());
}

TEST(CertifyInstance, Table3ContiguousTauTwo) {
  Instance inst = make_table3();
  CertificationResult r = certify_instance(inst, 3, 2, RemovalMode::contiguous,
                                           AlgorithmKind::robust_contiguous);
  EXPECT_EQ(r.theorem, "t5b");
  EXPECT_DOUBLE_EQ(r.bound, 0.04370347557975973);
  EXPECT_EQ(r.algorithm_sequence, S({1, 0, 2}));
  EXPECT_EQ(r.optimum_sequence, S({1, 0, 2}));
  EXPECT_DOUBLE_EQ(r.g_alg, 1.0);
  EXPECT_DOUBLE_EQ(r.g_opt, 1.0);
  EXPECT_EQ(r.verdict, Verdict::pass);
}

TEST(CertifyInstance, Table3ArbitraryIsUncertifiable) {
  // The subsequence constant is 0 on this table, so the arbitrary-removal
  // guarantees' preconditions fail even though the pairing matches.
  Instance inst = make_table3();
  CertificationResult r = certify_instance(inst, 3, 2, RemovalMode::arbitrary,
                                           AlgorithmKind::robust_arbitrary);
  EXPECT_EQ(r.verdict, Verdict::uncertifiable);
  EXPECT_EQ(r.reason, "measured constants satisfy no guarantee's preconditions");
  EXPECT_TRUE(r.theorem.empty());
  EXPECT_TRUE(std::isnan(r.bound));
  EXPECT_EQ(r.algorithm_sequence, S({1, 2, 0}));
  EXPECT_EQ(r.optimum_sequence, S({0, 1, 2}));
  EXPECT_DOUBLE_EQ(r.g_alg, 0.2);
  EXPECT_DOUBLE_EQ(r.g_opt, 0.2);
  EXPECT_DOUBLE_EQ(r.ratio, 1.0);
}

TEST(CertifyInstance, OrderFreeInstanceCitesTheExactGuarantees) {
  // One shared discount makes the value order-free: every constant is
  // exactly 1 and the fixed guarantees apply (and beat the measured ones).
  Instance inst{"shared-discount", GroundSet::numbered(4),
                std::make_shared<DiscountedAdditiveFunction>(
                    std::vector<double>{0.7, 1.9, 1.1, 0.5},
                    std::vector<double>{0.8, 0.8, 0.8, 0.8})};

  CertificationResult k2t1 = certify_instance(inst, 2, 1, RemovalMode::contiguous,
                                              AlgorithmKind::robust_contiguous);
  EXPECT_EQ(k2t1.theorem, "t1");
  EXPECT_DOUBLE_EQ(k2t1.bound, ratio_theorem1(2));
  EXPECT_EQ(k2t1.verdict, Verdict::pass);

  CertificationResult k4t1 = certify_instance(inst, 4, 1, RemovalMode::contiguous,
                                              AlgorithmKind::robust_contiguous);
  EXPECT_EQ(k4t1.theorem, "t1");
  EXPECT_DOUBLE_EQ(k4t1.bound, ratio_theorem1(4));
  EXPECT_EQ(k4t1.verdict, Verdict::pass);

  // tau = 2 drops the single-removal forms; the tie between the exact
  // guarantee and its all-ones measured twin resolves to the exact one.
  CertificationResult k3t2 = certify_instance(inst, 3, 2, RemovalMode::contiguous,
                                              AlgorithmKind::robust_contiguous);
  EXPECT_EQ(k3t2.theorem, "t2");
  EXPECT_DOUBLE_EQ(k3t2.bound, ratio_theorem2(3, 2));
  EXPECT_EQ(k3t2.verdict, Verdict::pass);

  CertificationResult arb = certify_instance(inst, 3, 2, RemovalMode::arbitrary,
                                             AlgorithmKind::robust_arbitrary);
  EXPECT_EQ(arb.theorem, "t3");
  EXPECT_DOUBLE_EQ(arb.bound, ratio_theorem3(2));
  EXPECT_EQ(arb.verdict, Verdict::pass);
}

TEST(CertifyInstance, SsgHasNoRemovalGuarantee) {
  Instance inst = make_table3();
  CertificationResult r = certify_instance(inst, 3, 1, RemovalMode::contiguous,
                                           AlgorithmKind::ssg);
  EXPECT_EQ(r.verdict, Verdict::uncertifiable);
  EXPECT_EQ(r.reason, "no removal guarantee covers ssg");
  EXPECT_EQ(r.algorithm_sequence, S({1, 0, 2}));
  // The robust evaluation still reports how the greedy sequence fares: every
  // single contiguous deletion from (v2, v1, v3) leaves a 1.2-valued rest.
  EXPECT_DOUBLE_EQ(r.g_alg, 1.2);
}

TEST(CertifyInstance, MismatchedPairIsUncertifiable) {
  Instance inst = make_table3();
  CertificationResult r = certify_instance(inst, 2, 1, RemovalMode::arbitrary,
                                           AlgorithmKind::robust_contiguous);
  EXPECT_EQ(r.verdict, Verdict::uncertifiable);
  EXPECT_EQ(r.reason, "no guarantee for this algorithm and removal mode pair");
}

TEST(CertifyInstance, NonMonotoneInstanceReportsNaNConstants) {
  Instance inst = non_monotone();
  CertificationResult r = certify_instance(inst, 2, 1, RemovalMode::contiguous,
                                           AlgorithmKind::robust_contiguous);
  EXPECT_FALSE(r.forward);
  EXPECT_TRUE(std::isnan(r.alpha));
  EXPECT_TRUE(std::isnan(r.mu3));
  EXPECT_EQ(r.verdict, Verdict::uncertifiable);
  EXPECT_EQ(r.reason, "not forward monotone");
}

TEST(CertifyInstance, ZeroOptimumIsVacuous) {
  Instance inst = zero_function();
  CertificationResult r = certify_instance(inst, 2, 1, RemovalMode::contiguous,
                                           AlgorithmKind::robust_contiguous);
  EXPECT_EQ(r.theorem, "t1");  // a guarantee applies, there is just nothing to win
  EXPECT_EQ(r.verdict, Verdict::vacuous);
  EXPECT_EQ(r.reason, "robust optimum is zero");
  EXPECT_DOUBLE_EQ(r.g_opt, 0.0);
  EXPECT_TRUE(std::isnan(r.ratio));
}

TEST(CertifyInstance, PrecomputedReportShortCircuitsTheScan) {
  Instance inst = make_table3();
  PropertyReport doctored;
  doctored.forward.holds = false;
  CertificationResult r = certify_instance(inst, 2, 1, RemovalMode::contiguous,
                                           AlgorithmKind::robust_contiguous, {}, &doctored);
  EXPECT_FALSE(r.forward);
  EXPECT_EQ(r.reason, "not forward monotone");
  EXPECT_TRUE(std::isnan(r.alpha));
}

TEST(CertifyInstance, InvalidConfigurationsPropagate) {
  Instance inst = make_table3();
  EXPECT_THROW(certify_instance(inst, 1, 1, RemovalMode::contiguous,
                                AlgorithmKind::robust_contiguous),
               InvalidArgumentError);
  EXPECT_THROW(certify_instance(inst, 3, 3, RemovalMode::contiguous,
                                AlgorithmKind::robust_contiguous),
               InvalidArgumentError);
}

TEST(CertifyCorpus, Table3GridShape) {
  std::vector<Instance> instances;
  instances.push_back(make_table3());
  auto rows = certify_corpus(instances, {}, 3);
  ASSERT_EQ(rows.size(), 6u);
  const char* theorems[] = {"t4b", "", "t4b", "", "t5b", ""};
  Verdict verdicts[] = {Verdict::pass,          Verdict::uncertifiable,
                        Verdict::pass,          Verdict::uncertifiable,
                        Verdict::pass,          Verdict::uncertifiable};
  int ks[] = {2, 2, 3, 3, 3, 3};
  int taus[] = {1, 1, 1, 1, 2, 2};
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(rows[i].k, ks[i]) << i;
    EXPECT_EQ(rows[i].tau, taus[i]) << i;
    EXPECT_EQ(rows[i].theorem, theorems[i]) << i;
    EXPECT_EQ(rows[i].verdict, verdicts[i]) << i;
    RemovalMode want_mode = i % 2 == 0 ? RemovalMode::contiguous : RemovalMode::arbitrary;
    EXPECT_EQ(rows[i].mode, want_mode) << i;
  }
}

TEST(CertifyCsv, RowsAndEmptyCells) {
  std::vector<Instance> instances;
  instances.push_back(make_table3());
  auto rows = certify_corpus(instances, {}, 2);
  std::ostringstream out;
  write_certify_csv(out, rows);
  std::istringstream in(out.str());
  std::string line;
  ASSERT_TRUE(std::getline(in, line));
  EXPECT_EQ(line, kCertifyCsvHeader);
  ASSERT_TRUE(std::getline(in, line));
  EXPECT_EQ(line,
            "builtin:table3,tabular,3,2,1,contiguous,robust_contiguous,"
            "0.5454545454545454,0.9999999999999989,0.6,0,t4b,0.07301499503046432,"
            "1,1,1,pass");
  ASSERT_TRUE(std::getline(in, line));
  EXPECT_EQ(line,
            "builtin:table3,tabular,3,2,1,arbitrary,robust_arbitrary,"
            "0.5454545454545454,0.9999999999999989,0.6,0,,,1,1,1,uncertifiable");
  EXPECT_FALSE(std::getline(in, line));
}

TEST(Corpus, DiscountedAdditiveAlwaysCertifies) {
  CorpusResult corpus = generate_corpus({"discounted_additive", 5, 3, 5, 7});
  ASSERT_EQ(corpus.instances.size(), 5u);
  EXPECT_EQ(corpus.discarded, 0);
  EXPECT_EQ(corpus.instances[0].id, "da-s7-0");
  EXPECT_EQ(corpus.instances[4].id, "da-s7-4");

  auto rows = certify_corpus(corpus.instances);
  EXPECT_GE(rows.size(), 30u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.verdict, Verdict::pass) << r.instance_id << " k=" << r.k << " tau=" << r.tau;
    if (r.mode == RemovalMode::contiguous) {
      EXPECT_EQ(r.theorem, r.tau == 1 ? "t1" : "t2") << r.instance_id;
    } else {
      EXPECT_EQ(r.theorem, "t3") << r.instance_id;
    }
  }
}

TEST(Corpus, DiscountedAdditiveConstantsAreExactByConstruction) {
  CorpusResult corpus = generate_corpus({"discounted_additive", 4, 3, 4, 99});
  for (const Instance& inst : corpus.instances) {
    PropertyReport rep = analyze_properties(inst.f());
    ASSERT_TRUE(rep.forward.holds) << inst.id;
    EXPECT_TRUE(rep.alpha->exact) << inst.id;
    EXPECT_TRUE(rep.mu2->exact) << inst.id;
    EXPECT_TRUE(rep.mu3->exact) << inst.id;
  }
}

TEST(Corpus, DetectionDecayReferenceInstance) {
  CorpusResult corpus = generate_corpus({"detection_decay", 1, 3, 5, 11});
  ASSERT_EQ(corpus.instances.size(), 1u);
  const Instance& inst = corpus.instances[0];
  EXPECT_EQ(inst.id, "dd-s11-0");

  CertificationResult contig = certify_instance(inst, 3, 1, RemovalMode::contiguous,
                                                AlgorithmKind::robust_contiguous);
  EXPECT_DOUBLE_EQ(contig.alpha, 0.6440421525751191);
  EXPECT_FALSE(contig.alpha_exact);
  EXPECT_TRUE(contig.mu1_exact);
  EXPECT_TRUE(contig.mu2_exact);
  EXPECT_DOUBLE_EQ(contig.mu3, 0.8389939006304721);
  EXPECT_EQ(contig.theorem, "t4b");
  EXPECT_DOUBLE_EQ(contig.bound, 0.1594834245672102);
  EXPECT_EQ(contig.verdict, Verdict::pass);

  CertificationResult arb = certify_instance(inst, 3, 1, RemovalMode::arbitrary,
                                             AlgorithmKind::robust_arbitrary);
  EXPECT_EQ(arb.theorem, "t6");
  EXPECT_DOUBLE_EQ(arb.bound, 0.13380562046354935);
  EXPECT_EQ(arb.verdict, Verdict::pass);
}

TEST(Corpus, DetectionDecayNeverFails) {
  CorpusResult corpus = generate_corpus({"detection_decay", 2, 3, 5, 11});
  auto rows = certify_corpus(corpus.instances, {}, 3);
  ASSERT_FALSE(rows.empty());
  for (const auto& r : rows) {
    EXPECT_NE(r.verdict, Verdict::fail) << r.instance_id;
    EXPECT_NE(r.verdict, Verdict::uncertifiable) << r.instance_id;
  }
}

TEST(Corpus, TabularRandomRejectsNonMonotoneDraws) {
  CorpusResult corpus = generate_corpus({"tabular_random", 5, 3, 4, 3});
  ASSERT_EQ(corpus.instances.size(), 5u);
  EXPECT_GE(corpus.discarded, 0);
  for (const Instance& inst : corpus.instances) {
    EXPECT_TRUE(check_forward_monotone(inst.f()).holds) << inst.id;
    EXPECT_LE(inst.f().ground_size(), 4);
    EXPECT_GE(inst.f().ground_size(), 3);
  }

  // Instance 3 of this seed has hard violations in every constant, so the
  // matched pairings still certify nothing; instance 4 has small positive
  // constants and certifies with the measured-constant guarantees.
  CertificationResult hard = certify_instance(corpus.instances[3], 2, 1,
                                              RemovalMode::arbitrary,
                                              AlgorithmKind::robust_arbitrary);
  EXPECT_TRUE(hard.forward);
  EXPECT_LE(hard.alpha, 1e-9);
  EXPECT_EQ(hard.verdict, Verdict::uncertifiable);
  EXPECT_EQ(hard.reason, "measured constants satisfy no guarantee's preconditions");

  CertificationResult soft = certify_instance(corpus.instances[4], 2, 1,
                                              RemovalMode::contiguous,
                                              AlgorithmKind::robust_contiguous);
  EXPECT_EQ(soft.theorem, "t4b");
  EXPECT_DOUBLE_EQ(soft.bound, 0.005197028245984508);
  EXPECT_NE(soft.verdict, Verdict::fail);
}

TEST(Corpus, DeterministicAcrossCalls) {
  CorpusSpec spec{"detection_decay", 3, 3, 5, 42};
  CorpusResult a = generate_corpus(spec);
  CorpusResult b = generate_corpus(spec);
  ASSERT_EQ(a.instances.size(), b.instances.size());
  for (std::size_t i = 0; i < a.instances.size(); ++i) {
    EXPECT_EQ(a.instances[i].id, b.instances[i].id);
    EXPECT_EQ(save_instance_string(a.instances[i]), save_instance_string(b.instances[i]));
  }
}

TEST(Corpus, SpecValidation) {
  EXPECT_THROW(generate_corpus({"discounted_additive", 0, 3, 5, 1}), InvalidArgumentError);
  EXPECT_THROW(generate_corpus({"discounted_additive", 1, 0, 5, 1}), InvalidArgumentError);
  EXPECT_THROW(generate_corpus({"discounted_additive", 1, 6, 5, 1}), InvalidArgumentError);
  EXPECT_THROW(generate_corpus({"discounted_additive", 1, 3, 65, 1}), InvalidArgumentError);
  EXPECT_THROW(generate_corpus({"parabolic", 1, 3, 5, 1}), InvalidArgumentError);
  EXPECT_THROW(generate_corpus({"tabular_random", 1, 5, 6, 1}), InvalidArgumentError);
}

TEST(Names, EnumRoundTrips) {
  EXPECT_STREQ(to_string(Verdict::pass), "pass");
  EXPECT_STREQ(to_string(Verdict::fail), "fail");
  EXPECT_STREQ(to_string(Verdict::vacuous), "vacuous");
  EXPECT_STREQ(to_string(Verdict::uncertifiable), "uncertifiable");
  EXPECT_EQ(algorithm_from_string("ssg"), AlgorithmKind::ssg);
  EXPECT_EQ(algorithm_from_string("robust_contiguous"), AlgorithmKind::robust_contiguous);
  EXPECT_EQ(algorithm_from_string("robust_arbitrary"), AlgorithmKind::robust_arbitrary);
  EXPECT_THROW(algorithm_from_string("greedy"), InvalidArgumentError);
  EXPECT_EQ(removal_mode_from_string("contiguous"), RemovalMode::contiguous);
  EXPECT_EQ(removal_mode_from_string("arbitrary"), RemovalMode::arbitrary);
  EXPECT_THROW(removal_mode_from_string("windowed"), InvalidArgumentError);
  EXPECT_STREQ(to_string(AlgorithmKind::ssg), "ssg");
  EXPECT_STREQ(to_string(AlgorithmKind::robust_contiguous), "robust_contiguous");
  EXPECT_STREQ(to_string(AlgorithmKind::robust_arbitrary), "robust_arbitrary");
}

}  // namespace
}  // namespace seqsub

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

// Command line front end.
//
//   seqsub check <source>            measure structural constants
//   seqsub run <source> ...          run a greedy algorithm
//   seqsub certify ...               certify instances against guarantees
//   seqsub table2 ...                the reference grid of t2 bounds
//   seqsub counterexample            the built-in block-vs-element separation
//   seqsub bounds --theorem <id>     evaluate one closed-form bound
//
// <source> is a file path or "builtin:table3" /
// "builtin:adversarial?n=<int>&eps=<float>".
//
// Exit codes: 0 success, 1 a verification failed (a certified bound is
// violated, a grid comparison mismatched, or the built-in counterexample did
// not verify), 2 operational errors (bad input, budget exceeded, bad flags).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seqsub/seqsub.hpp"

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// Writes to --out when given, else to stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw seqsub::Error("cannot open output file: " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string describe_witness(const seqsub::GroundSet& gs, const seqsub::Witness& w) {
  std::string out = "S1=" + seqsub::format_sequence(gs, w.s1) +
                    " S2=" + seqsub::format_sequence(gs, w.s2);
  if (w.s3) out += " S3=" + seqsub::format_sequence(gs, *w.s3);
  if (w.element) out += " v=" + gs.name(*w.element);
  out += " lhs=" + fixed6(w.lhs) + " rhs=" + fixed6(w.rhs);
  return out;
}

std::string constant_flags(const seqsub::ConstantReport& c) {
  if (!c.positive) return "[violated]";
  if (c.exact) return "[exact]";
  return "[positive]";
}

struct CheckArgs {
  std::string source;
  int max_len = 0;
  std::size_t budget_sequences = 10000;
  std::string format = "plain";
  std::string out_path;
};

int run_check(const CheckArgs& args) {
  seqsub::Instance inst = seqsub::load_source(args.source);
  seqsub::PropertyOptions popts;
  popts.max_len = args.max_len;
  popts.budget_sequences = args.budget_sequences;
  seqsub::PropertyReport rep = seqsub::analyze_properties(inst.f(), popts);
  auto profiles = seqsub::assumption_report(rep);

  Output output(args.out_path);
  std::ostream& os = output.os();
  const seqsub::GroundSet& gs = inst.ground;

  auto constant_rows = [&]() {
    std::vector<std::pair<std::string, const seqsub::ConstantReport*>> rows;
    if (rep.alpha) rows.emplace_back("alpha", &*rep.alpha);
    if (rep.mu1) rows.emplace_back("mu1", &*rep.mu1);
    if (rep.mu2) rows.emplace_back("mu2", &*rep.mu2);
    if (rep.mu3) rows.emplace_back("mu3", &*rep.mu3);
    return rows;
  };

  if (args.format == "markdown") {
    os << "| property | value | status |\n|---|---|---|\n";
    os << "| forward monotone | " << (rep.forward.holds ? "yes" : "no") << " | |\n";
    for (auto& [name, c] : constant_rows()) {
      os << "| " << name << " | " << fixed6(c->value) << " | " << constant_flags(*c) << " |\n";
    }
    return 0;
  }

  os << "instance: " << inst.id << "\n";
  os << "kind: " << inst.f().kind() << "\n";
  os << "ground set:";
  for (int i = 0; i < gs.size(); ++i) os << ' ' << gs.name(i);
  os << " (V = " << gs.size() << ")\n";
  os << "scan depth: " << rep.max_len << " (" << rep.sequences << " sequences)\n";
  os << "forward monotone: " << (rep.forward.holds ? "yes" : "no") << "\n";
  if (!rep.forward.holds) {
    os << "  counterexample: " << describe_witness(gs, *rep.forward.counterexample) << "\n";
    os << "ratio constants not applicable without forward monotonicity\n";
    return 0;
  }
  for (auto& [name, c] : constant_rows()) {
    os << name << " = " << fixed6(c->value) << ' ' << constant_flags(*c);
    if (c->witness) os << "  witness: " << describe_witness(gs, *c->witness);
    os << "\n";
  }
  os << "profiles held:";
  bool any = false;
  for (const auto& p : profiles) {
    if (p.holds) {
      os << ' ' << p.id;
      any = true;
    }
  }
  if (!any) os << " none";
  os << "\n";
  for (const auto& p : profiles) {
    os << "  " << p.id << (p.holds ? " [yes] " : " [no]  ") << p.requirements << "\n";
  }
  if (rep.mu1->exact && !rep.mu2->exact) {
    os << "note: element-sequence-submodular but not sequence-submodular\n";
  }
  return 0;
}

struct RunArgs {
  std::string source;
  std::string algorithm = "ssg";
  int k = 0;
  int tau = 0;
  std::string mode = "contiguous";
  std::string trace_path;
  std::string out_path;
  std::size_t budget_subsets = 100000;
};

int run_run(const RunArgs& args) {
  seqsub::Instance inst = seqsub::load_source(args.source);
  const seqsub::SequenceFunction& f = inst.f();
  seqsub::AlgorithmKind alg = seqsub::algorithm_from_string(args.algorithm);

  seqsub::GreedyTrace trace;
  switch (alg) {
    case seqsub::AlgorithmKind::ssg: trace = seqsub::ssg(f, args.k); break;
    case seqsub::AlgorithmKind::robust_contiguous:
      trace = seqsub::robust_greedy_contiguous(f, args.k, args.tau);
      break;
    case seqsub::AlgorithmKind::robust_arbitrary:
      trace = seqsub::robust_greedy_arbitrary(f, args.k, args.tau);
      break;
  }

  Output output(args.out_path);
  std::ostream& os = output.os();
  os << "instance: " << inst.id << "\n";
  os << "algorithm: " << to_string(alg) << "\n";
  os << "k = " << args.k;
  if (alg != seqsub::AlgorithmKind::ssg) os << ", tau = " << args.tau;
  os << "\n";
  os << "sequence: " << seqsub::format_sequence(inst.ground, trace.sequence) << "\n";
  os << "value = " << fixed6(trace.value) << "\n";
  os << "evaluations: " << trace.evaluations << " (cap "
     << static_cast<long long>(args.k) * f.ground_size() << ")\n";
  if (trace.phase1_length > 0) os << "phase 1 length: " << trace.phase1_length << "\n";

  if (args.tau > 0) {
    seqsub::RemovalModel model{args.tau, seqsub::removal_mode_from_string(args.mode)};
    seqsub::OracleOptions oopts;
    oopts.budget_subsets = args.budget_subsets;
    seqsub::RobustEvaluation worst = seqsub::worst_removal(f, trace.sequence, model, oopts);
    os << "worst removal (tau = " << args.tau << ", " << to_string(model.mode) << "): removed (";
    for (std::size_t i = 0; i < worst.removed.size(); ++i) {
      if (i) os << ", ";
      os << inst.ground.name(worst.removed[i]);
    }
    os << ") -> " << seqsub::format_sequence(inst.ground, worst.attacked)
       << " value = " << fixed6(worst.value) << "\n";
  }

  if (!args.trace_path.empty()) {
    std::ofstream tf(args.trace_path);
    if (!tf) throw seqsub::Error("cannot open trace file: " + args.trace_path);
    seqsub::write_trace_csv(tf, trace, &inst.ground);
  }
  return 0;
}

struct CertifyArgs {
  std::string instance_source;
  std::string family;
  int count = 10;
  int v_min = 3;
  int v_max = 5;
  std::uint64_t seed = 1;
  int k = 0;
  int tau = 1;
  std::string mode = "contiguous";
  std::string algorithm;
  int k_cap = 4;
  std::string format = "csv";
  std::string out_path;
  std::size_t budget_sequences = 10000;
  std::size_t oracle_sequences = 200000;
  std::size_t budget_subsets = 100000;
};

void print_certify_plain(std::ostream& os, const std::vector<seqsub::CertificationResult>& rs) {
  for (const auto& r : rs) {
    os << r.instance_id << " k=" << r.k << " tau=" << r.tau << " " << to_string(r.mode) << "/"
       << to_string(r.algorithm) << ": ";
    if (r.theorem.empty()) {
      os << "uncertifiable (" << r.reason << ")";
    } else {
      os << r.theorem << " bound=" << fixed6(r.bound) << " g_alg=" << fixed6(r.g_alg)
         << " g_opt=" << fixed6(r.g_opt) << " -> " << to_string(r.verdict);
      if (!r.reason.empty()) os << " (" << r.reason << ")";
    }
    os << "\n";
  }
}

void print_certify_markdown(std::ostream& os, const std::vector<seqsub::CertificationResult>& rs) {
  os << "| instance | k | tau | mode | algorithm | theorem | bound | g_alg | g_opt | verdict |\n";
  os << "|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rs) {
    os << "| " << r.instance_id << " | " << r.k << " | " << r.tau << " | " << to_string(r.mode)
       << " | " << to_string(r.algorithm) << " | " << (r.theorem.empty() ? "-" : r.theorem)
       << " | " << (std::isnan(r.bound) ? std::string("-") : fixed6(r.bound)) << " | "
       << fixed6(r.g_alg) << " | " << fixed6(r.g_opt) << " | " << to_string(r.verdict)
       << " |\n";
  }
}

int run_certify(const CertifyArgs& args) {
  seqsub::CertifyOptions opts;
  opts.properties.budget_sequences = args.budget_sequences;
  opts.oracle.budget_sequences = args.oracle_sequences;
  opts.oracle.budget_subsets = args.budget_subsets;

  std::vector<seqsub::CertificationResult> results;
  if (!args.instance_source.empty()) {
    seqsub::Instance inst = seqsub::load_source(args.instance_source);
    if (args.k > 0) {
      seqsub::RemovalMode mode = seqsub::removal_mode_from_string(args.mode);
      seqsub::AlgorithmKind alg =
          !args.algorithm.empty() ? seqsub::algorithm_from_string(args.algorithm)
          : mode == seqsub::RemovalMode::contiguous ? seqsub::AlgorithmKind::robust_contiguous
                                                    : seqsub::AlgorithmKind::robust_arbitrary;
      results.push_back(seqsub::certify_instance(inst, args.k, args.tau, mode, alg, opts));
    } else {
      results = seqsub::certify_corpus({inst}, opts, args.k_cap);
    }
  } else if (!args.family.empty()) {
    seqsub::CorpusSpec spec;
    spec.family = args.family;
    spec.count = args.count;
    spec.v_min = args.v_min;
    spec.v_max = args.v_max;
    spec.seed = args.seed;
    seqsub::CorpusResult corpus = seqsub::generate_corpus(spec);
    if (corpus.discarded > 0) {
      std::cerr << "generated " << corpus.instances.size() << " instances, discarded "
                << corpus.discarded << " non-monotone candidates\n";
    }
    results = seqsub::certify_corpus(corpus.instances, opts, args.k_cap);
  } else {
    throw seqsub::InvalidArgumentError("certify needs --instance or --family");
  }

  Output output(args.out_path);
  if (args.format == "csv") {
    seqsub::write_certify_csv(output.os(), results);
  } else if (args.format == "markdown") {
    print_certify_markdown(output.os(), results);
  } else {
    print_certify_plain(output.os(), results);
  }

  int failures = 0;
  for (const auto& r : results) {
    if (r.verdict == seqsub::Verdict::fail) ++failures;
  }
  if (failures > 0) {
    std::cerr << failures << " certified bound(s) violated\n";
    return 1;
  }
  return 0;
}

struct Table2Args {
  std::string out_path;
  std::string compare_path;
};

int run_table2(const Table2Args& args) {
  seqsub::Table2Grid grid = seqsub::table2_grid();
  if (args.compare_path.empty()) {
    Output output(args.out_path);
    seqsub::write_table2_csv(output.os(), grid);
    return 0;
  }

  if (!args.out_path.empty()) {
    Output output(args.out_path);
    seqsub::write_table2_csv(output.os(), grid);
  }
  std::ifstream in(args.compare_path);
  if (!in) throw seqsub::Error("cannot open comparison file: " + args.compare_path);

  auto split = [](const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
  };

  std::string line;
  if (!std::getline(in, line)) throw seqsub::ParseError(1, "comparison file is empty");
  auto header = split(line);
  if (header.size() != grid.ks.size() + 1) {
    throw seqsub::ParseError(1, "expected " + std::to_string(grid.ks.size() + 1) + " columns");
  }
  int mismatches = 0;
  for (std::size_t ti = 0; ti < grid.taus.size(); ++ti) {
    if (!std::getline(in, line)) {
      throw seqsub::ParseError(static_cast<int>(ti) + 2, "missing row");
    }
    auto cells = split(line);
    if (cells.size() != grid.ks.size() + 1) {
      throw seqsub::ParseError(static_cast<int>(ti) + 2, "wrong column count");
    }
    for (std::size_t ki = 0; ki < grid.ks.size(); ++ki) {
      double golden = 0;
      try {
        golden = std::stod(cells[ki + 1]);
      } catch (const std::exception&) {
        throw seqsub::ParseError(static_cast<int>(ti) + 2, "bad number: " + cells[ki + 1]);
      }
      double computed = grid.values[ti][ki];
      if (std::fabs(computed - golden) > 0.0005 + 1e-9) {
        std::cout << "mismatch at tau=" << grid.taus[ti] << " k=" << grid.ks[ki]
                  << ": computed " << seqsub::format_cell(computed) << " (" << fixed6(computed)
                  << "), reference " << cells[ki + 1] << "\n";
        ++mismatches;
      }
    }
  }
  if (mismatches > 0) {
    std::cout << mismatches << " mismatched cell(s)\n";
    return 1;
  }
  std::cout << "all " << grid.taus.size() * grid.ks.size() << " cells match within 0.0005\n";
  return 0;
}

struct CounterexampleArgs {
  std::string out_path;
};

// The built-in 3-element table separates the single-element prefix property
// from the block prefix property: every single-element marginal contracts
// under prefix extension (constant exactly 1), yet one block marginal grows.
int run_counterexample(const CounterexampleArgs& args) {
  seqsub::Instance inst = seqsub::make_table3();
  const seqsub::SequenceFunction& f = inst.f();

  seqsub::ConstantReport mu1 = seqsub::mu1_constant(f);

  seqsub::Sequence s1;                         // ()
  seqsub::Sequence s2(std::vector<int>{0});    // (v1)
  seqsub::Sequence s3(std::vector<int>{1, 2}); // (v2, v3)
  double gain_after_s1 = seqsub::marginal(f, s1, s3);
  double gain_after_s2 = seqsub::marginal(f, s2, s3);
  double ratio = gain_after_s1 / gain_after_s2;

  Output output(args.out_path);
  std::ostream& os = output.os();
  os << "instance: builtin:table3\n";
  os << "mu1 = " << fixed6(mu1.value) << ' ' << constant_flags(mu1) << "\n";
  os << "single-element marginals never grow when the prefix extends.\n";
  os << "block counterexample:\n";
  os << "  S1 = " << seqsub::format_sequence(inst.ground, s1) << "\n";
  os << "  S2 = " << seqsub::format_sequence(inst.ground, s2) << "\n";
  os << "  S3 = " << seqsub::format_sequence(inst.ground, s3) << "\n";
  os << "  h(S3 | S1) = " << fixed6(gain_after_s1) << "\n";
  os << "  h(S3 | S2) = " << fixed6(gain_after_s2) << "\n";
  os << "  ratio = " << fixed6(ratio) << "\n";
  os << "the block marginal grows under prefix extension, so the\n";
  os << "single-element property does not imply the block property.\n";

  bool ok = mu1.exact && gain_after_s2 > gain_after_s1 + 1e-9;
  os << "verified: " << (ok ? "ok" : "FAILED") << "\n";
  return ok ? 0 : 1;
}

struct BoundsArgs {
  std::string theorem;
  int k = 0;
  int tau = 0;
  int i = 0;
  int kprime = 0;
  double alpha = 1.0;
  double mu1 = 1.0;
  double mu2 = 1.0;
  double mu3 = 1.0;
  double c = 1.0;
  bool breakdown = false;
  std::string out_path;
};

int run_bounds(const BoundsArgs& args) {
  seqsub::BoundParts parts;
  seqsub::BoundParts* pp = args.breakdown ? &parts : nullptr;
  double value = 0;
  std::vector<std::pair<std::string, std::string>> inputs;
  auto ints = [&](const char* n, int v) { inputs.emplace_back(n, std::to_string(v)); };
  auto dbls = [&](const char* n, double v) { inputs.emplace_back(n, fixed6(v)); };

  const std::string& t = args.theorem;
  if (t == "t1") {
    ints("k", args.k);
    value = seqsub::ratio_theorem1(args.k, pp);
  } else if (t == "t2") {
    ints("k", args.k), ints("tau", args.tau);
    value = seqsub::ratio_theorem2(args.k, args.tau, pp);
  } else if (t == "t3") {
    ints("tau", args.tau);
    value = seqsub::ratio_theorem3(args.tau, pp);
  } else if (t == "t4a") {
    ints("k", args.k), dbls("mu1", args.mu1), dbls("mu2", args.mu2);
    value = seqsub::ratio_theorem4a(args.k, args.mu1, args.mu2, pp);
  } else if (t == "t4b") {
    dbls("alpha", args.alpha), dbls("mu1", args.mu1), dbls("mu2", args.mu2);
    value = seqsub::ratio_theorem4b(args.alpha, args.mu1, args.mu2, pp);
  } else if (t == "t5a") {
    ints("k", args.k), ints("tau", args.tau), dbls("mu1", args.mu1), dbls("mu2", args.mu2);
    value = seqsub::ratio_theorem5a(args.k, args.tau, args.mu1, args.mu2, pp);
  } else if (t == "t5b") {
    dbls("alpha", args.alpha), dbls("mu1", args.mu1), dbls("mu2", args.mu2);
    value = seqsub::ratio_theorem5b(args.alpha, args.mu1, args.mu2, pp);
  } else if (t == "t6") {
    ints("tau", args.tau), dbls("alpha", args.alpha), dbls("mu1", args.mu1), dbls("mu3", args.mu3);
    value = seqsub::ratio_theorem6(args.tau, args.alpha, args.mu1, args.mu3, pp);
  } else if (t == "prefix") {
    ints("i", args.i), ints("k", args.k), dbls("alpha", args.alpha), dbls("mu1", args.mu1);
    value = seqsub::ssg_prefix_bound(args.i, args.k, args.alpha, args.mu1, pp);
  } else if (t == "concentration") {
    ints("k", args.k), ints("kprime", args.kprime), dbls("c", args.c), dbls("mu1", args.mu1);
    value = seqsub::concentration_bound(args.k, args.kprime, args.c, args.mu1, pp);
  } else {
    throw seqsub::InvalidArgumentError("unknown theorem id: " + t);
  }

  Output output(args.out_path);
  std::ostream& os = output.os();
  os << "theorem: " << t << "\n";
  for (auto& [n, v] : inputs) os << n << " = " << v << "\n";
  if (args.breakdown) {
    for (auto& [n, v] : parts) os << "  " << n << " = " << fixed6(v) << "\n";
  }
  os << "bound = " << fixed6(value) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"robust sequence submodular maximization toolkit"};
  app.require_subcommand(1);

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand("check", "measure structural constants of an instance");
  check->add_option("source", check_args.source, "instance file or builtin:<name>")->required();
  check->add_option("--max-len", check_args.max_len, "scan depth cap (0 = the function's limit)");
  check->add_option("--budget-sequences", check_args.budget_sequences,
                    "enumeration budget for the property scan");
  check->add_option("--format", check_args.format, "plain or markdown")
      ->check(CLI::IsMember({"plain", "markdown"}));
  check->add_option("--out", check_args.out_path, "write the report to a file");

  RunArgs run_args;
  CLI::App* run = app.add_subcommand("run", "run a greedy algorithm on an instance");
  run->add_option("source", run_args.source, "instance file or builtin:<name>")->required();
  run->add_option("-a,--algorithm", run_args.algorithm,
                  "ssg, robust_contiguous or robust_arbitrary")
      ->check(CLI::IsMember({"ssg", "robust_contiguous", "robust_arbitrary"}));
  run->add_option("-k", run_args.k, "number of greedy steps")->required();
  run->add_option("--tau", run_args.tau, "removal budget (enables the worst-removal report)");
  run->add_option("--mode", run_args.mode, "removal mode for the report")
      ->check(CLI::IsMember({"contiguous", "arbitrary"}));
  run->add_option("--trace", run_args.trace_path, "write a per-step score CSV");
  run->add_option("--out", run_args.out_path, "write the report to a file");
  run->add_option("--budget-subsets", run_args.budget_subsets, "removal enumeration budget");

  CertifyArgs certify_args;
  CLI::App* certify = app.add_subcommand("certify", "check guarantees against brute force");
  certify->add_option("--instance", certify_args.instance_source, "certify one instance");
  certify->add_option("--family", certify_args.family,
                      "generate a corpus: discounted_additive, detection_decay, tabular_random");
  certify->add_option("--count", certify_args.count, "corpus size");
  certify->add_option("--v-min", certify_args.v_min, "smallest ground set");
  certify->add_option("--v-max", certify_args.v_max, "largest ground set");
  certify->add_option("--seed", certify_args.seed, "corpus seed");
  certify->add_option("-k", certify_args.k, "steps (single-instance mode; 0 = default grid)");
  certify->add_option("--tau", certify_args.tau, "removal budget (single-instance mode)");
  certify->add_option("--mode", certify_args.mode, "removal mode (single-instance mode)")
      ->check(CLI::IsMember({"contiguous", "arbitrary"}));
  certify->add_option("--algorithm", certify_args.algorithm,
                      "algorithm (single-instance mode; default matches the mode)")
      ->check(CLI::IsMember({"ssg", "robust_contiguous", "robust_arbitrary"}));
  certify->add_option("--k-cap", certify_args.k_cap, "grid upper limit on k");
  certify->add_option("--format", certify_args.format, "csv, markdown or plain")
      ->check(CLI::IsMember({"csv", "markdown", "plain"}));
  certify->add_option("--out", certify_args.out_path, "write results to a file");
  certify->add_option("--budget-sequences", certify_args.budget_sequences,
                      "property scan budget");
  certify->add_option("--oracle-sequences", certify_args.oracle_sequences,
                      "brute force enumeration budget");
  certify->add_option("--budget-subsets", certify_args.budget_subsets,
                      "removal enumeration budget");

  Table2Args table2_args;
  CLI::App* table2 = app.add_subcommand("table2", "emit or verify the t2 reference grid");
  table2->add_option("--out", table2_args.out_path, "write the grid CSV to a file");
  table2->add_option("--compare", table2_args.compare_path,
                     "compare against a reference CSV (3-decimal cells)");

  CounterexampleArgs ce_args;
  CLI::App* ce = app.add_subcommand(
      "counterexample", "verify the built-in element-vs-block separation instance");
  ce->add_option("--out", ce_args.out_path, "write the report to a file");

  BoundsArgs bounds_args;
  CLI::App* bounds = app.add_subcommand("bounds", "evaluate one closed-form bound");
  bounds->add_option("--theorem", bounds_args.theorem,
                     "t1 t2 t3 t4a t4b t5a t5b t6 prefix concentration")
      ->required();
  bounds->add_option("-k", bounds_args.k, "steps");
  bounds->add_option("--tau", bounds_args.tau, "removal budget");
  bounds->add_option("-i", bounds_args.i, "prefix length (prefix bound)");
  bounds->add_option("--kprime", bounds_args.kprime, "remaining steps (concentration bound)");
  bounds->add_option("--alpha", bounds_args.alpha, "backward constant");
  bounds->add_option("--mu1", bounds_args.mu1, "element prefix constant");
  bounds->add_option("--mu2", bounds_args.mu2, "block prefix constant");
  bounds->add_option("--mu3", bounds_args.mu3, "subsequence constant");
  bounds->add_option("-c", bounds_args.c, "held fraction (concentration bound)");
  bounds->add_flag("--breakdown", bounds_args.breakdown, "print intermediate terms");
  bounds->add_option("--out", bounds_args.out_path, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(check_args);
    if (run->parsed()) return run_run(run_args);
    if (certify->parsed()) return run_certify(certify_args);
    if (table2->parsed()) return run_table2(table2_args);
    if (ce->parsed()) return run_counterexample(ce_args);
    if (bounds->parsed()) return run_bounds(bounds_args);
  } catch (const seqsub::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

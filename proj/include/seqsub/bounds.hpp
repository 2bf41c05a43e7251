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

// Closed-form approximation-ratio bounds.
//
// Naming: t1..t6 are the guarantees cited by the certifier; the letter
// suffix picks the variant (a: exact backward monotonicity and a k- or
// tau-dependent exponent; b: measured backward constant, dimension-free).
//
//   t1(k)                plain-greedy tail guarantee, one contiguous removal
//   t2(k, tau)           contiguous removal of up to tau entries
//   t3(tau)              arbitrary removal, exactly submodular case
//   t4a(k, mu1, mu2)     one removal, exact backward, measured mu1, mu2
//   t4b(alpha, mu1, mu2) one removal, measured backward constant
//   t5a(k, tau, ...)     up to tau removals, exact backward
//   t5b(alpha, mu1, mu2) up to tau removals, measured backward constant
//   t6(tau, alpha, mu1, mu3)  arbitrary removal, measured constants
//
// With every constant equal to 1, t4b equals t1's constant term, t5b equals
// t2's constant term, and t6 equals t3.
//
// t2's k-dependent term is used only when k >= 2tau. Its derivation
// substitutes the worst split point into an expression that decreases in the
// split only above the singularity of that expression; below k = 2tau the
// substituted form is spurious (it can exceed 1), while the constant term
// remains a valid guarantee from the complementary case of the same
// derivation. For k >= 2tau the gated form agrees exactly with the naive
// maximum. t5a inherits the same restriction through its exponent and
// requires k > 2tau; t4a requires k > 2 for the same reason.
//
// ssg_prefix_bound(i, k, alpha, mu1) bounds the value of the length-i greedy
// prefix against the length-k optimum: alpha * (1 - exp(-mu1 * i / k)).
//
// concentration_bound(k, kprime, c, mu1): if the greedy prefix with kprime
// steps left already holds a c-fraction of the final value, the final value
// is at least (e^x - 1) / (e^x - c) of the optimum, x = mu1 * kprime / k.
// The mu1 < 1 form additionally requires exact backward monotonicity.
//
// Inputs are validated; constants must lie in (0, 1]. All violations throw
// InvalidArgumentError.

#ifndef SEQSUB_BOUNDS_HPP_
#define SEQSUB_BOUNDS_HPP_

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "seqsub/error.hpp"

namespace seqsub {

using BoundParts = std::vector<std::pair<std::string, double>>;

namespace bound_detail {

inline void require_unit(const char* name, double v) {
  if (!(v > 0) || !(v <= 1.0)) {
    throw InvalidArgumentError(std::string(name) + " must lie in (0, 1], got " +
                               std::to_string(v));
  }
}

inline void note(BoundParts* parts, const char* name, double v) {
  if (parts) parts->emplace_back(name, v);
}

}  // namespace bound_detail

inline double ratio_theorem1(int k, BoundParts* parts = nullptr) {
  if (k < 2) throw InvalidArgumentError("t1 needs k >= 2");
  const double e = std::exp(1.0);
  double constant = (e - 1) / (2 * e);
  double x = static_cast<double>(k - 2) / (k - 1);
  double ex = std::exp(x);
  double variable = (ex - 1) / (2 * ex - 1);
  bound_detail::note(parts, "constant_term", constant);
  bound_detail::note(parts, "exponent", x);
  bound_detail::note(parts, "variable_term", variable);
  return std::max(constant, variable);
}

inline double ratio_theorem2(int k, int tau, BoundParts* parts = nullptr) {
  if (k < 2) throw InvalidArgumentError("t2 needs k >= 2");
  if (tau < 1 || tau > k - 1) throw InvalidArgumentError("t2 needs 1 <= tau <= k - 1");
  const double e = std::exp(1.0);
  double constant = (e - 1) * (e - 1) / (e * (2 * e - 1));
  bound_detail::note(parts, "constant_term", constant);
  if (k < 2 * tau) return constant;
  double x = static_cast<double>(k - 2 * tau) / (k - tau);
  double ex = std::exp(x);
  double variable = (e - 1) * (ex - 1) / ((2 * e - 1) * ex - (e - 1));
  bound_detail::note(parts, "exponent", x);
  bound_detail::note(parts, "variable_term", variable);
  return std::max(constant, variable);
}

inline double ratio_theorem3(int tau, BoundParts* parts = nullptr) {
  if (tau < 1) throw InvalidArgumentError("t3 needs tau >= 1");
  const double e = std::exp(1.0);
  double numerator = 1 - 1 / e;
  bound_detail::note(parts, "numerator", numerator);
  bound_detail::note(parts, "denominator", 1.0 + tau);
  return numerator / (1 + tau);
}

inline double ratio_theorem4a(int k, double mu1, double mu2, BoundParts* parts = nullptr) {
  if (k <= 2) throw InvalidArgumentError("t4a needs k > 2");
  bound_detail::require_unit("mu1", mu1);
  bound_detail::require_unit("mu2", mu2);
  double a = mu1 * mu2 / (mu1 + 1);
  double b = mu1 * (k - 2) / (k - 1);
  double eb = std::exp(b);
  bound_detail::note(parts, "a", a);
  bound_detail::note(parts, "b", b);
  return a * (eb - 1) / (eb - a);
}

inline double ratio_theorem4b(double alpha, double mu1, double mu2,
                              BoundParts* parts = nullptr) {
  bound_detail::require_unit("alpha", alpha);
  bound_detail::require_unit("mu1", mu1);
  bound_detail::require_unit("mu2", mu2);
  double em = std::exp(mu1);
  bound_detail::note(parts, "exp_mu1", em);
  return alpha * alpha * mu1 * mu2 * (em - 1) / ((mu1 + alpha) * em);
}

inline double ratio_theorem5a(int k, int tau, double mu1, double mu2,
                              BoundParts* parts = nullptr) {
  if (tau < 1) throw InvalidArgumentError("t5a needs tau >= 1");
  if (k <= 2 * tau) throw InvalidArgumentError("t5a needs k > 2 * tau");
  bound_detail::require_unit("mu1", mu1);
  bound_detail::require_unit("mu2", mu2);
  double a = mu1 * (1 - std::exp(-mu1));
  double b = mu1 * (k - 2 * tau) / (k - tau);
  double eb = std::exp(b);
  bound_detail::note(parts, "a", a);
  bound_detail::note(parts, "b", b);
  return a * mu2 * (eb - 1) / ((a + 1) * eb - a * mu2);
}

inline double ratio_theorem5b(double alpha, double mu1, double mu2,
                              BoundParts* parts = nullptr) {
  bound_detail::require_unit("alpha", alpha);
  bound_detail::require_unit("mu1", mu1);
  bound_detail::require_unit("mu2", mu2);
  double em = std::exp(mu1);
  bound_detail::note(parts, "exp_mu1", em);
  return alpha * alpha * mu1 * mu2 * (em - 1) * (em - 1) /
         (mu1 * em * (em - 1) + em * em);
}

inline double ratio_theorem6(int tau, double alpha, double mu1, double mu3,
                             BoundParts* parts = nullptr) {
  if (tau < 1) throw InvalidArgumentError("t6 needs tau >= 1");
  bound_detail::require_unit("alpha", alpha);
  bound_detail::require_unit("mu1", mu1);
  bound_detail::require_unit("mu3", mu3);
  double em = std::exp(mu1);
  bound_detail::note(parts, "exp_mu1", em);
  bound_detail::note(parts, "denominator", (mu1 + alpha * tau) * em);
  return alpha * alpha * mu1 * mu3 * (em - 1) / ((mu1 + alpha * tau) * em);
}

// Guarantee for the length-i prefix of a k-step greedy run.
inline double ssg_prefix_bound(int i, int k, double alpha = 1.0, double mu1 = 1.0,
                               BoundParts* parts = nullptr) {
  if (k < 1 || i < 1 || i > k) throw InvalidArgumentError("prefix bound needs 1 <= i <= k");
  bound_detail::require_unit("alpha", alpha);
  bound_detail::require_unit("mu1", mu1);
  double x = mu1 * static_cast<double>(i) / k;
  bound_detail::note(parts, "exponent", x);
  return alpha * (1 - std::exp(-x));
}

// Improvement of the tail guarantee when the prefix already holds a
// c-fraction of the final value; kprime counts the remaining steps.
inline double concentration_bound(int k, int kprime, double c, double mu1 = 1.0,
                                  BoundParts* parts = nullptr) {
  if (k < 1 || kprime < 1 || kprime > k) {
    throw InvalidArgumentError("concentration bound needs 1 <= kprime <= k");
  }
  bound_detail::require_unit("c", c);
  bound_detail::require_unit("mu1", mu1);
  double x = std::exp(mu1 * static_cast<double>(kprime) / k);
  bound_detail::note(parts, "exp_term", x);
  return (x - 1) / (x - c);
}

// The reference grid of t2 values: tau = 2, 4, .., 20 by k = 50, 52, .., 68.
struct Table2Grid {
  std::vector<int> taus;
  std::vector<int> ks;
  std::vector<std::vector<double>> values;  // values[ti][ki]
};

inline Table2Grid table2_grid() {
  Table2Grid grid;
  for (int tau = 2; tau <= 20; tau += 2) grid.taus.push_back(tau);
  for (int k = 50; k <= 68; k += 2) grid.ks.push_back(k);
  for (int tau : grid.taus) {
    std::vector<double> row;
    for (int k : grid.ks) row.push_back(ratio_theorem2(k, tau));
    grid.values.push_back(std::move(row));
  }
  return grid;
}

inline std::string format_cell(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// CSV: header row "tau/k,<k values>", then one row per tau with a leading
// tau column and 3-decimal cells.
inline void write_table2_csv(std::ostream& out, const Table2Grid& grid) {
  out << "tau/k";
  for (int k : grid.ks) out << ',' << k;
  out << '\n';
  for (std::size_t ti = 0; ti < grid.taus.size(); ++ti) {
    out << grid.taus[ti];
    for (double v : grid.values[ti]) out << ',' << format_cell(v);
    out << '\n';
  }
}

}  // namespace seqsub

#endif  // SEQSUB_BOUNDS_HPP_

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

// Sequence function families.
//
// A sequence function h maps duplicate-free sequences to non-negative reals
// with h(()) = 0. Evaluation is pure and const; instances are safe to share
// across threads once constructed.
//
// Families:
//   TabularFunction            explicit value table, complete up to a depth
//   DiscountedAdditiveFunction h(s) = sum_i w(s_i) * d(i), d non-increasing
//   SsgAdversarialFunction     a fixed family on which plain greedy is
//                              maximally fragile to one removal
//   DetectionDecayFunction     coverage with per-position detection decay
//
// marginal(f, a, b) = f(concat(a, b)) - f(a), the value b adds after a.

#ifndef SEQSUB_FUNCTIONS_HPP_
#define SEQSUB_FUNCTIONS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "seqsub/core.hpp"
#include "seqsub/error.hpp"

namespace seqsub {

class SequenceFunction {
 public:
  virtual ~SequenceFunction() = default;
  // h(s). Never negative; h of the empty sequence is 0.
  virtual double eval(const Sequence& s) const = 0;
  virtual int ground_size() const = 0;
  // Longest sequence this function can evaluate. Tabular functions are
  // limited by their table depth; every other family evaluates any
  // duplicate-free sequence, so the limit is the ground size.
  virtual int max_sequence_length() const { return ground_size(); }
  virtual std::string kind() const = 0;
};

inline double marginal(const SequenceFunction& f, const Sequence& base,
                       const Sequence& added) {
  return f.eval(concat(base, added)) - f.eval(base);
}

// Counts evaluations of the wrapped function. Used to verify evaluation
// budgets of the greedy algorithms.
class InstrumentedFunction final : public SequenceFunction {
 public:
  explicit InstrumentedFunction(const SequenceFunction& inner) : inner_(inner) {}
  double eval(const Sequence& s) const override {
    ++count_;
    return inner_.eval(s);
  }
  int ground_size() const override { return inner_.ground_size(); }
  int max_sequence_length() const override { return inner_.max_sequence_length(); }
  std::string kind() const override { return inner_.kind(); }
  std::uint64_t count() const { return count_; }
  void reset() { count_ = 0; }

 private:
  const SequenceFunction& inner_;
  mutable std::uint64_t count_ = 0;
};

// Explicit table of values for every sequence up to max_len. Evaluating a
// longer sequence or a missing entry is an error so that incomplete tables
// fail loudly instead of defaulting.
class TabularFunction final : public SequenceFunction {
 public:
  TabularFunction(int ground_size, int max_len)
      : ground_size_(ground_size), max_len_(max_len) {
    if (ground_size < 1 || ground_size > 64) {
      throw InvalidArgumentError("tabular: ground size out of range");
    }
    if (max_len < 1 || max_len > ground_size) {
      throw InvalidArgumentError("tabular: maxlen must lie in [1, ground size]");
    }
  }

  bool has(const Sequence& s) const { return table_.count(key(s)) != 0; }

  void set(const Sequence& s, double value) {
    if (s.length() > max_len_) throw InvalidArgumentError("tabular: sequence longer than maxlen");
    for (int v : s.elements()) {
      if (v >= ground_size_) throw InvalidArgumentError("tabular: element index out of range");
    }
    if (value < 0) throw InvalidArgumentError("tabular: negative value");
    if (s.empty() && value != 0.0) {
      throw InvalidArgumentError("tabular: the empty sequence must map to 0");
    }
    if (!table_.emplace(key(s), value).second) {
      throw InvalidArgumentError("tabular: duplicate entry");
    }
  }

  // True iff every sequence of length <= max_len has an entry.
  bool complete() const {
    return table_.size() == count_sequences(ground_size_, max_len_);
  }

  double eval(const Sequence& s) const override {
    if (s.length() > max_len_) {
      throw EvalError("tabular: sequence of length " + std::to_string(s.length()) +
                      " exceeds table depth " + std::to_string(max_len_));
    }
    auto it = table_.find(key(s));
    if (it == table_.end()) {
      throw EvalError("tabular: incomplete table, missing an entry of length " +
                      std::to_string(s.length()));
    }
    return it->second;
  }

  int ground_size() const override { return ground_size_; }
  int max_sequence_length() const override { return max_len_; }
  std::string kind() const override { return "tabular"; }
  int max_len() const { return max_len_; }
  std::size_t entries() const { return table_.size(); }

 private:
  static std::string key(const Sequence& s) {
    std::string k;
    k.reserve(s.length());
    for (int v : s.elements()) k.push_back(static_cast<char>(v + 1));
    return k;
  }

  int ground_size_;
  int max_len_;
  std::unordered_map<std::string, double> table_;
};

// h(s) = sum_i w(s_i) * d(i), with position discounts d(1) >= d(2) >= ... >= 0
// and element weights w >= 0. Appending never moves existing elements, so the
// family is forward monotone for any such parameters.
class DiscountedAdditiveFunction final : public SequenceFunction {
 public:
  DiscountedAdditiveFunction(std::vector<double> weights, std::vector<double> discounts)
      : weights_(std::move(weights)), discounts_(std::move(discounts)) {
    if (weights_.empty() || weights_.size() > 64) {
      throw InvalidArgumentError("discounted_additive: bad ground size");
    }
    if (discounts_.size() != weights_.size()) {
      throw InvalidArgumentError("discounted_additive: need exactly one discount per position");
    }
    for (double w : weights_) {
      if (!(w >= 0)) throw InvalidArgumentError("discounted_additive: negative weight");
    }
    for (std::size_t i = 0; i < discounts_.size(); ++i) {
      if (!(discounts_[i] >= 0)) throw InvalidArgumentError("discounted_additive: negative discount");
      if (i > 0 && discounts_[i] > discounts_[i - 1]) {
        throw InvalidArgumentError("discounted_additive: discounts must be non-increasing");
      }
    }
  }

  double eval(const Sequence& s) const override {
    double total = 0;
    for (int i = 0; i < s.length(); ++i) total += weights_[s[i]] * discounts_[i];
    return total;
  }
  int ground_size() const override { return static_cast<int>(weights_.size()); }
  std::string kind() const override { return "discounted_additive"; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& discounts() const { return discounts_; }

 private:
  std::vector<double> weights_;
  std::vector<double> discounts_;
};

// Ground set {v, u_1..u_n, w_1..w_n} with indices 0, 1..n, n+1..2n.
//   h(s) = [v in s] + (#u's before v) / n   if v in s
//          (#u's in s) / n                  otherwise
//          + eps * (#w's in s)
// With 0 < eps < 1/n, plain greedy takes v first (value 1), after which every
// u is worthless (marginal 0) and the w's (marginal eps) fill the rest, so a
// single removal of v collapses the value; the u's only pay off before v.
class SsgAdversarialFunction final : public SequenceFunction {
 public:
  SsgAdversarialFunction(int n, double eps) : n_(n), eps_(eps) {
    if (n < 1 || n > 31) throw InvalidArgumentError("adversarial: n must lie in [1, 31]");
    if (!(eps > 0) || !(eps < 1.0 / n)) {
      throw InvalidArgumentError("adversarial: epsilon must lie in (0, 1/n)");
    }
  }

  double eval(const Sequence& s) const override {
    int u_before_v = 0, u_total = 0, w_total = 0;
    bool has_v = false;
    for (int i = 0; i < s.length(); ++i) {
      int e = s[i];
      if (e == 0) {
        has_v = true;
      } else if (e <= n_) {
        ++u_total;
        if (!has_v) ++u_before_v;
      } else {
        ++w_total;
      }
    }
    double val = eps_ * w_total;
    if (has_v) {
      val += 1.0 + static_cast<double>(u_before_v) / n_;
    } else {
      val += static_cast<double>(u_total) / n_;
    }
    return val;
  }
  int ground_size() const override { return 2 * n_ + 1; }
  std::string kind() const override { return "ssg_adversarial"; }
  int n() const { return n_; }
  double eps() const { return eps_; }

  static std::vector<std::string> element_names(int n) {
    std::vector<std::string> names;
    names.reserve(2 * n + 1);
    names.push_back("v");
    for (int i = 1; i <= n; ++i) names.push_back("u" + std::to_string(i));
    for (int i = 1; i <= n; ++i) names.push_back("w" + std::to_string(i));
    return names;
  }

 private:
  int n_;
  double eps_;
};

// Coverage with detection decay. Cell c has importance imp_c; sensor v placed
// at position i (1-based) covers its cells with probability
// p_v(i) = min(1, C_v * exp(-(i - 1) / T_v)), and
// h(s) = sum_c imp_c * (1 - prod_{covering s_i} (1 - p_{s_i}(i))).
// Later placement only shrinks p, so appending never hurts existing terms and
// the family is forward monotone by construction.
class DetectionDecayFunction final : public SequenceFunction {
 public:
  struct Cell {
    std::string name;
    double importance;
  };
  struct Sensor {
    double c;         // initial detection level, > 0
    double t;         // decay time constant, > 0
    Mask covers = 0;  // bit per cell index
  };

  DetectionDecayFunction(std::vector<Cell> cells, std::vector<Sensor> sensors)
      : cells_(std::move(cells)), sensors_(std::move(sensors)) {
    if (cells_.empty() || cells_.size() > 64) {
      throw InvalidArgumentError("detection_decay: cell count out of range");
    }
    if (sensors_.empty() || sensors_.size() > 64) {
      throw InvalidArgumentError("detection_decay: sensor count out of range");
    }
    for (const Cell& c : cells_) {
      if (!(c.importance >= 0)) throw InvalidArgumentError("detection_decay: negative importance");
    }
    Mask all_cells = cells_.size() == 64 ? ~Mask{0} : ((Mask{1} << cells_.size()) - 1);
    for (const Sensor& s : sensors_) {
      if (!(s.c > 0) || !(s.t > 0)) {
        throw InvalidArgumentError("detection_decay: sensor parameters must be positive");
      }
      if (s.covers == 0) throw InvalidArgumentError("detection_decay: sensor covers no cell");
      if (s.covers & ~all_cells) throw InvalidArgumentError("detection_decay: sensor covers unknown cell");
    }
  }

  double eval(const Sequence& s) const override {
    double total = 0;
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      double miss = 1.0;
      for (int i = 0; i < s.length(); ++i) {
        const Sensor& sen = sensors_[s[i]];
        if ((sen.covers >> c) & 1) {
          double p = std::min(1.0, sen.c * std::exp(-static_cast<double>(i) / sen.t));
          miss *= 1.0 - p;
        }
      }
      total += cells_[c].importance * (1.0 - miss);
    }
    return total;
  }
  int ground_size() const override { return static_cast<int>(sensors_.size()); }
  std::string kind() const override { return "detection_decay"; }
  const std::vector<Cell>& cells() const { return cells_; }
  const std::vector<Sensor>& sensors() const { return sensors_; }

 private:
  std::vector<Cell> cells_;
  std::vector<Sensor> sensors_;
};

// A ground set together with a function over it.
struct Instance {
  std::string id;
  GroundSet ground;
  std::shared_ptr<const SequenceFunction> function;

  const SequenceFunction& f() const { return *function; }
};

// Builtin 3-element table used throughout the tests: element-wise marginal
// gains never grow under prefix extension (the single-element constant is
// exactly 1), yet the marginal of the block (v2, v3) grows from 1.2 after ()
// to 2.0 after (v1), so block marginals do not inherit the element-wise
// property.
inline Instance make_table3() {
  GroundSet gs = GroundSet::numbered(3);
  auto f = std::make_shared<TabularFunction>(3, 3);
  struct Row {
    std::vector<int> seq;
    double value;
  };
  const Row rows[] = {
      {{}, 0.0},
      {{0}, 0.2}, {{1}, 1.2}, {{2}, 1.0},
      {{0, 1}, 1.2}, {{0, 2}, 1.2},
      {{1, 0}, 1.2}, {{1, 2}, 1.2},
      {{2, 0}, 1.2}, {{2, 1}, 2.0},
      {{0, 1, 2}, 2.2}, {{0, 2, 1}, 2.2},
      {{1, 0, 2}, 1.2}, {{1, 2, 0}, 1.2},
      {{2, 0, 1}, 2.2}, {{2, 1, 0}, 2.2},
  };
  for (const Row& r : rows) f->set(Sequence(r.seq), r.value);
  return Instance{"builtin:table3", std::move(gs), std::move(f)};
}

// Builtin adversarial instance; errors unless 0 < eps < 1/n.
inline Instance make_ssg_adversarial(int n, double eps) {
  auto f = std::make_shared<SsgAdversarialFunction>(n, eps);
  GroundSet gs(SsgAdversarialFunction::element_names(n));
  std::string id = "builtin:adversarial?n=" + std::to_string(n);
  return Instance{std::move(id), std::move(gs), std::move(f)};
}

}  // namespace seqsub

#endif  // SEQSUB_FUNCTIONS_HPP_

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

// Instance file format.
//
// Line-oriented, '#' starts a comment, blank lines are skipped. The first
// directive must be `groundset`, the second `kind`; the rest depends on the
// kind:
//
//   groundset v1 v2 v3
//   kind tabular
//   maxlen 3                      # must precede the seq entries
//   seq : 0                       # h of the empty sequence, always 0
//   seq v2 v1 : 1.2
//
//   kind discounted_additive
//   weight v1 1.5                 # one line per element
//   discount 1 0.9 0.8            # exactly one value per position
//
//   kind ssg_adversarial          # groundset must be v u1..un w1..wn
//   n 3
//   epsilon 0.01
//
//   kind detection_decay
//   cell c1 1.5
//   sensor v1 C=0.8 T=2 covers=c1,c2
//
// Errors carry 1-based line numbers. Tabular tables must be complete up to
// maxlen; duplicate entries, negative values, and a missing groundset are
// rejected. save_instance emits a canonical form that load_instance parses
// back to an equivalent instance (doubles are printed with just enough
// digits to round-trip exactly).

#ifndef SEQSUB_INSTANCE_IO_HPP_
#define SEQSUB_INSTANCE_IO_HPP_

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "seqsub/core.hpp"
#include "seqsub/error.hpp"
#include "seqsub/functions.hpp"

namespace seqsub {

// Shortest decimal form of x that parses back to exactly x.
inline std::string format_double(double x) {
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) return buf;
  }
  return buf;
}

namespace io_detail {

inline double parse_double(const std::string& tok, int line) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end != begin + tok.size() || tok.empty()) {
    throw ParseError(line, "expected a number, got '" + tok + "'");
  }
  return v;
}

inline int parse_int(const std::string& tok, int line) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  long v = std::strtol(begin, &end, 10);
  if (end != begin + tok.size() || tok.empty() || v < -(1L << 30) || v > (1L << 30)) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  return static_cast<int>(v);
}

inline std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

struct RawLine {
  int number;
  std::vector<std::string> tokens;
};

}  // namespace io_detail

inline Instance load_instance(std::istream& in, const std::string& source_name) {
  using io_detail::RawLine;
  std::vector<RawLine> lines;
  {
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
      ++number;
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      auto toks = io_detail::tokenize(raw);
      if (!toks.empty()) lines.push_back({number, std::move(toks)});
    }
  }
  if (lines.empty()) throw ParseError(0, "missing groundset");
  if (lines[0].tokens[0] != "groundset") {
    throw ParseError(lines[0].number, "expected groundset as the first directive");
  }
  if (lines[0].tokens.size() < 2) {
    throw ParseError(lines[0].number, "groundset needs at least one element");
  }
  std::unique_ptr<GroundSet> gs;
  try {
    gs = std::make_unique<GroundSet>(
        std::vector<std::string>(lines[0].tokens.begin() + 1, lines[0].tokens.end()));
  } catch (const Error& e) {
    throw ParseError(lines[0].number, e.what());
  }
  const int V = gs->size();
  if (lines.size() < 2 || lines[1].tokens[0] != "kind") {
    throw ParseError(lines.size() < 2 ? 0 : lines[1].number, "expected kind after groundset");
  }
  if (lines[1].tokens.size() != 2) throw ParseError(lines[1].number, "kind needs one argument");
  const std::string kind = lines[1].tokens[1];

  auto body = [&](std::size_t i) -> const RawLine& { return lines[i]; };
  auto check_directive = [&](const RawLine& l, std::initializer_list<const char*> valid) {
    for (const char* v : valid) {
      if (l.tokens[0] == v) return;
    }
    std::string msg = "directive '" + l.tokens[0] + "' not valid for kind '" + kind + "'";
    if (l.tokens[0] == "groundset" || l.tokens[0] == "kind") {
      msg = "duplicate '" + l.tokens[0] + "' directive";
    }
    bool known = l.tokens[0] == "groundset" || l.tokens[0] == "kind" ||
                 l.tokens[0] == "maxlen" || l.tokens[0] == "seq" ||
                 l.tokens[0] == "weight" || l.tokens[0] == "discount" ||
                 l.tokens[0] == "n" || l.tokens[0] == "epsilon" ||
                 l.tokens[0] == "cell" || l.tokens[0] == "sensor";
    throw ParseError(l.number, known ? msg : "unknown directive '" + l.tokens[0] + "'");
  };

  std::shared_ptr<SequenceFunction> fn;
  if (kind == "tabular") {
    std::unique_ptr<TabularFunction> f;
    for (std::size_t i = 2; i < lines.size(); ++i) {
      const RawLine& l = body(i);
      check_directive(l, {"maxlen", "seq"});
      if (l.tokens[0] == "maxlen") {
        if (f) throw ParseError(l.number, "duplicate maxlen");
        if (l.tokens.size() != 2) throw ParseError(l.number, "maxlen needs one argument");
        int ml = io_detail::parse_int(l.tokens[1], l.number);
        try {
          f = std::make_unique<TabularFunction>(V, ml);
        } catch (const Error& e) {
          throw ParseError(l.number, e.what());
        }
      } else {
        if (!f) throw ParseError(l.number, "maxlen must precede seq entries");
        // seq <elements...> : <value>
        auto colon = std::find(l.tokens.begin() + 1, l.tokens.end(), ":");
        if (colon == l.tokens.end() || colon + 1 != l.tokens.end() - 1) {
          throw ParseError(l.number, "seq syntax: seq <elements...> : <value>");
        }
        std::vector<int> elems;
        for (auto it = l.tokens.begin() + 1; it != colon; ++it) {
          if (!gs->has(*it)) throw ParseError(l.number, "unknown element '" + *it + "'");
          elems.push_back(gs->index(*it));
        }
        double value = io_detail::parse_double(l.tokens.back(), l.number);
        try {
          f->set(Sequence(std::move(elems)), value);
        } catch (const Error& e) {
          throw ParseError(l.number, e.what());
        }
      }
    }
    if (!f) throw ParseError(0, "missing maxlen");
    if (!f->complete()) {
      std::uint64_t want = count_sequences(V, f->max_len());
      throw ParseError(0, "incomplete table: expected " + std::to_string(want) +
                              " entries up to length " + std::to_string(f->max_len()) +
                              ", found " + std::to_string(f->entries()));
    }
    fn = std::move(f);
  } else if (kind == "discounted_additive") {
    std::vector<double> weights(V, -1.0);
    std::vector<double> discounts;
    int discount_line = 0;
    for (std::size_t i = 2; i < lines.size(); ++i) {
      const RawLine& l = body(i);
      check_directive(l, {"weight", "discount"});
      if (l.tokens[0] == "weight") {
        if (l.tokens.size() != 3) throw ParseError(l.number, "weight syntax: weight <element> <value>");
        if (!gs->has(l.tokens[1])) throw ParseError(l.number, "unknown element '" + l.tokens[1] + "'");
        int idx = gs->index(l.tokens[1]);
        if (weights[idx] >= 0) throw ParseError(l.number, "duplicate weight for '" + l.tokens[1] + "'");
        double w = io_detail::parse_double(l.tokens[2], l.number);
        if (w < 0) throw ParseError(l.number, "negative weight");
        weights[idx] = w;
      } else {
        if (!discounts.empty()) throw ParseError(l.number, "duplicate discount directive");
        if (static_cast<int>(l.tokens.size()) != V + 1) {
          throw ParseError(l.number, "discount needs exactly " + std::to_string(V) + " values");
        }
        for (int j = 1; j <= V; ++j) discounts.push_back(io_detail::parse_double(l.tokens[j], l.number));
        discount_line = l.number;
      }
    }
    for (int j = 0; j < V; ++j) {
      if (weights[j] < 0) throw ParseError(0, "missing weight for '" + gs->name(j) + "'");
    }
    if (discounts.empty()) throw ParseError(0, "missing discount directive");
    try {
      fn = std::make_shared<DiscountedAdditiveFunction>(std::move(weights), std::move(discounts));
    } catch (const Error& e) {
      throw ParseError(discount_line, e.what());
    }
  } else if (kind == "ssg_adversarial") {
    int n = -1, n_line = 0;
    double eps = -1;
    bool eps_seen = false;
    for (std::size_t i = 2; i < lines.size(); ++i) {
      const RawLine& l = body(i);
      check_directive(l, {"n", "epsilon"});
      if (l.tokens.size() != 2) throw ParseError(l.number, l.tokens[0] + " needs one argument");
      if (l.tokens[0] == "n") {
        if (n >= 0) throw ParseError(l.number, "duplicate n");
        n = io_detail::parse_int(l.tokens[1], l.number);
        n_line = l.number;
      } else {
        if (eps_seen) throw ParseError(l.number, "duplicate epsilon");
        eps = io_detail::parse_double(l.tokens[1], l.number);
        eps_seen = true;
      }
    }
    if (n < 0) throw ParseError(0, "missing n");
    if (!eps_seen) throw ParseError(0, "missing epsilon");
    try {
      fn = std::make_shared<SsgAdversarialFunction>(n, eps);
    } catch (const Error& e) {
      throw ParseError(n_line, e.what());
    }
    auto names = SsgAdversarialFunction::element_names(n);
    if (gs->names() != names) {
      throw ParseError(0, "ssg_adversarial groundset must be: v u1..u" + std::to_string(n) +
                              " w1..w" + std::to_string(n));
    }
  } else if (kind == "detection_decay") {
    std::vector<DetectionDecayFunction::Cell> cells;
    std::unordered_map<std::string, int> cell_index;
    std::vector<io_detail::RawLine> sensor_lines;
    for (std::size_t i = 2; i < lines.size(); ++i) {
      const RawLine& l = body(i);
      check_directive(l, {"cell", "sensor"});
      if (l.tokens[0] == "cell") {
        if (l.tokens.size() != 3) throw ParseError(l.number, "cell syntax: cell <name> <importance>");
        if (cell_index.count(l.tokens[1])) throw ParseError(l.number, "duplicate cell '" + l.tokens[1] + "'");
        double imp = io_detail::parse_double(l.tokens[2], l.number);
        if (imp < 0) throw ParseError(l.number, "negative importance");
        if (cells.size() >= 64) throw ParseError(l.number, "more than 64 cells");
        cell_index.emplace(l.tokens[1], static_cast<int>(cells.size()));
        cells.push_back({l.tokens[1], imp});
      } else {
        sensor_lines.push_back(l);
      }
    }
    if (cells.empty()) throw ParseError(0, "missing cell directives");
    std::vector<DetectionDecayFunction::Sensor> sensors(V);
    std::vector<bool> seen(V, false);
    for (const RawLine& l : sensor_lines) {
      if (l.tokens.size() != 5) {
        throw ParseError(l.number, "sensor syntax: sensor <element> C=<v> T=<v> covers=<c1,c2,...>");
      }
      if (!gs->has(l.tokens[1])) throw ParseError(l.number, "unknown element '" + l.tokens[1] + "'");
      int idx = gs->index(l.tokens[1]);
      if (seen[idx]) throw ParseError(l.number, "duplicate sensor for '" + l.tokens[1] + "'");
      seen[idx] = true;
      DetectionDecayFunction::Sensor sen;
      bool got_c = false, got_t = false, got_cov = false;
      for (std::size_t t = 2; t < l.tokens.size(); ++t) {
        const std::string& tok = l.tokens[t];
        if (tok.rfind("C=", 0) == 0) {
          sen.c = io_detail::parse_double(tok.substr(2), l.number);
          got_c = true;
        } else if (tok.rfind("T=", 0) == 0) {
          sen.t = io_detail::parse_double(tok.substr(2), l.number);
          got_t = true;
        } else if (tok.rfind("covers=", 0) == 0) {
          std::string list = tok.substr(7);
          std::size_t pos = 0;
          while (pos <= list.size()) {
            std::size_t comma = list.find(',', pos);
            std::string cname = list.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (cname.empty()) throw ParseError(l.number, "empty cell name in covers list");
            auto it = cell_index.find(cname);
            if (it == cell_index.end()) throw ParseError(l.number, "unknown cell '" + cname + "'");
            sen.covers |= Mask{1} << it->second;
            if (comma == std::string::npos) break;
            pos = comma + 1;
          }
          got_cov = true;
        } else {
          throw ParseError(l.number, "unknown sensor attribute '" + tok + "'");
        }
      }
      if (!got_c || !got_t || !got_cov) {
        throw ParseError(l.number, "sensor needs C=, T= and covers= attributes");
      }
      if (!(sen.c > 0) || !(sen.t > 0)) throw ParseError(l.number, "sensor C and T must be positive");
      sensors[idx] = sen;
    }
    for (int j = 0; j < V; ++j) {
      if (!seen[j]) throw ParseError(0, "missing sensor for '" + gs->name(j) + "'");
    }
    try {
      fn = std::make_shared<DetectionDecayFunction>(std::move(cells), std::move(sensors));
    } catch (const Error& e) {
      throw ParseError(0, e.what());
    }
  } else {
    throw ParseError(lines[1].number, "unknown kind '" + kind + "'");
  }
  return Instance{source_name, std::move(*gs), std::move(fn)};
}

inline Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file '" + path + "'");
  return load_instance(in, path);
}

inline void save_instance(std::ostream& out, const Instance& inst) {
  const GroundSet& gs = inst.ground;
  out << "groundset";
  for (const std::string& n : gs.names()) out << ' ' << n;
  out << "\nkind " << inst.f().kind() << '\n';
  if (auto* f = dynamic_cast<const TabularFunction*>(&inst.f())) {
    out << "maxlen " << f->max_len() << '\n';
    auto seqs = enumerate_sequences(gs.size(), f->max_len(),
                                    std::numeric_limits<std::size_t>::max());
    for (const Sequence& s : seqs) {
      out << "seq";
      for (int v : s.elements()) out << ' ' << gs.name(v);
      out << " : " << format_double(f->eval(s)) << '\n';
    }
  } else if (auto* f = dynamic_cast<const DiscountedAdditiveFunction*>(&inst.f())) {
    for (int i = 0; i < gs.size(); ++i) {
      out << "weight " << gs.name(i) << ' ' << format_double(f->weights()[i]) << '\n';
    }
    out << "discount";
    for (double d : f->discounts()) out << ' ' << format_double(d);
    out << '\n';
  } else if (auto* f = dynamic_cast<const SsgAdversarialFunction*>(&inst.f())) {
    out << "n " << f->n() << '\n';
    out << "epsilon " << format_double(f->eps()) << '\n';
  } else if (auto* f = dynamic_cast<const DetectionDecayFunction*>(&inst.f())) {
    for (const auto& c : f->cells()) {
      out << "cell " << c.name << ' ' << format_double(c.importance) << '\n';
    }
    for (int i = 0; i < gs.size(); ++i) {
      const auto& sen = f->sensors()[i];
      out << "sensor " << gs.name(i) << " C=" << format_double(sen.c)
          << " T=" << format_double(sen.t) << " covers=";
      bool first = true;
      for (std::size_t c = 0; c < f->cells().size(); ++c) {
        if ((sen.covers >> c) & 1) {
          if (!first) out << ',';
          out << f->cells()[c].name;
          first = false;
        }
      }
      out << '\n';
    }
  } else {
    throw Error("save_instance: unknown function kind '" + inst.f().kind() + "'");
  }
}

inline std::string save_instance_string(const Instance& inst) {
  std::ostringstream out;
  save_instance(out, inst);
  return out.str();
}

// Resolves a CLI source: "builtin:table3", "builtin:adversarial?n=10&eps=0.001",
// or a file path.
inline Instance load_source(const std::string& source) {
  const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) != 0) return load_instance_file(source);
  std::string rest = source.substr(prefix.size());
  std::string name = rest;
  std::string query;
  auto qmark = rest.find('?');
  if (qmark != std::string::npos) {
    name = rest.substr(0, qmark);
    query = rest.substr(qmark + 1);
  }
  if (name == "table3") {
    if (!query.empty()) throw InvalidArgumentError("builtin:table3 takes no parameters");
    return make_table3();
  }
  if (name == "adversarial") {
    int n = -1;
    double eps = -1;
    bool eps_seen = false;
    std::size_t pos = 0;
    while (pos < query.size()) {
      std::size_t amp = query.find('&', pos);
      std::string kv = query.substr(pos, amp == std::string::npos ? std::string::npos : amp - pos);
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw InvalidArgumentError("bad parameter '" + kv + "'");
      std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
      if (key == "n") {
        n = io_detail::parse_int(val, 0);
      } else if (key == "eps" || key == "epsilon") {
        eps = io_detail::parse_double(val, 0);
        eps_seen = true;
      } else {
        throw InvalidArgumentError("unknown parameter '" + key + "' for builtin:adversarial");
      }
      if (amp == std::string::npos) break;
      pos = amp + 1;
    }
    if (n < 0 || !eps_seen) {
      throw InvalidArgumentError("builtin:adversarial needs n=<int> and eps=<double>");
    }
    Instance inst = make_ssg_adversarial(n, eps);
    inst.id = source;
    return inst;
  }
  throw InvalidArgumentError("unknown builtin '" + name + "'");
}

}  // namespace seqsub

#endif  // SEQSUB_INSTANCE_IO_HPP_

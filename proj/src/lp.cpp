// Copyright 2026 the afp authors
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

#include "afp/lp.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace afp {

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;
  int line = 1;
  int column = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++pos;
  }

  void skip_layout() {
    while (!eof()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '%') {
        while (!eof() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw parse_error(message, line, column);
  }

  std::string identifier() {
    if (eof() || peek() < 'a' || peek() > 'z')
      fail("expected an atom (lowercase identifier)");
    std::string name;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                      peek() == '_')) {
      name += peek();
      advance();
    }
    return name;
  }

  void expect(char c, const std::string& what) {
    if (eof() || peek() != c) fail("expected " + what);
    advance();
  }
};

}  // namespace

LogicProgram parse_program(const std::string& text, int atom_cap) {
  LogicProgram program;
  std::map<std::string, int> index;
  Cursor cur{text};

  auto intern = [&](const std::string& name) {
    if (auto it = index.find(name); it != index.end()) return it->second;
    if (static_cast<int>(program.atoms.size()) >= atom_cap)
      throw cap_error("program uses more than " + std::to_string(atom_cap) +
                      " atoms");
    const int id = static_cast<int>(program.atoms.size());
    program.atoms.push_back(name);
    index.emplace(name, id);
    return id;
  };

  std::set<std::tuple<int, AtomSet, AtomSet>> seen;
  for (;;) {
    cur.skip_layout();
    if (cur.eof()) break;
    const std::string head = cur.identifier();
    if (head == "not") cur.fail("a rule head may not be negated");
    Rule rule;
    rule.head = intern(head);
    cur.skip_layout();
    if (!cur.eof() && cur.peek() == ':') {
      cur.advance();
      cur.expect('-', "':-' between head and body");
      for (;;) {
        cur.skip_layout();
        std::string name = cur.identifier();
        bool negated = false;
        if (name == "not") {
          cur.skip_layout();
          name = cur.identifier();
          if (name == "not") cur.fail("'not not' is not supported");
          negated = true;
        }
        const AtomSet bit = AtomSet{1} << intern(name);
        if (negated)
          rule.negative |= bit;
        else
          rule.positive |= bit;
        cur.skip_layout();
        if (!cur.eof() && cur.peek() == ',') {
          cur.advance();
          continue;
        }
        break;
      }
    }
    cur.skip_layout();
    cur.expect('.', "'.' at the end of the rule");
    if (seen.insert({rule.head, rule.positive, rule.negative}).second)
      program.rules.push_back(rule);
  }
  return program;
}

// ---------------------------------------------------------------------------

ApproxMorphism approximator(const LogicProgram& program) {
  const LatticePtr carrier =
      FiniteLattice::powerset_named(program.atoms, 1LL << 20);
  const ProductShape shape = ProductShape::single(carrier);
  const std::vector<Rule> rules = program.rules;
  ApproxMorphism psi = ApproxMorphism::from_rule(
      shape, shape,
      [rules](BilatticePoint p) {
        const AtomSet lower_in = static_cast<AtomSet>(p.lo);
        const AtomSet upper_in = static_cast<AtomSet>(p.hi);
        AtomSet lower = 0;
        AtomSet upper = 0;
        for (const Rule& r : rules) {
          const AtomSet head = AtomSet{1} << r.head;
          if ((r.positive & ~lower_in) == 0 && (r.negative & upper_in) == 0)
            lower |= head;
          if ((r.positive & ~upper_in) == 0 && (r.negative & lower_in) == 0)
            upper |= head;
        }
        return BilatticePoint{static_cast<Elem>(lower),
                              static_cast<Elem>(upper)};
      },
      Certificate::SpotChecked,
      "by construction; spot-checked(seed=" + std::to_string(kDefaultSeed) +
          ",samples=64)");

  std::mt19937_64 rng(kDefaultSeed);
  if (spot_check_p_monotone(psi, rng, 64) || !spot_check_symmetry(psi, rng, 64))
    throw std::logic_error(
        "immediate-consequence operator failed its spot check");
  return psi;
}

FourValuedInterpretation wf_model(const LogicProgram& program) {
  const BilatticePoint wf = well_founded(approximator(program))({0, 0});
  return {static_cast<AtomSet>(wf.lo), static_cast<AtomSet>(wf.hi)};
}

std::vector<AtomSet> stable_models_aft(const LogicProgram& program) {
  const ApproxMorphism psi = approximator(program);
  const AtomSet limit = program.all_atoms();
  std::vector<AtomSet> models;
  for (AtomSet m = 0;; ++m) {
    const Elem e = static_cast<Elem>(m);
    if (stable_eval(psi, {e, e}) == BilatticePoint{e, e}) models.push_back(m);
    if (m == limit) break;
  }
  sort_models(program, models);
  return models;
}

std::vector<AtomSet> gl_oracle(const LogicProgram& program) {
  const AtomSet limit = program.all_atoms();
  const int n = program.atom_count();
  std::vector<AtomSet> models;
  for (AtomSet m = 0;; ++m) {
    // Least model of the reduct by iterating the positive rules.
    AtomSet closure = 0;
    for (int round = 0; round <= n; ++round) {
      AtomSet next = closure;
      for (const Rule& r : program.rules)
        if ((r.negative & m) == 0 && (r.positive & ~closure) == 0)
          next |= AtomSet{1} << r.head;
      if (next == closure) break;
      closure = next;
    }
    if (closure == m) models.push_back(m);
    if (m == limit) break;
  }
  sort_models(program, models);
  return models;
}

SemanticsResult analyze(const LogicProgram& program) {
  SemanticsResult result;
  result.wf = wf_model(program);
  if (!result.wf.consistent())
    throw std::logic_error(
        "well-founded model came out inconsistent; the approximator "
        "construction is broken");
  result.stable = stable_models_aft(program);
  result.oracle = gl_oracle(program);
  result.agree = result.stable == result.oracle;
  return result;
}

std::vector<std::string> atom_names(const LogicProgram& program, AtomSet set) {
  std::vector<std::string> names;
  for (int i = 0; i < program.atom_count(); ++i)
    if ((set >> i) & 1u) names.push_back(program.atoms[i]);
  std::sort(names.begin(), names.end());
  return names;
}

void sort_models(const LogicProgram& program, std::vector<AtomSet>& models) {
  std::sort(models.begin(), models.end(), [&](AtomSet a, AtomSet b) {
    return atom_names(program, a) < atom_names(program, b);
  });
}

}  // namespace afp

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

#ifndef AFP_LP_HPP_
#define AFP_LP_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "afp/fixpoint.hpp"

namespace afp {

/// Atom sets are bitmasks over the program's atom indices (first occurrence
/// in the source determines the index).
using AtomSet = uint32_t;

/// A propositional normal rule: head :- positive body, negated body.
struct Rule {
  int head = 0;
  AtomSet positive = 0;
  AtomSet negative = 0;

  bool operator==(const Rule&) const = default;
};

struct LogicProgram {
  std::vector<std::string> atoms;
  std::vector<Rule> rules;  // duplicates removed, source order kept

  int atom_count() const { return static_cast<int>(atoms.size()); }
  AtomSet all_atoms() const {
    return atoms.empty() ? 0 : static_cast<AtomSet>((1u << atoms.size()) - 1);
  }
};

/// Grammar: facts "a.", rules "h :- b1, ..., not c1, ... .", comments from
/// '%' to end of line; atoms match [a-z][a-zA-Z0-9_]*. Errors carry
/// line/column. The atom cap keeps the exhaustive stable-model scan and the
/// reduct oracle tractable.
LogicProgram parse_program(const std::string& text, int atom_cap = 20);

/// A pair of atom sets read as a four-valued interpretation: an atom is
/// true when in both, false when in neither, undefined when only in the
/// upper set, inconsistent when only in the lower one.
struct FourValuedInterpretation {
  AtomSet lower = 0;
  AtomSet upper = 0;

  bool consistent() const { return (lower & ~upper) == 0; }
  bool exact() const { return lower == upper; }
  bool operator==(const FourValuedInterpretation&) const = default;
};

/// The four-valued immediate-consequence operator of P as a rule-backed
/// morphism on the powerset lattice of its atoms: the lower output collects
/// heads whose positive body holds in the lower input and whose negated
/// body misses the upper input; the upper output consults the inputs the
/// other way around. Monotone by construction; the certificate records a
/// seeded spot check.
ApproxMorphism approximator(const LogicProgram& program);

/// Well-founded model: the well-founded fixed point of the approximator.
FourValuedInterpretation wf_model(const LogicProgram& program);

/// Exact stable fixed points (M,M) of the approximator's stable function,
/// reported as atom sets in canonical order.
std::vector<AtomSet> stable_models_aft(const LogicProgram& program);

/// Independent baseline: for every candidate set, drop rules whose negated
/// body intersects it, strip negation, and iterate the positive rules to
/// the least model; candidates equal to that least model are stable.
std::vector<AtomSet> gl_oracle(const LogicProgram& program);

struct SemanticsResult {
  FourValuedInterpretation wf;
  std::vector<AtomSet> stable;
  std::vector<AtomSet> oracle;
  bool agree = false;
};

/// Bundles the well-founded model, both stable-model routes and their
/// agreement flag.
SemanticsResult analyze(const LogicProgram& program);

/// Atom names of a set, sorted lexicographically.
std::vector<std::string> atom_names(const LogicProgram& program, AtomSet set);

/// Canonical order for collections of models: by sorted name vectors.
void sort_models(const LogicProgram& program, std::vector<AtomSet>& models);

}  // namespace afp

#endif  // AFP_LP_HPP_

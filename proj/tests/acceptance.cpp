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
//
// End-to-end acceptance suite. Each numbered block checks one release
// criterion at exact equality and prints a single PASS/FAIL line.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "afp/cli.hpp"
#include "afp/identities.hpp"
#include "afp/json_io.hpp"
#include "afp/lp.hpp"
#include "oracles.hpp"

using namespace afp;

namespace {

int g_failures = 0;

void report(int index, const std::string& label, bool pass,
            const std::string& detail = "") {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << index << ". " << label;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

const LatticePtr kTwo = FiniteLattice::booleans();
const ProductShape kOne = ProductShape::single(kTwo);
const ProductShape kPair({kTwo, kTwo});
const BilatticePoint kUnit{0, 0};

ApproxMorphism negation_swap() {
  return ApproxMorphism::from_tables(kOne, kOne, {1, 0, 1, 0}, {1, 1, 0, 0});
}

ApproxMorphism top_and_implication() {
  return ApproxMorphism::from_tables(kOne, kOne, {1, 1, 1, 1}, {1, 1, 0, 1});
}

ApproxMorphism by_formula(Elem (*lower)(Elem, Elem, Elem, Elem),
                          Elem (*upper)(Elem, Elem, Elem, Elem)) {
  const long long n = pair_count(kPair);
  std::vector<Elem> lo(n), hi(n);
  for (long long p = 0; p < n; ++p) {
    const BilatticePoint in = point_at(kPair, p);
    lo[p] = lower(kPair.coord(in.lo, 0), kPair.coord(in.lo, 1),
                  kPair.coord(in.hi, 0), kPair.coord(in.hi, 1));
    hi[p] = upper(kPair.coord(in.lo, 0), kPair.coord(in.lo, 1),
                  kPair.coord(in.hi, 0), kPair.coord(in.hi, 1));
  }
  return ApproxMorphism::from_tables(kPair, kOne, std::move(lo),
                                     std::move(hi));
}

bool suite_row_matches(const PaperSuite& suite, const std::string& id) {
  for (const PaperRow& row : suite.rows)
    if (row.id == id) return row.match;
  return false;
}

std::string run_cli_battery() {
  static const std::vector<std::vector<std::string>> kBattery = {
      {"identities", "reproduce-paper", "--json"},
      {"identities", "verify", "--identity", "permutation", "--mode",
       "sample", "--samples", "300", "--json"},
      {"lp", "analyze", std::string(AFP_TEST_DATA_DIR) + "/p1.lp", "--json"},
      {"wf", std::string(AFP_TEST_DATA_DIR) + "/morphism_good.json",
       "--stable-set", "--json"},
  };
  std::ostringstream all;
  for (const auto& command : kBattery) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(command, out, err);
    all << "exit=" << code << "\n" << out.str() << err.str();
  }
  return all.str();
}

}  // namespace

int main() {
  const PaperSuite suite = reproduce_paper_suite();

  {  // 1. composition failure, exact values, under a second
    const auto start = std::chrono::steady_clock::now();
    const ApproxMorphism f = negation_swap();
    const ApproxMorphism wf_ff = well_founded(compose(f, f));
    const bool values = wf_ff(kUnit) == BilatticePoint{0, 0} &&
                        compose(f, wf_ff)(kUnit) == BilatticePoint{1, 1};
    const double elapsed = seconds_since(start);
    report(1, "composition identity fails: wf(f.f)=(0,0), f.wf(f.f)=(1,1)",
           values && suite_row_matches(suite, "composition-simple") &&
               elapsed < 1.0,
           "computed in " + std::to_string(elapsed) + "s");
  }

  {  // 2. squaring failure
    const ApproxMorphism f = negation_swap();
    const bool values =
        well_founded(f)(kUnit) == BilatticePoint{0, 1} &&
        well_founded(compose(f, f))(kUnit) == BilatticePoint{0, 0};
    report(2, "squaring identity fails: wf(f)=(0,1) differs from (0,0)",
           values && suite_row_matches(suite, "squaring"));
  }

  {  // 3. pairing failure with exact flattened tuples
    const ApproxMorphism f = by_formula(
        [](Elem, Elem, Elem, Elem yp) { return 1 - yp; },
        [](Elem, Elem y, Elem, Elem) { return 1 - y; });
    const ApproxMorphism g = by_formula(
        [](Elem, Elem, Elem xp, Elem) { return 1 - xp; },
        [](Elem x, Elem, Elem, Elem) { return 1 - x; });
    const IdentityReport r = check_pairing(f, g);
    const ApproxMorphism h = compose(
        g, tuple_morphism(well_founded(f), identity_morphism(kOne)));
    const bool ok =
        !r.holds && r.lhs_value == std::vector<Elem>{0, 0, 1, 1} &&
        r.rhs_value == std::vector<Elem>{1, 0, 1, 0} &&
        !first_difference(h, identity_morphism(kOne)).has_value() &&
        well_founded(h)(kUnit) == BilatticePoint{0, 0};
    report(3, "pairing identity fails: (0,0,1,1) vs (1,0,1,0), h identity",
           ok && suite_row_matches(suite, "pairing"));
  }

  {  // 4. double dagger failure plus the derived intermediate table
    const ApproxMorphism g = by_formula(
        [](Elem, Elem, Elem, Elem yp) { return 1 - yp; },
        [](Elem x, Elem, Elem, Elem) { return 1 - x; });
    const IdentityReport r = check_double_dagger(g);
    const ApproxMorphism once = well_founded(g);
    bool intermediate = true;
    for (long long p = 0; p < pair_count(kOne); ++p) {
      const BilatticePoint in = point_at(kOne, p);
      if (!(once(in) == BilatticePoint{1 - in.hi, in.hi}))
        intermediate = false;
    }
    const bool ok = !r.holds && r.lhs_value == std::vector<Elem>{1, 0} &&
                    r.rhs_value == std::vector<Elem>{0, 1} && intermediate;
    report(4,
           "double dagger fails: wf(wf(g))=(1,0) vs (0,1); wf(g)=(not y',y')",
           ok && suite_row_matches(suite, "double-dagger"));
  }

  {  // 5. subcategory closure counterexamples
    const ApproxMorphism sym = negation_swap();
    const ApproxMorphism par = by_formula(
        [](Elem, Elem, Elem xp, Elem) { return 1 - xp; },
        [](Elem x, Elem, Elem, Elem) { return 1 - x; });
    const ApproxMorphism cons = top_and_implication();
    const ApproxMorphism wf_par = well_founded(par);
    bool constant_bottom = true;
    for (long long p = 0; p < pair_count(kOne); ++p)
      if (!(wf_par(point_at(kOne, p)) == BilatticePoint{0, 1}))
        constant_bottom = false;
    const bool ok =
        classify(sym).symmetric &&
        well_founded(sym)(kUnit) == BilatticePoint{0, 1} &&
        !classify(well_founded(sym)).symmetric && constant_bottom &&
        classify(cons).consistent &&
        well_founded(cons)(kUnit) == BilatticePoint{1, 0} &&
        !is_consistent_pair(kOne, well_founded(cons)(kUnit));
    report(5, "closure counterexamples: symmetric, parametric, consistent",
           ok && suite_row_matches(suite, "symmetric-not-closed") &&
               suite_row_matches(suite, "a-class-dagger") &&
               suite_row_matches(suite, "consistent-not-closed"));
  }

  {  // 6. the laws that hold, exhaustively at shape 2
    const auto start = std::chrono::steady_clock::now();
    VerifyOptions opts;
    bool ok = true;
    std::string detail;
    const auto expect = [&](IdentitySchema schema, const VerifyOptions& o,
                            long long instances) {
      const VerifyOutcome out = verify_identity(schema, o);
      if (out.counterexample || out.instances != instances) {
        ok = false;
        detail += to_string(schema) + " unexpected; ";
      }
    };
    expect(IdentitySchema::FixedPoint, opts, 36 + 28224);
    expect(IdentitySchema::Parameter, opts, 1016064);
    VerifyOptions sampled = opts;
    sampled.exhaustive = false;
    sampled.samples = 1000;
    expect(IdentitySchema::Permutation, sampled, 2000);
    expect(IdentitySchema::PairingSpecial, opts, 1016064);
    expect(IdentitySchema::GroupZ2, opts, 28224);
    expect(IdentitySchema::WeakFunctorial, opts, 144);
    const double elapsed = seconds_since(start);
    report(6,
           "valid laws: fixed point, parameter, permutation, special "
           "pairing, cyclic-2 group, weak functorial",
           ok && elapsed < 600.0,
           detail + std::to_string(elapsed) + "s");
  }

  {  // 7. stable-set properties, exhaustive on 2 and sampled on chain-3
    bool ok = true;
    const auto check_morphism = [&](const ApproxMorphism& f,
                                    const ProductShape& shape) {
      const auto stable = stable_set(f, kUnit);
      const auto fixed = oracle::fixed_points(f, kUnit);
      const BilatticePoint wf = well_founded(f)(kUnit);
      bool wf_in_set = false;
      for (const BilatticePoint& s : stable) {
        if (!(f(s) == s)) ok = false;
        for (const BilatticePoint& q : fixed)
          if (leq_t(shape, q, s) && !(q == s)) ok = false;
        if (!leq_p(shape, wf, s)) ok = false;
        if (s == wf) wf_in_set = true;
      }
      if (!wf_in_set) ok = false;
    };
    for (const ApproxMorphism& f : enumerate_morphisms(kOne, kOne))
      check_morphism(f, kOne);

    const ProductShape chain3 = ProductShape::single(FiniteLattice::chain(3));
    std::mt19937_64 rng(kDefaultSeed);
    long long sampled = 0;
    for (int trial = 0; trial < 1000; ++trial, ++sampled)
      check_morphism(sample_morphism(chain3, chain3, rng), chain3);
    for (int trial = 0; trial < 1000; ++trial, ++sampled) {
      const ApproxMorphism f = sample_symmetric_morphism(chain3, chain3, rng);
      check_morphism(f, chain3);
      if (!is_consistent_pair(chain3, well_founded(f)(kUnit))) ok = false;
    }
    report(7,
           "stable sets: truth-minimal fixed points, precision-least wf, "
           "symmetric gives consistent",
           ok && sampled >= 2000,
           "seed=" + std::to_string(kDefaultSeed) + ", " +
               std::to_string(sampled) + " chain-3 samples");
  }

  {  // 8. logic programs: oracle equivalence and wf laws
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    const LogicProgram p1 = parse_program("a :- not b.\nb :- not a.\n");
    const SemanticsResult r1 = analyze(p1);
    if (!(r1.agree && r1.wf.lower == 0 && r1.wf.upper == 3 &&
          r1.stable == std::vector<AtomSet>{1, 2}))
      ok = false;
    const SemanticsResult r2 = analyze(parse_program("a :- not a.\n"));
    if (!(r2.agree && r2.stable.empty())) ok = false;
    const SemanticsResult r3 = analyze(parse_program("a.\nb :- a.\n"));
    if (!(r3.agree && r3.stable == std::vector<AtomSet>{3})) ok = false;
    const SemanticsResult r4 = analyze(parse_program("a :- not b.\n"));
    if (!(r4.agree && r4.wf.exact() && r4.wf.lower == 1)) ok = false;

    std::mt19937_64 rng(kDefaultSeed);
    for (int trial = 0; trial < 200; ++trial) {
      const LogicProgram p = oracle::random_program(rng, 8, 16);
      const SemanticsResult r = analyze(p);
      if (!r.agree || !r.wf.consistent()) ok = false;
      for (AtomSet m : r.stable)
        if ((r.wf.lower & ~m) != 0 || (m & ~r.wf.upper) != 0) ok = false;
    }
    const double elapsed = seconds_since(start);
    report(8, "logic programs: both stable routes agree on 200 seeded programs",
           ok && elapsed < 120.0,
           "seed=" + std::to_string(kDefaultSeed) + ", " +
               std::to_string(elapsed) + "s");
  }

  {  // 9. byte-identical reruns of the reporting battery
    const std::string first = run_cli_battery();
    const std::string second = run_cli_battery();
    report(9, "two battery runs with one seed are byte-identical",
           !first.empty() && first == second);
  }

  const bool suite_ok = suite.all_match && suite.rows.size() == 14;
  if (!suite_ok) {
    std::cout << "[FAIL] reproduction suite has mismatched rows\n";
    ++g_failures;
  }

  if (g_failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criteria failed\n";
  return 1;
}

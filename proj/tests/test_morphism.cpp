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

#include <doctest.h>

#include <random>
#include <set>

#include "afp/json_io.hpp"
#include "afp/morphism.hpp"

using namespace afp;

namespace {

const LatticePtr kTwo = FiniteLattice::booleans();
const ProductShape kOne = ProductShape::single(kTwo);
const ProductShape kPair({kTwo, kTwo});

// f(x,x') = (not x', not x); pair order (0,0),(0,1),(1,0),(1,1).
ApproxMorphism negation_swap() {
  return ApproxMorphism::from_tables(kOne, kOne, {1, 0, 1, 0}, {1, 1, 0, 0});
}

// f(x,x') = (1, not x or x')
ApproxMorphism top_and_implication() {
  return ApproxMorphism::from_tables(kOne, kOne, {1, 1, 1, 1}, {1, 1, 0, 1});
}

std::vector<ApproxMorphism> all_two_to_two() {
  return enumerate_morphisms(kOne, kOne);
}

bool tables_equal(const ApproxMorphism& a, const ApproxMorphism& b) {
  return !first_difference(a, b).has_value();
}

}  // namespace

TEST_SUITE("morphism") {

TEST_CASE("from_tables accepts the published witnesses") {
  CHECK(negation_swap().certificate() == Certificate::Exhaustive);
  CHECK(top_and_implication().certificate() == Certificate::Exhaustive);
}

TEST_CASE("from_tables rejects the coordinate swap") {
  // f(x,x') = (x', x): the lower component grows with the upper input.
  try {
    ApproxMorphism::from_tables(kOne, kOne, {0, 1, 0, 1}, {0, 0, 1, 1});
    FAIL("expected not_p_monotone");
  } catch (const not_p_monotone& e) {
    const BilatticePoint smaller = point_at(kOne, e.smaller_pair);
    const BilatticePoint larger = point_at(kOne, e.larger_pair);
    CHECK(leq_p(kOne, smaller, larger));
    // Recheck the violation on the rejected tables.
    const std::vector<Elem> lower{0, 1, 0, 1};
    const std::vector<Elem> upper{0, 0, 1, 1};
    const bool lower_ok =
        kTwo->leq(lower[e.smaller_pair], lower[e.larger_pair]);
    const bool upper_ok =
        kTwo->leq(upper[e.larger_pair], upper[e.smaller_pair]);
    CHECK_FALSE((lower_ok && upper_ok));
  }
}

TEST_CASE("identity morphism") {
  const ApproxMorphism bid = identity_morphism(kOne);
  CHECK(bid(BilatticePoint{0, 1}) == BilatticePoint{0, 1});
  const SubcategoryProfile profile = classify(bid);
  CHECK(profile.consistent);
  CHECK(profile.symmetric);
  CHECK(profile.a_class);
  CHECK(profile.as_class);
  for (const ApproxMorphism& f : all_two_to_two()) {
    CHECK(tables_equal(compose(bid, f), f));
    CHECK(tables_equal(compose(f, bid), f));
  }
}

TEST_CASE("composition") {
  const ApproxMorphism f = negation_swap();
  CHECK(tables_equal(compose(f, f), identity_morphism(kOne)));
  CHECK_THROWS_AS(compose(f, identity_morphism(kPair)), shape_error);

  // Consistent morphisms are closed under composition.
  const auto all = all_two_to_two();
  for (const ApproxMorphism& g : all) {
    for (const ApproxMorphism& h : all) {
      if (classify(g).consistent && classify(h).consistent)
        CHECK(classify(compose(h, g)).consistent);
      if (classify(g).symmetric && classify(h).symmetric)
        CHECK(classify(compose(h, g)).symmetric);
    }
  }
}

TEST_CASE("composition is associative over every 2 -o 2 triple") {
  const auto all = all_two_to_two();
  for (const ApproxMorphism& f : all)
    for (const ApproxMorphism& g : all)
      for (const ApproxMorphism& h : all)
        CHECK(tables_equal(compose(h, compose(g, f)),
                           compose(compose(h, g), f)));
}

TEST_CASE("tupling and projections") {
  // f(x,y,x',y') = (not y', not y) and g(x,y,x',y') = (not x', not x):
  // their tupling flattens to (not y', not x', not y, not x).
  const long long n = pair_count(kPair);
  std::vector<Elem> f_lo(n), f_hi(n), g_lo(n), g_hi(n);
  for (long long p = 0; p < n; ++p) {
    const BilatticePoint in = point_at(kPair, p);
    const Elem x = kPair.coord(in.lo, 0), y = kPair.coord(in.lo, 1);
    const Elem xp = kPair.coord(in.hi, 0), yp = kPair.coord(in.hi, 1);
    f_lo[p] = 1 - yp;
    f_hi[p] = 1 - y;
    g_lo[p] = 1 - xp;
    g_hi[p] = 1 - x;
  }
  const ApproxMorphism f =
      ApproxMorphism::from_tables(kPair, kOne, f_lo, f_hi);
  const ApproxMorphism g =
      ApproxMorphism::from_tables(kPair, kOne, g_lo, g_hi);
  const ApproxMorphism pair = tuple_morphism(f, g);
  for (long long p = 0; p < n; ++p) {
    const BilatticePoint in = point_at(kPair, p);
    const auto flat_in = flatten(kPair, in);
    const auto flat_out = flatten(kPair, pair(in));
    CHECK(flat_out[0] == 1 - flat_in[3]);  // not y'
    CHECK(flat_out[1] == 1 - flat_in[2]);  // not x'
    CHECK(flat_out[2] == 1 - flat_in[1]);  // not y
    CHECK(flat_out[3] == 1 - flat_in[0]);  // not x
  }

  const ApproxMorphism p0 = projection_morphism(kPair, 0);
  const ApproxMorphism p1 = projection_morphism(kPair, 1);
  CHECK(tables_equal(tuple_morphism(p0, p1), identity_morphism(kPair)));
  CHECK(classify(p1).consistent);
  CHECK(classify(p1).symmetric);
  CHECK(p1(BilatticePoint{kPair.encode(std::vector<Elem>{0, 1}),
                          kPair.encode(std::vector<Elem>{1, 0})}) ==
        BilatticePoint{1, 0});
  CHECK_THROWS_AS(projection_morphism(kPair, 2), shape_error);

  // Projection law, exhaustively over all component pairs.
  const auto all = all_two_to_two();
  for (const ApproxMorphism& a : all) {
    for (const ApproxMorphism& b : all) {
      const ApproxMorphism t = tuple_morphism(a, b);
      CHECK(tables_equal(compose(projection_morphism(t.codomain(), 0), t), a));
      CHECK(tables_equal(compose(projection_morphism(t.codomain(), 1), t), b));
    }
  }
}

TEST_CASE("tupling is the unique morphism satisfying the projection law") {
  MorphismFamily candidates(kOne, kPair);  // all 2 -o 2x2
  const auto all = all_two_to_two();
  std::mt19937_64 rng(kDefaultSeed);
  for (int trial = 0; trial < 10; ++trial) {
    const ApproxMorphism& f = all[rng() % all.size()];
    const ApproxMorphism& g = all[rng() % all.size()];
    const ApproxMorphism expected = tuple_morphism(f, g);
    long long matches = 0;
    for (long long i = 0; i < candidates.count(); ++i) {
      const ApproxMorphism h = candidates.at(i);
      if (tables_equal(compose(projection_morphism(kPair, 0), h), f) &&
          tables_equal(compose(projection_morphism(kPair, 1), h), g)) {
        ++matches;
        CHECK(tables_equal(h, expected));
      }
    }
    CHECK(matches == 1);
  }
}

TEST_CASE("base morphisms") {
  // The diagonal sends (x, x') to (x, x, x', x').
  const ApproxMorphism diag = diagonal_morphism(kTwo, 2);
  CHECK(flatten(kPair, diag(BilatticePoint{0, 1})) ==
        std::vector<Elem>{0, 0, 1, 1});
  CHECK(flatten(kPair, diag(BilatticePoint{1, 0})) ==
        std::vector<Elem>{1, 1, 0, 0});

  const ApproxMorphism swap = base_morphism(kPair, {1, 0});
  CHECK(tables_equal(compose(swap, swap), identity_morphism(kPair)));

  // The second row of the cyclic-2 table is the swap, and the base
  // morphism of a row equals the tupling of the selected projections.
  const ApproxMorphism via_tuple = tuple_morphism(
      projection_morphism(kPair, 1), projection_morphism(kPair, 0));
  CHECK(tables_equal(swap, via_tuple));

  CHECK_THROWS_AS(base_morphism(kPair, {0, 2}), shape_error);

  // Reindexing composes contravariantly: b(sigma) o b(rho) = b(rho o sigma).
  const ProductShape three(
      {kTwo, FiniteLattice::chain(3), FiniteLattice::powerset(2)});
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> rho(2 + rng() % 3);
    for (int& r : rho) r = static_cast<int>(rng() % 3);
    const ApproxMorphism brho = base_morphism(three, rho);
    std::vector<int> sigma(1 + rng() % 3);
    for (int& s : sigma) s = static_cast<int>(rng() % rho.size());
    const ApproxMorphism bsigma = base_morphism(brho.codomain(), sigma);
    std::vector<int> composite(sigma.size());
    for (size_t j = 0; j < sigma.size(); ++j) composite[j] = rho[sigma[j]];
    CHECK(tables_equal(compose(bsigma, brho),
                       base_morphism(three, composite)));
  }
}

TEST_CASE("product of morphisms") {
  const ApproxMorphism f = negation_swap();
  const ApproxMorphism g = top_and_implication();
  const ApproxMorphism fg = product_morphism(f, g);
  // At the flattened input (0,0,1,1): f sees (0,1), g sees (0,1).
  const BilatticePoint in{kPair.encode(std::vector<Elem>{0, 0}),
                          kPair.encode(std::vector<Elem>{1, 1})};
  CHECK(flatten(kPair, fg(in)) == std::vector<Elem>{0, 1, 1, 1});

  CHECK(tables_equal(
      product_morphism(identity_morphism(kOne), identity_morphism(kOne)),
      identity_morphism(kPair)));

  // bid x g evaluates g on the second block only.
  const ApproxMorphism idg = product_morphism(identity_morphism(kOne), g);
  for (long long p = 0; p < pair_count(kPair); ++p) {
    const BilatticePoint i = point_at(kPair, p);
    const BilatticePoint out = idg(i);
    const BilatticePoint gout =
        g(BilatticePoint{kPair.coord(i.lo, 1), kPair.coord(i.hi, 1)});
    CHECK(kPair.coord(out.lo, 0) == kPair.coord(i.lo, 0));
    CHECK(kPair.coord(out.hi, 0) == kPair.coord(i.hi, 0));
    CHECK(kPair.coord(out.lo, 1) == gout.lo);
    CHECK(kPair.coord(out.hi, 1) == gout.hi);
  }
}

TEST_CASE("classification of the published examples") {
  const SubcategoryProfile neg = classify(negation_swap());
  CHECK(neg.symmetric);
  CHECK(neg.consistent);
  CHECK(neg.as_class);
  CHECK(neg.a_class);

  const SubcategoryProfile cons = classify(top_and_implication());
  CHECK(cons.consistent);
  CHECK_FALSE(cons.symmetric);
  CHECK(cons.as_class);

  // symmetric implies equal diagonal components, over every morphism.
  for (const ApproxMorphism& f : all_two_to_two()) {
    const SubcategoryProfile p = classify(f);
    if (p.symmetric) {
      CHECK(p.as_class);
      for (Elem x = 0; x < 2; ++x) {
        const BilatticePoint d = f(BilatticePoint{x, x});
        CHECK(d.lo == d.hi);
      }
    }
    if (p.as_class) CHECK(p.a_class);
  }
}

TEST_CASE("op transform and symmetric closure") {
  // op of (not x') is (not x).
  const std::vector<Elem> not_upper{1, 0, 1, 0};
  const std::vector<Elem> swapped = op_component(kOne, not_upper);
  CHECK(swapped == std::vector<Elem>{1, 1, 0, 0});
  CHECK(op_component(kOne, swapped) == not_upper);

  // Symmetric closure of f1(x,x') = x and not x'.
  const ApproxMorphism closed =
      symmetric_from_lower(kOne, kOne, {0, 0, 1, 0});
  CHECK(classify(closed).symmetric);

  // Symmetric morphisms are closed under tupling.
  const auto all = all_two_to_two();
  for (const ApproxMorphism& a : all)
    for (const ApproxMorphism& b : all)
      if (classify(a).symmetric && classify(b).symmetric) {
        CHECK(classify(tuple_morphism(a, b)).symmetric);
        CHECK(classify(tuple_morphism(a, b)).consistent ==
              (classify(a).consistent && classify(b).consistent));
      }
}

TEST_CASE("enumeration counts and order") {
  const auto all = all_two_to_two();
  CHECK(all.size() == 36);

  // Independent route: filter every pair function on the four bilattice
  // points for precision monotonicity.
  long long brute = 0;
  for (int lower_code = 0; lower_code < 16; ++lower_code) {
    for (int upper_code = 0; upper_code < 16; ++upper_code) {
      std::vector<Elem> lower(4), upper(4);
      for (int p = 0; p < 4; ++p) {
        lower[p] = (lower_code >> p) & 1;
        upper[p] = (upper_code >> p) & 1;
      }
      if (!check_p_monotone(kOne, kOne, lower, upper)) ++brute;
    }
  }
  CHECK(brute == 36);

  // Terminal domain: only the four constant points.
  const ProductShape terminal;
  MorphismFamily constants(terminal, kOne);
  CHECK(constants.count() == 4);

  // First morphism is the constant precision bottom (0,1).
  const ApproxMorphism first = all.front();
  for (long long p = 0; p < 4; ++p)
    CHECK(first(point_at(kOne, p)) == BilatticePoint{0, 1});
  const ApproxMorphism last = all.back();
  for (long long p = 0; p < 4; ++p)
    CHECK(last(point_at(kOne, p)) == BilatticePoint{1, 0});

  // All distinct and all certified.
  std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> seen;
  for (const ApproxMorphism& f : all) {
    std::vector<Elem> lo(4), hi(4);
    for (long long p = 0; p < 4; ++p) {
      lo[p] = f(point_at(kOne, p)).lo;
      hi[p] = f(point_at(kOne, p)).hi;
    }
    CHECK_FALSE(check_p_monotone(kOne, kOne, lo, hi).has_value());
    CHECK(seen.insert({lo, hi}).second);
  }

  // Component count over the two-factor domain: up-sets of the 4-cube.
  const auto components =
      enumerate_monotone_components(kPair, kOne, false, false, 1'000'000);
  CHECK(components.size() == 168);
  // Brute-force the same count from indicator vectors.
  long long upsets = 0;
  for (int mask = 0; mask < (1 << 16); ++mask) {
    bool monotone = true;
    for (int p = 0; p < 16 && monotone; ++p)
      for (int q = 0; q < 16 && monotone; ++q)
        if (leq_p(kPair, point_at(kPair, p), point_at(kPair, q)) &&
            ((mask >> p) & 1) > ((mask >> q) & 1))
          monotone = false;
    if (monotone) ++upsets;
  }
  CHECK(upsets == 168);

  CHECK_THROWS_AS(MorphismFamily(kPair, kPair, 100), cap_error);
}

TEST_CASE("sampling is seed-deterministic and certified") {
  std::mt19937_64 rng_a(kDefaultSeed);
  std::mt19937_64 rng_b(kDefaultSeed);
  for (int trial = 0; trial < 50; ++trial) {
    const ApproxMorphism a = sample_morphism(kPair, kOne, rng_a);
    const ApproxMorphism b = sample_morphism(kPair, kOne, rng_b);
    CHECK(tables_equal(a, b));
    CHECK(a.certificate() == Certificate::Exhaustive);
  }
  std::mt19937_64 rng_c(kDefaultSeed);
  for (int trial = 0; trial < 20; ++trial)
    CHECK(classify(sample_symmetric_morphism(kOne, kOne, rng_c)).symmetric);
}

TEST_CASE("spot checks") {
  std::mt19937_64 rng(kDefaultSeed);
  CHECK(spot_check_symmetry(negation_swap(), rng, 64));
  CHECK_FALSE(spot_check_symmetry(top_and_implication(), rng, 64));
  CHECK_FALSE(spot_check_p_monotone(negation_swap(), rng, 64).has_value());
}

TEST_CASE("rule-backed morphisms tabulate to their table twins") {
  const ApproxMorphism table = negation_swap();
  const ApproxMorphism rule = ApproxMorphism::from_rule(
      kOne, kOne,
      [](BilatticePoint p) {
        return BilatticePoint{1 - p.hi, 1 - p.lo};
      },
      Certificate::ByConstruction);
  CHECK_FALSE(rule.table_backed());
  CHECK(rule.tabulate().table_backed());
  CHECK(tables_equal(rule, table));
}

TEST_CASE("morphism json round trip") {
  std::mt19937_64 rng(kDefaultSeed);
  const ProductShape chain3 = ProductShape::single(FiniteLattice::chain(3));
  const std::vector<std::pair<ProductShape, ProductShape>> shapes = {
      {kOne, kOne}, {kPair, kOne}, {chain3, chain3}};
  for (const auto& [domain, codomain] : shapes) {
    for (int trial = 0; trial < 10; ++trial) {
      const ApproxMorphism f = sample_morphism(domain, codomain, rng);
      const ApproxMorphism back = morphism_from_json(morphism_to_json(f));
      CHECK(back.domain().equals(domain));
      CHECK(back.codomain().equals(codomain));
      CHECK(tables_equal(back, f));
    }
  }

  // Malformed tables are rejected with a reason.
  Json j = morphism_to_json(negation_swap());
  Json missing = j;
  missing["table"].erase(0);
  CHECK_THROWS_AS(morphism_from_json(missing), error);
  Json duplicated = j;
  duplicated["table"].push_back(duplicated["table"][0]);
  CHECK_THROWS_AS(morphism_from_json(duplicated), error);
  Json swapped = j;
  for (auto& row : swapped["table"]) std::swap(row[1][0], row[1][1]);
  CHECK_THROWS_AS(morphism_from_json(swapped), not_p_monotone);
}

}  // TEST_SUITE

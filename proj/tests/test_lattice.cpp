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

#include "afp/lattice.hpp"
#include "oracles.hpp"

using namespace afp;

namespace {

LatticePtr pentagon() {
  // 0 < x < z < 1 and 0 < y < 1, with y incomparable to x and z.
  return FiniteLattice::seal(FiniteLattice(
      {"0", "x", "y", "z", "1"},
      {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {0, 1}, {0, 2}, {0, 3},
       {0, 4}, {1, 3}, {1, 4}, {2, 4}, {3, 4}}));
}

MonotoneMap self_map(const LatticePtr& lattice, std::vector<Elem> table) {
  return MonotoneMap{ProductShape::single(lattice), lattice, std::move(table),
                     {Polarity::Increasing}};
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("chain construction") {
  const LatticePtr two = FiniteLattice::chain(2);
  CHECK(two->size() == 2);
  CHECK(two->bottom() == 0);
  CHECK(two->top() == 1);
  CHECK(two->leq(0, 1));
  CHECK_FALSE(two->leq(1, 0));
  CHECK(verify_lattice(*two) == std::nullopt);

  const LatticePtr one = FiniteLattice::chain(1);
  CHECK(one->size() == 1);
  CHECK(one->bottom() == one->top());
  CHECK(verify_lattice(*one) == std::nullopt);

  CHECK_THROWS_AS(FiniteLattice::chain(0), error);
}

TEST_CASE("powerset construction") {
  const LatticePtr four = FiniteLattice::powerset(2);
  CHECK(four->size() == 4);
  CHECK(four->join(1, 2) == 3);  // union
  CHECK(four->meet(1, 2) == 0);
  CHECK(four->leq(1, 3));
  CHECK_FALSE(four->leq(1, 2));
  CHECK(four->name(0) == "{}");
  CHECK(four->name(3) == "{0,1}");
  CHECK(verify_lattice(*four) == std::nullopt);

  CHECK_THROWS_AS(FiniteLattice::powerset(13), cap_error);
  CHECK(FiniteLattice::powerset(0)->size() == 1);
}

TEST_CASE("product and dual") {
  const LatticePtr chain3 = FiniteLattice::chain(3);
  const LatticePtr prod =
      FiniteLattice::product({FiniteLattice::booleans(), chain3});
  CHECK(prod->size() == 6);
  CHECK(prod->name(0) == "(0,0)");
  CHECK(prod->name(5) == "(1,2)");
  CHECK(prod->bottom() == 0);
  CHECK(prod->top() == 5);
  CHECK(prod->height() == 3);
  CHECK(verify_lattice(*prod) == std::nullopt);
  // componentwise: (0,2) vs (1,1) incomparable
  CHECK_FALSE(prod->leq(2, 4));
  CHECK_FALSE(prod->leq(4, 2));

  const LatticePtr dual = FiniteLattice::dual(chain3);
  CHECK(dual->bottom() == 2);
  CHECK(dual->top() == 0);
  CHECK(dual->leq(2, 0));
  CHECK(dual->join(0, 1) == 0);  // join in the dual is the original meet
  CHECK(verify_lattice(*dual) == std::nullopt);
}

TEST_CASE("verify_lattice rejects broken candidates") {
  SUBCASE("missing reflexivity") {
    FiniteLattice cand({"0", "1"}, {{0, 0}, {0, 1}});
    CHECK(verify_lattice(cand) == "reflexivity(1)");
  }
  SUBCASE("antisymmetry violation") {
    FiniteLattice cand({"0", "1"}, {{0, 0}, {1, 1}, {0, 1}, {1, 0}});
    CHECK(verify_lattice(cand) == "antisymmetry(0,1)");
  }
  SUBCASE("transitivity violation") {
    FiniteLattice cand({"0", "1", "2"},
                       {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}});
    CHECK(verify_lattice(cand) == "transitivity(0,1,2)");
  }
  SUBCASE("bowtie has no join for the two minimal elements") {
    FiniteLattice cand({"a", "b", "c", "d"},
                       {{0, 0}, {1, 1}, {2, 2}, {3, 3},
                        {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(verify_lattice(cand) == "no join(a,b)");
  }
  SUBCASE("chains of every small size pass") {
    for (int n = 1; n <= 50; ++n)
      CHECK(verify_lattice(*FiniteLattice::chain(n)) == std::nullopt);
  }
  SUBCASE("structured constructions pass") {
    CHECK(verify_lattice(*FiniteLattice::powerset(6)) == std::nullopt);
    CHECK(verify_lattice(*FiniteLattice::dual(FiniteLattice::powerset(4))) ==
          std::nullopt);
    CHECK(verify_lattice(*FiniteLattice::product(
              {FiniteLattice::chain(4), FiniteLattice::powerset(3)})) ==
          std::nullopt);
    CHECK(verify_lattice(*pentagon()) == std::nullopt);
  }
}

TEST_CASE("seal computes extremes, tables and height") {
  const LatticePtr diamond = FiniteLattice::seal(FiniteLattice(
      {"bot", "a", "b", "top"},
      {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}));
  CHECK(diamond->bottom() == 0);
  CHECK(diamond->top() == 3);
  CHECK(diamond->height() == 2);
  CHECK(diamond->join(1, 2) == 3);
  CHECK(diamond->meet(1, 2) == 0);
  CHECK_THROWS_AS(
      FiniteLattice::seal(FiniteLattice({"0", "1"}, {{0, 0}, {1, 1}})), error);
}

TEST_CASE("structural equality") {
  const LatticePtr a = FiniteLattice::chain(2);
  const LatticePtr b = FiniteLattice::booleans();
  CHECK(a->equals(*b));
  CHECK_FALSE(a->equals(*FiniteLattice::chain(3)));
  const LatticePtr named = FiniteLattice::seal(
      FiniteLattice({"0", "1"}, {{0, 0}, {1, 1}, {0, 1}}));
  CHECK(a->equals(*named));
}

TEST_CASE("parse_lattice_spec") {
  CHECK(parse_lattice_spec("2")->size() == 2);
  CHECK(parse_lattice_spec("chain:4")->size() == 4);
  CHECK(parse_lattice_spec("pow:3")->size() == 8);
  CHECK(parse_lattice_spec("dual:chain:3")->bottom() == 2);
  CHECK(parse_lattice_spec("prod:2*chain:3")->size() == 6);
  CHECK_THROWS_AS(parse_lattice_spec("triangle"), error);
  CHECK_THROWS_AS(parse_lattice_spec("chain:x"), error);
}

TEST_CASE("product shape encoding is lexicographic by factor") {
  const ProductShape shape({FiniteLattice::chain(2), FiniteLattice::chain(3)});
  CHECK(shape.size() == 6);
  const Elem code = shape.encode(std::vector<Elem>{1, 2});
  CHECK(code == 5);
  CHECK(shape.coord(code, 0) == 1);
  CHECK(shape.coord(code, 1) == 2);
  CHECK(shape.bottom() == 0);
  CHECK(shape.top() == 5);
  CHECK(shape.height() == 3);

  const auto [prefix, suffix] = shape.split(5, 1);
  CHECK(prefix == 1);
  CHECK(suffix == 2);
  CHECK(shape.fuse(prefix, suffix, 1) == 5);

  const ProductShape terminal;
  CHECK(terminal.size() == 1);
  CHECK(terminal.factor_count() == 0);
  CHECK(shape.equals(terminal.concat(shape)));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Elem> coords(2);
    coords[0] = static_cast<Elem>(rng() % 2);
    coords[1] = static_cast<Elem>(rng() % 3);
    std::vector<Elem> back(2);
    shape.decode(shape.encode(coords), back);
    CHECK(back == coords);
  }
}

TEST_CASE("is_monotone respects polarity") {
  const LatticePtr two = FiniteLattice::booleans();
  SUBCASE("identity is increasing") {
    CHECK(is_monotone(self_map(two, {0, 1})) == std::nullopt);
  }
  SUBCASE("negation fails the increasing check with witness (0,1)") {
    const auto witness = is_monotone(self_map(two, {1, 0}));
    REQUIRE(witness.has_value());
    CHECK(witness->lower_input == 0);
    CHECK(witness->upper_input == 1);
  }
  SUBCASE("negation passes as a decreasing map") {
    MonotoneMap negation{ProductShape::single(two), two, {1, 0},
                         {Polarity::Decreasing}};
    CHECK(is_monotone(negation) == std::nullopt);
  }
  SUBCASE("mixed polarity over two factors") {
    // f(x, y) = x and not y, increasing in x, decreasing in y.
    const ProductShape domain({two, two});
    MonotoneMap map{domain, two, {0, 0, 1, 0},
                    {Polarity::Increasing, Polarity::Decreasing}};
    CHECK(is_monotone(map) == std::nullopt);
  }
}

TEST_CASE("lfp on the stated examples") {
  const LatticePtr two = FiniteLattice::booleans();
  CHECK(lfp(self_map(two, {0, 1})) == 0);
  CHECK(lfp(self_map(two, {1, 1})) == 1);
  const LatticePtr chain3 = FiniteLattice::chain(3);
  // f(x) = x join m on the chain 0 < m < 1: two Kleene steps.
  CHECK(lfp(self_map(chain3, {1, 1, 2})) == 1);
  CHECK_THROWS_AS(lfp(self_map(two, {1, 0})), std::logic_error);
}

TEST_CASE("lfp laws over every monotone self-map of small lattices") {
  const std::vector<LatticePtr> lattices = {
      FiniteLattice::chain(2), FiniteLattice::chain(3),
      FiniteLattice::chain(4), FiniteLattice::powerset(2), pentagon()};
  for (const LatticePtr& lattice : lattices) {
    const auto maps = oracle::monotone_self_maps(*lattice);
    const LatticePtr dual = FiniteLattice::dual(lattice);
    for (const auto& table : maps) {
      const Elem least = lfp(self_map(lattice, table));
      CHECK(table[least] == least);
      for (Elem z = 0; z < lattice->size(); ++z)
        if (table[z] == z) CHECK(lattice->leq(least, z));
      // Same table over the dual lattice: its lfp is the original gfp.
      const Elem dual_least = lfp(*dual, [&](Elem x) { return table[x]; });
      CHECK(dual_least ==
            oracle::scan_gfp(*lattice, [&](Elem x) { return table[x]; }));
    }
  }
}

TEST_CASE("powerset-3 monotone maps, sampled against the oracle") {
  const LatticePtr cube = FiniteLattice::powerset(3);
  const auto maps = oracle::monotone_self_maps(*cube);
  CHECK(maps.size() > 1000);  // sanity: the space is nontrivial
  std::mt19937_64 rng(kDefaultSeed);
  for (int trial = 0; trial < 500; ++trial) {
    const auto& table = maps[rng() % maps.size()];
    const Elem least = lfp(self_map(cube, table));
    CHECK(least == oracle::scan_lfp(*cube, [&](Elem x) { return table[x]; }));
  }
}

TEST_CASE("verification accepts constructions near the element cap") {
  CHECK(verify_lattice(*FiniteLattice::chain(1024)) == std::nullopt);
  CHECK(verify_lattice(*FiniteLattice::powerset(12)) == std::nullopt);
  CHECK(verify_lattice(*FiniteLattice::product(
            {FiniteLattice::powerset(6), FiniteLattice::chain(64)})) ==
        std::nullopt);
  CHECK(verify_lattice(*FiniteLattice::dual(FiniteLattice::chain(2048))) ==
        std::nullopt);
}

TEST_CASE("iterate_to_fixpoint guards against divergence") {
  CHECK_THROWS_AS(
      iterate_to_fixpoint<int>(0, [](int x) { return 1 - x; }, 10),
      std::logic_error);
  CHECK(iterate_to_fixpoint<int>(0, [](int x) { return x < 5 ? x + 1 : x; },
                                 10) == 5);
}

}  // TEST_SUITE

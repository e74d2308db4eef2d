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

#ifndef AFP_LATTICE_HPP_
#define AFP_LATTICE_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "afp/errors.hpp"

namespace afp {

/// Index of an element within a lattice (or an encoded tuple within a
/// product shape). Elements are always addressed by canonical index.
using Elem = int;

/// Default guard against accidental blowup of explicit constructions.
inline constexpr int kDefaultElementCap = 4096;

class FiniteLattice;
using LatticePtr = std::shared_ptr<const FiniteLattice>;

/// A finite complete lattice. Finiteness makes completeness equivalent to
/// the existence of pairwise joins/meets plus a least and greatest element,
/// which is what `verify_lattice` checks.
///
/// Structured constructions (chains, powersets, products, duals) keep their
/// shape and answer `leq`/`join`/`meet` analytically, so powerset lattices
/// stay cheap far beyond the point where explicit tables would fit in
/// memory. Explicit lattices (hand-built or loaded from JSON) carry the
/// order relation as a bit matrix and joins/meets as tables.
///
/// Values are immutable after construction and safe to share.
class FiniteLattice {
 public:
  enum class Kind { Chain, Powerset, Product, Dual, Explicit };

  /// Raw explicit candidate; no validation happens here. Run
  /// `verify_lattice` before using join/meet. `leq_pairs` lists all related
  /// index pairs (i, j) with i <= j, including reflexive ones.
  FiniteLattice(std::vector<std::string> element_names,
                const std::vector<std::pair<int, int>>& leq_pairs);

  /// The chain 0 < 1 < ... < n-1. Requires n >= 1.
  static LatticePtr chain(int n);

  /// The two-element lattice {0 <= 1}.
  static LatticePtr booleans();

  /// Powerset of {0,..,n-1} ordered by inclusion; elements are bitmasks in
  /// canonical index order. Requires n >= 0 and 2^n <= cap.
  static LatticePtr powerset(int n, long long cap = kDefaultElementCap);

  /// Powerset over named items (used for interpretations over program
  /// atoms). Same encoding as `powerset`.
  static LatticePtr powerset_named(std::vector<std::string> items,
                                   long long cap = kDefaultElementCap);

  /// Direct product with the pointwise order. Tuples are encoded
  /// lexicographically by factor index (first factor most significant).
  static LatticePtr product(std::vector<LatticePtr> factors,
                            long long cap = kDefaultElementCap);

  /// Order-reversed lattice; bottom and top swap roles.
  static LatticePtr dual(LatticePtr base);

  /// Freezes a raw explicit candidate: verifies it and computes join/meet
  /// tables and extremes. Throws afp::error if verification fails.
  static LatticePtr seal(FiniteLattice candidate);

  int size() const { return size_; }
  Kind kind() const { return kind_; }

  bool leq(Elem a, Elem b) const;
  Elem join(Elem a, Elem b) const;
  Elem meet(Elem a, Elem b) const;
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  /// Length of a longest chain bottom..top; bounds every ascending
  /// iteration on the lattice.
  int height() const { return height_; }

  std::string name(Elem e) const;

  /// Structural equality: same element names and the same order relation.
  bool equals(const FiniteLattice& other) const;

  /// All related pairs (i, j) with leq(i, j), in row-major order.
  std::vector<std::pair<int, int>> leq_pairs() const;

 private:
  friend std::optional<std::string> verify_lattice(const FiniteLattice&);

  FiniteLattice() = default;

  Kind kind_ = Kind::Explicit;
  int size_ = 0;
  Elem bottom_ = -1;
  Elem top_ = -1;
  int height_ = 0;

  // Chain/Powerset
  int chain_length_ = 0;
  std::vector<std::string> item_names_;  // Powerset ground items

  // Product/Dual
  std::vector<LatticePtr> factors_;
  std::vector<long long> strides_;
  LatticePtr base_;

  // Explicit
  std::vector<std::string> names_;
  std::vector<uint64_t> up_rows_;  // row a: bit b set iff a <= b
  int row_words_ = 0;
  std::vector<Elem> join_table_;
  std::vector<Elem> meet_table_;
  bool sealed_ = false;

  bool up_bit(Elem a, Elem b) const {
    return (up_rows_[static_cast<size_t>(a) * row_words_ + (b >> 6)] >>
            (b & 63)) &
           1u;
  }
};

/// Lattice construction requests, mirroring the CLI spellings
/// ("2", "chain:3", "pow:2", "dual:<spec>", "prod:<spec>*<spec>").
LatticePtr parse_lattice_spec(const std::string& spec,
                              long long cap = kDefaultElementCap);

/// Exhaustively checks the complete-lattice laws. Returns std::nullopt when
/// every law holds, otherwise a description of the first violation found,
/// e.g. "reflexivity(b)" or "no join(a,b)". Check order: reflexivity,
/// antisymmetry, transitivity, pairwise joins, pairwise meets, bottom, top.
std::optional<std::string> verify_lattice(const FiniteLattice& candidate);

// ---------------------------------------------------------------------------

/// Finite product of lattices, used as the domain or codomain of maps.
/// An empty product is the one-element terminal object. Tuples are encoded
/// as a single index, lexicographically by factor (first factor most
/// significant), so canonical order of tuples equals numeric order of codes.
class ProductShape {
 public:
  ProductShape() = default;  // terminal
  explicit ProductShape(std::vector<LatticePtr> factors);

  static ProductShape terminal() { return ProductShape(); }
  static ProductShape single(LatticePtr lattice);

  int factor_count() const { return static_cast<int>(factors_.size()); }
  const LatticePtr& factor(int i) const { return factors_[i]; }
  const std::vector<LatticePtr>& factors() const { return factors_; }

  /// Number of tuples.
  long long size() const { return size_; }

  Elem encode(std::span<const Elem> coords) const;
  void decode(Elem code, std::span<Elem> coords_out) const;
  Elem coord(Elem code, int i) const;

  /// Componentwise order on encoded tuples.
  bool leq(Elem a, Elem b) const;

  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }
  int height() const { return height_; }

  /// Concatenation A ++ B, the product shape of both factor lists.
  ProductShape concat(const ProductShape& other) const;
  /// First k factors / all but the first k factors.
  ProductShape prefix(int k) const;
  ProductShape suffix(int k) const;

  /// Splits an encoded tuple at factor k into (prefix code, suffix code).
  std::pair<Elem, Elem> split(Elem code, int k) const;
  /// Inverse of split.
  Elem fuse(Elem prefix_code, Elem suffix_code, int k) const;

  /// Structural equality, factor by factor.
  bool equals(const ProductShape& other) const;

  std::string render(Elem code) const;

 private:
  std::vector<LatticePtr> factors_;
  std::vector<long long> strides_;
  long long size_ = 1;
  Elem bottom_ = 0;
  Elem top_ = 0;
  int height_ = 0;
};

// ---------------------------------------------------------------------------

/// Monotonicity direction of one argument position.
enum class Polarity { Increasing, Decreasing };

/// A table-backed function from a product of lattices to a lattice, with a
/// declared polarity per argument. This is the plain (single-valued) map
/// type; approximation pairs live in morphism.hpp.
struct MonotoneMap {
  ProductShape domain;
  LatticePtr codomain;
  std::vector<Elem> table;  // indexed by encoded domain tuple
  std::vector<Polarity> polarity;

  Elem operator()(Elem domain_code) const { return table[domain_code]; }
};

struct MonotonicityWitness {
  Elem lower_input;  // related per the polarity flags ...
  Elem upper_input;  // ... but with outputs out of order
};

/// Exhaustive monotonicity check respecting the polarity flags. Returns the
/// first violating input pair in canonical order, or std::nullopt.
std::optional<MonotonicityWitness> is_monotone(const MonotoneMap& map);

/// Kleene iteration to a fixed point. Applies `step` starting from `start`
/// until stationary; throws std::logic_error after `max_steps` applications
/// (a broken monotonicity certificate, not a user error).
template <typename E, typename Step>
E iterate_to_fixpoint(E start, Step&& step, long long max_steps) {
  E current = std::move(start);
  for (long long i = 0; i <= max_steps; ++i) {
    E next = step(current);
    if (next == current) return current;
    current = std::move(next);
  }
  throw std::logic_error(
      "fixed-point iteration did not converge within its bound; "
      "a monotonicity certificate is broken");
}

/// Least fixed point of a monotone endofunction, by Kleene iteration from
/// bottom. Requires a single-factor domain over the codomain lattice and
/// Increasing polarity.
Elem lfp(const MonotoneMap& map);

/// Least fixed point of a step function on a lattice given analytically.
Elem lfp(const FiniteLattice& lattice, const std::function<Elem(Elem)>& step);

}  // namespace afp

#endif  // AFP_LATTICE_HPP_

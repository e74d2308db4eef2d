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

#ifndef AFP_MORPHISM_HPP_
#define AFP_MORPHISM_HPP_

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "afp/lattice.hpp"

namespace afp {

/// A point of the product bilattice over a shape A: an ordered pair of
/// A-tuples, each stored as its encoded index. `lo` is the first (lower)
/// coordinate and `hi` the second (upper) coordinate. In the precision
/// order, (lo,hi) grows when lo grows and hi shrinks; the precision bottom
/// is (bottom, top).
struct BilatticePoint {
  Elem lo = 0;
  Elem hi = 0;

  bool operator==(const BilatticePoint&) const = default;
};

/// Precision order on bilattice points over `shape`.
inline bool leq_p(const ProductShape& shape, BilatticePoint a,
                  BilatticePoint b) {
  return shape.leq(a.lo, b.lo) && shape.leq(b.hi, a.hi);
}

/// Truth order (componentwise).
inline bool leq_t(const ProductShape& shape, BilatticePoint a,
                  BilatticePoint b) {
  return shape.leq(a.lo, b.lo) && shape.leq(a.hi, b.hi);
}

/// A pair (x,x') is consistent when x <= x'.
inline bool is_consistent_pair(const ProductShape& shape, BilatticePoint p) {
  return shape.leq(p.lo, p.hi);
}

inline BilatticePoint precision_bottom(const ProductShape& shape) {
  return {shape.bottom(), shape.top()};
}

/// Number of bilattice points over the shape.
inline long long pair_count(const ProductShape& shape) {
  return shape.size() * shape.size();
}

/// Canonical encoding of a point as a single index: lower block major.
/// Canonical order over points is ascending pair index, which is the
/// lexicographic order of the flattened (x1..xn, x1'..xn') tuple.
inline long long pair_index(const ProductShape& shape, BilatticePoint p) {
  return static_cast<long long>(p.lo) * shape.size() + p.hi;
}

inline BilatticePoint point_at(const ProductShape& shape, long long index) {
  return {static_cast<Elem>(index / shape.size()),
          static_cast<Elem>(index % shape.size())};
}

/// Flattened coordinates (all lower coordinates, then all upper ones).
std::vector<Elem> flatten(const ProductShape& shape, BilatticePoint p);
BilatticePoint unflatten(const ProductShape& shape,
                         std::span<const Elem> coords);
std::string render_point(const ProductShape& shape, BilatticePoint p);

/// Default seed for every sampled or spot-checked mode; echoed in reports.
inline constexpr uint64_t kDefaultSeed = 1729;

/// How a morphism's monotonicity was established.
enum class Certificate { Exhaustive, ByConstruction, SpotChecked };

std::string to_string(Certificate cert);

/// Morphisms are materialized as tables when their domain has at most this
/// many bilattice points; larger ones stay rule-backed.
inline constexpr long long kMaterializePairCap = 1LL << 16;

/// Exhaustive classification refuses above this many bilattice points.
inline constexpr long long kClassifyPairCap = 1LL << 22;

/// An approximation pair: a precision-monotone map from the bilattice over
/// domain shape A to the bilattice over codomain shape B. Equivalently a
/// pair of component maps, the first monotone in the lower block and
/// anti-monotone in the upper block, the second the other way around.
///
/// Backing is either a pair of tables indexed by pair index (small shapes)
/// or an evaluation rule (shapes too large to tabulate, e.g. interpretations
/// of a logic program). Immutable; cheap to copy when table-backed at desk
/// scale, and safe to share across threads.
class ApproxMorphism {
 public:
  using EvalFn = std::function<BilatticePoint(BilatticePoint)>;

  /// Builds a table-backed morphism and verifies precision monotonicity
  /// exhaustively. `lower` and `upper` are indexed by pair index over the
  /// domain; values are encoded codomain tuples. Throws not_p_monotone with
  /// the first violating input pair in canonical order.
  static ApproxMorphism from_tables(ProductShape domain, ProductShape codomain,
                                    std::vector<Elem> lower,
                                    std::vector<Elem> upper);

  /// Wraps an evaluation rule whose monotonicity is known by construction
  /// (or spot-checked by the caller).
  static ApproxMorphism from_rule(ProductShape domain, ProductShape codomain,
                                  EvalFn rule, Certificate cert,
                                  std::string certificate_note = "");

  /// Internal: accepts tables without re-verification. Used by combinators
  /// whose outputs are monotone whenever their inputs are.
  static ApproxMorphism from_tables_unchecked(ProductShape domain,
                                              ProductShape codomain,
                                              std::vector<Elem> lower,
                                              std::vector<Elem> upper,
                                              Certificate cert);

  BilatticePoint operator()(BilatticePoint p) const {
    if (table_backed_)
      return {lower_[pair_index(domain_, p)], upper_[pair_index(domain_, p)]};
    return rule_(p);
  }

  /// First component f1(x,x').
  Elem lower_at(BilatticePoint p) const { return (*this)(p).lo; }
  /// Second component f2(x,x').
  Elem upper_at(BilatticePoint p) const { return (*this)(p).hi; }

  const ProductShape& domain() const { return domain_; }
  const ProductShape& codomain() const { return codomain_; }
  bool table_backed() const { return table_backed_; }
  Certificate certificate() const { return certificate_; }
  const std::string& certificate_note() const { return certificate_note_; }

  /// Materializes a rule-backed morphism into tables (cap-guarded).
  ApproxMorphism tabulate() const;

 private:
  ApproxMorphism() = default;

  ProductShape domain_;
  ProductShape codomain_;
  bool table_backed_ = false;
  std::vector<Elem> lower_;
  std::vector<Elem> upper_;
  EvalFn rule_;
  Certificate certificate_ = Certificate::ByConstruction;
  std::string certificate_note_;
};

/// Exhaustive precision-monotonicity check of a candidate table pair.
/// Returns the first violating (smaller, larger) pair of pair indices.
std::optional<std::pair<long long, long long>> check_p_monotone(
    const ProductShape& domain, const ProductShape& codomain,
    const std::vector<Elem>& lower, const std::vector<Elem>& upper);

/// Wraps an evaluation rule, materializing into tables when the domain is
/// small enough. The certificate is taken on faith; use this only for maps
/// that are monotone whenever their ingredients are.
ApproxMorphism morphism_from_eval(ProductShape domain, ProductShape codomain,
                                  ApproxMorphism::EvalFn fn, Certificate cert,
                                  std::string note = "");

// --- cartesian structure ----------------------------------------------------

/// Identity on the bilattice over `shape`.
ApproxMorphism identity_morphism(const ProductShape& shape);

/// g after f. Shapes must agree (f's codomain = g's domain).
ApproxMorphism compose(const ApproxMorphism& g, const ApproxMorphism& f);

/// Target tupling: components share a domain; the result's lower component
/// tuples the lower components and likewise for the upper ones.
ApproxMorphism tuple_morphism(const std::vector<const ApproxMorphism*>& parts);
ApproxMorphism tuple_morphism(const ApproxMorphism& f, const ApproxMorphism& g);

/// i-th projection (0-based) out of a product shape.
ApproxMorphism projection_morphism(const ProductShape& shape, int i);

/// Projection onto the factor block [from, from+count).
ApproxMorphism block_projection(const ProductShape& shape, int from, int count);

/// Reindexing morphism of rho (0-based, entries into the factor list):
/// sends a tuple x to (x[rho[0]], .., x[rho[m-1]]), applied to both blocks.
/// A bijective rho yields an isomorphism; the constant-zero rho of length n
/// over a single factor is the n-fold diagonal.
ApproxMorphism base_morphism(const ProductShape& domain,
                             const std::vector<int>& rho);

/// Diagonal: single factor to n copies.
ApproxMorphism diagonal_morphism(const LatticePtr& lattice, int n);

/// f x g on concatenated shapes, acting blockwise.
ApproxMorphism product_morphism(const ApproxMorphism& f,
                                const ApproxMorphism& g);

// --- subcategory classification ---------------------------------------------

struct SubcategoryProfile {
  bool consistent = false;  // maps consistent pairs to consistent pairs
  bool symmetric = false;   // f2(x,x') = f1(x',x)
  bool a_class = false;     // f1(x,x) <= f2(x,x)
  bool as_class = false;    // f1(x,x) = f2(x,x)
};

/// Exhaustive classification; refuses domains above `cap` bilattice points.
SubcategoryProfile classify(const ApproxMorphism& f,
                            long long cap = kClassifyPairCap);

/// The argument swap of a first component: op(f1)(x,x') = f1(x',x). Tables
/// are indexed by pair index over `shape`. Applying it twice is the
/// identity. A morphism is symmetric iff its upper table equals the op of
/// its lower table.
std::vector<Elem> op_component(const ProductShape& shape,
                               const std::vector<Elem>& component);

/// Builds the symmetric morphism with the given lower component.
ApproxMorphism symmetric_from_lower(const ProductShape& domain,
                                    const ProductShape& codomain,
                                    std::vector<Elem> lower);

/// Seeded spot check of the symmetry law at `samples` random points.
bool spot_check_symmetry(const ApproxMorphism& f, std::mt19937_64& rng,
                         int samples);

/// Seeded spot check of precision monotonicity at `samples` random related
/// pairs; returns a violating pair if found.
std::optional<std::pair<BilatticePoint, BilatticePoint>>
spot_check_p_monotone(const ApproxMorphism& f, std::mt19937_64& rng,
                      int samples);

// --- pointwise comparison ---------------------------------------------------

/// Compact one-line rendering: component tables for small table-backed
/// morphisms, the certificate note otherwise.
std::string describe(const ApproxMorphism& m);

struct MorphismMismatch {
  BilatticePoint input;     // first differing input in canonical order
  BilatticePoint lhs_value;
  BilatticePoint rhs_value;
};

/// Pointwise table comparison over the (shared) domain; shapes must match.
std::optional<MorphismMismatch> first_difference(const ApproxMorphism& lhs,
                                                 const ApproxMorphism& rhs);

// --- enumeration ------------------------------------------------------------

/// All monotone maps from the precision-ordered bilattice points over
/// `domain` (order reversed when `reversed` is set) into the product order
/// over `codomain`, as value vectors indexed by pair index. Enumerated in
/// lexicographic order of the value vector, ascending by default. For
/// codomain 2 this is exactly the enumeration of up-sets of the domain
/// poset by indicator vector.
std::vector<std::vector<Elem>> enumerate_monotone_components(
    const ProductShape& domain, const ProductShape& codomain, bool reversed,
    bool descending, long long cap);

/// The family of all approximation morphisms A -> B, indexed so that the
/// lower component varies slowest. Lower components are enumerated in
/// ascending value-vector order and upper components in descending order,
/// so the first morphism of the family is the constant precision-bottom
/// (bottom, top) and the last is the constant precision-top.
class MorphismFamily {
 public:
  MorphismFamily(ProductShape domain, ProductShape codomain,
                 long long cap = 10'000'000);

  long long count() const {
    return static_cast<long long>(lowers_.size()) *
           static_cast<long long>(uppers_.size());
  }
  long long lower_count() const { return static_cast<long long>(lowers_.size()); }
  long long upper_count() const { return static_cast<long long>(uppers_.size()); }

  ApproxMorphism at(long long index) const;

  const std::vector<Elem>& lower_table(long long i) const { return lowers_[i]; }
  const std::vector<Elem>& upper_table(long long i) const { return uppers_[i]; }

  const ProductShape& domain() const { return domain_; }
  const ProductShape& codomain() const { return codomain_; }

 private:
  ProductShape domain_;
  ProductShape codomain_;
  std::vector<std::vector<Elem>> lowers_;
  std::vector<std::vector<Elem>> uppers_;
};

/// Deterministic stream of every morphism A -> B, in family order.
std::vector<ApproxMorphism> enumerate_morphisms(const ProductShape& domain,
                                                const ProductShape& codomain,
                                                long long cap = 10'000'000);

/// Seeded random morphism (each component drawn by a random walk over the
/// valid assignments; deterministic for a given generator state).
ApproxMorphism sample_morphism(const ProductShape& domain,
                               const ProductShape& codomain,
                               std::mt19937_64& rng);

/// Seeded random symmetric morphism.
ApproxMorphism sample_symmetric_morphism(const ProductShape& domain,
                                         const ProductShape& codomain,
                                         std::mt19937_64& rng);

}  // namespace afp

#endif  // AFP_MORPHISM_HPP_

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

#ifndef AFP_FIXPOINT_HPP_
#define AFP_FIXPOINT_HPP_

#include "afp/morphism.hpp"

namespace afp {

/// Morphisms f with domain A ++ B and codomain A support the dagger
/// operations below; the A-block is the one being solved for and the
/// B-suffix carries parameters (possibly empty). Returns the parameter
/// shape, throwing shape_error when the leading block does not match the
/// codomain.
ProductShape dagger_parameter_shape(const ApproxMorphism& f);

/// One application of the stable function S(f) at a full-domain point
/// (x,y,x',y'): pairs the two inner least fixed points
///   s1 = mu z.  f1(z,y,x',y')   and   s2 = mu z'. f2(x,y,z',y'),
/// each computed by Kleene iteration from the bottom of A.
BilatticePoint stable_eval(const ApproxMorphism& f, BilatticePoint p);

/// The stable function S(f) as a morphism of the same shape as f. It is
/// precision-monotone in both the solved block and the parameter block.
ApproxMorphism stable_function(const ApproxMorphism& f);

/// The well-founded fixed point of f at one parameter point: the
/// precision-least fixed point of (x,x') -> S(f)(x,x',y,y'), computed by
/// Kleene iteration from the precision bottom (bottom_A, top_A).
BilatticePoint well_founded_at(const ApproxMorphism& f, BilatticePoint param);

/// The parametric well-founded fixed point f -> (B -o A). Small parameter
/// shapes are tabulated eagerly; large ones evaluate lazily per parameter
/// point with write-once memoization (inserts are idempotent, so concurrent
/// recomputation is harmless).
ApproxMorphism well_founded(const ApproxMorphism& f);

/// All stable fixed points of f at the given parameter point, i.e. all
/// solutions of (x,x') = S(f)(x,x',y,y'), in canonical order. Exhaustive
/// scan over the bilattice of A; refuses above `cap` candidate points.
std::vector<BilatticePoint> stable_set(const ApproxMorphism& f,
                                       BilatticePoint param,
                                       long long cap = 1LL << 20);

/// The dagger applied twice, for f with domain A ++ A ++ B: first solves
/// the leading A-block, then the next one.
ApproxMorphism double_well_founded(const ApproxMorphism& f);

}  // namespace afp

#endif  // AFP_FIXPOINT_HPP_

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

#include "afp/fixpoint.hpp"

#include <map>
#include <memory>

namespace afp {

ProductShape dagger_parameter_shape(const ApproxMorphism& f) {
  const ProductShape& domain = f.domain();
  const ProductShape& solved = f.codomain();
  const int k = solved.factor_count();
  if (domain.factor_count() < k || !domain.prefix(k).equals(solved))
    throw shape_error(
        "dagger needs the leading domain block to match the codomain");
  return domain.suffix(k);
}

BilatticePoint stable_eval(const ApproxMorphism& f, BilatticePoint p) {
  const ProductShape& domain = f.domain();
  const ProductShape& solved = f.codomain();
  const int k = solved.factor_count();
  const auto [x, y] = domain.split(p.lo, k);
  const auto [xp, yp] = domain.split(p.hi, k);
  (void)x;
  (void)xp;
  const long long bound = solved.height() + 1;
  const Elem s1 = iterate_to_fixpoint<Elem>(
      solved.bottom(),
      [&](Elem z) {
        return f(BilatticePoint{domain.fuse(z, y, k), p.hi}).lo;
      },
      bound);
  const Elem s2 = iterate_to_fixpoint<Elem>(
      solved.bottom(),
      [&](Elem zp) {
        return f(BilatticePoint{p.lo, domain.fuse(zp, yp, k)}).hi;
      },
      bound);
  return {s1, s2};
}

ApproxMorphism stable_function(const ApproxMorphism& f) {
  dagger_parameter_shape(f);  // shape validation only
  ApproxMorphism fc = f;
  return morphism_from_eval(
      f.domain(), f.codomain(),
      [fc](BilatticePoint p) { return stable_eval(fc, p); },
      Certificate::ByConstruction, "stable function");
}

BilatticePoint well_founded_at(const ApproxMorphism& f, BilatticePoint param) {
  const ProductShape& domain = f.domain();
  const ProductShape& solved = f.codomain();
  const int k = solved.factor_count();
  const long long bound = 2LL * solved.height() + 1;
  return iterate_to_fixpoint<BilatticePoint>(
      precision_bottom(solved),
      [&](BilatticePoint ap) {
        return stable_eval(f, BilatticePoint{domain.fuse(ap.lo, param.lo, k),
                                             domain.fuse(ap.hi, param.hi, k)});
      },
      bound);
}

ApproxMorphism well_founded(const ApproxMorphism& f) {
  const ProductShape param = dagger_parameter_shape(f);
  ApproxMorphism fc = f;
  if (pair_count(param) <= kMaterializePairCap)
    return morphism_from_eval(
        param, f.codomain(),
        [fc](BilatticePoint y) { return well_founded_at(fc, y); },
        Certificate::ByConstruction, "well-founded fixed point");

  auto memo = std::make_shared<std::map<long long, BilatticePoint>>();
  const ProductShape param_copy = param;
  return ApproxMorphism::from_rule(
      param, f.codomain(),
      [fc, memo, param_copy](BilatticePoint y) {
        const long long key = pair_index(param_copy, y);
        if (auto it = memo->find(key); it != memo->end()) return it->second;
        const BilatticePoint value = well_founded_at(fc, y);
        memo->emplace(key, value);
        return value;
      },
      Certificate::ByConstruction, "well-founded fixed point (lazy)");
}

std::vector<BilatticePoint> stable_set(const ApproxMorphism& f,
                                       BilatticePoint param, long long cap) {
  const ProductShape param_shape = dagger_parameter_shape(f);
  const ProductShape& domain = f.domain();
  const ProductShape& solved = f.codomain();
  const int k = solved.factor_count();
  const long long candidates = pair_count(solved);
  if (candidates > cap)
    throw cap_error("stable set scan exceeds the configured cap");
  (void)param_shape;
  std::vector<BilatticePoint> fixed;
  for (long long idx = 0; idx < candidates; ++idx) {
    const BilatticePoint ap = point_at(solved, idx);
    const BilatticePoint image =
        stable_eval(f, BilatticePoint{domain.fuse(ap.lo, param.lo, k),
                                      domain.fuse(ap.hi, param.hi, k)});
    if (image == ap) fixed.push_back(ap);
  }
  return fixed;
}

ApproxMorphism double_well_founded(const ApproxMorphism& f) {
  const int k = f.codomain().factor_count();
  if (f.domain().factor_count() < 2 * k ||
      !f.domain().prefix(2 * k).equals(f.codomain().concat(f.codomain())))
    throw shape_error("double dagger needs two leading copies of the codomain");
  return well_founded(well_founded(f));
}

}  // namespace afp

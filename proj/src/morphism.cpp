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

#include "afp/morphism.hpp"

#include <algorithm>

namespace afp {

std::vector<Elem> flatten(const ProductShape& shape, BilatticePoint p) {
  const int k = shape.factor_count();
  std::vector<Elem> coords(2 * k);
  shape.decode(p.lo, std::span<Elem>(coords.data(), k));
  shape.decode(p.hi, std::span<Elem>(coords.data() + k, k));
  return coords;
}

BilatticePoint unflatten(const ProductShape& shape,
                         std::span<const Elem> coords) {
  const int k = shape.factor_count();
  return {shape.encode(coords.subspan(0, k)), shape.encode(coords.subspan(k, k))};
}

std::string render_point(const ProductShape& shape, BilatticePoint p) {
  const int k = shape.factor_count();
  const auto coords = flatten(shape, p);
  std::string out = "(";
  for (int i = 0; i < 2 * k; ++i) {
    if (i) out += ",";
    out += shape.factor(i % k)->name(coords[i]);
  }
  return out + ")";
}

std::string to_string(Certificate cert) {
  switch (cert) {
    case Certificate::Exhaustive:
      return "verified exhaustively";
    case Certificate::ByConstruction:
      return "monotone by construction";
    case Certificate::SpotChecked:
      return "spot-checked";
  }
  return "?";
}

// ---------------------------------------------------------------------------

std::optional<std::pair<long long, long long>> check_p_monotone(
    const ProductShape& domain, const ProductShape& codomain,
    const std::vector<Elem>& lower, const std::vector<Elem>& upper) {
  const long long n = pair_count(domain);
  for (long long p = 0; p < n; ++p) {
    const BilatticePoint a = point_at(domain, p);
    for (long long q = 0; q < n; ++q) {
      const BilatticePoint b = point_at(domain, q);
      if (!leq_p(domain, a, b)) continue;
      if (!codomain.leq(lower[p], lower[q]) ||
          !codomain.leq(upper[q], upper[p]))
        return std::make_pair(p, q);
    }
  }
  return std::nullopt;
}

ApproxMorphism ApproxMorphism::from_tables(ProductShape domain,
                                           ProductShape codomain,
                                           std::vector<Elem> lower,
                                           std::vector<Elem> upper) {
  const long long n = pair_count(domain);
  if (static_cast<long long>(lower.size()) != n ||
      static_cast<long long>(upper.size()) != n)
    throw shape_error("component tables must cover every input pair");
  for (long long p = 0; p < n; ++p)
    if (lower[p] < 0 || lower[p] >= codomain.size() || upper[p] < 0 ||
        upper[p] >= codomain.size())
      throw shape_error("component table value out of codomain range");
  if (auto witness = check_p_monotone(domain, codomain, lower, upper))
    throw not_p_monotone(
        "pair function is not precision-monotone between inputs " +
            render_point(domain, point_at(domain, witness->first)) + " and " +
            render_point(domain, point_at(domain, witness->second)),
        witness->first, witness->second);
  return from_tables_unchecked(std::move(domain), std::move(codomain),
                               std::move(lower), std::move(upper),
                               Certificate::Exhaustive);
}

ApproxMorphism ApproxMorphism::from_tables_unchecked(ProductShape domain,
                                                     ProductShape codomain,
                                                     std::vector<Elem> lower,
                                                     std::vector<Elem> upper,
                                                     Certificate cert) {
  ApproxMorphism m;
  m.domain_ = std::move(domain);
  m.codomain_ = std::move(codomain);
  m.table_backed_ = true;
  m.lower_ = std::move(lower);
  m.upper_ = std::move(upper);
  m.certificate_ = cert;
  return m;
}

ApproxMorphism ApproxMorphism::from_rule(ProductShape domain,
                                         ProductShape codomain, EvalFn rule,
                                         Certificate cert,
                                         std::string certificate_note) {
  ApproxMorphism m;
  m.domain_ = std::move(domain);
  m.codomain_ = std::move(codomain);
  m.table_backed_ = false;
  m.rule_ = std::move(rule);
  m.certificate_ = cert;
  m.certificate_note_ = std::move(certificate_note);
  return m;
}

ApproxMorphism ApproxMorphism::tabulate() const {
  if (table_backed_) return *this;
  const long long n = pair_count(domain_);
  if (n > kMaterializePairCap)
    throw cap_error("domain too large to tabulate");
  std::vector<Elem> lower(n);
  std::vector<Elem> upper(n);
  for (long long p = 0; p < n; ++p) {
    const BilatticePoint out = (*this)(point_at(domain_, p));
    lower[p] = out.lo;
    upper[p] = out.hi;
  }
  return from_tables_unchecked(domain_, codomain_, std::move(lower),
                               std::move(upper), certificate_);
}

ApproxMorphism morphism_from_eval(ProductShape domain, ProductShape codomain,
                                  ApproxMorphism::EvalFn fn, Certificate cert,
                                  std::string note) {
  const long long n = pair_count(domain);
  if (n <= kMaterializePairCap) {
    std::vector<Elem> lower(n);
    std::vector<Elem> upper(n);
    for (long long p = 0; p < n; ++p) {
      const BilatticePoint out = fn(point_at(domain, p));
      lower[p] = out.lo;
      upper[p] = out.hi;
    }
    return ApproxMorphism::from_tables_unchecked(
        std::move(domain), std::move(codomain), std::move(lower),
        std::move(upper), cert);
  }
  return ApproxMorphism::from_rule(std::move(domain), std::move(codomain),
                                   std::move(fn), cert, std::move(note));
}

namespace {

// Combinator results are monotone whenever their inputs are; tabulate the
// small ones so downstream comparisons are plain lookups.
ApproxMorphism make_morphism(ProductShape domain, ProductShape codomain,
                             ApproxMorphism::EvalFn fn) {
  return morphism_from_eval(std::move(domain), std::move(codomain),
                            std::move(fn), Certificate::ByConstruction);
}

}  // namespace

ApproxMorphism identity_morphism(const ProductShape& shape) {
  return make_morphism(shape, shape, [](BilatticePoint p) { return p; });
}

ApproxMorphism compose(const ApproxMorphism& g, const ApproxMorphism& f) {
  if (!f.codomain().equals(g.domain()))
    throw shape_error("compose: codomain of the inner morphism must match "
                      "the domain of the outer one");
  return make_morphism(f.domain(), g.codomain(),
                       [f, g](BilatticePoint p) { return g(f(p)); });
}

ApproxMorphism tuple_morphism(const std::vector<const ApproxMorphism*>& parts) {
  if (parts.empty()) throw shape_error("tuple of zero morphisms needs a domain");
  const ProductShape& domain = parts[0]->domain();
  ProductShape codomain = parts[0]->codomain();
  std::vector<ApproxMorphism> copies;
  copies.reserve(parts.size());
  copies.push_back(*parts[0]);
  for (size_t i = 1; i < parts.size(); ++i) {
    if (!parts[i]->domain().equals(domain))
      throw shape_error("tuple: all components must share a domain");
    codomain = codomain.concat(parts[i]->codomain());
    copies.push_back(*parts[i]);
  }
  return make_morphism(domain, codomain, [copies](BilatticePoint p) {
    long long lo = 0;
    long long hi = 0;
    for (const auto& part : copies) {
      const BilatticePoint out = part(p);
      lo = lo * part.codomain().size() + out.lo;
      hi = hi * part.codomain().size() + out.hi;
    }
    return BilatticePoint{static_cast<Elem>(lo), static_cast<Elem>(hi)};
  });
}

ApproxMorphism tuple_morphism(const ApproxMorphism& f,
                              const ApproxMorphism& g) {
  return tuple_morphism(std::vector<const ApproxMorphism*>{&f, &g});
}

ApproxMorphism projection_morphism(const ProductShape& shape, int i) {
  if (i < 0 || i >= shape.factor_count())
    throw shape_error("projection index out of range");
  ProductShape codomain = ProductShape::single(shape.factor(i));
  return make_morphism(shape, codomain, [shape, i](BilatticePoint p) {
    return BilatticePoint{shape.coord(p.lo, i), shape.coord(p.hi, i)};
  });
}

ApproxMorphism base_morphism(const ProductShape& domain,
                             const std::vector<int>& rho) {
  const int n = domain.factor_count();
  std::vector<LatticePtr> target;
  target.reserve(rho.size());
  for (int r : rho) {
    if (r < 0 || r >= n) throw shape_error("base morphism index out of range");
    target.push_back(domain.factor(r));
  }
  ProductShape codomain(std::move(target));
  return make_morphism(domain, codomain, [domain, codomain,
                                          rho](BilatticePoint p) {
    std::vector<Elem> in(domain.factor_count());
    std::vector<Elem> out(rho.size());
    domain.decode(p.lo, in);
    for (size_t j = 0; j < rho.size(); ++j) out[j] = in[rho[j]];
    const Elem lo = codomain.encode(out);
    domain.decode(p.hi, in);
    for (size_t j = 0; j < rho.size(); ++j) out[j] = in[rho[j]];
    return BilatticePoint{lo, codomain.encode(out)};
  });
}

ApproxMorphism block_projection(const ProductShape& shape, int from,
                                int count) {
  if (from < 0 || count < 0 || from + count > shape.factor_count())
    throw shape_error("block projection out of range");
  std::vector<int> rho(count);
  for (int j = 0; j < count; ++j) rho[j] = from + j;
  return base_morphism(shape, rho);
}

ApproxMorphism diagonal_morphism(const LatticePtr& lattice, int n) {
  return base_morphism(ProductShape::single(lattice), std::vector<int>(n, 0));
}

ApproxMorphism product_morphism(const ApproxMorphism& f,
                                const ApproxMorphism& g) {
  ProductShape domain = f.domain().concat(g.domain());
  ProductShape codomain = f.codomain().concat(g.codomain());
  const int split_in = f.domain().factor_count();
  const int split_out = f.codomain().factor_count();
  ApproxMorphism fc = f;
  ApproxMorphism gc = g;
  return make_morphism(domain, codomain,
                       [domain, codomain, split_in, split_out, fc,
                        gc](BilatticePoint p) {
    const auto [lo_f, lo_g] = domain.split(p.lo, split_in);
    const auto [hi_f, hi_g] = domain.split(p.hi, split_in);
    const BilatticePoint out_f = fc({lo_f, hi_f});
    const BilatticePoint out_g = gc({lo_g, hi_g});
    return BilatticePoint{codomain.fuse(out_f.lo, out_g.lo, split_out),
                          codomain.fuse(out_f.hi, out_g.hi, split_out)};
  });
}

// ---------------------------------------------------------------------------

SubcategoryProfile classify(const ApproxMorphism& f, long long cap) {
  const ProductShape& a = f.domain();
  const ProductShape& b = f.codomain();
  if (pair_count(a) > cap)
    throw cap_error("domain too large for exhaustive classification");
  SubcategoryProfile profile{true, true, true, true};
  const long long n = pair_count(a);
  for (long long p = 0; p < n; ++p) {
    const BilatticePoint in = point_at(a, p);
    const BilatticePoint out = f(in);
    if (is_consistent_pair(a, in) && !is_consistent_pair(b, out))
      profile.consistent = false;
    if (out.hi != f(BilatticePoint{in.hi, in.lo}).lo) profile.symmetric = false;
    if (in.lo == in.hi) {
      if (!b.leq(out.lo, out.hi)) profile.a_class = false;
      if (out.lo != out.hi) profile.as_class = false;
    }
  }
  return profile;
}

std::vector<Elem> op_component(const ProductShape& shape,
                               const std::vector<Elem>& component) {
  const long long n = pair_count(shape);
  std::vector<Elem> swapped(n);
  for (long long p = 0; p < n; ++p) {
    const BilatticePoint in = point_at(shape, p);
    swapped[p] = component[pair_index(shape, {in.hi, in.lo})];
  }
  return swapped;
}

ApproxMorphism symmetric_from_lower(const ProductShape& domain,
                                    const ProductShape& codomain,
                                    std::vector<Elem> lower) {
  std::vector<Elem> upper = op_component(domain, lower);
  return ApproxMorphism::from_tables(domain, codomain, std::move(lower),
                                     std::move(upper));
}

bool spot_check_symmetry(const ApproxMorphism& f, std::mt19937_64& rng,
                         int samples) {
  const long long n = f.domain().size();
  for (int i = 0; i < samples; ++i) {
    const Elem lo = static_cast<Elem>(rng() % n);
    const Elem hi = static_cast<Elem>(rng() % n);
    if (f(BilatticePoint{lo, hi}).hi != f(BilatticePoint{hi, lo}).lo)
      return false;
  }
  return true;
}

std::optional<std::pair<BilatticePoint, BilatticePoint>> spot_check_p_monotone(
    const ApproxMorphism& f, std::mt19937_64& rng, int samples) {
  const ProductShape& a = f.domain();
  const long long n = a.size();
  for (int i = 0; i < samples; ++i) {
    BilatticePoint p{static_cast<Elem>(rng() % n), static_cast<Elem>(rng() % n)};
    BilatticePoint q{static_cast<Elem>(rng() % n), static_cast<Elem>(rng() % n)};
    // Force p <=p q componentwise.
    Elem lo = p.lo;
    Elem hi = p.hi;
    std::vector<Elem> cp(a.factor_count());
    std::vector<Elem> cq(a.factor_count());
    a.decode(lo, cp);
    a.decode(q.lo, cq);
    for (int j = 0; j < a.factor_count(); ++j)
      cq[j] = a.factor(j)->join(cp[j], cq[j]);
    q.lo = a.encode(cq);
    a.decode(hi, cp);
    a.decode(q.hi, cq);
    for (int j = 0; j < a.factor_count(); ++j)
      cq[j] = a.factor(j)->meet(cp[j], cq[j]);
    q.hi = a.encode(cq);
    const BilatticePoint fp = f(p);
    const BilatticePoint fq = f(q);
    if (!leq_p(f.codomain(), fp, fq)) return std::make_pair(p, q);
  }
  return std::nullopt;
}

std::string describe(const ApproxMorphism& m) {
  if (!m.table_backed() || pair_count(m.domain()) > 64)
    return "rule(" +
           (m.certificate_note().empty() ? to_string(m.certificate())
                                         : m.certificate_note()) +
           ")";
  const long long n = pair_count(m.domain());
  std::string lower = "lower=[";
  std::string upper = "upper=[";
  for (long long p = 0; p < n; ++p) {
    const BilatticePoint out = m(point_at(m.domain(), p));
    if (p) {
      lower += ",";
      upper += ",";
    }
    lower += std::to_string(out.lo);
    upper += std::to_string(out.hi);
  }
  return lower + "] " + upper + "]";
}

std::optional<MorphismMismatch> first_difference(const ApproxMorphism& lhs,
                                                 const ApproxMorphism& rhs) {
  if (!lhs.domain().equals(rhs.domain()) ||
      !lhs.codomain().equals(rhs.codomain()))
    throw shape_error("compared morphisms must have identical shapes");
  const long long n = pair_count(lhs.domain());
  for (long long p = 0; p < n; ++p) {
    const BilatticePoint in = point_at(lhs.domain(), p);
    const BilatticePoint a = lhs(in);
    const BilatticePoint b = rhs(in);
    if (!(a == b)) return MorphismMismatch{in, a, b};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

struct ComponentPoset {
  long long points = 0;
  std::vector<bool> rel;  // rel[p * points + q]: p below q

  bool below(long long p, long long q) const { return rel[p * points + q]; }
};

ComponentPoset build_poset(const ProductShape& domain, bool reversed) {
  ComponentPoset poset;
  poset.points = pair_count(domain);
  poset.rel.assign(poset.points * poset.points, false);
  for (long long p = 0; p < poset.points; ++p) {
    const BilatticePoint a = point_at(domain, p);
    for (long long q = 0; q < poset.points; ++q) {
      const BilatticePoint b = point_at(domain, q);
      const bool le = reversed ? leq_p(domain, b, a) : leq_p(domain, a, b);
      if (le) poset.rel[p * poset.points + q] = true;
    }
  }
  return poset;
}

// Depth-first enumeration of monotone assignments, in lexicographic order
// of the value vector.
void enumerate_assignments(const ComponentPoset& poset,
                           const std::vector<std::vector<bool>>& value_leq,
                           bool descending, long long cap, long long position,
                           std::vector<Elem>& partial,
                           std::vector<std::vector<Elem>>& out) {
  const long long n = poset.points;
  const int values = static_cast<int>(value_leq.size());
  if (position == n) {
    if (static_cast<long long>(out.size()) >= cap)
      throw cap_error("component enumeration exceeds the configured cap");
    out.push_back(partial);
    return;
  }
  for (int step = 0; step < values; ++step) {
    const Elem v = descending ? values - 1 - step : step;
    bool ok = true;
    for (long long j = 0; j < position && ok; ++j) {
      if (poset.below(j, position) && !value_leq[partial[j]][v]) ok = false;
      if (poset.below(position, j) && !value_leq[v][partial[j]]) ok = false;
    }
    if (!ok) continue;
    partial[position] = v;
    enumerate_assignments(poset, value_leq, descending, cap, position + 1,
                          partial, out);
  }
}

std::vector<std::vector<bool>> value_order(const ProductShape& codomain) {
  const long long m = codomain.size();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (long long a = 0; a < m; ++a)
    for (long long b = 0; b < m; ++b)
      leq[a][b] = codomain.leq(static_cast<Elem>(a), static_cast<Elem>(b));
  return leq;
}

}  // namespace

std::vector<std::vector<Elem>> enumerate_monotone_components(
    const ProductShape& domain, const ProductShape& codomain, bool reversed,
    bool descending, long long cap) {
  const long long points = pair_count(domain);
  if (points > 64)
    throw cap_error("domain has too many bilattice points to enumerate");
  const ComponentPoset poset = build_poset(domain, reversed);
  const auto leq = value_order(codomain);
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> partial(points, 0);
  enumerate_assignments(poset, leq, descending, cap, 0, partial, out);
  return out;
}

MorphismFamily::MorphismFamily(ProductShape domain, ProductShape codomain,
                               long long cap)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  lowers_ = enumerate_monotone_components(domain_, codomain_, false, false, cap);
  uppers_ = enumerate_monotone_components(domain_, codomain_, true, true, cap);
}

ApproxMorphism MorphismFamily::at(long long index) const {
  const long long uc = upper_count();
  return ApproxMorphism::from_tables_unchecked(
      domain_, codomain_, lowers_[index / uc], uppers_[index % uc],
      Certificate::Exhaustive);
}

std::vector<ApproxMorphism> enumerate_morphisms(const ProductShape& domain,
                                                const ProductShape& codomain,
                                                long long cap) {
  MorphismFamily family(domain, codomain, cap);
  if (family.count() > cap)
    throw cap_error("morphism enumeration exceeds the configured cap");
  std::vector<ApproxMorphism> all;
  all.reserve(family.count());
  for (long long i = 0; i < family.count(); ++i) all.push_back(family.at(i));
  return all;
}

namespace {

std::vector<Elem> sample_component(const ProductShape& domain,
                                   const ProductShape& codomain, bool reversed,
                                   std::mt19937_64& rng) {
  const ComponentPoset poset = build_poset(domain, reversed);
  const auto leq = value_order(codomain);
  const long long n = poset.points;
  const int values = static_cast<int>(codomain.size());
  std::vector<Elem> assignment(n, 0);
  std::vector<Elem> candidates;
  for (long long k = 0; k < n; ++k) {
    candidates.clear();
    for (Elem v = 0; v < values; ++v) {
      bool ok = true;
      for (long long j = 0; j < k && ok; ++j) {
        if (poset.below(j, k) && !leq[assignment[j]][v]) ok = false;
        if (poset.below(k, j) && !leq[v][assignment[j]]) ok = false;
      }
      if (ok) candidates.push_back(v);
    }
    // A lattice codomain always leaves at least the join of the lower
    // constraints available.
    assignment[k] = candidates[rng() % candidates.size()];
  }
  return assignment;
}

}  // namespace

ApproxMorphism sample_morphism(const ProductShape& domain,
                               const ProductShape& codomain,
                               std::mt19937_64& rng) {
  std::vector<Elem> lower = sample_component(domain, codomain, false, rng);
  std::vector<Elem> upper = sample_component(domain, codomain, true, rng);
  return ApproxMorphism::from_tables(domain, codomain, std::move(lower),
                                     std::move(upper));
}

ApproxMorphism sample_symmetric_morphism(const ProductShape& domain,
                                         const ProductShape& codomain,
                                         std::mt19937_64& rng) {
  std::vector<Elem> lower = sample_component(domain, codomain, false, rng);
  return symmetric_from_lower(domain, codomain, std::move(lower));
}

}  // namespace afp

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

#include "afp/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace afp {

namespace {

int words_for(int n) { return (n + 63) / 64; }

void set_bit(std::vector<uint64_t>& rows, int words, int a, int b) {
  rows[static_cast<size_t>(a) * words + (b >> 6)] |= uint64_t{1} << (b & 63);
}

bool get_bit(const std::vector<uint64_t>& rows, int words, int a, int b) {
  return (rows[static_cast<size_t>(a) * words + (b >> 6)] >> (b & 63)) & 1u;
}

int popcount_row(const std::vector<uint64_t>& rows, int words, int a) {
  int total = 0;
  for (int w = 0; w < words; ++w)
    total += std::popcount(rows[static_cast<size_t>(a) * words + w]);
  return total;
}

}  // namespace

FiniteLattice::FiniteLattice(std::vector<std::string> element_names,
                             const std::vector<std::pair<int, int>>& leq_pairs) {
  kind_ = Kind::Explicit;
  names_ = std::move(element_names);
  size_ = static_cast<int>(names_.size());
  row_words_ = words_for(size_);
  up_rows_.assign(static_cast<size_t>(size_) * row_words_, 0);
  for (auto [a, b] : leq_pairs) {
    if (a < 0 || a >= size_ || b < 0 || b >= size_)
      throw error("leq pair (" + std::to_string(a) + "," + std::to_string(b) +
                  ") is out of range");
    set_bit(up_rows_, row_words_, a, b);
  }
}

LatticePtr FiniteLattice::chain(int n) {
  if (n < 1) throw error("chain length must be at least 1");
  auto lattice = std::shared_ptr<FiniteLattice>(new FiniteLattice());
  lattice->kind_ = Kind::Chain;
  lattice->chain_length_ = n;
  lattice->size_ = n;
  lattice->bottom_ = 0;
  lattice->top_ = n - 1;
  lattice->height_ = n - 1;
  return lattice;
}

LatticePtr FiniteLattice::booleans() { return chain(2); }

LatticePtr FiniteLattice::powerset(int n, long long cap) {
  if (n < 0) throw error("powerset ground size must be nonnegative");
  std::vector<std::string> items;
  items.reserve(n);
  for (int i = 0; i < n; ++i) items.push_back(std::to_string(i));
  return powerset_named(std::move(items), cap);
}

LatticePtr FiniteLattice::powerset_named(std::vector<std::string> items,
                                         long long cap) {
  const int n = static_cast<int>(items.size());
  if (n > 62 || (1LL << n) > cap)
    throw cap_error("powerset of " + std::to_string(n) +
                    " items exceeds the element cap of " + std::to_string(cap));
  auto lattice = std::shared_ptr<FiniteLattice>(new FiniteLattice());
  lattice->kind_ = Kind::Powerset;
  lattice->item_names_ = std::move(items);
  lattice->size_ = static_cast<int>(1LL << n);
  lattice->bottom_ = 0;
  lattice->top_ = lattice->size_ - 1;
  lattice->height_ = n;
  return lattice;
}

LatticePtr FiniteLattice::product(std::vector<LatticePtr> factors,
                                  long long cap) {
  long long size = 1;
  for (const auto& f : factors) {
    size *= f->size();
    if (size > cap)
      throw cap_error("product size exceeds the element cap of " +
                      std::to_string(cap));
  }
  auto lattice = std::shared_ptr<FiniteLattice>(new FiniteLattice());
  lattice->kind_ = Kind::Product;
  lattice->factors_ = std::move(factors);
  lattice->size_ = static_cast<int>(size);
  const int k = static_cast<int>(lattice->factors_.size());
  lattice->strides_.assign(k, 1);
  for (int i = k - 2; i >= 0; --i)
    lattice->strides_[i] =
        lattice->strides_[i + 1] * lattice->factors_[i + 1]->size();
  int height = 0;
  long long bottom = 0;
  long long top = 0;
  for (int i = 0; i < k; ++i) {
    height += lattice->factors_[i]->height();
    bottom += lattice->factors_[i]->bottom() * lattice->strides_[i];
    top += lattice->factors_[i]->top() * lattice->strides_[i];
  }
  lattice->height_ = height;
  lattice->bottom_ = static_cast<Elem>(bottom);
  lattice->top_ = static_cast<Elem>(top);
  return lattice;
}

LatticePtr FiniteLattice::dual(LatticePtr base) {
  auto lattice = std::shared_ptr<FiniteLattice>(new FiniteLattice());
  lattice->kind_ = Kind::Dual;
  lattice->size_ = base->size();
  lattice->bottom_ = base->top();
  lattice->top_ = base->bottom();
  lattice->height_ = base->height();
  lattice->base_ = std::move(base);
  return lattice;
}

bool FiniteLattice::leq(Elem a, Elem b) const {
  switch (kind_) {
    case Kind::Chain:
      return a <= b;
    case Kind::Powerset:
      return (a & ~b) == 0;
    case Kind::Product: {
      for (size_t i = 0; i < factors_.size(); ++i) {
        Elem xa = static_cast<Elem>((a / strides_[i]) % factors_[i]->size());
        Elem xb = static_cast<Elem>((b / strides_[i]) % factors_[i]->size());
        if (!factors_[i]->leq(xa, xb)) return false;
      }
      return true;
    }
    case Kind::Dual:
      return base_->leq(b, a);
    case Kind::Explicit:
      return up_bit(a, b);
  }
  return false;
}

Elem FiniteLattice::join(Elem a, Elem b) const {
  switch (kind_) {
    case Kind::Chain:
      return std::max(a, b);
    case Kind::Powerset:
      return a | b;
    case Kind::Product: {
      long long code = 0;
      for (size_t i = 0; i < factors_.size(); ++i) {
        Elem xa = static_cast<Elem>((a / strides_[i]) % factors_[i]->size());
        Elem xb = static_cast<Elem>((b / strides_[i]) % factors_[i]->size());
        code += static_cast<long long>(factors_[i]->join(xa, xb)) * strides_[i];
      }
      return static_cast<Elem>(code);
    }
    case Kind::Dual:
      return base_->meet(a, b);
    case Kind::Explicit:
      if (!sealed_)
        throw error("join called on an unverified explicit lattice");
      return join_table_[static_cast<size_t>(a) * size_ + b];
  }
  return -1;
}

Elem FiniteLattice::meet(Elem a, Elem b) const {
  switch (kind_) {
    case Kind::Chain:
      return std::min(a, b);
    case Kind::Powerset:
      return a & b;
    case Kind::Product: {
      long long code = 0;
      for (size_t i = 0; i < factors_.size(); ++i) {
        Elem xa = static_cast<Elem>((a / strides_[i]) % factors_[i]->size());
        Elem xb = static_cast<Elem>((b / strides_[i]) % factors_[i]->size());
        code += static_cast<long long>(factors_[i]->meet(xa, xb)) * strides_[i];
      }
      return static_cast<Elem>(code);
    }
    case Kind::Dual:
      return base_->join(a, b);
    case Kind::Explicit:
      if (!sealed_)
        throw error("meet called on an unverified explicit lattice");
      return meet_table_[static_cast<size_t>(a) * size_ + b];
  }
  return -1;
}

std::string FiniteLattice::name(Elem e) const {
  switch (kind_) {
    case Kind::Chain:
      return std::to_string(e);
    case Kind::Powerset: {
      std::string out = "{";
      bool first = true;
      for (size_t i = 0; i < item_names_.size(); ++i) {
        if ((e >> i) & 1) {
          if (!first) out += ",";
          out += item_names_[i];
          first = false;
        }
      }
      return out + "}";
    }
    case Kind::Product: {
      std::string out = "(";
      for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += ",";
        out += factors_[i]->name(
            static_cast<Elem>((e / strides_[i]) % factors_[i]->size()));
      }
      return out + ")";
    }
    case Kind::Dual:
      return base_->name(e);
    case Kind::Explicit:
      return names_[e];
  }
  return "?";
}

bool FiniteLattice::equals(const FiniteLattice& other) const {
  if (this == &other) return true;
  if (size_ != other.size_) return false;
  for (Elem e = 0; e < size_; ++e)
    if (name(e) != other.name(e)) return false;
  for (Elem a = 0; a < size_; ++a)
    for (Elem b = 0; b < size_; ++b)
      if (leq(a, b) != other.leq(a, b)) return false;
  return true;
}

std::vector<std::pair<int, int>> FiniteLattice::leq_pairs() const {
  std::vector<std::pair<int, int>> pairs;
  for (Elem a = 0; a < size_; ++a)
    for (Elem b = 0; b < size_; ++b)
      if (leq(a, b)) pairs.emplace_back(a, b);
  return pairs;
}

namespace {

// Finds, within the bit-row machinery, the least member of the set `bound`
// (given as a bitset over permuted indices): with indices sorted by
// descending up-set size, the least member of any subset that has one is
// its lowest set bit.
int first_member(const std::vector<uint64_t>& set, int words) {
  for (int w = 0; w < words; ++w)
    if (set[w]) return w * 64 + std::countr_zero(set[w]);
  return -1;
}

struct VerifyContext {
  int n = 0;
  int words = 0;
  std::vector<uint64_t> up;    // up[a] bit b: a <= b
  std::vector<uint64_t> down;  // down[a] bit b: b <= a
};

// Checks that every pair of `perm`-reordered rows has a least common
// member, i.e. that pairwise bounds exist. `label` is "join" or "meet".
std::optional<std::string> check_pairwise_bounds(
    const FiniteLattice& cand, const VerifyContext& ctx,
    const std::vector<uint64_t>& rows, const char* label) {
  const int n = ctx.n;
  const int words = ctx.words;

  // Reorder so index order is a linear extension (largest row first).
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> pop(n);
  for (int a = 0; a < n; ++a) pop[a] = popcount_row(rows, words, a);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int a, int b) { return pop[a] > pop[b]; });
  std::vector<int> where(n);
  for (int k = 0; k < n; ++k) where[perm[k]] = k;

  std::vector<uint64_t> prows(static_cast<size_t>(n) * words, 0);
  for (int k = 0; k < n; ++k)
    for (int m = 0; m < n; ++m)
      if (get_bit(rows, words, perm[k], perm[m]))
        set_bit(prows, words, k, m);

  std::vector<uint64_t> bound(words);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const size_t ri = static_cast<size_t>(where[i]) * words;
      const size_t rj = static_cast<size_t>(where[j]) * words;
      for (int w = 0; w < words; ++w) bound[w] = prows[ri + w] & prows[rj + w];
      const int c = first_member(bound, words);
      bool ok = c >= 0;
      if (ok) {
        const size_t rc = static_cast<size_t>(c) * words;
        for (int w = 0; w < words && ok; ++w)
          ok = (bound[w] & ~prows[rc + w]) == 0;
      }
      if (!ok)
        return std::string("no ") + label + "(" + cand.name(i) + "," +
               cand.name(j) + ")";
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> verify_lattice(const FiniteLattice& cand) {
  const int n = cand.size();
  if (n == 0) return "empty carrier";
  if (n > kDefaultElementCap * 4)
    throw cap_error("lattice too large to verify exhaustively");

  VerifyContext ctx;
  ctx.n = n;
  ctx.words = words_for(n);
  ctx.up.assign(static_cast<size_t>(n) * ctx.words, 0);
  ctx.down.assign(static_cast<size_t>(n) * ctx.words, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (cand.leq(a, b)) {
        set_bit(ctx.up, ctx.words, a, b);
        set_bit(ctx.down, ctx.words, b, a);
      }

  for (int a = 0; a < n; ++a)
    if (!get_bit(ctx.up, ctx.words, a, a))
      return "reflexivity(" + cand.name(a) + ")";

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (get_bit(ctx.up, ctx.words, a, b) && get_bit(ctx.up, ctx.words, b, a))
        return "antisymmetry(" + cand.name(a) + "," + cand.name(b) + ")";

  // a <= b requires up[b] to be contained in up[a].
  for (int a = 0; a < n; ++a) {
    const size_t ra = static_cast<size_t>(a) * ctx.words;
    for (int b = 0; b < n; ++b) {
      if (!get_bit(ctx.up, ctx.words, a, b)) continue;
      const size_t rb = static_cast<size_t>(b) * ctx.words;
      for (int w = 0; w < ctx.words; ++w) {
        uint64_t missing = ctx.up[rb + w] & ~ctx.up[ra + w];
        if (missing) {
          int c = w * 64 + std::countr_zero(missing);
          return "transitivity(" + cand.name(a) + "," + cand.name(b) + "," +
                 cand.name(c) + ")";
        }
      }
    }
  }

  if (auto v = check_pairwise_bounds(cand, ctx, ctx.up, "join")) return v;
  if (auto v = check_pairwise_bounds(cand, ctx, ctx.down, "meet")) return v;

  bool has_bottom = false;
  bool has_top = false;
  for (int a = 0; a < n && !(has_bottom && has_top); ++a) {
    if (popcount_row(ctx.up, ctx.words, a) == n) has_bottom = true;
    if (popcount_row(ctx.down, ctx.words, a) == n) has_top = true;
  }
  if (!has_bottom) return "no bottom";
  if (!has_top) return "no top";
  return std::nullopt;
}

LatticePtr FiniteLattice::seal(FiniteLattice candidate) {
  if (candidate.kind_ != Kind::Explicit)
    throw error("seal expects a raw explicit candidate");
  if (auto violation = verify_lattice(candidate))
    throw error("not a lattice: " + *violation);

  const int n = candidate.size_;
  const int words = candidate.row_words_;
  for (int a = 0; a < n; ++a)
    if (popcount_row(candidate.up_rows_, words, a) == n) candidate.bottom_ = a;
  for (int b = 0; b < n; ++b) {
    bool all_below = true;
    for (int a = 0; a < n && all_below; ++a)
      all_below = get_bit(candidate.up_rows_, words, a, b);
    if (all_below) {
      candidate.top_ = b;
      break;
    }
  }

  // Longest ascending chain, bottom-up.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> pop(n);
  for (int a = 0; a < n; ++a)
    pop[a] = popcount_row(candidate.up_rows_, words, a);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return pop[a] > pop[b]; });
  std::vector<int> depth(n, 0);
  for (int bi = 0; bi < n; ++bi) {
    int b = order[bi];
    for (int ai = 0; ai < bi; ++ai) {
      int a = order[ai];
      if (a != b && get_bit(candidate.up_rows_, words, a, b))
        depth[b] = std::max(depth[b], depth[a] + 1);
    }
  }
  candidate.height_ = *std::max_element(depth.begin(), depth.end());

  candidate.join_table_.assign(static_cast<size_t>(n) * n, -1);
  candidate.meet_table_.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Elem best_join = -1;
      Elem best_meet = -1;
      for (int c = 0; c < n; ++c) {
        if (get_bit(candidate.up_rows_, words, a, c) &&
            get_bit(candidate.up_rows_, words, b, c) &&
            (best_join < 0 || get_bit(candidate.up_rows_, words, c, best_join)))
          best_join = c;
        if (get_bit(candidate.up_rows_, words, c, a) &&
            get_bit(candidate.up_rows_, words, c, b) &&
            (best_meet < 0 || get_bit(candidate.up_rows_, words, best_meet, c)))
          best_meet = c;
      }
      candidate.join_table_[static_cast<size_t>(a) * n + b] = best_join;
      candidate.meet_table_[static_cast<size_t>(a) * n + b] = best_meet;
    }
  }
  candidate.sealed_ = true;
  return std::make_shared<const FiniteLattice>(std::move(candidate));
}

LatticePtr parse_lattice_spec(const std::string& spec, long long cap) {
  if (spec == "2") return FiniteLattice::booleans();
  auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string rest =
      colon == std::string::npos ? std::string() : spec.substr(colon + 1);
  auto parse_int = [&](const std::string& s) {
    try {
      size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw error("");
      return v;
    } catch (...) {
      throw error("bad number '" + s + "' in lattice spec '" + spec + "'");
    }
  };
  if (head == "chain") return FiniteLattice::chain(parse_int(rest));
  if (head == "pow") return FiniteLattice::powerset(parse_int(rest), cap);
  if (head == "dual") return FiniteLattice::dual(parse_lattice_spec(rest, cap));
  if (head == "prod") {
    std::vector<LatticePtr> factors;
    std::string token;
    std::istringstream in(rest);
    while (std::getline(in, token, '*'))
      factors.push_back(parse_lattice_spec(token, cap));
    return FiniteLattice::product(std::move(factors), cap);
  }
  throw error("unknown lattice spec '" + spec +
              "' (expected 2, chain:N, pow:N, dual:SPEC or prod:A*B)");
}

// ---------------------------------------------------------------------------

ProductShape::ProductShape(std::vector<LatticePtr> factors)
    : factors_(std::move(factors)) {
  const int k = static_cast<int>(factors_.size());
  strides_.assign(k, 1);
  for (int i = k - 2; i >= 0; --i)
    strides_[i] = strides_[i + 1] * factors_[i + 1]->size();
  long long bottom = 0;
  long long top = 0;
  for (int i = 0; i < k; ++i) {
    size_ *= factors_[i]->size();
    if (size_ > (1LL << 40))
      throw cap_error("product shape too large to index");
    height_ += factors_[i]->height();
    bottom += factors_[i]->bottom() * strides_[i];
    top += factors_[i]->top() * strides_[i];
  }
  bottom_ = static_cast<Elem>(bottom);
  top_ = static_cast<Elem>(top);
}

ProductShape ProductShape::single(LatticePtr lattice) {
  return ProductShape(std::vector<LatticePtr>{std::move(lattice)});
}

Elem ProductShape::encode(std::span<const Elem> coords) const {
  long long code = 0;
  for (size_t i = 0; i < factors_.size(); ++i)
    code += static_cast<long long>(coords[i]) * strides_[i];
  return static_cast<Elem>(code);
}

void ProductShape::decode(Elem code, std::span<Elem> coords_out) const {
  for (size_t i = 0; i < factors_.size(); ++i)
    coords_out[i] = static_cast<Elem>((code / strides_[i]) % factors_[i]->size());
}

Elem ProductShape::coord(Elem code, int i) const {
  return static_cast<Elem>((code / strides_[i]) % factors_[i]->size());
}

bool ProductShape::leq(Elem a, Elem b) const {
  for (size_t i = 0; i < factors_.size(); ++i) {
    Elem xa = static_cast<Elem>((a / strides_[i]) % factors_[i]->size());
    Elem xb = static_cast<Elem>((b / strides_[i]) % factors_[i]->size());
    if (!factors_[i]->leq(xa, xb)) return false;
  }
  return true;
}

ProductShape ProductShape::concat(const ProductShape& other) const {
  std::vector<LatticePtr> factors = factors_;
  factors.insert(factors.end(), other.factors_.begin(), other.factors_.end());
  return ProductShape(std::move(factors));
}

ProductShape ProductShape::prefix(int k) const {
  return ProductShape(
      std::vector<LatticePtr>(factors_.begin(), factors_.begin() + k));
}

ProductShape ProductShape::suffix(int k) const {
  return ProductShape(
      std::vector<LatticePtr>(factors_.begin() + k, factors_.end()));
}

std::pair<Elem, Elem> ProductShape::split(Elem code, int k) const {
  const long long tail = k == 0 ? size_ : strides_[k - 1];
  return {static_cast<Elem>(code / tail), static_cast<Elem>(code % tail)};
}

Elem ProductShape::fuse(Elem prefix_code, Elem suffix_code, int k) const {
  const long long tail = k == 0 ? size_ : strides_[k - 1];
  return static_cast<Elem>(prefix_code * tail + suffix_code);
}

bool ProductShape::equals(const ProductShape& other) const {
  if (factors_.size() != other.factors_.size()) return false;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] == other.factors_[i]) continue;
    if (!factors_[i]->equals(*other.factors_[i])) return false;
  }
  return true;
}

std::string ProductShape::render(Elem code) const {
  if (factors_.empty()) return "()";
  if (factors_.size() == 1) return factors_[0]->name(code);
  std::string out = "(";
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += ",";
    out += factors_[i]->name(coord(code, static_cast<int>(i)));
  }
  return out + ")";
}

// ---------------------------------------------------------------------------

std::optional<MonotonicityWitness> is_monotone(const MonotoneMap& map) {
  const long long n = map.domain.size();
  const int k = map.domain.factor_count();
  for (Elem u = 0; u < n; ++u) {
    for (Elem v = 0; v < n; ++v) {
      bool related = true;
      for (int i = 0; i < k && related; ++i) {
        Elem xu = map.domain.coord(u, i);
        Elem xv = map.domain.coord(v, i);
        related = map.polarity[i] == Polarity::Increasing
                      ? map.domain.factor(i)->leq(xu, xv)
                      : map.domain.factor(i)->leq(xv, xu);
      }
      if (related && !map.codomain->leq(map.table[u], map.table[v]))
        return MonotonicityWitness{u, v};
    }
  }
  return std::nullopt;
}

Elem lfp(const MonotoneMap& map) {
  if (map.domain.factor_count() != 1 ||
      !map.domain.factor(0)->equals(*map.codomain))
    throw shape_error("lfp needs an endofunction on a single lattice");
  if (map.polarity[0] != Polarity::Increasing)
    throw shape_error("lfp needs an increasing map");
  return lfp(*map.codomain, [&](Elem x) { return map.table[x]; });
}

Elem lfp(const FiniteLattice& lattice, const std::function<Elem(Elem)>& step) {
  const long long bound =
      std::min<long long>(lattice.size(), lattice.height() + 1);
  return iterate_to_fixpoint<Elem>(lattice.bottom(), step, bound);
}

}  // namespace afp

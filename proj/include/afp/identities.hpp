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

#ifndef AFP_IDENTITIES_HPP_
#define AFP_IDENTITIES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "afp/fixpoint.hpp"

namespace afp {

/// The fixed catalog of dagger identity schemas checked by this library.
/// Each schema builds a left- and a right-hand morphism of identical shape
/// from its instance morphisms and compares them pointwise; weak_functorial
/// is a quasi-identity with a premise that is checked first.
enum class IdentitySchema {
  FixedPoint,
  Parameter,
  Permutation,
  Composition,
  CompositionSimple,
  Squaring,
  DoubleDagger,
  Pairing,
  PairingSpecial,
  GroupZ2,
  GroupZ3,
  WeakFunctorial,
};

std::string to_string(IdentitySchema schema);
std::optional<IdentitySchema> schema_from_string(const std::string& name);
std::vector<IdentitySchema> all_schemas();

/// Outcome of checking one identity instance. When the sides differ, the
/// witness is the first input (in canonical order) where they do, with both
/// values, all flattened to coordinate vectors.
struct IdentityReport {
  std::string schema;
  std::string instance;
  bool applicable = true;  // weak functorial premise satisfied
  bool holds = false;
  std::vector<Elem> witness;
  std::vector<Elem> lhs_value;
  std::vector<Elem> rhs_value;
  std::string witness_text;
  std::string lhs_text;
  std::string rhs_text;
};

// --- single-instance checks --------------------------------------------------

/// f = f o <<wf(f), id>>, for f : A x B -o A.
IdentityReport check_fixed_point(const ApproxMorphism& f);

/// wf(f o (id x g)) = wf(f) o g, for f : A x B -o A and g : C -o B.
IdentityReport check_parameter(const ApproxMorphism& f,
                               const ApproxMorphism& g);

/// wf(rho o f o (rho^-1 x id)) = rho o wf(f), rho a permutation of the
/// solved factors (0-based).
IdentityReport check_permutation(const ApproxMorphism& f,
                                 const std::vector<int>& rho);

/// wf(f o <<g, pi_C>>) = f o <<wf(g o <<f, pi_C>>), id_C>>, for
/// f : B x C -o A and g : A x C -o B.
IdentityReport check_composition(const ApproxMorphism& f,
                                 const ApproxMorphism& g);

/// f o wf(f o f) = wf(f o f), for f : A -o A.
IdentityReport check_composition_simple(const ApproxMorphism& f);

/// wf(f o f) = wf(f), for f : A -o A.
IdentityReport check_squaring(const ApproxMorphism& f);

/// wf(wf(f)) = wf(f o (diag x id)), for f : A x A x B -o A.
IdentityReport check_double_dagger(const ApproxMorphism& f);

/// The general pairing law, for f : A x B x C -o A and g : A x B x C -o B,
/// with h = g o <<wf(f), id>>.
IdentityReport check_pairing(const ApproxMorphism& f, const ApproxMorphism& g);

/// The pairing law specialized to g independent of the first block:
/// f : A x B x C -o A, g : B x C -o B.
IdentityReport check_pairing_special(const ApproxMorphism& f,
                                     const ApproxMorphism& g);

/// The identity of a finite group given by its Cayley table (0-based), for
/// f : A^n x B -o A.
IdentityReport check_group(const ApproxMorphism& f,
                           const std::vector<std::vector<int>>& cayley);

/// Quasi-identity: if f o (diag_n x id) = diag_n o g then
/// wf(f) = diag_n o wf(g); premise failure reports inapplicable.
IdentityReport check_weak_functorial(const ApproxMorphism& f,
                                     const ApproxMorphism& g);

/// Cayley table of the cyclic group of order n (0-based).
std::vector<std::vector<int>> cyclic_group_table(int n);

/// Latin square + identity + associativity.
bool is_group_table(const std::vector<std::vector<int>>& table);

// --- exhaustive / sampled drivers --------------------------------------------

struct VerifyOptions {
  std::string lattice = "2";
  bool exhaustive = true;
  uint64_t seed = kDefaultSeed;
  long long samples = 1000;    // per sampled dimension
  long long cap = 10'000'000;  // instance-space bound
};

struct VerifyOutcome {
  std::string schema;
  std::string mode;  // "exhaustive" or "sample"
  uint64_t seed = 0;
  long long instances = 0;     // instances actually checked
  long long inapplicable = 0;  // premise-failing weak functorial instances
  std::optional<IdentityReport> counterexample;
};

/// Runs a schema over its canonical instance space on the chosen lattice.
/// Exhaustive mode refuses (cap_error) when the space exceeds opts.cap, so
/// a "zero counterexamples" outcome always reflects full coverage; sampled
/// mode draws seeded instances. Stops at the first counterexample.
VerifyOutcome verify_identity(IdentitySchema schema, const VerifyOptions& opts);

/// Deterministic counterexample hunt: scans the canonical enumeration (or
/// the seeded sample stream) up to opts.cap instances and reports the first
/// failure, or none-found with the number checked.
VerifyOutcome search_counterexample(IdentitySchema schema,
                                    const VerifyOptions& opts);

// --- reproduction of the published results ------------------------------------

struct PaperRow {
  std::string id;
  std::string expected;
  std::string actual;
  bool match = false;
};

struct PaperSuite {
  std::vector<PaperRow> rows;
  bool all_match = false;
};

/// Recomputes the full fixed result table: the four failing identity
/// instances with their exact witness values, the closure counterexamples
/// for the symmetric / A-class / consistent subcategories, and the
/// exhaustive or seeded confirmations of every law that holds.
PaperSuite reproduce_paper_suite();

}  // namespace afp

#endif  // AFP_IDENTITIES_HPP_

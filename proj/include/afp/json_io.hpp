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

#ifndef AFP_JSON_IO_HPP_
#define AFP_JSON_IO_HPP_

#include <json.hpp>

#include "afp/identities.hpp"
#include "afp/lp.hpp"

namespace afp {

using Json = nlohmann::json;

/// {"elements": [names...], "leq": [[i,j], ...]} with the full relation.
Json lattice_to_json(const FiniteLattice& lattice);

/// Parses and verifies; throws afp::error when the relation is not a
/// lattice.
LatticePtr lattice_from_json(const Json& j);

/// Parses without verification, for explicit law checking.
FiniteLattice lattice_candidate_from_json(const Json& j);

/// Shape entries are lattice spec strings ("2", "chain:3", "pow:2") or
/// inline lattice objects.
ProductShape shape_from_json(const Json& j);
Json shape_to_json(const ProductShape& shape);

/// {"domain": [...], "codomain": [...],
///  "table": [[[x,x'],[y,y']], ...]} where x, x', y, y' are coordinate
/// tuples; rows cover every input pair exactly once.
Json morphism_to_json(const ApproxMorphism& m);
ApproxMorphism morphism_from_json(const Json& j);

Json report_to_json(const IdentityReport& report);
Json outcome_to_json(const VerifyOutcome& outcome);
Json paper_suite_to_json(const PaperSuite& suite);

/// {"wf":{"true":[],"false":[],"undefined":[]},"stable":[[]],
///  "oracle":[[]],"agree":bool}
Json semantics_to_json(const LogicProgram& program,
                       const SemanticsResult& result);
Json wf_to_json(const LogicProgram& program,
                const FourValuedInterpretation& wf);

}  // namespace afp

#endif  // AFP_JSON_IO_HPP_

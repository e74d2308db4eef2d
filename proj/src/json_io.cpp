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

#include "afp/json_io.hpp"

namespace afp {

namespace {

constexpr long long kSerializeCap = 1024;

std::vector<Elem> tuple_from_json(const Json& j, const ProductShape& shape) {
  if (!j.is_array() || static_cast<int>(j.size()) != shape.factor_count())
    throw error("tuple must list one coordinate per factor");
  std::vector<Elem> coords;
  for (const auto& c : j) {
    if (!c.is_number_integer()) throw error("tuple coordinates are indices");
    coords.push_back(c.get<Elem>());
  }
  for (int i = 0; i < shape.factor_count(); ++i)
    if (coords[i] < 0 || coords[i] >= shape.factor(i)->size())
      throw error("tuple coordinate out of range");
  return coords;
}

Json tuple_to_json(const ProductShape& shape, Elem code) {
  Json out = Json::array();
  for (int i = 0; i < shape.factor_count(); ++i) out.push_back(shape.coord(code, i));
  return out;
}

Json names_json(const std::vector<std::string>& names) {
  return Json(names);
}

Json model_list_json(const LogicProgram& program,
                     const std::vector<AtomSet>& models) {
  Json out = Json::array();
  for (AtomSet m : models) out.push_back(names_json(atom_names(program, m)));
  return out;
}

}  // namespace

Json lattice_to_json(const FiniteLattice& lattice) {
  if (lattice.size() > kSerializeCap)
    throw cap_error("lattice too large to serialize");
  Json j;
  Json elements = Json::array();
  for (Elem e = 0; e < lattice.size(); ++e) elements.push_back(lattice.name(e));
  Json leq = Json::array();
  for (auto [a, b] : lattice.leq_pairs()) leq.push_back(Json::array({a, b}));
  j["elements"] = std::move(elements);
  j["leq"] = std::move(leq);
  return j;
}

FiniteLattice lattice_candidate_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("leq"))
    throw error("lattice JSON needs \"elements\" and \"leq\"");
  std::vector<std::string> names;
  for (const auto& n : j["elements"]) names.push_back(n.get<std::string>());
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : j["leq"]) {
    if (!p.is_array() || p.size() != 2) throw error("leq entries are pairs");
    pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return FiniteLattice(std::move(names), pairs);
}

LatticePtr lattice_from_json(const Json& j) {
  return FiniteLattice::seal(lattice_candidate_from_json(j));
}

ProductShape shape_from_json(const Json& j) {
  if (!j.is_array()) throw error("shape must be an array of lattices");
  std::vector<LatticePtr> factors;
  for (const auto& entry : j) {
    if (entry.is_string())
      factors.push_back(parse_lattice_spec(entry.get<std::string>()));
    else
      factors.push_back(lattice_from_json(entry));
  }
  return ProductShape(std::move(factors));
}

Json shape_to_json(const ProductShape& shape) {
  Json out = Json::array();
  for (int i = 0; i < shape.factor_count(); ++i) {
    const FiniteLattice& factor = *shape.factor(i);
    if (factor.kind() == FiniteLattice::Kind::Chain) {
      out.push_back(factor.size() == 2 ? "2"
                                       : "chain:" + std::to_string(factor.size()));
    } else {
      out.push_back(lattice_to_json(factor));
    }
  }
  return out;
}

Json morphism_to_json(const ApproxMorphism& morphism) {
  const ApproxMorphism m = morphism.tabulate();
  Json j;
  j["domain"] = shape_to_json(m.domain());
  j["codomain"] = shape_to_json(m.codomain());
  Json table = Json::array();
  for (long long p = 0; p < pair_count(m.domain()); ++p) {
    const BilatticePoint in = point_at(m.domain(), p);
    const BilatticePoint out = m(in);
    table.push_back(Json::array(
        {Json::array({tuple_to_json(m.domain(), in.lo),
                      tuple_to_json(m.domain(), in.hi)}),
         Json::array({tuple_to_json(m.codomain(), out.lo),
                      tuple_to_json(m.codomain(), out.hi)})}));
  }
  j["table"] = std::move(table);
  return j;
}

ApproxMorphism morphism_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("domain") || !j.contains("codomain") ||
      !j.contains("table"))
    throw error("morphism JSON needs \"domain\", \"codomain\" and \"table\"");
  const ProductShape domain = shape_from_json(j["domain"]);
  const ProductShape codomain = shape_from_json(j["codomain"]);
  const long long n = pair_count(domain);
  if (n > kMaterializePairCap) throw cap_error("morphism table too large");
  std::vector<Elem> lower(n, -1);
  std::vector<Elem> upper(n, -1);
  for (const auto& row : j["table"]) {
    if (!row.is_array() || row.size() != 2 || !row[0].is_array() ||
        row[0].size() != 2 || !row[1].is_array() || row[1].size() != 2)
      throw error("table rows look like [[x,x'],[y,y']]");
    const auto x = tuple_from_json(row[0][0], domain);
    const auto xp = tuple_from_json(row[0][1], domain);
    const auto y = tuple_from_json(row[1][0], codomain);
    const auto yp = tuple_from_json(row[1][1], codomain);
    const long long p = pair_index(
        domain, BilatticePoint{domain.encode(x), domain.encode(xp)});
    if (lower[p] != -1) throw error("duplicate table row for one input pair");
    lower[p] = codomain.encode(y);
    upper[p] = codomain.encode(yp);
  }
  for (long long p = 0; p < n; ++p)
    if (lower[p] == -1)
      throw error("table misses input pair " +
                  render_point(domain, point_at(domain, p)));
  return ApproxMorphism::from_tables(domain, codomain, std::move(lower),
                                     std::move(upper));
}

Json report_to_json(const IdentityReport& report) {
  Json j;
  j["schema"] = report.schema;
  j["instance"] = report.instance;
  j["applicable"] = report.applicable;
  j["holds"] = report.holds;
  j["witness"] = report.holds || !report.applicable ? Json() : Json(report.witness);
  j["lhs"] = report.holds || !report.applicable ? Json() : Json(report.lhs_value);
  j["rhs"] = report.holds || !report.applicable ? Json() : Json(report.rhs_value);
  return j;
}

Json outcome_to_json(const VerifyOutcome& outcome) {
  Json j;
  j["schema"] = outcome.schema;
  j["mode"] = outcome.mode;
  j["seed"] = outcome.seed;
  j["instances"] = outcome.instances;
  j["inapplicable"] = outcome.inapplicable;
  j["holds"] = !outcome.counterexample.has_value();
  j["counterexample"] = outcome.counterexample
                            ? report_to_json(*outcome.counterexample)
                            : Json();
  return j;
}

Json paper_suite_to_json(const PaperSuite& suite) {
  Json rows = Json::array();
  for (const PaperRow& row : suite.rows) {
    Json r;
    r["id"] = row.id;
    r["expected"] = row.expected;
    r["actual"] = row.actual;
    r["match"] = row.match;
    rows.push_back(std::move(r));
  }
  Json j;
  j["rows"] = std::move(rows);
  j["all_match"] = suite.all_match;
  return j;
}

Json wf_to_json(const LogicProgram& program,
                const FourValuedInterpretation& wf) {
  Json j;
  j["true"] = names_json(atom_names(program, wf.lower & wf.upper));
  j["false"] = names_json(atom_names(program, program.all_atoms() & ~(wf.lower | wf.upper)));
  j["undefined"] = names_json(atom_names(program, wf.upper & ~wf.lower));
  return j;
}

Json semantics_to_json(const LogicProgram& program,
                       const SemanticsResult& result) {
  Json j;
  j["wf"] = wf_to_json(program, result.wf);
  j["stable"] = model_list_json(program, result.stable);
  j["oracle"] = model_list_json(program, result.oracle);
  j["agree"] = result.agree;
  return j;
}

}  // namespace afp

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

#include "afp/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "afp/json_io.hpp"

namespace afp::cli {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json parse_json_file(const std::string& path) {
  try {
    return Json::parse(slurp(path));
  } catch (const Json::parse_error& e) {
    throw error("invalid JSON in '" + path + "': " + e.what());
  }
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

struct GlobalOptions {
  bool json = false;
  uint64_t seed = kDefaultSeed;
  long long cap = 10'000'000;
};

int do_lattice_build(const GlobalOptions& global, const std::string& spec,
                     std::ostream& out) {
  const LatticePtr lattice = parse_lattice_spec(spec, kDefaultElementCap);
  if (global.json) {
    print_json(out, lattice_to_json(*lattice));
    return 0;
  }
  out << "lattice " << spec << ": " << lattice->size()
      << " elements, bottom=" << lattice->name(lattice->bottom())
      << ", top=" << lattice->name(lattice->top())
      << ", height=" << lattice->height() << "\n";
  return 0;
}

int do_lattice_verify(const GlobalOptions& global, const std::string& file,
                      const std::string& spec, std::ostream& out) {
  std::optional<std::string> violation;
  if (!file.empty()) {
    const FiniteLattice candidate = lattice_candidate_from_json(parse_json_file(file));
    violation = verify_lattice(candidate);
  } else {
    violation = verify_lattice(*parse_lattice_spec(spec, kDefaultElementCap));
  }
  if (global.json) {
    Json j;
    j["ok"] = !violation.has_value();
    j["violation"] = violation ? Json(*violation) : Json();
    print_json(out, j);
  } else {
    out << (violation ? "violation: " + *violation : std::string("ok")) << "\n";
  }
  return violation ? 1 : 0;
}

int do_morphism_check(const GlobalOptions& global, const std::string& file,
                      std::ostream& out) {
  const ApproxMorphism m = morphism_from_json(parse_json_file(file));
  if (global.json) {
    Json j;
    j["ok"] = true;
    j["certificate"] = to_string(m.certificate());
    print_json(out, j);
  } else {
    out << "ok: " << to_string(m.certificate()) << "\n";
  }
  return 0;
}

int do_morphism_classify(const GlobalOptions& global, const std::string& file,
                         std::ostream& out) {
  const ApproxMorphism m = morphism_from_json(parse_json_file(file));
  const SubcategoryProfile profile = classify(m);
  if (global.json) {
    Json j;
    j["consistent"] = profile.consistent;
    j["symmetric"] = profile.symmetric;
    j["a_class"] = profile.a_class;
    j["as_class"] = profile.as_class;
    print_json(out, j);
  } else {
    out << "consistent=" << (profile.consistent ? "true" : "false")
        << " symmetric=" << (profile.symmetric ? "true" : "false")
        << " a_class=" << (profile.a_class ? "true" : "false")
        << " as_class=" << (profile.as_class ? "true" : "false") << "\n";
  }
  return 0;
}

int do_wf(const GlobalOptions& global, const std::string& file,
          bool with_stable_set, std::ostream& out) {
  const ApproxMorphism m = morphism_from_json(parse_json_file(file));
  const ProductShape params = dagger_parameter_shape(m);
  const ApproxMorphism wf = well_founded(m);
  const bool terminal = params.factor_count() == 0;

  Json j;
  if (terminal) {
    const BilatticePoint value = wf({0, 0});
    j["wf"] = Json(flatten(m.codomain(), value));
    if (!global.json) out << "wf = " << render_point(m.codomain(), value) << "\n";
  } else {
    Json rows = Json::array();
    for (long long p = 0; p < pair_count(params); ++p) {
      const BilatticePoint y = point_at(params, p);
      const BilatticePoint value = wf(y);
      rows.push_back(Json::array(
          {Json(flatten(params, y)), Json(flatten(m.codomain(), value))}));
      if (!global.json)
        out << "wf" << render_point(params, y) << " = "
            << render_point(m.codomain(), value) << "\n";
    }
    j["wf"] = std::move(rows);
  }

  if (with_stable_set) {
    if (terminal) {
      Json set = Json::array();
      for (const BilatticePoint& s : stable_set(m, {0, 0})) {
        set.push_back(Json(flatten(m.codomain(), s)));
        if (!global.json)
          out << "stable: " << render_point(m.codomain(), s) << "\n";
      }
      j["stable_set"] = std::move(set);
    } else {
      Json rows = Json::array();
      for (long long p = 0; p < pair_count(params); ++p) {
        const BilatticePoint y = point_at(params, p);
        Json set = Json::array();
        for (const BilatticePoint& s : stable_set(m, y)) {
          set.push_back(Json(flatten(m.codomain(), s)));
          if (!global.json)
            out << "stable" << render_point(params, y) << ": "
                << render_point(m.codomain(), s) << "\n";
        }
        rows.push_back(Json::array({Json(flatten(params, y)), std::move(set)}));
      }
      j["stable_set"] = std::move(rows);
    }
  }
  if (global.json) print_json(out, j);
  return 0;
}

void print_outcome_text(const VerifyOutcome& outcome, std::ostream& out) {
  out << "schema=" << outcome.schema << " mode=" << outcome.mode
      << " seed=" << outcome.seed << " checked=" << outcome.instances;
  if (outcome.inapplicable > 0) out << " inapplicable=" << outcome.inapplicable;
  if (!outcome.counterexample) {
    out << " counterexample=none\n";
    return;
  }
  const IdentityReport& r = *outcome.counterexample;
  out << " counterexample=found\n";
  out << "  instance: " << r.instance << "\n";
  out << "  witness: " << r.witness_text << " lhs=" << r.lhs_text
      << " rhs=" << r.rhs_text << "\n";
}

int do_identities_run(const GlobalOptions& global, const std::string& name,
                      const std::string& lattice, const std::string& mode,
                      long long samples, bool search, std::ostream& out) {
  const auto schema = schema_from_string(name);
  if (!schema) throw error("unknown identity '" + name + "'");
  if (mode != "exhaustive" && mode != "sample")
    throw error("--mode must be exhaustive or sample");
  VerifyOptions opts;
  opts.lattice = lattice;
  opts.exhaustive = mode == "exhaustive";
  opts.seed = global.seed;
  opts.samples = samples;
  opts.cap = global.cap;
  const VerifyOutcome outcome = search ? search_counterexample(*schema, opts)
                                       : verify_identity(*schema, opts);
  if (global.json)
    print_json(out, outcome_to_json(outcome));
  else
    print_outcome_text(outcome, out);
  return outcome.counterexample ? 1 : 0;
}

int do_reproduce_paper(const GlobalOptions& global, std::ostream& out) {
  const PaperSuite suite = reproduce_paper_suite();
  if (global.json) {
    print_json(out, paper_suite_to_json(suite));
  } else {
    size_t matched = 0;
    for (const PaperRow& row : suite.rows) {
      out << row.id << ": " << (row.match ? "match" : "MISMATCH") << "\n";
      out << "  expected: " << row.expected << "\n";
      out << "  actual:   " << row.actual << "\n";
      if (row.match) ++matched;
    }
    out << matched << "/" << suite.rows.size() << " rows match\n";
  }
  return suite.all_match ? 0 : 1;
}

int do_lp(const GlobalOptions& global, const std::string& command,
          const std::string& file, std::ostream& out) {
  const LogicProgram program = parse_program(slurp(file));
  if (command == "wf") {
    const FourValuedInterpretation wf = wf_model(program);
    if (global.json) {
      Json j;
      j["wf"] = wf_to_json(program, wf);
      print_json(out, j);
    } else {
      const Json j = wf_to_json(program, wf);
      for (const char* key : {"true", "false", "undefined"})
        for (const auto& atom : j[key])
          out << atom.get<std::string>() << ": " << key << "\n";
    }
    return 0;
  }
  if (command == "stable") {
    const std::vector<AtomSet> models = stable_models_aft(program);
    if (global.json) {
      Json j;
      Json list = Json::array();
      for (AtomSet m : models) list.push_back(Json(atom_names(program, m)));
      j["stable"] = std::move(list);
      print_json(out, j);
    } else if (models.empty()) {
      out << "no stable model\n";
    } else {
      for (AtomSet m : models) {
        out << "{";
        const auto names = atom_names(program, m);
        for (size_t i = 0; i < names.size(); ++i)
          out << (i ? "," : "") << names[i];
        out << "}\n";
      }
    }
    return 0;
  }
  // analyze
  const SemanticsResult result = analyze(program);
  if (global.json) {
    print_json(out, semantics_to_json(program, result));
  } else {
    const Json j = semantics_to_json(program, result);
    out << "wf: true=" << j["wf"]["true"].dump()
        << " false=" << j["wf"]["false"].dump()
        << " undefined=" << j["wf"]["undefined"].dump() << "\n";
    out << "stable: " << j["stable"].dump() << "\n";
    out << "oracle: " << j["oracle"].dump() << "\n";
    out << "agree: " << (result.agree ? "true" : "false") << "\n";
  }
  return result.agree ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"finite-lattice toolkit for well-founded and stable fixed "
               "points of approximation pairs"};
  app.name("afp");

  GlobalOptions global;
  app.add_flag("--json", global.json, "emit JSON instead of text");
  app.add_option("--seed", global.seed, "seed for sampled modes");
  app.add_option("--cap", global.cap, "instance-space bound");

  auto* lattice_cmd = app.add_subcommand("lattice", "build and verify lattices");
  auto* lattice_build = lattice_cmd->add_subcommand("build", "construct a lattice");
  lattice_build->fallthrough();
  std::string build_spec;
  lattice_build->add_option("--lattice", build_spec,
                            "2 | chain:N | pow:N | dual:SPEC | prod:A*B")
      ->required();
  auto* lattice_verify = lattice_cmd->add_subcommand("verify", "check the lattice laws");
  lattice_verify->fallthrough();
  std::string verify_file;
  std::string verify_spec;
  lattice_verify->add_option("file", verify_file, "lattice JSON file");
  lattice_verify->add_option("--lattice", verify_spec, "lattice spec");

  auto* morphism_cmd = app.add_subcommand("morphism", "check and classify morphisms");
  auto* morphism_check = morphism_cmd->add_subcommand("check", "verify precision monotonicity");
  morphism_check->fallthrough();
  std::string check_file;
  morphism_check->add_option("file", check_file)->required();
  auto* morphism_classify = morphism_cmd->add_subcommand("classify", "subcategory profile");
  morphism_classify->fallthrough();
  std::string classify_file;
  morphism_classify->add_option("file", classify_file)->required();

  auto* wf_cmd = app.add_subcommand("wf", "well-founded fixed point of a morphism");
  wf_cmd->fallthrough();
  std::string wf_file;
  bool with_stable_set = false;
  wf_cmd->add_option("file", wf_file)->required();
  wf_cmd->add_flag("--stable-set", with_stable_set, "also list the stable fixed points");

  auto* identities_cmd = app.add_subcommand("identities", "dagger identity lab");
  auto* identities_verify = identities_cmd->add_subcommand("verify", "run one identity over its instance space");
  identities_verify->fallthrough();
  auto* identities_search = identities_cmd->add_subcommand("search", "hunt for a counterexample");
  identities_search->fallthrough();
  std::string identity_name;
  std::string identity_lattice = "2";
  std::string identity_mode = "exhaustive";
  long long identity_samples = 1000;
  for (auto* cmd : {identities_verify, identities_search}) {
    cmd->add_option("--identity", identity_name, "schema name")->required();
    cmd->add_option("--lattice", identity_lattice, "base lattice spec");
    cmd->add_option("--mode", identity_mode, "exhaustive | sample");
    cmd->add_option("--samples", identity_samples, "sample count");
  }
  auto* reproduce = identities_cmd->add_subcommand(
      "reproduce-paper", "recompute the published identity results");
  reproduce->fallthrough();

  auto* lp_cmd = app.add_subcommand("lp", "logic-program semantics");
  std::string lp_wf_file;
  std::string lp_stable_file;
  std::string lp_analyze_file;
  auto* lp_wf = lp_cmd->add_subcommand("wf", "well-founded model");
  lp_wf->fallthrough();
  lp_wf->add_option("file", lp_wf_file)->required();
  auto* lp_stable = lp_cmd->add_subcommand("stable", "stable models");
  lp_stable->fallthrough();
  lp_stable->add_option("file", lp_stable_file)->required();
  auto* lp_analyze = lp_cmd->add_subcommand("analyze", "well-founded + stable models + oracle agreement");
  lp_analyze->fallthrough();
  lp_analyze->add_option("file", lp_analyze_file)->required();

  app.require_subcommand(1);
  for (auto* cmd : {lattice_cmd, morphism_cmd, identities_cmd, lp_cmd}) {
    cmd->fallthrough();
    cmd->require_subcommand(1);
  }

  std::vector<const char*> argv;
  argv.push_back("afp");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (lattice_build->parsed()) return do_lattice_build(global, build_spec, out);
    if (lattice_verify->parsed()) {
      if (verify_file.empty() && verify_spec.empty())
        throw error("lattice verify needs a file or --lattice");
      return do_lattice_verify(global, verify_file, verify_spec, out);
    }
    if (morphism_check->parsed()) return do_morphism_check(global, check_file, out);
    if (morphism_classify->parsed())
      return do_morphism_classify(global, classify_file, out);
    if (wf_cmd->parsed()) return do_wf(global, wf_file, with_stable_set, out);
    if (identities_verify->parsed() || identities_search->parsed())
      return do_identities_run(global, identity_name, identity_lattice,
                               identity_mode, identity_samples,
                               identities_search->parsed(), out);
    if (reproduce->parsed()) return do_reproduce_paper(global, out);
    if (lp_wf->parsed()) return do_lp(global, "wf", lp_wf_file, out);
    if (lp_stable->parsed()) return do_lp(global, "stable", lp_stable_file, out);
    if (lp_analyze->parsed()) return do_lp(global, "analyze", lp_analyze_file, out);
    throw error("no subcommand given");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const not_p_monotone& e) {
    err << "NotPMonotone: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace afp::cli

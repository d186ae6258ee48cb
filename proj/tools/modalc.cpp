#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "modal/bisim.hpp"
#include "modal/complete.hpp"
#include "modal/errors.hpp"
#include "modal/flatfive.hpp"
#include "modal/formula.hpp"
#include "modal/kripke.hpp"
#include "modal/logics.hpp"
#include "modal/normalform.hpp"
#include "modal/oracle.hpp"
#include "modal/prover.hpp"

namespace {

using namespace modal;

PointedModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open model file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

VarSet split_vars(const std::string& csv) {
  VarSet out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(item);
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"modalc - satisfiability, provability and completeness for modal logics between K and S5"};
  app.require_subcommand(1);

  std::string logic_name = "k";
  std::string formula_text, model_a, model_b, vars_csv, wrt_model;
  bool want_json = false, want_witness = false, up_to_depth = false, require_sat = false;
  int states = 3, depth = 0;

  auto* parse_cmd = app.add_subcommand("parse", "parse a formula and print its negation normal form");
  parse_cmd->add_option("formula", formula_text)->required();

  auto* sat_cmd = app.add_subcommand("sat", "decide satisfiability");
  sat_cmd->add_option("--logic", logic_name);
  sat_cmd->add_option("formula", formula_text)->required();

  auto* prove_cmd = app.add_subcommand("prove", "decide provability");
  prove_cmd->add_option("--logic", logic_name);
  prove_cmd->add_option("formula", formula_text)->required();

  auto* complete_cmd = app.add_subcommand("complete", "decide completeness");
  complete_cmd->add_option("--logic", logic_name);
  complete_cmd->add_flag("--witness", want_witness, "print the distinguishing formula and witness models");
  complete_cmd->add_flag("--up-to-depth", up_to_depth, "completeness up to the formula's modal depth (K only)");
  complete_cmd->add_flag("--require-sat", require_sat, "report complete only when also satisfiable");
  complete_cmd->add_option("--wrt-model", wrt_model, "model file the formula is asserted to hold in");
  complete_cmd->add_flag("--json", want_json);
  complete_cmd->add_option("formula", formula_text)->required();

  auto* bisim_cmd = app.add_subcommand("bisim", "decide bisimilarity of two pointed models");
  bisim_cmd->add_option("model1", model_a)->required();
  bisim_cmd->add_option("model2", model_b)->required();
  bisim_cmd->add_option("--vars", vars_csv, "comparison restricted to these variables");

  auto* check_cmd = app.add_subcommand("check", "evaluate a formula at a model's point");
  check_cmd->add_option("model", model_a)->required();
  check_cmd->add_option("formula", formula_text)->required();

  auto* nf_cmd = app.add_subcommand("nf", "print the normal forms of a formula");
  nf_cmd->add_option("formula", formula_text)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "reduce provability to completeness");
  reduce_cmd->add_option("--logic", logic_name);
  reduce_cmd->add_option("--up-to-depth", depth, "target completeness up to this depth")->expected(1);
  bool reduce_depth_set = false;
  reduce_cmd->callback([&] { reduce_depth_set = reduce_cmd->count("--up-to-depth") > 0; });
  reduce_cmd->add_option("formula", formula_text)->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force enumeration oracles");
  oracle_cmd->require_subcommand(1);
  auto* o_enum = oracle_cmd->add_subcommand("enumerate", "print all models within the budget");
  o_enum->add_option("--logic", logic_name);
  o_enum->add_option("--states", states);
  o_enum->add_option("--vars", vars_csv);
  auto* o_sat = oracle_cmd->add_subcommand("sat", "satisfiability by model enumeration");
  o_sat->add_option("--logic", logic_name);
  o_sat->add_option("--states", states);
  o_sat->add_option("formula", formula_text)->required();
  auto* o_inc = oracle_cmd->add_subcommand("incomplete", "find two non-bisimilar satisfying models");
  o_inc->add_option("--logic", logic_name);
  o_inc->add_option("--states", states);
  o_inc->add_option("formula", formula_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  if (*parse_cmd) {
    std::cout << parse(formula_text).str() << "\n";
    return 0;
  }

  std::optional<Logic> parsed_logic = Logic::by_name(logic_name);
  if (!parsed_logic) throw std::invalid_argument("unknown logic: " + logic_name);
  Logic l = *parsed_logic;

  if (*sat_cmd) {
    bool yes = satisfiable(l, parse(formula_text));
    std::cout << (yes ? "satisfiable" : "unsatisfiable") << "\n";
    return yes ? 0 : 1;
  }
  if (*prove_cmd) {
    bool yes = provable(l, parse(formula_text));
    std::cout << (yes ? "provable" : "not provable") << "\n";
    return yes ? 0 : 1;
  }
  if (*complete_cmd) {
    Formula f = parse(formula_text);
    if (up_to_depth) {
      if (l.name() != "k")
        throw std::invalid_argument("--up-to-depth is only available for k");
      bool yes = complete_up_to_depth(f);
      std::cout << (yes ? "complete" : "incomplete") << "\n";
      return yes ? 0 : 1;
    }
    CompleteOptions opts;
    opts.want_witnesses = want_witness;
    Verdict v = wrt_model.empty() ? complete(l, f, opts)
                                  : complete_wrt_model(l, load_model(wrt_model), f, opts);
    bool yes = v.is_complete() && (!require_sat || satisfiable(l, f));
    if (require_sat && v.provenance == Provenance::Unsat) yes = false;
    if (want_json) {
      std::cout << verdict_to_json(v) << "\n";
    } else {
      std::cout << (yes ? "complete" : "incomplete") << "\n";
      if (want_witness && v.psi) std::cout << "psi: " << v.psi->str() << "\n";
      if (want_witness && v.witnesses) {
        std::cout << "--- witness 1 ---\n" << to_text(v.witnesses->first);
        std::cout << "--- witness 2 ---\n" << to_text(v.witnesses->second);
      }
    }
    return yes ? 0 : 1;
  }
  if (*bisim_cmd) {
    PointedModel m1 = load_model(model_a), m2 = load_model(model_b);
    VarSet p = split_vars(vars_csv);
    if (vars_csv.empty()) {
      for (const auto& v : m1.valuation) p.insert(v.begin(), v.end());
      for (const auto& v : m2.valuation) p.insert(v.begin(), v.end());
    }
    bool yes = bisimilar(m1, m2, p);
    std::cout << (yes ? "bisimilar" : "not bisimilar") << "\n";
    return yes ? 0 : 1;
  }
  if (*check_cmd) {
    bool yes = check(load_model(model_a), parse(formula_text));
    std::cout << (yes ? "true" : "false") << "\n";
    return yes ? 0 : 1;
  }
  if (*nf_cmd) {
    Formula f = parse(formula_text);
    for (const NormalForm& nf : normal_forms_of(f))
      std::cout << to_formula(nf, vars(f)).str() << "\n";
    return 0;
  }
  if (*reduce_cmd) {
    Formula f = parse(formula_text);
    Formula out = reduce_depth_set ? reduction_up_to_depth(l, f, depth)
                                   : hardness_reduction(l, f);
    std::cout << out.str() << "\n";
    return 0;
  }
  if (*o_enum) {
    int count = 0;
    for_each_model(l, {states, split_vars(vars_csv)}, [&](const PointedModel& m) {
      std::cout << "--- model " << ++count << " ---\n" << to_text(m);
      return true;
    });
    std::cout << count << " models\n";
    return 0;
  }
  if (*o_sat) {
    bool yes = brute_sat(l, parse(formula_text), states);
    std::cout << (yes ? "satisfiable" : "unsatisfiable") << "\n";
    return yes ? 0 : 1;
  }
  if (*o_inc) {
    auto pair = brute_incomplete(l, parse(formula_text), states);
    if (pair) {
      std::cout << "--- model 1 ---\n" << to_text(pair->first);
      std::cout << "--- model 2 ---\n" << to_text(pair->second);
      return 0;
    }
    std::cout << "no non-bisimilar pair within " << states << " states\n";
    return 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const modal::parse_error& e) {
    std::cerr << "parse error at offset " << e.offset() << ": " << e.what() << "\n";
    return 2;
  } catch (const modal::resource_limit_error& e) {
    std::cerr << "resource limit (" << e.module() << "): " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}

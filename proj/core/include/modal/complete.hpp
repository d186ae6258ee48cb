#pragma once

#include <string>

#include "modal/formula.hpp"
#include "modal/kripke.hpp"
#include "modal/logics.hpp"
#include "modal/verdict.hpp"

namespace modal {

struct CompleteOptions {
  /// Try to attach two witness models to Incomplete verdicts. Flat-path
  /// verdicts always have them; cc-path verdicts recover them through the
  /// brute-force oracle and omit them when the budget is exceeded.
  bool want_witnesses = false;
  int witness_budget = 3;
};

/// Completeness of f for l. Dispatch: unsatisfiable formulas are vacuously
/// Complete; 5-logics go through flat shapes; D and T are Complete exactly
/// when f has no variables; variable-free formulas are Complete for D4/S4;
/// everything else runs the cc search.
Verdict complete(const Logic& l, const Formula& f, const CompleteOptions& opts = {});

/// satisfiable(l, f) and complete(l, f) is Complete.
bool satisfiable_and_complete(const Logic& l, const Formula& f);

/// Same verdict as complete(l, f); validates that m is an l-model
/// satisfying f (std::invalid_argument otherwise) and prefers emitting m
/// as one of the witnesses on Incomplete.
Verdict complete_wrt_model(const Logic& l, const PointedModel& m, const Formula& f,
                           const CompleteOptions& opts = {});

/// Reduction from l-provability to l-completeness: /\P when the canonical
/// model of the complete formula refutes f, otherwise f -> phi_P^l in NNF.
/// provable(l, f) iff the result is complete for l. Rejects D, T and
/// variable-free inputs (std::invalid_argument).
Formula hardness_reduction(const Logic& l, const Formula& f);

/// The analogous reduction targeting completeness up to depth d, using
/// /\_{i<=d} []^i /\P for D and T and phi_P^l otherwise.
Formula reduction_up_to_depth(const Logic& l, const Formula& f, int d);

/// JSON object {verdict, psi?, witnesses?, provenance}; round-trips through
/// verdict_from_json.
std::string verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const std::string& text);

}  // namespace modal

#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "modal/formula.hpp"
#include "modal/kripke.hpp"
#include "modal/logics.hpp"

namespace modal {

/// Enumeration budget for the brute-force oracle. Enumeration covers all
/// models with 1..max_states states, every relation satisfying the logic's
/// frame conditions, every valuation over `vars`, point fixed at the first
/// state (every pointed model is isomorphic to one of this form).
struct ModelBudget {
  int max_states = 3;
  VarSet vars;
};

/// Streams all pointed l-models within the budget. Isomorphism pruning
/// (canonical adjacency encoding over point-fixing permutations) is
/// best-effort and only applied when prune_iso is set. Throws
/// resource_limit_error when the budget is infeasible.
void for_each_model(const Logic& l, const ModelBudget& budget,
                    const std::function<bool(const PointedModel&)>& visit,
                    bool prune_iso = true);

std::vector<PointedModel> enumerate_models(const Logic& l, const ModelBudget& budget,
                                           bool prune_iso = true);

/// True iff some enumerated model within n states satisfies f.
bool brute_sat(const Logic& l, const Formula& f, int n);

/// First pair of satisfying models within budget that are non-bisimilar
/// modulo vars(f); absent when none exists within the budget. Sound for
/// Incomplete always; complete relative to the documented per-logic bound.
std::optional<std::pair<PointedModel, PointedModel>> brute_incomplete(const Logic& l,
                                                                      const Formula& f,
                                                                      int n);

}  // namespace modal

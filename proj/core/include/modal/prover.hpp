#pragma once

#include <set>

#include "modal/formula.hpp"
#include "modal/logics.hpp"

namespace modal {

/// Satisfiability for l. Logics without axiom 5 run a depth-first
/// single-branch tableau (T-rule, D-rule, per-<> successors, 4-inheritance,
/// ancestor-set loop blocking for transitive logics); logics with axiom 5
/// enumerate canonical flat shapes and report nonemptiness. Results are
/// memoized per (logic, formula).
bool satisfiable(const Logic& l, const Formula& f);

/// not satisfiable(l, ~f).
bool provable(const Logic& l, const Formula& f);

/// satisfiable(l, big_and(fs)).
bool consistent(const Logic& l, const std::set<Formula>& fs);

}  // namespace modal

#pragma once

#include <optional>
#include <set>
#include <vector>

#include "modal/formula.hpp"
#include "modal/logics.hpp"
#include "modal/verdict.hpp"

namespace modal {

/// A maximally consistent subset of the governing closure: for every
/// closure member exactly one of the member and its negation belongs,
/// the boolean/T closure conditions hold, and the member set is consistent.
struct MaximalState {
  std::set<Formula> members;

  Formula theory() const;                 // th(a) = /\ a
  std::set<Formula> diamonds() const;     // D(a) = { <>x in a }
  std::set<Formula> boxes() const;        // B(a) = { []x in a }

  auto operator<=>(const MaximalState&) const = default;
};

/// All maximal states over closure(f) containing must_contain, in a
/// deterministic order (canonical member order, true-before-false). For K
/// a depth budget d restricts the governing closure to closure_at_depth(f, d).
std::vector<MaximalState> maximal_states(const Logic& l, const Formula& f,
                                         const std::set<Formula>& must_contain,
                                         std::optional<int> depth_budget = std::nullopt,
                                         int closure_cap = 24);

/// Consistent maximal states c with x in c for every []x in the parent
/// (plus []x itself for 4-logics). For K the children live one depth level
/// below the parent; a depth-0 parent yields the literal-only states.
std::vector<MaximalState> candidate_children(const Logic& l, const MaximalState& parent,
                                             const Formula& f,
                                             std::optional<int> parent_budget = std::nullopt,
                                             int closure_cap = 24);

/// The accepting branch of the search: the chain of parent states from the
/// root and the child whose <>-theory the last parent could not derive.
struct CcTrace {
  std::vector<MaximalState> parents;
  MaximalState child;
};

/// Reconstructs a distinguishing formula from an accepting branch: the
/// child theory <>-guarded by the parent theories along the branch. The
/// result is verified against the prover (both f & psi and f & ~psi
/// consistent) before being returned; verification failure throws.
Formula incompleteness_witness(const Logic& l, const Formula& f, const CcTrace& trace);

/// Deterministic depth-first realization of the completeness search for
/// l in {K, K4, D4, S4}. Complete when no branch accepts; Incomplete with
/// a verified distinguishing formula otherwise. Throws resource_limit_error
/// when the closure exceeds closure_cap members.
Verdict cc_decide(const Logic& l, const Formula& f, int closure_cap = 24);

}  // namespace modal

#pragma once

#include <compare>
#include <vector>

#include "modal/formula.hpp"
#include "modal/kripke.hpp"

namespace modal {

/// A depth-d normal form over P: a full valuation conjunct and a set of
/// depth-(d-1) children, denoting val & /\_{c} <>c & []\/children (with
/// \/{} = false, so empty children means the []false-terminated form).
/// Distinct forms of equal depth are mutually exclusive.
struct NormalForm {
  int depth = 0;
  VarSet val;
  std::vector<NormalForm> children;  // sorted, duplicate-free; all depth-1 of this

  bool operator==(const NormalForm& o) const {
    return depth == o.depth && val == o.val && children == o.children;
  }
  bool operator<(const NormalForm& o) const {
    if (depth != o.depth) return depth < o.depth;
    if (val != o.val) return val < o.val;
    return children < o.children;
  }
};

/// All members of F_P^d, canonically ordered. Guarded: |P| <= var_cap and
/// d <= depth_cap (sizes grow doubly exponentially).
std::vector<NormalForm> enumerate_forms(const VarSet& p, int d, int var_cap = 2,
                                        int depth_cap = 2);

/// The formula a form denotes over P.
Formula to_formula(const NormalForm& nf, const VarSet& p);

/// The canonical tree model a form denotes: root valuation from the form,
/// one subtree per child.
PointedModel denoted_tree(const NormalForm& nf, const VarSet& p);

/// The unique S with |-_K f <-> \/S, computed by model checking f at each
/// denoted tree. Subject to the enumeration caps.
std::vector<NormalForm> normal_forms_of(const Formula& f, int var_cap = 2,
                                        int depth_cap = 2);

/// True iff every maximal path of the form tree ends in an empty-children
/// node of positive depth (a []false guard). Depth-0 forms are never
/// grounded. Used as a cross-check completeness oracle for K.
bool grounded(const NormalForm& nf);

/// Completeness up to modal depth for K: f is unsatisfiable or has exactly
/// one normal form. Falls back to the cc route when the normal-form caps
/// are exceeded.
bool complete_up_to_depth(const Formula& f);

/// The independent route: cc_decide(K, f & []^{md(f)+1} false) is Complete.
bool complete_up_to_depth_via_cc(const Formula& f);

/// K-completeness through grounded forms: unsatisfiable, or exactly one
/// normal form and it is grounded. Cross-check oracle only.
bool k_complete_via_grounded(const Formula& f);

}  // namespace modal

#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "modal/logics.hpp"

namespace modal {

using VarSet = std::set<std::string>;

enum class Kind { Top, Bottom, Var, NegVar, And, Or, Box, Diamond };

/// Immutable formula tree in negation normal form. Negation appears only on
/// variables; surface-syntax `~`, `->`, `<->` are eliminated by the parser.
class Formula {
public:
  Formula() = default;  // empty handle; only produced by default construction

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  Formula left() const { return Formula(node_->left); }
  Formula right() const { return Formula(node_->right); }
  Formula child() const { return Formula(node_->left); }

  static Formula top();
  static Formula bottom();
  static Formula var(std::string name);
  static Formula nvar(std::string name);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula box(Formula a);
  static Formula dia(Formula a);

  /// Parseable surface form; parse(str()) reproduces the tree exactly.
  std::string str() const;

  friend int compare(const Formula& a, const Formula& b);
  bool operator==(const Formula& o) const { return compare(*this, o) == 0; }
  bool operator!=(const Formula& o) const { return compare(*this, o) != 0; }
  bool operator<(const Formula& o) const { return compare(*this, o) < 0; }

private:
  struct Node {
    Kind kind;
    std::string name;                    // Var / NegVar
    std::shared_ptr<const Node> left;    // And/Or left, Box/Diamond child
    std::shared_ptr<const Node> right;   // And/Or right
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Kind k, std::string name, const Formula& l, const Formula& r);

  std::shared_ptr<const Node> node_;
};

/// Canonical total order: structural (kind rank, then children), names
/// compared lexicographically. Fixes big_and/big_or output.
int compare(const Formula& a, const Formula& b);

/// Parse the surface grammar into NNF. Precedence: unary > & > | > ->
/// (right-assoc) > <->. Throws parse_error with a byte offset.
Formula parse(std::string_view text);

/// NNF of the negation; an involution.
Formula negate(const Formula& f);

/// Largest nesting depth of modal operators.
int md(const Formula& f);

/// Variables occurring in f.
VarSet vars(const Formula& f);

/// Subformulas of f (including f), duplicate-free.
std::set<Formula> sub(const Formula& f);

/// sub(f) together with the NNF negations of its members.
std::set<Formula> closure(const Formula& f);

/// Members of closure(f) with modal depth at most d.
std::set<Formula> closure_at_depth(const Formula& f, int d);

/// |f| = |sub(f)|: the number of distinct subformulas.
std::size_t size(const Formula& f);

/// Right-nested conjunction over the canonical order; big_and({}) = Top.
Formula big_and(const std::set<Formula>& fs);
/// Right-nested disjunction over the canonical order; big_or({}) = Bottom.
Formula big_or(const std::set<Formula>& fs);
/// Overloads keeping the caller's order.
Formula big_and(const std::vector<Formula>& fs);
Formula big_or(const std::vector<Formula>& fs);

/// Conjunction of the variables in P (Top when P is empty).
Formula conj_of_vars(const VarSet& p);

/// The canonical satisfiable complete formula for l over P, when one exists:
/// K/K4: /\P & []false; D4/S4: /\P & []/\P; any logic with axiom 5:
/// /\P & <>[]/\P. Absent for D and T with nonempty P.
std::optional<Formula> known_complete_formula(const Logic& l, const VarSet& p);

}  // namespace modal

#include "modal/prover.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "modal/flatfive.hpp"

namespace modal {

namespace {

using FormulaSet = std::set<Formula>;

struct Tableau {
  Logic l;

  bool closed(const FormulaSet& s) const {
    for (const Formula& g : s) {
      if (g.kind() == Kind::Bottom) return true;
      if (g.kind() == Kind::Var && s.count(Formula::nvar(g.name()))) return true;
    }
    return false;
  }

  // Saturate under the propositional rules and the T-rule, branching on
  // disjunctions; calls `leaf` on every fully expanded open set.
  bool saturate(FormulaSet s, const std::vector<FormulaSet>& ancestors) {
    for (;;) {
      if (closed(s)) return false;
      const Formula* pick = nullptr;
      for (const Formula& g : s) {
        if (g.kind() == Kind::And &&
            (!s.count(g.left()) || !s.count(g.right()))) {
          pick = &g;
          break;
        }
        if (g.kind() == Kind::Or && !s.count(g.left()) && !s.count(g.right())) {
          pick = &g;
          break;
        }
        if (l.has_T && g.kind() == Kind::Box && !s.count(g.child())) {
          pick = &g;
          break;
        }
      }
      if (!pick) break;
      if (pick->kind() == Kind::And) {
        s.insert(pick->left());
        s.insert(pick->right());
      } else if (pick->kind() == Kind::Box) {
        s.insert(pick->child());
      } else {
        Formula lhs = pick->left(), rhs = pick->right();
        FormulaSet branch = s;
        branch.insert(lhs);
        if (saturate(std::move(branch), ancestors)) return true;
        s.insert(rhs);
      }
    }
    return expand_successors(s, ancestors);
  }

  bool expand_successors(const FormulaSet& s, const std::vector<FormulaSet>& ancestors) {
    FormulaSet box_contents;
    std::vector<Formula> diamonds;
    for (const Formula& g : s) {
      if (g.kind() == Kind::Box) {
        box_contents.insert(g.child());
        if (l.has_4) box_contents.insert(g);
      } else if (g.kind() == Kind::Diamond) {
        diamonds.push_back(g.child());
      }
    }
    if (diamonds.empty()) {
      // Seriality is witnessed by a successor built from the box contents
      // alone. Reflexive logics need no extra successor.
      if (l.has_D && !l.has_T && !box_contents.empty())
        return successor_ok(box_contents, ancestors);
      return true;
    }
    for (const Formula& d : diamonds) {
      FormulaSet succ = box_contents;
      succ.insert(d);
      if (!successor_ok(succ, ancestors)) return false;
    }
    return true;
  }

  bool successor_ok(const FormulaSet& succ, const std::vector<FormulaSet>& ancestors) {
    if (l.has_4) {
      // Loop blocking: a successor set repeating an ancestor set closes a
      // cycle through the transitive frame and counts as open.
      for (const FormulaSet& a : ancestors)
        if (a == succ) return true;
    }
    std::vector<FormulaSet> next = ancestors;
    next.push_back(succ);
    return saturate(succ, next);
  }
};

struct Cache {
  std::mutex mu;
  std::map<std::pair<std::string, std::string>, bool> results;
};

Cache& cache() {
  static Cache c;
  return c;
}

}  // namespace

bool satisfiable(const Logic& l, const Formula& f) {
  std::pair<std::string, std::string> key{l.name(), f.str()};
  {
    std::lock_guard<std::mutex> lock(cache().mu);
    auto it = cache().results.find(key);
    if (it != cache().results.end()) return it->second;
  }
  bool result;
  if (l.has_5) {
    result = !sat_shapes(l, f).empty();
  } else {
    Tableau t{l};
    result = t.saturate({f}, {{f}});
  }
  std::lock_guard<std::mutex> lock(cache().mu);
  cache().results.emplace(std::move(key), result);
  return result;
}

bool provable(const Logic& l, const Formula& f) { return !satisfiable(l, negate(f)); }

bool consistent(const Logic& l, const std::set<Formula>& fs) {
  return satisfiable(l, big_and(fs));
}

}  // namespace modal

#include "modal/cc.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "modal/errors.hpp"
#include "modal/prover.hpp"

namespace modal {

Formula MaximalState::theory() const { return big_and(members); }

std::set<Formula> MaximalState::diamonds() const {
  std::set<Formula> out;
  for (const Formula& g : members)
    if (g.kind() == Kind::Diamond) out.insert(g);
  return out;
}

std::set<Formula> MaximalState::boxes() const {
  std::set<Formula> out;
  for (const Formula& g : members)
    if (g.kind() == Kind::Box) out.insert(g);
  return out;
}

namespace {

// Assignments over the governing closure are driven by the free slots
// (variables and modal formulas); conjunctions and disjunctions are derived
// bottom-up, so boolean coherence holds by construction.
std::vector<MaximalState> assignments_over(const Logic& l, const std::set<Formula>& govern,
                                           const std::set<Formula>& must_contain) {
  for (const Formula& g : must_contain)
    if (!govern.count(g)) return {};

  // One representative per complementary pair; variables represented
  // positively so that "true" means the variable holds.
  std::vector<Formula> slots;
  std::set<Formula> seen;
  for (const Formula& g : govern) {
    if (g.kind() == Kind::And || g.kind() == Kind::Or || g.kind() == Kind::Top ||
        g.kind() == Kind::Bottom)
      continue;
    Formula neg = negate(g);
    if (seen.count(g) || seen.count(neg)) continue;
    seen.insert(g);
    Formula rep = g;
    if (g.kind() == Kind::NegVar) rep = neg;  // variables-true-first
    slots.push_back(rep);
  }

  std::vector<MaximalState> out;
  std::size_t total = std::size_t{1} << slots.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::map<Formula, bool> value;
    for (const Formula& g : govern) {
      if (g.kind() == Kind::Top) value[g] = true;
      if (g.kind() == Kind::Bottom) value[g] = false;
    }
    for (std::size_t i = 0; i < slots.size(); ++i) {
      bool v = (mask & (std::size_t{1} << i)) == 0;  // bit clear = true
      value[slots[i]] = v;
      if (govern.count(negate(slots[i]))) value[negate(slots[i])] = !v;
    }
    // Derive And/Or values in ascending structural-size order.
    std::vector<Formula> boolean;
    for (const Formula& g : govern)
      if (g.kind() == Kind::And || g.kind() == Kind::Or) boolean.push_back(g);
    std::sort(boolean.begin(), boolean.end(),
              [](const Formula& a, const Formula& b) { return size(a) < size(b); });
    for (const Formula& g : boolean)
      value[g] = g.kind() == Kind::And ? (value.at(g.left()) && value.at(g.right()))
                                       : (value.at(g.left()) || value.at(g.right()));

    MaximalState st;
    bool ok = true;
    for (const Formula& g : govern)
      if (value.at(g)) st.members.insert(g);
    for (const Formula& g : must_contain)
      if (!st.members.count(g)) {
        ok = false;
        break;
      }
    if (ok && l.has_T) {
      for (const Formula& g : st.members)
        if (g.kind() == Kind::Box && !st.members.count(g.child())) {
          ok = false;
          break;
        }
    }
    if (ok && consistent(l, st.members)) out.push_back(std::move(st));
  }
  return out;
}

std::set<Formula> literal_language(const Formula& f) {
  std::set<Formula> out{Formula::top(), Formula::bottom()};
  for (const auto& v : vars(f)) {
    out.insert(Formula::var(v));
    out.insert(Formula::nvar(v));
  }
  return out;
}

Formula derives_diamond(const MaximalState& a, const MaximalState& c) {
  return Formula::disj(negate(a.theory()), Formula::dia(c.theory()));
}

struct Search {
  Logic l;
  Formula f;
  int closure_cap;
  std::map<std::tuple<std::set<Formula>, int, int>, bool> rejected;  // memo of rejects
  std::vector<MaximalState> parents;
  std::optional<CcTrace> found;

  bool run(const MaximalState& a, int steps, std::optional<int> budget) {
    if (steps == 0) return false;
    auto key = std::make_tuple(a.members, steps, budget.value_or(-1));
    if (rejected.count(key)) return false;

    parents.push_back(a);
    std::vector<MaximalState> cs = candidate_children(l, a, f, budget, closure_cap);
    bool accepted = false;
    for (const MaximalState& c : cs) {
      if (!provable(l, derives_diamond(a, c))) {
        found = CcTrace{parents, c};
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      std::optional<int> next_budget;
      if (budget) next_budget = std::max(0, *budget - 1);
      for (const MaximalState& c : cs) {
        if (run(c, steps - 1, next_budget)) {
          accepted = true;
          break;
        }
      }
    }
    parents.pop_back();
    if (!accepted) rejected.emplace(std::move(key), true);
    return accepted;
  }
};

}  // namespace

std::vector<MaximalState> maximal_states(const Logic& l, const Formula& f,
                                         const std::set<Formula>& must_contain,
                                         std::optional<int> depth_budget, int closure_cap) {
  std::set<Formula> full = closure(f);
  if (static_cast<int>(full.size()) > closure_cap)
    throw resource_limit_error("cc", "closure of " + std::to_string(full.size()) +
                                         " members exceeds the cap of " +
                                         std::to_string(closure_cap));
  std::set<Formula> govern =
      depth_budget ? closure_at_depth(f, *depth_budget) : std::move(full);
  return assignments_over(l, govern, must_contain);
}

std::vector<MaximalState> candidate_children(const Logic& l, const MaximalState& parent,
                                             const Formula& f,
                                             std::optional<int> parent_budget,
                                             int closure_cap) {
  std::set<Formula> must;
  for (const Formula& g : parent.members) {
    if (g.kind() != Kind::Box) continue;
    must.insert(g.child());
    if (l.has_4) must.insert(g);
  }
  if (!l.has_4 && parent_budget && *parent_budget == 0) {
    // A depth-0 parent has no modal members; its children are the
    // literal-only states over the input's variables.
    return assignments_over(l, literal_language(f), must);
  }
  std::optional<int> child_budget;
  if (!l.has_4 && parent_budget) child_budget = *parent_budget - 1;
  return maximal_states(l, f, must, child_budget, closure_cap);
}

Formula incompleteness_witness(const Logic& l, const Formula& f, const CcTrace& trace) {
  auto verified = [&](const Formula& psi) {
    return consistent(l, {f, psi}) && consistent(l, {f, negate(psi)});
  };
  // Child theory guarded by the parent theories along the branch (the root
  // parent is implied by f itself and omitted).
  Formula guarded = Formula::dia(trace.child.theory());
  for (std::size_t i = trace.parents.size(); i-- > 1;)
    guarded = Formula::dia(Formula::conj(trace.parents[i].theory(), guarded));
  if (verified(guarded)) return guarded;

  // Unguarded fallback: the child theory under plain <>-nesting.
  Formula plain = trace.child.theory();
  for (std::size_t i = 0; i < trace.parents.size(); ++i) plain = Formula::dia(plain);
  if (verified(plain)) return plain;

  for (const Formula& g : closure(f))
    if (verified(g)) return g;
  throw std::logic_error("incompleteness_witness: no verified distinguishing formula");
}

Verdict cc_decide(const Logic& l, const Formula& f, int closure_cap) {
  std::optional<int> root_budget;
  if (!l.has_4) root_budget = md(f);
  std::vector<MaximalState> init = maximal_states(l, f, {f}, root_budget, closure_cap);

  Verdict v;
  v.provenance = Provenance::Cc;
  if (init.empty()) {
    v.outcome = Outcome::Complete;  // unsatisfiable input is vacuously complete
    return v;
  }
  if (init.size() >= 2) {
    v.outcome = Outcome::Incomplete;
    // Two distinct maximal states disagree on some closure member.
    for (const Formula& g : init[0].members) {
      if (!init[1].members.count(g)) {
        if (consistent(l, {f, g}) && consistent(l, {f, negate(g)})) {
          v.psi = g;
          break;
        }
      }
    }
    if (!v.psi) throw std::logic_error("cc_decide: no verified initial distinction");
    return v;
  }

  Search search{l, f, closure_cap};
  int steps = static_cast<int>(size(f)) + 2;
  if (search.run(init[0], steps, root_budget)) {
    v.outcome = Outcome::Incomplete;
    v.psi = incompleteness_witness(l, f, *search.found);
  } else {
    v.outcome = Outcome::Complete;
  }
  return v;
}

}  // namespace modal

#include "modal/flatfive.hpp"

#include <cassert>
#include <map>
#include <stdexcept>

#include "modal/errors.hpp"

namespace modal {

bool shape_valid(const FlatShape& sh, const Logic& l) {
  for (const auto& v : sh.succ)
    if (!sh.cluster.count(v)) return false;
  if (sh.succ.empty() != sh.cluster.empty()) return false;  // reachability
  if ((l.has_D || l.has_T) && sh.cluster.empty()) return false;
  if (l.has_T && (!sh.cluster.count(sh.root) || sh.succ != sh.cluster)) return false;
  // Transitivity: the root's successor set must be closed under the cluster
  // relation, which is total, so it must be the whole cluster.
  if (l.has_4 && !l.has_T && !sh.cluster.empty() && sh.succ != sh.cluster) return false;
  return true;
}

PointedModel realize(const FlatShape& sh, const Logic& l) {
  if (!shape_valid(sh, l))
    throw std::invalid_argument("flat shape violates the invariants of " + l.name());
  PointedModel m;
  std::map<VarSet, int> cluster_state;
  for (const auto& v : sh.cluster) {
    cluster_state[v] = static_cast<int>(m.state_names.size());
    m.state_names.push_back("w" + std::to_string(m.state_names.size()));
    m.valuation.push_back(v);
  }
  for (const auto& [v1, s1] : cluster_state)
    for (const auto& [v2, s2] : cluster_state) m.edges.insert({s1, s2});
  if (l.has_T) {
    m.point = cluster_state.at(sh.root);
  } else {
    m.point = static_cast<int>(m.state_names.size());
    m.state_names.push_back("s");
    m.valuation.push_back(sh.root);
    for (const auto& v : sh.succ) m.edges.insert({m.point, cluster_state.at(v)});
  }
  return m;
}

namespace {

std::vector<VarSet> all_valuations(const VarSet& p) {
  std::vector<std::string> names(p.begin(), p.end());
  std::vector<VarSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << names.size()); ++mask) {
    VarSet v;
    for (std::size_t i = 0; i < names.size(); ++i)
      if (mask & (std::size_t{1} << i)) v.insert(names[i]);
    out.push_back(std::move(v));
  }
  return out;
}

Formula valuation_formula(const VarSet& v, const VarSet& p) {
  std::set<Formula> lits;
  for (const auto& x : p) lits.insert(v.count(x) ? Formula::var(x) : Formula::nvar(x));
  return big_and(lits);
}

}  // namespace

std::vector<FlatShape> enumerate_shapes(const Logic& l, const VarSet& p, int var_cap) {
  if (static_cast<int>(p.size()) > var_cap)
    throw resource_limit_error("flatfive",
                               "shape enumeration over " + std::to_string(p.size()) +
                                   " variables exceeds the cap of " + std::to_string(var_cap));
  std::vector<VarSet> vals = all_valuations(p);
  std::size_t k = vals.size();
  std::vector<FlatShape> out;
  for (const auto& root : vals) {
    for (std::size_t cmask = 0; cmask < (std::size_t{1} << k); ++cmask) {
      std::set<VarSet> cluster;
      for (std::size_t i = 0; i < k; ++i)
        if (cmask & (std::size_t{1} << i)) cluster.insert(vals[i]);
      if (l.has_4 || l.has_T) {
        // succ is forced to equal the cluster; skip the inner loop.
        FlatShape sh{root, cluster, cluster};
        if (shape_valid(sh, l)) out.push_back(std::move(sh));
        continue;
      }
      for (std::size_t smask = 0; smask < (std::size_t{1} << k); ++smask) {
        if ((smask & cmask) != smask) continue;  // succ within cluster only
        std::set<VarSet> succ;
        for (std::size_t i = 0; i < k; ++i)
          if (smask & (std::size_t{1} << i)) succ.insert(vals[i]);
        FlatShape sh{root, cluster, std::move(succ)};
        if (shape_valid(sh, l)) out.push_back(std::move(sh));
      }
    }
  }
  return out;
}

std::vector<FlatShape> sat_shapes(const Logic& l, const Formula& f, int var_cap) {
  assert(l.has_5);
  std::vector<FlatShape> out;
  for (FlatShape& sh : enumerate_shapes(l, vars(f), var_cap))
    if (check(realize(sh, l), f)) out.push_back(std::move(sh));
  return out;
}

Verdict flat_complete(const Logic& l, const Formula& f, int var_cap) {
  std::vector<FlatShape> shapes = sat_shapes(l, f, var_cap);
  if (shapes.size() <= 1) {
    Verdict v;
    v.outcome = Outcome::Complete;
    v.provenance = shapes.empty() ? Provenance::Unsat : Provenance::Flat;
    return v;
  }

  const FlatShape& a = shapes[0];
  const FlatShape& b = shapes[1];
  VarSet p = vars(f);
  std::optional<Formula> psi;
  // Distinguish per the three flat-bisimilarity cases: root valuation,
  // then successor valuations, then cluster valuations.
  for (const auto& x : p) {
    if (a.root.count(x) != b.root.count(x)) {
      psi = Formula::var(x);
      break;
    }
  }
  if (!psi) {
    for (const auto& [mine, other] : {std::pair{&a.succ, &b.succ}, {&b.succ, &a.succ}}) {
      for (const auto& v : *mine)
        if (!other->count(v)) {
          psi = Formula::dia(valuation_formula(v, p));
          break;
        }
      if (psi) break;
    }
  }
  if (!psi) {
    for (const auto& [mine, other] :
         {std::pair{&a.cluster, &b.cluster}, {&b.cluster, &a.cluster}}) {
      for (const auto& v : *mine)
        if (!other->count(v)) {
          psi = Formula::dia(Formula::dia(valuation_formula(v, p)));
          break;
        }
      if (psi) break;
    }
  }

  Verdict v;
  v.outcome = Outcome::Incomplete;
  v.provenance = Provenance::Flat;
  v.witnesses = {realize(a, l), realize(b, l)};
  if (!psi || check(v.witnesses->first, *psi) == check(v.witnesses->second, *psi))
    throw std::logic_error("flat_complete: distinguishing formula construction failed");
  v.psi = *psi;
  return v;
}

FlatShape shape_of(const PointedModel& m, const VarSet& p) {
  auto restrict_p = [&p](const VarSet& v) {
    VarSet out;
    for (const auto& x : v)
      if (p.count(x)) out.insert(x);
    return out;
  };
  FlatShape sh;
  sh.root = restrict_p(m.valuation[m.point]);
  for (int b : m.successors(m.point)) sh.succ.insert(restrict_p(m.valuation[b]));
  // States reachable in one or more steps: union of reach over successors.
  std::set<int> beyond;
  for (int b : m.successors(m.point)) {
    auto r = reach(m, b);
    beyond.insert(r.begin(), r.end());
  }
  for (int s : beyond) sh.cluster.insert(restrict_p(m.valuation[s]));
  return sh;
}

}  // namespace modal

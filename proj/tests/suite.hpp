#pragma once

#include <random>
#include <set>
#include <vector>

#include "modal/formula.hpp"
#include "modal/kripke.hpp"
#include "modal/logics.hpp"

namespace testsuite {

using namespace modal;

/// Every NNF formula over p whose closure has at most max_closure members
/// and whose modal depth is at most max_md. Closed construction: both
/// bounds are monotone, so a fixpoint over the connectives is exhaustive.
inline std::vector<Formula> exhaustive_suite(const VarSet& p, std::size_t max_closure = 6,
                                             int max_md = 2) {
  std::set<Formula> pool;
  auto admit = [&](const Formula& f) {
    if (md(f) > max_md || closure(f).size() > max_closure) return false;
    return pool.insert(f).second;
  };
  admit(Formula::top());
  admit(Formula::bottom());
  for (const auto& v : p) {
    admit(Formula::var(v));
    admit(Formula::nvar(v));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Formula> snapshot(pool.begin(), pool.end());
    for (const Formula& a : snapshot) {
      if (admit(Formula::box(a))) grew = true;
      if (admit(Formula::dia(a))) grew = true;
      for (const Formula& b : snapshot) {
        if (admit(Formula::conj(a, b))) grew = true;
        if (admit(Formula::disj(a, b))) grew = true;
      }
    }
  }
  return {pool.begin(), pool.end()};
}

/// Uniform-ish random pointed model over `vars` with exactly n states.
inline PointedModel random_model(int n, const VarSet& vars, std::mt19937& rng,
                                 double edge_prob = 0.15) {
  PointedModel m;
  std::bernoulli_distribution edge(edge_prob), val(0.5);
  for (int i = 0; i < n; ++i) {
    m.state_names.push_back("w" + std::to_string(i));
    VarSet v;
    for (const auto& name : vars)
      if (val(rng)) v.insert(name);
    m.valuation.push_back(v);
  }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (edge(rng)) m.edges.insert({u, v});
  m.point = 0;
  return m;
}

/// Repairs m's relation into a frame for l by closing under the logic's
/// frame conditions until the literal checks pass.
inline void close_into_frame(PointedModel& m, const Logic& l) {
  int n = m.num_states();
  bool changed = true;
  while (changed) {
    changed = false;
    if (l.has_T)
      for (int w = 0; w < n; ++w) changed |= m.edges.insert({w, w}).second;
    if (l.has_D)
      for (int w = 0; w < n; ++w) {
        bool has = false;
        for (int v = 0; v < n && !has; ++v) has = m.edges.count({w, v});
        if (!has) changed |= m.edges.insert({w, w}).second;
      }
    if (l.has_4)
      for (auto [a, b] : std::set<std::pair<int, int>>(m.edges))
        for (int c = 0; c < n; ++c)
          if (m.edges.count({b, c})) changed |= m.edges.insert({a, c}).second;
    if (l.has_5)
      for (auto [a, b] : std::set<std::pair<int, int>>(m.edges))
        for (int c = 0; c < n; ++c)
          if (m.edges.count({a, c})) changed |= m.edges.insert({b, c}).second;
  }
}

}  // namespace testsuite

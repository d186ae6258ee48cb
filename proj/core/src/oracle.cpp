#include "modal/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "modal/bisim.hpp"
#include "modal/errors.hpp"

namespace modal {

namespace {

using Shape = std::pair<std::set<std::pair<int, int>>, std::vector<VarSet>>;

// Minimal encoding over all relabelings that keep the point at state 0.
Shape canonical_shape(int n, const std::set<std::pair<int, int>>& edges,
                      const std::vector<VarSet>& val) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<Shape> best;
  do {
    if (perm[0] != 0) continue;
    Shape s;
    for (auto [u, v] : edges) s.first.insert({perm[u], perm[v]});
    s.second.resize(n);
    for (int w = 0; w < n; ++w) s.second[perm[w]] = val[w];
    if (!best || s < *best) best = std::move(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

}  // namespace

void for_each_model(const Logic& l, const ModelBudget& budget,
                    const std::function<bool(const PointedModel&)>& visit,
                    bool prune_iso) {
  int nv = static_cast<int>(budget.vars.size());
  std::vector<std::string> names(budget.vars.begin(), budget.vars.end());
  for (int n = 1; n <= budget.max_states; ++n) {
    int bits = n * n + n * nv;
    if (bits > 22)
      throw resource_limit_error("oracle", std::to_string(n) + " states over " +
                                               std::to_string(nv) +
                                               " variables is infeasible");
    std::set<Shape> seen;
    for (std::uint64_t rel = 0; rel < (std::uint64_t{1} << (n * n)); ++rel) {
      std::set<std::pair<int, int>> edges;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (rel & (std::uint64_t{1} << (u * n + v))) edges.insert({u, v});
      if (!is_frame_for(n, edges, l)) continue;
      for (std::uint64_t vm = 0; vm < (std::uint64_t{1} << (n * nv)); ++vm) {
        std::vector<VarSet> val(n);
        for (int w = 0; w < n; ++w)
          for (int i = 0; i < nv; ++i)
            if (vm & (std::uint64_t{1} << (w * nv + i))) val[w].insert(names[i]);
        if (prune_iso && !seen.insert(canonical_shape(n, edges, val)).second) continue;
        PointedModel m;
        for (int w = 0; w < n; ++w) m.state_names.push_back("w" + std::to_string(w));
        m.edges = edges;
        m.valuation = val;
        m.point = 0;
        if (!visit(m)) return;
      }
    }
  }
}

std::vector<PointedModel> enumerate_models(const Logic& l, const ModelBudget& budget,
                                           bool prune_iso) {
  std::vector<PointedModel> out;
  for_each_model(l, budget,
                 [&](const PointedModel& m) {
                   out.push_back(m);
                   return true;
                 },
                 prune_iso);
  return out;
}

bool brute_sat(const Logic& l, const Formula& f, int n) {
  bool found = false;
  for_each_model(l, {n, vars(f)}, [&](const PointedModel& m) {
    if (check(m, f)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

std::optional<std::pair<PointedModel, PointedModel>> brute_incomplete(const Logic& l,
                                                                      const Formula& f,
                                                                      int n) {
  VarSet p = vars(f);
  std::vector<PointedModel> reps;  // one per bisimilarity class seen so far
  std::optional<std::pair<PointedModel, PointedModel>> found;
  for_each_model(l, {n, p}, [&](const PointedModel& m) {
    if (!check(m, f)) return true;
    for (const PointedModel& r : reps)
      if (bisimilar(r, m, p)) return true;
    if (!reps.empty()) {
      found = {reps.front(), m};
      return false;
    }
    reps.push_back(m);
    return true;
  });
  return found;
}

}  // namespace modal

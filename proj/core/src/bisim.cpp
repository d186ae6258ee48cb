#include "modal/bisim.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <vector>

namespace modal {

namespace {

// Disjoint union of the two models; states of m2 are shifted by |m1|.
struct Union {
  int n = 0;
  std::vector<std::vector<int>> succ;
  std::vector<std::vector<int>> pred;
  std::vector<VarSet> val;  // restricted to P
  int point1 = 0, point2 = 0;

  Union(const PointedModel& m1, const PointedModel& m2, const VarSet& p) {
    int n1 = static_cast<int>(m1.num_states());
    n = n1 + static_cast<int>(m2.num_states());
    succ.resize(n);
    pred.resize(n);
    val.resize(n);
    auto restrict_p = [&p](const VarSet& v) {
      VarSet out;
      for (const auto& x : v)
        if (p.count(x)) out.insert(x);
      return out;
    };
    for (int s = 0; s < n1; ++s) val[s] = restrict_p(m1.valuation[s]);
    for (std::size_t s = 0; s < m2.num_states(); ++s)
      val[n1 + static_cast<int>(s)] = restrict_p(m2.valuation[s]);
    for (auto [a, b] : m1.edges) {
      succ[a].push_back(b);
      pred[b].push_back(a);
    }
    for (auto [a, b] : m2.edges) {
      succ[n1 + a].push_back(n1 + b);
      pred[n1 + b].push_back(n1 + a);
    }
    point1 = m1.point;
    point2 = n1 + m2.point;
  }
};

}  // namespace

bool bisimilar(const PointedModel& m1, const PointedModel& m2, const VarSet& p) {
  Union u(m1, m2, p);

  // Initial partition groups states by P-restricted valuation.
  std::vector<int> block_of(u.n);
  {
    std::map<VarSet, int> ids;
    for (int s = 0; s < u.n; ++s) {
      auto [it, fresh] = ids.emplace(u.val[s], static_cast<int>(ids.size()));
      block_of[s] = it->second;
    }
  }
  int num_blocks = 0;
  for (int s = 0; s < u.n; ++s) num_blocks = std::max(num_blocks, block_of[s] + 1);

  // Splitter worklist: refine every block against "can reach the splitter".
  // Refinement never merges blocks; stabilizes in at most n rounds.
  std::deque<int> worklist;
  std::vector<bool> queued(u.n + 1, false);
  for (int b = 0; b < num_blocks; ++b) {
    worklist.push_back(b);
    queued[b] = true;
  }
  while (!worklist.empty()) {
    int splitter = worklist.front();
    worklist.pop_front();
    queued[splitter] = false;

    std::vector<bool> hits(u.n, false);
    for (int s = 0; s < u.n; ++s)
      if (block_of[s] == splitter)
        for (int q : u.pred[s]) hits[q] = true;

    // Split each block into (hits, misses); misses keep the old id.
    std::map<int, std::pair<std::vector<int>, std::vector<int>>> parts;
    for (int s = 0; s < u.n; ++s)
      (hits[s] ? parts[block_of[s]].first : parts[block_of[s]].second).push_back(s);
    for (auto& [b, part] : parts) {
      auto& [in, out] = part;
      if (in.empty() || out.empty()) continue;
      int fresh = num_blocks++;
      queued.resize(num_blocks, false);
      for (int s : in) block_of[s] = fresh;
      for (int affected : {b, fresh}) {
        if (!queued[affected]) {
          worklist.push_back(affected);
          queued[affected] = true;
        }
      }
    }
  }
  return block_of[u.point1] == block_of[u.point2];
}

bool naive_bisimilar(const PointedModel& m1, const PointedModel& m2, const VarSet& p) {
  Union u(m1, m2, p);
  // Relation over the union; start from valuation agreement, shave off
  // pairs violating the forth/back clauses until fixpoint.
  std::vector<std::vector<bool>> rel(u.n, std::vector<bool>(u.n, false));
  for (int a = 0; a < u.n; ++a)
    for (int b = 0; b < u.n; ++b) rel[a][b] = (u.val[a] == u.val[b]);

  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < u.n; ++a)
      for (int b = 0; b < u.n; ++b) {
        if (!rel[a][b]) continue;
        auto matched = [&](int from, const std::vector<int>& candidates, bool forward) {
          for (int c : candidates)
            if (forward ? rel[from][c] : rel[c][from]) return true;
          return false;
        };
        bool ok = true;
        for (int a2 : u.succ[a])
          if (!matched(a2, u.succ[b], true)) {
            ok = false;
            break;
          }
        if (ok)
          for (int b2 : u.succ[b])
            if (!matched(b2, u.succ[a], false)) {
              ok = false;
              break;
            }
        if (!ok) {
          rel[a][b] = false;
          changed = true;
        }
      }
  }
  return rel[u.point1][u.point2];
}

}  // namespace modal

#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "modal/formula.hpp"
#include "modal/logics.hpp"

namespace modal {

/// Finite Kripke model with a distinguished state. States are opaque
/// strings; operations never depend on the naming. Variables not listed in
/// a state's valuation are false there.
struct PointedModel {
  std::vector<std::string> state_names;
  std::set<std::pair<int, int>> edges;
  std::vector<VarSet> valuation;
  int point = 0;

  std::size_t num_states() const { return state_names.size(); }
  /// |M| = |W| + |R|.
  std::size_t model_size() const { return state_names.size() + edges.size(); }
  int index_of(const std::string& name) const;  // -1 when absent
  std::vector<int> successors(int s) const;
};

/// Truth of f at m.point under the standard semantics.
bool check(const PointedModel& m, const Formula& f);

/// Smallest set containing x and closed under edges.
std::set<int> reach(const PointedModel& m, int x);

/// Submodel induced on reach(m, m.point); bisimilar to m at the point.
PointedModel restrict_to_reachable(const PointedModel& m);

bool is_frame_for(const PointedModel& m, const Logic& l);

/// Model text format, one directive per line, '#' starts a comment:
///   states: a b c
///   edges: a->b b->c
///   val: a p q
///   point: a
/// Duplicate directives (states/point twice, or two val lines for one
/// state) are errors; unlisted states have empty valuation.
PointedModel parse_model(const std::string& text);
std::string to_text(const PointedModel& m);

}  // namespace modal

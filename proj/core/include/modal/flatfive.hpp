#pragma once

#include <set>
#include <vector>

#include "modal/formula.hpp"
#include "modal/kripke.hpp"
#include "modal/logics.hpp"
#include "modal/verdict.hpp"

namespace modal {

/// Canonical representative of a (reachable) flat pointed model modulo P:
/// the root valuation, the valuations occurring in the cluster, and the
/// valuations of the root's direct successors. Bisimilarity between flat
/// models depends on these three sets only, so shapes index satisfying
/// models of 5-logics up to bisimulation.
struct FlatShape {
  VarSet root;
  std::set<VarSet> cluster;
  std::set<VarSet> succ;

  auto operator<=>(const FlatShape&) const = default;
};

/// Invariants a shape must satisfy to be realizable as an l-model:
/// succ subset of cluster; succ empty iff cluster empty; D or T force a
/// nonempty cluster; T forces root in cluster and succ == cluster; 4 forces
/// succ == cluster (the root's successor set must be closed under the
/// cluster relation for transitivity).
bool shape_valid(const FlatShape& sh, const Logic& l);

/// One state per cluster valuation, fully related among themselves, plus a
/// root (distinct unless the logic has T) with edges to the successor
/// states. The result passes is_frame_for(., l). Throws std::invalid_argument
/// on shapes violating the logic's invariants.
PointedModel realize(const FlatShape& sh, const Logic& l);

/// All valid shapes for l over the variable set P. Throws
/// resource_limit_error when |P| exceeds var_cap.
std::vector<FlatShape> enumerate_shapes(const Logic& l, const VarSet& p, int var_cap = 6);

/// Shapes over vars(f) whose realization satisfies f at the root. Nonempty
/// iff f is l-satisfiable. Requires l.has_5.
std::vector<FlatShape> sat_shapes(const Logic& l, const Formula& f, int var_cap = 6);

/// Complete iff at most one shape satisfies f; otherwise Incomplete with
/// two realized witnesses and a distinguishing formula (a root variable, a
/// <>-guarded successor valuation, or a <><>-guarded cluster valuation).
Verdict flat_complete(const Logic& l, const Formula& f, int var_cap = 6);

/// The shape read off the reachable part of an l-model: root valuation,
/// valuations of direct successors, valuations of states reachable in one
/// or more steps.
FlatShape shape_of(const PointedModel& m, const VarSet& p);

}  // namespace modal

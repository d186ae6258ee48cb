#pragma once

#include "modal/kripke.hpp"

namespace modal {

/// Decides (m1, point1) ~_P (m2, point2) by computing the coarsest stable
/// partition of the disjoint union (partition refinement with a splitter
/// worklist) and testing whether the two points share a block.
bool bisimilar(const PointedModel& m1, const PointedModel& m2, const VarSet& p);

/// Slow oracle: greatest-fixpoint computation by iterated removal of pairs
/// violating the bisimulation clauses. Same answer as bisimilar.
bool naive_bisimilar(const PointedModel& m1, const PointedModel& m2, const VarSet& p);

}  // namespace modal

#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace modal {

/// One of the normal modal logics between K and S5, identified by its
/// axiom flags. Canonical names: k, d, t, k4, d4, s4, k5, kd5, kt5 (alias
/// of s5), k45, kd45, s5.
struct Logic {
  bool has_D = false;
  bool has_T = false;
  bool has_4 = false;
  bool has_5 = false;

  static std::optional<Logic> by_name(const std::string& name);
  std::string name() const;

  bool operator==(const Logic& o) const = default;
};

enum class FrameCond { Serial, Reflexive, Transitive, Euclidean };

/// Exactly the conditions induced by the logic's axioms:
/// D -> serial, T -> reflexive, 4 -> transitive, 5 -> euclidean.
std::set<FrameCond> frame_conditions(const Logic& l);

/// Literal universally-quantified checks over R; no closure is taken.
bool is_frame_for(std::size_t n_states, const std::set<std::pair<int, int>>& edges,
                  const Logic& l);

/// All twelve canonical logics (kt5 folded into s5), for test sweeps.
std::vector<Logic> all_logics();

}  // namespace modal

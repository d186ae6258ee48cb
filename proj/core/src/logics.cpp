#include "modal/logics.hpp"

namespace modal {

std::optional<Logic> Logic::by_name(const std::string& name) {
  if (name == "k") return Logic{};
  if (name == "d") return Logic{.has_D = true};
  if (name == "t") return Logic{.has_T = true};
  if (name == "k4") return Logic{.has_4 = true};
  if (name == "d4") return Logic{.has_D = true, .has_4 = true};
  if (name == "s4") return Logic{.has_T = true, .has_4 = true};
  if (name == "k5") return Logic{.has_5 = true};
  if (name == "kd5") return Logic{.has_D = true, .has_5 = true};
  if (name == "k45") return Logic{.has_4 = true, .has_5 = true};
  if (name == "kd45") return Logic{.has_D = true, .has_4 = true, .has_5 = true};
  if (name == "s5" || name == "kt5")
    return Logic{.has_T = true, .has_4 = true, .has_5 = true};
  return std::nullopt;
}

std::string Logic::name() const {
  if (has_5) {
    if (has_T) return "s5";
    if (has_D) return has_4 ? "kd45" : "kd5";
    return has_4 ? "k45" : "k5";
  }
  if (has_T) return has_4 ? "s4" : "t";
  if (has_D) return has_4 ? "d4" : "d";
  return has_4 ? "k4" : "k";
}

std::set<FrameCond> frame_conditions(const Logic& l) {
  std::set<FrameCond> out;
  if (l.has_D) out.insert(FrameCond::Serial);
  if (l.has_T) out.insert(FrameCond::Reflexive);
  if (l.has_4) out.insert(FrameCond::Transitive);
  if (l.has_5) out.insert(FrameCond::Euclidean);
  return out;
}

bool is_frame_for(std::size_t n_states, const std::set<std::pair<int, int>>& edges,
                  const Logic& l) {
  auto has = [&edges](int a, int b) { return edges.count({a, b}) != 0; };
  int n = static_cast<int>(n_states);
  for (FrameCond c : frame_conditions(l)) {
    switch (c) {
      case FrameCond::Serial:
        for (int a = 0; a < n; ++a) {
          bool found = false;
          for (int b = 0; b < n && !found; ++b) found = has(a, b);
          if (!found) return false;
        }
        break;
      case FrameCond::Reflexive:
        for (int a = 0; a < n; ++a)
          if (!has(a, a)) return false;
        break;
      case FrameCond::Transitive:
        for (auto [a, b] : edges)
          for (auto [b2, c2] : edges)
            if (b == b2 && !has(a, c2)) return false;
        break;
      case FrameCond::Euclidean:
        for (auto [a, b] : edges)
          for (auto [a2, c2] : edges)
            if (a == a2 && !has(b, c2)) return false;
        break;
    }
  }
  return true;
}

std::vector<Logic> all_logics() {
  std::vector<Logic> out;
  for (const char* n : {"k", "d", "t", "k4", "d4", "s4", "k5", "kd5", "k45", "kd45", "s5"})
    out.push_back(*Logic::by_name(n));
  return out;
}

}  // namespace modal

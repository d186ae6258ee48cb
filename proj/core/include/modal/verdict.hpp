#pragma once

#include <optional>
#include <utility>

#include "modal/formula.hpp"
#include "modal/kripke.hpp"

namespace modal {

enum class Outcome { Complete, Incomplete };
enum class Provenance { Triviality, Flat, Cc, Unsat };

/// Result of a completeness decision. Incomplete verdicts always carry a
/// distinguishing formula psi with both f & psi and f & ~psi satisfiable;
/// witness models, when present, both satisfy f and are non-bisimilar
/// modulo vars(f).
struct Verdict {
  Outcome outcome = Outcome::Complete;
  std::optional<Formula> psi;
  std::optional<std::pair<PointedModel, PointedModel>> witnesses;
  Provenance provenance = Provenance::Triviality;

  bool is_complete() const { return outcome == Outcome::Complete; }
};

}  // namespace modal

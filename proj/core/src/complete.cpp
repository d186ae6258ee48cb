#include "modal/complete.hpp"

#include <cstdint>
#include <stdexcept>

#include "json.hpp"
#include "modal/bisim.hpp"
#include "modal/cc.hpp"
#include "modal/errors.hpp"
#include "modal/flatfive.hpp"
#include "modal/oracle.hpp"
#include "modal/prover.hpp"

namespace modal {

namespace {

bool pure_dt(const Logic& l) { return (l.has_D || l.has_T) && !l.has_4 && !l.has_5; }

// One-state model every formula complete for l is realized in: a dead end
// for K and K4, a reflexive loop for everything else.
PointedModel canonical_point(const Logic& l, const VarSet& p) {
  PointedModel m;
  m.state_names.push_back("w0");
  m.valuation.push_back(p);
  m.point = 0;
  if (l.has_D || l.has_T || l.has_5) m.edges.insert({0, 0});
  return m;
}

void attach_witnesses(const Logic& l, const Formula& f, Verdict& v,
                      const CompleteOptions& opts) {
  if (!opts.want_witnesses || v.outcome != Outcome::Incomplete || v.witnesses) return;
  try {
    v.witnesses = brute_incomplete(l, f, opts.witness_budget);
  } catch (const resource_limit_error&) {
  }
}

}  // namespace

Verdict complete(const Logic& l, const Formula& f, const CompleteOptions& opts) {
  Verdict v;
  if (!satisfiable(l, f)) {
    v.outcome = Outcome::Complete;
    v.provenance = Provenance::Unsat;
    return v;
  }
  if (l.has_5) {
    v = flat_complete(l, f);
    return v;
  }
  VarSet p = vars(f);
  if (pure_dt(l)) {
    v.provenance = Provenance::Triviality;
    if (p.empty()) {
      v.outcome = Outcome::Complete;
      return v;
    }
    // Any serial model of f keeps branching past its modal depth, so some
    // literal pattern along a length-(md+1) path is left open. Reflexivity
    // can leak plain <>^j literals back into f's depth, so search guarded
    // chains <>(l1 & <>(l2 & ... <>lk)) instead, longest first.
    std::optional<Formula> psi;
    for (int k = md(f) + 1; k >= 1 && !psi; --k) {
      for (const auto& name : p) {
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k) && !psi; ++mask) {
          Formula cand = mask & 1u ? Formula::nvar(name) : Formula::var(name);
          for (int i = 1; i < k; ++i) {
            Formula lit = mask & (std::uint32_t{1} << i) ? Formula::nvar(name)
                                                         : Formula::var(name);
            cand = Formula::conj(lit, Formula::dia(cand));
          }
          cand = Formula::dia(cand);
          if (consistent(l, {f, cand}) && consistent(l, {f, negate(cand)})) psi = cand;
        }
        if (psi) break;
      }
    }
    if (!psi)
      throw std::logic_error("complete: unverified distinction for a serial logic");
    v.outcome = Outcome::Incomplete;
    v.psi = *psi;
    attach_witnesses(l, f, v, opts);
    return v;
  }
  if (l.has_4 && (l.has_D || l.has_T) && p.empty()) {
    v.outcome = Outcome::Complete;
    v.provenance = Provenance::Triviality;
    return v;
  }
  v = cc_decide(l, f);
  attach_witnesses(l, f, v, opts);
  return v;
}

bool satisfiable_and_complete(const Logic& l, const Formula& f) {
  return satisfiable(l, f) && complete(l, f).is_complete();
}

Verdict complete_wrt_model(const Logic& l, const PointedModel& m, const Formula& f,
                           const CompleteOptions& opts) {
  if (!is_frame_for(m, l)) throw std::invalid_argument("model is not a frame for " + l.name());
  if (!check(m, f)) throw std::invalid_argument("model does not satisfy the formula");
  Verdict v = complete(l, f, opts);
  if (v.outcome == Outcome::Incomplete && v.psi) {
    bool at_m = check(m, *v.psi);
    std::optional<PointedModel> other;
    if (v.witnesses) {
      if (check(v.witnesses->first, *v.psi) != at_m) other = v.witnesses->first;
      else if (check(v.witnesses->second, *v.psi) != at_m) other = v.witnesses->second;
    }
    if (!other) {
      VarSet p = vars(f);
      for (const auto& extra : vars(*v.psi)) p.insert(extra);
      try {
        for_each_model(l, {opts.witness_budget, p}, [&](const PointedModel& cand) {
          if (check(cand, f) && check(cand, *v.psi) != at_m) {
            other = cand;
            return false;
          }
          return true;
        });
      } catch (const resource_limit_error&) {
      }
    }
    if (other) v.witnesses = {m, *other};
  }
  return v;
}

Formula hardness_reduction(const Logic& l, const Formula& f) {
  if (pure_dt(l))
    throw std::invalid_argument("no completeness reduction exists for " + l.name());
  VarSet p = vars(f);
  if (p.empty()) throw std::invalid_argument("reduction requires a variable");
  if (!check(canonical_point(l, p), f)) return conj_of_vars(p);
  std::optional<Formula> target = known_complete_formula(l, p);
  return Formula::disj(negate(f), *target);
}

Formula reduction_up_to_depth(const Logic& l, const Formula& f, int d) {
  VarSet p = vars(f);
  if (p.empty()) throw std::invalid_argument("reduction requires a variable");
  if (!check(canonical_point(l, p), f)) {
    // /\P alone would already be complete up to depth 0; the box keeps the
    // successor structure in play.
    return Formula::conj(conj_of_vars(p), Formula::box(Formula::top()));
  }
  if (!pure_dt(l)) return Formula::disj(negate(f), *known_complete_formula(l, p));
  std::vector<Formula> parts;
  Formula core = conj_of_vars(p);
  for (int i = 0; i <= d; ++i) {
    Formula g = core;
    for (int j = 0; j < i; ++j) g = Formula::box(g);
    parts.push_back(g);
  }
  return Formula::disj(negate(f), big_and(parts));
}

namespace {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Triviality: return "triviality";
    case Provenance::Flat: return "flat";
    case Provenance::Cc: return "cc";
    case Provenance::Unsat: return "unsat";
  }
  return "cc";
}

Provenance provenance_from(const std::string& s) {
  if (s == "triviality") return Provenance::Triviality;
  if (s == "flat") return Provenance::Flat;
  if (s == "unsat") return Provenance::Unsat;
  if (s == "cc") return Provenance::Cc;
  throw std::invalid_argument("unknown provenance: " + s);
}

}  // namespace

std::string verdict_to_json(const Verdict& v) {
  nlohmann::json j;
  j["verdict"] = v.outcome == Outcome::Complete ? "complete" : "incomplete";
  if (v.psi) j["psi"] = v.psi->str();
  if (v.witnesses)
    j["witnesses"] = {to_text(v.witnesses->first), to_text(v.witnesses->second)};
  j["provenance"] = provenance_name(v.provenance);
  return j.dump(2);
}

Verdict verdict_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Verdict v;
  std::string verdict = j.at("verdict").get<std::string>();
  if (verdict != "complete" && verdict != "incomplete")
    throw std::invalid_argument("unknown verdict: " + verdict);
  v.outcome = verdict == "complete" ? Outcome::Complete : Outcome::Incomplete;
  if (j.contains("psi")) v.psi = parse(j["psi"].get<std::string>());
  if (j.contains("witnesses"))
    v.witnesses = {parse_model(j["witnesses"][0].get<std::string>()),
                   parse_model(j["witnesses"][1].get<std::string>())};
  v.provenance = provenance_from(j.at("provenance").get<std::string>());
  return v;
}

}  // namespace modal

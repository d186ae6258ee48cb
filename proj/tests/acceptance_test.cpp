// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Budgets: brute-force oracles run at <= 3 states; random checks
// use fixed seeds so every run sees the same instances.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "modal/bisim.hpp"
#include "modal/cc.hpp"
#include "modal/complete.hpp"
#include "modal/flatfive.hpp"
#include "modal/formula.hpp"
#include "modal/kripke.hpp"
#include "modal/logics.hpp"
#include "modal/normalform.hpp"
#include "modal/oracle.hpp"
#include "modal/prover.hpp"
#include "suite.hpp"

using namespace modal;
using testsuite::close_into_frame;
using testsuite::exhaustive_suite;
using testsuite::random_model;

namespace {

int failures = 0;
std::ostringstream detail;

Logic L(const std::string& n) { return *Logic::by_name(n); }

void report(int n, const std::string& what, bool ok) {
  std::cout << "criterion " << n << " (" << what << "): " << (ok ? "PASS" : "FAIL")
            << "\n";
  if (!ok) {
    ++failures;
    std::cout << detail.str();
  }
  detail.str("");
}

const std::vector<Formula>& suite_p() {
  static std::vector<Formula> s = exhaustive_suite({"p"});
  return s;
}
const std::vector<Formula>& suite_0() {
  static std::vector<Formula> s = exhaustive_suite({});
  return s;
}
std::vector<Formula> full_suite() {
  std::vector<Formula> all = suite_p();
  all.insert(all.end(), suite_0().begin(), suite_0().end());
  return all;
}

// The two one-state models no variable-free formula can tell apart jointly:
// completeness for K5/K45 without variables reduces to counting which of
// them satisfies the formula.
PointedModel dead_end() { return parse_model("states: w\npoint: w\n"); }
PointedModel loop() { return parse_model("states: w\nedges: w->w\npoint: w\n"); }

bool criterion1() {
  std::vector<std::string> names{"k", "d", "t", "k4", "d4", "s4", "k5", "k45", "kd45", "s5"};
  for (const auto& name : names) {
    Logic l = L(name);
    for (const Formula& f : full_suite()) {
      Verdict v = complete(l, f);
      bool sat = satisfiable(l, f);
      bool no_vars = vars(f).empty();
      bool ok = true;
      if (!sat) ok = v.is_complete();
      else if ((l.has_D || l.has_T) && !l.has_4 && !l.has_5)
        ok = v.is_complete() == no_vars;
      else if (no_vars && (l.has_D || l.has_T))
        ok = v.is_complete();
      else if (no_vars && l.has_5) {
        int hits = (check(dead_end(), f) ? 1 : 0) + (check(loop(), f) ? 1 : 0);
        ok = v.is_complete() == (hits <= 1);
      }
      if (!ok) {
        detail << "  " << name << " " << f.str() << " -> "
               << (v.is_complete() ? "complete" : "incomplete") << "\n";
        return false;
      }
    }
  }
  return true;
}

bool criterion2() {
  bool ok = true;
  auto expect = [&](bool got, bool want, const std::string& what) {
    if (got != want) {
      detail << "  " << what << "\n";
      ok = false;
    }
  };
  Formula box_bot = parse("p & []false");
  expect(complete(L("k"), box_bot).is_complete(), true, "p&[]false K");
  expect(complete(L("k4"), box_bot).is_complete(), true, "p&[]false K4");
  expect(complete(L("k"), parse("true")).is_complete(), false, "true K");
  expect(complete(L("k4"), parse("true")).is_complete(), false, "true K4");
  expect(complete(L("d4"), parse("p & []p")).is_complete(), true, "p&[]p D4");
  expect(complete(L("s4"), parse("p & []p")).is_complete(), true, "p&[]p S4");
  for (const Logic& l : all_logics())
    if (l.has_5)
      expect(complete(l, parse("p & <>[]p")).is_complete(), true, "p&<>[]p " + l.name());
  Formula self = parse("p & <>p & []p");
  expect(complete(L("k"), self).is_complete(), false, "p&<>p&[]p K");
  expect(complete_up_to_depth(self), true, "p&<>p&[]p K up-to-depth");
  return ok;
}

bool criterion3() {
  std::vector<std::string> names{"k", "d", "t", "k4", "d4", "s4", "k5", "k45", "kd45", "s5"};
  for (const auto& name : names) {
    Logic l = L(name);
    // Reflexive/serial logics reach one step deeper than the modal depth
    // suggests, so their witness pairs can need a fourth state; everywhere
    // else three states cover the md<=2 suite.
    int budget = (l.has_D || l.has_T) && !l.has_4 && !l.has_5 ? 4 : 3;
    for (const Formula& f : full_suite()) {
      if (!satisfiable(l, f)) continue;
      Verdict v = complete(l, f);
      bool brute = brute_incomplete(l, f, budget).has_value();
      if (v.is_complete() != !brute) {
        detail << "  " << name << " " << f.str() << ": complete() says "
               << (v.is_complete() ? "complete" : "incomplete")
               << ", brute says " << (brute ? "incomplete" : "complete") << "\n";
        return false;
      }
    }
  }
  return true;
}

bool criterion4() {
  for (const auto& name : {"k", "k4", "d4", "s4", "kd45", "s5"}) {
    Logic l = L(name);
    for (const Formula& f : suite_p()) {
      if (vars(f).empty()) continue;
      Formula red = hardness_reduction(l, f);
      if (provable(l, f) != complete(l, red).is_complete()) {
        detail << "  " << name << " " << f.str() << " via " << red.str() << "\n";
        return false;
      }
    }
  }
  return true;
}

bool criterion5() {
  for (const Formula& f : full_suite()) {
    bool via_nf = normal_forms_of(f).size() <= 1;
    bool via_cc = complete_up_to_depth_via_cc(f);
    if (via_nf != via_cc) {
      detail << "  " << f.str() << ": nf route " << via_nf << ", cc route " << via_cc
             << "\n";
      return false;
    }
  }
  return true;
}

bool criterion6() {
  std::mt19937 rng(2026);
  VarSet p3{"p", "q", "r"};
  std::uniform_int_distribution<int> nstates(1, 40);
  for (int i = 0; i < 200; ++i) {
    PointedModel a = random_model(nstates(rng), p3, rng, 0.1);
    PointedModel b = random_model(nstates(rng), p3, rng, 0.1);
    auto t0 = std::chrono::steady_clock::now();
    bool fast = bisimilar(a, b, p3);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (ms > 50) {
      detail << "  pair " << i << " took " << ms << "ms\n";
      return false;
    }
    if (fast != naive_bisimilar(a, b, p3)) {
      detail << "  disagreement on pair " << i << "\n";
      return false;
    }
  }
  // Two serial models of p that differ one step past its modal depth.
  PointedModel m1 = parse_model("states: a\nedges: a->a\nval: a p\npoint: a\n");
  PointedModel m2 = parse_model("states: a b\nedges: a->b b->b\nval: a p\npoint: a\n");
  if (bisimilar(m1, m2, {"p"})) {
    detail << "  constructed pair unexpectedly bisimilar\n";
    return false;
  }
  if (!is_frame_for(m1, L("d")) || !is_frame_for(m2, L("d")) || !check(m1, parse("p")) ||
      !check(m2, parse("p"))) {
    detail << "  constructed pair is not a pair of serial p-models\n";
    return false;
  }
  for (int i = 0; i < 20; ++i) {
    PointedModel a = random_model(nstates(rng), p3, rng, 0.1);
    PointedModel b = random_model(nstates(rng), p3, rng, 0.1);
    close_into_frame(a, L("d"));
    close_into_frame(b, L("d"));
    if (!bisimilar(a, b, {})) {
      detail << "  serial pair " << i << " not bisimilar modulo {}\n";
      return false;
    }
  }
  return true;
}

bool criterion7() {
  std::mt19937 rng(7);
  std::vector<std::string> names{"k5", "k45", "kd45", "s5", "kd5"};
  std::uniform_int_distribution<int> nstates(1, 8);
  VarSet p{"p", "q"};
  for (int i = 0; i < 100; ++i) {
    Logic l = L(names[i % names.size()]);
    PointedModel m = random_model(nstates(rng), p, rng, 0.2);
    close_into_frame(m, l);
    m = restrict_to_reachable(m);
    FlatShape s = shape_of(m, p);
    PointedModel r = realize(s, l);
    if (!is_frame_for(r, l)) {
      detail << "  realization " << i << " (" << l.name() << ") is not an l-frame\n";
      return false;
    }
    if (!bisimilar(m, r, p)) {
      detail << "  model " << i << " (" << l.name() << ") not bisimilar to realization\n";
      return false;
    }
  }
  return true;
}

bool criterion8() {
  VarSet p{"p"};
  bool ok = enumerate_forms(p, 0).size() == 2 && enumerate_forms(p, 1).size() == 8 &&
            enumerate_forms(p, 2).size() == 512 && enumerate_forms({}, 0).size() == 1 &&
            enumerate_forms({}, 1).size() == 2 && enumerate_forms({}, 2).size() == 4;
  if (!ok) {
    detail << "  form counts off the recurrence\n";
    return false;
  }
  std::vector<Formula> forms;
  for (const NormalForm& nf : enumerate_forms(p, 1)) forms.push_back(to_formula(nf, p));
  Formula any = big_or(forms);
  for_each_model(L("k"), {3, p}, [&](const PointedModel& m) {
    int hits = 0;
    for (const Formula& g : forms)
      if (check(m, g)) ++hits;
    if (hits != 1) {
      detail << "  model satisfies " << hits << " depth-1 forms\n" << to_text(m);
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

bool criterion9() {
  bool ok = true;
  Formula k_ax = parse("[](p -> q) -> ([]p -> []q)");
  Formula d_ax = parse("[]p -> <>p");
  Formula t_ax = parse("[]p -> p");
  Formula four_ax = parse("[]p -> [][]p");
  Formula five_ax = parse("<>p -> []<>p");
  for (const Logic& l : all_logics()) {
    auto need = [&](const Formula& ax, const std::string& tag) {
      if (!provable(l, ax)) {
        detail << "  " << l.name() << " fails its axiom " << tag << "\n";
        ok = false;
      }
    };
    need(k_ax, "K");
    if (l.has_D || l.has_T) need(d_ax, "D");
    if (l.has_T) need(t_ax, "T");
    if (l.has_4) need(four_ax, "4");
    if (l.has_5) need(five_ax, "5");
  }
  for (const Formula& ax : {t_ax, four_ax, five_ax}) {
    if (provable(L("k"), ax) || !brute_sat(L("k"), negate(ax), 3)) {
      detail << "  K should refute " << ax.str() << " with a <=3-state countermodel\n";
      ok = false;
    }
  }
  return ok;
}

}  // namespace

int main() {
  struct Row {
    int n;
    std::string what;
    std::function<bool()> run;
  };
  std::vector<Row> rows{
      {1, "triviality-table verdict patterns on the exhaustive suite", criterion1},
      {2, "named formulas", criterion2},
      {3, "decision procedures agree with the brute-force oracle", criterion3},
      {4, "provability-to-completeness reduction soundness", criterion4},
      {5, "both completeness-up-to-depth routes agree", criterion5},
      {6, "partition refinement matches the naive bisimulation oracle", criterion6},
      {7, "flat shapes realize to bisimilar models", criterion7},
      {8, "normal-form counts, exclusivity and exhaustiveness", criterion8},
      {9, "prover proves own axioms, refutes foreign ones", criterion9},
  };
  for (const Row& r : rows) {
    bool ok = false;
    try {
      ok = r.run();
    } catch (const std::exception& e) {
      detail << "  exception: " << e.what() << "\n";
    }
    report(r.n, r.what, ok);
  }
  return failures == 0 ? 0 : 1;
}

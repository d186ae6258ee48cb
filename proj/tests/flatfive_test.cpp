#include "doctest.h"
#include "modal/bisim.hpp"
#include "modal/flatfive.hpp"
#include "modal/prover.hpp"
#include "suite.hpp"

using namespace modal;

namespace {
Logic L(const char* n) { return *Logic::by_name(n); }
}

TEST_CASE("shape validity per logic") {
  FlatShape dead{{"p"}, {}, {}};
  CHECK(shape_valid(dead, L("k5")));
  CHECK(shape_valid(dead, L("k45")));
  CHECK(!shape_valid(dead, L("kd45")));  // serial logics need a cluster

  FlatShape cluster{{"p"}, {{"p"}, {}}, {{"p"}, {}}};
  CHECK(shape_valid(cluster, L("kd45")));
  CHECK(shape_valid(cluster, L("s5")));  // root valuation sits in the cluster

  FlatShape detached{{"p"}, {{}}, {{}}};
  CHECK(shape_valid(detached, L("kd45")));
  CHECK(!shape_valid(detached, L("s5")));  // root valuation missing from cluster

  // With axiom 4 the direct successors must already be the whole cluster.
  FlatShape partial{{"p"}, {{"p"}, {}}, {{"p"}}};
  CHECK(shape_valid(partial, L("k5")));
  CHECK(!shape_valid(partial, L("k45")));
}

TEST_CASE("realized shapes are frames for their logic") {
  VarSet p{"p"};
  for (const char* name : {"k5", "kd5", "k45", "kd45", "s5"}) {
    Logic l = L(name);
    for (const FlatShape& s : enumerate_shapes(l, p)) {
      PointedModel m = realize(s, l);
      CHECK(is_frame_for(m, l));
      CHECK(shape_of(m, p) == s);
    }
  }
}

TEST_CASE("the kd45 example realization") {
  FlatShape s{{"p"}, {{"p"}, {}}, {{"p"}}};
  // KD45 forces succ == cluster, so this particular shape is only K5-valid;
  // the companion KD45 shape has the full cluster as successors.
  CHECK(!shape_valid(s, L("kd45")));
  FlatShape s45{{"p"}, {{"p"}, {}}, {{"p"}, {}}};
  PointedModel m = realize(s45, L("kd45"));
  CHECK(m.num_states() == 3);  // root + 2-state cluster
  CHECK(m.edges.size() == 6);  // 4 within the cluster, 2 from the root
  CHECK(is_frame_for(m, L("kd45")));
}

TEST_CASE("shape equality characterizes bisimilarity of flat models") {
  VarSet p{"p"};
  for (const char* name : {"k5", "k45", "kd45", "s5"}) {
    Logic l = L(name);
    auto shapes = enumerate_shapes(l, p);
    for (const FlatShape& a : shapes)
      for (const FlatShape& b : shapes)
        CHECK(bisimilar(realize(a, l), realize(b, l), p) == (a == b));
  }
}

TEST_CASE("flat completeness verdicts") {
  CHECK(flat_complete(L("s5"), parse("p & <>[]p")).is_complete());
  CHECK(flat_complete(L("kd45"), parse("p & <>[]p")).is_complete());
  Verdict v = flat_complete(L("s5"), parse("p"));
  CHECK(!v.is_complete());
  REQUIRE(v.psi.has_value());
  REQUIRE(v.witnesses.has_value());
  CHECK(check(v.witnesses->first, *v.psi) != check(v.witnesses->second, *v.psi));
  CHECK(check(v.witnesses->first, parse("p")));
  CHECK(check(v.witnesses->second, parse("p")));
  CHECK(v.provenance == Provenance::Flat);
}

TEST_CASE("shared shape constraints still separate k5 from k45") {
  Formula f = parse("[]p & <><>~p");
  CHECK(satisfiable(L("k5"), f));
  CHECK(!satisfiable(L("k45"), f));
}

TEST_CASE("variable cap guards shape enumeration") {
  VarSet big;
  for (char c = 'a'; c <= 'h'; ++c) big.insert(std::string(1, c));
  CHECK_THROWS(enumerate_shapes(L("s5"), big));
}

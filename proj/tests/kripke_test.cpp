#include "doctest.h"
#include "modal/bisim.hpp"
#include "modal/kripke.hpp"

using namespace modal;

namespace {
const char* kSample =
    "# three-state chain\n"
    "states: a b c\n"
    "edges: a->b b->c\n"
    "val: a p q\n"
    "val: b p\n"
    "point: a\n";
}

TEST_CASE("model text parses and round-trips") {
  PointedModel m = parse_model(kSample);
  CHECK(m.num_states() == 3);
  CHECK(m.model_size() == 5);
  CHECK(m.point == m.index_of("a"));
  CHECK(m.valuation[m.index_of("a")] == VarSet{"p", "q"});
  CHECK(m.valuation[m.index_of("c")].empty());
  PointedModel again = parse_model(to_text(m));
  CHECK(again.edges == m.edges);
  CHECK(again.valuation == m.valuation);
  CHECK(again.point == m.point);
}

TEST_CASE("malformed model texts are rejected") {
  CHECK_THROWS(parse_model("states: a\nstates: b\npoint: a\n"));   // duplicate
  CHECK_THROWS(parse_model("states: a\nval: a p\nval: a q\npoint: a\n"));
  CHECK_THROWS(parse_model("states: a\npoint: b\n"));              // unknown state
  CHECK_THROWS(parse_model("states: a\nedges: a->b\npoint: a\n"));
  CHECK_THROWS(parse_model("states: a\n"));                        // no point
}

TEST_CASE("model checking follows the standard clauses") {
  PointedModel m = parse_model(kSample);
  CHECK(check(m, parse("p & q")));
  CHECK(check(m, parse("<>(p & ~q)")));
  CHECK(check(m, parse("[][](~p & ~q)")));
  CHECK(check(m, parse("<><>[]false")));
  CHECK(!check(m, parse("[]q")));
  // Variables absent from every valuation are false.
  CHECK(check(m, parse("~r & []~r")));
  // Dead-end point satisfies any box vacuously.
  PointedModel dead = parse_model("states: a\npoint: a\n");
  CHECK(check(dead, parse("[]false")));
  CHECK(!check(dead, parse("<>true")));
}

TEST_CASE("reachability and restriction") {
  PointedModel m = parse_model(
      "states: a b c d\nedges: a->b b->a c->d\nval: d p\npoint: a\n");
  CHECK(reach(m, m.index_of("a")) == std::set<int>{m.index_of("a"), m.index_of("b")});
  PointedModel r = restrict_to_reachable(m);
  CHECK(r.num_states() == 2);
  CHECK(bisimilar(m, r, {"p"}));
}

TEST_CASE("renaming states yields an equivalent model") {
  PointedModel m = parse_model(kSample);
  PointedModel renamed = parse_model(
      "states: x y z\nedges: x->y y->z\nval: x p q\nval: y p\npoint: x\n");
  CHECK(bisimilar(m, renamed, {"p", "q"}));
  CHECK(check(renamed, parse("<>(p & ~q)")));
}

TEST_CASE("frame validation on models") {
  PointedModel m = parse_model("states: a b\nedges: a->b b->b\npoint: a\n");
  CHECK(is_frame_for(m, *Logic::by_name("d")));
  CHECK(!is_frame_for(m, *Logic::by_name("t")));
  CHECK(is_frame_for(m, *Logic::by_name("k4")));
}

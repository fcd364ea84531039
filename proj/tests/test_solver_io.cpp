#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcpp/battery.hpp"
#include "mcpp/io.hpp"
#include "mcpp/solver.hpp"

using namespace mcpp;

TEST_CASE("solve pair22 via the lp route") {
  const Instance inst = acyclic_battery()[0].instance;  // x1 x3 + 2 x2 x4
  const SolveReport r = solve(inst);
  CHECK(r.optimum == 2);
  CHECK(r.argmax.x == std::vector<int>{0, 1, 0, 1});
  CHECK(r.method == "lp-jointree");
  CHECK(r.acyclic);
  CHECK(r.stats.family_size == 8);
}

TEST_CASE("solve the triangle falls back to brute force") {
  const SolveReport r = solve(triangle_disagreement());
  CHECK(r.optimum == 2);
  CHECK(r.method == "brute-force");
  CHECK_FALSE(r.acyclic);
  // Requesting the lp route on a non-acyclic instance is a user error.
  CHECK_THROWS_AS(solve(triangle_disagreement(), SolveMethod::lp), ValidationError);
}

TEST_CASE("zero objective picks the lexicographically first point") {
  Instance inst = acyclic_battery()[0].instance;
  inst.terms.clear();
  for (SolveMethod m : {SolveMethod::automatic, SolveMethod::brute}) {
    const SolveReport r = solve(inst, m);
    CHECK(r.optimum == 0);
    CHECK(r.argmax.x == std::vector<int>{0, 1, 0, 1});
  }
}

TEST_CASE("lp and brute agree on every acyclic battery instance") {
  for (const auto& named : acyclic_battery()) {
    CAPTURE(named.name);
    const SolveReport lp = solve(named.instance, SolveMethod::lp);
    const SolveReport brute = solve(named.instance, SolveMethod::brute);
    CHECK(lp.optimum == brute.optimum);
  }
}

TEST_CASE("instance json round-trip") {
  const std::string text = R"({"n": 4, "blocks": [[1,2],[3,4]],
      "terms": [{"vars": [1,3], "coef": "3/2"}, {"vars": [2], "coef": -1}]})";
  const Instance inst = parse_instance_json(text);
  CHECK(inst.partition.n == 4);
  CHECK(inst.terms.size() == 2);
  CHECK(inst.terms[0].coef == Rat(3, 2));
  const Instance again = parse_instance_json(instance_to_json(inst));
  CHECK(again.partition.blocks == inst.partition.blocks);
  CHECK(again.terms.size() == inst.terms.size());
  CHECK(again.terms[0].coef == inst.terms[0].coef);
}

TEST_CASE("instance json rejects malformed input") {
  CHECK_THROWS_AS(parse_instance_json(R"({"n": 4, "blocks": [[1,2],[3,4]], "extra": 1})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_instance_json(
                      R"({"n": 4, "blocks": [[1,2],[3,4]],
                          "terms": [{"vars": [1], "coef": 0.5}]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_instance_json("not json"), ValidationError);
  CHECK_THROWS_AS(parse_instance_json(R"({"blocks": [[1,2]]})"), ValidationError);
}

TEST_CASE("inequality json round-trip") {
  const std::string text =
      R"({"coords": [{"vars":[1,3]}, {"vars":[1]}], "a": ["1","-1"], "delta": "0", "space": "JH"})";
  const InequalityFile f = parse_inequality_json(text);
  CHECK(f.labels == std::vector<Mono>{{1, 3}, {1}});
  CHECK(f.a == std::vector<Rat>{Rat(1), Rat(-1)});
  CHECK(f.delta == 0);
  CHECK(f.space == "JH");
  const InequalityFile g = parse_inequality_json(inequality_to_json(f));
  CHECK(g.labels == f.labels);
  CHECK(g.a == f.a);
  CHECK(g.space == f.space);

  CHECK_THROWS_AS(parse_inequality_json(
                      R"({"coords": [], "a": [], "delta": "0", "space": "XX"})"),
                  ValidationError);
}

TEST_CASE("solve report serialization round-trips losslessly") {
  const SolveReport r = solve(acyclic_battery()[1].instance);  // has coefficient 3/2
  const SolveReport back = report_from_json(report_to_json(r));
  CHECK(back.optimum == r.optimum);
  CHECK(back.argmax.x == r.argmax.x);
  CHECK(back.method == r.method);
  CHECK(back.acyclic == r.acyclic);
  CHECK(back.stats.family_size == r.stats.family_size);
  CHECK_FALSE(report_to_text(r).empty());
}

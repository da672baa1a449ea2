#include <doctest.h>

#include <chrono>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "oracles.hpp"
#include "warrant/engine.hpp"
#include "warrant/schemas.hpp"

using namespace warrant;
using testing::justified;
using testing::link_strength;
using testing::run_text;

namespace {

std::string projection_scenario(double decay, const std::string& dt) {
  std::ostringstream os;
  os << "config: temporal-decay " << decay << "\n"
     << "projectible: (the door is open)\n"
     << "premise: ((the door is open) at 0)\n"
     << "query: ((the door is open) at " << dt << ")\n";
  return os.str();
}

}  // namespace

TEST_CASE("projection strength follows 2d^dt - 1") {
  for (double d : {0.9, 0.95, 0.99}) {
    const double window = oracle::projection_window(d);
    double last = 1.0;
    for (double dt = 0.5; dt < window; dt += 0.5) {
      std::ostringstream t;
      t << dt;
      CAPTURE(d);
      CAPTURE(dt);
      const auto r = run_text(projection_scenario(d, t.str()));
      auto s = link_strength(r, "TEMPORAL-PROJECTION", "((the door is open) at " + t.str() + ")");
      REQUIRE(s);
      CHECK(std::abs(*s - oracle::projection_strength(d, dt)) < 1e-9);
      CHECK(*s < last);
      last = *s;
    }
  }
}

TEST_CASE("projection is refused at and beyond the window") {
  // window for 0.95 is about 13.51
  CHECK(oracle::projection_window(0.95) == doctest::Approx(13.513).epsilon(1e-4));
  CHECK(oracle::projection_strength(0.95, 10) == doctest::Approx(0.19748).epsilon(1e-4));
  for (const char* dt : {"14", "20", "100"}) {
    const auto r = run_text(projection_scenario(0.95, dt));
    CHECK_FALSE(link_strength(r, "TEMPORAL-PROJECTION", std::string("((the door is open) at ") + dt + ")"));
    CHECK_FALSE(justified(r, std::string("((the door is open) at ") + dt + ")"));
  }
  const auto near = run_text(projection_scenario(0.95, "13"));
  CHECK(justified(near, "((the door is open) at 13)"));
}

TEST_CASE("projection needs a projectible proposition") {
  const auto r = run_text(
      "premise: ((the door is open) at 0)\nquery: ((the door is open) at 1)\n");
  CHECK_FALSE(justified(r, "((the door is open) at 1)"));
}

TEST_CASE("modus ponens chain of twenty") {
  std::string text = "premise: (p0)\n";
  for (int i = 0; i < 20; ++i) {
    text += "premise: ((p" + std::to_string(i) + ") -> (p" + std::to_string(i + 1) + "))\n";
  }
  text += "query: (p20)\n";
  const auto start = std::chrono::steady_clock::now();
  const auto r = run_text(text);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(justified(r, "(p20)"));
  CHECK(testing::query(r, "(p20)")->degree == doctest::Approx(1.0));
  CHECK(secs < 1.0);
}

TEST_CASE("conjunction introduction and elimination") {
  const auto r = run_text(
      "premise: ((a is red) & (b is blue))\n"
      "premise: (c is green)\n"
      "query: (b is blue)\n"
      "query: ((c is green) & (a is red))\n"
      "query: (d is black)\n");
  CHECK(justified(r, "(b is blue)"));
  CHECK(justified(r, "((c is green) & (a is red))"));
  CHECK_FALSE(justified(r, "(d is black)"));
}

TEST_CASE("deductive reasons chain through tollens and disjunctions") {
  const auto r = run_text(
      "premise: ((a) -> (b))\n"
      "premise: ~(b)\n"
      "premise: ((a) v (c))\n"
      "premise: ((c) <-> (d))\n"
      "query: ~(a)\n"
      "query: (d)\n");
  CHECK(justified(r, "~(a)"));
  CHECK(justified(r, "(d)"));
}

TEST_CASE("weak premises bound the degree") {
  const auto r = run_text(
      "premise: (a) strength 0.6\n"
      "premise: ((a) -> (b))\n"
      "query: (b)\n");
  REQUIRE(testing::query(r, "(b)"));
  CHECK(testing::query(r, "(b)")->degree == doctest::Approx(0.6));
}

TEST_CASE("percept clarity caps perception") {
  const auto r = run_text("percept: (Fred is red) clarity 0.8 at 1\nquery: ((Fred is red) at 1)\n");
  auto s = link_strength(r, "PERCEPTION", "((Fred is red) at 1)");
  REQUIRE(s);
  CHECK(*s == doctest::Approx(0.8));
}

TEST_CASE("nodes and links are not duplicated") {
  EngineConfig config;
  Engine e(builtin_schemas(), config, Projectibility{});
  const Expr a = parse_formula("(a)");
  const std::size_t n1 = e.add_premise(a);
  const std::size_t n2 = e.add_premise(a);
  CHECK(n1 == n2);
  CHECK(e.graph().nodes().size() == 1);

  const std::size_t i1 = e.adopt_interest(parse_formula("(b)"), 0.5);
  const std::size_t i2 = e.adopt_interest(parse_formula("(b)"), 0.9);
  CHECK(i1 == i2);
  CHECK(e.interests()[i1].priority == doctest::Approx(0.9));

  LinkSpec spec{"TEST", {n1}, {}, parse_formula("(b)"), 1.0, false};
  CHECK(e.add_link(spec));
  CHECK_FALSE(e.add_link(spec));
}

TEST_CASE("waiters fire for earlier and later discharges") {
  EngineConfig config;
  Engine e({}, config, Projectibility{});
  const std::size_t n = e.add_premise(parse_formula("(x is red)"));
  e.run();
  const VarSet vars{"y"};
  const std::size_t i = e.adopt_interest(parse_formula("(y is red)", vars), 1.0);
  std::vector<std::string> seen;
  e.on_discharge(i, [&](Engine&, std::size_t node, const Binding& b) {
    seen.push_back(to_string(*b.find("y")));
    CHECK(node < 2);
  });
  e.run();
  REQUIRE(seen.size() == 1);
  CHECK(seen[0] == "x");
  CHECK(n == 0);

  e.add_premise(parse_formula("(z is red)"));
  e.run();
  CHECK(seen.size() == 2);
}

TEST_CASE("the step budget stops a run") {
  RunOptions opts;
  opts.budget = 3;
  std::string text;
  for (int i = 0; i < 10; ++i) text += "premise: ((p" + std::to_string(i) + ") -> (p" + std::to_string(i + 1) + "))\n";
  text += "premise: (p0)\nquery: (p10)\n";
  const auto r = run_text(text, opts);
  CHECK(r.report.budget_exhausted);
  CHECK(r.report.steps == 3);
  CHECK_FALSE(justified(r, "(p10)"));
}

TEST_CASE("scenario schemas join the built-ins") {
  const auto r = run_text(R"osc(
schema: (def-forwards-reason COLOUR-WORDS
  :forwards-premises "(x is crimson)"
  :conclusion "(x is red)"
  :variables x
  :defeasible? T
  :strength 0.7)
premise: (barn is crimson)
query: (barn is red)
)osc");
  CHECK(justified(r, "(barn is red)"));
  CHECK(testing::query(r, "(barn is red)")->degree == doctest::Approx(0.7));
}

TEST_CASE("statistical syllogism respects its threshold") {
  const std::string base =
      "premise: ((the probability of flyer given bird) >= P)\n"
      "premise: (tweety is a bird)\n"
      "query: (tweety is an flyer)\n";
  auto with = [&](const std::string& p) {
    std::string t = base;
    t.replace(t.find('P'), 1, p);
    return t;
  };
  CHECK(justified(run_text(with("0.95")), "(tweety is an flyer)"));
  CHECK_FALSE(justified(run_text(with("0.6")), "(tweety is an flyer)"));
}

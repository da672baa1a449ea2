// Acceptance checks 1-8. With no argument every check runs; with a number
// only that one. Prints one PASS/FAIL line per check and exits non-zero if
// any failed.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "oracles.hpp"
#include "warrant/report.hpp"

using namespace warrant;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(WARRANT_SCENARIO_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

// 1
Outcome yale() {
  Outcome o;
  const auto t = Clock::now();
  const auto r = testing::run_text(slurp("yale.osc"));
  const double secs = seconds_since(t);
  o.require(r.analysis.has_value(), "no defeat analysis");
  if (!o.pass) return o;
  o.require(testing::justified(r, "(~(Jones is alive) at 50)"), "~alive at 50 not justified");
  o.require(!testing::justified(r, "((Jones is alive) at 50)"), "alive at 50 justified");

  // the projection supporting "alive at 50" is undercut by a conclusion of
  // CAUSAL-UNDERCUTTER, and the projection argument is defeated
  const auto& g = r.engine->graph();
  const auto& a = *r.analysis;
  const auto alive = g.find(parse_formula("((Jones is alive) at 50)"), NodeKind::inference);
  o.require(alive.has_value(), "no node for alive at 50");
  if (!o.pass) return o;
  bool undercut = false;
  for (const auto& d : a.defeat_links) {
    const auto& l = g.link(d.link);
    if (d.kind != DefeatKind::undercutting || l.reason != "TEMPORAL-PROJECTION") continue;
    if (l.target != *alive) continue;
    for (auto s : g.node(d.defeater).support) {
      if (g.link(s).reason == "CAUSAL-UNDERCUTTER" && a.node_justified[d.defeater]) undercut = true;
    }
  }
  o.require(undercut, "no justified CAUSAL-UNDERCUTTER defeat of the projection");
  bool projection_defeated = true;
  for (std::size_t i = 0; i < a.arguments.size(); ++i) {
    const auto& arg = a.arguments[i];
    if (arg.conclusion != *alive || !arg.last_link) continue;
    if (g.link(*arg.last_link).reason == "TEMPORAL-PROJECTION" && a.argument_undefeated[i]) {
      projection_defeated = false;
    }
  }
  o.require(projection_defeated, "projection argument undefeated");
  o.require(secs < 1.0, "took " + fmt(secs) + " s");
  o.detail = o.pass ? "~alive justified (degree " +
                          fmt(testing::query(r, "(~(Jones is alive) at 50)")->degree) +
                          "), projection undercut, " + fmt(secs * 1000) + " ms"
                    : o.detail;
  return o;
}

// 2
Outcome fred() {
  Outcome o;
  const auto t = Clock::now();
  const auto r = testing::run_text(slurp("fred.osc"));
  const double secs = seconds_since(t);
  o.require(testing::justified(r, "((Fred is red) at 30)"), "red at 30 not justified");
  o.require(!testing::justified(r, "((Fred is blue) at 30)"), "blue at 30 justified");
  o.require(secs < 1.0, "took " + fmt(secs) + " s");
  if (o.pass) o.detail = "red reinstated, blue unjustified, " + fmt(secs * 1000) + " ms";
  return o;
}

// 3
Outcome status_oracle() {
  Outcome o;
  const auto t = Clock::now();
  std::mt19937 rng(3);
  const int rounds = 2000;
  int mismatches = 0;
  for (int i = 0; i < rounds; ++i) {
    const auto af = oracle::random_framework(rng, 8, 12);
    auto got = enumerate_status_assignments(af);
    std::sort(got.begin(), got.end());
    const auto want = oracle::brute_force_assignments(af);
    const auto ok = oracle::undefeated_everywhere(af.size(), want);

    std::vector<Argument> args;
    for (std::size_t k = 0; k < af.size(); ++k) args.push_back({k % 4, std::nullopt, {}, {}, 1.0});
    bool same = got == want && undefeated_arguments(af.size(), got) == ok;
    for (std::size_t node = 0; node < 4; ++node) {
      bool expect = false;
      for (std::size_t k = 0; k < args.size(); ++k) expect = expect || (args[k].conclusion == node && ok[k]);
      same = same && justified(node, args, got) == expect;
    }
    if (!same) ++mismatches;
  }
  const double secs = seconds_since(t);
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  o.require(secs < 60.0, "took " + fmt(secs) + " s");
  if (o.pass) {
    o.detail = std::to_string(rounds) + " random frameworks, 0 mismatches, " + fmt(secs) + " s";
  }
  return o;
}

ArgumentFramework framework(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> attacks) {
  ArgumentFramework af;
  af.attackers.resize(n);
  for (auto [from, to] : attacks) af.attackers[to].push_back(from);
  return af;
}

std::vector<bool> undefeated(const ArgumentFramework& af) {
  return undefeated_arguments(af.size(), enumerate_status_assignments(af));
}

const char* kLooks = R"osc(
schema: (def-forwards-reason LOOKS
  :forwards-premises "(x looks red)"
  :conclusion "(x is red)"
  :variables x
  :defeasible? T
  :strength 0.9)
schema: (def-backwards-undercutter RED-LIGHT
  :defeatee LOOKS
  :forwards-premises "(x is under red light)"
  :variables x)
schema: (def-forwards-reason HEARSAY
  :forwards-premises "(someone says x is under red light)"
  :conclusion "(x is under red light)"
  :variables x
  :defeasible? T
  :strength 0.95)
premise: (barn looks red)
query: (barn is red)
)osc";

const char* kNixon = R"osc(
schema: (def-forwards-reason QUAKER
  :forwards-premises "(x is a quaker)"
  :conclusion "(x is a pacifist)"
  :variables x
  :defeasible? T
  :strength 0.8)
schema: (def-forwards-reason REPUBLICAN
  :forwards-premises "(x is a republican)"
  :conclusion "~(x is a pacifist)"
  :variables x
  :defeasible? T
  :strength 0.8)
premise: (nixon is a quaker)
premise: (nixon is a republican)
query: (nixon is a pacifist)
query: ~(nixon is a pacifist)
)osc";

// 4
Outcome canonical() {
  Outcome o;
  o.require(undefeated(framework(1, {})) == std::vector<bool>{true}, "unattacked argument defeated");
  o.require(undefeated(framework(2, {{0, 1}, {1, 0}})) == std::vector<bool>{false, false},
            "mutual rebuttal not collective");
  const auto cycle = framework(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto all = enumerate_status_assignments(cycle);
  o.require(all.size() == 1 && all[0] == StatusAssignment(3, Status::unassigned),
            "3-cycle does not leave a unique empty assignment");
  o.require(undefeated(cycle) == std::vector<bool>{false, false, false}, "3-cycle member undefeated");
  o.require(undefeated(framework(3, {{1, 0}, {2, 1}})) == std::vector<bool>{true, false, true},
            "framework reinstatement failed");

  // the same patterns through the reasoner
  const std::string looks = kLooks;
  o.require(testing::justified(testing::run_text(looks), "(barn is red)"),
            "unattacked conclusion unjustified");
  const auto nixon = testing::run_text(kNixon);
  o.require(!testing::justified(nixon, "(nixon is a pacifist)") &&
                !testing::justified(nixon, "~(nixon is a pacifist)"),
            "rebutting conclusions not collectively defeated");
  const std::string hearsay = "premise: (someone says barn is under red light)\n";
  o.require(!testing::justified(testing::run_text(looks + hearsay), "(barn is red)"),
            "undercut target still justified");
  o.require(testing::justified(testing::run_text(looks + hearsay + "premise: ~(barn is under red light)\n"),
                               "(barn is red)"),
            "no reinstatement after the undercutter is defeated");
  if (o.pass) o.detail = "unattacked, collective defeat, odd cycle, undercut, reinstatement";
  return o;
}

// 5
Outcome strengths() {
  Outcome o;
  int checked = 0;
  double worst = 0.0;
  for (double d : {0.9, 0.95, 0.99}) {
    const double window = oracle::projection_window(d);
    double last = 1.0;
    std::vector<double> grid;
    for (double dt = 0.25; dt < window + 3; dt += 0.25) grid.push_back(dt);
    grid.push_back(std::ceil(window));
    for (double dt : grid) {
      std::ostringstream text, when;
      when << dt;
      text << "config: temporal-decay " << d << "\nprojectible: (the door is open)\n"
           << "premise: ((the door is open) at 0)\nquery: ((the door is open) at " << when.str() << ")\n";
      const auto r = testing::run_text(text.str());
      const auto s = testing::link_strength(r, "TEMPORAL-PROJECTION",
                                            "((the door is open) at " + when.str() + ")");
      if (dt >= window) {
        o.require(!s, "projection accepted at dt " + when.str() + " for d " + fmt(d));
        continue;
      }
      o.require(s.has_value(), "projection refused at dt " + when.str() + " for d " + fmt(d));
      if (!s) continue;
      const double err = std::abs(*s - oracle::projection_strength(d, dt));
      worst = std::max(worst, err);
      o.require(err < 1e-9, "strength off by " + fmt(err));
      o.require(*s < last, "strength not decreasing at dt " + when.str());
      last = *s;
      ++checked;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " strengths, max error " + fmt(worst) + ", window enforced";
  return o;
}

const char* kDesk = R"osc(
premise: (initially (I have the key))
premise: (initially (the power is on))
premise: (((unlock the door) / (I have the key)) => (the door is open))
premise: (((flip the switch) / (the power is on)) => (the light is on))
query-plan: ((the door is open) & (the light is on))
)osc";

std::optional<bool> merged_status(const RunResult& r) {
  if (r.report.plans.size() != 1) return std::nullopt;
  for (const auto& c : r.report.plans[0].claims) {
    const Plan& p = r.planner->store().get(c.plan);
    if (p.steps.size() == 2 && p.ordering.empty()) return c.justified;
  }
  return std::nullopt;
}

// 6
Outcome planner() {
  Outcome o;
  const auto plain = merged_status(testing::run_text(kDesk));
  o.require(plain == true, "merged two-step plan not justified");
  const auto threatened = merged_status(testing::run_text(
      std::string(kDesk) + "premise: (((flip the switch) / (the power is on)) => ~(the door is open))\n"));
  o.require(threatened == false, "interference did not defeat the merged plan");

  std::mt19937 rng(6);
  const int rounds = 300;
  int agree = 0, solvable = 0;
  for (int i = 0; i < rounds; ++i) {
    const auto problem = oracle::random_problem(rng);
    const bool want = oracle::plan_exists(problem, 4);
    const auto r = testing::run_text(oracle::scenario_text(problem));
    if (r.report.plans.at(0).justified == want) ++agree;
    if (want) ++solvable;
  }
  o.require(agree == rounds, std::to_string(rounds - agree) + " of " + std::to_string(rounds) +
                                 " random instances disagree with the 4-step oracle");
  if (o.pass) {
    o.detail = "merged plan flips with interference; oracle agrees on " + std::to_string(rounds) +
               " instances (" + std::to_string(solvable) + " solvable)";
  }
  return o;
}

// 7
Outcome deduction() {
  Outcome o;
  std::string chain = "premise: (p0)\n";
  for (int i = 0; i < 20; ++i) {
    chain += "premise: ((p" + std::to_string(i) + ") -> (p" + std::to_string(i + 1) + "))\n";
  }
  chain += "query: (p20)\n";
  auto t = Clock::now();
  const auto r1 = testing::run_text(chain);
  const double s1 = seconds_since(t);
  o.require(testing::justified(r1, "(p20)"), "20-step modus ponens chain not proved");
  o.require(s1 < 1.0, "chain took " + fmt(s1) + " s");

  t = Clock::now();
  const auto r2 = testing::run_text(
      "premise: ((a is red) & (b is blue))\npremise: (c is green)\n"
      "query: (b is blue)\nquery: ((c is green) & (a is red))\n");
  const double s2 = seconds_since(t);
  o.require(testing::justified(r2, "(b is blue)"), "&-elimination failed");
  o.require(testing::justified(r2, "((c is green) & (a is red))"), "&-introduction failed");
  o.require(s2 < 1.0, "conjunctions took " + fmt(s2) + " s");
  if (o.pass) o.detail = "chain " + fmt(s1 * 1000) + " ms, &-intro/elim " + fmt(s2 * 1000) + " ms";
  return o;
}

// 8
Outcome order_independence() {
  Outcome o;
  for (const char* file : {"yale.osc", "fred.osc"}) {
    const Scenario base = load_scenario(slurp(file));
    const auto want = run_scenario(base).report.justified;
    std::mt19937 rng(8);
    for (int i = 0; i < 20; ++i) {
      Scenario s = base;
      std::shuffle(s.projectible.begin(), s.projectible.end(), rng);
      std::shuffle(s.premises.begin(), s.premises.end(), rng);
      std::shuffle(s.percepts.begin(), s.percepts.end(), rng);
      std::shuffle(s.queries.begin(), s.queries.end(), rng);
      o.require(run_scenario(s).report.justified == want,
                std::string(file) + ": shuffle " + std::to_string(i) + " changed the justified set");
    }
  }
  if (o.pass) o.detail = "yale and fred identical across 20 shuffles each";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> checks = {
      {"yale shooting", yale},
      {"blue-tinted glasses", fred},
      {"status assignments vs brute force", status_oracle},
      {"canonical defeat patterns", canonical},
      {"projection strength", strengths},
      {"planner", planner},
      {"deductive sanity", deduction},
      {"order independence", order_independence},
  };
  std::size_t only = 0;
  if (argc > 1) only = static_cast<std::size_t>(std::atoi(argv[1]));
  if (only > checks.size()) {
    std::cerr << "no check " << argv[1] << "\n";
    return 2;
  }
  bool ok = true;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (only && only != i + 1) continue;
    Outcome o;
    try {
      o = checks[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << checks[i].first << ": "
              << o.detail << "\n";
    ok = ok && o.pass;
  }
  return ok ? 0 : 1;
}

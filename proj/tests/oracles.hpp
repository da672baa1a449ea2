// Independent reference implementations used by the unit and acceptance tests.
// Nothing here calls into the code under test beyond plain data types.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "warrant/defeat.hpp"

namespace oracle {

using warrant::ArgumentFramework;
using warrant::Status;
using warrant::StatusAssignment;

inline ArgumentFramework random_framework(std::mt19937& rng, std::size_t max_args = 8,
                                          std::size_t max_attacks = 12) {
  std::uniform_int_distribution<std::size_t> nd(1, max_args);
  const std::size_t n = nd(rng);
  std::uniform_int_distribution<std::size_t> ad(0, std::min(max_attacks, n * n));
  const std::size_t attacks = ad(rng);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < attacks; ++i) edges.emplace(pick(rng), pick(rng));
  ArgumentFramework af;
  af.attackers.resize(n);
  for (auto [from, to] : edges) af.attackers[to].push_back(from);
  return af;
}

// Clause (1): an undefeated attacker forces "defeated".
// Clause (2): all attackers defeated (vacuously true without attackers)
// forces "undefeated".
inline bool consistent(const ArgumentFramework& af, const StatusAssignment& s) {
  for (std::size_t a = 0; a < af.size(); ++a) {
    bool some_undefeated = false;
    bool all_defeated = true;
    for (auto b : af.attackers[a]) {
      if (s[b] == Status::undefeated) some_undefeated = true;
      if (s[b] != Status::defeated) all_defeated = false;
    }
    if (some_undefeated && s[a] != Status::defeated) return false;
    if (all_defeated && s[a] != Status::undefeated) return false;
  }
  return true;
}

// x is contained in y: every argument x assigns, y assigns the same way.
inline bool contained(const StatusAssignment& x, const StatusAssignment& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != Status::unassigned && x[i] != y[i]) return false;
  }
  return true;
}

// Walks all 3^n labellings.
inline std::vector<StatusAssignment> brute_force_assignments(const ArgumentFramework& af) {
  const std::size_t n = af.size();
  std::vector<StatusAssignment> partial;
  StatusAssignment s(n, Status::unassigned);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= 3) s[i] = static_cast<Status>(c % 3);
    if (consistent(af, s)) partial.push_back(s);
  }
  std::vector<StatusAssignment> maximal;
  for (const auto& x : partial) {
    bool dominated = false;
    for (const auto& y : partial) {
      if (x != y && contained(x, y)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(x);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

inline std::vector<bool> undefeated_everywhere(std::size_t n,
                                               const std::vector<StatusAssignment>& all) {
  std::vector<bool> out(n, !all.empty());
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& s : all) {
      if (s[i] != Status::undefeated) out[i] = false;
    }
  }
  return out;
}

// ------------------------------------------------------------- planning

// STRIPS with conditional effects: doing `action` when every proposition of
// `condition` holds adds `effect`, or deletes it when `adds` is false.
struct Conditional {
  std::string action;
  std::vector<int> condition;
  int effect;
  bool adds = true;
};

struct PlanningProblem {
  std::set<int> initial;
  std::vector<Conditional> rules;
  std::vector<int> goal;
};

inline std::set<int> perform(const PlanningProblem& p, const std::set<int>& state,
                             const std::string& action) {
  std::set<int> adds, dels;
  for (const auto& r : p.rules) {
    if (r.action != action) continue;
    bool holds = std::all_of(r.condition.begin(), r.condition.end(),
                             [&](int c) { return state.count(c) > 0; });
    if (!holds) continue;
    (r.adds ? adds : dels).insert(r.effect);
  }
  std::set<int> next = state;
  for (int d : dels) next.erase(d);
  for (int a : adds) next.insert(a);
  return next;
}

inline bool satisfied(const PlanningProblem& p, const std::set<int>& state) {
  return std::all_of(p.goal.begin(), p.goal.end(), [&](int g) { return state.count(g) > 0; });
}

// Depth-first over every action sequence up to `max_steps` long.
inline bool plan_exists(const PlanningProblem& p, std::size_t max_steps,
                        const std::set<int>& state) {
  if (satisfied(p, state)) return true;
  if (max_steps == 0) return false;
  std::set<std::string> actions;
  for (const auto& r : p.rules) actions.insert(r.action);
  for (const auto& a : actions) {
    if (plan_exists(p, max_steps - 1, perform(p, state, a))) return true;
  }
  return false;
}

inline bool plan_exists(const PlanningProblem& p, std::size_t max_steps) {
  return plan_exists(p, max_steps, p.initial);
}

// Propositions 1..n; 0 is "ready", initially true and never deleted. Every
// other proposition is initial, unreachable, or has exactly one achiever
// whose condition uses lower-numbered propositions. Interference rules reuse
// an achiever's action under condition "ready" to delete a goal or a
// condition.
inline PlanningProblem random_problem(std::mt19937& rng, int props = 6) {
  PlanningProblem p;
  p.initial.insert(0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::string> actions;
  for (int i = 1; i <= props; ++i) {
    const double roll = u(rng);
    if (i == 1 || roll < 0.2) {
      p.initial.insert(i);
      continue;
    }
    if (roll < 0.35) continue;
    Conditional r{"act" + std::to_string(i), {}, i, true};
    std::uniform_int_distribution<int> lower(1, i - 1);
    const int k = u(rng) < 0.5 ? 1 : 2;
    for (int j = 0; j < k; ++j) {
      int c = lower(rng);
      if (std::find(r.condition.begin(), r.condition.end(), c) == r.condition.end()) {
        r.condition.push_back(c);
      }
    }
    actions.push_back(r.action);
    p.rules.push_back(std::move(r));
  }
  std::uniform_int_distribution<int> pg(1, props);
  std::uniform_int_distribution<int> goals(2, 3);
  for (int j = goals(rng); j > 0; --j) {
    int g = pg(rng);
    if (std::find(p.goal.begin(), p.goal.end(), g) == p.goal.end()) p.goal.push_back(g);
  }
  // Interference aimed at propositions something depends on.
  std::vector<int> needed = p.goal;
  for (const auto& r : p.rules) needed.insert(needed.end(), r.condition.begin(), r.condition.end());
  if (!actions.empty()) {
    std::uniform_int_distribution<std::size_t> pa(0, actions.size() - 1);
    std::uniform_int_distribution<std::size_t> pn(0, needed.size() - 1);
    std::uniform_int_distribution<int> count(1, 2);
    for (int j = count(rng); j > 0; --j) {
      p.rules.push_back({actions[pa(rng)], {0}, needed[pn(rng)], false});
    }
  }
  return p;
}

inline std::string prop_text(int i) {
  return i == 0 ? "(ready)" : "(p" + std::to_string(i) + " holds)";
}

inline std::string conjunction_text(const std::vector<int>& ps) {
  std::string out = prop_text(ps.back());
  for (auto it = ps.rbegin() + 1; it != ps.rend(); ++it) {
    out = "(" + prop_text(*it) + " & " + out + ")";
  }
  return out;
}

// The same problem as scenario text for the reasoner.
inline std::string scenario_text(const PlanningProblem& p) {
  std::string out;
  for (int i : p.initial) out += "premise: (initially " + prop_text(i) + ")\n";
  for (const auto& r : p.rules) {
    out += "premise: (((" + r.action + ") / " + conjunction_text(r.condition) + ") => " +
           (r.adds ? "" : "~") + prop_text(r.effect) + ")\n";
  }
  out += "query-plan: " + conjunction_text(p.goal) + "\n";
  return out;
}

// ------------------------------------------------------------ strengths

inline double projection_strength(double decay, double dt) {
  return 2.0 * std::pow(decay, dt) - 1.0;
}

inline double projection_window(double decay) { return std::log(0.5) / std::log(decay); }

}  // namespace oracle

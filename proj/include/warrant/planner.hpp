#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "warrant/engine.hpp"
#include "warrant/plan.hpp"

namespace warrant {

/// Plans referenced from formulas by constants "plan-N".
class PlanStore {
 public:
  /// Returns the id of an equal plan if one is stored already.
  std::size_t add(Plan p);
  const Plan& get(std::size_t id) const { return plans_.at(id); }
  std::size_t size() const { return plans_.size(); }

  static Expr term(std::size_t id);
  std::optional<std::size_t> id_of(const Expr& term) const;

 private:
  std::vector<Plan> plans_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Goal regression, conjunctive-goal splitting and threat detection as
/// engine hooks. Initial conditions are premises "(initially C)"; causal
/// knowledge is planning-conditionals "((A / C) => G)".
class Planner : public EngineExtension {
 public:
  explicit Planner(std::size_t max_steps) : max_steps_(max_steps) {}

  /// "(G at end)", or the conjunction of such for a conjunctive goal.
  static Expr goal_formula(const Expr& goal);
  /// Adopts interest in a plan for `goal` (as returned by goal_formula).
  std::size_t adopt_goal(Engine& e, const Expr& goal);

  void on_interest(Engine& e, const Interest& i) override;

  const PlanStore& store() const { return store_; }
  /// Plan referenced by a claim "(plan-N achieves X)".
  std::optional<std::size_t> claim_plan(const Expr& claim) const;

 private:
  void seek_plan(Engine& e, const Expr& goal, double priority);
  void regress_goal(Engine& e, const Expr& goal, double priority);
  void split_goal(Engine& e, const Expr& goal, double priority);
  void find_threats(Engine& e, const Interest& i);

  std::size_t max_steps_;
  PlanStore store_;
};

}  // namespace warrant

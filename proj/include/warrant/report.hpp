#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "warrant/defeat.hpp"
#include "warrant/dsl.hpp"
#include "warrant/engine.hpp"
#include "warrant/planner.hpp"

namespace warrant {

struct QueryResult {
  Expr formula;
  std::optional<std::size_t> node;
  bool justified = false;
  double degree = 0.0;
  std::optional<double> threshold;
};

struct PlanClaimResult {
  std::size_t node;
  std::size_t plan;
  bool justified;
  double degree;
};

struct PlanQueryResult {
  Expr goal;
  std::vector<PlanClaimResult> claims;
  bool justified = false;
};

struct Report {
  std::vector<QueryResult> queries;
  std::vector<PlanQueryResult> plans;
  /// Formulas of justified inference nodes, sorted by their printed form.
  std::vector<std::string> justified;
  std::size_t steps = 0;
  bool budget_exhausted = false;
  /// Set when exact status enumeration gave up; statuses are then absent.
  std::optional<std::string> enumeration_error;
  std::size_t nodes = 0;
  std::size_t links = 0;
  std::size_t defeat_links = 0;
  std::size_t arguments = 0;
  std::size_t assignments = 0;
};

struct RunOptions {
  std::optional<std::size_t> budget;
  std::optional<double> decay;
  std::function<void(const std::string&)> trace;
};

struct RunResult {
  std::unique_ptr<Engine> engine;
  std::shared_ptr<Planner> planner;
  std::optional<DefeatAnalysis> analysis;
  Report report;
};

/// Built-ins (unless switched off) with scenario schemas replacing
/// same-named ones.
std::vector<Reason> scenario_reasons(const Scenario& s);
EngineConfig scenario_config(const Scenario& s, const RunOptions& opts = {});

RunResult run_scenario(const Scenario& s, const RunOptions& opts = {});
/// Parses with built-ins available as defeatees. Throws DslError.
Scenario load_scenario(std::string_view text);

std::string format_text(const RunResult& r);
std::string format_json(const RunResult& r);
/// Graphviz document; defeasible links are reified as junction points so
/// defeat edges (dashed) can target them.
std::string export_dot(const InferenceGraph& g, const DefeatAnalysis* analysis);

}  // namespace warrant

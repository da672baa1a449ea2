#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "warrant/formula.hpp"
#include "warrant/reason.hpp"

namespace warrant {

/// Parse failure with a 1-based source location.
class DslError : public std::runtime_error {
 public:
  DslError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct PremiseEntry {
  Expr formula;
  double strength = 1.0;
  friend bool operator==(const PremiseEntry&, const PremiseEntry&) = default;
};

struct DesireEntry {
  Expr formula;
  double strength = 1.0;
  friend bool operator==(const DesireEntry&, const DesireEntry&) = default;
};

struct QueryEntry {
  Expr formula;
  std::optional<double> threshold;
  friend bool operator==(const QueryEntry&, const QueryEntry&) = default;
};

struct ConfigOverrides {
  std::optional<double> temporal_decay;
  std::optional<double> statistical_threshold;
  std::optional<double> interest_priority_discount;
  std::optional<std::size_t> step_budget;
  std::optional<std::size_t> max_plan_steps;
  std::optional<std::size_t> enumeration_budget;
  std::optional<bool> builtins;

  void apply(EngineConfig& config) const;
  friend bool operator==(const ConfigOverrides&, const ConfigOverrides&) = default;
};

struct Scenario {
  std::vector<Reason> schemas;
  std::vector<Expr> projectible;
  ConfigOverrides config;
  std::vector<PremiseEntry> premises;
  std::vector<Percept> percepts;
  std::vector<DesireEntry> desires;
  std::vector<QueryEntry> queries;
  std::vector<Expr> plan_queries;
};

bool operator==(const Percept& a, const Percept& b);
bool operator==(const Scenario& a, const Scenario& b);

/// Resolves `:defeatee` names.
using ReasonLookup = std::function<const Reason*(std::string_view)>;

/// Parses one def-forwards-reason / def-backwards-reason /
/// def-backwards-undercutter block.
Reason parse_schema(std::string_view text, const ReasonLookup& known = {});
std::string print_schema(const Reason& r);

/// `known` resolves defeatees not defined earlier in the file.
Scenario parse_scenario(std::string_view text, const ReasonLookup& known = {});
std::string print_scenario(const Scenario& s);

Condition parse_condition(std::string_view text, const VarSet& vars);
NumExpr parse_num_expr(std::string_view text, const VarSet& vars);

}  // namespace warrant

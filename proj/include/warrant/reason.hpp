#pragma once

#include <optional>
#include <string>
#include <vector>

#include "warrant/formula.hpp"

namespace warrant {

struct EngineConfig {
  double temporal_decay = 0.95;
  double statistical_threshold = 0.9;
  std::size_t step_budget = 10'000;
  double interest_priority_discount = 0.95;
  /// Plans longer than this are not constructed.
  std::size_t max_plan_steps = 4;
  /// Undecided arguments allowed before exact status enumeration gives up.
  std::size_t enumeration_budget = 25;
};

/// Extensional projectibility: a formula is projectible when it, or the
/// formula it negates, is declared.
class Projectibility {
 public:
  Projectibility() = default;
  explicit Projectibility(std::vector<Expr> declared) : declared_(std::move(declared)) {}

  void declare(Expr f) { declared_.push_back(std::move(f)); }
  bool projectible(const Expr& f) const;
  const std::vector<Expr>& declared() const { return declared_; }

 private:
  std::vector<Expr> declared_;
};

struct EvalContext {
  const EngineConfig& config;
  const Projectibility& projectibility;
};

/// Arithmetic used by both strengths and condition comparisons.
struct NumExpr {
  enum class Op { number, variable, global, add, sub, mul, div, log, expt };

  Op op = Op::number;
  double value = 0.0;
  /// Variable or global name.
  std::string name;
  std::vector<NumExpr> args;

  static NumExpr constant(double v) { return {Op::number, v, {}, {}}; }
  static NumExpr variable(std::string n) { return {Op::variable, 0.0, std::move(n), {}}; }
  static NumExpr global(std::string n) { return {Op::global, 0.0, std::move(n), {}}; }
  static NumExpr apply(Op op, std::vector<NumExpr> args) { return {op, 0.0, {}, std::move(args)}; }

  friend bool operator==(const NumExpr&, const NumExpr&) = default;
};

/// Boolean conditions over a binding. Unground arithmetic makes a comparison
/// false rather than an error.
struct Condition {
  enum class Op {
    all,
    any,
    negation,
    compare,
    projectible,
    every_conjunct_projectible,
    numberp,
    symbol_is,
  };
  enum class Cmp { lt, le, eq, ge, gt };

  Op op = Op::all;
  Cmp cmp = Cmp::lt;
  std::vector<Condition> children;
  std::vector<NumExpr> operands;
  /// Formula or term argument of the predicate forms.
  std::optional<Expr> subject;
  /// Symbol compared against by `symbol_is`.
  std::string symbol;

  friend bool operator==(const Condition&, const Condition&) = default;
};

std::string to_string(const NumExpr& e);
std::string to_string(const Condition& c);

std::optional<double> eval_number(const NumExpr& e, const Binding& b, const EvalContext& ctx);
/// Numeric value of a ground arithmetic term.
std::optional<double> eval_term(const Expr& t);
bool eval_condition(const Condition& c, const Binding& b, const EvalContext& ctx);
/// Absent when the expression does not ground to a finite number.
std::optional<double> eval_strength(const NumExpr& s, const Binding& b, const EvalContext& ctx);

enum class PremiseKind { inference, percept, desire };
const char* premise_kind_name(PremiseKind k);

struct Premise {
  Expr formula;
  PremiseKind kind = PremiseKind::inference;
  std::optional<Condition> condition;

  friend bool operator==(const Premise&, const Premise&) = default;
};

enum class Direction { forwards, backwards };

enum class ReasonClass {
  simple_forwards,
  mixed_forwards,
  simple_backwards,
  mixed_backwards,
  degenerate_backwards,
};
const char* reason_class_name(ReasonClass c);

/// A forwards or backwards reason-schema. Undercutters are backwards reasons
/// whose conclusion is generated from the defeatee (see expand_undercutter).
struct Reason {
  std::string name;
  Direction direction = Direction::forwards;
  std::vector<Premise> forwards_premises;
  std::vector<Premise> backwards_premises;
  std::optional<Expr> conclusion;
  bool defeasible = false;
  std::vector<std::string> variables;
  NumExpr strength = NumExpr::constant(1.0);
  /// Backwards reasons only: checked against the binding from the interest.
  std::optional<Condition> condition;
  /// Set for undercutters.
  std::optional<std::string> defeatee;

  VarSet variable_set() const { return {variables.begin(), variables.end()}; }

  friend bool operator==(const Reason&, const Reason&) = default;
};

ReasonClass classify(const Reason& r);

/// Premise patterns of `r` in order (forwards then backwards), conjoined.
Expr premise_conjunction(const Reason& r);

/// Fills in the undercutter's conclusion `(premises @> conclusion)` from the
/// defeatee and scopes the defeatee's variables into it.
Reason expand_undercutter(Reason undercutter, const Reason& defeatee);

struct Percept {
  Expr content;
  double clarity = 1.0;
  Number date;
};

}  // namespace warrant

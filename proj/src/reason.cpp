#include "warrant/reason.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace warrant {

bool Projectibility::projectible(const Expr& f) const {
  const Expr base = f.kind() == Kind::negation ? f.arg(0) : f;
  for (const auto& d : declared_) {
    if (d == base || d == f) return true;
  }
  return false;
}

// ------------------------------------------------------------ evaluation

std::optional<double> eval_term(const Expr& t) {
  switch (t.kind()) {
    case Kind::number:
      return t.num().value();
    case Kind::arithmetic: {
      auto a = eval_term(t.arg(0));
      auto b = eval_term(t.arg(1));
      if (!a || !b) return std::nullopt;
      switch (t.symbol()[0]) {
        case '+': return *a + *b;
        case '-': return *a - *b;
        case '*': return *a * *b;
        case '/': return *b == 0.0 ? std::nullopt : std::optional<double>(*a / *b);
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

std::optional<double> eval_number(const NumExpr& e, const Binding& b, const EvalContext& ctx) {
  using Op = NumExpr::Op;
  auto arg = [&](std::size_t i) { return eval_number(e.args.at(i), b, ctx); };
  std::optional<double> r;
  switch (e.op) {
    case Op::number:
      r = e.value;
      break;
    case Op::variable: {
      const Expr* v = b.find(e.name);
      if (!v) return std::nullopt;
      r = eval_term(substitute(*v, b));
      break;
    }
    case Op::global:
      if (e.name == "*temporal-decay*") r = ctx.config.temporal_decay;
      else if (e.name == "*statistical-threshold*") r = ctx.config.statistical_threshold;
      break;
    case Op::add:
    case Op::sub:
    case Op::mul:
    case Op::div:
    case Op::expt: {
      auto x = arg(0);
      auto y = arg(1);
      if (!x || !y) return std::nullopt;
      if (e.op == Op::add) r = *x + *y;
      else if (e.op == Op::sub) r = *x - *y;
      else if (e.op == Op::mul) r = *x * *y;
      else if (e.op == Op::div) r = *x / *y;
      else r = std::pow(*x, *y);
      break;
    }
    case Op::log: {
      auto x = arg(0);
      if (!x) return std::nullopt;
      r = std::log(*x);
      break;
    }
  }
  if (r && !std::isfinite(*r)) return std::nullopt;
  return r;
}

bool eval_condition(const Condition& c, const Binding& b, const EvalContext& ctx) {
  using Op = Condition::Op;
  switch (c.op) {
    case Op::all:
      for (const auto& k : c.children) {
        if (!eval_condition(k, b, ctx)) return false;
      }
      return true;
    case Op::any:
      for (const auto& k : c.children) {
        if (eval_condition(k, b, ctx)) return true;
      }
      return false;
    case Op::negation:
      return !eval_condition(c.children.at(0), b, ctx);
    case Op::compare: {
      auto x = eval_number(c.operands.at(0), b, ctx);
      auto y = eval_number(c.operands.at(1), b, ctx);
      if (!x || !y) return false;
      switch (c.cmp) {
        case Condition::Cmp::lt: return *x < *y;
        case Condition::Cmp::le: return *x <= *y;
        case Condition::Cmp::eq: return *x == *y;
        case Condition::Cmp::ge: return *x >= *y;
        case Condition::Cmp::gt: return *x > *y;
      }
      return false;
    }
    case Op::projectible: {
      Expr f = substitute(*c.subject, b);
      return f.ground() && ctx.projectibility.projectible(f);
    }
    case Op::every_conjunct_projectible: {
      Expr f = substitute(*c.subject, b);
      if (!f.ground()) return false;
      for (const auto& part : conjuncts(f)) {
        if (!ctx.projectibility.projectible(part)) return false;
      }
      return true;
    }
    case Op::numberp: {
      Expr t = substitute(*c.subject, b);
      return t.kind() == Kind::number;
    }
    case Op::symbol_is: {
      Expr t = substitute(*c.subject, b);
      return t.kind() == Kind::constant && t.symbol() == c.symbol;
    }
  }
  return false;
}

std::optional<double> eval_strength(const NumExpr& s, const Binding& b, const EvalContext& ctx) {
  return eval_number(s, b, ctx);
}

// -------------------------------------------------------------- printing

namespace {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

const char* cmp_symbol(Condition::Cmp c) {
  switch (c) {
    case Condition::Cmp::lt: return "<";
    case Condition::Cmp::le: return "<=";
    case Condition::Cmp::eq: return "=";
    case Condition::Cmp::ge: return ">=";
    case Condition::Cmp::gt: return ">";
  }
  return "?";
}

}  // namespace

std::string to_string(const NumExpr& e) {
  using Op = NumExpr::Op;
  switch (e.op) {
    case Op::number: return format_double(e.value);
    case Op::variable:
    case Op::global: return e.name;
    case Op::add: return "(" + to_string(e.args[0]) + " + " + to_string(e.args[1]) + ")";
    case Op::sub: return "(" + to_string(e.args[0]) + " - " + to_string(e.args[1]) + ")";
    case Op::mul: return "(" + to_string(e.args[0]) + " * " + to_string(e.args[1]) + ")";
    case Op::div: return "(" + to_string(e.args[0]) + " / " + to_string(e.args[1]) + ")";
    case Op::log: return "(log " + to_string(e.args[0]) + ")";
    case Op::expt: return "(expt " + to_string(e.args[0]) + " " + to_string(e.args[1]) + ")";
  }
  return "?";
}

std::string to_string(const Condition& c) {
  using Op = Condition::Op;
  auto join = [&](const char* head) {
    std::string s = std::string("(") + head;
    for (const auto& k : c.children) s += " " + to_string(k);
    return s + ")";
  };
  switch (c.op) {
    case Op::all: return join("and");
    case Op::any: return join("or");
    case Op::negation: return join("not");
    case Op::compare:
      return "(" + to_string(c.operands[0]) + " " + cmp_symbol(c.cmp) + " " +
             to_string(c.operands[1]) + ")";
    case Op::projectible: return "(temporally-projectible " + to_string(*c.subject) + ")";
    case Op::every_conjunct_projectible:
      return "(every #temporally-projectible (conjuncts " + to_string(*c.subject) + "))";
    case Op::numberp: return "(numberp " + to_string(*c.subject) + ")";
    case Op::symbol_is: return "(eq " + to_string(*c.subject) + " " + c.symbol + ")";
  }
  return "?";
}

// --------------------------------------------------------------- reasons

const char* premise_kind_name(PremiseKind k) {
  switch (k) {
    case PremiseKind::inference: return "inference";
    case PremiseKind::percept: return "percept";
    case PremiseKind::desire: return "desire";
  }
  return "?";
}

const char* reason_class_name(ReasonClass c) {
  switch (c) {
    case ReasonClass::simple_forwards: return "simple-forwards";
    case ReasonClass::mixed_forwards: return "mixed-forwards";
    case ReasonClass::simple_backwards: return "simple-backwards";
    case ReasonClass::mixed_backwards: return "mixed-backwards";
    case ReasonClass::degenerate_backwards: return "degenerate-backwards";
  }
  return "?";
}

ReasonClass classify(const Reason& r) {
  const bool fwd = !r.forwards_premises.empty();
  const bool bwd = !r.backwards_premises.empty();
  if (r.direction == Direction::forwards) {
    return bwd ? ReasonClass::mixed_forwards : ReasonClass::simple_forwards;
  }
  if (fwd && bwd) return ReasonClass::mixed_backwards;
  if (fwd) return ReasonClass::degenerate_backwards;
  return ReasonClass::simple_backwards;
}

Expr premise_conjunction(const Reason& r) {
  std::vector<Expr> parts;
  for (const auto& p : r.forwards_premises) parts.push_back(p.formula);
  for (const auto& p : r.backwards_premises) parts.push_back(p.formula);
  return conjoin(parts);
}

Reason expand_undercutter(Reason undercutter, const Reason& defeatee) {
  if (!defeatee.conclusion) throw std::invalid_argument("defeatee has no conclusion");
  undercutter.conclusion = Expr::undercut(premise_conjunction(defeatee), *defeatee.conclusion);
  undercutter.defeatee = defeatee.name;
  for (const auto& v : defeatee.variables) {
    if (std::find(undercutter.variables.begin(), undercutter.variables.end(), v) ==
        undercutter.variables.end()) {
      undercutter.variables.push_back(v);
    }
  }
  return undercutter;
}

}  // namespace warrant

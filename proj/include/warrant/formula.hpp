#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace warrant {

/// Exact rational when parsed from an integer or ratio, floating otherwise.
/// Mixed comparisons go through the floating value.
class Number {
 public:
  Number() = default;

  static Number rational(std::int64_t num, std::int64_t den = 1);
  static Number real(double v);

  bool exact() const { return exact_; }
  double value() const;
  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  std::string str() const;

  friend bool operator==(const Number& a, const Number& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  double real_ = 0.0;
  bool exact_ = true;
};

enum class Kind : std::uint8_t {
  // terms
  variable,
  constant,
  number,
  arithmetic,
  // formulas
  atom,
  negation,
  conjunction,
  disjunction,
  conditional,
  biconditional,
  universal,
  existential,
  at,
  throughout,
  undercut,
  probability,
  causal,
  planning,
  achieves,
};

const char* kind_name(Kind k);

/// Immutable, structurally shared expression tree. One node type covers both
/// terms and formulas because schema variables range over either.
class Expr {
 public:
  static Expr var(std::string name);
  static Expr constant(std::string name);
  static Expr number(Number n);
  static Expr arithmetic(char op, Expr lhs, Expr rhs);
  /// A one-word atom collapses to that word.
  static Expr atom(std::vector<Expr> words);
  /// Normalizing: equivalent to negate(body).
  static Expr negation(Expr body);
  static Expr binary(Kind k, Expr lhs, Expr rhs);
  static Expr quantified(Kind k, std::string var, Expr body);
  static Expr at(Expr body, Expr time);
  static Expr throughout(Expr body, Expr interval_op, Expr start, Expr end);
  static Expr undercut(Expr premises, Expr conclusion);
  /// `upper` selects `<=`; otherwise `>=`.
  static Expr probability(Expr target, Expr given, bool upper, Expr bound);
  static Expr causal(Expr action, Expr condition, Expr effect, Expr interval);
  static Expr planning(Expr action, Expr condition, Expr goal);
  static Expr achieves(Expr plan, Expr goal);
  /// Same kind, symbol and number as `proto` with new children. Negations
  /// are normalized.
  static Expr rebuild(const Expr& proto, std::vector<Expr> args);

  Kind kind() const { return node_->kind; }
  /// Variable/constant name, arithmetic operator, quantified variable, or the
  /// comparison ("<=" / ">=") of a probability bound.
  const std::string& symbol() const { return node_->symbol; }
  const Number& num() const { return node_->number; }
  std::span<const Expr> args() const { return node_->args; }
  const Expr& arg(std::size_t i) const { return node_->args.at(i); }
  std::size_t hash() const { return node_->hash; }
  /// True when the tree contains no variable nodes.
  bool ground() const { return node_->ground; }
  bool is_term() const;

  friend bool operator==(const Expr& a, const Expr& b);
  friend Expr negate(const Expr& f);

 private:
  struct Node {
    Kind kind;
    std::string symbol;
    Number number;
    std::vector<Expr> args;
    std::size_t hash = 0;
    bool ground = true;
  };

  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Expr make(Kind k, std::string symbol, Number n, std::vector<Expr> args);

  std::shared_ptr<const Node> node_;
};

struct ExprHash {
  std::size_t operator()(const Expr& e) const { return e.hash(); }
};

std::string to_string(const Expr& e);
std::ostream& operator<<(std::ostream& os, const Expr& e);

using VarSet = std::set<std::string, std::less<>>;

/// Variable assignment. Values are resolved through the binding on lookup so
/// applying it twice equals applying it once.
class Binding {
 public:
  using Map = std::map<std::string, Expr, std::less<>>;

  const Expr* find(std::string_view var) const;
  bool contains(std::string_view var) const { return find(var) != nullptr; }
  /// False when `var` is already bound to something else or the value
  /// mentions `var` after resolution (occurs check).
  bool bind(const std::string& var, const Expr& value);

  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }
  Map::const_iterator begin() const { return map_.begin(); }
  Map::const_iterator end() const { return map_.end(); }

  friend bool operator==(const Binding& a, const Binding& b) = default;

 private:
  Map map_;
};

std::string to_string(const Binding& b);

/// One-way matching: only `vars` occurring in `pattern` get bound.
std::optional<Binding> unify(const Expr& pattern, const Expr& target, const VarSet& vars,
                             const Binding& seed = {});
Expr substitute(const Expr& f, const Binding& b);
/// Involution. Negation is pushed inside `at` and double negations cancel.
Expr negate(const Expr& f);
/// True for negations and for `at` formulas whose body is negative.
bool is_negative(const Expr& f);
std::vector<Expr> conjuncts(const Expr& f);
/// Right-nested conjunction; a single formula is returned unchanged.
Expr conjoin(std::span<const Expr> parts);
void collect_variables(const Expr& f, VarSet& out);
bool mentions_variable(const Expr& f, std::string_view var);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Words in `vars`, and `?`-prefixed words, are schematic variables. A
/// `?`-word that is not declared is an error.
Expr parse_formula(std::string_view text, const VarSet& vars = {});
/// Parses one formula from the front of `text`; `end` receives the offset
/// just past it.
Expr parse_formula_prefix(std::string_view text, const VarSet& vars, std::size_t& end);
/// Parses a term (number, symbol, arithmetic or compound).
Expr parse_term(std::string_view text, const VarSet& vars = {});

}  // namespace warrant

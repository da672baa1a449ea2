#include "warrant/formula.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace warrant {

// ---------------------------------------------------------------- Number

Number Number::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  Number n;
  n.num_ = g ? num / g : num;
  n.den_ = g ? den / g : den;
  n.exact_ = true;
  return n;
}

Number Number::real(double v) {
  Number n;
  n.real_ = v;
  n.exact_ = false;
  return n;
}

double Number::value() const {
  return exact_ ? static_cast<double>(num_) / static_cast<double>(den_) : real_;
}

std::string Number::str() const {
  if (exact_) {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, real_);
  std::string s(buf, ptr);
  // Keep reals lexically distinct from integers so they re-parse as reals.
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

bool operator==(const Number& a, const Number& b) {
  if (a.exact_ && b.exact_) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.value() == b.value();
}

// ------------------------------------------------------------------ Expr

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::variable: return "variable";
    case Kind::constant: return "constant";
    case Kind::number: return "number";
    case Kind::arithmetic: return "arithmetic";
    case Kind::atom: return "atom";
    case Kind::negation: return "negation";
    case Kind::conjunction: return "conjunction";
    case Kind::disjunction: return "disjunction";
    case Kind::conditional: return "conditional";
    case Kind::biconditional: return "biconditional";
    case Kind::universal: return "universal";
    case Kind::existential: return "existential";
    case Kind::at: return "at";
    case Kind::throughout: return "throughout";
    case Kind::undercut: return "undercut";
    case Kind::probability: return "probability";
    case Kind::causal: return "causal";
    case Kind::planning: return "planning";
    case Kind::achieves: return "achieves";
  }
  return "?";
}

namespace {

inline std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Expr Expr::make(Kind k, std::string symbol, Number n, std::vector<Expr> args) {
  auto node = std::make_shared<Node>();
  std::size_t h = mix(0, static_cast<std::size_t>(k));
  h = mix(h, std::hash<std::string>{}(symbol));
  if (k == Kind::number) h = mix(h, std::hash<double>{}(n.value()));
  bool ground = k != Kind::variable;
  for (const auto& a : args) {
    h = mix(h, a.hash());
    ground = ground && a.ground();
  }
  node->kind = k;
  node->symbol = std::move(symbol);
  node->number = n;
  node->args = std::move(args);
  node->hash = h;
  node->ground = ground;
  return Expr(std::move(node));
}

Expr Expr::var(std::string name) { return make(Kind::variable, std::move(name), {}, {}); }
Expr Expr::constant(std::string name) { return make(Kind::constant, std::move(name), {}, {}); }
Expr Expr::number(Number n) { return make(Kind::number, {}, n, {}); }

Expr Expr::arithmetic(char op, Expr lhs, Expr rhs) {
  return make(Kind::arithmetic, std::string(1, op), {}, {std::move(lhs), std::move(rhs)});
}

Expr Expr::atom(std::vector<Expr> words) {
  if (words.empty()) throw std::invalid_argument("empty atom");
  if (words.size() == 1) return std::move(words.front());
  return make(Kind::atom, {}, {}, std::move(words));
}

Expr Expr::negation(Expr body) { return negate(body); }

Expr Expr::binary(Kind k, Expr lhs, Expr rhs) {
  switch (k) {
    case Kind::conjunction:
    case Kind::disjunction:
    case Kind::conditional:
    case Kind::biconditional:
    case Kind::undercut:
      break;
    default:
      throw std::invalid_argument("not a binary connective");
  }
  return make(k, {}, {}, {std::move(lhs), std::move(rhs)});
}

Expr Expr::quantified(Kind k, std::string var, Expr body) {
  if (k != Kind::universal && k != Kind::existential) {
    throw std::invalid_argument("not a quantifier");
  }
  return make(k, std::move(var), {}, {std::move(body)});
}

Expr Expr::at(Expr body, Expr time) {
  return make(Kind::at, {}, {}, {std::move(body), std::move(time)});
}

Expr Expr::throughout(Expr body, Expr interval_op, Expr start, Expr end) {
  return make(Kind::throughout, {}, {},
              {std::move(body), std::move(interval_op), std::move(start), std::move(end)});
}

Expr Expr::undercut(Expr premises, Expr conclusion) {
  return make(Kind::undercut, {}, {}, {std::move(premises), std::move(conclusion)});
}

Expr Expr::probability(Expr target, Expr given, bool upper, Expr bound) {
  return make(Kind::probability, upper ? "<=" : ">=", {},
              {std::move(target), std::move(given), std::move(bound)});
}

Expr Expr::causal(Expr action, Expr condition, Expr effect, Expr interval) {
  return make(Kind::causal, {}, {},
              {std::move(action), std::move(condition), std::move(effect), std::move(interval)});
}

Expr Expr::planning(Expr action, Expr condition, Expr goal) {
  return make(Kind::planning, {}, {}, {std::move(action), std::move(condition), std::move(goal)});
}

Expr Expr::achieves(Expr plan, Expr goal) {
  return make(Kind::achieves, {}, {}, {std::move(plan), std::move(goal)});
}

bool Expr::is_term() const {
  switch (kind()) {
    case Kind::variable:
    case Kind::constant:
    case Kind::number:
    case Kind::arithmetic:
      return true;
    default:
      return false;
  }
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  if (a.kind() != b.kind() || a.symbol() != b.symbol()) return false;
  if (a.kind() == Kind::number && !(a.num() == b.num())) return false;
  auto as = a.args();
  auto bs = b.args();
  if (as.size() != bs.size()) return false;
  for (std::size_t i = 0; i < as.size(); ++i) {
    if (!(as[i] == bs[i])) return false;
  }
  return true;
}

// -------------------------------------------------------------- printing

namespace {

const char* connective(Kind k) {
  switch (k) {
    case Kind::conjunction: return "&";
    case Kind::disjunction: return "v";
    case Kind::conditional: return "->";
    case Kind::biconditional: return "<->";
    case Kind::undercut: return "@>";
    default: return "?";
  }
}

void print(std::ostream& os, const Expr& e) {
  switch (e.kind()) {
    case Kind::variable:
    case Kind::constant:
      os << e.symbol();
      return;
    case Kind::number:
      os << e.num().str();
      return;
    case Kind::arithmetic:
      os << '(';
      print(os, e.arg(0));
      os << ' ' << e.symbol() << ' ';
      print(os, e.arg(1));
      os << ')';
      return;
    case Kind::atom: {
      os << '(';
      bool first = true;
      for (const auto& w : e.args()) {
        if (!first) os << ' ';
        first = false;
        print(os, w);
      }
      os << ')';
      return;
    }
    case Kind::negation:
      os << '~';
      print(os, e.arg(0));
      return;
    case Kind::conjunction:
    case Kind::disjunction:
    case Kind::conditional:
    case Kind::biconditional:
    case Kind::undercut:
      os << '(';
      print(os, e.arg(0));
      os << ' ' << connective(e.kind()) << ' ';
      print(os, e.arg(1));
      os << ')';
      return;
    case Kind::universal:
    case Kind::existential:
      os << (e.kind() == Kind::universal ? "(all " : "(some ") << e.symbol() << ' ';
      print(os, e.arg(0));
      os << ')';
      return;
    case Kind::at:
      os << '(';
      print(os, e.arg(0));
      os << " at ";
      print(os, e.arg(1));
      os << ')';
      return;
    case Kind::throughout:
      os << '(';
      print(os, e.arg(0));
      os << " throughout (";
      print(os, e.arg(1));
      os << ' ';
      print(os, e.arg(2));
      os << ' ';
      print(os, e.arg(3));
      os << "))";
      return;
    case Kind::probability:
      os << "((the probability of ";
      print(os, e.arg(0));
      os << " given ";
      print(os, e.arg(1));
      os << ") " << e.symbol() << ' ';
      print(os, e.arg(2));
      os << ')';
      return;
    case Kind::causal:
      os << '(';
      print(os, e.arg(0));
      os << " when ";
      print(os, e.arg(1));
      os << " is causally sufficient for ";
      print(os, e.arg(2));
      os << " after an interval ";
      print(os, e.arg(3));
      os << ')';
      return;
    case Kind::planning:
      os << "((";
      print(os, e.arg(0));
      os << " / ";
      print(os, e.arg(1));
      os << ") => ";
      print(os, e.arg(2));
      os << ')';
      return;
    case Kind::achieves:
      os << '(';
      print(os, e.arg(0));
      os << " achieves ";
      print(os, e.arg(1));
      os << ')';
      return;
  }
}

}  // namespace

std::string to_string(const Expr& e) {
  std::ostringstream os;
  print(os, e);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Expr& e) {
  print(os, e);
  return os;
}

// --------------------------------------------------------------- Binding

const Expr* Binding::find(std::string_view var) const {
  auto it = map_.find(var);
  return it == map_.end() ? nullptr : &it->second;
}

bool Binding::bind(const std::string& var, const Expr& value) {
  if (const Expr* existing = find(var)) return substitute(*existing, *this) == substitute(value, *this);
  Expr resolved = substitute(value, *this);
  if (mentions_variable(resolved, var)) return false;
  map_.emplace(var, std::move(resolved));
  return true;
}

std::string to_string(const Binding& b) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : b) {
    if (!first) out += ", ";
    first = false;
    out += k + " -> " + to_string(v);
  }
  return out + "}";
}

// ------------------------------------------------------- structural ops

bool is_negative(const Expr& f) {
  if (f.kind() == Kind::negation) return true;
  if (f.kind() == Kind::at) return is_negative(f.arg(0));
  return false;
}

Expr negate(const Expr& f) {
  if (f.kind() == Kind::negation) return f.arg(0);
  if (f.kind() == Kind::at) return Expr::at(negate(f.arg(0)), f.arg(1));
  return Expr::make(Kind::negation, {}, {}, {f});
}

Expr Expr::rebuild(const Expr& proto, std::vector<Expr> args) {
  if (proto.kind() == Kind::negation) return negate(args.at(0));
  if (proto.kind() == Kind::atom) return atom(std::move(args));
  return make(proto.kind(), proto.symbol(), proto.num(), std::move(args));
}

std::vector<Expr> conjuncts(const Expr& f) {
  std::vector<Expr> out;
  std::function<void(const Expr&)> walk = [&](const Expr& e) {
    if (e.kind() == Kind::conjunction) {
      walk(e.arg(0));
      walk(e.arg(1));
    } else {
      out.push_back(e);
    }
  };
  walk(f);
  return out;
}

Expr conjoin(std::span<const Expr> parts) {
  if (parts.empty()) throw std::invalid_argument("empty conjunction");
  Expr acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) {
    acc = Expr::binary(Kind::conjunction, parts[i], acc);
  }
  return acc;
}

void collect_variables(const Expr& f, VarSet& out) {
  if (f.ground()) return;
  if (f.kind() == Kind::variable) {
    out.insert(f.symbol());
    return;
  }
  for (const auto& a : f.args()) collect_variables(a, out);
}

bool mentions_variable(const Expr& f, std::string_view var) {
  if (f.ground()) return false;
  if (f.kind() == Kind::variable) return f.symbol() == var;
  for (const auto& a : f.args()) {
    if (mentions_variable(a, var)) return true;
  }
  return false;
}

Expr substitute(const Expr& f, const Binding& b) {
  if (f.ground() || b.empty()) return f;
  if (f.kind() == Kind::variable) {
    const Expr* v = b.find(f.symbol());
    return v ? substitute(*v, b) : f;
  }
  std::vector<Expr> args;
  args.reserve(f.args().size());
  bool changed = false;
  for (const auto& a : f.args()) {
    args.push_back(substitute(a, b));
    changed = changed || !(args.back() == a);
  }
  return changed ? Expr::rebuild(f, std::move(args)) : f;
}

namespace {

bool match(const Expr& p, const Expr& t, const VarSet& vars, Binding& b) {
  if (p.kind() == Kind::variable && vars.contains(p.symbol())) {
    if (const Expr* bound = b.find(p.symbol())) return *bound == t;
    return b.bind(p.symbol(), t);
  }
  if (p.ground()) return p == t;
  // ~X against a canonical negative target: match X with its complement.
  if (p.kind() == Kind::negation && t.kind() != Kind::negation) {
    return is_negative(t) && match(p.arg(0), negate(t), vars, b);
  }
  if (p.kind() != t.kind() || p.symbol() != t.symbol()) return false;
  auto ps = p.args();
  auto ts = t.args();
  if (ps.size() != ts.size()) return false;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (!match(ps[i], ts[i], vars, b)) return false;
  }
  return true;
}

}  // namespace

std::optional<Binding> unify(const Expr& pattern, const Expr& target, const VarSet& vars,
                             const Binding& seed) {
  Binding b = seed;
  if (!match(substitute(pattern, seed), target, vars, b)) return std::nullopt;
  return b;
}

}  // namespace warrant

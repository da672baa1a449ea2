#include "warrant/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace warrant {

DslError::DslError(const std::string& msg, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + msg),
      line_(line),
      column_(column) {}

namespace {

// Errors inside this file carry an absolute offset; callers translate it.
struct OffsetError {
  std::string message;
  std::size_t offset;
};

std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// ----------------------------------------------------------- s-expressions

struct Sexp {
  enum Type { symbol, string, list } type = symbol;
  std::string text;
  std::vector<Sexp> items;
  std::size_t offset = 0;

  bool is(std::string_view s) const { return type == symbol && text == s; }
  bool head(std::string_view s) const { return type == list && !items.empty() && items[0].is(s); }
};

std::string to_string(const Sexp& s) {
  switch (s.type) {
    case Sexp::symbol: return s.text;
    case Sexp::string: return "\"" + s.text + "\"";
    case Sexp::list: {
      std::string out = "(";
      for (std::size_t i = 0; i < s.items.size(); ++i) {
        if (i) out += ' ';
        out += to_string(s.items[i]);
      }
      return out + ")";
    }
  }
  return {};
}

class SexpReader {
 public:
  explicit SexpReader(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool done() {
    skip();
    return pos_ >= text_.size();
  }

  Sexp read() {
    skip();
    if (pos_ >= text_.size()) throw OffsetError{"unexpected end of input", base_ + pos_};
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == ')') throw OffsetError{"unexpected ')'", base_ + pos_};
    if (c == '(') {
      ++pos_;
      Sexp l{Sexp::list, {}, {}, base_ + start};
      for (;;) {
        skip();
        if (pos_ >= text_.size()) throw OffsetError{"unbalanced '('", base_ + start};
        if (text_[pos_] == ')') {
          ++pos_;
          return l;
        }
        l.items.push_back(read());
      }
    }
    if (c == '"') {
      const std::size_t close = text_.find('"', pos_ + 1);
      if (close == std::string_view::npos) throw OffsetError{"unterminated string", base_ + start};
      Sexp s{Sexp::string, std::string(text_.substr(pos_ + 1, close - pos_ - 1)), {},
             base_ + start};
      pos_ = close + 1;
      return s;
    }
    while (pos_ < text_.size()) {
      const char d = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == '"' ||
          d == ';') {
        break;
      }
      ++pos_;
    }
    return Sexp{Sexp::symbol, std::string(text_.substr(start, pos_ - start)), {}, base_ + start};
  }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

// ------------------------------------------------------------- numbers

std::optional<double> to_double(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::string buf(s);
  if (buf[0] == '+') buf.erase(0, 1);
  if (!buf.empty() && buf[0] == '.') buf.insert(0, "0");
  if (buf.size() > 1 && buf[0] == '-' && buf[1] == '.') buf.insert(1, "0");
  double d = 0;
  auto r = std::from_chars(buf.data(), buf.data() + buf.size(), d);
  if (r.ec != std::errc{} || r.ptr != buf.data() + buf.size()) return std::nullopt;
  return d;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

bool is_global(std::string_view s) {
  return s == "*temporal-decay*" || s == "*statistical-threshold*";
}

// --------------------------------------------------- conditions/strengths

Expr subject_from(const Sexp& s, const VarSet& vars) {
  try {
    return parse_term(to_string(s), vars);
  } catch (const ParseError& e) {
    throw OffsetError{e.what(), s.offset};
  }
}

NumExpr num_from(const Sexp& s, const VarSet& vars) {
  using Op = NumExpr::Op;
  if (s.type == Sexp::string) throw OffsetError{"string in arithmetic", s.offset};
  if (s.type == Sexp::symbol) {
    if (auto d = to_double(s.text)) return NumExpr::constant(*d);
    if (is_global(s.text)) return NumExpr::global(s.text);
    if (vars.contains(s.text)) return NumExpr::variable(s.text);
    throw OffsetError{"undeclared variable '" + s.text + "'", s.offset};
  }
  const auto& it = s.items;
  auto binop = [](std::string_view w) -> std::optional<Op> {
    if (w == "+") return Op::add;
    if (w == "-") return Op::sub;
    if (w == "*") return Op::mul;
    if (w == "/") return Op::div;
    return std::nullopt;
  };
  if (it.size() == 3 && it[1].type == Sexp::symbol) {
    if (auto op = binop(it[1].text)) {
      return NumExpr::apply(*op, {num_from(it[0], vars), num_from(it[2], vars)});
    }
  }
  if (it.size() == 3 && it[0].type == Sexp::symbol) {
    if (auto op = binop(it[0].text)) {
      return NumExpr::apply(*op, {num_from(it[1], vars), num_from(it[2], vars)});
    }
    if (it[0].is("expt")) {
      return NumExpr::apply(Op::expt, {num_from(it[1], vars), num_from(it[2], vars)});
    }
  }
  if (it.size() == 2 && it[0].is("log")) return NumExpr::apply(Op::log, {num_from(it[1], vars)});
  throw OffsetError{"malformed arithmetic " + to_string(s), s.offset};
}

std::optional<Condition::Cmp> comparison(const Sexp& s) {
  if (s.type != Sexp::symbol) return std::nullopt;
  if (s.text == "<") return Condition::Cmp::lt;
  if (s.text == "<=") return Condition::Cmp::le;
  if (s.text == "=") return Condition::Cmp::eq;
  if (s.text == ">=") return Condition::Cmp::ge;
  if (s.text == ">") return Condition::Cmp::gt;
  return std::nullopt;
}

Condition cond_from(const Sexp& s, const VarSet& vars) {
  using Op = Condition::Op;
  if (s.type != Sexp::list || s.items.empty()) {
    throw OffsetError{"malformed condition " + to_string(s), s.offset};
  }
  const auto& it = s.items;
  Condition c;
  if (it[0].is("and") || it[0].is("or")) {
    c.op = it[0].is("and") ? Op::all : Op::any;
    for (std::size_t i = 1; i < it.size(); ++i) c.children.push_back(cond_from(it[i], vars));
    return c;
  }
  if (it[0].is("not") && it.size() == 2) {
    c.op = Op::negation;
    c.children.push_back(cond_from(it[1], vars));
    return c;
  }
  if (it[0].is("temporally-projectible") && it.size() == 2) {
    c.op = Op::projectible;
    c.subject = subject_from(it[1], vars);
    return c;
  }
  if (it[0].is("numberp") && it.size() == 2) {
    c.op = Op::numberp;
    c.subject = subject_from(it[1], vars);
    return c;
  }
  if (it[0].is("eq") && it.size() == 3 && it[2].type == Sexp::symbol) {
    c.op = Op::symbol_is;
    c.subject = subject_from(it[1], vars);
    c.symbol = it[2].text;
    if (!c.symbol.empty() && c.symbol[0] == '\'') c.symbol.erase(0, 1);
    return c;
  }
  if (it[0].is("every") && it.size() == 3 && it[1].is("#temporally-projectible") &&
      it[2].head("conjuncts") && it[2].items.size() == 2) {
    c.op = Op::every_conjunct_projectible;
    c.subject = subject_from(it[2].items[1], vars);
    return c;
  }
  if (it.size() == 3) {
    if (auto cmp = comparison(it[1])) {
      c.op = Op::compare;
      c.cmp = *cmp;
      c.operands = {num_from(it[0], vars), num_from(it[2], vars)};
      return c;
    }
    if (auto cmp = comparison(it[0])) {
      c.op = Op::compare;
      c.cmp = *cmp;
      c.operands = {num_from(it[1], vars), num_from(it[2], vars)};
      return c;
    }
  }
  throw OffsetError{"malformed condition " + to_string(s), s.offset};
}

// ----------------------------------------------------------------- schemas

const std::vector<std::string_view> kKeywords = {
    ":forwards-premises", ":backwards-premises", ":conclusion", ":strength",
    ":variables",         ":defeasible?",        ":condition",  ":defeatee"};

Expr formula_from(const Sexp& s, const VarSet& vars) {
  if (s.type != Sexp::string) throw OffsetError{"expected a quoted formula", s.offset};
  try {
    return parse_formula(s.text, vars);
  } catch (const ParseError& e) {
    throw OffsetError{e.what(), s.offset + 1 + e.offset()};
  }
}

std::vector<Premise> premises_from(const std::vector<Sexp>& items, const VarSet& vars) {
  std::vector<Premise> out;
  for (const auto& s : items) {
    if (s.type == Sexp::string) {
      out.push_back(Premise{formula_from(s, vars), PremiseKind::inference, std::nullopt});
      continue;
    }
    if (out.empty()) throw OffsetError{"premise annotation before any premise", s.offset};
    if (s.head(":kind") && s.items.size() == 2) {
      const auto& k = s.items[1];
      if (k.is(":percept")) out.back().kind = PremiseKind::percept;
      else if (k.is(":desire")) out.back().kind = PremiseKind::desire;
      else if (k.is(":inference")) out.back().kind = PremiseKind::inference;
      else throw OffsetError{"unknown premise kind " + to_string(k), k.offset};
    } else if (s.head(":condition") && s.items.size() == 2) {
      out.back().condition = cond_from(s.items[1], vars);
    } else {
      throw OffsetError{"unexpected premise item " + to_string(s), s.offset};
    }
  }
  return out;
}

Reason schema_from(const Sexp& s, const ReasonLookup& known) {
  if (s.type != Sexp::list || s.items.size() < 2 || s.items[1].type != Sexp::symbol) {
    throw OffsetError{"expected (def-... NAME ...)", s.offset};
  }
  const auto& head = s.items[0];
  Reason r;
  bool undercutter = false;
  if (head.is("def-forwards-reason")) {
    r.direction = Direction::forwards;
  } else if (head.is("def-backwards-reason")) {
    r.direction = Direction::backwards;
  } else if (head.is("def-backwards-undercutter")) {
    r.direction = Direction::backwards;
    undercutter = true;
  } else {
    throw OffsetError{"unknown definition form " + to_string(head), head.offset};
  }
  r.name = s.items[1].text;

  std::map<std::string, std::vector<Sexp>, std::less<>> sections;
  std::string current;
  for (std::size_t i = 2; i < s.items.size(); ++i) {
    const auto& it = s.items[i];
    if (it.type == Sexp::symbol && !it.text.empty() && it.text[0] == ':') {
      if (std::find(kKeywords.begin(), kKeywords.end(), it.text) == kKeywords.end()) {
        throw OffsetError{"unknown keyword " + it.text, it.offset};
      }
      if (sections.contains(it.text)) throw OffsetError{"duplicate keyword " + it.text, it.offset};
      current = it.text;
      sections[current];
      continue;
    }
    if (current.empty()) throw OffsetError{"expected a keyword", it.offset};
    sections[current].push_back(it);
  }
  auto section = [&](std::string_view k) -> const std::vector<Sexp>* {
    auto f = sections.find(k);
    return f == sections.end() ? nullptr : &f->second;
  };
  auto single = [&](std::string_view k) -> const Sexp* {
    const auto* v = section(k);
    if (!v) return nullptr;
    if (v->size() != 1) {
      throw OffsetError{std::string(k) + " takes exactly one value", v->empty() ? s.offset
                                                                                 : v->front().offset};
    }
    return &v->front();
  };

  if (const auto* vs = section(":variables")) {
    for (const auto& v : *vs) {
      if (v.type != Sexp::symbol) throw OffsetError{"variables must be symbols", v.offset};
      r.variables.push_back(v.text);
    }
  }

  const Reason* defeatee = nullptr;
  if (const auto* d = single(":defeatee")) {
    if (!undercutter) throw OffsetError{":defeatee is only valid for undercutters", d->offset};
    defeatee = known ? known(d->text) : nullptr;
    if (!defeatee) throw OffsetError{"unknown defeatee " + d->text, d->offset};
  } else if (undercutter) {
    throw OffsetError{"undercutter without :defeatee", s.offset};
  }

  VarSet vars = r.variable_set();
  if (defeatee) vars.insert(defeatee->variables.begin(), defeatee->variables.end());

  if (const auto* p = section(":forwards-premises")) r.forwards_premises = premises_from(*p, vars);
  if (const auto* p = section(":backwards-premises")) {
    r.backwards_premises = premises_from(*p, vars);
  }
  if (const auto* c = single(":conclusion")) {
    if (undercutter) throw OffsetError{"undercutters derive their conclusion", c->offset};
    r.conclusion = formula_from(*c, vars);
  } else if (!undercutter) {
    throw OffsetError{"missing :conclusion", s.offset};
  }
  if (const auto* st = single(":strength")) r.strength = num_from(*st, vars);
  if (const auto* d = single(":defeasible?")) {
    if (d->is("t") || d->is("T")) r.defeasible = true;
    else if (d->is("nil") || d->is("NIL")) r.defeasible = false;
    else throw OffsetError{":defeasible? expects T or NIL", d->offset};
  }
  if (const auto* c = single(":condition")) {
    if (r.direction != Direction::backwards) {
      throw OffsetError{":condition is only valid for backwards reasons", c->offset};
    }
    r.condition = cond_from(*c, vars);
  }
  if (defeatee) r = expand_undercutter(std::move(r), *defeatee);
  return r;
}

std::string quote(const Expr& e) { return "\"" + to_string(e) + "\""; }

void print_premises(std::ostringstream& os, const std::vector<Premise>& ps) {
  for (const auto& p : ps) {
    os << "\n    " << quote(p.formula);
    if (p.kind != PremiseKind::inference) os << " (:kind :" << premise_kind_name(p.kind) << ")";
    if (p.condition) os << " (:condition " << to_string(*p.condition) << ")";
  }
}

}  // namespace

Condition parse_condition(std::string_view text, const VarSet& vars) {
  try {
    SexpReader rd(text);
    Sexp s = rd.read();
    if (!rd.done()) throw OffsetError{"trailing input", 0};
    return cond_from(s, vars);
  } catch (const OffsetError& e) {
    auto [l, c] = locate(text, e.offset);
    throw DslError(e.message, l, c);
  }
}

NumExpr parse_num_expr(std::string_view text, const VarSet& vars) {
  try {
    SexpReader rd(text);
    Sexp s = rd.read();
    if (!rd.done()) throw OffsetError{"trailing input", 0};
    return num_from(s, vars);
  } catch (const OffsetError& e) {
    auto [l, c] = locate(text, e.offset);
    throw DslError(e.message, l, c);
  }
}

Reason parse_schema(std::string_view text, const ReasonLookup& known) {
  try {
    SexpReader rd(text);
    Sexp s = rd.read();
    if (!rd.done()) throw OffsetError{"trailing input after schema", 0};
    return schema_from(s, known);
  } catch (const OffsetError& e) {
    auto [l, c] = locate(text, e.offset);
    throw DslError(e.message, l, c);
  }
}

std::string print_schema(const Reason& r) {
  std::ostringstream os;
  if (r.defeatee) {
    os << "(def-backwards-undercutter " << r.name << "\n  :defeatee " << *r.defeatee;
  } else if (r.direction == Direction::forwards) {
    os << "(def-forwards-reason " << r.name;
  } else {
    os << "(def-backwards-reason " << r.name;
  }
  if (r.conclusion && !r.defeatee) os << "\n  :conclusion " << quote(*r.conclusion);
  if (r.condition) os << "\n  :condition " << to_string(*r.condition);
  if (!r.forwards_premises.empty()) {
    os << "\n  :forwards-premises";
    print_premises(os, r.forwards_premises);
  }
  if (!r.backwards_premises.empty()) {
    os << "\n  :backwards-premises";
    print_premises(os, r.backwards_premises);
  }
  if (!(r.strength == NumExpr::constant(1.0))) os << "\n  :strength " << to_string(r.strength);
  if (!r.variables.empty()) {
    os << "\n  :variables";
    for (const auto& v : r.variables) os << ' ' << v;
  }
  os << "\n  :defeasible? " << (r.defeasible ? "T" : "NIL") << ")";
  return os.str();
}

// --------------------------------------------------------------- scenarios

void ConfigOverrides::apply(EngineConfig& c) const {
  if (temporal_decay) c.temporal_decay = *temporal_decay;
  if (statistical_threshold) c.statistical_threshold = *statistical_threshold;
  if (interest_priority_discount) c.interest_priority_discount = *interest_priority_discount;
  if (step_budget) c.step_budget = *step_budget;
  if (max_plan_steps) c.max_plan_steps = *max_plan_steps;
  if (enumeration_budget) c.enumeration_budget = *enumeration_budget;
}

bool operator==(const Percept& a, const Percept& b) {
  return a.content == b.content && a.clarity == b.clarity && a.date == b.date;
}

bool operator==(const Scenario& a, const Scenario& b) {
  return a.schemas == b.schemas && a.projectible == b.projectible && a.config == b.config &&
         a.premises == b.premises && a.percepts == b.percepts && a.desires == b.desires &&
         a.queries == b.queries && a.plan_queries == b.plan_queries;
}

namespace {

std::vector<std::pair<std::string, std::size_t>> words_with_offsets(std::string_view text,
                                                                   std::size_t base) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.emplace_back(std::string(text.substr(start, i - start)), base + start);
  }
  return out;
}

struct EntryParser {
  std::string_view body;
  std::size_t base;

  Expr formula(std::vector<std::pair<std::string, std::size_t>>& rest) const {
    std::size_t end = 0;
    Expr f = [&] {
      try {
        return parse_formula_prefix(body, {}, end);
      } catch (const ParseError& e) {
        throw OffsetError{e.what(), base + e.offset()};
      }
    }();
    rest = words_with_offsets(body.substr(end), base + end);
    return f;
  }

  static double number(const std::pair<std::string, std::size_t>& w) {
    auto d = to_double(w.first);
    if (!d) {
      // Accept ratios too.
      try {
        Expr e = parse_term(w.first);
        if (e.kind() == Kind::number) return e.num().value();
      } catch (const ParseError&) {
      }
      throw OffsetError{"expected a number, got '" + w.first + "'", w.second};
    }
    return *d;
  }

  static Number exact_number(const std::pair<std::string, std::size_t>& w) {
    try {
      Expr e = parse_term(w.first);
      if (e.kind() == Kind::number) return e.num();
    } catch (const ParseError&) {
    }
    throw OffsetError{"expected a number, got '" + w.first + "'", w.second};
  }

  // key value pairs after the formula
  static std::map<std::string, std::pair<std::string, std::size_t>> options(
      const std::vector<std::pair<std::string, std::size_t>>& rest,
      std::initializer_list<std::string_view> allowed) {
    std::map<std::string, std::pair<std::string, std::size_t>> out;
    for (std::size_t i = 0; i < rest.size(); i += 2) {
      const auto& key = rest[i];
      if (std::find(allowed.begin(), allowed.end(), key.first) == allowed.end()) {
        throw OffsetError{"unexpected '" + key.first + "'", key.second};
      }
      if (i + 1 >= rest.size()) throw OffsetError{"missing value for " + key.first, key.second};
      out[key.first] = rest[i + 1];
    }
    return out;
  }
};

std::size_t paren_balance(std::string_view s) {
  long depth = 0;
  bool in_string = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (in_string) {
      if (c == '"') in_string = false;
      continue;
    }
    if (c == '"') in_string = true;
    else if (c == ';') {
      while (i < s.size() && s[i] != '\n') ++i;
    } else if (c == '(') ++depth;
    else if (c == ')') --depth;
  }
  return depth > 0 ? static_cast<std::size_t>(depth) : 0;
}

std::string_view strip_comment(std::string_view line) {
  const auto semi = line.find(';');
  return semi == std::string_view::npos ? line : line.substr(0, semi);
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

}  // namespace

Scenario parse_scenario(std::string_view text, const ReasonLookup& known) {
  Scenario sc;
  try {
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      std::string_view line = strip_comment(text.substr(pos, eol - pos));
      const std::size_t line_start = pos;
      pos = eol + 1;
      if (blank(line)) continue;

      const auto colon = line.find(':');
      std::size_t key_start = 0;
      while (std::isspace(static_cast<unsigned char>(line[key_start]))) ++key_start;
      if (colon == std::string_view::npos) {
        throw OffsetError{"expected 'section: ...'", line_start + key_start};
      }
      std::string key(line.substr(key_start, colon - key_start));
      while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
      const std::size_t body_start = line_start + colon + 1;
      std::string_view body = line.substr(colon + 1);

      if (key == "schema") {
        // Extend across lines until parentheses balance.
        std::size_t end = line_start + line.size();
        std::string_view block = text.substr(body_start, end - body_start);
        while (paren_balance(block) > 0 && pos <= text.size()) {
          if (pos >= text.size()) throw OffsetError{"unterminated schema", body_start};
          std::size_t e2 = text.find('\n', pos);
          if (e2 == std::string_view::npos) e2 = text.size();
          end = e2;
          pos = e2 + 1;
          block = text.substr(body_start, end - body_start);
        }
        SexpReader rd(block, body_start);
        Sexp s = rd.read();
        if (!rd.done()) throw OffsetError{"trailing input after schema", body_start};
        ReasonLookup lookup = [&](std::string_view name) -> const Reason* {
          for (const auto& r : sc.schemas) {
            if (r.name == name) return &r;
          }
          return known ? known(name) : nullptr;
        };
        Reason r = schema_from(s, lookup);
        for (const auto& existing : sc.schemas) {
          if (existing.name == r.name) {
            throw OffsetError{"duplicate schema name " + r.name, s.offset};
          }
        }
        sc.schemas.push_back(std::move(r));
        continue;
      }

      EntryParser ep{body, body_start};
      std::vector<std::pair<std::string, std::size_t>> rest;
      if (key == "config") {
        auto w = words_with_offsets(body, body_start);
        if (w.size() != 2) throw OffsetError{"config expects 'key value'", body_start};
        const auto& k = w[0].first;
        auto& c = sc.config;
        auto count = [&] {
          const double d = EntryParser::number(w[1]);
          if (d < 1 || d != static_cast<double>(static_cast<std::size_t>(d))) {
            throw OffsetError{"expected a positive integer", w[1].second};
          }
          return static_cast<std::size_t>(d);
        };
        if (k == "temporal-decay") c.temporal_decay = EntryParser::number(w[1]);
        else if (k == "statistical-threshold") c.statistical_threshold = EntryParser::number(w[1]);
        else if (k == "interest-discount") c.interest_priority_discount = EntryParser::number(w[1]);
        else if (k == "budget") c.step_budget = count();
        else if (k == "max-plan-steps") c.max_plan_steps = count();
        else if (k == "enumeration-budget") c.enumeration_budget = count();
        else if (k == "builtins") {
          if (w[1].first == "on") c.builtins = true;
          else if (w[1].first == "off") c.builtins = false;
          else throw OffsetError{"builtins expects on or off", w[1].second};
        } else {
          throw OffsetError{"unknown config key " + k, w[0].second};
        }
        if (c.temporal_decay && !(*c.temporal_decay > 0 && *c.temporal_decay < 1)) {
          throw OffsetError{"temporal-decay must lie in (0,1)", w[1].second};
        }
      } else if (key == "projectible") {
        sc.projectible.push_back(ep.formula(rest));
        if (!rest.empty()) throw OffsetError{"unexpected '" + rest[0].first + "'", rest[0].second};
      } else if (key == "premise") {
        PremiseEntry p{ep.formula(rest)};
        auto opts = EntryParser::options(rest, {"strength"});
        if (opts.contains("strength")) p.strength = EntryParser::number(opts["strength"]);
        if (!(p.strength > 0 && p.strength <= 1)) throw OffsetError{"strength must lie in (0,1]", body_start};
        sc.premises.push_back(std::move(p));
      } else if (key == "percept") {
        Expr content = ep.formula(rest);
        auto opts = EntryParser::options(rest, {"clarity", "at"});
        Percept p{content, 1.0, Number::rational(0)};
        if (opts.contains("clarity")) p.clarity = EntryParser::number(opts["clarity"]);
        if (!opts.contains("at")) throw OffsetError{"percept needs 'at <date>'", body_start};
        p.date = EntryParser::exact_number(opts["at"]);
        if (!(p.clarity > 0 && p.clarity <= 1)) throw OffsetError{"clarity must lie in (0,1]", body_start};
        sc.percepts.push_back(std::move(p));
      } else if (key == "desire") {
        DesireEntry d{ep.formula(rest)};
        auto opts = EntryParser::options(rest, {"strength"});
        if (opts.contains("strength")) d.strength = EntryParser::number(opts["strength"]);
        sc.desires.push_back(std::move(d));
      } else if (key == "query") {
        QueryEntry q{ep.formula(rest), std::nullopt};
        auto opts = EntryParser::options(rest, {"threshold"});
        if (opts.contains("threshold")) q.threshold = EntryParser::number(opts["threshold"]);
        sc.queries.push_back(std::move(q));
      } else if (key == "query-plan") {
        sc.plan_queries.push_back(ep.formula(rest));
        if (!rest.empty()) throw OffsetError{"unexpected '" + rest[0].first + "'", rest[0].second};
      } else {
        throw OffsetError{"unknown section '" + key + "'", line_start + key_start};
      }
    }
  } catch (const OffsetError& e) {
    auto [l, c] = locate(text, e.offset);
    throw DslError(e.message, l, c);
  }
  return sc;
}

std::string print_scenario(const Scenario& s) {
  std::ostringstream os;
  const auto& c = s.config;
  if (c.temporal_decay) os << "config: temporal-decay " << format_double(*c.temporal_decay) << '\n';
  if (c.statistical_threshold) {
    os << "config: statistical-threshold " << format_double(*c.statistical_threshold) << '\n';
  }
  if (c.interest_priority_discount) {
    os << "config: interest-discount " << format_double(*c.interest_priority_discount) << '\n';
  }
  if (c.step_budget) os << "config: budget " << *c.step_budget << '\n';
  if (c.max_plan_steps) os << "config: max-plan-steps " << *c.max_plan_steps << '\n';
  if (c.enumeration_budget) os << "config: enumeration-budget " << *c.enumeration_budget << '\n';
  if (c.builtins) os << "config: builtins " << (*c.builtins ? "on" : "off") << '\n';
  for (const auto& p : s.projectible) os << "projectible: " << p << '\n';
  for (const auto& r : s.schemas) os << "schema: " << print_schema(r) << '\n';
  for (const auto& p : s.premises) {
    os << "premise: " << p.formula;
    if (p.strength != 1.0) os << " strength " << format_double(p.strength);
    os << '\n';
  }
  for (const auto& p : s.percepts) {
    os << "percept: " << p.content << " clarity " << format_double(p.clarity) << " at "
       << p.date.str() << '\n';
  }
  for (const auto& d : s.desires) {
    os << "desire: " << d.formula << " strength " << format_double(d.strength) << '\n';
  }
  for (const auto& q : s.queries) {
    os << "query: " << q.formula;
    if (q.threshold) os << " threshold " << format_double(*q.threshold);
    os << '\n';
  }
  for (const auto& g : s.plan_queries) os << "query-plan: " << g << '\n';
  return os.str();
}

}  // namespace warrant

#include <cctype>
#include <charconv>

#include "warrant/formula.hpp"

namespace warrant {
namespace {

// Raw parenthesized structure, interpreted afterwards by shape.
struct Item {
  enum Type { word, group, neg } type;
  std::string text;
  std::vector<Item> items;
  std::size_t pos = 0;

  bool is(std::string_view w) const { return type == word && text == w; }
};

bool delimiter(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '~';
}

class Reader {
 public:
  Reader(std::string_view text, const VarSet& vars) : text_(text), vars_(vars) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::size_t pos() const { return pos_; }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  Item read_item() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of formula", pos_);
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == ')') throw ParseError("unexpected ')'", pos_);
    if (c == '~') {
      ++pos_;
      Item inner = read_item();
      Item n{Item::neg, {}, {}, start};
      n.items.push_back(std::move(inner));
      return n;
    }
    if (c == '(') {
      ++pos_;
      Item g{Item::group, {}, {}, start};
      for (;;) {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unbalanced '('", start);
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        g.items.push_back(read_item());
      }
      if (g.items.empty()) throw ParseError("empty parentheses", start);
      return g;
    }
    while (pos_ < text_.size() && !delimiter(text_[pos_])) ++pos_;
    return Item{Item::word, std::string(text_.substr(start, pos_ - start)), {}, start};
  }

  // ---------------------------------------------------------- interpretation

  Expr word(const Item& it) const {
    const std::string& w = it.text;
    if (auto n = parse_number(w)) return Expr::number(*n);
    if (vars_.contains(w)) return Expr::var(w);
    if (w.size() > 1 && w[0] == '?') {
      throw ParseError("undeclared variable '" + w + "'", it.pos);
    }
    return Expr::constant(w);
  }

  Expr formula(const Item& it) const {
    switch (it.type) {
      case Item::word:
        return word(it);
      case Item::neg:
        return negate(formula(it.items[0]));
      case Item::group:
        return group(it);
    }
    return word(it);
  }

  Expr term(const Item& it) const {
    if (it.type == Item::group && it.items.size() == 3 && it.items[1].type == Item::word) {
      const std::string& op = it.items[1].text;
      if (op == "+" || op == "-" || op == "*" || op == "/") {
        return Expr::arithmetic(op[0], term(it.items[0]), term(it.items[2]));
      }
    }
    return formula(it);
  }

  Expr segment(std::span<const Item> items, std::size_t pos) const {
    if (items.empty()) throw ParseError("missing formula", pos);
    if (items.size() == 1) return formula(items[0]);
    return atom(items);
  }

  Expr atom(std::span<const Item> items) const {
    std::vector<Expr> words;
    words.reserve(items.size());
    for (const auto& i : items) words.push_back(formula(i));
    return Expr::atom(std::move(words));
  }

  static std::optional<std::size_t> find_words(std::span<const Item> items, std::size_t from,
                                               std::initializer_list<std::string_view> seq) {
    for (std::size_t i = from; i + seq.size() <= items.size(); ++i) {
      std::size_t k = 0;
      for (auto w : seq) {
        if (!items[i + k].is(w)) break;
        ++k;
      }
      if (k == seq.size()) return i;
    }
    return std::nullopt;
  }

  Expr group(const Item& g) const {
    const auto& it = g.items;
    const std::size_t n = it.size();

    if (n == 3 && (it[0].is("all") || it[0].is("some")) && it[1].type == Item::word) {
      return Expr::quantified(it[0].is("all") ? Kind::universal : Kind::existential,
                              it[1].text, formula(it[2]));
    }
    if (n == 3 && it[1].is("=>") && it[0].type == Item::group && it[0].items.size() == 3 &&
        it[0].items[1].is("/")) {
      return Expr::planning(formula(it[0].items[0]), formula(it[0].items[2]), formula(it[2]));
    }
    if (n == 3 && (it[1].is("<=") || it[1].is(">=")) && it[0].type == Item::group) {
      std::span<const Item> inner = it[0].items;
      if (inner.size() >= 6 && inner[0].is("the") && inner[1].is("probability") &&
          inner[2].is("of")) {
        if (auto given = find_words(inner, 4, {"given"})) {
          Expr target = segment(inner.subspan(3, *given - 3), inner[3].pos);
          Expr cond = segment(inner.subspan(*given + 1), inner[*given].pos);
          return Expr::probability(std::move(target), std::move(cond), it[1].is("<="),
                                   term(it[2]));
        }
      }
    }
    if (auto when = find_words(it, 1, {"when"})) {
      auto suff = find_words(it, *when + 2, {"is", "causally", "sufficient", "for"});
      auto after = suff ? find_words(it, *suff + 5, {"after", "an", "interval"}) : std::nullopt;
      if (suff && after && *after + 4 == n) {
        std::span<const Item> all = it;
        return Expr::causal(segment(all.subspan(0, *when), g.pos),
                            segment(all.subspan(*when + 1, *suff - *when - 1), it[*when].pos),
                            segment(all.subspan(*suff + 4, *after - *suff - 4), it[*suff].pos),
                            term(it[n - 1]));
      }
    }
    if (n == 3 && it[1].type == Item::word) {
      const std::string& op = it[1].text;
      Kind k{};
      bool binary = true;
      if (op == "&") k = Kind::conjunction;
      else if (op == "v") k = Kind::disjunction;
      else if (op == "->") k = Kind::conditional;
      else if (op == "<->") k = Kind::biconditional;
      else if (op == "@>") k = Kind::undercut;
      else binary = false;
      if (binary) return Expr::binary(k, formula(it[0]), formula(it[2]));
      if (op == "achieves") return Expr::achieves(term(it[0]), formula(it[2]));
    }
    std::span<const Item> all = it;
    if (n >= 3 && it[n - 2].is("throughout") && it[n - 1].type == Item::group &&
        it[n - 1].items.size() == 3) {
      const auto& iv = it[n - 1].items;
      return Expr::throughout(segment(all.subspan(0, n - 2), g.pos), term(iv[0]), term(iv[1]),
                              term(iv[2]));
    }
    if (n >= 3 && it[n - 2].is("at")) {
      return Expr::at(segment(all.subspan(0, n - 2), g.pos), term(it[n - 1]));
    }
    if (n == 1) return formula(it[0]);
    return atom(all);
  }

  static std::optional<Number> parse_number(std::string_view w) {
    if (w.empty()) return std::nullopt;
    const char c0 = w[0];
    const bool numeric_start = std::isdigit(static_cast<unsigned char>(c0)) || c0 == '.' ||
                               ((c0 == '-' || c0 == '+') && w.size() > 1 &&
                                (std::isdigit(static_cast<unsigned char>(w[1])) || w[1] == '.'));
    if (!numeric_start) return std::nullopt;
    std::string_view s = w;
    if (s[0] == '+') s.remove_prefix(1);
    const auto slash = s.find('/');
    if (slash != std::string_view::npos) {
      std::int64_t num = 0, den = 0;
      auto a = std::from_chars(s.data(), s.data() + slash, num);
      auto b = std::from_chars(s.data() + slash + 1, s.data() + s.size(), den);
      if (a.ec != std::errc{} || a.ptr != s.data() + slash || b.ec != std::errc{} ||
          b.ptr != s.data() + s.size() || den == 0) {
        return std::nullopt;
      }
      return Number::rational(num, den);
    }
    if (s.find_first_of(".eE") == std::string_view::npos) {
      std::int64_t v = 0;
      auto r = std::from_chars(s.data(), s.data() + s.size(), v);
      if (r.ec == std::errc{} && r.ptr == s.data() + s.size()) return Number::rational(v);
      return std::nullopt;
    }
    std::string buf(s);
    if (buf[0] == '.') buf.insert(0, "0");
    if (buf.size() > 1 && buf[0] == '-' && buf[1] == '.') buf.insert(1, "0");
    double d = 0;
    auto r = std::from_chars(buf.data(), buf.data() + buf.size(), d);
    if (r.ec == std::errc{} && r.ptr == buf.data() + buf.size()) return Number::real(d);
    return std::nullopt;
  }

 private:
  std::string_view text_;
  const VarSet& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_formula_prefix(std::string_view text, const VarSet& vars, std::size_t& end) {
  Reader r(text, vars);
  Item it = r.read_item();
  end = r.pos();
  return r.formula(it);
}

Expr parse_formula(std::string_view text, const VarSet& vars) {
  Reader r(text, vars);
  Item it = r.read_item();
  if (!r.at_end()) throw ParseError("trailing input after formula", r.pos());
  return r.formula(it);
}

Expr parse_term(std::string_view text, const VarSet& vars) {
  Reader r(text, vars);
  Item it = r.read_item();
  if (!r.at_end()) throw ParseError("trailing input after term", r.pos());
  return r.term(it);
}

}  // namespace warrant

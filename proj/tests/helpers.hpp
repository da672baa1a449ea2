#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "warrant/formula.hpp"
#include "warrant/report.hpp"

namespace testing {

inline warrant::RunResult run_text(std::string_view text, const warrant::RunOptions& opts = {}) {
  return warrant::run_scenario(warrant::load_scenario(text), opts);
}

inline const warrant::QueryResult* query(const warrant::RunResult& r, std::string_view formula) {
  const warrant::Expr f = warrant::parse_formula(formula);
  for (const auto& q : r.report.queries) {
    if (q.formula == f) return &q;
  }
  return nullptr;
}

inline bool justified(const warrant::RunResult& r, std::string_view formula) {
  const auto* q = query(r, formula);
  return q && q->justified;
}

// Strength of the first link with `reason` concluding `formula`.
inline std::optional<double> link_strength(const warrant::RunResult& r, std::string_view reason,
                                           std::string_view formula) {
  const auto& g = r.engine->graph();
  const warrant::Expr f = warrant::parse_formula(formula);
  for (const auto& l : g.links()) {
    if (l.reason == reason && g.node(l.target).formula == f) return l.strength;
  }
  return std::nullopt;
}

}  // namespace testing

#include "warrant/defeat.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>

namespace warrant {

const char* defeat_kind_name(DefeatKind k) {
  return k == DefeatKind::rebutting ? "rebutting" : "undercutting";
}

std::vector<DefeatLink> detect_defeat_links(const InferenceGraph& g) {
  std::vector<DefeatLink> out;
  for (const auto& link : g.links()) {
    if (!link.defeasible) continue;
    const Expr& conclusion = g.node(link.target).formula;
    for (auto n : g.find_all(negate(conclusion))) {
      out.push_back({n, link.id, DefeatKind::rebutting});
    }
    if (link.basis.empty()) continue;
    std::vector<Expr> premises;
    for (auto b : link.basis) premises.push_back(g.node(b).formula);
    for (auto n : g.find_all(Expr::undercut(conjoin(premises), conclusion))) {
      out.push_back({n, link.id, DefeatKind::undercutting});
    }
  }
  std::sort(out.begin(), out.end(), [](const DefeatLink& a, const DefeatLink& b) {
    return std::tie(a.link, a.defeater, a.kind) < std::tie(b.link, b.defeater, b.kind);
  });
  return out;
}

// ---------------------------------------------------------------- arguments

namespace {

std::vector<std::size_t> merge_sorted(const std::vector<std::size_t>& a,
                                      const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class ArgumentBuilder {
 public:
  ArgumentBuilder(const InferenceGraph& g, std::size_t limit)
      : g_(g), limit_(limit), memo_(g.nodes().size()), on_path_(g.nodes().size(), false) {}

  std::vector<Argument> build() {
    for (const auto& n : g_.nodes()) of(n.id);
    return std::move(args_);
  }

 private:
  // Second member: whether a cycle cut below made the answer path-dependent.
  std::pair<std::vector<std::size_t>, bool> of(std::size_t n) {
    if (memo_[n]) return {*memo_[n], false};
    on_path_[n] = true;
    bool truncated = false;
    std::vector<std::size_t> out;
    const auto& node = g_.node(n);
    if (node.input) out.push_back(intern(Argument{n, std::nullopt, {}, {n}, node.base_strength}));

    for (auto lid : node.support) {
      const auto& link = g_.link(lid);
      const bool cyclic = std::any_of(link.basis.begin(), link.basis.end(),
                                      [&](std::size_t b) { return on_path_[b]; });
      if (cyclic) {
        truncated = true;
        continue;
      }
      std::vector<std::vector<std::size_t>> subs;
      bool missing = false;
      for (auto b : link.basis) {
        auto [ids, t] = of(b);
        truncated = truncated || t;
        if (ids.empty()) {
          missing = true;
          break;
        }
        subs.push_back(std::move(ids));
      }
      if (missing) continue;

      std::vector<std::size_t> pick(subs.size(), 0);
      for (;;) {
        Argument a{n, lid, {lid}, {}, link.strength};
        for (std::size_t i = 0; i < subs.size(); ++i) {
          const Argument& s = args_[subs[i][pick[i]]];
          a.links = merge_sorted(a.links, s.links);
          a.inputs = merge_sorted(a.inputs, s.inputs);
          a.strength = std::min(a.strength, s.strength);
        }
        out.push_back(intern(std::move(a)));
        std::size_t i = 0;
        while (i < subs.size() && ++pick[i] == subs[i].size()) pick[i++] = 0;
        if (i == subs.size()) break;
      }
    }
    on_path_[n] = false;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (!truncated) memo_[n] = out;
    return {out, truncated};
  }

  std::size_t intern(Argument a) {
    // Defeat only targets defeasible links, so arguments that differ in
    // their strict links alone are interchangeable.
    std::string key = std::to_string(a.conclusion) + ":" +
                      std::to_string(std::bit_cast<std::uint64_t>(a.strength)) + ":";
    for (auto l : a.links) {
      if (g_.link(l).defeasible) key += std::to_string(l) + ",";
    }
    key += ":";
    for (auto i : a.inputs) key += std::to_string(i) + ",";
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    if (args_.size() >= limit_) {
      throw EnumerationLimit("more than " + std::to_string(limit_) + " arguments");
    }
    args_.push_back(std::move(a));
    index_.emplace(std::move(key), args_.size() - 1);
    return args_.size() - 1;
  }

  const InferenceGraph& g_;
  std::size_t limit_;
  std::vector<Argument> args_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::optional<std::vector<std::size_t>>> memo_;
  std::vector<bool> on_path_;
};

}  // namespace

std::vector<Argument> build_arguments(const InferenceGraph& g, std::size_t limit) {
  return ArgumentBuilder(g, limit).build();
}

ArgumentFramework build_framework(const InferenceGraph& g, const std::vector<Argument>& args,
                                  const std::vector<DefeatLink>& defeats) {
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_conclusion;
  for (std::size_t i = 0; i < args.size(); ++i) by_conclusion[args[i].conclusion].push_back(i);

  ArgumentFramework af;
  af.attackers.resize(args.size());
  for (std::size_t a = 0; a < args.size(); ++a) {
    const auto& links = args[a].links;
    for (const auto& d : defeats) {
      if (!std::binary_search(links.begin(), links.end(), d.link)) continue;
      const double needed = g.link(d.link).strength;
      auto it = by_conclusion.find(d.defeater);
      if (it == by_conclusion.end()) continue;
      for (auto b : it->second) {
        if (args[b].strength + 1e-12 >= needed) af.attackers[a].push_back(b);
      }
    }
    auto& at = af.attackers[a];
    std::sort(at.begin(), at.end());
    at.erase(std::unique(at.begin(), at.end()), at.end());
  }
  return af;
}

// --------------------------------------------------------- status assignment

namespace {

class Enumerator {
 public:
  Enumerator(const ArgumentFramework& af, std::size_t budget) : af_(af), budget_(budget) {}

  std::vector<StatusAssignment> run() {
    const std::size_t n = af_.size();
    state_.assign(n, Status::unassigned);
    decided_.assign(n, false);

    // Statuses forced in every assignment.
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t a = 0; a < n; ++a) {
        if (decided_[a]) continue;
        bool any_u = false, all_d = true;
        for (auto b : af_.attackers[a]) {
          const bool d = decided_[b];
          any_u = any_u || (d && state_[b] == Status::undefeated);
          all_d = all_d && d && state_[b] == Status::defeated;
        }
        if (any_u || all_d) {
          state_[a] = any_u ? Status::defeated : Status::undefeated;
          decided_[a] = true;
          changed = true;
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (!decided_[a]) open_.push_back(a);
    }
    if (open_.size() > budget_) {
      throw EnumerationLimit(std::to_string(open_.size()) +
                             " undecided arguments exceed the enumeration budget of " +
                             std::to_string(budget_));
    }
    search(0);
    return maximal();
  }

 private:
  static constexpr std::size_t kMaxCandidates = 200'000;

  bool consistent() const {
    for (std::size_t a = 0; a < af_.size(); ++a) {
      if (!decided_[a]) continue;
      bool any_u = false, all_d = true;
      for (auto b : af_.attackers[a]) {
        any_u = any_u || (decided_[b] && state_[b] == Status::undefeated);
        all_d = all_d && decided_[b] && state_[b] == Status::defeated;
      }
      if (any_u && state_[a] != Status::defeated) return false;
      if (all_d && state_[a] != Status::undefeated) return false;
    }
    return true;
  }

  void search(std::size_t k) {
    if (!consistent()) return;
    if (k == open_.size()) {
      candidates_.push_back(state_);
      if (candidates_.size() > kMaxCandidates) {
        throw EnumerationLimit("too many partial status assignments");
      }
      return;
    }
    const std::size_t a = open_[k];
    decided_[a] = true;
    for (Status s : {Status::undefeated, Status::defeated, Status::unassigned}) {
      state_[a] = s;
      search(k + 1);
    }
    decided_[a] = false;
    state_[a] = Status::unassigned;
  }

  static std::size_t assigned(const StatusAssignment& s) {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](Status x) { return x != Status::unassigned; }));
  }

  static bool contained(const StatusAssignment& small, const StatusAssignment& big) {
    for (std::size_t i = 0; i < small.size(); ++i) {
      if (small[i] != Status::unassigned && small[i] != big[i]) return false;
    }
    return true;
  }

  std::vector<StatusAssignment> maximal() {
    std::stable_sort(candidates_.begin(), candidates_.end(),
                     [](const auto& x, const auto& y) { return assigned(x) > assigned(y); });
    std::vector<StatusAssignment> out;
    for (const auto& c : candidates_) {
      const std::size_t k = assigned(c);
      bool dominated = false;
      for (const auto& m : out) {
        if (assigned(m) > k && contained(c, m)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  const ArgumentFramework& af_;
  std::size_t budget_;
  StatusAssignment state_;
  std::vector<bool> decided_;
  std::vector<std::size_t> open_;
  std::vector<StatusAssignment> candidates_;
};

}  // namespace

std::vector<StatusAssignment> enumerate_status_assignments(const ArgumentFramework& af,
                                                           std::size_t budget) {
  return Enumerator(af, budget).run();
}

std::vector<bool> undefeated_arguments(std::size_t count,
                                       const std::vector<StatusAssignment>& assignments) {
  std::vector<bool> out(count, !assignments.empty());
  for (const auto& s : assignments) {
    for (std::size_t i = 0; i < count; ++i) {
      if (s[i] != Status::undefeated) out[i] = false;
    }
  }
  return out;
}

bool justified(std::size_t node, const std::vector<Argument>& args,
               const std::vector<StatusAssignment>& assignments) {
  return degree_of_justification(node, args, assignments) > 0.0;
}

double degree_of_justification(std::size_t node, const std::vector<Argument>& args,
                               const std::vector<StatusAssignment>& assignments) {
  const auto ok = undefeated_arguments(args.size(), assignments);
  double best = 0.0;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].conclusion == node && ok[i]) best = std::max(best, args[i].strength);
  }
  return best;
}

DefeatAnalysis analyze(const InferenceGraph& g, std::size_t budget) {
  DefeatAnalysis a;
  a.defeat_links = detect_defeat_links(g);
  a.arguments = build_arguments(g);
  a.framework = build_framework(g, a.arguments, a.defeat_links);
  a.assignments = enumerate_status_assignments(a.framework, budget);
  a.argument_undefeated = undefeated_arguments(a.arguments.size(), a.assignments);
  a.node_justified.assign(g.nodes().size(), false);
  a.node_degree.assign(g.nodes().size(), 0.0);
  for (std::size_t i = 0; i < a.arguments.size(); ++i) {
    if (!a.argument_undefeated[i]) continue;
    const auto n = a.arguments[i].conclusion;
    a.node_justified[n] = true;
    a.node_degree[n] = std::max(a.node_degree[n], a.arguments[i].strength);
  }
  return a;
}

}  // namespace warrant

#include "warrant/engine.hpp"

#include <algorithm>

namespace warrant {
namespace {

bool kind_matches(PremiseKind p, NodeKind n) {
  switch (p) {
    case PremiseKind::percept: return n == NodeKind::percept;
    case PremiseKind::desire: return n == NodeKind::desire;
    case PremiseKind::inference: return n == NodeKind::inference;
  }
  return false;
}

VarSet variables_of(const Expr& f) {
  VarSet vs;
  collect_variables(f, vs);
  return vs;
}

}  // namespace

Engine::Engine(std::vector<Reason> reasons, EngineConfig config, Projectibility projectibility)
    : reasons_(std::move(reasons)),
      config_(config),
      projectibility_(std::move(projectibility)) {
  for (const auto& r : reasons_) reason_vars_.push_back(r.variable_set());
}

void Engine::enqueue(bool is_node, std::size_t id, double priority) {
  queue_.push(QueueItem{priority, seq_++, is_node, id});
}

std::size_t Engine::add_premise(const Expr& f, double strength) {
  bool created = false;
  const std::size_t id = graph_.intern(f, NodeKind::inference, created);
  auto& n = graph_.node(id);
  n.input = true;
  n.base_strength = std::max(n.base_strength, strength);
  if (created) enqueue(true, id, strength);
  return id;
}

std::size_t Engine::add_percept(const Percept& p) {
  bool created = false;
  const Expr f = Expr::at(p.content, Expr::number(p.date));
  const std::size_t id = graph_.intern(f, NodeKind::percept, created);
  auto& n = graph_.node(id);
  n.input = true;
  n.base_strength = std::max(n.base_strength, std::min(p.clarity, 1.0));
  if (created) enqueue(true, id, n.base_strength);
  return id;
}

std::size_t Engine::add_desire(const Expr& f, double strength) {
  bool created = false;
  const std::size_t id = graph_.intern(f, NodeKind::desire, created);
  auto& n = graph_.node(id);
  n.input = true;
  n.base_strength = std::max(n.base_strength, strength);
  if (created) enqueue(true, id, strength);
  return id;
}

std::size_t Engine::adopt_query(const Expr& f) {
  const std::size_t id = adopt_interest(f, 1.0);
  interests_[id].query = true;
  return id;
}

std::size_t Engine::adopt_interest(const Expr& f, double priority) {
  if (auto it = interest_index_.find(f); it != interest_index_.end()) {
    auto& i = interests_[it->second];
    i.priority = std::max(i.priority, priority);
    return i.id;
  }
  const std::size_t id = interests_.size();
  interests_.push_back(Interest{id, f, variables_of(f), priority, false, false, {}});
  waiters_.emplace_back();
  interest_index_.emplace(f, id);
  enqueue(false, id, priority);
  log("interest #" + std::to_string(id) + " " + to_string(f));
  const std::size_t n = processed_nodes_.size();
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t node = processed_nodes_[k];
    if (auto b = unify(interests_[id].formula, graph_.node(node).formula, interests_[id].vars)) {
      discharge(id, node, *b);
    }
  }
  return id;
}

void Engine::on_discharge(std::size_t interest, Waiter w) {
  waiters_.at(interest).push_back(w);
  const std::vector<std::size_t> nodes = interests_[interest].discharged_by;
  for (auto node : nodes) {
    if (auto b = unify(interests_[interest].formula, graph_.node(node).formula,
                       interests_[interest].vars)) {
      w(*this, node, *b);
    }
  }
}

void Engine::discharge(std::size_t interest, std::size_t node, const Binding& b) {
  auto& by = interests_[interest].discharged_by;
  if (std::find(by.begin(), by.end(), node) != by.end()) return;
  by.push_back(node);
  // Waiters may register further waiters on this interest while running.
  for (std::size_t k = 0; k < waiters_[interest].size(); ++k) {
    Waiter w = waiters_[interest][k];
    w(*this, node, b);
  }
}

std::optional<std::size_t> Engine::add_link(const LinkSpec& spec) {
  bool created = false;
  const std::size_t target = graph_.intern(spec.conclusion, NodeKind::inference, created);
  auto id = graph_.add_link(InferenceLink{0, spec.reason, spec.basis, spec.binding, spec.strength,
                                          spec.defeasible, target});
  if (!id) return std::nullopt;
  log("link #" + std::to_string(*id) + " " + spec.reason + " -> " + to_string(spec.conclusion));
  if (created) enqueue(true, target, spec.strength);
  if (spec.defeasible) {
    std::vector<Expr> premises;
    for (auto b : spec.basis) premises.push_back(graph_.node(b).formula);
    const double p = config_.interest_priority_discount * spec.strength;
    adopt_interest(negate(spec.conclusion), p);
    if (!premises.empty()) adopt_interest(Expr::undercut(conjoin(premises), spec.conclusion), p);
  }
  return id;
}

void Engine::add_extension(std::shared_ptr<EngineExtension> ext) {
  extensions_.push_back(std::move(ext));
}

bool Engine::premise_accepts(const Premise& p, const InferenceNode& n) const {
  return kind_matches(p.kind, n.kind);
}

void Engine::join_forwards(std::size_t r, const Binding& seed, std::optional<std::size_t> fixed,
                           std::size_t fixed_node, const MatchFn& fn) {
  const auto& prem = reasons_[r].forwards_premises;
  const auto& vars = reason_vars_[r];
  std::vector<std::size_t> basis(prem.size());
  const std::size_t snapshot = processed_nodes_.size();
  const EvalContext ctx = eval_context();

  std::function<void(std::size_t, const Binding&)> go = [&](std::size_t k, const Binding& b) {
    if (k == prem.size()) {
      for (const auto& p : prem) {
        if (p.condition && !eval_condition(*p.condition, b, ctx)) return;
      }
      fn(b, basis);
      return;
    }
    if (fixed && *fixed == k) {
      basis[k] = fixed_node;
      go(k + 1, b);
      return;
    }
    for (std::size_t i = 0; i < snapshot; ++i) {
      const auto& n = graph_.node(processed_nodes_[i]);
      if (!premise_accepts(prem[k], n)) continue;
      if (auto b2 = unify(prem[k].formula, n.formula, vars, b)) {
        basis[k] = n.id;
        go(k + 1, *b2);
      }
    }
  };
  go(0, seed);
}

void Engine::forwards_matched(std::size_t r, const Binding& b,
                              const std::vector<std::size_t>& basis, double priority) {
  std::string key = std::to_string(r) + to_string(b);
  for (auto n : basis) key += ' ' + std::to_string(n);
  if (!seen_instances_.insert(key).second) return;
  if (reasons_[r].backwards_premises.empty()) {
    conclude(r, b, basis);
  } else {
    advance(Instance{r, b, basis, 0, priority});
  }
}

void Engine::advance(Instance inst) {
  const Reason& r = reasons_[inst.reason];
  if (inst.next == r.backwards_premises.size()) {
    conclude(inst.reason, inst.binding, inst.basis);
    return;
  }
  const Premise& p = r.backwards_premises[inst.next];
  const Expr f = substitute(p.formula, inst.binding);
  const std::size_t id = adopt_interest(f, inst.priority * config_.interest_priority_discount);
  const double prio = interests_[id].priority;
  on_discharge(id, [inst, prio](Engine& e, std::size_t node, const Binding& nb) {
    const Reason& r = e.reasons_[inst.reason];
    const Premise& p = r.backwards_premises[inst.next];
    if (!e.premise_accepts(p, e.graph_.node(node))) return;
    Binding b = inst.binding;
    for (const auto& [k, v] : nb) {
      if (!b.bind(k, v)) return;
    }
    if (p.condition && !eval_condition(*p.condition, b, e.eval_context())) return;
    std::string key = "b" + std::to_string(inst.reason) + to_string(b);
    for (auto n : inst.basis) key += ' ' + std::to_string(n);
    key += ' ' + std::to_string(node);
    if (!e.seen_instances_.insert(key).second) return;
    Instance next = inst;
    next.binding = std::move(b);
    next.basis.push_back(node);
    ++next.next;
    next.priority = prio;
    e.advance(std::move(next));
  });
}

void Engine::conclude(std::size_t r, const Binding& b, const std::vector<std::size_t>& basis) {
  const Reason& reason = reasons_[r];
  if (!reason.conclusion) return;
  const Expr conclusion = substitute(*reason.conclusion, b);
  if (!conclusion.ground()) return;
  auto s = eval_strength(reason.strength, b, eval_context());
  if (!s || *s <= 0.0 || *s > 1.0 + 1e-12) return;
  double strength = std::min(*s, 1.0);
  for (auto n : basis) {
    const auto& node = graph_.node(n);
    if (node.kind == NodeKind::percept) strength = std::min(strength, node.base_strength);
  }
  add_link(LinkSpec{reason.name, basis, b, conclusion, strength, reason.defeasible});
}

void Engine::process_node(std::size_t id) {
  if (node_processed_.size() <= id) node_processed_.resize(graph_.nodes().size(), false);
  if (node_processed_[id]) return;
  node_processed_[id] = true;
  processed_nodes_.push_back(id);
  log("node #" + std::to_string(id) + " " + to_string(graph_.node(id).formula));

  for (std::size_t r = 0; r < reasons_.size(); ++r) {
    if (reasons_[r].direction != Direction::forwards) continue;
    const auto& prem = reasons_[r].forwards_premises;
    for (std::size_t k = 0; k < prem.size(); ++k) {
      const auto& n = graph_.node(id);
      if (!premise_accepts(prem[k], n)) continue;
      if (auto b = unify(prem[k].formula, n.formula, reason_vars_[r])) {
        join_forwards(r, *b, k, id, [&](const Binding& bb, const std::vector<std::size_t>& basis) {
          forwards_matched(r, bb, basis, 1.0);
        });
      }
    }
  }

  for (std::size_t w = 0; w < watchers_.size(); ++w) {
    const Watcher watcher = watchers_[w];
    const auto& prem = reasons_[watcher.reason].forwards_premises;
    for (std::size_t k = 0; k < prem.size(); ++k) {
      const auto& n = graph_.node(id);
      if (!premise_accepts(prem[k], n)) continue;
      if (auto b = unify(prem[k].formula, n.formula, reason_vars_[watcher.reason], watcher.binding)) {
        join_forwards(watcher.reason, *b, k, id,
                      [&](const Binding& bb, const std::vector<std::size_t>& basis) {
                        forwards_matched(watcher.reason, bb, basis, watcher.priority);
                      });
      }
    }
  }

  for (std::size_t i = 0; i < interests_.size(); ++i) {
    if (auto b = unify(interests_[i].formula, graph_.node(id).formula, interests_[i].vars)) {
      discharge(i, id, *b);
    }
  }

  for (const auto& ext : extensions_) ext->on_node(*this, graph_.node(id));
}

void Engine::process_interest(std::size_t id) {
  if (interests_[id].processed) return;
  interests_[id].processed = true;
  const Expr f = interests_[id].formula;
  const double priority = interests_[id].priority;

  if (f.ground()) {
    const EvalContext ctx = eval_context();
    for (std::size_t r = 0; r < reasons_.size(); ++r) {
      const Reason& reason = reasons_[r];
      if (reason.direction != Direction::backwards || !reason.conclusion) continue;
      auto b = unify(*reason.conclusion, f, reason_vars_[r]);
      if (!b) continue;
      if (reason.condition && !eval_condition(*reason.condition, *b, ctx)) continue;
      if (reason.forwards_premises.empty()) {
        advance(Instance{r, *b, {}, 0, priority});
        continue;
      }
      watchers_.push_back(Watcher{r, *b, priority});
      join_forwards(r, *b, std::nullopt, 0,
                    [&](const Binding& bb, const std::vector<std::size_t>& basis) {
                      forwards_matched(r, bb, basis, priority);
                    });
    }
  }

  for (const auto& ext : extensions_) ext->on_interest(*this, interests_[id]);
}

bool Engine::step() {
  if (queue_.empty()) return false;
  const QueueItem item = queue_.top();
  queue_.pop();
  if (item.is_node) {
    process_node(item.id);
  } else {
    process_interest(item.id);
  }
  return true;
}

RunStats Engine::run() {
  RunStats stats;
  while (!queue_.empty()) {
    if (stats.steps >= config_.step_budget) {
      stats.budget_exhausted = true;
      break;
    }
    step();
    ++stats.steps;
  }
  return stats;
}

}  // namespace warrant

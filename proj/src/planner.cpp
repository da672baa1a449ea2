#include "warrant/planner.hpp"

#include <charconv>

namespace warrant {
namespace {

const Expr kEnd = Expr::constant("end");

Expr before(const Expr& t) { return Expr::atom({Expr::constant("before"), t}); }

std::size_t depth(const Expr& t) {
  if (t.kind() == Kind::atom && t.args().size() == 2 && t.arg(0) == Expr::constant("before")) {
    return 1 + depth(t.arg(1));
  }
  return 0;
}

// "(C at t)", distributed over the conjuncts of C.
Expr goal_at(const Expr& c, const Expr& t) {
  std::vector<Expr> parts;
  for (const auto& g : conjuncts(c)) parts.push_back(Expr::at(g, t));
  return conjoin(parts);
}

Expr seek(const Expr& goal) { return Expr::achieves(Expr::var("plan"), goal); }

}  // namespace

std::size_t PlanStore::add(Plan p) {
  std::string key = p.key();
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  plans_.push_back(std::move(p));
  index_.emplace(std::move(key), plans_.size() - 1);
  return plans_.size() - 1;
}

Expr PlanStore::term(std::size_t id) { return Expr::constant("plan-" + std::to_string(id)); }

std::optional<std::size_t> PlanStore::id_of(const Expr& term) const {
  if (term.kind() != Kind::constant) return std::nullopt;
  const std::string& s = term.symbol();
  if (s.rfind("plan-", 0) != 0) return std::nullopt;
  std::size_t id = 0;
  auto r = std::from_chars(s.data() + 5, s.data() + s.size(), id);
  if (r.ec != std::errc{} || r.ptr != s.data() + s.size() || id >= plans_.size()) {
    return std::nullopt;
  }
  return id;
}

Expr Planner::goal_formula(const Expr& goal) { return goal_at(goal, kEnd); }

std::size_t Planner::adopt_goal(Engine& e, const Expr& goal) {
  return e.adopt_interest(seek(goal), 1.0);
}

std::optional<std::size_t> Planner::claim_plan(const Expr& claim) const {
  if (claim.kind() != Kind::achieves) return std::nullopt;
  return store_.id_of(claim.arg(0));
}

void Planner::on_interest(Engine& e, const Interest& i) {
  const Expr f = i.formula;
  const double priority = i.priority;
  if (f.kind() == Kind::achieves && f.arg(0).kind() == Kind::variable) {
    seek_plan(e, f.arg(1), priority);
  } else if (f.kind() == Kind::undercut && claim_plan(f.arg(1))) {
    find_threats(e, i);
  }
}

void Planner::seek_plan(Engine& e, const Expr& goal, double priority) {
  if (goal.kind() == Kind::conjunction) {
    split_goal(e, goal, priority);
  } else if (goal.kind() == Kind::at) {
    regress_goal(e, goal, priority);
  }
}

void Planner::regress_goal(Engine& e, const Expr& goal, double priority) {
  const Expr g = goal.arg(0);
  const Expr t = goal.arg(1);
  const double prio = priority * e.config().interest_priority_discount;

  const std::size_t initially = e.adopt_interest(Expr::atom({Expr::constant("initially"), g}), prio);
  e.on_discharge(initially, [this, goal, g](Engine& e, std::size_t node, const Binding&) {
    const std::size_t pid = store_.add(null_plan(g));
    e.add_link({"NULL-PLAN", {node}, {}, Expr::achieves(PlanStore::term(pid), goal), 1.0, false});
  });

  if (depth(t) + 1 > max_steps_) return;
  const std::size_t conditional =
      e.adopt_interest(Expr::planning(Expr::var("A"), Expr::var("C"), g), prio);
  e.on_discharge(conditional, [this, goal, g, t, prio](Engine& e, std::size_t cnode,
                                                       const Binding& b) {
    const Expr* a = b.find("A");
    const Expr* c = b.find("C");
    if (!a || !c) return;
    const Expr action = *a;
    const std::size_t sub = e.adopt_interest(seek(goal_at(*c, before(t))), prio);
    e.on_discharge(sub, [this, goal, g, action, cnode](Engine& e, std::size_t snode,
                                                       const Binding&) {
      auto sp = claim_plan(e.graph().node(snode).formula);
      if (!sp) return;
      auto plan = regress(store_.get(*sp), action, g);
      if (!plan || plan->steps.size() > max_steps_) return;
      const std::size_t pid = store_.add(std::move(*plan));
      e.add_link({"GOAL-REGRESSION", {cnode, snode}, {},
                  Expr::achieves(PlanStore::term(pid), goal), 1.0, true});
    });
  });
}

void Planner::split_goal(Engine& e, const Expr& goal, double priority) {
  const double prio = priority * e.config().interest_priority_discount;
  const std::size_t left = e.adopt_interest(seek(goal.arg(0)), prio);
  const std::size_t right = e.adopt_interest(seek(goal.arg(1)), prio);
  e.on_discharge(left, [this, goal, right](Engine& e, std::size_t n1, const Binding&) {
    e.on_discharge(right, [this, goal, n1](Engine& e, std::size_t n2, const Binding&) {
      auto p1 = claim_plan(e.graph().node(n1).formula);
      auto p2 = claim_plan(e.graph().node(n2).formula);
      if (!p1 || !p2) return;
      std::vector<Plan> plans = merges(store_.get(*p1), store_.get(*p2));
      for (auto& plan : plans) {
        if (plan.steps.size() > max_steps_) continue;
        const std::size_t pid = store_.add(std::move(plan));
        e.add_link({"SPLIT-CONJUNCTIVE-GOAL", {n1, n2}, {},
                    Expr::achieves(PlanStore::term(pid), goal), 1.0, true});
      }
    });
  });
}

// Interest in undercutting a plan claim: look for steps known to destroy a
// causal link they could fall inside of.
void Planner::find_threats(Engine& e, const Interest& i) {
  const Expr undercut = i.formula;
  const Expr claim = undercut.arg(1);
  const Expr goal = claim.arg(1);
  const double prio = i.priority * e.config().interest_priority_discount;
  const Plan plan = store_.get(*claim_plan(claim));

  auto node = e.graph().find(claim, NodeKind::inference);
  if (!node) return;
  std::optional<InferenceLink> claim_link;
  for (auto lid : e.graph().node(*node).support) {
    const auto& l = e.graph().link(lid);
    std::vector<Expr> premises;
    for (auto b : l.basis) premises.push_back(e.graph().node(b).formula);
    if (!premises.empty() && conjoin(premises) == undercut.arg(0)) {
      claim_link = l;
      break;
    }
  }
  if (!claim_link) return;

  for (std::size_t s = 0; s < plan.steps.size(); ++s) {
    for (const auto& link : plan.links) {
      if (!can_intervene(plan, s, link)) continue;
      const Expr interference =
          Expr::planning(plan.steps[s].action, Expr::var("K"), negate(link.condition));
      const std::size_t ti = e.adopt_interest(interference, prio);
      e.on_discharge(ti, [this, undercut, goal, plan, s, link, claim_link](
                             Engine& e, std::size_t tnode, const Binding&) {
        e.add_link({"THREAT", {tnode}, {}, undercut, 1.0, false});
        // Promotion and demotion give the threat-free alternatives.
        std::vector<Plan> variants;
        if (link.producer) {
          if (auto v = with_ordering(plan, s, *link.producer)) variants.push_back(std::move(*v));
        }
        if (link.consumer) {
          if (auto v = with_ordering(plan, *link.consumer, s)) variants.push_back(std::move(*v));
        }
        for (auto& v : variants) {
          const std::size_t pid = store_.add(std::move(v));
          e.add_link({claim_link->reason, claim_link->basis, {},
                      Expr::achieves(PlanStore::term(pid), goal), 1.0, true});
        }
      });
    }
  }
}

}  // namespace warrant

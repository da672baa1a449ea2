#include "warrant/report.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "warrant/schemas.hpp"

namespace warrant {

std::vector<Reason> scenario_reasons(const Scenario& s) {
  std::vector<Reason> out;
  if (s.config.builtins.value_or(true)) out = builtin_schemas();
  for (const auto& r : s.schemas) {
    auto it = std::find_if(out.begin(), out.end(), [&](const Reason& x) { return x.name == r.name; });
    if (it != out.end()) {
      *it = r;
    } else {
      out.push_back(r);
    }
  }
  return out;
}

EngineConfig scenario_config(const Scenario& s, const RunOptions& opts) {
  EngineConfig c;
  s.config.apply(c);
  if (opts.budget) c.step_budget = *opts.budget;
  if (opts.decay) c.temporal_decay = *opts.decay;
  return c;
}

Scenario load_scenario(std::string_view text) { return parse_scenario(text, find_builtin); }

RunResult run_scenario(const Scenario& s, const RunOptions& opts) {
  RunResult r;
  const EngineConfig config = scenario_config(s, opts);
  r.engine = std::make_unique<Engine>(scenario_reasons(s), config, Projectibility(s.projectible));
  Engine& e = *r.engine;
  if (opts.trace) e.set_trace(opts.trace);
  if (!s.plan_queries.empty()) {
    r.planner = std::make_shared<Planner>(config.max_plan_steps);
    e.add_extension(r.planner);
  }
  for (const auto& p : s.premises) e.add_premise(p.formula, p.strength);
  for (const auto& p : s.percepts) e.add_percept(p);
  for (const auto& d : s.desires) e.add_desire(d.formula, d.strength);
  for (const auto& q : s.queries) e.adopt_query(q.formula);
  for (const auto& g : s.plan_queries) r.planner->adopt_goal(e, Planner::goal_formula(g));

  const RunStats stats = e.run();
  Report& rep = r.report;
  rep.steps = stats.steps;
  rep.budget_exhausted = stats.budget_exhausted;
  const auto& g = e.graph();
  rep.nodes = g.nodes().size();
  rep.links = g.links().size();

  try {
    r.analysis = analyze(g, config.enumeration_budget);
  } catch (const EnumerationLimit& ex) {
    rep.enumeration_error = ex.what();
  }
  const DefeatAnalysis* a = r.analysis ? &*r.analysis : nullptr;
  if (a) {
    rep.defeat_links = a->defeat_links.size();
    rep.arguments = a->arguments.size();
    rep.assignments = a->assignments.size();
    for (const auto& n : g.nodes()) {
      if (n.kind == NodeKind::inference && a->node_justified[n.id]) {
        rep.justified.push_back(to_string(n.formula));
      }
    }
    std::sort(rep.justified.begin(), rep.justified.end());
  }

  for (const auto& q : s.queries) {
    QueryResult qr{q.formula, g.find(q.formula, NodeKind::inference), false, 0.0, q.threshold};
    if (a && qr.node) {
      qr.degree = a->node_degree[*qr.node];
      qr.justified = a->node_justified[*qr.node] && qr.degree >= q.threshold.value_or(0.0);
    }
    rep.queries.push_back(std::move(qr));
  }

  for (const auto& goal : s.plan_queries) {
    PlanQueryResult pr{goal, {}, false};
    const Expr target = Planner::goal_formula(goal);
    for (const auto& n : g.nodes()) {
      if (n.kind != NodeKind::inference || n.formula.kind() != Kind::achieves) continue;
      if (!(n.formula.arg(1) == target)) continue;
      auto pid = r.planner->claim_plan(n.formula);
      if (!pid) continue;
      const bool ok = a && a->node_justified[n.id];
      pr.claims.push_back({n.id, *pid, ok, a ? a->node_degree[n.id] : 0.0});
      pr.justified = pr.justified || ok;
    }
    rep.plans.push_back(std::move(pr));
  }
  return r;
}

namespace {

std::string number(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::string status_word(const Report& rep, bool justified) {
  if (rep.enumeration_error) return "unknown";
  return justified ? "justified" : "unjustified";
}

}  // namespace

std::string format_text(const RunResult& r) {
  const Report& rep = r.report;
  std::ostringstream os;
  for (const auto& q : rep.queries) {
    os << to_string(q.formula) << " : " << status_word(rep, q.justified);
    if (q.justified) os << " (degree " << number(q.degree) << ")";
    os << '\n';
  }
  for (const auto& p : rep.plans) {
    os << "plan for " << to_string(p.goal) << " : " << status_word(rep, p.justified) << '\n';
    for (const auto& c : p.claims) {
      os << "  " << (c.justified ? "+ " : "- ") << PlanStore::term(c.plan) << " "
         << r.planner->store().get(c.plan).describe() << '\n';
    }
  }
  os << "steps " << rep.steps << ", nodes " << rep.nodes << ", links " << rep.links
     << ", defeat links " << rep.defeat_links << ", arguments " << rep.arguments
     << ", status assignments " << rep.assignments << '\n';
  if (rep.budget_exhausted) os << "step budget exhausted; answers reflect reasoning so far\n";
  if (rep.enumeration_error) os << "exact semantics unavailable: " << *rep.enumeration_error << '\n';
  return os.str();
}

std::string format_json(const RunResult& r) {
  using json = nlohmann::ordered_json;
  const Report& rep = r.report;
  const InferenceGraph& g = r.engine->graph();
  const DefeatAnalysis* a = r.analysis ? &*r.analysis : nullptr;

  json out;
  out["steps"] = rep.steps;
  out["budget_exhausted"] = rep.budget_exhausted;
  out["enumeration_error"] = rep.enumeration_error ? json(*rep.enumeration_error) : json(nullptr);

  json queries = json::array();
  for (const auto& q : rep.queries) {
    json j;
    j["formula"] = to_string(q.formula);
    j["status"] = status_word(rep, q.justified);
    j["degree"] = q.degree;
    j["node"] = q.node ? json(*q.node) : json(nullptr);
    if (q.threshold) j["threshold"] = *q.threshold;
    queries.push_back(std::move(j));
  }
  out["queries"] = std::move(queries);

  json plans = json::array();
  for (const auto& p : rep.plans) {
    json j;
    j["goal"] = to_string(p.goal);
    j["status"] = status_word(rep, p.justified);
    json claims = json::array();
    for (const auto& c : p.claims) {
      const Plan& plan = r.planner->store().get(c.plan);
      json cj;
      cj["node"] = c.node;
      cj["plan"] = to_string(PlanStore::term(c.plan));
      cj["status"] = status_word(rep, c.justified);
      json steps = json::array();
      for (auto s : plan.linearization()) steps.push_back(to_string(plan.steps[s].action));
      cj["steps"] = std::move(steps);
      cj["description"] = plan.describe();
      claims.push_back(std::move(cj));
    }
    j["claims"] = std::move(claims);
    plans.push_back(std::move(j));
  }
  out["plans"] = std::move(plans);
  out["justified"] = rep.justified;
  out["counts"] = {{"nodes", rep.nodes},
                   {"links", rep.links},
                   {"defeat_links", rep.defeat_links},
                   {"arguments", rep.arguments},
                   {"status_assignments", rep.assignments}};

  json nodes = json::array();
  for (const auto& n : g.nodes()) {
    json j;
    j["id"] = n.id;
    j["formula"] = to_string(n.formula);
    j["kind"] = node_kind_name(n.kind);
    j["input"] = n.input;
    if (n.input) j["base_strength"] = n.base_strength;
    if (a) {
      j["status"] = a->node_justified[n.id] ? "justified" : "unjustified";
      j["degree"] = a->node_degree[n.id];
    }
    nodes.push_back(std::move(j));
  }
  json links = json::array();
  for (const auto& l : g.links()) {
    links.push_back({{"id", l.id},
                     {"reason", l.reason},
                     {"basis", l.basis},
                     {"target", l.target},
                     {"strength", l.strength},
                     {"defeasible", l.defeasible}});
  }
  json defeats = json::array();
  if (a) {
    for (const auto& d : a->defeat_links) {
      defeats.push_back(
          {{"defeater", d.defeater}, {"link", d.link}, {"kind", defeat_kind_name(d.kind)}});
    }
  }
  out["graph"] = {{"nodes", std::move(nodes)},
                  {"links", std::move(links)},
                  {"defeats", std::move(defeats)}};
  return out.dump(2) + "\n";
}

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_dot(const InferenceGraph& g, const DefeatAnalysis* analysis) {
  std::ostringstream os;
  os << "digraph inference {\n";
  if (!g.nodes().empty()) os << "  rankdir=BT;\n  node [fontname=\"Helvetica\"];\n";
  for (const auto& n : g.nodes()) {
    std::string status;
    std::string color = "black";
    if (analysis) {
      const bool ok = analysis->node_justified[n.id];
      status = ok ? "justified" : "defeated";
      color = ok ? "darkgreen" : "red";
    }
    os << "  n" << n.id << " [label=\"" << escape(to_string(n.formula));
    if (!status.empty()) os << "\\n" << status;
    os << "\", shape=" << (n.kind == NodeKind::percept ? "ellipse" : "box")
       << ", color=" << color << "];\n";
  }
  for (const auto& l : g.links()) {
    if (l.defeasible) {
      os << "  l" << l.id << " [shape=point, xlabel=\"" << escape(l.reason) << "\"];\n";
      for (auto b : l.basis) os << "  n" << b << " -> l" << l.id << " [arrowhead=none];\n";
      os << "  l" << l.id << " -> n" << l.target << ";\n";
    } else {
      for (auto b : l.basis) {
        os << "  n" << b << " -> n" << l.target << " [label=\"" << escape(l.reason) << "\"];\n";
      }
    }
  }
  if (analysis) {
    for (const auto& d : analysis->defeat_links) {
      os << "  n" << d.defeater << " -> l" << d.link << " [style=dashed, color=red, label=\""
         << defeat_kind_name(d.kind) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace warrant

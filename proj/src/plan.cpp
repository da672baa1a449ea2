#include "warrant/plan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace warrant {

bool Plan::precedes(std::size_t a, std::size_t b) const {
  std::vector<bool> seen(steps.size(), false);
  std::vector<std::size_t> stack{a};
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (const auto& [from, to] : ordering) {
      if (from != x || seen[to]) continue;
      if (to == b) return true;
      seen[to] = true;
      stack.push_back(to);
    }
  }
  return false;
}

bool Plan::acyclic() const {
  for (std::size_t s = 0; s < steps.size(); ++s) {
    if (precedes(s, s)) return false;
  }
  return true;
}

bool Plan::valid() const {
  for (const auto& [a, b] : ordering) {
    if (a >= steps.size() || b >= steps.size()) return false;
  }
  if (!acyclic()) return false;
  for (const auto& l : links) {
    if (l.producer && l.consumer && !precedes(*l.producer, *l.consumer)) return false;
  }
  return true;
}

std::vector<std::size_t> Plan::linearization() const {
  std::vector<std::size_t> order;
  std::vector<bool> placed(steps.size(), false);
  while (order.size() < steps.size()) {
    bool progressed = false;
    for (std::size_t s = 0; s < steps.size(); ++s) {
      if (placed[s]) continue;
      const bool ready = std::none_of(ordering.begin(), ordering.end(), [&](const auto& e) {
        return e.second == s && !placed[e.first];
      });
      if (ready) {
        placed[s] = true;
        order.push_back(s);
        progressed = true;
        break;
      }
    }
    if (!progressed) break;  // cyclic; callers check valid() first
  }
  return order;
}

namespace {

// Identifies a step by what it does and, recursively, what feeds it.
std::vector<std::string> signatures(const Plan& p) {
  std::vector<std::optional<std::string>> memo(p.steps.size());
  std::function<std::string(std::size_t)> sig = [&](std::size_t s) -> std::string {
    if (memo[s]) return *memo[s];
    memo[s] = "";  // guards against malformed cyclic links
    std::vector<std::string> in;
    for (const auto& l : p.links) {
      if (l.consumer != s) continue;
      in.push_back(to_string(l.condition) + "<" + (l.producer ? sig(*l.producer) : "init"));
    }
    std::sort(in.begin(), in.end());
    std::string out = to_string(p.steps[s].action) + "{";
    for (const auto& i : in) out += i + ";";
    out += "}";
    memo[s] = out;
    return out;
  };
  std::vector<std::string> out;
  for (std::size_t s = 0; s < p.steps.size(); ++s) out.push_back(sig(s));
  return out;
}

std::string endpoint(const std::optional<std::size_t>& s, const char* none,
                     const std::vector<std::size_t>& rename) {
  return s ? std::to_string(rename[*s]) : none;
}

}  // namespace

std::string Plan::key() const {
  const auto sigs = signatures(*this);
  std::vector<std::size_t> by_sig(steps.size());
  std::iota(by_sig.begin(), by_sig.end(), 0);
  std::stable_sort(by_sig.begin(), by_sig.end(),
                   [&](std::size_t a, std::size_t b) { return sigs[a] < sigs[b]; });
  std::vector<std::size_t> rename(steps.size());
  for (std::size_t i = 0; i < by_sig.size(); ++i) rename[by_sig[i]] = i;

  std::string out;
  for (auto s : by_sig) out += sigs[s] + "|";
  std::vector<std::string> parts;
  for (const auto& [a, b] : ordering) {
    parts.push_back(std::to_string(rename[a]) + "<" + std::to_string(rename[b]));
  }
  std::sort(parts.begin(), parts.end());
  for (const auto& x : parts) out += x + ",";
  parts.clear();
  for (const auto& l : links) {
    parts.push_back(endpoint(l.producer, "init", rename) + ">" + to_string(l.condition) + ">" +
                    endpoint(l.consumer, "goal", rename));
  }
  std::sort(parts.begin(), parts.end());
  for (const auto& x : parts) out += "|" + x;
  return out;
}

std::string Plan::describe() const {
  std::string out = "steps:";
  for (auto s : linearization()) out += " " + std::to_string(s + 1) + "." + to_string(steps[s].action);
  if (steps.empty()) out += " none";
  out += "; order:";
  if (ordering.empty()) out += " none";
  for (const auto& [a, b] : ordering) out += " " + std::to_string(a + 1) + "<" + std::to_string(b + 1);
  out += "; links:";
  for (const auto& l : links) {
    out += " " + (l.producer ? std::to_string(*l.producer + 1) : std::string("init")) + "-" +
           to_string(l.condition) + "->" +
           (l.consumer ? std::to_string(*l.consumer + 1) : std::string("goal"));
  }
  return out;
}

Plan null_plan(const Expr& condition) {
  Plan p;
  p.links.push_back(CausalLink{std::nullopt, condition, std::nullopt});
  return p;
}

std::optional<Plan> regress(const Plan& sub, const Expr& action, const Expr& goal) {
  Plan p = sub;
  const std::size_t k = p.steps.size();
  p.steps.push_back(PlanStep{action});
  for (std::size_t s = 0; s < k; ++s) p.ordering.emplace(s, k);
  for (auto& l : p.links) {
    if (!l.consumer) l.consumer = k;
  }
  p.links.push_back(CausalLink{k, goal, std::nullopt});
  if (!p.valid()) return std::nullopt;
  return p;
}

namespace {

// Steps of b listed in `shared` are identified with a's step of equal
// signature; the rest are appended.
std::optional<Plan> merge_sharing(const Plan& a, const Plan& b,
                                  const std::map<std::size_t, std::size_t>& shared) {
  Plan p = a;
  std::vector<std::size_t> rename(b.steps.size());
  for (std::size_t s = 0; s < b.steps.size(); ++s) {
    if (auto it = shared.find(s); it != shared.end()) {
      rename[s] = it->second;
    } else {
      rename[s] = p.steps.size();
      p.steps.push_back(b.steps[s]);
    }
  }
  for (const auto& [x, y] : b.ordering) p.ordering.emplace(rename[x], rename[y]);
  for (const auto& l : b.links) {
    CausalLink m{l.producer ? std::optional(rename[*l.producer]) : std::nullopt, l.condition,
                 l.consumer ? std::optional(rename[*l.consumer]) : std::nullopt};
    if (std::find(p.links.begin(), p.links.end(), m) == p.links.end()) p.links.push_back(m);
  }
  if (!p.valid()) return std::nullopt;
  return p;
}

// For each step of b, the steps of a with the same signature.
std::vector<std::vector<std::size_t>> shareable(const Plan& a, const Plan& b) {
  const auto sa = signatures(a);
  const auto sb = signatures(b);
  std::vector<std::vector<std::size_t>> out(sb.size());
  for (std::size_t s = 0; s < sb.size(); ++s) {
    for (std::size_t t = 0; t < sa.size(); ++t) {
      if (sa[t] == sb[s]) out[s].push_back(t);
    }
  }
  return out;
}

}  // namespace

std::optional<Plan> merge(const Plan& a, const Plan& b) {
  std::map<std::size_t, std::size_t> shared;
  std::set<std::size_t> used;
  const auto options = shareable(a, b);
  for (std::size_t s = 0; s < options.size(); ++s) {
    for (auto t : options[s]) {
      if (used.insert(t).second) {
        shared.emplace(s, t);
        break;
      }
    }
  }
  return merge_sharing(a, b, shared);
}

std::vector<Plan> merges(const Plan& a, const Plan& b) {
  const auto options = shareable(a, b);
  std::vector<Plan> out;
  std::set<std::string> seen;
  std::map<std::size_t, std::size_t> shared;
  std::set<std::size_t> used;
  // Sharing is tried before keeping apart, so the fully shared union is first.
  std::function<void(std::size_t)> choose = [&](std::size_t s) {
    if (s == options.size()) {
      auto p = merge_sharing(a, b, shared);
      if (p && seen.insert(p->key()).second) out.push_back(std::move(*p));
      return;
    }
    for (auto t : options[s]) {
      if (used.count(t)) continue;
      used.insert(t);
      shared.emplace(s, t);
      choose(s + 1);
      shared.erase(s);
      used.erase(t);
    }
    choose(s + 1);
  };
  choose(0);
  return out;
}

std::optional<Plan> with_ordering(const Plan& p, std::size_t before, std::size_t after) {
  Plan q = p;
  q.ordering.emplace(before, after);
  if (!q.valid()) return std::nullopt;
  return q;
}

bool can_intervene(const Plan& p, std::size_t step, const CausalLink& link) {
  if (link.producer == step || link.consumer == step) return false;
  if (link.producer && p.precedes(step, *link.producer)) return false;
  if (link.consumer && p.precedes(*link.consumer, step)) return false;
  return true;
}

}  // namespace warrant

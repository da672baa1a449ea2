#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <memory>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "warrant/graph.hpp"
#include "warrant/reason.hpp"

namespace warrant {

class Engine;

/// Called once per (waiter, discharging node) with the binding of the
/// interest's variables.
using Waiter = std::function<void(Engine&, std::size_t node, const Binding&)>;

struct Interest {
  std::size_t id = 0;
  Expr formula;
  /// Variables still open in `formula`; bound by unification at discharge.
  VarSet vars;
  double priority = 1.0;
  bool query = false;
  bool processed = false;
  std::vector<std::size_t> discharged_by;
};

/// Hooks for reasoning that does not fit the schema language.
class EngineExtension {
 public:
  virtual ~EngineExtension() = default;
  virtual void on_interest(Engine&, const Interest&) {}
  virtual void on_node(Engine&, const InferenceNode&) {}
};

struct LinkSpec {
  std::string reason;
  std::vector<std::size_t> basis;
  Binding binding;
  Expr conclusion;
  double strength = 1.0;
  bool defeasible = false;
};

struct RunStats {
  std::size_t steps = 0;
  bool budget_exhausted = false;
};

class Engine {
 public:
  Engine(std::vector<Reason> reasons, EngineConfig config, Projectibility projectibility);

  std::size_t add_premise(const Expr& f, double strength = 1.0);
  std::size_t add_percept(const Percept& p);
  std::size_t add_desire(const Expr& f, double strength = 1.0);
  std::size_t adopt_query(const Expr& f);
  /// Deduplicated by formula; a repeat adoption keeps the higher priority.
  std::size_t adopt_interest(const Expr& f, double priority);
  /// Fires for nodes already discharging the interest, then for later ones.
  void on_discharge(std::size_t interest, Waiter w);
  /// Records a link and, if new, its conclusion node. Absent for duplicates.
  std::optional<std::size_t> add_link(const LinkSpec& spec);

  void add_extension(std::shared_ptr<EngineExtension> ext);
  void set_trace(std::function<void(const std::string&)> trace) { trace_ = std::move(trace); }

  /// Processes one queue item; false when the queue is empty.
  bool step();
  RunStats run();

  const InferenceGraph& graph() const { return graph_; }
  const std::vector<Interest>& interests() const { return interests_; }
  const EngineConfig& config() const { return config_; }
  const Projectibility& projectibility() const { return projectibility_; }
  const std::vector<Reason>& reasons() const { return reasons_; }
  EvalContext eval_context() const { return {config_, projectibility_}; }

 private:
  struct QueueItem {
    double priority;
    std::size_t seq;
    bool is_node;
    std::size_t id;
    bool operator<(const QueueItem& o) const {
      if (priority != o.priority) return priority < o.priority;
      return seq > o.seq;
    }
  };

  // Pending use of a reason: forwards premises matched (or being watched),
  // backwards premises satisfied up to `next`.
  struct Instance {
    std::size_t reason;
    Binding binding;
    std::vector<std::size_t> basis;
    std::size_t next = 0;
    double priority = 1.0;
  };

  struct Watcher {
    std::size_t reason;
    Binding binding;
    double priority;
  };

  void enqueue(bool is_node, std::size_t id, double priority);
  void process_node(std::size_t id);
  void process_interest(std::size_t id);
  void discharge(std::size_t interest, std::size_t node, const Binding& b);

  using MatchFn = std::function<void(const Binding&, const std::vector<std::size_t>&)>;
  /// Completes the forwards premises of `r` over processed nodes, starting
  /// from a binding in which premise `fixed` (if any) is matched by `fixed_node`.
  void join_forwards(std::size_t r, const Binding& seed, std::optional<std::size_t> fixed,
                     std::size_t fixed_node, const MatchFn& fn);
  bool premise_accepts(const Premise& p, const InferenceNode& n) const;

  void forwards_matched(std::size_t r, const Binding& b, const std::vector<std::size_t>& basis,
                        double priority);
  void advance(Instance inst);
  void conclude(std::size_t r, const Binding& b, const std::vector<std::size_t>& basis);
  void log(const std::string& msg) const {
    if (trace_) trace_(msg);
  }

  std::vector<Reason> reasons_;
  std::vector<VarSet> reason_vars_;
  EngineConfig config_;
  Projectibility projectibility_;
  InferenceGraph graph_;
  std::vector<Interest> interests_;
  std::vector<std::vector<Waiter>> waiters_;
  std::unordered_map<Expr, std::size_t, ExprHash> interest_index_;
  std::vector<std::size_t> processed_nodes_;
  std::vector<bool> node_processed_;
  std::vector<Watcher> watchers_;
  std::set<std::string> seen_instances_;
  std::priority_queue<QueueItem> queue_;
  std::size_t seq_ = 0;
  std::vector<std::shared_ptr<EngineExtension>> extensions_;
  std::function<void(const std::string&)> trace_;
};

}  // namespace warrant

#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "warrant/formula.hpp"

namespace warrant {

struct PlanStep {
  Expr action;
};

/// Producer absent = initial state; consumer absent = the goal.
struct CausalLink {
  std::optional<std::size_t> producer;
  Expr condition;
  std::optional<std::size_t> consumer;
  friend bool operator==(const CausalLink&, const CausalLink&) = default;
};

/// Partial-order plan. Step ids are indices into `steps`; time variables are
/// implicit (step i happens at t<i>).
struct Plan {
  std::vector<PlanStep> steps;
  /// (a, b): step a strictly before step b.
  std::set<std::pair<std::size_t, std::size_t>> ordering;
  std::vector<CausalLink> links;

  /// Transitive: a is forced before b.
  bool precedes(std::size_t a, std::size_t b) const;
  bool acyclic() const;
  /// Acyclic, and every link's producer precedes its consumer.
  bool valid() const;
  /// Some topological order of the steps, smallest id first among ties.
  std::vector<std::size_t> linearization() const;
  /// Equal for plans that differ only by step numbering.
  std::string key() const;
  std::string describe() const;
};

Plan null_plan(const Expr& condition);

/// Appends a step performing `action`, after every step of `sub`, which now
/// feeds the links `sub` used to deliver to the goal; the new step delivers
/// `goal`.
std::optional<Plan> regress(const Plan& sub, const Expr& action, const Expr& goal);

/// Union with steps identified by (action, producer signature) and shared
/// initial-state links coalesced. Absent if the ordering becomes cyclic.
std::optional<Plan> merge(const Plan& a, const Plan& b);

/// Every distinct union obtained by identifying any subset of the steps
/// merge() would identify, fully shared first. Keeping a repeated action
/// apart lets a plan redo a condition that a later step destroys.
std::vector<Plan> merges(const Plan& a, const Plan& b);

std::optional<Plan> with_ordering(const Plan& p, std::size_t before, std::size_t after);

/// Whether `step` may fall between the link's producer and consumer.
bool can_intervene(const Plan& p, std::size_t step, const CausalLink& link);

}  // namespace warrant

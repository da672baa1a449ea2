#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "warrant/graph.hpp"

namespace warrant {

enum class DefeatKind { rebutting, undercutting };
const char* defeat_kind_name(DefeatKind k);

struct DefeatLink {
  std::size_t defeater;  // node
  std::size_t link;      // defeasible inference link under attack
  DefeatKind kind;
  friend bool operator==(const DefeatLink&, const DefeatLink&) = default;
};

/// Syntactic detection over every (node, defeasible link) pair.
std::vector<DefeatLink> detect_defeat_links(const InferenceGraph& g);

/// A tree of inferences ending in `conclusion`. Input nodes also have a
/// trivial argument with no links.
struct Argument {
  std::size_t conclusion;
  std::optional<std::size_t> last_link;
  /// Sorted, without repeats.
  std::vector<std::size_t> links;
  std::vector<std::size_t> inputs;
  /// Weakest link: min over link strengths and the base strengths of inputs.
  double strength;
};

class EnumerationLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unwinds the graph into arguments; cycles are cut along each path.
/// Throws EnumerationLimit past `limit` arguments.
std::vector<Argument> build_arguments(const InferenceGraph& g, std::size_t limit = 20'000);

struct ArgumentFramework {
  /// attackers[a] lists the arguments defeating some inference in a.
  std::vector<std::vector<std::size_t>> attackers;
  std::size_t size() const { return attackers.size(); }
};

/// B defeats A when B concludes a defeater of some link of A and B is at
/// least as strong as that link.
ArgumentFramework build_framework(const InferenceGraph& g, const std::vector<Argument>& args,
                                  const std::vector<DefeatLink>& defeats);

enum class Status : std::uint8_t { unassigned, defeated, undefeated };
using StatusAssignment = std::vector<Status>;

/// All maximal partial status assignments. `budget` bounds the arguments
/// left undecided by the forced (grounded) core; beyond it EnumerationLimit
/// is thrown instead of approximating.
std::vector<StatusAssignment> enumerate_status_assignments(const ArgumentFramework& af,
                                                           std::size_t budget = 25);

/// Undefeated in every assignment.
std::vector<bool> undefeated_arguments(std::size_t count,
                                       const std::vector<StatusAssignment>& assignments);

bool justified(std::size_t node, const std::vector<Argument>& args,
               const std::vector<StatusAssignment>& assignments);
double degree_of_justification(std::size_t node, const std::vector<Argument>& args,
                               const std::vector<StatusAssignment>& assignments);

/// Everything the report needs from one completed graph.
struct DefeatAnalysis {
  std::vector<DefeatLink> defeat_links;
  std::vector<Argument> arguments;
  ArgumentFramework framework;
  std::vector<StatusAssignment> assignments;
  std::vector<bool> argument_undefeated;
  std::vector<bool> node_justified;
  std::vector<double> node_degree;
};

DefeatAnalysis analyze(const InferenceGraph& g, std::size_t budget = 25);

}  // namespace warrant

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "warrant/formula.hpp"

namespace warrant {

enum class NodeKind { percept, desire, inference };
const char* node_kind_name(NodeKind k);

struct InferenceNode {
  std::size_t id = 0;
  Expr formula;
  NodeKind kind = NodeKind::inference;
  /// Premise strength, percept clarity or desire strength. Meaningful only
  /// when `input` is set.
  double base_strength = 0.0;
  /// Given directly (premise, percept, desire) rather than only derived.
  bool input = false;
  std::vector<std::size_t> support;
};

struct InferenceLink {
  std::size_t id = 0;
  std::string reason;
  std::vector<std::size_t> basis;
  Binding binding;
  double strength = 1.0;
  bool defeasible = false;
  std::size_t target = 0;
};

/// Nodes are unique per (formula, kind); links per (reason, basis, target).
/// Nothing is ever removed.
class InferenceGraph {
 public:
  std::size_t intern(const Expr& formula, NodeKind kind, bool& created);
  /// Absent when an identical link already exists.
  std::optional<std::size_t> add_link(InferenceLink link);

  std::optional<std::size_t> find(const Expr& formula, NodeKind kind) const;
  /// Every node carrying `formula`, any kind.
  std::vector<std::size_t> find_all(const Expr& formula) const;

  InferenceNode& node(std::size_t id) { return nodes_.at(id); }
  const InferenceNode& node(std::size_t id) const { return nodes_.at(id); }
  const InferenceLink& link(std::size_t id) const { return links_.at(id); }
  const std::vector<InferenceNode>& nodes() const { return nodes_; }
  const std::vector<InferenceLink>& links() const { return links_; }

 private:
  struct Key {
    Expr formula;
    NodeKind kind;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return k.formula.hash() * 3 + static_cast<std::size_t>(k.kind);
    }
  };

  std::vector<InferenceNode> nodes_;
  std::vector<InferenceLink> links_;
  std::unordered_map<Key, std::size_t, KeyHash> index_;
  std::unordered_map<std::string, std::size_t> link_index_;
};

}  // namespace warrant

#include "warrant/graph.hpp"

namespace warrant {

const char* node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::percept: return "percept";
    case NodeKind::desire: return "desire";
    case NodeKind::inference: return "inference";
  }
  return "?";
}

std::size_t InferenceGraph::intern(const Expr& formula, NodeKind kind, bool& created) {
  Key key{formula, kind};
  if (auto it = index_.find(key); it != index_.end()) {
    created = false;
    return it->second;
  }
  created = true;
  const std::size_t id = nodes_.size();
  nodes_.push_back(InferenceNode{id, formula, kind, 0.0, false, {}});
  index_.emplace(std::move(key), id);
  return id;
}

std::optional<std::size_t> InferenceGraph::add_link(InferenceLink link) {
  std::string key = link.reason;
  for (auto b : link.basis) key += ' ' + std::to_string(b);
  key += " > " + std::to_string(link.target);
  if (link_index_.contains(key)) return std::nullopt;
  link.id = links_.size();
  link_index_.emplace(std::move(key), link.id);
  nodes_.at(link.target).support.push_back(link.id);
  links_.push_back(std::move(link));
  return links_.back().id;
}

std::optional<std::size_t> InferenceGraph::find(const Expr& formula, NodeKind kind) const {
  if (auto it = index_.find(Key{formula, kind}); it != index_.end()) return it->second;
  return std::nullopt;
}

std::vector<std::size_t> InferenceGraph::find_all(const Expr& formula) const {
  std::vector<std::size_t> out;
  for (auto k : {NodeKind::percept, NodeKind::desire, NodeKind::inference}) {
    if (auto id = find(formula, k)) out.push_back(*id);
  }
  return out;
}

}  // namespace warrant

#include "amrseq/codec.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "amrseq/errors.hpp"

namespace amrseq {

namespace {

class Anonymizer {
 public:
  explicit Anonymizer(const AmrGraph& graph)
      : graph_(graph), forward_(forward_reachable(graph)) {
    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
      out_[graph.edges[i].source].push_back(i);
      if (graph.edges[i].target.is_variable()) {
        in_[graph.edges[i].target.value].push_back(i);
      }
    }
    consumed_.assign(graph.edges.size(), false);
  }

  SeqTree run() { return visit(graph_.root); }

 private:
  SeqTree visit(const std::string& var) {
    visited_.insert(var);
    SeqTree node;
    node.label = graph_.concept_of(var);
    auto out_it = out_.find(var);
    if (out_it != out_.end()) {
      for (std::size_t i : out_it->second) {
        if (consumed_[i]) continue;
        consumed_[i] = true;
        const Edge& edge = graph_.edges[i];
        if (edge.relation == "wiki") continue;
        SeqTree::Child child;
        child.relation = edge.relation;
        if (edge.target.is_constant()) {
          child.subtree.label = edge.target.value;
        } else if (visited_.count(edge.target.value)) {
          child.subtree.label = graph_.concept_of(edge.target.value);
          child.subtree.is_ref = true;
        } else {
          child.subtree = visit(edge.target.value);
        }
        node.children.push_back(std::move(child));
      }
    }
    auto in_it = in_.find(var);
    if (in_it != in_.end()) {
      for (std::size_t i : in_it->second) {
        if (consumed_[i]) continue;
        const Edge& edge = graph_.edges[i];
        // Forward-reachable sources get their own expansion later; only
        // nodes unreachable along edge direction enter through an inverse.
        if (visited_.count(edge.source) || forward_.count(edge.source)) {
          continue;
        }
        consumed_[i] = true;
        SeqTree::Child child;
        child.relation = edge.relation + "-of";
        child.subtree = visit(edge.source);
        node.children.push_back(std::move(child));
      }
    }
    return node;
  }

  const AmrGraph& graph_;
  std::set<std::string> forward_;
  std::map<std::string, std::vector<std::size_t>> out_;
  std::map<std::string, std::vector<std::size_t>> in_;
  std::vector<bool> consumed_;
  std::set<std::string> visited_;
};

class Restorer {
 public:
  AmrGraph run(const SeqTree& tree) {
    graph_.root = build(tree);
    return graph_;
  }

 private:
  // Returns the variable this subtree resolves to, either a fresh node or
  // the first earlier node sharing the concept when the subtree is childless.
  std::string build(const SeqTree& tree) {
    if (tree.leaf()) {
      auto seen = first_var_.find(tree.label);
      if (seen != first_var_.end()) return seen->second;
    }
    std::string var = namer_.fresh(tree.label);
    graph_.nodes[var] = tree.label;
    first_var_.emplace(tree.label, var);
    for (const auto& child : tree.children) {
      if (child.subtree.leaf() && !child.subtree.is_ref &&
          is_constant_token(child.subtree.label)) {
        graph_.edges.push_back(
            {var, child.relation, EdgeTarget::constant(child.subtree.label)});
        continue;
      }
      std::string target = build(child.subtree);
      if (is_inverse_relation(child.relation)) {
        graph_.edges.push_back(
            {target, child.relation.substr(0, child.relation.size() - 3),
             EdgeTarget::variable(var)});
      } else {
        graph_.edges.push_back(
            {var, child.relation, EdgeTarget::variable(target)});
      }
    }
    return var;
  }

  AmrGraph graph_;
  VariableNamer namer_;
  std::map<std::string, std::string> first_var_;
};

}  // namespace

SeqTree anonymize(const AmrGraph& graph) { return Anonymizer(graph).run(); }

AmrGraph restore(const SeqTree& tree) { return Restorer().run(tree); }

AmrGraph restore(std::string_view text) { return restore(text_to_tree(text)); }

}  // namespace amrseq

#include "amrseq/reorder.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "amrseq/codec.hpp"

namespace amrseq {

namespace {

void collect_slots(const SeqTree& node, std::vector<std::size_t>& sizes) {
  if (node.children.size() >= 2) sizes.push_back(node.children.size());
  for (const auto& child : node.children) {
    collect_slots(child.subtree, sizes);
  }
}

SeqTree apply_slots(const SeqTree& node,
                    const std::vector<std::vector<int>>& perms,
                    std::size_t& next) {
  SeqTree out;
  out.label = node.label;
  out.is_ref = node.is_ref;
  const std::vector<int>* perm = nullptr;
  if (node.children.size() >= 2) perm = &perms[next++];
  std::vector<SeqTree::Child> rebuilt;
  rebuilt.reserve(node.children.size());
  for (const auto& child : node.children) {
    SeqTree::Child copy;
    copy.relation = child.relation;
    copy.subtree = apply_slots(child.subtree, perms, next);
    rebuilt.push_back(std::move(copy));
  }
  if (perm == nullptr) {
    out.children = std::move(rebuilt);
  } else {
    out.children.reserve(rebuilt.size());
    for (int index : *perm) {
      out.children.push_back(std::move(rebuilt[static_cast<std::size_t>(index)]));
    }
  }
  return out;
}

struct MinStart {
  std::optional<int> value;

  void merge(std::optional<int> other) {
    if (other && (!value || *other < *value)) value = other;
  }
};

// Sorts bottom-up; every min-start is computed against the input tree's
// paths, which sorting inside a subtree cannot change.
std::optional<int> sort_by_alignment(const SeqTree& node, TreePath& path,
                                     const Alignment& alignment,
                                     SeqTree& out) {
  out.label = node.label;
  out.is_ref = node.is_ref;
  MinStart own;
  if (auto it = alignment.spans.find(path); it != alignment.spans.end()) {
    own.value = it->second.start;
  }
  std::vector<std::pair<SeqTree::Child, std::optional<int>>> ranked;
  ranked.reserve(node.children.size());
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    path.push_back(static_cast<int>(i));
    SeqTree::Child child;
    child.relation = node.children[i].relation;
    std::optional<int> sub = sort_by_alignment(node.children[i].subtree, path,
                                               alignment, child.subtree);
    path.pop_back();
    own.merge(sub);
    ranked.emplace_back(std::move(child), sub);
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) {
                     if (a.second.has_value() != b.second.has_value()) {
                       return a.second.has_value();
                     }
                     return a.second.has_value() && *a.second < *b.second;
                   });
  out.children.reserve(ranked.size());
  for (auto& entry : ranked) out.children.push_back(std::move(entry.first));
  return own.value;
}

// Mirror of the anonymizing walk that remembers which edge produced each
// child, so a sorted tree can be turned back into an edge permutation.
struct TracedChild;

struct TracedNode {
  std::vector<std::size_t> wiki_edges;
  std::vector<TracedChild> children;
};

struct TracedChild {
  std::size_t edge_index = 0;
  bool expanded = false;  // this child introduced the target's subtree
  std::optional<int> min_start;
  TracedNode node;
};

class Tracer {
 public:
  explicit Tracer(const AmrGraph& graph)
      : graph_(graph), forward_(forward_reachable(graph)) {
    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
      out_[graph.edges[i].source].push_back(i);
      if (graph.edges[i].target.is_variable()) {
        in_[graph.edges[i].target.value].push_back(i);
      }
    }
    consumed_.assign(graph.edges.size(), false);
  }

  TracedNode run() { return visit(graph_.root); }

 private:
  TracedNode visit(const std::string& var) {
    visited_.insert(var);
    TracedNode node;
    auto out_it = out_.find(var);
    if (out_it != out_.end()) {
      for (std::size_t i : out_it->second) {
        if (consumed_[i]) continue;
        consumed_[i] = true;
        const Edge& edge = graph_.edges[i];
        if (edge.relation == "wiki") {
          node.wiki_edges.push_back(i);
          continue;
        }
        TracedChild child;
        child.edge_index = i;
        if (edge.target.is_variable() && !visited_.count(edge.target.value)) {
          child.expanded = true;
          child.node = visit(edge.target.value);
        }
        node.children.push_back(std::move(child));
      }
    }
    auto in_it = in_.find(var);
    if (in_it != in_.end()) {
      for (std::size_t i : in_it->second) {
        if (consumed_[i]) continue;
        const Edge& edge = graph_.edges[i];
        // Same rule as the anonymizer: forward-reachable sources expand at
        // their own position, not through an inverse here.
        if (visited_.count(edge.source) || forward_.count(edge.source)) {
          continue;
        }
        consumed_[i] = true;
        TracedChild child;
        child.edge_index = i;
        child.expanded = true;
        child.node = visit(edge.source);
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

std::optional<int> sort_traced(TracedNode& node, TreePath& path,
                               const Alignment& alignment) {
  MinStart own;
  if (auto it = alignment.spans.find(path); it != alignment.spans.end()) {
    own.value = it->second.start;
  }
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    path.push_back(static_cast<int>(i));
    node.children[i].min_start = sort_traced(node.children[i].node, path,
                                             alignment);
    path.pop_back();
    own.merge(node.children[i].min_start);
  }
  std::stable_sort(node.children.begin(), node.children.end(),
                   [](const TracedChild& a, const TracedChild& b) {
                     if (a.min_start.has_value() != b.min_start.has_value()) {
                       return a.min_start.has_value();
                     }
                     return a.min_start.has_value() &&
                            *a.min_start < *b.min_start;
                   });
  return own.value;
}

void emit_edges(const TracedNode& node, std::vector<std::size_t>& order) {
  for (std::size_t w : node.wiki_edges) order.push_back(w);
  for (const auto& child : node.children) {
    order.push_back(child.edge_index);
    if (child.expanded) emit_edges(child.node, order);
  }
}

}  // namespace

std::vector<SeqTree> enumerate_orderings(const SeqTree& tree,
                                         std::size_t cap) {
  std::vector<std::size_t> sizes;
  collect_slots(tree, sizes);
  std::vector<std::vector<int>> perms(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    perms[i].resize(sizes[i]);
    for (std::size_t j = 0; j < sizes[i]; ++j) {
      perms[i][j] = static_cast<int>(j);
    }
  }

  constexpr std::size_t kMaxRaw = 1000000;
  std::vector<SeqTree> result;
  std::set<std::string> seen;
  for (std::size_t raw = 0; raw < kMaxRaw; ++raw) {
    std::size_t next = 0;
    SeqTree candidate = apply_slots(tree, perms, next);
    if (seen.insert(tree_to_text(candidate)).second) {
      result.push_back(std::move(candidate));
      if (result.size() >= cap) break;
    }
    // Advance the rightmost slot; a wrap back to identity carries left.
    std::size_t slot = perms.size();
    while (slot > 0) {
      --slot;
      if (std::next_permutation(perms[slot].begin(), perms[slot].end())) {
        break;
      }
      if (slot == 0) return result;  // every slot wrapped: enumeration done
    }
    if (perms.empty()) break;  // nothing to permute
  }
  return result;
}

double order_score(const SeqTree& tree, const Alignment& alignment) {
  std::vector<int> starts;
  TreePath path;
  // Pre-order collection of aligned nodes' start tokens.
  auto walk = [&](auto&& self, const SeqTree& node) -> void {
    if (auto it = alignment.spans.find(path); it != alignment.spans.end()) {
      starts.push_back(it->second.start);
    }
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      path.push_back(static_cast<int>(i));
      self(self, node.children[i].subtree);
      path.pop_back();
    }
  };
  walk(walk, tree);

  if (starts.size() < 2) return 1.0;
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    for (std::size_t j = i + 1; j < starts.size(); ++j) {
      if (starts[i] > starts[j]) ++inversions;
    }
  }
  std::size_t pairs = starts.size() * (starts.size() - 1) / 2;
  return 1.0 - static_cast<double>(inversions) / static_cast<double>(pairs);
}

SeqTree best_ordering(const SeqTree& tree, const Alignment& alignment) {
  SeqTree out;
  TreePath path;
  sort_by_alignment(tree, path, alignment, out);
  return out;
}

AmrGraph reorder_graph(const AmrGraph& graph, const Alignment& alignment) {
  TracedNode traced = Tracer(graph).run();
  TreePath path;
  sort_traced(traced, path, alignment);
  std::vector<std::size_t> order;
  order.reserve(graph.edges.size());
  emit_edges(traced, order);

  AmrGraph out = graph;
  out.edges.clear();
  out.edges.reserve(order.size());
  for (std::size_t i : order) out.edges.push_back(graph.edges[i]);
  return out;
}

std::vector<Document> augment_corpus(
    const std::vector<std::pair<Document, Alignment>>& docs) {
  std::vector<Document> out;
  out.reserve(docs.size() * 2);
  for (const auto& [doc, alignment] : docs) out.push_back(doc);
  for (const auto& [doc, alignment] : docs) {
    Document dup = doc;
    dup.graph = reorder_graph(doc.graph, alignment);
    out.push_back(std::move(dup));
  }
  return out;
}

}  // namespace amrseq

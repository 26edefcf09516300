#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace amrseq {

// Variable-free ordered tree used as the seq2seq target. A leaf-reference
// node stands for a duplicated co-referring node and carries only the
// referenced concept; it prints bare, without parentheses, as do attribute
// constants.
struct SeqTree {
  struct Child;

  std::string label;
  bool is_ref = false;
  std::vector<Child> children;

  bool leaf() const { return children.empty(); }
};

struct SeqTree::Child {
  std::string relation;  // stored without the leading colon
  SeqTree subtree;
};

bool operator==(const SeqTree& a, const SeqTree& b);
bool operator==(const SeqTree::Child& a, const SeqTree::Child& b);
inline bool operator!=(const SeqTree& a, const SeqTree& b) { return !(a == b); }

std::string tree_to_text(const SeqTree& tree, bool indent = false);
SeqTree text_to_tree(std::string_view text);

std::size_t node_count(const SeqTree& tree);

}  // namespace amrseq

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "amrseq/seq_tree.hpp"

namespace amrseq {

// Child indices from the root; empty = the root itself.
using TreePath = std::vector<int>;

struct TokenSpan {
  int start = 0;
  int end = 0;  // inclusive

  bool operator==(const TokenSpan&) const = default;
};

// Maps tree nodes to the sentence-token spans they express.
struct Alignment {
  std::map<TreePath, TokenSpan> spans;

  bool empty() const { return spans.empty(); }
};

// "0.2.0"; the root's empty path formats as "".
std::string format_path(const TreePath& path);

// Node addressed by the path, or nullptr when a child index is out of range.
const SeqTree* node_at(const SeqTree& tree, const TreePath& path);

// Parses space-separated `start-end|path[+path…]` items; `#` starts a
// comment line. Every path must exist in the tree and spans must satisfy
// 0 <= start <= end.
Alignment parse_alignments(std::string_view text, const SeqTree& tree);

std::string format_alignments(const Alignment& alignment);

}  // namespace amrseq

#pragma once

#include <string_view>

#include "amrseq/graph.hpp"
#include "amrseq/seq_tree.hpp"

namespace amrseq {

// Strips variables from a graph, producing the ordered tree form used as the
// seq2seq target. The first visit of each node yields a full subtree; any
// later reference collapses to a bare leaf carrying the node's concept.
// `:wiki` attributes are dropped. Nodes reachable only against edge
// direction are reached through inverted `-of` relations, mirroring the
// Penman writer, so every valid graph converts.
SeqTree anonymize(const AmrGraph& graph);

// Rebuilds a graph from the variable-free tree, assigning fresh variables.
// A childless node whose concept matches an earlier node merges into the
// FIRST node created with that concept; this recovers re-entrancies but is
// lossy for graphs with repeated concepts on distinct childless nodes.
AmrGraph restore(const SeqTree& tree);
AmrGraph restore(std::string_view text);

}  // namespace amrseq

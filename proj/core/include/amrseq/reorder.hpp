#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "amrseq/alignment.hpp"
#include "amrseq/corpus.hpp"
#include "amrseq/graph.hpp"
#include "amrseq/seq_tree.hpp"

namespace amrseq {

// All sibling orderings of the tree, identity first, then in lexicographic
// order of the per-node permutation tuple (pre-order, last node fastest).
// Equal trees arising from identical sibling subtrees are emitted once. The
// enumeration stops at `cap` distinct trees and gives up after one million
// raw permutations regardless.
std::vector<SeqTree> enumerate_orderings(const SeqTree& tree, std::size_t cap);

// 1 minus the normalized count of pairwise inversions among the aligned
// nodes' start tokens, read in pre-order. 1.0 when fewer than two nodes are
// aligned; 0.0 when their order is fully reversed.
double order_score(const SeqTree& tree, const Alignment& alignment);

// Stable-sorts every node's children by the minimum aligned start token in
// their subtree; children with no aligned descendant keep their relative
// order after the aligned ones. Paths in the alignment always refer to the
// INPUT tree. This greedy sort maximizes the order score when sibling
// subtrees cover non-interleaved token ranges; with interleaved alignments
// it is a heuristic.
SeqTree best_ordering(const SeqTree& tree, const Alignment& alignment);

// Permutes the graph's edge list so its anonymized tree is the best
// ordering. `:wiki` attributes, absent from the tree, stay on their nodes
// and move to the front of each node's edges.
AmrGraph reorder_graph(const AmrGraph& graph, const Alignment& alignment);

// Appends one word-order-matched duplicate per document: N docs in, the
// same N followed by N reordered copies out. Duplicates keep their ids and
// are emitted even when the best ordering is the original order.
std::vector<Document> augment_corpus(
    const std::vector<std::pair<Document, Alignment>>& docs);

}  // namespace amrseq

#pragma once

#include <string>

#include "amrseq/codec.hpp"
#include "amrseq/graph.hpp"
#include "amrseq/seq_tree.hpp"

namespace testsupport {

// "Crk binding to CAS is required for the induction of cell migration":
// the running example graph, its variable-free tree, and the word-order
// reordering of that tree. Token indices:
//   Crk(0) binding(1) to(2) CAS(3) is(4) required(5) for(6) the(7)
//   induction(8) of(9) cell(10) migration(11)
extern const char* const kExamplePenman;      // indented, with variables
extern const char* const kExampleTreeLine;    // anonymized, single line
extern const char* const kReorderedTreeLine;  // word-order-matched branches
extern const char* const kExampleSentence;

// Word alignments for the example, as parse_alignments items. The first is
// in the original tree's coordinates, the second in the reordered tree's.
extern const char* const kExampleAlignment;
extern const char* const kReorderedAlignment;

// Three-document corpus with hand-computed category scores (see the
// evaluation tests for the expected fractions).
extern const char* const kToyGoldCorpus;
extern const char* const kToyTestCorpus;

amrseq::AmrGraph example_graph();
amrseq::SeqTree example_tree();
amrseq::SeqTree reordered_tree();

// The example graph with the re-entrant cell split into a fresh node:
// 22 triples, 20 matched against the original, P 10/11, R 20/21, F 40/43.
amrseq::AmrGraph example_broken_reentrancy();

}  // namespace testsupport

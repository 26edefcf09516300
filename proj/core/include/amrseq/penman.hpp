#pragma once

#include <string>
#include <string_view>

#include "amrseq/graph.hpp"

namespace amrseq {

// Reads one parenthesized Penman expression. Bare tokens naming a variable
// defined anywhere in the expression become re-entrant edges; all other bare
// tokens, quoted strings and numbers become attribute constants.
AmrGraph parse_penman(std::string_view text);

// Deterministic depth-first rendering following stored edge order; a variable
// is introduced with "/ concept" at its first appearance and referenced bare
// afterwards. Nodes only reachable against edge direction are rendered through
// an inverse "-of" relation so the output always re-parses.
std::string serialize_penman(const AmrGraph& graph, bool indent = false);

}  // namespace amrseq

#pragma once

#include <string>
#include <string_view>

#include "amrseq/seq_tree.hpp"

namespace amrseq {

// Drops repeated (relation, concept) children under each node, keeping the
// first occurrence; applied at every depth. Model output tends to repeat
// branches, and duplicates add no meaning.
SeqTree prune(const SeqTree& tree);

// Makes malformed tree text parseable: closes an unbalanced quote, deletes
// relation tokens with no value, then balances parentheses. Valid input is
// returned byte-for-byte unchanged; fixed text is re-emitted with canonical
// spacing. Throws Unrepairable when the result still does not parse.
std::string repair(std::string_view text);

// Fallback output for text that cannot be repaired.
SeqTree default_amr();

}  // namespace amrseq

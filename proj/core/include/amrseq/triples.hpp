#pragma once

#include <string>
#include <vector>

#include "amrseq/graph.hpp"

namespace amrseq {

enum class TripleKind { Instance, Attribute, Relation, Top };

// Instance: (var, "instance", concept)
// Attribute: (var, relation, constant literal)
// Relation: (var, relation, var)
// Top: (root var, "TOP", root concept) — the synthetic top triple; it matches
// another top triple only when the mapped roots carry equal concepts.
struct Triple {
  TripleKind kind;
  std::string source;
  std::string relation;
  std::string value;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

std::string to_string(const Triple& triple);

struct TripleSet {
  std::vector<Triple> triples;

  std::size_t size() const { return triples.size(); }
  std::size_t count(TripleKind kind) const;
  // Sorted distinct variables mentioned by any triple.
  std::vector<std::string> variables() const;
};

// Multiset equality, insensitive to triple order.
bool same_triples(const TripleSet& a, const TripleSet& b);

TripleSet to_triples(const AmrGraph& graph);

}  // namespace amrseq

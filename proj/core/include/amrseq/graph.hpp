#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "amrseq/errors.hpp"

namespace amrseq {

// Target of an edge: either another node (named by its variable) or an
// attribute constant such as "Crk", 42, - or +.
struct EdgeTarget {
  enum class Kind { Variable, Constant };

  Kind kind = Kind::Variable;
  std::string value;

  bool is_variable() const { return kind == Kind::Variable; }
  bool is_constant() const { return kind == Kind::Constant; }

  static EdgeTarget variable(std::string name) {
    return {Kind::Variable, std::move(name)};
  }
  static EdgeTarget constant(std::string literal) {
    return {Kind::Constant, std::move(literal)};
  }

  friend bool operator==(const EdgeTarget&, const EdgeTarget&) = default;
};

// Relation labels are stored without the leading colon; the colon is added
// back on serialization.
struct Edge {
  std::string source;
  std::string relation;
  EdgeTarget target;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Metadata {
  std::string id;
  std::string sentence;
  std::string alignments;
  std::vector<std::string> tokens;
  // Unrecognized "# ::key value" lines, in file order.
  std::vector<std::pair<std::string, std::string>> extra;

  friend bool operator==(const Metadata&, const Metadata&) = default;
};

// Rooted directed labeled graph. Edge order follows the source text and is
// preserved through serialization so branch order stays controllable.
struct AmrGraph {
  std::string root;
  std::map<std::string, std::string> nodes;  // variable -> concept
  std::vector<Edge> edges;
  Metadata meta;

  // Empty string when the variable is undefined.
  std::string concept_of(const std::string& var) const {
    auto it = nodes.find(var);
    return it == nodes.end() ? std::string() : it->second;
  }
  std::size_t attribute_count() const;
};

struct Violation {
  ErrorKind kind;
  std::string message;
};

// Empty result iff all structural invariants hold: root defined, edge
// endpoints defined, concepts non-empty, every node reachable from the root
// when edges may be walked in either direction.
std::vector<Violation> validate(const AmrGraph& graph);

// Variables reachable from the root along edge direction only. Anything
// outside this set can be introduced in a serialization solely through an
// inverse relation.
std::set<std::string> forward_reachable(const AmrGraph& graph);

// Quoted strings, numbers, bare - and +, and the conventional sentence-mode
// markers are attribute constants rather than node references.
bool is_constant_token(std::string_view token);

// A relation spelled `X-of` is the inverse of `X`; readers normalize it to
// the forward direction by swapping endpoints.
bool is_inverse_relation(std::string_view relation);

std::string strip_quotes(std::string_view literal);
std::string quote(std::string_view raw);

// Fresh-variable namer: first letter of the concept, then letter2, letter3, ...
class VariableNamer {
 public:
  std::string fresh(const std::string& concept_label);
  void reserve(const std::string& name) { used_.insert(name); }

 private:
  std::set<std::string> used_;
};

}  // namespace amrseq

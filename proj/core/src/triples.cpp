#include "amrseq/triples.hpp"

#include <algorithm>
#include <set>

namespace amrseq {

std::string to_string(const Triple& triple) {
  switch (triple.kind) {
    case TripleKind::Top:
      return "TOP(" + triple.source + ")";
    case TripleKind::Instance:
      return "instance(" + triple.source + ", " + triple.value + ")";
    default:
      return triple.relation + "(" + triple.source + ", " + triple.value + ")";
  }
}

std::size_t TripleSet::count(TripleKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(triples.begin(), triples.end(),
                    [kind](const Triple& t) { return t.kind == kind; }));
}

std::vector<std::string> TripleSet::variables() const {
  std::set<std::string> vars;
  for (const Triple& t : triples) {
    vars.insert(t.source);
    if (t.kind == TripleKind::Relation) vars.insert(t.value);
  }
  return {vars.begin(), vars.end()};
}

bool same_triples(const TripleSet& a, const TripleSet& b) {
  std::vector<Triple> x = a.triples, y = b.triples;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

TripleSet to_triples(const AmrGraph& graph) {
  TripleSet out;
  out.triples.reserve(graph.nodes.size() + graph.edges.size() + 1);
  for (const auto& [var, concept_label] : graph.nodes)
    out.triples.push_back({TripleKind::Instance, var, "instance", concept_label});
  out.triples.push_back(
      {TripleKind::Top, graph.root, "TOP", graph.concept_of(graph.root)});
  for (const Edge& e : graph.edges) {
    if (e.target.is_variable())
      out.triples.push_back({TripleKind::Relation, e.source, e.relation, e.target.value});
    else
      out.triples.push_back({TripleKind::Attribute, e.source, e.relation, e.target.value});
  }
  return out;
}

}  // namespace amrseq

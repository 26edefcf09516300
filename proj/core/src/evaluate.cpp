#include "amrseq/evaluate.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "amrseq/errors.hpp"
#include "amrseq/triples.hpp"
#include "amrseq/wiki.hpp"

namespace amrseq {

namespace {

std::vector<AmrGraph> graphs_of(const std::vector<Document>& docs) {
  std::vector<AmrGraph> graphs;
  graphs.reserve(docs.size());
  for (const auto& doc : docs) graphs.push_back(doc.graph);
  return graphs;
}

CategoryScore from_counts(SmatchScore counts) {
  CategoryScore score;
  score.counts = counts;
  score.empty = counts.gold_total == 0 && counts.test_total == 0;
  return score;
}

AmrGraph unlabel(const AmrGraph& graph) {
  AmrGraph out = graph;
  for (auto& edge : out.edges) edge.relation = "rel";
  return out;
}

std::string strip_sense(const std::string& concept_label) {
  auto dash = concept_label.rfind('-');
  if (dash == std::string::npos || dash == 0 || dash + 3 > concept_label.size()) {
    return concept_label;
  }
  for (std::size_t i = dash + 1; i < concept_label.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(concept_label[i]))) return concept_label;
  }
  return concept_label.substr(0, dash);
}

AmrGraph strip_senses(const AmrGraph& graph) {
  AmrGraph out = graph;
  for (auto& [var, concept_label] : out.nodes) concept_label = strip_sense(concept_label);
  return out;
}

// Micro-averaged F over per-document multisets of items.
template <typename ItemsOf>
CategoryScore bag_score(const std::vector<Document>& gold,
                        const std::vector<Document>& test, ItemsOf items_of) {
  SmatchScore counts;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    auto gold_items = items_of(gold[i].graph);
    auto test_items = items_of(test[i].graph);
    counts.gold_total += static_cast<long long>(gold_items.size());
    counts.test_total += static_cast<long long>(test_items.size());
    std::sort(gold_items.begin(), gold_items.end());
    std::sort(test_items.begin(), test_items.end());
    decltype(gold_items) common;
    std::set_intersection(gold_items.begin(), gold_items.end(),
                          test_items.begin(), test_items.end(),
                          std::back_inserter(common));
    counts.matched += static_cast<long long>(common.size());
  }
  return from_counts(counts);
}

std::vector<std::string> concept_bag(const AmrGraph& graph) {
  std::vector<std::string> items;
  items.reserve(graph.nodes.size());
  for (const auto& [var, concept_label] : graph.nodes) items.push_back(concept_label);
  return items;
}

std::vector<std::pair<std::string, std::string>> entity_bag(
    const AmrGraph& graph) {
  std::vector<std::pair<std::string, std::string>> items;
  for (const auto& [var, concept_label] : graph.nodes) {
    if (auto name = name_string(graph, var)) {
      items.emplace_back(concept_label, *name);
    }
  }
  return items;
}

std::vector<std::pair<std::string, std::string>> wiki_bag(
    const AmrGraph& graph) {
  std::vector<std::pair<std::string, std::string>> items;
  for (const auto& [var, concept_label] : graph.nodes) {
    auto name = name_string(graph, var);
    if (!name) continue;
    for (const auto& edge : graph.edges) {
      if (edge.source == var && edge.relation == "wiki" &&
          edge.target.is_constant()) {
        items.emplace_back(*name, strip_quotes(edge.target.value));
      }
    }
  }
  return items;
}

std::vector<std::string> negation_bag(const AmrGraph& graph) {
  std::vector<std::string> items;
  for (const auto& edge : graph.edges) {
    if (edge.relation == "polarity" && edge.target.is_constant() &&
        edge.target.value == "-") {
      items.push_back(graph.concept_of(edge.source));
    }
  }
  return items;
}

TripleSet reentrant_triples(const AmrGraph& graph) {
  std::map<std::string, int> incoming;
  for (const auto& edge : graph.edges) {
    if (edge.target.is_variable()) ++incoming[edge.target.value];
  }
  std::set<std::string> reentrant;
  for (const auto& [var, count] : incoming) {
    if (count >= 2) reentrant.insert(var);
  }
  TripleSet filtered;
  for (const auto& triple : to_triples(graph).triples) {
    bool keep = reentrant.count(triple.source) > 0 ||
                (triple.kind == TripleKind::Relation &&
                 reentrant.count(triple.value) > 0);
    if (keep) filtered.triples.push_back(triple);
  }
  return filtered;
}

bool is_srl_relation(const std::string& relation) {
  std::string_view rest = relation;
  if (rest.size() >= 3 && rest.ends_with("-of")) {
    rest.remove_suffix(3);
  }
  if (rest.size() < 4 || !rest.starts_with("ARG")) return false;
  for (std::size_t i = 3; i < rest.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(rest[i]))) return false;
  }
  return true;
}

TripleSet srl_triples(const AmrGraph& graph) {
  TripleSet filtered;
  for (const auto& triple : to_triples(graph).triples) {
    if (triple.kind != TripleKind::Relation &&
        triple.kind != TripleKind::Attribute) {
      continue;
    }
    if (is_srl_relation(triple.relation)) {
      filtered.triples.push_back(triple);
    }
  }
  return filtered;
}

CategoryScore filtered_smatch(const std::vector<Document>& gold,
                              const std::vector<Document>& test,
                              TripleSet (*filter)(const AmrGraph&),
                              int restarts, std::uint64_t seed, int jobs) {
  std::vector<TripleSet> gold_sets;
  std::vector<TripleSet> test_sets;
  gold_sets.reserve(gold.size());
  test_sets.reserve(test.size());
  for (const auto& doc : gold) gold_sets.push_back(filter(doc.graph));
  for (const auto& doc : test) test_sets.push_back(filter(doc.graph));
  return from_counts(corpus_smatch(gold_sets, test_sets, restarts, seed, jobs));
}

int token_count(const Document& doc) {
  if (!doc.graph.meta.tokens.empty()) {
    return static_cast<int>(doc.graph.meta.tokens.size());
  }
  return static_cast<int>(whitespace_tokens(doc.sentence).size());
}

}  // namespace

const CategoryScore& FineGrainedReport::at(std::string_view name) const {
  for (const auto& [category, score] : categories) {
    if (category == name) return score;
  }
  throw Error(ErrorKind::IdMismatch,
              "no category named '" + std::string(name) + "'");
}

std::vector<Document> align_by_id(const std::vector<Document>& gold,
                                  const std::vector<Document>& test) {
  if (gold.size() != test.size()) {
    throw Error(ErrorKind::IdMismatch,
                "gold has " + std::to_string(gold.size()) +
                    " documents, test has " + std::to_string(test.size()));
  }
  auto usable_ids = [](const std::vector<Document>& docs) {
    std::set<std::string> seen;
    for (const auto& doc : docs) {
      if (doc.id.empty() || !seen.insert(doc.id).second) return false;
    }
    return true;
  };
  if (!usable_ids(gold) || !usable_ids(test)) {
    return test;  // positional pairing
  }
  std::map<std::string, const Document*> by_id;
  for (const auto& doc : test) by_id[doc.id] = &doc;
  std::vector<Document> aligned;
  aligned.reserve(gold.size());
  for (const auto& doc : gold) {
    auto it = by_id.find(doc.id);
    if (it == by_id.end()) {
      throw Error(ErrorKind::IdMismatch,
                  "document '" + doc.id + "' missing from test corpus");
    }
    aligned.push_back(*it->second);
  }
  return aligned;
}

FineGrainedReport fine_grained(const std::vector<Document>& gold,
                               const std::vector<Document>& test,
                               int restarts, std::uint64_t seed, int jobs) {
  if (gold.size() != test.size()) {
    throw Error(ErrorKind::IdMismatch,
                "gold has " + std::to_string(gold.size()) +
                    " documents, test has " + std::to_string(test.size()));
  }
  std::vector<AmrGraph> gold_graphs = graphs_of(gold);
  std::vector<AmrGraph> test_graphs = graphs_of(test);

  auto transformed_smatch = [&](AmrGraph (*transform)(const AmrGraph&)) {
    std::vector<AmrGraph> g;
    std::vector<AmrGraph> t;
    g.reserve(gold_graphs.size());
    t.reserve(test_graphs.size());
    for (const auto& graph : gold_graphs) g.push_back(transform(graph));
    for (const auto& graph : test_graphs) t.push_back(transform(graph));
    return from_counts(corpus_smatch(g, t, restarts, seed, jobs));
  };

  FineGrainedReport report;
  report.categories.emplace_back(
      "Smatch",
      from_counts(corpus_smatch(gold_graphs, test_graphs, restarts, seed,
                                jobs)));
  report.categories.emplace_back("Unlabeled", transformed_smatch(unlabel));
  report.categories.emplace_back("No WSD", transformed_smatch(strip_senses));
  report.categories.emplace_back("Named Entities",
                                 bag_score(gold, test, entity_bag));
  report.categories.emplace_back("Wikification",
                                 bag_score(gold, test, wiki_bag));
  report.categories.emplace_back("Negation",
                                 bag_score(gold, test, negation_bag));
  report.categories.emplace_back("Concepts",
                                 bag_score(gold, test, concept_bag));
  report.categories.emplace_back(
      "Reentrancies", filtered_smatch(gold, test, reentrant_triples, restarts,
                                      seed, jobs));
  report.categories.emplace_back(
      "SRL", filtered_smatch(gold, test, srl_triples, restarts, seed, jobs));
  return report;
}

std::vector<LengthBucketRow> length_buckets(const std::vector<Document>& gold,
                                            const std::vector<Document>& test,
                                            const std::vector<int>& edges,
                                            int restarts, std::uint64_t seed,
                                            int jobs) {
  if (gold.size() != test.size()) {
    throw Error(ErrorKind::IdMismatch,
                "gold has " + std::to_string(gold.size()) +
                    " documents, test has " + std::to_string(test.size()));
  }
  std::vector<int> sorted_edges = edges;
  std::sort(sorted_edges.begin(), sorted_edges.end());
  sorted_edges.erase(std::unique(sorted_edges.begin(), sorted_edges.end()),
                     sorted_edges.end());

  std::vector<LengthBucketRow> rows;
  for (int edge : sorted_edges) {
    std::vector<AmrGraph> g;
    std::vector<AmrGraph> t;
    for (std::size_t i = 0; i < gold.size(); ++i) {
      if (token_count(gold[i]) <= edge) {
        g.push_back(gold[i].graph);
        t.push_back(test[i].graph);
      }
    }
    LengthBucketRow row;
    row.max_len = edge;
    row.doc_count = static_cast<int>(g.size());
    if (!g.empty()) {
      row.f = corpus_smatch(g, t, restarts, seed, jobs).f();
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace amrseq

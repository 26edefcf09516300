#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "amrseq/corpus.hpp"
#include "amrseq/graph.hpp"

namespace amrseq {

// Per entity name: how often it occurred under a `:name` node, and how often
// each wiki link was attached to it. A `:wiki -` annotation counts as an
// occurrence without a link.
struct WikiTable {
  std::map<std::string, std::map<std::string, long long>> links;
  std::map<std::string, long long> totals;

  bool empty() const { return totals.empty(); }
};

// Space-joined `:opN` constants (quotes stripped, N ascending) of the node's
// `:name` child; nullopt when the node has no named entity.
std::optional<std::string> name_string(const AmrGraph& graph,
                                       const std::string& var);

WikiTable build_wiki_table(const std::vector<Document>& gold);

// Adds `:wiki` to name-bearing nodes whose dominant gold link exceeds the
// frequency threshold (strictly); nodes already carrying `:wiki` are left
// alone. Link count ties pick the lexicographically smallest link.
AmrGraph wikify(const AmrGraph& graph, const WikiTable& table,
                double threshold = 0.5);

// Tab-separated `name<TAB>link<TAB>count<TAB>total`, sorted by name then
// link; a name that never had a link gets one line with an empty link field.
void save_wiki_table(const WikiTable& table, const std::filesystem::path& path);
WikiTable load_wiki_table(const std::filesystem::path& path);

}  // namespace amrseq

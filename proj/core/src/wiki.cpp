#include "amrseq/wiki.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "amrseq/errors.hpp"

namespace amrseq {

namespace {

bool op_index(const std::string& relation, int& index) {
  if (relation.size() < 3 || relation.compare(0, 2, "op") != 0) return false;
  for (std::size_t i = 2; i < relation.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(relation[i]))) return false;
  }
  index = std::stoi(relation.substr(2));
  return true;
}

// The wiki constant attached to the node, if any; "-" means "annotated as
// having no link".
std::optional<std::string> wiki_value(const AmrGraph& graph,
                                      const std::string& var) {
  for (const auto& edge : graph.edges) {
    if (edge.source == var && edge.relation == "wiki" &&
        edge.target.is_constant()) {
      return strip_quotes(edge.target.value);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> name_string(const AmrGraph& graph,
                                       const std::string& var) {
  const std::string* name_var = nullptr;
  for (const auto& edge : graph.edges) {
    if (edge.source == var && edge.relation == "name" &&
        edge.target.is_variable()) {
      name_var = &edge.target.value;
      break;
    }
  }
  if (name_var == nullptr) return std::nullopt;

  std::vector<std::pair<int, std::string>> ops;
  for (const auto& edge : graph.edges) {
    int index = 0;
    if (edge.source == *name_var && edge.target.is_constant() &&
        op_index(edge.relation, index)) {
      ops.emplace_back(index, strip_quotes(edge.target.value));
    }
  }
  if (ops.empty()) return std::nullopt;
  std::stable_sort(ops.begin(), ops.end(),
                   [](const auto& a, const auto& b) {
                     return a.first < b.first;
                   });
  std::string joined;
  for (const auto& [index, value] : ops) {
    if (!joined.empty()) joined += ' ';
    joined += value;
  }
  return joined;
}

WikiTable build_wiki_table(const std::vector<Document>& gold) {
  WikiTable table;
  for (const auto& doc : gold) {
    for (const auto& [var, concept_label] : doc.graph.nodes) {
      auto name = name_string(doc.graph, var);
      if (!name) continue;
      ++table.totals[*name];
      auto link = wiki_value(doc.graph, var);
      if (link && *link != "-") ++table.links[*name][*link];
    }
  }
  return table;
}

AmrGraph wikify(const AmrGraph& graph, const WikiTable& table,
                double threshold) {
  AmrGraph out = graph;
  // Nodes in map order: insertion position is the edge-list tail either way,
  // so iteration order only affects the order of added edges.
  for (const auto& [var, concept_label] : graph.nodes) {
    auto name = name_string(graph, var);
    if (!name) continue;
    if (wiki_value(graph, var)) continue;
    auto totals_it = table.totals.find(*name);
    auto links_it = table.links.find(*name);
    if (totals_it == table.totals.end() || totals_it->second <= 0 ||
        links_it == table.links.end()) {
      continue;
    }
    const std::string* best_link = nullptr;
    long long best_count = 0;
    for (const auto& [link, count] : links_it->second) {
      if (count > best_count) {  // map order breaks ties at the first seen
        best_count = count;
        best_link = &link;
      }
    }
    if (best_link == nullptr) continue;
    double share = static_cast<double>(best_count) /
                   static_cast<double>(totals_it->second);
    if (share > threshold) {
      Edge edge;
      edge.source = var;
      edge.relation = "wiki";
      edge.target = EdgeTarget::constant(quote(*best_link));
      out.edges.push_back(std::move(edge));
    }
  }
  return out;
}

void save_wiki_table(const WikiTable& table,
                     const std::filesystem::path& path) {
  std::ostringstream out;
  for (const auto& [name, total] : table.totals) {
    auto links_it = table.links.find(name);
    if (links_it == table.links.end() || links_it->second.empty()) {
      out << name << "\t\t0\t" << total << '\n';
      continue;
    }
    for (const auto& [link, count] : links_it->second) {
      out << name << '\t' << link << '\t' << count << '\t' << total << '\n';
    }
  }
  write_text_file(path, out.str());
}

WikiTable load_wiki_table(const std::filesystem::path& path) {
  WikiTable table;
  std::istringstream in(read_text_file(path));
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
      auto tab = line.find('\t', pos);
      if (tab == std::string::npos) {
        fields.push_back(line.substr(pos));
        break;
      }
      fields.push_back(line.substr(pos, tab - pos));
      pos = tab + 1;
    }
    if (fields.size() != 4 || fields[0].empty()) {
      throw ParseError(ErrorKind::UnexpectedToken,
                       "expected 'name<TAB>link<TAB>count<TAB>total'",
                       line_no);
    }
    try {
      long long count = std::stoll(fields[2]);
      long long total = std::stoll(fields[3]);
      table.totals[fields[0]] = total;
      if (!fields[1].empty() && count > 0) {
        table.links[fields[0]][fields[1]] = count;
      }
    } catch (const std::exception&) {
      throw ParseError(ErrorKind::UnexpectedToken, "bad count in wiki table",
                       line_no);
    }
  }
  return table;
}

}  // namespace amrseq

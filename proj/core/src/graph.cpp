#include "amrseq/graph.hpp"

#include <cctype>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace amrseq {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnbalancedParens: return "UnbalancedParens";
    case ErrorKind::EmptyConcept: return "EmptyConcept";
    case ErrorKind::DuplicateVariableDefinition: return "DuplicateVariableDefinition";
    case ErrorKind::DanglingRelation: return "DanglingRelation";
    case ErrorKind::UndefinedVariableReference: return "UndefinedVariableReference";
    case ErrorKind::UnexpectedToken: return "UnexpectedToken";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::TokenMismatch: return "TokenMismatch";
    case ErrorKind::Unrepairable: return "Unrepairable";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::IdMismatch: return "IdMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::BadPath: return "BadPath";
    case ErrorKind::BadSpan: return "BadSpan";
    case ErrorKind::IoError: return "IoError";
  }
  return "Error";
}

std::size_t AmrGraph::attribute_count() const {
  std::size_t n = 0;
  for (const Edge& e : edges)
    if (e.target.is_constant()) ++n;
  return n;
}

namespace {

bool is_number(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  bool digits = false, dot = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits = true;
    } else if (s[i] == '.' && !dot) {
      dot = true;
    } else {
      return false;
    }
  }
  return digits;
}

}  // namespace

bool is_constant_token(std::string_view token) {
  if (token.empty()) return false;
  if (token.front() == '"') return true;
  if (token == "-" || token == "+") return true;
  if (is_number(token)) return true;
  // Sentence-mode markers, conventionally attributes of :mode.
  return token == "imperative" || token == "expressive" || token == "interrogative";
}

bool is_inverse_relation(std::string_view relation) {
  return relation.size() > 3 && relation.ends_with("-of");
}

std::set<std::string> forward_reachable(const AmrGraph& graph) {
  std::map<std::string, std::vector<std::string>> adjacent;
  for (const auto& edge : graph.edges) {
    if (edge.target.is_variable()) {
      adjacent[edge.source].push_back(edge.target.value);
    }
  }
  std::set<std::string> seen{graph.root};
  std::vector<std::string> stack{graph.root};
  while (!stack.empty()) {
    std::string var = std::move(stack.back());
    stack.pop_back();
    auto it = adjacent.find(var);
    if (it == adjacent.end()) continue;
    for (const std::string& next : it->second) {
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  return seen;
}

std::string strip_quotes(std::string_view literal) {
  if (literal.size() >= 2 && literal.front() == '"' && literal.back() == '"')
    return std::string(literal.substr(1, literal.size() - 2));
  return std::string(literal);
}

std::string quote(std::string_view raw) {
  return "\"" + std::string(raw) + "\"";
}

std::string VariableNamer::fresh(const std::string& concept_label) {
  char head = 'x';
  if (!concept_label.empty() && std::isalpha(static_cast<unsigned char>(concept_label[0])))
    head = static_cast<char>(std::tolower(static_cast<unsigned char>(concept_label[0])));
  std::string base(1, head);
  if (used_.insert(base).second) return base;
  for (int suffix = 2;; ++suffix) {
    std::string name = base + std::to_string(suffix);
    if (used_.insert(name).second) return name;
  }
}

std::vector<Violation> validate(const AmrGraph& graph) {
  std::vector<Violation> out;
  if (graph.root.empty() || !graph.nodes.count(graph.root))
    out.push_back({ErrorKind::UndefinedVariableReference,
                   "root '" + graph.root + "' is not a defined node"});
  for (const auto& [var, concept_label] : graph.nodes) {
    if (var.empty())
      out.push_back({ErrorKind::UnexpectedToken, "empty variable name"});
    if (concept_label.empty())
      out.push_back({ErrorKind::EmptyConcept, "node '" + var + "' has an empty concept"});
  }
  for (const Edge& e : graph.edges) {
    if (!graph.nodes.count(e.source))
      out.push_back({ErrorKind::UndefinedVariableReference,
                     "edge source '" + e.source + "' is not a defined node"});
    if (e.target.is_variable() && !graph.nodes.count(e.target.value))
      out.push_back({ErrorKind::UndefinedVariableReference,
                     "edge :" + e.relation + " points at undefined variable '" +
                         e.target.value + "'"});
  }

  // Reachability from the root, edges walkable in either direction.
  if (!graph.root.empty() && graph.nodes.count(graph.root)) {
    std::unordered_map<std::string, std::vector<const std::string*>> adj;
    for (const Edge& e : graph.edges) {
      if (!e.target.is_variable()) continue;
      if (!graph.nodes.count(e.source) || !graph.nodes.count(e.target.value)) continue;
      adj[e.source].push_back(&e.target.value);
      adj[e.target.value].push_back(&e.source);
    }
    std::unordered_set<std::string> seen{graph.root};
    std::deque<std::string> queue{graph.root};
    while (!queue.empty()) {
      std::string v = queue.front();
      queue.pop_front();
      for (const std::string* next : adj[v])
        if (seen.insert(*next).second) queue.push_back(*next);
    }
    for (const auto& [var, concept_label] : graph.nodes) {
      (void)concept_label;
      if (!seen.count(var))
        out.push_back({ErrorKind::Unreachable,
                       "node '" + var + "' is not reachable from the root"});
    }
  }
  return out;
}

}  // namespace amrseq

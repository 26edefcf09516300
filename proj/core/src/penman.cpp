#include "amrseq/penman.hpp"

#include <unordered_map>
#include <unordered_set>

#include "text_lexer.hpp"

namespace amrseq {

namespace {

using detail::Lexer;
using detail::Token;

struct PendingEdge {
  std::string source;
  std::string relation;
  std::string target_text;  // symbol or quoted literal
  bool quoted = false;
  bool nested = false;  // target was a nested (var / concept ...) node
  int line = -1;
};

class PenmanReader {
 public:
  explicit PenmanReader(std::string_view text) : lexer_(text, /*slash_is_token=*/true) {}

  AmrGraph read() {
    if (lexer_.peek().type != Token::Type::LParen)
      throw ParseError(ErrorKind::UnbalancedParens, "expected '(' to open an expression",
                       lexer_.peek().line);
    AmrGraph graph;
    graph.root = read_node();
    if (lexer_.peek().type != Token::Type::End)
      throw ParseError(ErrorKind::UnbalancedParens,
                       "trailing content after the closing ')'", lexer_.peek().line);

    graph.nodes = std::move(nodes_);
    for (PendingEdge& p : pending_) {
      Edge e;
      bool to_variable = p.nested || (!p.quoted && graph.nodes.count(p.target_text));
      if (to_variable && is_inverse_relation(p.relation)) {
        e.source = std::move(p.target_text);
        e.relation = p.relation.substr(0, p.relation.size() - 3);
        e.target = EdgeTarget::variable(std::move(p.source));
      } else {
        e.source = std::move(p.source);
        e.relation = std::move(p.relation);
        if (to_variable) {
          e.target = EdgeTarget::variable(std::move(p.target_text));
        } else if (p.quoted) {
          e.target = EdgeTarget::constant(quote(p.target_text));
        } else {
          // Bare symbol never introduced with "/ concept": attribute constant.
          e.target = EdgeTarget::constant(std::move(p.target_text));
        }
      }
      graph.edges.push_back(std::move(e));
    }
    return graph;
  }

 private:
  // Consumes "( var / concept item* )" and returns the variable.
  std::string read_node() {
    lexer_.next();  // '('
    Token var = lexer_.next();
    if (var.type != Token::Type::Symbol)
      throw ParseError(ErrorKind::UnexpectedToken,
                       "expected a variable after '(', got '" + var.text + "'", var.line);
    if (lexer_.peek().type != Token::Type::Slash)
      throw ParseError(ErrorKind::EmptyConcept,
                       "node '" + var.text + "' has no '/ concept'", var.line);
    lexer_.next();  // '/'
    Token concept_tok = lexer_.next();
    if (concept_tok.type != Token::Type::Symbol || concept_tok.text.empty())
      throw ParseError(ErrorKind::EmptyConcept,
                       "node '" + var.text + "' has an empty concept", concept_tok.line);
    if (!nodes_.emplace(var.text, concept_tok.text).second)
      throw ParseError(ErrorKind::DuplicateVariableDefinition,
                       "variable '" + var.text + "' introduced twice", var.line);

    for (;;) {
      const Token& tok = lexer_.peek();
      if (tok.type == Token::Type::RParen) {
        lexer_.next();
        return var.text;
      }
      if (tok.type == Token::Type::End)
        throw ParseError(ErrorKind::UnbalancedParens, "missing ')'", tok.line);
      if (tok.type != Token::Type::Relation)
        throw ParseError(ErrorKind::UnexpectedToken,
                         "expected a :relation, got '" + tok.text + "'", tok.line);
      Token rel = lexer_.next();
      const Token& target = lexer_.peek();
      switch (target.type) {
        case Token::Type::LParen: {
          std::size_t slot = pending_.size();
          pending_.push_back({var.text, rel.text, "", false, true, rel.line});
          pending_[slot].target_text = read_node();
          break;
        }
        case Token::Type::Symbol:
          pending_.push_back({var.text, rel.text, lexer_.next().text, false, false, rel.line});
          break;
        case Token::Type::String:
          pending_.push_back({var.text, rel.text, lexer_.next().text, true, false, rel.line});
          break;
        default:
          throw ParseError(ErrorKind::DanglingRelation,
                           "relation :" + rel.text + " has no target", rel.line);
      }
    }
  }

  Lexer lexer_;
  std::map<std::string, std::string> nodes_;
  std::vector<PendingEdge> pending_;
};

class PenmanWriter {
 public:
  PenmanWriter(const AmrGraph& graph, bool indent)
      : graph_(graph), forward_(forward_reachable(graph)), indent_(indent) {
    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
      out_edges_[graph.edges[i].source].push_back(i);
      if (graph.edges[i].target.is_variable())
        in_edges_[graph.edges[i].target.value].push_back(i);
    }
    consumed_.assign(graph.edges.size(), false);
  }

  std::string render() {
    std::string out;
    render_node(graph_.root, 0, out);
    return out;
  }

 private:
  void pad(int depth, std::string& out) {
    if (indent_) {
      out += '\n';
      out.append(static_cast<std::size_t>(depth) * 4, ' ');
    } else {
      out += ' ';
    }
  }

  void render_node(const std::string& var, int depth, std::string& out) {
    defined_.insert(var);
    out += '(';
    out += var;
    out += " / ";
    auto node = graph_.nodes.find(var);
    out += node == graph_.nodes.end() ? std::string("amr-unknown") : node->second;

    auto oit = out_edges_.find(var);
    if (oit != out_edges_.end()) {
      for (std::size_t idx : oit->second) {
        if (consumed_[idx]) continue;
        consumed_[idx] = true;
        const Edge& e = graph_.edges[idx];
        pad(depth + 1, out);
        out += ':' + e.relation + ' ';
        if (e.target.is_constant()) {
          out += e.target.value;
        } else if (defined_.count(e.target.value)) {
          out += e.target.value;
        } else {
          render_node(e.target.value, depth + 1, out);
        }
      }
    }
    // Nodes connected only against edge direction are introduced here through
    // the inverse relation, so every node ends up defined exactly once.
    auto iit = in_edges_.find(var);
    if (iit != in_edges_.end()) {
      for (std::size_t idx : iit->second) {
        if (consumed_[idx]) continue;
        const Edge& e = graph_.edges[idx];
        // Forward-reachable sources get rendered at their own expansion;
        // this edge will then surface there as a plain reference.
        if (defined_.count(e.source) || forward_.count(e.source)) continue;
        consumed_[idx] = true;
        pad(depth + 1, out);
        out += ':' + e.relation + "-of ";
        render_node(e.source, depth + 1, out);
      }
    }
    out += ')';
  }

  const AmrGraph& graph_;
  std::set<std::string> forward_;
  bool indent_;
  std::unordered_map<std::string, std::vector<std::size_t>> out_edges_;
  std::unordered_map<std::string, std::vector<std::size_t>> in_edges_;
  std::vector<bool> consumed_;
  std::unordered_set<std::string> defined_;
};

}  // namespace

AmrGraph parse_penman(std::string_view text) {
  return PenmanReader(text).read();
}

std::string serialize_penman(const AmrGraph& graph, bool indent) {
  return PenmanWriter(graph, indent).render();
}

}  // namespace amrseq

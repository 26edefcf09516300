#include "amrseq/seq_tree.hpp"

#include <sstream>

#include "amrseq/errors.hpp"
#include "amrseq/graph.hpp"
#include "text_lexer.hpp"

namespace amrseq {

bool operator==(const SeqTree& a, const SeqTree& b) {
  return a.label == b.label && a.is_ref == b.is_ref && a.children == b.children;
}

bool operator==(const SeqTree::Child& a, const SeqTree::Child& b) {
  return a.relation == b.relation && a.subtree == b.subtree;
}

std::size_t node_count(const SeqTree& tree) {
  std::size_t n = 1;
  for (const auto& child : tree.children) n += node_count(child.subtree);
  return n;
}

namespace {

// A node prints bare when it carries no structure of its own: references to
// an earlier node and attribute constants. Everything else is parenthesized,
// including childless concept nodes, so that a bare token can always be told
// apart from a fresh concept when reading the text back.
bool prints_bare(const SeqTree& tree) {
  return tree.leaf() && (tree.is_ref || is_constant_token(tree.label));
}

void write_node(std::ostringstream& out, const SeqTree& tree, bool indent,
                int depth) {
  if (prints_bare(tree)) {
    out << tree.label;
    return;
  }
  out << '(' << tree.label;
  for (const auto& child : tree.children) {
    if (indent) {
      out << '\n';
      for (int i = 0; i < 4 * (depth + 1); ++i) out << ' ';
    } else {
      out << ' ';
    }
    out << ':' << child.relation << ' ';
    write_node(out, child.subtree, indent, depth + 1);
  }
  out << ')';
}

class TreeReader {
 public:
  explicit TreeReader(std::string_view text)
      : lexer_(text, /*slash_is_token=*/false) {}

  SeqTree read() {
    if (lexer_.peek().type != detail::Token::Type::LParen) {
      throw ParseError(ErrorKind::UnbalancedParens,
                       "tree must start with '('", lexer_.peek().line);
    }
    SeqTree tree = read_node();
    const auto& tail = lexer_.peek();
    if (tail.type != detail::Token::Type::End) {
      throw ParseError(ErrorKind::UnbalancedParens,
                       "unexpected content after tree", tail.line);
    }
    return tree;
  }

 private:
  SeqTree read_node() {
    lexer_.next();  // consume '('
    SeqTree node;
    const auto label = lexer_.peek();
    if (label.type != detail::Token::Type::Symbol) {
      throw ParseError(ErrorKind::EmptyConcept, "node has no label",
                       label.line);
    }
    node.label = label.text;
    lexer_.next();
    while (true) {
      const auto item = lexer_.peek();
      if (item.type == detail::Token::Type::RParen) {
        lexer_.next();
        return node;
      }
      if (item.type == detail::Token::Type::End) {
        throw ParseError(ErrorKind::UnbalancedParens, "missing ')'",
                         item.line);
      }
      if (item.type != detail::Token::Type::Relation) {
        throw ParseError(ErrorKind::UnexpectedToken,
                         "expected a relation, got '" + item.text + "'",
                         item.line);
      }
      lexer_.next();
      SeqTree::Child child;
      child.relation = item.text;
      const auto value = lexer_.peek();
      switch (value.type) {
        case detail::Token::Type::LParen:
          child.subtree = read_node();
          break;
        case detail::Token::Type::Symbol:
          child.subtree.label = value.text;
          child.subtree.is_ref = !is_constant_token(value.text);
          lexer_.next();
          break;
        case detail::Token::Type::String:
          child.subtree.label = quote(value.text);
          lexer_.next();
          break;
        default:
          throw ParseError(ErrorKind::DanglingRelation,
                           "relation ':" + child.relation + "' has no value",
                           value.line);
      }
      node.children.push_back(std::move(child));
    }
  }

  detail::Lexer lexer_;
};

}  // namespace

std::string tree_to_text(const SeqTree& tree, bool indent) {
  std::ostringstream out;
  // A bare root would be unreadable as a tree, so the root is always
  // parenthesized even when it is a lone constant or reference.
  out << '(' << tree.label;
  for (const auto& child : tree.children) {
    if (indent) {
      out << "\n    ";
    } else {
      out << ' ';
    }
    out << ':' << child.relation << ' ';
    write_node(out, child.subtree, indent, 1);
  }
  out << ')';
  return out.str();
}

SeqTree text_to_tree(std::string_view text) {
  TreeReader reader(text);
  return reader.read();
}

}  // namespace amrseq

#include "amrseq/postprocess.hpp"

#include <cctype>
#include <set>
#include <utility>
#include <vector>

#include "amrseq/errors.hpp"

namespace amrseq {

namespace {

bool parses(std::string_view text) {
  try {
    text_to_tree(text);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// Forgiving split into parens, quoted strings, and bare symbols. Unlike the
// strict reader this never throws; whatever the model emitted becomes some
// token.
std::vector<std::string> lenient_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(' || c == ')') {
      tokens.emplace_back(1, c);
      ++i;
      continue;
    }
    if (c == '"') {
      std::size_t end = text.find('"', i + 1);
      if (end == std::string_view::npos) end = text.size() - 1;
      tokens.emplace_back(text.substr(i, end - i + 1));
      i = end + 1;
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && text[end] != '(' && text[end] != ')' &&
           text[end] != '"' &&
           !std::isspace(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    tokens.emplace_back(text.substr(i, end - i));
    i = end;
  }
  return tokens;
}

bool is_relation_token(const std::string& token) {
  return !token.empty() && token[0] == ':';
}

// A relation is finished when a value follows: a subtree, a string, or a
// bare symbol. Another relation or a ')' means the edge was cut off.
bool has_value_after(const std::vector<std::string>& tokens,
                     std::size_t index) {
  if (index + 1 >= tokens.size()) return false;
  const std::string& next = tokens[index + 1];
  if (next == ")") return false;
  if (is_relation_token(next)) return false;
  return true;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& token = tokens[i];
    if (!out.empty() && token != ")" && out.back() != '(') out += ' ';
    out += token;
  }
  return out;
}

}  // namespace

SeqTree prune(const SeqTree& tree) {
  SeqTree out;
  out.label = tree.label;
  out.is_ref = tree.is_ref;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& child : tree.children) {
    if (!seen.emplace(child.relation, child.subtree.label).second) continue;
    SeqTree::Child kept;
    kept.relation = child.relation;
    kept.subtree = prune(child.subtree);
    out.children.push_back(std::move(kept));
  }
  return out;
}

std::string repair(std::string_view text) {
  if (parses(text)) return std::string(text);

  // Close a dangling quote so everything after it is not swallowed into one
  // endless string token.
  std::string working(text);
  std::size_t quotes = 0;
  for (char c : working) {
    if (c == '"') ++quotes;
  }
  if (quotes % 2 != 0) working += '"';

  std::vector<std::string> tokens = lenient_tokens(working);

  // Deleting one unfinished relation can strand the one before it, so sweep
  // until stable.
  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (is_relation_token(tokens[i]) && !has_value_after(tokens, i)) {
        tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(i));
        removed = true;
        break;
      }
    }
  }

  // Drop closers with no matching opener, then close what stays open.
  std::vector<std::string> balanced;
  int depth = 0;
  for (auto& token : tokens) {
    if (token == ")") {
      if (depth == 0) continue;
      --depth;
    } else if (token == "(") {
      ++depth;
    }
    balanced.push_back(std::move(token));
  }
  for (; depth > 0; --depth) balanced.emplace_back(")");

  std::string result = join_tokens(balanced);
  if (!parses(result)) {
    throw Error(ErrorKind::Unrepairable,
                "could not repair '" + std::string(text) + "'");
  }
  return result;
}

SeqTree default_amr() {
  SeqTree tree;
  tree.label = "amr-unknown";
  return tree;
}

}  // namespace amrseq

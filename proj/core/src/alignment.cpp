#include "amrseq/alignment.hpp"

#include <sstream>

#include "amrseq/errors.hpp"

namespace amrseq {

namespace {

TreePath parse_path(const std::string& text) {
  TreePath path;
  if (text.empty()) return path;  // the root
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto dot = text.find('.', pos);
    std::string part = text.substr(
        pos, dot == std::string::npos ? std::string::npos : dot - pos);
    try {
      std::size_t used = 0;
      int index = std::stoi(part, &used);
      if (used != part.size() || index < 0) throw std::invalid_argument(part);
      path.push_back(index);
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadPath, "bad path component '" + part + "'");
    }
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return path;
}

}  // namespace

std::string format_path(const TreePath& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

const SeqTree* node_at(const SeqTree& tree, const TreePath& path) {
  const SeqTree* node = &tree;
  for (int index : path) {
    if (index < 0 || static_cast<std::size_t>(index) >= node->children.size()) {
      return nullptr;
    }
    node = &node->children[static_cast<std::size_t>(index)].subtree;
  }
  return node;
}

Alignment parse_alignments(std::string_view text, const SeqTree& tree) {
  Alignment alignment;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line[0] == '#') continue;
    std::istringstream items(line);
    std::string item;
    while (items >> item) {
      auto bar = item.find('|');
      if (bar == std::string::npos) {
        throw Error(ErrorKind::BadSpan,
                    "alignment item '" + item + "' has no '|'");
      }
      std::string span_text = item.substr(0, bar);
      auto dash = span_text.find('-', 1);
      if (dash == std::string::npos) {
        throw Error(ErrorKind::BadSpan,
                    "span '" + span_text + "' is not 'start-end'");
      }
      TokenSpan span;
      try {
        std::size_t used = 0;
        std::string start_text = span_text.substr(0, dash);
        std::string end_text = span_text.substr(dash + 1);
        span.start = std::stoi(start_text, &used);
        if (used != start_text.size()) throw std::invalid_argument(start_text);
        span.end = std::stoi(end_text, &used);
        if (used != end_text.size()) throw std::invalid_argument(end_text);
      } catch (const std::exception&) {
        throw Error(ErrorKind::BadSpan,
                    "span '" + span_text + "' is not 'start-end'");
      }
      if (span.start < 0 || span.start > span.end) {
        throw Error(ErrorKind::BadSpan, "span '" + span_text +
                                            "' must satisfy 0 <= start <= end");
      }
      std::string paths_text = item.substr(bar + 1);
      std::size_t pos = 0;
      while (pos <= paths_text.size()) {
        auto plus = paths_text.find('+', pos);
        std::string path_text = paths_text.substr(
            pos, plus == std::string::npos ? std::string::npos : plus - pos);
        TreePath path = parse_path(path_text);
        if (node_at(tree, path) == nullptr) {
          throw Error(ErrorKind::BadPath, "path '" + path_text +
                                              "' does not exist in the tree");
        }
        alignment.spans[path] = span;
        if (plus == std::string::npos) break;
        pos = plus + 1;
      }
    }
  }
  return alignment;
}

std::string format_alignments(const Alignment& alignment) {
  // Items with equal spans are not regrouped; one item per path keeps the
  // output trivially diffable.
  std::string out;
  for (const auto& [path, span] : alignment.spans) {
    if (!out.empty()) out += ' ';
    out += std::to_string(span.start) + "-" + std::to_string(span.end) + "|" +
           format_path(path);
  }
  return out;
}

}  // namespace amrseq

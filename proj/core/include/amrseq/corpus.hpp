#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "amrseq/graph.hpp"

namespace amrseq {

struct Document {
  std::string id;
  std::string sentence;  // HTML-stripped
  AmrGraph graph;
  bool gold = false;
};

struct CorpusError {
  int line = -1;  // first line of the offending block
  std::string id;
  std::string message;
};

struct Corpus {
  std::vector<Document> documents;
  std::vector<CorpusError> errors;
};

// Removes maximal <...> spans and collapses the resulting runs of spaces.
std::string strip_html(std::string_view text);

// Blank-line-separated blocks with their 1-based starting line.
struct Block {
  std::string text;
  int first_line = 1;
};
std::vector<Block> split_blocks(std::string_view text);

// One document per block: "# ::key value" metadata lines followed by a Penman
// expression. Malformed blocks are recorded as errors; valid ones are kept.
Corpus parse_corpus(std::string_view text);
Corpus read_corpus(const std::string& path);

void write_corpus(std::ostream& out, const std::vector<Document>& docs, bool indent = true);
void write_corpus(const std::string& path, const std::vector<Document>& docs, bool indent = true);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

std::vector<std::string> whitespace_tokens(std::string_view text);

}  // namespace amrseq

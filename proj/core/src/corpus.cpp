#include "amrseq/corpus.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "amrseq/penman.hpp"

namespace amrseq {

std::string strip_html(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '<') {
      std::size_t close = text.find('>', i + 1);
      if (close != std::string_view::npos) {
        i = close + 1;
        continue;
      }
    }
    cleaned += text[i++];
  }
  std::string out;
  out.reserve(cleaned.size());
  for (char c : cleaned) {
    if (c == ' ' && !out.empty() && out.back() == ' ') continue;
    out += c;
  }
  while (!out.empty() && out.front() == ' ') out.erase(out.begin());
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::vector<std::string> whitespace_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.emplace_back(text.substr(start, i - start));
  }
  return tokens;
}

std::vector<Block> split_blocks(std::string_view text) {
  std::vector<Block> blocks;
  std::string current;
  int line = 1, block_start = 1;
  bool in_block = false;

  auto flush = [&]() {
    if (in_block) blocks.push_back({current, block_start});
    current.clear();
    in_block = false;
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw =
        eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
    bool blank = raw.find_first_not_of(" \t\r") == std::string_view::npos;
    if (blank) {
      flush();
    } else {
      if (!in_block) {
        in_block = true;
        block_start = line;
      }
      current.append(raw);
      current += '\n';
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
    ++line;
  }
  flush();
  return blocks;
}

namespace {

// A metadata line may pack several "::key value" fields.
void parse_metadata_line(std::string_view line, Document& doc) {
  std::size_t pos = line.find("::");
  while (pos != std::string_view::npos) {
    std::size_t key_start = pos + 2;
    std::size_t key_end = key_start;
    while (key_end < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[key_end])))
      ++key_end;
    std::string key(line.substr(key_start, key_end - key_start));
    std::size_t next = line.find("::", key_end);
    std::size_t value_end = next == std::string_view::npos ? line.size() : next;
    std::string value(line.substr(key_end, value_end - key_end));
    while (!value.empty() && std::isspace(static_cast<unsigned char>(value.front())))
      value.erase(value.begin());
    while (!value.empty() && std::isspace(static_cast<unsigned char>(value.back())))
      value.pop_back();

    if (key == "id") {
      doc.id = value;
      doc.graph.meta.id = value;
    } else if (key == "snt") {
      doc.sentence = strip_html(value);
      doc.graph.meta.sentence = doc.sentence;
    } else if (key == "tok") {
      doc.graph.meta.tokens = whitespace_tokens(value);
    } else if (key == "alignments") {
      doc.graph.meta.alignments = value;
    } else {
      doc.graph.meta.extra.emplace_back(key, value);
    }
    pos = next;
  }
}

}  // namespace

Corpus parse_corpus(std::string_view text) {
  Corpus corpus;
  for (const Block& block : split_blocks(text)) {
    Document doc;
    std::string penman_text;
    std::istringstream lines{block.text};
    std::string line;
    while (std::getline(lines, line)) {
      if (line.rfind("# ::", 0) == 0) {
        parse_metadata_line(line, doc);
      } else if (!line.empty() && line[0] == '#') {
        continue;  // plain comment
      } else {
        penman_text += line;
        penman_text += '\n';
      }
    }
    if (penman_text.find_first_not_of(" \t\r\n") == std::string::npos) {
      corpus.errors.push_back({block.first_line, doc.id, "block has no Penman expression"});
      continue;
    }
    try {
      Metadata meta = doc.graph.meta;
      doc.graph = parse_penman(penman_text);
      doc.graph.meta = std::move(meta);
      corpus.documents.push_back(std::move(doc));
    } catch (const ParseError& err) {
      int line_no = err.line() > 0 ? block.first_line + err.line() - 1 : block.first_line;
      corpus.errors.push_back({line_no, doc.id, err.what()});
    }
  }
  return corpus;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
  out << content;
}

Corpus read_corpus(const std::string& path) {
  return parse_corpus(read_text_file(path));
}

void write_corpus(std::ostream& out, const std::vector<Document>& docs, bool indent) {
  bool first = true;
  for (const Document& doc : docs) {
    if (!first) out << '\n';
    first = false;
    if (!doc.id.empty()) out << "# ::id " << doc.id << '\n';
    if (!doc.sentence.empty()) out << "# ::snt " << doc.sentence << '\n';
    if (!doc.graph.meta.tokens.empty()) {
      out << "# ::tok";
      for (const std::string& tok : doc.graph.meta.tokens) out << ' ' << tok;
      out << '\n';
    }
    if (!doc.graph.meta.alignments.empty())
      out << "# ::alignments " << doc.graph.meta.alignments << '\n';
    for (const auto& [key, value] : doc.graph.meta.extra)
      out << "# ::" << key << ' ' << value << '\n';
    out << serialize_penman(doc.graph, indent) << '\n';
  }
}

void write_corpus(const std::string& path, const std::vector<Document>& docs, bool indent) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
  write_corpus(out, docs, indent);
}

}  // namespace amrseq

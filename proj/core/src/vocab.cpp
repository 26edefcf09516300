#include "amrseq/vocab.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "amrseq/codec.hpp"
#include "amrseq/errors.hpp"
#include "amrseq/seq_tree.hpp"

namespace amrseq {

namespace {

constexpr const char* kPad = "⟨pad⟩";
constexpr const char* kUnk = "⟨unk⟩";
constexpr const char* kEos = "⟨eos⟩";

// Length in bytes of the UTF-8 sequence starting with this byte.
int utf8_len(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) return 2;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return 4;
  return 1;  // stray continuation byte, treat as one unit
}

void collect_chars(std::string_view text, std::set<std::string>& chars) {
  std::size_t i = 0;
  while (i < text.size()) {
    int len = utf8_len(static_cast<unsigned char>(text[i]));
    if (i + len > text.size()) len = 1;
    chars.insert(std::string(text.substr(i, len)));
    i += len;
  }
}

void collect_relations(const SeqTree& tree, std::set<std::string>& relations) {
  for (const auto& child : tree.children) {
    relations.insert(":" + child.relation);
    collect_relations(child.subtree, relations);
  }
}

}  // namespace

int Vocab::id_of(std::string_view token) const {
  auto it = ids.find(token);
  return it == ids.end() ? -1 : it->second;
}

const std::string& Vocab::token_of(int id) const {
  if (id < 0 || id >= size()) {
    throw Error(ErrorKind::UnexpectedToken,
                "token id " + std::to_string(id) + " out of range");
  }
  return tokens[static_cast<std::size_t>(id)];
}

Vocab Vocab::from_tokens(std::vector<std::string> tokens) {
  Vocab vocab;
  vocab.tokens = std::move(tokens);
  for (std::size_t i = 0; i < vocab.tokens.size(); ++i) {
    if (vocab.tokens[i].empty()) {
      throw Error(ErrorKind::UnexpectedToken, "empty vocabulary token");
    }
    auto [it, inserted] =
        vocab.ids.emplace(vocab.tokens[i], static_cast<int>(i));
    if (!inserted) {
      throw Error(ErrorKind::UnexpectedToken,
                  "duplicate vocabulary token '" + vocab.tokens[i] + "'");
    }
  }
  return vocab;
}

std::string pos_token(std::string_view tag) {
  return "⟨" + std::string(tag) + "⟩";
}

Vocab build_vocab(const std::vector<Document>& docs,
                  const std::vector<std::string>& extra_pos_tags) {
  std::set<std::string> relations;
  std::set<std::string> chars;
  for (const auto& doc : docs) {
    collect_chars(doc.sentence, chars);
    SeqTree tree = anonymize(doc.graph);
    collect_relations(tree, relations);
    collect_chars(tree_to_text(tree), chars);
  }
  std::set<std::string> pos;
  for (const auto& tag : extra_pos_tags) pos.insert(pos_token(tag));

  std::vector<std::string> tokens = {kPad, kUnk, kEos};
  tokens.insert(tokens.end(), relations.begin(), relations.end());
  tokens.insert(tokens.end(), pos.begin(), pos.end());
  tokens.insert(tokens.end(), chars.begin(), chars.end());
  return Vocab::from_tokens(std::move(tokens));
}

TokenSeq encode(std::string_view text, const Vocab& vocab) {
  // Multi-character tokens, longest first, so the greedy scan prefers super
  // characters over their leading character.
  std::vector<const std::string*> multi;
  for (const auto& token : vocab.tokens) {
    if (token.size() > 1) multi.push_back(&token);
  }
  std::sort(multi.begin(), multi.end(),
            [](const std::string* a, const std::string* b) {
              return a->size() != b->size() ? a->size() > b->size() : *a < *b;
            });

  TokenSeq seq;
  seq.text = std::string(text);
  std::size_t i = 0;
  while (i < text.size()) {
    const std::string* best = nullptr;
    for (const std::string* token : multi) {
      if (text.substr(i, token->size()) == *token) {
        best = token;
        break;
      }
    }
    if (best != nullptr) {
      seq.ids.push_back(vocab.id_of(*best));
      i += best->size();
      continue;
    }
    int len = utf8_len(static_cast<unsigned char>(text[i]));
    if (i + len > text.size()) len = 1;
    int id = vocab.id_of(text.substr(i, static_cast<std::size_t>(len)));
    if (id < 0) {
      id = Vocab::unk_id;
      ++seq.unknown;
    }
    seq.ids.push_back(id);
    i += static_cast<std::size_t>(len);
  }
  return seq;
}

std::string decode(const std::vector<int>& ids, const Vocab& vocab) {
  std::string out;
  for (int id : ids) out += vocab.token_of(id);
  return out;
}

void save_vocab(const Vocab& vocab, const std::filesystem::path& path) {
  std::ostringstream out;
  for (const auto& token : vocab.tokens) out << token << '\n';
  write_text_file(path, out.str());
}

Vocab load_vocab(const std::filesystem::path& path) {
  std::istringstream in(read_text_file(path));
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) {
      throw ParseError(ErrorKind::UnexpectedToken, "empty vocabulary token",
                       static_cast<int>(tokens.size()) + 1);
    }
    tokens.push_back(line);
  }
  return Vocab::from_tokens(std::move(tokens));
}

std::string pos_annotate(
    std::string_view sentence,
    const std::vector<std::pair<std::string, std::string>>& tags) {
  std::vector<std::string> tokens = whitespace_tokens(sentence);
  if (tokens.size() != tags.size()) {
    throw Error(ErrorKind::TokenMismatch,
                "sentence has " + std::to_string(tokens.size()) +
                    " tokens but " + std::to_string(tags.size()) +
                    " tags were given");
  }
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] != tags[i].first) {
      throw Error(ErrorKind::TokenMismatch,
                  "token '" + tokens[i] + "' does not match tagged token '" +
                      tags[i].first + "'");
    }
    if (!out.empty()) out += ' ';
    out += tokens[i];
    out += ' ';
    out += pos_token(tags[i].second);
  }
  return out;
}

std::vector<std::vector<std::pair<std::string, std::string>>> read_pos_file(
    const std::filesystem::path& path) {
  std::istringstream in(read_text_file(path));
  std::vector<std::vector<std::pair<std::string, std::string>>> sentences;
  std::vector<std::pair<std::string, std::string>> current;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (!current.empty()) {
        sentences.push_back(std::move(current));
        current.clear();
      }
      continue;
    }
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
      throw ParseError(ErrorKind::UnexpectedToken,
                       "expected 'token<TAB>TAG'", line_no);
    }
    current.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  if (!current.empty()) sentences.push_back(std::move(current));
  return sentences;
}

}  // namespace amrseq

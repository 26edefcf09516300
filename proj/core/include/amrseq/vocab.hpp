#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "amrseq/corpus.hpp"

namespace amrseq {

// Character-level vocabulary with multi-character "super" tokens: relation
// labels (`:ARG0`), POS markers (`⟨NNP⟩`), and the specials pad/unk/eos at
// ids 0/1/2. Token order is deterministic: specials, then relations sorted,
// then POS markers sorted, then single characters sorted.
struct Vocab {
  static constexpr int pad_id = 0;
  static constexpr int unk_id = 1;
  static constexpr int eos_id = 2;

  std::vector<std::string> tokens;
  std::map<std::string, int, std::less<>> ids;

  int size() const { return static_cast<int>(tokens.size()); }
  // -1 when the token is absent.
  int id_of(std::string_view token) const;
  const std::string& token_of(int id) const;

  static Vocab from_tokens(std::vector<std::string> tokens);
};

struct TokenSeq {
  std::vector<int> ids;
  std::string text;   // the encoded input, kept for inspection
  int unknown = 0;    // characters replaced by the unk token
};

// Wraps a POS tag in angle-bracket markers, e.g. "NNP" → "⟨NNP⟩".
std::string pos_token(std::string_view tag);

// Collects every character of the sentences and serialized trees, every
// relation label of the anonymized trees, and one POS marker per extra tag.
Vocab build_vocab(const std::vector<Document>& docs,
                  const std::vector<std::string>& extra_pos_tags);

// Greedy longest-match tokenization; unknown characters become unk ids and
// are counted. decode concatenates token strings, so the pair round-trips
// exactly when every character of the text is in the vocabulary.
TokenSeq encode(std::string_view text, const Vocab& vocab);
std::string decode(const std::vector<int>& ids, const Vocab& vocab);

// One token per line; line number = id. Tokens are stored verbatim, so the
// space character is a legal single-character line.
void save_vocab(const Vocab& vocab, const std::filesystem::path& path);
Vocab load_vocab(const std::filesystem::path& path);

// Appends the matching POS marker after each sentence token:
// "Crk binds" + [(Crk,NNP),(binds,VBZ)] → "Crk ⟨NNP⟩ binds ⟨VBZ⟩".
std::string pos_annotate(
    std::string_view sentence,
    const std::vector<std::pair<std::string, std::string>>& tags);

// Reads `token<TAB>TAG` lines, one sentence per blank-line-separated block.
std::vector<std::vector<std::pair<std::string, std::string>>> read_pos_file(
    const std::filesystem::path& path);

}  // namespace amrseq

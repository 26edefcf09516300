#pragma once

// Internal tokenizer shared by the Penman reader and the seq-tree reader.

#include <cctype>
#include <string>
#include <string_view>

#include "amrseq/errors.hpp"

namespace amrseq::detail {

struct Token {
  enum class Type { LParen, RParen, Slash, Relation, Symbol, String, End };
  Type type = Type::End;
  std::string text;  // relation without colon, string without quotes
  int line = -1;
};

class Lexer {
 public:
  // slash_is_token: Penman mode, '/' separates variable and concept.
  // In seq-tree mode '/' is an ordinary symbol character.
  Lexer(std::string_view text, bool slash_is_token)
      : text_(text), slash_is_token_(slash_is_token) {
    advance();
  }

  const Token& peek() const { return current_; }

  Token next() {
    Token tok = current_;
    advance();
    return tok;
  }

 private:
  bool symbol_end(char c) const {
    return c == '(' || c == ')' || c == '"' || std::isspace(static_cast<unsigned char>(c)) ||
           (slash_is_token_ && c == '/');
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') ++line_;
      ++pos_;
    }
    current_.line = line_;
    if (pos_ >= text_.size()) {
      current_ = {Token::Type::End, "", line_};
      return;
    }
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      current_ = {Token::Type::LParen, "(", line_};
    } else if (c == ')') {
      ++pos_;
      current_ = {Token::Type::RParen, ")", line_};
    } else if (slash_is_token_ && c == '/') {
      ++pos_;
      current_ = {Token::Type::Slash, "/", line_};
    } else if (c == '"') {
      std::size_t end = text_.find('"', pos_ + 1);
      if (end == std::string_view::npos)
        throw ParseError(ErrorKind::UnexpectedToken, "unterminated string", line_);
      current_ = {Token::Type::String, std::string(text_.substr(pos_ + 1, end - pos_ - 1)), line_};
      pos_ = end + 1;
    } else {
      std::size_t start = pos_;
      while (pos_ < text_.size() && !symbol_end(text_[pos_])) ++pos_;
      std::string word(text_.substr(start, pos_ - start));
      if (word[0] == ':' && word.size() > 1) {
        current_ = {Token::Type::Relation, word.substr(1), line_};
      } else if (word == ":") {
        throw ParseError(ErrorKind::DanglingRelation, "empty relation label", line_);
      } else {
        current_ = {Token::Type::Symbol, std::move(word), line_};
      }
    }
  }

  std::string_view text_;
  bool slash_is_token_;
  std::size_t pos_ = 0;
  int line_ = 1;
  Token current_;
};

}  // namespace amrseq::detail

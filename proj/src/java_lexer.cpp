// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#include "changeprism/java_lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace changeprism::java {

namespace {

constexpr auto kKeywords = std::to_array<std::string_view>({
    "abstract", "assert",     "boolean",  "break",     "byte",      "case",         "catch",
    "char",     "class",      "const",    "continue",  "default",   "do",           "double",
    "else",     "enum",       "extends",  "final",     "finally",   "float",        "for",
    "goto",     "if",         "implements", "import",  "instanceof", "int",         "interface",
    "long",     "native",     "new",      "package",   "private",   "protected",    "public",
    "return",   "short",      "static",   "strictfp",  "super",     "switch",       "synchronized",
    "this",     "throw",      "throws",   "transient", "try",       "void",         "volatile",
    "while",    "_",
});

// Longest first so that greedy matching picks ">>=" before ">".
constexpr auto kOperators = std::to_array<std::string_view>({
    "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=", "+=", "-=",
    "*=",  "/=",  "&=", "|=", "^=", "%=", "<<", "(",  ")",  "{",  "}",  "[",  "]",
    ";",   ",",   ".",  "@",  "=",  "<",  "!",  "~",  "?",  ":",  "+",
});

constexpr std::string_view kSingleOperators = "-*/&|^%>";

bool is_ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80; }
bool is_ident_part(unsigned char c) { return std::isalnum(c) || c == '_' || c == '$' || c >= 0x80; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  LexResult run() {
    LexResult result;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (starts_with("//")) {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (starts_with("/*")) {
        const int start_line = line_;
        auto end = src_.find("*/", pos_ + 2);
        if (end == std::string_view::npos) {
          result.error = LexError{start_line, "unterminated block comment"};
          return result;
        }
        advance_to(end + 2);
      } else if (starts_with("\"\"\"")) {
        const int start_line = line_;
        auto end = src_.find("\"\"\"", pos_ + 3);
        while (end != std::string_view::npos && is_escaped(end)) end = src_.find("\"\"\"", end + 1);
        if (end == std::string_view::npos) {
          result.error = LexError{start_line, "unterminated text block"};
          return result;
        }
        push(result, TokenKind::Literal, end + 3, start_line);
      } else if (c == '"' || c == '\'') {
        const int start_line = line_;
        std::size_t i = pos_ + 1;
        while (i < src_.size() && src_[i] != c && src_[i] != '\n') i += src_[i] == '\\' ? 2 : 1;
        if (i >= src_.size() || src_[i] != c) {
          result.error = LexError{start_line, c == '"' ? "unterminated string literal"
                                                       : "unterminated character literal"};
          return result;
        }
        push(result, TokenKind::Literal, i + 1, start_line);
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '.' && pos_ + 1 < src_.size() &&
                  std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
        std::size_t i = pos_ + 1;
        while (i < src_.size()) {
          const auto d = static_cast<unsigned char>(src_[i]);
          if (std::isalnum(d) || d == '_' || d == '.') {
            ++i;
          } else if ((d == '+' || d == '-') && (src_[i - 1] == 'e' || src_[i - 1] == 'E' ||
                                               src_[i - 1] == 'p' || src_[i - 1] == 'P') &&
                     !(src_[pos_] == '0' && i > pos_ + 1 &&
                       (src_[pos_ + 1] == 'x' || src_[pos_ + 1] == 'X') &&
                       (src_[i - 1] == 'e' || src_[i - 1] == 'E'))) {
            ++i;
          } else {
            break;
          }
        }
        push(result, TokenKind::Literal, i, line_);
      } else if (is_ident_start(static_cast<unsigned char>(c))) {
        std::size_t i = pos_ + 1;
        while (i < src_.size() && is_ident_part(static_cast<unsigned char>(src_[i]))) ++i;
        const auto word = src_.substr(pos_, i - pos_);
        TokenKind kind = TokenKind::Identifier;
        if (word == "true" || word == "false" || word == "null") {
          kind = TokenKind::Literal;
        } else if (is_keyword(word)) {
          kind = TokenKind::Keyword;
        }
        push(result, kind, i, line_);
      } else {
        std::size_t length = 0;
        for (auto op : kOperators) {
          if (starts_with(op)) {
            length = op.size();
            break;
          }
        }
        if (length == 0 && kSingleOperators.find(c) != std::string_view::npos) length = 1;
        if (length == 0) {
          result.error = LexError{line_, std::string("unexpected character '") + c + "'"};
          return result;
        }
        push(result, TokenKind::Operator, pos_ + length, line_);
      }
    }
    return result;
  }

 private:
  bool starts_with(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

  bool is_escaped(std::size_t at) const {
    std::size_t backslashes = 0;
    while (at > backslashes && src_[at - 1 - backslashes] == '\\') ++backslashes;
    return backslashes % 2 == 1;
  }

  void advance_to(std::size_t end) {
    line_ += static_cast<int>(std::count(src_.begin() + pos_, src_.begin() + end, '\n'));
    pos_ = end;
  }

  void push(LexResult& result, TokenKind kind, std::size_t end, int start_line) {
    result.tokens.push_back({kind, std::string(src_.substr(pos_, end - pos_)), start_line});
    advance_to(end);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

}  // namespace

bool is_keyword(std::string_view word) noexcept {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

LexResult tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace changeprism::java

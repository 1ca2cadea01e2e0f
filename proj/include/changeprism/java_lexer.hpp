// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace changeprism::java {

enum class TokenKind { Identifier, Keyword, Literal, Operator };

struct Token {
  TokenKind kind = TokenKind::Operator;
  std::string text;
  int line = 1;

  bool is(std::string_view s) const noexcept { return text == s; }
};

struct LexError {
  int line = 1;
  std::string message;
};

struct LexResult {
  std::vector<Token> tokens;
  std::optional<LexError> error;
};

/// Splits Java source into tokens, dropping whitespace and comments. '>' is
/// always emitted as a single-character token so that nested generic
/// argument lists close one level per token.
LexResult tokenize(std::string_view source);

bool is_keyword(std::string_view word) noexcept;

}  // namespace changeprism::java

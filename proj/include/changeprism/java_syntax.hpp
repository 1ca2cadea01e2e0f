// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "changeprism/region.hpp"

namespace changeprism::java {

using TokenTexts = std::vector<std::string>;

/// A statement inside a method body. Only if-statements are distinguished;
/// everything else is Other, with nested statements (blocks, loop bodies,
/// try blocks) as children. The children of an if are the statements of its
/// then- and else-branches with enclosing braces removed.
struct Statement {
  enum class Kind { If, Other };

  Kind kind = Kind::Other;
  bool is_block = false;
  TokenTexts condition_tokens;
  LineRange condition_range{1, 0};
  LineRange range;
  TokenTexts tokens;
  std::vector<Statement> children;

  friend bool operator==(const Statement&, const Statement&) = default;
};

struct FieldDecl {
  std::string name;
  std::string declared_type;
  std::set<std::string> modifiers;
  TokenTexts initializer_tokens;
  LineRange range;
  int name_line = 1;

  friend bool operator==(const FieldDecl&, const FieldDecl&) = default;
};

struct MethodDecl {
  std::string name;
  std::vector<std::string> parameter_types;
  std::set<std::string> modifiers;
  std::vector<Statement> body_statements;
  TokenTexts body_tokens;
  LineRange range;
  int signature_line = 1;
  int name_line = 1;
  bool is_constructor = false;

  friend bool operator==(const MethodDecl&, const MethodDecl&) = default;
};

/// A class, interface, enum, record or annotation type. Nested types are
/// flattened into SyntaxTree::types under a dotted name ("Outer.Inner").
struct TypeDecl {
  std::string name;
  std::string kind;
  std::optional<std::string> extends_name;
  std::set<std::string> modifiers;
  std::vector<FieldDecl> fields;
  std::vector<MethodDecl> methods;
  TokenTexts body_tokens;
  LineRange range;
  int name_line = 1;

  std::string simple_name() const;
  bool is_nested() const { return name.find('.') != std::string::npos; }

  friend bool operator==(const TypeDecl&, const TypeDecl&) = default;
};

struct SyntaxTree {
  std::string package_name;
  std::vector<TypeDecl> types;

  friend bool operator==(const SyntaxTree&, const SyntaxTree&) = default;
};

struct ParseError {
  int line = 1;
  std::string message;
};

using ParseResult = std::variant<SyntaxTree, ParseError>;

/// Parses a reduced Java grammar: package, type declarations with extends
/// clauses, fields, methods with modifiers, and if-statement structure in
/// method bodies. Never throws on malformed input.
ParseResult parse_compilation_unit(std::string_view text);

/// Display form of a method key, e.g. "register(Class<?>, MessageHandler)".
std::string method_signature(const MethodDecl& method);

/// Identifier-like tokens (no keywords, literals or operators).
bool is_identifier_text(std::string_view text) noexcept;

}  // namespace changeprism::java

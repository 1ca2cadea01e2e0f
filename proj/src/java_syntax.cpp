// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#include "changeprism/java_syntax.hpp"

#include <algorithm>
#include <cctype>
#include <initializer_list>

#include "changeprism/java_lexer.hpp"

namespace changeprism::java {

namespace {

struct ParseFailure {
  int line;
  std::string message;
};

bool is_modifier_keyword(std::string_view text) {
  static constexpr std::string_view kModifiers[] = {
      "public", "protected", "private",  "static",    "final",    "abstract",
      "synchronized", "native", "transient", "volatile", "strictfp", "default",
  };
  return std::find(std::begin(kModifiers), std::end(kModifiers), text) != std::end(kModifiers);
}

bool is_primitive(std::string_view text) {
  static constexpr std::string_view kPrimitives[] = {
      "boolean", "byte", "char", "short", "int", "long", "float", "double", "void",
  };
  return std::find(std::begin(kPrimitives), std::end(kPrimitives), text) != std::end(kPrimitives);
}

bool word_like(const std::string& text) {
  return !text.empty() &&
         (std::isalnum(static_cast<unsigned char>(text.front())) || text.front() == '_' ||
          text.front() == '$' || text.front() == '?' ||
          static_cast<unsigned char>(text.front()) >= 0x80);
}

// "a.b.Base<T>" -> "Base"
std::string base_name(const std::string& type) {
  auto name = type.substr(0, type.find('<'));
  auto dot = name.rfind('.');
  return dot == std::string::npos ? name : name.substr(dot + 1);
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

  SyntaxTree parse_unit() {
    SyntaxTree tree;
    if (at("package")) {
      ++pos_;
      tree.package_name = parse_qualified_name();
      expect(";");
    }
    while (at("import")) {
      while (!eof() && !at(";")) ++pos_;
      expect(";");
    }
    while (!eof()) {
      if (at(";")) {
        ++pos_;
        continue;
      }
      int first_line = -1;
      auto modifiers = parse_modifiers(first_line);
      if (!at_type_declaration_start(pos_)) fail("expected a type declaration");
      parse_type_declaration("", std::move(modifiers), first_line, tree);
    }
    return tree;
  }

 private:
  // -- token access ---------------------------------------------------------

  bool eof() const { return pos_ >= toks_.size(); }

  bool at(std::string_view text, std::size_t ahead = 0) const {
    return pos_ + ahead < toks_.size() && toks_[pos_ + ahead].text == text;
  }

  bool at_identifier(std::size_t ahead = 0) const {
    return pos_ + ahead < toks_.size() && toks_[pos_ + ahead].kind == TokenKind::Identifier;
  }

  int line_of(std::size_t index) const {
    if (toks_.empty()) return 1;
    return toks_[std::min(index, toks_.size() - 1)].line;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseFailure{line_of(pos_), message};
  }

  const Token& next() {
    if (eof()) fail("unexpected end of input");
    return toks_[pos_++];
  }

  void expect(std::string_view text) {
    if (!at(text)) fail("expected '" + std::string(text) + "'");
    ++pos_;
  }

  const Token& expect_identifier(const char* what) {
    if (!at_identifier()) fail(std::string("expected ") + what);
    return toks_[pos_++];
  }

  TokenTexts texts(std::size_t begin, std::size_t end) const {
    TokenTexts out;
    out.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) out.push_back(toks_[i].text);
    return out;
  }

  // Consumes a balanced open...close group starting at the current token.
  void skip_balanced(std::string_view open, std::string_view close) {
    expect(open);
    int depth = 1;
    while (depth > 0) {
      if (eof()) fail("unbalanced '" + std::string(open) + "'");
      if (at(open)) ++depth;
      if (at(close)) --depth;
      ++pos_;
    }
  }

  // Advances to the first of `stops` at nesting depth zero. Generic
  // argument lists opened after a capitalized identifier also shield commas.
  void scan_until(std::initializer_list<std::string_view> stops) {
    int depth = 0;
    int angle = 0;
    while (!eof()) {
      const auto& text = toks_[pos_].text;
      if (depth == 0) {
        if (text == ";" && std::find(stops.begin(), stops.end(), text) != stops.end()) return;
        if (angle == 0 && std::find(stops.begin(), stops.end(), text) != stops.end()) return;
      }
      if (text == "(" || text == "[" || text == "{") {
        ++depth;
      } else if (text == ")" || text == "]" || text == "}") {
        if (depth == 0) fail("unbalanced '" + text + "'");
        --depth;
      } else if (depth == 0 && text == "<" && pos_ > 0 &&
                 toks_[pos_ - 1].kind == TokenKind::Identifier &&
                 std::isupper(static_cast<unsigned char>(toks_[pos_ - 1].text.front()))) {
        ++angle;
      } else if (depth == 0 && text == ">" && angle > 0) {
        --angle;
      }
      ++pos_;
    }
    fail("unexpected end of input");
  }

  // -- names, types, modifiers -----------------------------------------------

  std::string parse_qualified_name() {
    std::string name = expect_identifier("a name").text;
    while (at(".") && at_identifier(1)) {
      name += "." + toks_[pos_ + 1].text;
      pos_ += 2;
    }
    if (at(".") && at("*", 1)) {
      name += ".*";
      pos_ += 2;
    }
    return name;
  }

  bool at_annotation() const { return at("@") && !at("interface", 1); }

  void skip_annotation() {
    ++pos_;
    parse_qualified_name();
    if (at("(")) skip_balanced("(", ")");
  }

  std::set<std::string> parse_modifiers(int& first_line) {
    std::set<std::string> modifiers;
    auto mark = [&] {
      if (first_line < 0) first_line = toks_[pos_].line;
    };
    while (!eof()) {
      if (at_annotation()) {
        skip_annotation();
        continue;
      }
      const auto& token = toks_[pos_];
      if (token.kind == TokenKind::Keyword && is_modifier_keyword(token.text)) {
        mark();
        modifiers.insert(token.text);
        ++pos_;
      } else if (token.is("sealed") && pos_ + 1 < toks_.size() &&
                 (toks_[pos_ + 1].kind == TokenKind::Keyword)) {
        mark();
        modifiers.insert("sealed");
        ++pos_;
      } else if (token.is("non") && at("-", 1) && at("sealed", 2)) {
        mark();
        modifiers.insert("non-sealed");
        pos_ += 3;
      } else {
        break;
      }
    }
    return modifiers;
  }

  bool at_type_declaration_start(std::size_t index) const {
    if (index >= toks_.size()) return false;
    const auto& text = toks_[index].text;
    if (text == "class" || text == "interface" || text == "enum") return true;
    if (text == "@" && index + 1 < toks_.size() && toks_[index + 1].is("interface")) return true;
    return text == "record" && index + 2 < toks_.size() &&
           toks_[index + 1].kind == TokenKind::Identifier &&
           (toks_[index + 2].is("(") || toks_[index + 2].is("<"));
  }

  std::string type_arguments_text() {
    std::string out;
    int depth = 0;
    const Token* previous = nullptr;
    do {
      const auto& token = next();
      if (token.is("<")) ++depth;
      if (token.is(">")) --depth;
      if (previous && (previous->is(",") || (word_like(previous->text) && word_like(token.text)))) {
        out += ' ';
      }
      out += token.text;
      previous = &token;
    } while (depth > 0);
    return out;
  }

  std::string parse_type() {
    while (at_annotation()) skip_annotation();
    if (eof()) fail("expected a type");
    const auto& first = toks_[pos_];
    if (first.kind != TokenKind::Identifier && !is_primitive(first.text)) fail("expected a type");
    ++pos_;
    std::string out = first.text;
    while (true) {
      if (at("<")) {
        out += type_arguments_text();
      } else if (at(".") && at_identifier(1)) {
        out += "." + toks_[pos_ + 1].text;
        pos_ += 2;
      } else {
        break;
      }
    }
    while (at("[") && at("]", 1)) {
      out += "[]";
      pos_ += 2;
    }
    if (at("...")) {
      out += "...";
      ++pos_;
    }
    return out;
  }

  std::vector<std::string> parse_parameters() {
    expect("(");
    std::vector<std::string> types;
    if (at(")")) {
      ++pos_;
      return types;
    }
    while (true) {
      int ignored = -1;
      parse_modifiers(ignored);
      auto type = parse_type();
      if (at("this")) {
        ++pos_;  // receiver parameter
      } else {
        expect_identifier("a parameter name");
        while (at("[") && at("]", 1)) {
          type += "[]";
          pos_ += 2;
        }
        types.push_back(std::move(type));
      }
      if (at(",")) {
        ++pos_;
        continue;
      }
      expect(")");
      return types;
    }
  }

  // -- declarations ---------------------------------------------------------

  void parse_type_declaration(const std::string& outer, std::set<std::string> modifiers,
                              int first_line, SyntaxTree& tree) {
    const std::size_t index = tree.types.size();
    tree.types.emplace_back();

    TypeDecl type;
    type.modifiers = std::move(modifiers);
    if (first_line < 0) first_line = toks_[pos_].line;
    if (at("@")) {
      pos_ += 2;
      type.kind = "annotation";
    } else {
      type.kind = next().text;
    }
    const auto& name = expect_identifier("a type name");
    type.name = outer.empty() ? name.text : outer + "." + name.text;
    type.name_line = name.line;
    if (at("<")) type_arguments_text();
    if (type.kind == "record" && at("(")) skip_balanced("(", ")");
    while (!at("{")) {
      if (at("extends")) {
        ++pos_;
        auto base = parse_type();
        if (!type.extends_name) type.extends_name = base_name(base);
        while (at(",")) {
          ++pos_;
          parse_type();
        }
      } else if (at("implements") || at("permits")) {
        ++pos_;
        parse_type();
        while (at(",")) {
          ++pos_;
          parse_type();
        }
      } else {
        fail("unexpected token in declaration of " + type.name);
      }
    }

    expect("{");
    const std::size_t body_begin = pos_;
    if (type.kind == "enum") skip_enum_constants();
    while (!at("}")) {
      if (eof()) fail("unterminated body of " + type.name);
      parse_member(type, tree);
    }
    type.body_tokens = texts(body_begin, pos_);
    type.range = {first_line, toks_[pos_].line};
    ++pos_;
    tree.types[index] = std::move(type);
  }

  void skip_enum_constants() {
    while (!eof()) {
      if (at(";")) {
        ++pos_;
        return;
      }
      if (at("}")) return;
      if (at(",")) {
        ++pos_;
      } else if (at_annotation()) {
        skip_annotation();
      } else {
        expect_identifier("an enum constant");
        if (at("(")) skip_balanced("(", ")");
        if (at("{")) skip_balanced("{", "}");
      }
    }
    fail("unterminated enum body");
  }

  void parse_member(TypeDecl& type, SyntaxTree& tree) {
    if (at(";")) {
      ++pos_;
      return;
    }
    int first_line = -1;
    auto modifiers = parse_modifiers(first_line);
    if (at("{")) {
      skip_balanced("{", "}");  // initializer block
      return;
    }
    if (at_type_declaration_start(pos_)) {
      parse_type_declaration(type.name, std::move(modifiers), first_line, tree);
      return;
    }
    if (eof()) fail("unterminated body of " + type.name);
    if (first_line < 0) first_line = toks_[pos_].line;
    if (at("<")) type_arguments_text();

    std::string declared_type;
    const Token* name = nullptr;
    bool constructor = false;
    if (at_identifier() && at("(", 1)) {
      name = &next();
      constructor = true;
    } else {
      declared_type = parse_type();
      name = &expect_identifier("a member name");
    }

    if (at("(")) {
      MethodDecl method;
      method.name = name->text;
      method.name_line = name->line;
      method.is_constructor = constructor;
      method.modifiers = std::move(modifiers);
      method.parameter_types = parse_parameters();
      while (at("[") && at("]", 1)) pos_ += 2;
      if (at("throws")) {
        ++pos_;
        parse_type();
        while (at(",")) {
          ++pos_;
          parse_type();
        }
      }
      int end_line;
      if (at("{")) {
        const std::size_t body_begin = pos_ + 1;
        method.body_statements = parse_block_statements();
        method.body_tokens = texts(body_begin, pos_ - 1);
        end_line = line_of(pos_ - 1);
      } else {
        if (at("default")) scan_until({";"});
        if (!at(";")) fail("expected a method body or ';'");
        end_line = toks_[pos_].line;
        ++pos_;
      }
      method.range = {first_line, end_line};
      method.signature_line = first_line;
      type.methods.push_back(std::move(method));
      return;
    }

    if (constructor) fail("expected a member declaration");
    const std::size_t first_field = type.fields.size();
    while (true) {
      FieldDecl field;
      field.name = name->text;
      field.name_line = name->line;
      field.declared_type = declared_type;
      field.modifiers = modifiers;
      while (at("[") && at("]", 1)) {
        field.declared_type += "[]";
        pos_ += 2;
      }
      if (at("=")) {
        ++pos_;
        const std::size_t init_begin = pos_;
        scan_until({",", ";"});
        field.initializer_tokens = texts(init_begin, pos_);
      }
      type.fields.push_back(std::move(field));
      if (at(",")) {
        ++pos_;
        name = &expect_identifier("a field name");
        continue;
      }
      if (!at(";")) fail("expected ';' after field declaration");
      break;
    }
    const int end_line = toks_[pos_].line;
    ++pos_;
    for (std::size_t i = first_field; i < type.fields.size(); ++i) {
      type.fields[i].range = {first_line, end_line};
    }
  }

  // -- statements -----------------------------------------------------------

  std::vector<Statement> parse_block_statements() {
    expect("{");
    std::vector<Statement> statements;
    while (!at("}")) {
      if (eof()) fail("unterminated block");
      statements.push_back(parse_statement());
    }
    ++pos_;
    return statements;
  }

  static void append_branch(std::vector<Statement>& children, Statement&& statement) {
    if (statement.is_block) {
      for (auto& child : statement.children) children.push_back(std::move(child));
    } else {
      children.push_back(std::move(statement));
    }
  }

  Statement parse_block_statement() {
    if (!at("{")) fail("expected '{'");
    return parse_statement();
  }

  bool at_local_type_declaration() const {
    std::size_t probe = pos_;
    while (probe < toks_.size() &&
           (toks_[probe].is("final") || toks_[probe].is("abstract") || toks_[probe].is("static") ||
            toks_[probe].is("strictfp"))) {
      ++probe;
    }
    return at_type_declaration_start(probe);
  }

  Statement parse_statement() {
    if (eof()) fail("unexpected end of input");
    const std::size_t begin = pos_;
    Statement statement;
    auto finish = [&]() -> Statement {
      statement.range = {line_of(begin), line_of(pos_ - 1)};
      statement.tokens = texts(begin, pos_);
      return std::move(statement);
    };

    if (at("{")) {
      statement.is_block = true;
      statement.children = parse_block_statements();
      return finish();
    }
    if (at(";")) {
      ++pos_;
      return finish();
    }
    if (at("if")) {
      ++pos_;
      if (!at("(")) fail("expected '(' after 'if'");
      const std::size_t condition_begin = pos_ + 1;
      skip_balanced("(", ")");
      statement.kind = Statement::Kind::If;
      statement.condition_tokens = texts(condition_begin, pos_ - 1);
      statement.condition_range = {line_of(begin), line_of(pos_ - 1)};
      append_branch(statement.children, parse_statement());
      if (at("else")) {
        ++pos_;
        append_branch(statement.children, parse_statement());
      }
      return finish();
    }
    if (at("for") || at("while") || at("synchronized")) {
      ++pos_;
      if (!at("(")) fail("expected '('");
      skip_balanced("(", ")");
      append_branch(statement.children, parse_statement());
      return finish();
    }
    if (at("do")) {
      ++pos_;
      append_branch(statement.children, parse_statement());
      expect("while");
      if (!at("(")) fail("expected '('");
      skip_balanced("(", ")");
      expect(";");
      return finish();
    }
    if (at("try")) {
      ++pos_;
      if (at("(")) skip_balanced("(", ")");
      append_branch(statement.children, parse_block_statement());
      while (at("catch")) {
        ++pos_;
        if (!at("(")) fail("expected '('");
        skip_balanced("(", ")");
        append_branch(statement.children, parse_block_statement());
      }
      if (at("finally")) {
        ++pos_;
        append_branch(statement.children, parse_block_statement());
      }
      return finish();
    }
    if (at("switch")) {
      ++pos_;
      if (!at("(")) fail("expected '('");
      skip_balanced("(", ")");
      expect("{");
      while (!at("}")) {
        if (eof()) fail("unterminated switch");
        if (at("case") || (at("default") && (at(":", 1) || at("->", 1)))) {
          ++pos_;
          int depth = 0;
          while (!eof() && !(depth == 0 && (at(":") || at("->")))) {
            if (at("(")) ++depth;
            if (at(")")) --depth;
            ++pos_;
          }
          expect(at("->") ? "->" : ":");
          continue;
        }
        statement.children.push_back(parse_statement());
      }
      ++pos_;
      if (at(";")) ++pos_;
      return finish();
    }
    if (at("else")) fail("'else' without 'if'");
    if (at_identifier() && at(":", 1)) {
      pos_ += 2;
      append_branch(statement.children, parse_statement());
      return finish();
    }
    if (at_local_type_declaration()) {
      while (!at("{")) {
        if (eof()) fail("unexpected end of input");
        if (at("(")) {
          skip_balanced("(", ")");
        } else {
          ++pos_;
        }
      }
      skip_balanced("{", "}");
      return finish();
    }
    scan_until({";"});
    expect(";");
    return finish();
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string TypeDecl::simple_name() const {
  auto dot = name.rfind('.');
  return dot == std::string::npos ? name : name.substr(dot + 1);
}

ParseResult parse_compilation_unit(std::string_view text) {
  auto lexed = tokenize(text);
  if (lexed.error) return ParseError{lexed.error->line, lexed.error->message};
  try {
    return Parser(lexed.tokens).parse_unit();
  } catch (const ParseFailure& failure) {
    return ParseError{failure.line, failure.message};
  }
}

std::string method_signature(const MethodDecl& method) {
  std::string out = method.name + "(";
  for (std::size_t i = 0; i < method.parameter_types.size(); ++i) {
    if (i > 0) out += ", ";
    out += method.parameter_types[i];
  }
  return out + ")";
}

bool is_identifier_text(std::string_view text) noexcept {
  if (text.empty()) return false;
  const auto c = static_cast<unsigned char>(text.front());
  if (!(std::isalpha(c) || c == '_' || c == '$' || c >= 0x80)) return false;
  if (text == "true" || text == "false" || text == "null") return false;
  return !is_keyword(text);
}

}  // namespace changeprism::java

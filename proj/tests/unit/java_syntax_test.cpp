// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "changeprism/java_lexer.hpp"
#include "changeprism/java_syntax.hpp"
#include "test_support.hpp"

namespace changeprism::java {
namespace {

SyntaxTree parse_ok(std::string_view text) {
  auto result = parse_compilation_unit(text);
  if (auto* error = std::get_if<ParseError>(&result)) {
    ADD_FAILURE() << "line " << error->line << ": " << error->message;
    return {};
  }
  return std::get<SyntaxTree>(result);
}

TEST(JavaLexer, DropsCommentsAndSplitsShiftOperators) {
  auto result = tokenize("a >>= b; // tail\n/* block\n */ List<List<X>> c = \"s\\\"\";");
  ASSERT_FALSE(result.error);
  std::vector<std::string> texts;
  for (const auto& token : result.tokens) texts.push_back(token.text);
  EXPECT_EQ(texts, (std::vector<std::string>{"a", ">", ">", "=", "b", ";", "List", "<", "List", "<", "X",
                                             ">", ">", "c", "=", "\"s\\\"\"", ";"}));
  EXPECT_EQ(result.tokens[6].line, 3);
  EXPECT_EQ(result.tokens[15].kind, TokenKind::Literal);
}

TEST(JavaLexer, ReportsUnterminatedInput) {
  EXPECT_TRUE(tokenize("String s = \"open;\n").error);
  EXPECT_TRUE(tokenize("/* never closed").error);
}

TEST(JavaLexer, HandlesTextBlocksAndCharLiterals) {
  auto result = tokenize("String s = \"\"\"\n  hi \"there\"\n  \"\"\"; char c = '\\'';");
  ASSERT_FALSE(result.error);
  EXPECT_EQ(result.tokens.back().line, 3);
}

TEST(JavaSyntax, CaseStudyStructure) {
  auto tree = parse_ok(testing::read_fixture("case_study/ListenerFactory.pre.java"));
  EXPECT_EQ(tree.package_name, "com.example.events");
  ASSERT_EQ(tree.types.size(), 1u);
  const auto& type = tree.types[0];
  EXPECT_EQ(type.name, "ListenerFactory");
  EXPECT_EQ(type.kind, "class");
  EXPECT_EQ(type.range, (LineRange{13, 63}));
  ASSERT_EQ(type.fields.size(), 3u);
  EXPECT_EQ(type.fields[1].declared_type, "Map<Class<?>, List<MessageHandler>>");
  EXPECT_EQ(type.fields[2].name, "generatedListeners");
  EXPECT_EQ(type.fields[2].range, (LineRange{18, 18}));
  EXPECT_EQ(type.fields[2].modifiers, (std::set<std::string>{"private"}));

  ASSERT_EQ(type.methods.size(), 5u);
  EXPECT_TRUE(type.methods[0].is_constructor);
  const auto& get_all = type.methods[2];
  EXPECT_EQ(get_all.name, "getAll");
  EXPECT_EQ(get_all.range, (LineRange{32, 47}));
  EXPECT_EQ(get_all.signature_line, 32);
  const auto& register_method = type.methods[4];
  EXPECT_EQ(register_method.parameter_types, (std::vector<std::string>{"Class<?>", "MessageHandler"}));
  EXPECT_EQ(method_signature(register_method), "register(Class<?>, MessageHandler)");
  ASSERT_EQ(register_method.body_statements.size(), 4u);
  const auto& guard = register_method.body_statements[3];
  EXPECT_EQ(guard.kind, Statement::Kind::If);
  EXPECT_EQ(guard.range, (LineRange{59, 61}));
  EXPECT_EQ(guard.condition_range, (LineRange{59, 59}));
  EXPECT_EQ(guard.condition_tokens, (TokenTexts{"generatedListeners", "!=", "null"}));
  ASSERT_EQ(guard.children.size(), 1u);
  EXPECT_EQ(guard.children[0].range, (LineRange{60, 60}));
  EXPECT_EQ(guard.children[0].tokens, (TokenTexts{"getAll", "(", ")", ";"}));
}

TEST(JavaSyntax, BracelessIfKeepsBranchAsChild) {
  auto tree = parse_ok(testing::read_fixture("case_study/ListenerFactory.post.java"));
  const auto& get_all = tree.types[0].methods[2];
  EXPECT_EQ(get_all.modifiers, (std::set<std::string>{"public", "synchronized"}));
  const auto& first = get_all.body_statements.at(0);
  EXPECT_EQ(first.kind, Statement::Kind::If);
  EXPECT_EQ(first.range, (LineRange{35, 36}));
  ASSERT_EQ(first.children.size(), 1u);
  EXPECT_EQ(first.children[0].range, (LineRange{36, 36}));
}

TEST(JavaSyntax, NestedTypesAreFlattened) {
  auto tree = parse_ok(R"(package p;
public class Outer extends Base<String> {
    static class Inner implements Runnable {
        public void run() {}
    }
    enum Mode { ON, OFF; int weight() { return 1; } }
    interface Visitor { void visit(Outer o); }
    record Point(int x, int y) {}
    @Override
    public String toString() { return "o"; }
}
)");
  std::vector<std::string> names;
  for (const auto& type : tree.types) names.push_back(type.name);
  EXPECT_EQ(names, (std::vector<std::string>{"Outer", "Outer.Inner", "Outer.Mode", "Outer.Visitor", "Outer.Point"}));
  EXPECT_EQ(tree.types[0].extends_name, "Base");
  EXPECT_EQ(tree.types[1].simple_name(), "Inner");
  EXPECT_TRUE(tree.types[1].is_nested());
  ASSERT_EQ(tree.types[0].methods.size(), 1u);
  EXPECT_EQ(tree.types[0].methods[0].range, (LineRange{10, 10}));
  EXPECT_EQ(tree.types[2].methods.size(), 1u);
}

TEST(JavaSyntax, ElseIfChainsNest) {
  auto tree = parse_ok(R"(class A {
    int f(int x) {
        if (x > 0) {
            return 1;
        } else if (x < 0) {
            return -1;
        } else {
            return 0;
        }
    }
})");
  const auto& top = tree.types[0].methods[0].body_statements.at(0);
  EXPECT_EQ(top.kind, Statement::Kind::If);
  EXPECT_EQ(top.range, (LineRange{3, 9}));
  ASSERT_EQ(top.children.size(), 2u);
  EXPECT_EQ(top.children[1].kind, Statement::Kind::If);
  EXPECT_EQ(top.children[1].condition_tokens, (TokenTexts{"x", "<", "0"}));
}

TEST(JavaSyntax, LambdasGenericsAndAnonymousClassesParse) {
  auto tree = parse_ok(R"(import java.util.*;
abstract class Shapes<T extends Comparable<? super T>> {
    private static final int[] SIZES = {1, 2, 3};
    private final Runnable task = new Runnable() {
        public void run() { System.out.println("x"); }
    };
    protected abstract <R> R accept(java.util.function.Function<T, R> fn) throws Exception;
    public void sort(List<T> items) {
        items.sort((a, b) -> { return a.compareTo(b); });
        for (int i = 0, j = 1; i < 3; i++) { if (i > j) break; }
        switch (items.size()) { case 0: return; default: break; }
        try { accept(t -> t); } catch (Exception e) { throw new RuntimeException(e); } finally { }
        synchronized (this) { label: while (true) { break label; } }
    }
})");
  ASSERT_EQ(tree.types.size(), 1u);
  const auto& type = tree.types[0];
  ASSERT_EQ(type.fields.size(), 2u);
  EXPECT_EQ(type.fields[0].declared_type, "int[]");
  ASSERT_EQ(type.methods.size(), 2u);
  EXPECT_EQ(type.methods[0].parameter_types, (std::vector<std::string>{"java.util.function.Function<T, R>"}));
  EXPECT_TRUE(type.methods[0].body_statements.empty());
  EXPECT_EQ(type.methods[1].body_statements.size(), 5u);
}

TEST(JavaSyntax, MalformedInputYieldsParseError) {
  for (std::string_view text : {"class A { void f( { }", "class { }", "class A { int x = ; ", "}}}"}) {
    auto result = parse_compilation_unit(text);
    EXPECT_TRUE(std::holds_alternative<ParseError>(result)) << text;
  }
}

TEST(JavaSyntax, EmptyInputParsesToEmptyTree) {
  auto tree = parse_ok("");
  EXPECT_TRUE(tree.types.empty());
}

}  // namespace
}  // namespace changeprism::java

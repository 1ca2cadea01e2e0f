// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "changeprism/declaration_matching.hpp"
#include "changeprism/java_syntax.hpp"
#include "changeprism/line_diff.hpp"
#include "changeprism/microchange.hpp"
#include "test_support.hpp"

namespace changeprism {
namespace {

namespace names = microchange_names;

std::vector<MicroChange> detect(const std::string& pre_text, const std::string& post_text) {
  auto pre = std::get<java::SyntaxTree>(java::parse_compilation_unit(pre_text));
  auto post = std::get<java::SyntaxTree>(java::parse_compilation_unit(post_text));
  auto mapping = match_declarations(pre, post);
  auto hunks = line_diff(pre_text, post_text);
  return detect_microchanges(mapping, pre, post, hunks);
}

TEST(MicroChange, BuiltinRegistryOrder) {
  const auto rules = MicroChangeRegistry::builtin().rules();
  ASSERT_EQ(rules.size(), 3u);
  EXPECT_EQ(rules[0].name, names::kInsertConditionBlock);
  EXPECT_EQ(rules[1].name, names::kEncapsulateInCondition);
  EXPECT_EQ(rules[2].name, names::kExtractFromCondition);
}

TEST(MicroChange, CaseStudyFindings) {
  auto found = detect(testing::read_fixture("case_study/ListenerFactory.pre.java"),
                      testing::read_fixture("case_study/ListenerFactory.post.java"));
  ASSERT_EQ(found.size(), 3u);
  EXPECT_EQ(found[0].name, names::kInsertConditionBlock);
  EXPECT_EQ(found[0].side, Side::Post);
  EXPECT_EQ(found[0].region, (LineRange{35, 36}));
  EXPECT_EQ(found[0].description,
            "Insert Condition Block if (generatedListeners != null) in method getAll()");
  EXPECT_EQ(found[1].name, names::kEncapsulateInCondition);
  EXPECT_EQ(found[1].region, (LineRange{35, 35}));
  EXPECT_EQ(found[2].name, names::kExtractFromCondition);
  EXPECT_EQ(found[2].side, Side::Pre);
  EXPECT_EQ(found[2].region, (LineRange{60, 60}));
  EXPECT_EQ(found[2].description,
            "Extract From Condition getAll(); from if (generatedListeners != null) in method "
            "register(Class<?>, MessageHandler)");
}

TEST(MicroChange, GuardOnFreshIdentifierIsNotEncapsulation) {
  auto found = detect("class A {\n  void f(int x) {\n    run(x);\n  }\n}\n",
                      "class A {\n  void f(int x) {\n    if (enabled())\n      log();\n    run(x);\n  }\n}\n");
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].name, names::kInsertConditionBlock);
  EXPECT_EQ(found[0].region, (LineRange{3, 4}));
}

TEST(MicroChange, UnchangedConditionIsIgnored) {
  auto found = detect("class A {\n  void f(int x) {\n    if (x > 0) {\n      run(x);\n    }\n  }\n}\n",
                      "class A {\n  void f(int x) {\n    if (x > 0) {\n      run(x + 1);\n    }\n  }\n}\n");
  EXPECT_TRUE(found.empty());
}

TEST(MicroChange, RewrappedConditionWithSameTokensIsNotInserted) {
  auto found = detect("class A {\n  void f(int x) {\n    if (x > 0) run(x);\n  }\n}\n",
                      "class A {\n  void f(int x) {\n    if (x > 0) {\n      run(x);\n    }\n  }\n}\n");
  for (const auto& change : found) EXPECT_NE(change.name, names::kInsertConditionBlock);
}

TEST(MicroChange, ExtractFromNestedConditionReportsOutermostStatementOnly) {
  auto found = detect(
      "class A {\n  void f(int x) {\n    if (x > 0) {\n      if (x > 1) {\n        go();\n      }\n    }\n  }\n}\n",
      "class A {\n  void f(int x) {\n    go();\n  }\n}\n");
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].name, names::kExtractFromCondition);
  EXPECT_EQ(found[0].region, (LineRange{5, 5}));
  EXPECT_NE(found[0].description.find("if (x > 1)"), std::string::npos);
}

TEST(MicroChange, StatementsInUnchangedConditionsAreNotExtracted) {
  auto found = detect("class A {\n  void f(int x) {\n    if (x > 0) {\n      go();\n    }\n    stop();\n  }\n}\n",
                      "class A {\n  void f(int x) {\n    if (x > 0) {\n      go();\n    }\n    go();\n  }\n}\n");
  EXPECT_TRUE(found.empty());
}

}  // namespace
}  // namespace changeprism

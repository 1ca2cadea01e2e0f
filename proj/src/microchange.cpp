// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#include "changeprism/microchange.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_map>

namespace changeprism {

using java::MethodDecl;
using java::Statement;
using java::TokenTexts;

namespace names = microchange_names;

void MicroChangeRegistry::add(MicroChangeRule rule) { rules_.push_back(std::move(rule)); }

std::vector<MicroChange> MicroChangeRegistry::detect(const MicroChangeContext& context) const {
  std::vector<MicroChange> out;
  for (const auto& rule : rules_) {
    for (auto& finding : rule.detect(context)) {
      finding.name = rule.name;
      out.push_back(std::move(finding));
    }
  }
  return out;
}

namespace {

bool word_like(const std::string& token) {
  return !token.empty() && (std::isalnum(static_cast<unsigned char>(token.front())) ||
                            token.front() == '_' || token.front() == '$' || token.front() == '"');
}

std::string render(const TokenTexts& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& token = tokens[i];
    if (i > 0) {
      const auto& prev = tokens[i - 1];
      const bool glue_left = token == ")" || token == "]" || token == "." || token == "," ||
                             token == ";" || (token == "(" && word_like(prev)) || token == "[";
      const bool glue_right = prev == "(" || prev == "[" || prev == "." || prev == "!";
      if (!glue_left && !glue_right) out += ' ';
    }
    out += token;
  }
  return out;
}

bool covered(const LineRange& range, std::span<const Hunk> hunks, Side side) {
  for (int line = range.start; line <= range.end; ++line) {
    bool hit = false;
    for (const auto& hunk : hunks) {
      if ((side == Side::Pre ? hunk.pre : hunk.post).contains(line)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return !range.empty();
}

void collect_ifs(const std::vector<Statement>& statements, std::vector<const Statement*>& out) {
  for (const auto& statement : statements) {
    if (statement.kind == Statement::Kind::If) out.push_back(&statement);
    collect_ifs(statement.children, out);
  }
}

std::vector<const Statement*> ifs_of(const MethodDecl& method) {
  std::vector<const Statement*> out;
  collect_ifs(method.body_statements, out);
  return out;
}

struct MethodView {
  const MethodDecl* pre;
  const MethodDecl* post;
};

std::vector<MethodView> paired_methods(const MicroChangeContext& ctx) {
  std::vector<MethodView> out;
  for (const auto& pair : ctx.mapping.method_pairs) {
    out.push_back({&ctx.pre.types[pair.pre_type].methods[pair.pre],
                   &ctx.post.types[pair.post_type].methods[pair.post]});
  }
  return out;
}

struct InsertedCondition {
  MethodView method;
  const Statement* statement;
};

// Post if-statements lying entirely in inserted or changed lines whose
// condition has no counterpart among the ifs of the paired pre method.
std::vector<InsertedCondition> inserted_conditions(const MicroChangeContext& ctx) {
  std::vector<InsertedCondition> out;
  for (const auto& view : paired_methods(ctx)) {
    std::set<TokenTexts> pre_conditions;
    for (const auto* statement : ifs_of(*view.pre)) pre_conditions.insert(statement->condition_tokens);
    for (const auto* statement : ifs_of(*view.post)) {
      if (!covered(statement->range, ctx.hunks, Side::Post)) continue;
      if (pre_conditions.count(statement->condition_tokens) != 0) continue;
      out.push_back({view, statement});
    }
  }
  return out;
}

std::vector<MicroChange> insert_condition_block(const MicroChangeContext& ctx) {
  std::vector<MicroChange> out;
  for (const auto& found : inserted_conditions(ctx)) {
    MicroChange change;
    change.side = Side::Post;
    change.region = found.statement->range;
    change.description = "Insert Condition Block if (" + render(found.statement->condition_tokens) +
                         ") in method " + java::method_signature(*found.method.post);
    out.push_back(std::move(change));
  }
  return out;
}

void collect_conditions(const std::vector<Statement>& statements,
                        std::unordered_map<std::string, int>& counts) {
  for (const auto& statement : statements) {
    for (const auto& token : statement.condition_tokens) ++counts[token];
    collect_conditions(statement.children, counts);
  }
}

// Identifiers that occur in the method body outside every if condition.
std::set<std::string> identifiers_outside_conditions(const MethodDecl& method) {
  std::unordered_map<std::string, int> in_conditions;
  collect_conditions(method.body_statements, in_conditions);
  std::unordered_map<std::string, int> totals;
  for (const auto& token : method.body_tokens) {
    if (java::is_identifier_text(token)) ++totals[token];
  }
  std::set<std::string> out;
  for (const auto& [token, count] : totals) {
    auto it = in_conditions.find(token);
    if (count > (it == in_conditions.end() ? 0 : it->second)) out.insert(token);
  }
  return out;
}

std::vector<MicroChange> encapsulate_in_condition(const MicroChangeContext& ctx) {
  std::vector<MicroChange> out;
  for (const auto& found : inserted_conditions(ctx)) {
    const auto outside = identifiers_outside_conditions(*found.method.pre);
    std::vector<std::string> shared;
    for (const auto& token : found.statement->condition_tokens) {
      if (java::is_identifier_text(token) && outside.count(token) != 0 &&
          std::find(shared.begin(), shared.end(), token) == shared.end()) {
        shared.push_back(token);
      }
    }
    if (shared.empty()) continue;
    MicroChange change;
    change.side = Side::Post;
    change.region = found.statement->condition_range;
    std::string what;
    for (const auto& token : shared) what += (what.empty() ? "" : ", ") + token;
    change.description = "Encapsulate In Condition " + what + " into if (" +
                         render(found.statement->condition_tokens) + ") in method " +
                         java::method_signature(*found.method.post);
    out.push_back(std::move(change));
  }
  return out;
}

// Token sequences of post statements not nested in any if.
void collect_unconditional(const std::vector<Statement>& statements, std::set<TokenTexts>& out) {
  for (const auto& statement : statements) {
    if (!statement.is_block) out.insert(statement.tokens);
    if (statement.kind != Statement::Kind::If) collect_unconditional(statement.children, out);
  }
}

void find_extracted(const std::vector<Statement>& statements, const Statement* enclosing_if,
                    const std::set<TokenTexts>& unconditional, std::span<const Hunk> hunks,
                    const MethodDecl& method, std::vector<MicroChange>& out) {
  for (const auto& statement : statements) {
    if (enclosing_if && !statement.is_block && covered(statement.range, hunks, Side::Pre) &&
        unconditional.count(statement.tokens) != 0) {
      MicroChange change;
      change.side = Side::Pre;
      change.region = statement.range;
      change.description = "Extract From Condition " + render(statement.tokens) + " from if (" +
                           render(enclosing_if->condition_tokens) + ") in method " +
                           java::method_signature(method);
      out.push_back(std::move(change));
      continue;
    }
    const Statement* next_if = statement.kind == Statement::Kind::If ? &statement : enclosing_if;
    find_extracted(statement.children, next_if, unconditional, hunks, method, out);
  }
}

std::vector<MicroChange> extract_from_condition(const MicroChangeContext& ctx) {
  std::vector<MicroChange> out;
  for (const auto& view : paired_methods(ctx)) {
    std::set<TokenTexts> unconditional;
    collect_unconditional(view.post->body_statements, unconditional);
    find_extracted(view.pre->body_statements, nullptr, unconditional, ctx.hunks, *view.pre, out);
  }
  return out;
}

MicroChangeRegistry make_builtin() {
  MicroChangeRegistry registry;
  registry.add({std::string(names::kInsertConditionBlock), insert_condition_block});
  registry.add({std::string(names::kEncapsulateInCondition), encapsulate_in_condition});
  registry.add({std::string(names::kExtractFromCondition), extract_from_condition});
  return registry;
}

}  // namespace

const MicroChangeRegistry& MicroChangeRegistry::builtin() {
  static const MicroChangeRegistry registry = make_builtin();
  return registry;
}

std::vector<MicroChange> detect_microchanges(const DeclarationMapping& mapping,
                                             const java::SyntaxTree& pre,
                                             const java::SyntaxTree& post,
                                             std::span<const Hunk> hunks) {
  return MicroChangeRegistry::builtin().detect({mapping, pre, post, hunks});
}

}  // namespace changeprism

// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "changeprism/declaration_matching.hpp"
#include "changeprism/java_syntax.hpp"
#include "changeprism/line_diff.hpp"

namespace changeprism {

namespace microchange_names {
inline constexpr std::string_view kInsertConditionBlock = "Insert Condition Block";
inline constexpr std::string_view kEncapsulateInCondition = "Encapsulate In Condition";
inline constexpr std::string_view kExtractFromCondition = "Extract From Condition";
}  // namespace microchange_names

struct MicroChange {
  std::string name;
  Side side = Side::Post;
  LineRange region;
  std::string description;

  friend bool operator==(const MicroChange&, const MicroChange&) = default;
};

struct MicroChangeContext {
  const DeclarationMapping& mapping;
  const java::SyntaxTree& pre;
  const java::SyntaxTree& post;
  std::span<const Hunk> hunks;
};

struct MicroChangeRule {
  std::string name;
  std::function<std::vector<MicroChange>(const MicroChangeContext&)> detect;
};

class MicroChangeRegistry {
 public:
  void add(MicroChangeRule rule);
  std::span<const MicroChangeRule> rules() const noexcept { return rules_; }
  std::vector<MicroChange> detect(const MicroChangeContext& context) const;

  /// Insert Condition Block, Encapsulate In Condition, Extract From
  /// Condition.
  static const MicroChangeRegistry& builtin();

 private:
  std::vector<MicroChangeRule> rules_;
};

std::vector<MicroChange> detect_microchanges(const DeclarationMapping& mapping,
                                             const java::SyntaxTree& pre,
                                             const java::SyntaxTree& post,
                                             std::span<const Hunk> hunks);

}  // namespace changeprism

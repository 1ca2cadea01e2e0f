// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "changeprism/change_type.hpp"
#include "changeprism/commit.hpp"
#include "changeprism/declaration_matching.hpp"
#include "changeprism/java_syntax.hpp"

namespace changeprism {

namespace refactoring_names {
inline constexpr std::string_view kMoveClass = "Move Class";
inline constexpr std::string_view kExtractSuperclass = "Extract Superclass";
inline constexpr std::string_view kAddMethodModifier = "Add Method Modifier";
inline constexpr std::string_view kAddAttributeModifier = "Add Attribute Modifier";
inline constexpr std::string_view kRenameAttribute = "Rename Attribute";
}  // namespace refactoring_names

struct Refactoring {
  std::string name;
  RefactoringLevel level = RefactoringLevel::Statement;
  std::vector<LineRange> pre_regions;
  std::vector<LineRange> post_regions;
  std::string description;

  friend bool operator==(const Refactoring&, const Refactoring&) = default;
};

/// Level of the natively detected refactoring types.
std::optional<RefactoringLevel> builtin_refactoring_level(std::string_view name);

struct RefactoringContext {
  const DeclarationMapping& mapping;
  const java::SyntaxTree& pre;
  const java::SyntaxTree& post;
  const FileChange& file;
};

/// A detection rule. detect returns findings with regions and description;
/// the registry stamps name and level on each of them.
struct RefactoringRule {
  std::string name;
  RefactoringLevel level = RefactoringLevel::Statement;
  std::function<std::vector<Refactoring>(const RefactoringContext&)> detect;
};

class RefactoringRegistry {
 public:
  void add(RefactoringRule rule);
  std::span<const RefactoringRule> rules() const noexcept { return rules_; }

  /// Runs every rule in registration order.
  std::vector<Refactoring> detect(const RefactoringContext& context) const;

  /// The five shipped rules, in order: Add Method Modifier, Add Attribute
  /// Modifier, Rename Attribute, Move Class, Extract Superclass.
  static const RefactoringRegistry& builtin();

 private:
  std::vector<RefactoringRule> rules_;
};

std::vector<Refactoring> detect_refactorings(const DeclarationMapping& mapping,
                                             const java::SyntaxTree& pre,
                                             const java::SyntaxTree& post,
                                             const FileChange& file_change);

/// One parsed file of a commit as seen by the commit-level pass.
struct ParsedFile {
  const FileChange* change = nullptr;
  const java::SyntaxTree* pre = nullptr;
  const java::SyntaxTree* post = nullptr;
  const DeclarationMapping* mapping = nullptr;
};

/// A finding whose pre regions belong to files[pre_file] and post regions
/// to files[post_file].
struct LocatedRefactoring {
  Refactoring refactoring;
  std::size_t pre_file = 0;
  std::size_t post_file = 0;
};

/// Findings that span two files: Move Class between a deleted and an added
/// file, and Extract Superclass whose new superclass lives in another file.
std::vector<LocatedRefactoring> detect_cross_file_refactorings(std::span<const ParsedFile> files);

}  // namespace changeprism

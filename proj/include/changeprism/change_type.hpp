// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace changeprism {

/// The seven change categories. The enumerator value is the layer order:
/// layers with a larger order are painted above layers with a smaller one.
enum class ChangeType : std::uint8_t {
  ClassRefactoring = 1,
  MethodRefactoring = 2,
  Modification = 3,
  Addition = 4,
  Removal = 5,
  StatementRefactoring = 6,
  MicroChange = 7,
};

inline constexpr std::array<ChangeType, 7> kAllChangeTypes{
    ChangeType::ClassRefactoring, ChangeType::MethodRefactoring, ChangeType::Modification,
    ChangeType::Addition,         ChangeType::Removal,           ChangeType::StatementRefactoring,
    ChangeType::MicroChange,
};

constexpr int layer_order(ChangeType type) noexcept { return static_cast<int>(type); }

/// Stable wire key, e.g. "method_refactoring".
std::string_view type_key(ChangeType type) noexcept;

/// Display color as "#RRGGBB".
std::string_view color_key(ChangeType type) noexcept;

std::optional<ChangeType> parse_type_key(std::string_view key) noexcept;

enum class RefactoringLevel { Class, Method, Statement };

std::string_view level_name(RefactoringLevel level) noexcept;
std::optional<RefactoringLevel> parse_level_name(std::string_view name) noexcept;

constexpr ChangeType change_type_for(RefactoringLevel level) noexcept {
  switch (level) {
    case RefactoringLevel::Class:
      return ChangeType::ClassRefactoring;
    case RefactoringLevel::Method:
      return ChangeType::MethodRefactoring;
    case RefactoringLevel::Statement:
      break;
  }
  return ChangeType::StatementRefactoring;
}

/// A set of change types, used for the per-type visibility filters.
class TypeSet {
 public:
  constexpr TypeSet() = default;

  static TypeSet all() noexcept;
  static TypeSet of(std::initializer_list<ChangeType> types) noexcept;

  void insert(ChangeType type) noexcept { bits_.set(layer_order(type)); }
  void erase(ChangeType type) noexcept { bits_.reset(layer_order(type)); }
  bool contains(ChangeType type) const noexcept { return bits_.test(layer_order(type)); }
  bool empty() const noexcept { return bits_.none(); }
  std::size_t size() const noexcept { return bits_.count(); }

  /// Members in layer order.
  std::vector<ChangeType> members() const;

  friend bool operator==(const TypeSet&, const TypeSet&) = default;

 private:
  std::bitset<8> bits_;
};

/// Parses wire keys into a set; throws Error(UnknownTypeKey) on the first
/// key that is not one of the seven.
TypeSet parse_type_keys(std::span<const std::string> keys);

}  // namespace changeprism

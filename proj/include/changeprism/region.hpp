// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "changeprism/change_type.hpp"

namespace changeprism {

/// 1-based inclusive line range. A range with end == start - 1 is empty and
/// marks a position between lines (start is the line that follows it).
struct LineRange {
  int start = 1;
  int end = 0;

  static constexpr LineRange empty_at(int position) noexcept { return {position, position - 1}; }

  constexpr bool empty() const noexcept { return end < start; }
  constexpr int size() const noexcept { return empty() ? 0 : end - start + 1; }
  constexpr bool contains(int line) const noexcept { return line >= start && line <= end; }
  constexpr bool contains(const LineRange& other) const noexcept {
    return other.empty() || (other.start >= start && other.end <= end);
  }

  friend constexpr bool operator==(const LineRange&, const LineRange&) = default;
};

enum class Side { Pre, Post };

std::string_view side_name(Side side) noexcept;
std::optional<Side> parse_side(std::string_view name) noexcept;

/// One classified change on one side of a file.
struct ChangeRegion {
  Side side = Side::Post;
  int start_line = 1;
  int end_line = 1;
  ChangeType change_type = ChangeType::Modification;
  std::vector<std::string> labels;

  LineRange range() const noexcept { return {start_line, end_line}; }

  friend bool operator==(const ChangeRegion&, const ChangeRegion&) = default;
};

/// Canonical region order: side, start line, type key, labels, end line.
bool region_less(const ChangeRegion& a, const ChangeRegion& b);

/// Sorts regions canonically and folds regions that share side, range and
/// type into one whose labels are the sorted union.
void canonicalize_regions(std::vector<ChangeRegion>& regions);

}  // namespace changeprism

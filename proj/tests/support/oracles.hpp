// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "changeprism/line_diff.hpp"
#include "changeprism/spectrum.hpp"

namespace changeprism::testing {

/// Longest common subsequence length by the quadratic table.
inline int lcs_length(std::span<const std::string> a, std::span<const std::string> b) {
  std::vector<std::vector<int>> table(a.size() + 1, std::vector<int>(b.size() + 1, 0));
  for (std::size_t i = a.size(); i-- > 0;) {
    for (std::size_t j = b.size(); j-- > 0;) {
      table[i][j] = a[i] == b[j] ? table[i + 1][j + 1] + 1 : std::max(table[i + 1][j], table[i][j + 1]);
    }
  }
  return table[0][0];
}

/// Checks that the hunks describe a valid alignment of a onto b: ranges are
/// ordered, every line outside the hunks pairs with an equal line, and the
/// coalescing contract holds (no two hunks touch). Returns an empty string
/// when valid, otherwise a description of the first violation.
inline std::string check_alignment(std::span<const std::string> a, std::span<const std::string> b,
                                   std::span<const Hunk> hunks) {
  int i = 1;
  int j = 1;
  for (std::size_t h = 0; h < hunks.size(); ++h) {
    const auto& hunk = hunks[h];
    if (hunk.pre.start < i || hunk.post.start < j) return "hunk " + std::to_string(h) + " out of order";
    if (hunk.pre.start - i != hunk.post.start - j) return "unequal gap before hunk " + std::to_string(h);
    if (h > 0 && hunk.pre.start == i && hunk.post.start == j) return "adjacent hunks not coalesced";
    for (; i < hunk.pre.start; ++i, ++j) {
      if (a[i - 1] != b[j - 1]) return "unequal kept lines " + std::to_string(i) + "/" + std::to_string(j);
    }
    const bool kind_ok = (hunk.kind == HunkKind::Insert && hunk.pre.empty() && !hunk.post.empty()) ||
                         (hunk.kind == HunkKind::Delete && !hunk.pre.empty() && hunk.post.empty()) ||
                         (hunk.kind == HunkKind::Change && !hunk.pre.empty() && !hunk.post.empty());
    if (!kind_ok) return "hunk " + std::to_string(h) + " kind mismatch";
    i = hunk.pre.end + 1;
    j = hunk.post.end + 1;
  }
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  if (n - i != m - j) return "unequal tail";
  for (; i <= n; ++i, ++j) {
    if (a[i - 1] != b[j - 1]) return "unequal tail lines";
  }
  return {};
}

/// Random text over a small alphabet, one symbol per line.
inline std::vector<std::string> random_lines(std::mt19937_64& rng, int max_lines, int alphabet) {
  std::uniform_int_distribution<int> length(0, max_lines);
  std::uniform_int_distribution<int> symbol(0, alphabet - 1);
  std::vector<std::string> lines(static_cast<std::size_t>(length(rng)));
  for (auto& line : lines) line = std::string(1, static_cast<char>('a' + symbol(rng)));
  return lines;
}

inline std::string join_lines(std::span<const std::string> lines) {
  std::string out;
  for (const auto& line : lines) out += line + "\n";
  return out;
}

/// Per-line visible type computed straight from the regions.
inline std::vector<std::optional<ChangeType>> brute_force_visible(std::span<const ChangeRegion> regions,
                                                                  const TypeSet& enabled, Side side,
                                                                  int line_count) {
  std::vector<std::optional<ChangeType>> out(static_cast<std::size_t>(line_count));
  for (int line = 1; line <= line_count; ++line) {
    for (const auto& region : regions) {
      if (region.side != side || !enabled.contains(region.change_type)) continue;
      if (line < region.start_line || line > region.end_line) continue;
      auto& slot = out[static_cast<std::size_t>(line - 1)];
      if (!slot || layer_order(region.change_type) > layer_order(*slot)) slot = region.change_type;
    }
  }
  return out;
}

}  // namespace changeprism::testing

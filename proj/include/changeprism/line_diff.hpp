// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "changeprism/region.hpp"

namespace changeprism {

enum class HunkKind { Insert, Delete, Change };

/// A contiguous run of differing lines. An insert has an empty pre range
/// anchored at the pre line it precedes; a delete has an empty post range
/// anchored the same way.
struct Hunk {
  HunkKind kind = HunkKind::Change;
  LineRange pre;
  LineRange post;

  friend bool operator==(const Hunk&, const Hunk&) = default;
};

/// Line diff realizing a minimal (longest common subsequence) alignment.
/// Lines are compared by exact string equality after CRLF normalization;
/// adjacent deletions and insertions coalesce into one Change hunk.
std::vector<Hunk> line_diff(std::string_view text_pre, std::string_view text_post);

/// Same as line_diff over already-split lines.
std::vector<Hunk> diff_lines(std::span<const std::string_view> pre,
                             std::span<const std::string_view> post);

/// Number of deleted plus inserted lines implied by the hunks.
int edit_size(std::span<const Hunk> hunks) noexcept;

/// Maps hunks to textual regions: insert -> addition (post), delete ->
/// removal (pre), change -> modification on both sides. Throws
/// Error(MalformedHunks) if a hunk is inconsistent with its kind or the
/// hunks overlap or are out of order.
std::vector<ChangeRegion> classify(std::span<const Hunk> hunks);

/// Per-line flags (index 0 is line 1) marking lines covered by a hunk on
/// the given side.
std::vector<bool> changed_lines(std::span<const Hunk> hunks, Side side, int line_count);

}  // namespace changeprism

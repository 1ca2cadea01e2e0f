// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

// Myers' O(ND) greedy algorithm. Common prefix and suffix are stripped
// first; for each edit distance d only the diagonals -d..d are recorded,
// so the trace costs O(D^2) memory.

#include "changeprism/line_diff.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "changeprism/error.hpp"
#include "changeprism/text.hpp"

namespace changeprism {

namespace {

enum class Op : unsigned char { Equal, Delete, Insert };

std::vector<int> intern(std::span<const std::string_view> lines,
                        std::unordered_map<std::string_view, int>& ids) {
  std::vector<int> out;
  out.reserve(lines.size());
  for (auto line : lines) {
    auto [it, inserted] = ids.try_emplace(line, static_cast<int>(ids.size()));
    out.push_back(it->second);
  }
  return out;
}

// Edit script for a[0..n) -> b[0..m), in forward order.
std::vector<Op> myers(std::span<const int> a, std::span<const int> b) {
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  const int max = n + m;
  std::vector<Op> ops;
  if (max == 0) return ops;

  const int offset = max + 1;
  std::vector<int> v(2 * max + 3, 0);
  // trace[d][k + d] is the furthest x on diagonal k after d edits.
  std::vector<std::vector<int>> trace;
  int final_d = -1;
  for (int d = 0; d <= max && final_d < 0; ++d) {
    for (int k = -d; k <= d; k += 2) {
      int x;
      if (k == -d || (k != d && v[offset + k - 1] < v[offset + k + 1])) {
        x = v[offset + k + 1];
      } else {
        x = v[offset + k - 1] + 1;
      }
      int y = x - k;
      while (x < n && y < m && a[x] == b[y]) {
        ++x;
        ++y;
      }
      v[offset + k] = x;
      if (x >= n && y >= m) final_d = d;
    }
    trace.emplace_back(v.begin() + offset - d, v.begin() + offset + d + 1);
  }

  int x = n;
  int y = m;
  for (int d = final_d; d > 0; --d) {
    const auto& prev = trace[d - 1];
    auto at = [&](int k) { return prev[k + d - 1]; };
    const int k = x - y;
    int prev_k;
    if (k == -d || (k != d && at(k - 1) < at(k + 1))) {
      prev_k = k + 1;
    } else {
      prev_k = k - 1;
    }
    const int prev_x = at(prev_k);
    const int prev_y = prev_x - prev_k;
    while (x > prev_x && y > prev_y) {
      ops.push_back(Op::Equal);
      --x;
      --y;
    }
    if (prev_k == k + 1) {
      ops.push_back(Op::Insert);
      --y;
    } else {
      ops.push_back(Op::Delete);
      --x;
    }
  }
  while (x > 0 && y > 0) {
    ops.push_back(Op::Equal);
    --x;
    --y;
  }
  std::reverse(ops.begin(), ops.end());
  return ops;
}

LineRange run_range(int first, int count) {
  return count == 0 ? LineRange::empty_at(first) : LineRange{first, first + count - 1};
}

}  // namespace

std::vector<Hunk> diff_lines(std::span<const std::string_view> pre,
                             std::span<const std::string_view> post) {
  std::size_t prefix = 0;
  while (prefix < pre.size() && prefix < post.size() && pre[prefix] == post[prefix]) ++prefix;
  std::size_t suffix = 0;
  while (suffix < pre.size() - prefix && suffix < post.size() - prefix &&
         pre[pre.size() - 1 - suffix] == post[post.size() - 1 - suffix]) {
    ++suffix;
  }

  std::unordered_map<std::string_view, int> ids;
  auto a = intern(pre.subspan(prefix, pre.size() - prefix - suffix), ids);
  auto b = intern(post.subspan(prefix, post.size() - prefix - suffix), ids);
  auto ops = myers(a, b);

  std::vector<Hunk> hunks;
  int pre_line = static_cast<int>(prefix) + 1;
  int post_line = static_cast<int>(prefix) + 1;
  std::size_t i = 0;
  while (i < ops.size()) {
    if (ops[i] == Op::Equal) {
      ++pre_line;
      ++post_line;
      ++i;
      continue;
    }
    int deleted = 0;
    int inserted = 0;
    while (i < ops.size() && ops[i] != Op::Equal) {
      (ops[i] == Op::Delete ? deleted : inserted) += 1;
      ++i;
    }
    Hunk hunk;
    hunk.kind = deleted == 0 ? HunkKind::Insert : inserted == 0 ? HunkKind::Delete : HunkKind::Change;
    hunk.pre = run_range(pre_line, deleted);
    hunk.post = run_range(post_line, inserted);
    hunks.push_back(hunk);
    pre_line += deleted;
    post_line += inserted;
  }
  return hunks;
}

std::vector<Hunk> line_diff(std::string_view text_pre, std::string_view text_post) {
  const std::string pre = normalize_line_endings(text_pre);
  const std::string post = normalize_line_endings(text_post);
  const auto pre_lines = split_lines(pre);
  const auto post_lines = split_lines(post);
  return diff_lines(pre_lines, post_lines);
}

int edit_size(std::span<const Hunk> hunks) noexcept {
  int total = 0;
  for (const auto& hunk : hunks) total += hunk.pre.size() + hunk.post.size();
  return total;
}

std::vector<ChangeRegion> classify(std::span<const Hunk> hunks) {
  std::vector<ChangeRegion> regions;
  int pre_floor = 1;
  int post_floor = 1;
  for (std::size_t i = 0; i < hunks.size(); ++i) {
    const auto& hunk = hunks[i];
    const bool shape_ok = [&] {
      switch (hunk.kind) {
        case HunkKind::Insert: return hunk.pre.size() == 0 && !hunk.post.empty();
        case HunkKind::Delete: return !hunk.pre.empty() && hunk.post.size() == 0;
        case HunkKind::Change: return !hunk.pre.empty() && !hunk.post.empty();
      }
      return false;
    }();
    if (!shape_ok || hunk.pre.end < hunk.pre.start - 1 || hunk.post.end < hunk.post.start - 1) {
      throw Error(ErrorCode::MalformedHunks,
                  "hunk " + std::to_string(i) + " is inconsistent with its kind");
    }
    if (hunk.pre.start < pre_floor || hunk.post.start < post_floor) {
      throw Error(ErrorCode::MalformedHunks,
                  "hunk " + std::to_string(i) + " overlaps or precedes the previous hunk");
    }
    pre_floor = hunk.pre.end + 1;
    post_floor = hunk.post.end + 1;

    switch (hunk.kind) {
      case HunkKind::Insert:
        regions.push_back({Side::Post, hunk.post.start, hunk.post.end, ChangeType::Addition, {}});
        break;
      case HunkKind::Delete:
        regions.push_back({Side::Pre, hunk.pre.start, hunk.pre.end, ChangeType::Removal, {}});
        break;
      case HunkKind::Change:
        regions.push_back({Side::Pre, hunk.pre.start, hunk.pre.end, ChangeType::Modification, {}});
        regions.push_back(
            {Side::Post, hunk.post.start, hunk.post.end, ChangeType::Modification, {}});
        break;
    }
  }
  return regions;
}

std::vector<bool> changed_lines(std::span<const Hunk> hunks, Side side, int line_count) {
  std::vector<bool> flags(static_cast<std::size_t>(std::max(line_count, 0)), false);
  for (const auto& hunk : hunks) {
    const auto& range = side == Side::Pre ? hunk.pre : hunk.post;
    for (int line = range.start; line <= range.end; ++line) {
      if (line >= 1 && line <= line_count) flags[line - 1] = true;
    }
  }
  return flags;
}

}  // namespace changeprism

// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace changeprism {

struct CommitMeta {
  std::string sha;
  std::string short_sha;
  std::string author;
  std::int64_t timestamp = 0;
  std::string message;
  std::vector<std::string> parent_shas;

  friend bool operator==(const CommitMeta&, const CommitMeta&) = default;
};

enum class FileStatus { Added, Deleted, Modified, Renamed };

std::string_view status_name(FileStatus status) noexcept;
std::optional<FileStatus> parse_status(std::string_view name) noexcept;

/// One changed file of a commit. Texts are LF-normalized; the side that
/// does not exist (pre of an added file, post of a deleted one) is empty.
struct FileChange {
  std::optional<std::string> path_pre;
  std::optional<std::string> path_post;
  FileStatus status = FileStatus::Modified;
  std::string text_pre;
  std::string text_post;

  /// Post path, or pre path for deletions.
  const std::string& path() const { return path_post ? *path_post : *path_pre; }

  friend bool operator==(const FileChange&, const FileChange&) = default;
};

}  // namespace changeprism

// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "changeprism/commit.hpp"
#include "changeprism/git_repository.hpp"

namespace changeprism {

struct ExtractOptions {
  /// File extensions (without the dot) that take part in extraction.
  std::vector<std::string> extensions{"java"};

  bool accepts(std::string_view path) const;
};

/// First-parent history of branch (HEAD when absent), sorted by committer
/// timestamp then sha. With a limit, only the limit most recent commits of
/// the chain are walked. An unborn HEAD yields an empty list.
/// Throws Error(NotARepository) or Error(UnknownBranch).
std::vector<CommitMeta> list_commits(const git::Repository& repo,
                                     const std::optional<std::string>& branch = std::nullopt,
                                     std::optional<std::size_t> limit = std::nullopt);
std::vector<CommitMeta> list_commits(const std::filesystem::path& repo_path,
                                     const std::optional<std::string>& branch = std::nullopt,
                                     std::optional<std::size_t> limit = std::nullopt);

CommitMeta commit_meta(const git::Repository& repo, const git::ObjectId& id);

/// Files changed by a commit against its first parent (empty tree for a
/// root commit), filtered by extension and sorted by path. Renames are
/// recognized only for byte-identical blobs. Binary blobs are skipped.
/// Throws Error(UnknownCommit).
std::vector<FileChange> changed_files(const git::Repository& repo, std::string_view sha,
                                      const ExtractOptions& options = {});
std::vector<FileChange> changed_files(const std::filesystem::path& repo_path,
                                      std::string_view sha, const ExtractOptions& options = {});

}  // namespace changeprism

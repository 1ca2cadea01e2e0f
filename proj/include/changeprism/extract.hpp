// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "changeprism/commit.hpp"
#include "changeprism/git_repository.hpp"
#include "changeprism/history.hpp"
#include "changeprism/record.hpp"

namespace changeprism {

/// Classifies every change of one file set: textual hunks for every file,
/// plus refactorings, micro-changes and the commit-level cross-file pass for
/// .java files. A file that fails to parse keeps its textual regions and
/// gets a warning.
std::vector<FileRecord> analyze_files(std::span<const FileChange> changes);

/// Extracts and classifies one commit. Throws Error(UnknownCommit).
CommitRecord extract_commit(const git::Repository& repo, std::string_view sha,
                            const ExtractOptions& options = {});
CommitRecord extract_commit(const std::filesystem::path& repo_path, std::string_view sha,
                            const ExtractOptions& options = {});

/// Extracts several commits on up to `jobs` threads; results are in input
/// order and identical to sequential extraction.
std::vector<CommitRecord> extract_commits(const git::Repository& repo,
                                          std::span<const CommitMeta> commits,
                                          const ExtractOptions& options, std::size_t jobs);

}  // namespace changeprism

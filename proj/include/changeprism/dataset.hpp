// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "changeprism/record.hpp"

namespace changeprism {

inline constexpr const char* kSchemaVersion = "1";

struct DatasetSummary {
  std::filesystem::path dir;
  std::string version;
  std::string repo_name;
  std::size_t commit_count = 0;
};

struct Dataset {
  std::string version;
  std::string repo_name;
  std::vector<CommitRecord> records;
};

/// Writes dir/index.json and dir/commits/<sha>.json. Output is byte-stable:
/// saving the same records twice produces identical files. Commit documents
/// that are no longer indexed are removed. Throws Error(IoError) or
/// Error(SchemaVersionMismatch) if dir holds a dataset of another version.
DatasetSummary save_dataset(const std::filesystem::path& dir, const std::string& repo_name,
                            std::span<const CommitRecord> records);

/// Loads records in index order. Throws Error(MissingIndex),
/// Error(CorruptDocument) naming the offending file, or
/// Error(SchemaVersionMismatch).
Dataset load_dataset(const std::filesystem::path& dir);

}  // namespace changeprism

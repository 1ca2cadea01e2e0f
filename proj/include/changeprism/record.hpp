// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "changeprism/commit.hpp"
#include "changeprism/region.hpp"
#include "changeprism/spectrum.hpp"

namespace changeprism {

struct FileRecord {
  std::optional<std::string> path_pre;
  std::optional<std::string> path_post;
  FileStatus status = FileStatus::Modified;
  int pre_line_count = 0;
  int post_line_count = 0;
  std::vector<ChangeRegion> regions;
  Spectrum spectrum;
  std::vector<std::string> warnings;

  const std::string& path() const { return path_post ? *path_post : *path_pre; }

  /// Canonicalizes regions and rebuilds the spectrum from them.
  void finalize();

  friend bool operator==(const FileRecord&, const FileRecord&) = default;
};

struct CommitRecord {
  CommitMeta meta;
  std::vector<FileRecord> files;

  friend bool operator==(const CommitRecord&, const CommitRecord&) = default;
};

}  // namespace changeprism

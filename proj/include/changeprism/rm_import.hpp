// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "changeprism/change_type.hpp"

namespace changeprism {

/// Level of a RefactoringMiner refactoring type name, or nullopt when the
/// name is not in the lookup table.
std::optional<RefactoringLevel> refactoring_miner_level(std::string_view type_name);

struct ImportSummary {
  /// Refactorings attached to at least one file location.
  std::size_t imported = 0;
  /// Refactorings skipped because their type is not in the lookup table.
  std::size_t skipped_unmapped = 0;
  /// Refactorings skipped because none of their locations matched a file
  /// of the commit within its line bounds.
  std::size_t skipped_unlocated = 0;
  std::vector<std::string> warnings;
};

/// Merges refactorings from a RefactoringMiner JSON report into a saved
/// dataset. Each located refactoring becomes regions labeled with its type
/// name; importing the same report again leaves the dataset unchanged.
/// Throws Error(MalformedImportFile) or Error(UnknownCommitInImport) before
/// writing anything.
ImportSummary import_refactorings_json(const std::filesystem::path& dataset_dir,
                                       const std::filesystem::path& rm_json);

}  // namespace changeprism

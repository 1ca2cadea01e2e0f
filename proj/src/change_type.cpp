// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#include "changeprism/change_type.hpp"

#include <algorithm>
#include <tuple>

#include "changeprism/commit.hpp"
#include "changeprism/error.hpp"
#include "changeprism/region.hpp"

namespace changeprism {

namespace {

struct TypeInfo {
  ChangeType type;
  std::string_view key;
  std::string_view color;
};

constexpr std::array<TypeInfo, 7> kTypeTable{{
    {ChangeType::ClassRefactoring, "class_refactoring", "#A5D8FF"},
    {ChangeType::MethodRefactoring, "method_refactoring", "#4DABF7"},
    {ChangeType::Modification, "modification", "#E3B341"},
    {ChangeType::Addition, "addition", "#2EA043"},
    {ChangeType::Removal, "removal", "#CF222E"},
    {ChangeType::StatementRefactoring, "statement_refactoring", "#1864AB"},
    {ChangeType::MicroChange, "micro_change", "#9775FA"},
}};

const TypeInfo& info(ChangeType type) noexcept { return kTypeTable[layer_order(type) - 1]; }

}  // namespace

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotARepository: return "NotARepository";
    case ErrorCode::UnknownBranch: return "UnknownBranch";
    case ErrorCode::UnknownCommit: return "UnknownCommit";
    case ErrorCode::CorruptObject: return "CorruptObject";
    case ErrorCode::MalformedHunks: return "MalformedHunks";
    case ErrorCode::RegionOutOfBounds: return "RegionOutOfBounds";
    case ErrorCode::UnknownTypeKey: return "UnknownTypeKey";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::SchemaVersionMismatch: return "SchemaVersionMismatch";
    case ErrorCode::MissingIndex: return "MissingIndex";
    case ErrorCode::CorruptDocument: return "CorruptDocument";
    case ErrorCode::UnknownCommitInImport: return "UnknownCommitInImport";
    case ErrorCode::MalformedImportFile: return "MalformedImportFile";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Error";
}

std::string_view type_key(ChangeType type) noexcept { return info(type).key; }

std::string_view color_key(ChangeType type) noexcept { return info(type).color; }

std::optional<ChangeType> parse_type_key(std::string_view key) noexcept {
  for (const auto& entry : kTypeTable) {
    if (entry.key == key) return entry.type;
  }
  return std::nullopt;
}

std::string_view level_name(RefactoringLevel level) noexcept {
  switch (level) {
    case RefactoringLevel::Class: return "class";
    case RefactoringLevel::Method: return "method";
    case RefactoringLevel::Statement: break;
  }
  return "statement";
}

std::optional<RefactoringLevel> parse_level_name(std::string_view name) noexcept {
  if (name == "class") return RefactoringLevel::Class;
  if (name == "method") return RefactoringLevel::Method;
  if (name == "statement") return RefactoringLevel::Statement;
  return std::nullopt;
}

TypeSet TypeSet::all() noexcept {
  TypeSet set;
  for (auto type : kAllChangeTypes) set.insert(type);
  return set;
}

TypeSet TypeSet::of(std::initializer_list<ChangeType> types) noexcept {
  TypeSet set;
  for (auto type : types) set.insert(type);
  return set;
}

std::vector<ChangeType> TypeSet::members() const {
  std::vector<ChangeType> out;
  for (auto type : kAllChangeTypes) {
    if (contains(type)) out.push_back(type);
  }
  return out;
}

TypeSet parse_type_keys(std::span<const std::string> keys) {
  TypeSet set;
  for (const auto& key : keys) {
    auto type = parse_type_key(key);
    if (!type) throw Error(ErrorCode::UnknownTypeKey, "unknown change type key '" + key + "'");
    set.insert(*type);
  }
  return set;
}

std::string_view side_name(Side side) noexcept { return side == Side::Pre ? "pre" : "post"; }

std::optional<Side> parse_side(std::string_view name) noexcept {
  if (name == "pre") return Side::Pre;
  if (name == "post") return Side::Post;
  return std::nullopt;
}

std::string_view status_name(FileStatus status) noexcept {
  switch (status) {
    case FileStatus::Added: return "added";
    case FileStatus::Deleted: return "deleted";
    case FileStatus::Modified: return "modified";
    case FileStatus::Renamed: break;
  }
  return "renamed";
}

std::optional<FileStatus> parse_status(std::string_view name) noexcept {
  if (name == "added") return FileStatus::Added;
  if (name == "deleted") return FileStatus::Deleted;
  if (name == "modified") return FileStatus::Modified;
  if (name == "renamed") return FileStatus::Renamed;
  return std::nullopt;
}

bool region_less(const ChangeRegion& a, const ChangeRegion& b) {
  auto key = [](const ChangeRegion& r) {
    return std::tie(r.side, r.start_line);
  };
  if (key(a) != key(b)) return key(a) < key(b);
  if (a.change_type != b.change_type) return type_key(a.change_type) < type_key(b.change_type);
  if (a.labels != b.labels) return a.labels < b.labels;
  return a.end_line < b.end_line;
}

void canonicalize_regions(std::vector<ChangeRegion>& regions) {
  for (auto& region : regions) {
    std::sort(region.labels.begin(), region.labels.end());
    region.labels.erase(std::unique(region.labels.begin(), region.labels.end()),
                        region.labels.end());
  }
  // Fold regions with equal side, range and type.
  auto same_slot = [](const ChangeRegion& a, const ChangeRegion& b) {
    return a.side == b.side && a.start_line == b.start_line && a.end_line == b.end_line &&
           a.change_type == b.change_type;
  };
  auto slot_less = [](const ChangeRegion& a, const ChangeRegion& b) {
    return std::tuple(a.side, a.start_line, type_key(a.change_type), a.end_line) <
           std::tuple(b.side, b.start_line, type_key(b.change_type), b.end_line);
  };
  std::stable_sort(regions.begin(), regions.end(), slot_less);
  std::vector<ChangeRegion> folded;
  folded.reserve(regions.size());
  for (auto& region : regions) {
    if (!folded.empty() && same_slot(folded.back(), region)) {
      auto& labels = folded.back().labels;
      labels.insert(labels.end(), region.labels.begin(), region.labels.end());
      std::sort(labels.begin(), labels.end());
      labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    } else {
      folded.push_back(std::move(region));
    }
  }
  std::sort(folded.begin(), folded.end(), region_less);
  regions = std::move(folded);
}

}  // namespace changeprism

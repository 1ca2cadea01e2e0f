// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#include "changeprism/rm_import.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>

#include "changeprism/dataset.hpp"
#include "changeprism/error.hpp"
#include "changeprism/record_json.hpp"

namespace changeprism {

namespace {

using Level = RefactoringLevel;

const std::unordered_map<std::string_view, Level>& level_table() {
  static const std::unordered_map<std::string_view, Level> table = {
      // class level
      {"Move Class", Level::Class},
      {"Rename Class", Level::Class},
      {"Move And Rename Class", Level::Class},
      {"Extract Superclass", Level::Class},
      {"Extract Interface", Level::Class},
      {"Extract Class", Level::Class},
      {"Extract Subclass", Level::Class},
      {"Merge Class", Level::Class},
      {"Split Class", Level::Class},
      {"Collapse Hierarchy", Level::Class},
      {"Change Type Declaration Kind", Level::Class},
      {"Replace Anonymous With Class", Level::Class},
      {"Add Class Annotation", Level::Class},
      {"Remove Class Annotation", Level::Class},
      {"Modify Class Annotation", Level::Class},
      {"Add Class Modifier", Level::Class},
      {"Remove Class Modifier", Level::Class},
      {"Change Class Access Modifier", Level::Class},
      {"Move Source Folder", Level::Class},
      {"Rename Package", Level::Class},
      {"Move Package", Level::Class},
      {"Split Package", Level::Class},
      {"Merge Package", Level::Class},
      // method level
      {"Extract Method", Level::Method},
      {"Inline Method", Level::Method},
      {"Rename Method", Level::Method},
      {"Move Method", Level::Method},
      {"Pull Up Method", Level::Method},
      {"Push Down Method", Level::Method},
      {"Extract And Move Method", Level::Method},
      {"Move And Rename Method", Level::Method},
      {"Move And Inline Method", Level::Method},
      {"Split Method", Level::Method},
      {"Merge Method", Level::Method},
      {"Change Return Type", Level::Method},
      {"Add Parameter", Level::Method},
      {"Remove Parameter", Level::Method},
      {"Reorder Parameter", Level::Method},
      {"Rename Parameter", Level::Method},
      {"Change Parameter Type", Level::Method},
      {"Merge Parameter", Level::Method},
      {"Split Parameter", Level::Method},
      {"Parameterize Variable", Level::Method},
      {"Parameterize Attribute", Level::Method},
      {"Parameterize Test", Level::Method},
      {"Localize Parameter", Level::Method},
      {"Add Parameter Annotation", Level::Method},
      {"Remove Parameter Annotation", Level::Method},
      {"Modify Parameter Annotation", Level::Method},
      {"Add Parameter Modifier", Level::Method},
      {"Remove Parameter Modifier", Level::Method},
      {"Add Method Annotation", Level::Method},
      {"Remove Method Annotation", Level::Method},
      {"Modify Method Annotation", Level::Method},
      {"Add Method Modifier", Level::Method},
      {"Remove Method Modifier", Level::Method},
      {"Change Method Access Modifier", Level::Method},
      {"Add Thrown Exception Type", Level::Method},
      {"Remove Thrown Exception Type", Level::Method},
      {"Change Thrown Exception Type", Level::Method},
      // statement level
      {"Extract Variable", Level::Statement},
      {"Inline Variable", Level::Statement},
      {"Rename Variable", Level::Statement},
      {"Change Variable Type", Level::Statement},
      {"Split Variable", Level::Statement},
      {"Merge Variable", Level::Statement},
      {"Replace Variable With Attribute", Level::Statement},
      {"Replace Attribute With Variable", Level::Statement},
      {"Add Variable Modifier", Level::Statement},
      {"Remove Variable Modifier", Level::Statement},
      {"Add Variable Annotation", Level::Statement},
      {"Remove Variable Annotation", Level::Statement},
      {"Modify Variable Annotation", Level::Statement},
      {"Rename Attribute", Level::Statement},
      {"Move Attribute", Level::Statement},
      {"Move And Rename Attribute", Level::Statement},
      {"Pull Up Attribute", Level::Statement},
      {"Push Down Attribute", Level::Statement},
      {"Change Attribute Type", Level::Statement},
      {"Extract Attribute", Level::Statement},
      {"Inline Attribute", Level::Statement},
      {"Encapsulate Attribute", Level::Statement},
      {"Replace Attribute", Level::Statement},
      {"Merge Attribute", Level::Statement},
      {"Split Attribute", Level::Statement},
      {"Add Attribute Modifier", Level::Statement},
      {"Remove Attribute Modifier", Level::Statement},
      {"Change Attribute Access Modifier", Level::Statement},
      {"Add Attribute Annotation", Level::Statement},
      {"Remove Attribute Annotation", Level::Statement},
      {"Modify Attribute Annotation", Level::Statement},
      {"Replace Loop With Pipeline", Level::Statement},
      {"Replace Pipeline With Loop", Level::Statement},
      {"Replace Anonymous With Lambda", Level::Statement},
      {"Replace Generic With Diamond", Level::Statement},
      {"Merge Conditional", Level::Statement},
      {"Split Conditional", Level::Statement},
      {"Invert Condition", Level::Statement},
      {"Merge Catch", Level::Statement},
      {"Try With Resources", Level::Statement},
      {"Assert Throws", Level::Statement},
      {"Move Code", Level::Statement},
  };
  return table;
}

struct Location {
  Side side;
  std::string file_path;
  int start_line;
  int end_line;
};

struct RmRefactoring {
  std::string type;
  std::vector<Location> locations;
};

struct RmCommit {
  std::string sha;
  std::vector<RmRefactoring> refactorings;
};

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedImportFile, what); }

int line_of(const Json& location, const char* key, const std::string& where) {
  auto it = location.find(key);
  if (it == location.end() || !it->is_number_integer()) malformed(where + ": '" + key + "' is not an integer");
  auto value = it->get<std::int64_t>();
  if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max()) {
    malformed(where + ": '" + key + "' is out of range");
  }
  return static_cast<int>(value);
}

void read_locations(const Json& refactoring, const char* key, Side side, const std::string& where,
                    std::vector<Location>& out) {
  auto it = refactoring.find(key);
  if (it == refactoring.end()) return;
  if (!it->is_array()) malformed(where + ": '" + key + "' is not an array");
  for (const auto& location : *it) {
    if (!location.is_object()) malformed(where + ": location is not an object");
    auto path = location.find("filePath");
    if (path == location.end() || !path->is_string()) malformed(where + ": location lacks filePath");
    out.push_back({side, path->get<std::string>(), line_of(location, "startLine", where),
                   line_of(location, "endLine", where)});
  }
}

std::vector<RmCommit> read_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed("cannot read " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto json = Json::parse(text, nullptr, false);
  if (json.is_discarded()) malformed(path.string() + " is not valid JSON");
  auto commits = json.is_object() ? json.find("commits") : json.end();
  if (!json.is_object() || commits == json.end() || !commits->is_array()) {
    malformed(path.string() + " has no top-level commits array");
  }
  std::vector<RmCommit> out;
  for (std::size_t c = 0; c < commits->size(); ++c) {
    const auto& commit = (*commits)[c];
    const auto where = "commits[" + std::to_string(c) + "]";
    if (!commit.is_object()) malformed(where + " is not an object");
    auto sha = commit.find("sha1");
    if (sha == commit.end() || !sha->is_string()) malformed(where + " lacks sha1");
    RmCommit parsed{sha->get<std::string>(), {}};
    auto refactorings = commit.find("refactorings");
    if (refactorings != commit.end()) {
      if (!refactorings->is_array()) malformed(where + ".refactorings is not an array");
      for (std::size_t r = 0; r < refactorings->size(); ++r) {
        const auto& item = (*refactorings)[r];
        const auto item_where = where + ".refactorings[" + std::to_string(r) + "]";
        if (!item.is_object()) malformed(item_where + " is not an object");
        auto type = item.find("type");
        if (type == item.end() || !type->is_string()) malformed(item_where + " lacks type");
        RmRefactoring refactoring{type->get<std::string>(), {}};
        read_locations(item, "leftSideLocations", Side::Pre, item_where, refactoring.locations);
        read_locations(item, "rightSideLocations", Side::Post, item_where, refactoring.locations);
        parsed.refactorings.push_back(std::move(refactoring));
      }
    }
    out.push_back(std::move(parsed));
  }
  return out;
}

FileRecord* find_file(CommitRecord& record, const Location& location) {
  for (auto& file : record.files) {
    const auto& path = location.side == Side::Pre ? file.path_pre : file.path_post;
    if (path && *path == location.file_path) return &file;
  }
  return nullptr;
}

}  // namespace

std::optional<RefactoringLevel> refactoring_miner_level(std::string_view type_name) {
  const auto& table = level_table();
  auto it = table.find(type_name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

ImportSummary import_refactorings_json(const std::filesystem::path& dataset_dir,
                                       const std::filesystem::path& rm_json) {
  const auto report = read_report(rm_json);
  auto dataset = load_dataset(dataset_dir);
  std::unordered_map<std::string, CommitRecord*> by_sha;
  for (auto& record : dataset.records) by_sha.emplace(record.meta.sha, &record);
  for (const auto& commit : report) {
    if (!by_sha.contains(commit.sha)) {
      throw Error(ErrorCode::UnknownCommitInImport, "commit " + commit.sha + " is not in the dataset");
    }
  }

  ImportSummary summary;
  std::map<std::string, std::size_t> unmapped;
  std::set<FileRecord*> touched;
  for (const auto& commit : report) {
    auto& record = *by_sha.at(commit.sha);
    for (const auto& refactoring : commit.refactorings) {
      auto level = refactoring_miner_level(refactoring.type);
      if (!level) {
        ++summary.skipped_unmapped;
        ++unmapped[refactoring.type];
        continue;
      }
      bool attached = false;
      for (const auto& location : refactoring.locations) {
        FileRecord* file = find_file(record, location);
        const int line_count = file ? (location.side == Side::Pre ? file->pre_line_count : file->post_line_count) : 0;
        if (!file || location.start_line < 1 || location.end_line < location.start_line ||
            location.end_line > line_count) {
          summary.warnings.push_back(refactoring.type + " in " + record.meta.short_sha + ": location " +
                                     location.file_path + ":" + std::to_string(location.start_line) + "-" +
                                     std::to_string(location.end_line) + " (" +
                                     std::string(side_name(location.side)) +
                                     ") does not match a changed file");
          continue;
        }
        file->regions.push_back({location.side, location.start_line, location.end_line,
                                 change_type_for(*level), {refactoring.type}});
        touched.insert(file);
        attached = true;
      }
      if (attached) {
        ++summary.imported;
      } else {
        ++summary.skipped_unlocated;
      }
    }
  }
  for (const auto& [type, count] : unmapped) {
    summary.warnings.push_back("skipped " + std::to_string(count) + " refactoring(s) of unmapped type '" +
                               type + "'");
  }
  for (auto* file : touched) file->finalize();
  save_dataset(dataset_dir, dataset.repo_name, dataset.records);
  return summary;
}

}  // namespace changeprism

// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#include "changeprism/dataset.hpp"

#include <fstream>
#include <iterator>
#include <set>
#include <system_error>

#include "changeprism/error.hpp"
#include "changeprism/record_json.hpp"

namespace changeprism {

namespace fs = std::filesystem;

namespace {

bool is_sha(std::string_view text) {
  if (text.size() != 40) return false;
  for (char c : text) {
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
  }
  return true;
}

std::optional<std::string> read_whole(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_atomic(const fs::path& path, const std::string& content) {
  auto temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + temp.string());
  }
  std::error_code ec;
  fs::rename(temp, path, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot replace " + path.string() + ": " + ec.message());
}

Json parse_document(const fs::path& path) {
  auto text = read_whole(path);
  if (!text) throw Error(ErrorCode::CorruptDocument, path.string() + " is missing or unreadable");
  auto json = Json::parse(*text, nullptr, false);
  if (json.is_discarded()) throw Error(ErrorCode::CorruptDocument, path.string() + " is not valid JSON");
  return json;
}

std::string version_of(const Json& index, const fs::path& path) {
  auto it = index.find("version");
  if (!index.is_object() || it == index.end() || !it->is_string()) {
    throw Error(ErrorCode::CorruptDocument, path.string() + " has no version");
  }
  return it->get<std::string>();
}

}  // namespace

DatasetSummary save_dataset(const fs::path& dir, const std::string& repo_name,
                            std::span<const CommitRecord> records) {
  const auto index_path = dir / "index.json";
  const auto commits_dir = dir / "commits";
  std::error_code ec;
  if (fs::exists(index_path, ec)) {
    auto text = read_whole(index_path);
    auto existing = text ? Json::parse(*text, nullptr, false) : Json(nullptr);
    if (existing.is_object() && existing.contains("version") && existing["version"] != kSchemaVersion) {
      throw Error(ErrorCode::SchemaVersionMismatch,
                  index_path.string() + " holds schema version " + existing["version"].dump() +
                      ", expected " + kSchemaVersion);
    }
  }
  fs::create_directories(commits_dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + commits_dir.string() + ": " + ec.message());

  Json commits = Json::array();
  std::set<std::string> written;
  for (const auto& record : records) {
    if (!is_sha(record.meta.sha)) {
      throw Error(ErrorCode::IoError, "refusing to write record with malformed sha '" + record.meta.sha + "'");
    }
    write_atomic(commits_dir / (record.meta.sha + ".json"), canonical_dump(to_json(record)));
    written.insert(record.meta.sha);
    commits.push_back(to_json(record.meta));
  }
  Json index{{"version", kSchemaVersion}, {"repo_name", repo_name}, {"commits", std::move(commits)}};
  write_atomic(index_path, canonical_dump(index));

  for (const auto& entry : fs::directory_iterator(commits_dir, ec)) {
    const auto name = entry.path().filename().string();
    if (name.size() == 45 && name.ends_with(".json") && is_sha(name.substr(0, 40)) &&
        !written.contains(name.substr(0, 40))) {
      fs::remove(entry.path(), ec);
    }
  }
  return {dir, kSchemaVersion, repo_name, records.size()};
}

Dataset load_dataset(const fs::path& dir) {
  const auto index_path = dir / "index.json";
  std::error_code ec;
  if (!fs::is_regular_file(index_path, ec)) {
    throw Error(ErrorCode::MissingIndex, "no index.json in " + dir.string());
  }
  const auto index = parse_document(index_path);
  Dataset dataset;
  dataset.version = version_of(index, index_path);
  if (dataset.version != kSchemaVersion) {
    throw Error(ErrorCode::SchemaVersionMismatch, index_path.string() + " holds schema version " +
                                                      dataset.version + ", expected " + kSchemaVersion);
  }
  auto repo_name = index.find("repo_name");
  auto commits = index.find("commits");
  if (repo_name == index.end() || !repo_name->is_string() || commits == index.end() || !commits->is_array()) {
    throw Error(ErrorCode::CorruptDocument, index_path.string() + " lacks repo_name or commits");
  }
  dataset.repo_name = repo_name->get<std::string>();
  for (const auto& entry : *commits) {
    CommitMeta meta;
    try {
      meta = commit_meta_from_json(entry);
    } catch (const std::invalid_argument& e) {
      throw Error(ErrorCode::CorruptDocument, index_path.string() + ": " + e.what());
    }
    if (!is_sha(meta.sha)) {
      throw Error(ErrorCode::CorruptDocument, index_path.string() + ": malformed sha '" + meta.sha + "'");
    }
    const auto path = dir / "commits" / (meta.sha + ".json");
    const auto document = parse_document(path);
    try {
      auto record = commit_record_from_json(document);
      if (record.meta != meta) {
        throw std::invalid_argument("commit metadata differs from index.json");
      }
      dataset.records.push_back(std::move(record));
    } catch (const std::invalid_argument& e) {
      throw Error(ErrorCode::CorruptDocument, path.string() + ": " + e.what());
    }
  }
  return dataset;
}

}  // namespace changeprism

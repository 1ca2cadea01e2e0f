// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "changeprism/dataset.hpp"
#include "changeprism/error.hpp"
#include "changeprism/extract.hpp"
#include "changeprism/record_json.hpp"
#include "test_support.hpp"

namespace changeprism {
namespace {

namespace fs = std::filesystem;
using testing::read_file;
using testing::TempDir;
using testing::write_file;

std::vector<CommitRecord> sample_records() {
  static const auto records = [] {
    testing::TestRepo repo;
    auto history = testing::build_sample_history(repo);
    auto opened = git::Repository::open(repo.path());
    return extract_commits(opened, list_commits(opened), {}, 2);
  }();
  return records;
}

ErrorCode load_error(const fs::path& dir) {
  try {
    load_dataset(dir);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "load_dataset succeeded";
  return ErrorCode::IoError;
}

TEST(Dataset, RoundTripsRecords) {
  TempDir dir;
  const auto records = sample_records();
  const auto summary = save_dataset(dir.path(), "events", records);
  EXPECT_EQ(summary.commit_count, records.size());
  EXPECT_EQ(summary.version, "1");
  const auto loaded = load_dataset(dir.path());
  EXPECT_EQ(loaded.version, "1");
  EXPECT_EQ(loaded.repo_name, "events");
  EXPECT_EQ(loaded.records, records);
}

TEST(Dataset, LayoutIsIndexPlusOneDocumentPerCommit) {
  TempDir dir;
  const auto records = sample_records();
  save_dataset(dir.path(), "events", records);
  const auto index = Json::parse(read_file(dir / "index.json"));
  EXPECT_EQ(index["version"], "1");
  EXPECT_EQ(index["repo_name"], "events");
  ASSERT_EQ(index["commits"].size(), records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(index["commits"][i]["sha"], records[i].meta.sha);
    EXPECT_FALSE(index["commits"][i].contains("files"));
    const auto doc = dir.path() / "commits" / (records[i].meta.sha + ".json");
    ASSERT_TRUE(fs::exists(doc));
    EXPECT_EQ(read_file(doc), canonical_dump(to_json(records[i])));
  }
}

TEST(Dataset, RewritesAreByteStable) {
  TempDir a;
  TempDir b;
  const auto records = sample_records();
  save_dataset(a.path(), "events", records);
  save_dataset(b.path(), "events", records);
  save_dataset(b.path(), "events", load_dataset(b.path()).records);
  EXPECT_EQ(read_file(a / "index.json"), read_file(b / "index.json"));
  for (const auto& record : records) {
    const auto name = "commits/" + record.meta.sha + ".json";
    EXPECT_EQ(read_file(a / name), read_file(b / name));
  }
}

TEST(Dataset, CanonicalTextUsesSortedKeysAndTrailingNewline) {
  TempDir dir;
  save_dataset(dir.path(), "events", sample_records());
  const auto text = read_file(dir / "index.json");
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(text.find('\r'), std::string::npos);
  EXPECT_LT(text.find("\"commits\""), text.find("\"repo_name\""));
  EXPECT_LT(text.find("\"repo_name\""), text.find("\"version\""));
  EXPECT_EQ(text.substr(0, 4), "{\n  ");
}

TEST(Dataset, ResaveRemovesStaleDocuments) {
  TempDir dir;
  auto records = sample_records();
  save_dataset(dir.path(), "events", records);
  const auto dropped = records.front().meta.sha;
  records.erase(records.begin());
  write_file(dir / "commits/notes.txt", "keep me");
  save_dataset(dir.path(), "events", records);
  EXPECT_FALSE(fs::exists(dir / ("commits/" + dropped + ".json")));
  EXPECT_TRUE(fs::exists(dir / "commits/notes.txt"));
  EXPECT_EQ(load_dataset(dir.path()).records, records);
}

TEST(Dataset, EmptyDatasetIsValid) {
  TempDir dir;
  save_dataset(dir.path(), "empty", {});
  const auto loaded = load_dataset(dir.path());
  EXPECT_TRUE(loaded.records.empty());
  EXPECT_EQ(loaded.repo_name, "empty");
}

TEST(Dataset, MissingIndexIsReported) {
  TempDir dir;
  EXPECT_EQ(load_error(dir.path()), ErrorCode::MissingIndex);
  EXPECT_EQ(load_error(dir / "absent"), ErrorCode::MissingIndex);
}

TEST(Dataset, CorruptDocumentsAreReported) {
  const auto records = sample_records();
  {
    TempDir dir;
    save_dataset(dir.path(), "events", records);
    write_file(dir / "index.json", "{ not json");
    EXPECT_EQ(load_error(dir.path()), ErrorCode::CorruptDocument);
  }
  {
    TempDir dir;
    save_dataset(dir.path(), "events", records);
    fs::remove(dir / ("commits/" + records[1].meta.sha + ".json"));
    EXPECT_EQ(load_error(dir.path()), ErrorCode::CorruptDocument);
  }
  {
    TempDir dir;
    save_dataset(dir.path(), "events", records);
    const auto doc = dir / ("commits/" + records[1].meta.sha + ".json");
    auto json = Json::parse(read_file(doc));
    json["files"][0]["regions"][0]["change_type"] = "rename";
    write_file(doc, json.dump());
    EXPECT_EQ(load_error(dir.path()), ErrorCode::CorruptDocument);
  }
  {
    TempDir dir;
    save_dataset(dir.path(), "events", records);
    const auto doc = dir / ("commits/" + records[1].meta.sha + ".json");
    auto json = Json::parse(read_file(doc));
    json["message"] = "tampered";
    write_file(doc, json.dump());
    EXPECT_EQ(load_error(dir.path()), ErrorCode::CorruptDocument);
  }
}

TEST(Dataset, SchemaVersionMismatchIsReported) {
  TempDir dir;
  save_dataset(dir.path(), "events", sample_records());
  auto index = Json::parse(read_file(dir / "index.json"));
  index["version"] = "2";
  write_file(dir / "index.json", index.dump());
  EXPECT_EQ(load_error(dir.path()), ErrorCode::SchemaVersionMismatch);
  try {
    save_dataset(dir.path(), "events", sample_records());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SchemaVersionMismatch);
  }
}

TEST(RecordJson, RejectsMalformedShapes) {
  const auto record = to_json(sample_records()[1]);
  EXPECT_EQ(commit_record_from_json(record), sample_records()[1]);
  for (const char* key : {"sha", "files", "timestamp", "parents"}) {
    auto broken = record;
    broken.erase(key);
    EXPECT_THROW(commit_record_from_json(broken), std::invalid_argument) << key;
  }
  auto bad_side = record;
  bad_side["files"][0]["regions"][0]["side"] = "middle";
  EXPECT_THROW(commit_record_from_json(bad_side), std::invalid_argument);
  auto bad_range = record;
  bad_range["files"][0]["regions"][0]["end_line"] = 10000;
  EXPECT_THROW(commit_record_from_json(bad_range), std::invalid_argument);
}

TEST(RecordJson, InvalidUtf8IsReplaced) {
  auto record = sample_records()[0];
  record.meta.message = "caf\xe9";
  const auto text = canonical_dump(to_json(record));
  EXPECT_NE(text.find("caf\xef\xbf\xbd"), std::string::npos);
  EXPECT_TRUE(Json::accept(text));
}

}  // namespace
}  // namespace changeprism

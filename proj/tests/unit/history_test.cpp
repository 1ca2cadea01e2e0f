// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>

#include "changeprism/error.hpp"
#include "changeprism/history.hpp"
#include "test_support.hpp"

namespace changeprism {
namespace {

using testing::TempDir;
using testing::TestRepo;

std::vector<std::string> shas(const std::vector<CommitMeta>& commits) {
  std::vector<std::string> out;
  for (const auto& commit : commits) out.push_back(commit.sha);
  return out;
}

TEST(ListCommits, SequentialCommitsMatchGitLog) {
  TestRepo repo;
  for (int i = 0; i < 3; ++i) {
    repo.write("A.java", "class A { int v = " + std::to_string(i) + "; }\n");
    repo.commit("commit " + std::to_string(i) + "\n\nbody", 1700000000 + i * 100);
  }
  auto commits = list_commits(repo.path());
  EXPECT_EQ(shas(commits), repo.first_parent_log());
  ASSERT_EQ(commits.size(), 3u);
  EXPECT_EQ(commits[0].author, "Ada Lovelace");
  EXPECT_EQ(commits[0].timestamp, 1700000000);
  EXPECT_EQ(commits[2].message, "commit 2\n\nbody");
  EXPECT_EQ(commits[2].short_sha, commits[2].sha.substr(0, 7));
  EXPECT_TRUE(commits[0].parent_shas.empty());
  EXPECT_EQ(commits[1].parent_shas, std::vector<std::string>{commits[0].sha});
}

TEST(ListCommits, LimitKeepsMostRecentWindowInAscendingOrder) {
  TestRepo repo;
  std::vector<std::string> made;
  for (int i = 0; i < 4; ++i) {
    repo.write("A.java", std::to_string(i));
    made.push_back(repo.commit("c" + std::to_string(i), 1700000000 + i));
  }
  EXPECT_EQ(shas(list_commits(repo.path(), std::nullopt, 1)), std::vector<std::string>{made[3]});
  EXPECT_EQ(shas(list_commits(repo.path(), std::nullopt, 2)), (std::vector<std::string>{made[2], made[3]}));
  EXPECT_EQ(list_commits(repo.path(), std::nullopt, 10).size(), 4u);
}

TEST(ListCommits, EqualTimestampsBreakTiesBySha) {
  TestRepo repo;
  for (int i = 0; i < 4; ++i) {
    repo.write("A.java", std::to_string(i));
    repo.commit("c" + std::to_string(i), 1700000000);
  }
  auto listed = shas(list_commits(repo.path()));
  auto sorted = listed;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(listed, sorted);
}

TEST(ListCommits, WalksFirstParentsOnly) {
  TestRepo repo;
  repo.write("A.java", "a");
  repo.commit("root", 1700000000);
  repo.git("checkout -q -b feature");
  repo.write("B.java", "b");
  repo.commit("feature 1", 1700000100);
  repo.write("B.java", "bb");
  repo.commit("feature 2", 1700000200);
  repo.git("checkout -q main");
  repo.write("C.java", "c");
  repo.commit("main 1", 1700000300);
  repo.git("merge -q --no-ff feature -m merge");

  auto commits = list_commits(repo.path());
  EXPECT_EQ(shas(commits).size(), repo.first_parent_log().size());
  EXPECT_EQ(commits.size(), 3u);
  EXPECT_EQ(std::count_if(commits.begin(), commits.end(), [](const CommitMeta& c) { return c.parent_shas.size() == 2; }),
            1);
  EXPECT_EQ(list_commits(repo.path(), std::string("feature")).size(), 3u);
}

TEST(ListCommits, EmptyRepositoryHasNoCommits) {
  TestRepo repo;
  EXPECT_TRUE(list_commits(repo.path()).empty());
}

TEST(ListCommits, ReportsUnknownBranchAndNonRepository) {
  TestRepo repo;
  repo.write("A.java", "a");
  repo.commit("root", 1700000000);
  try {
    list_commits(repo.path(), std::string("nope"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownBranch);
  }
  TempDir plain;
  try {
    list_commits(plain.path());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotARepository);
  }
}

TEST(ChangedFiles, AddedFileHasEmptyPreText) {
  TestRepo repo;
  repo.write("src/A.java", "class A {}\n");
  auto sha = repo.commit("add", 1700000000);
  auto files = changed_files(repo.path(), sha);
  ASSERT_EQ(files.size(), 1u);
  EXPECT_EQ(files[0].status, FileStatus::Added);
  EXPECT_FALSE(files[0].path_pre);
  EXPECT_EQ(files[0].path_post, "src/A.java");
  EXPECT_EQ(files[0].text_pre, "");
  EXPECT_EQ(files[0].text_post, "class A {}\n");
}

TEST(ChangedFiles, ExtensionFilterSkipsOtherFiles) {
  TestRepo repo;
  repo.write("A.java", "class A {}\n");
  repo.commit("add", 1700000000);
  repo.write("README.md", "# readme\n");
  auto sha = repo.commit("docs", 1700000100);
  EXPECT_TRUE(changed_files(repo.path(), sha).empty());
  ExtractOptions markdown;
  markdown.extensions = {"md"};
  EXPECT_EQ(changed_files(repo.path(), sha, markdown).size(), 1u);
}

TEST(ChangedFiles, SortedByPathAcrossStatuses) {
  TestRepo repo;
  repo.write("b/Keep.java", "class Keep {}\n");
  repo.write("a/Gone.java", "class Gone {}\n");
  repo.write("c/Same.java", "class Same { int x; }\n");
  repo.write("Edit.java", "class Edit {}\n");
  repo.commit("root", 1700000000);
  repo.remove("a/Gone.java");
  repo.rename("c/Same.java", "d/Same.java");
  repo.write("Edit.java", "class Edit { int y; }\n");
  repo.write("b/New.java", "class New {}\n");
  auto sha = repo.commit("mixed", 1700000100);

  auto files = changed_files(repo.path(), sha);
  std::vector<std::pair<std::string, FileStatus>> got;
  for (const auto& file : files) got.emplace_back(file.path(), file.status);
  EXPECT_EQ(got, (std::vector<std::pair<std::string, FileStatus>>{{"Edit.java", FileStatus::Modified},
                                                                  {"a/Gone.java", FileStatus::Deleted},
                                                                  {"b/New.java", FileStatus::Added},
                                                                  {"d/Same.java", FileStatus::Renamed}}));
  EXPECT_EQ(files[3].path_pre, "c/Same.java");
  EXPECT_EQ(files[3].text_pre, files[3].text_post);
  EXPECT_EQ(files[1].text_post, "");
}

TEST(ChangedFiles, EditedRenameIsDeletePlusAdd) {
  TestRepo repo;
  repo.write("Old.java", "class Old {}\n");
  repo.commit("root", 1700000000);
  repo.rename("Old.java", "New.java");
  repo.write("New.java", "class New {}\n");
  auto files = changed_files(repo.path(), repo.commit("move", 1700000100));
  ASSERT_EQ(files.size(), 2u);
  EXPECT_EQ(files[0].status, FileStatus::Added);
  EXPECT_EQ(files[1].status, FileStatus::Deleted);
}

TEST(ChangedFiles, NormalizesCrlfAndSkipsBinaryAndSymlinks) {
  TestRepo repo;
  repo.write("Crlf.java", "class A {\r\n}\r\n");
  repo.write("Blob.java", std::string("bin\0ary", 7));
  testing::run_command("cd " + testing::shell_quote(repo.path().string()) + " && ln -s Crlf.java Link.java");
  auto files = changed_files(repo.path(), repo.commit("root", 1700000000));
  ASSERT_EQ(files.size(), 1u);
  EXPECT_EQ(files[0].path(), "Crlf.java");
  EXPECT_EQ(files[0].text_post, "class A {\n}\n");
}

TEST(ChangedFiles, MergeComparesAgainstFirstParent) {
  TestRepo repo;
  repo.write("A.java", "a\n");
  repo.commit("root", 1700000000);
  repo.git("checkout -q -b feature");
  repo.write("B.java", "b\n");
  repo.commit("feature", 1700000100);
  repo.git("checkout -q main");
  repo.git("merge -q --no-ff feature -m merge");
  auto files = changed_files(repo.path(), repo.git("rev-parse HEAD"));
  ASSERT_EQ(files.size(), 1u);
  EXPECT_EQ(files[0].path(), "B.java");
}

TEST(ChangedFiles, UnknownCommitIsReported) {
  TestRepo repo;
  repo.write("A.java", "a\n");
  repo.commit("root", 1700000000);
  for (const std::string& sha : {std::string(40, 'f'), std::string("not-a-ref")}) {
    try {
      changed_files(repo.path(), sha);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::UnknownCommit);
    }
  }
}

TEST(ExtractOptions, MatchesExtensionOfFileName) {
  ExtractOptions options;
  EXPECT_TRUE(options.accepts("a/b/C.java"));
  EXPECT_FALSE(options.accepts("a.java/C.kt"));
  EXPECT_FALSE(options.accepts(".java"));
  EXPECT_FALSE(options.accepts("Java"));
  options.extensions = {"java", "kt"};
  EXPECT_TRUE(options.accepts("C.kt"));
}

}  // namespace
}  // namespace changeprism

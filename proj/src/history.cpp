// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#include "changeprism/history.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "changeprism/error.hpp"
#include "changeprism/text.hpp"

namespace changeprism {

namespace {

using git::ObjectId;
using git::ObjectType;
using git::Repository;

using BlobMap = std::map<std::string, ObjectId>;

void flatten_tree(const Repository& repo, const ObjectId& tree, const std::string& prefix,
                  BlobMap& out) {
  auto object = repo.read(tree);
  if (!object || object->type != ObjectType::Tree) {
    throw Error(ErrorCode::CorruptObject, "missing tree " + tree.hex());
  }
  for (auto& entry : git::parse_tree(object->data)) {
    auto path = prefix.empty() ? entry.name : prefix + "/" + entry.name;
    if (entry.is_tree()) {
      flatten_tree(repo, entry.id, path, out);
    } else if (entry.is_regular_file()) {
      out.emplace(std::move(path), entry.id);
    }
  }
}

ObjectId commit_id(const Repository& repo, std::string_view sha) {
  if (auto id = ObjectId::from_hex(sha)) return *id;
  if (auto id = repo.resolve_revision(sha)) return *id;
  throw Error(ErrorCode::UnknownCommit, std::string(sha) + " does not name a commit");
}

std::string trim_trailing_newlines(std::string text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

std::optional<std::string> read_text(const Repository& repo, const ObjectId& id) {
  auto blob = repo.read(id);
  if (!blob || blob->type != ObjectType::Blob) {
    throw Error(ErrorCode::CorruptObject, "missing blob " + id.hex());
  }
  if (blob->data.find('\0') != std::string::npos) return std::nullopt;
  return normalize_line_endings(blob->data);
}

}  // namespace

bool ExtractOptions::accepts(std::string_view path) const {
  if (extensions.empty()) return true;
  const auto slash = path.rfind('/');
  const auto name = slash == std::string_view::npos ? path : path.substr(slash + 1);
  const auto dot = name.rfind('.');
  if (dot == std::string_view::npos || dot == 0) return false;
  const auto ext = name.substr(dot + 1);
  return std::find(extensions.begin(), extensions.end(), ext) != extensions.end();
}

CommitMeta commit_meta(const Repository& repo, const ObjectId& id) {
  auto commit = repo.read_commit(id);
  CommitMeta meta;
  meta.sha = id.hex();
  meta.short_sha = meta.sha.substr(0, 7);
  meta.author = commit.author.name;
  meta.timestamp = commit.committer.time;
  meta.message = trim_trailing_newlines(std::move(commit.message));
  for (const auto& parent : commit.parents) meta.parent_shas.push_back(parent.hex());
  return meta;
}

std::vector<CommitMeta> list_commits(const Repository& repo, const std::optional<std::string>& branch,
                                     std::optional<std::size_t> limit) {
  std::optional<ObjectId> tip;
  if (branch) {
    tip = repo.resolve_revision(*branch);
    if (!tip) throw Error(ErrorCode::UnknownBranch, "no branch named " + *branch);
  } else {
    tip = repo.resolve_ref("HEAD");
    if (!tip) return {};
  }
  std::vector<CommitMeta> commits;
  std::optional<ObjectId> current = tip;
  while (current && (!limit || commits.size() < *limit)) {
    auto meta = commit_meta(repo, *current);
    current.reset();
    if (!meta.parent_shas.empty()) current = ObjectId::from_hex(meta.parent_shas.front());
    commits.push_back(std::move(meta));
  }
  std::sort(commits.begin(), commits.end(), [](const CommitMeta& a, const CommitMeta& b) {
    return std::tie(a.timestamp, a.sha) < std::tie(b.timestamp, b.sha);
  });
  return commits;
}

std::vector<CommitMeta> list_commits(const std::filesystem::path& repo_path,
                                     const std::optional<std::string>& branch,
                                     std::optional<std::size_t> limit) {
  return list_commits(Repository::open(repo_path), branch, limit);
}

std::vector<FileChange> changed_files(const Repository& repo, std::string_view sha,
                                      const ExtractOptions& options) {
  const auto id = commit_id(repo, sha);
  const auto commit = repo.read_commit(id);
  BlobMap pre;
  BlobMap post;
  if (!commit.parents.empty()) {
    flatten_tree(repo, repo.read_commit(commit.parents.front()).tree, "", pre);
  }
  flatten_tree(repo, commit.tree, "", post);

  std::vector<std::string> deleted;
  std::vector<std::string> added;
  std::vector<std::string> modified;
  for (const auto& [path, blob] : pre) {
    auto it = post.find(path);
    if (it == post.end()) {
      deleted.push_back(path);
    } else if (it->second != blob) {
      modified.push_back(path);
    }
  }
  for (const auto& [path, blob] : post) {
    if (!pre.contains(path)) added.push_back(path);
  }

  std::vector<std::pair<std::string, std::string>> renames;
  std::vector<bool> added_used(added.size(), false);
  std::vector<std::string> plain_deleted;
  for (const auto& old_path : deleted) {
    bool paired = false;
    for (std::size_t i = 0; i < added.size(); ++i) {
      if (!added_used[i] && post.at(added[i]) == pre.at(old_path)) {
        added_used[i] = true;
        renames.emplace_back(old_path, added[i]);
        paired = true;
        break;
      }
    }
    if (!paired) plain_deleted.push_back(old_path);
  }

  std::vector<FileChange> changes;
  auto push = [&](std::optional<std::string> path_pre, std::optional<std::string> path_post,
                  FileStatus status) {
    if (!(path_pre && options.accepts(*path_pre)) && !(path_post && options.accepts(*path_post))) {
      return;
    }
    FileChange change{path_pre, path_post, status, {}, {}};
    if (path_pre) {
      auto text = read_text(repo, pre.at(*path_pre));
      if (!text) return;
      change.text_pre = std::move(*text);
    }
    if (path_post) {
      auto text = read_text(repo, post.at(*path_post));
      if (!text) return;
      change.text_post = std::move(*text);
    }
    changes.push_back(std::move(change));
  };
  for (const auto& path : modified) push(path, path, FileStatus::Modified);
  for (const auto& path : plain_deleted) push(path, std::nullopt, FileStatus::Deleted);
  for (std::size_t i = 0; i < added.size(); ++i) {
    if (!added_used[i]) push(std::nullopt, added[i], FileStatus::Added);
  }
  for (const auto& [from, to] : renames) push(from, to, FileStatus::Renamed);

  std::sort(changes.begin(), changes.end(), [](const FileChange& a, const FileChange& b) {
    return std::tie(a.path(), a.status) < std::tie(b.path(), b.status);
  });
  return changes;
}

std::vector<FileChange> changed_files(const std::filesystem::path& repo_path, std::string_view sha,
                                      const ExtractOptions& options) {
  return changed_files(Repository::open(repo_path), sha, options);
}

}  // namespace changeprism

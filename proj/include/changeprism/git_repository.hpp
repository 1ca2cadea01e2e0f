// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace changeprism::git {

struct ObjectId {
  std::array<std::uint8_t, 20> bytes{};

  static std::optional<ObjectId> from_hex(std::string_view hex);
  static ObjectId from_raw(std::string_view raw20);
  std::string hex() const;

  friend auto operator<=>(const ObjectId&, const ObjectId&) = default;
};

enum class ObjectType { Commit = 1, Tree = 2, Blob = 3, Tag = 4 };

struct RawObject {
  ObjectType type = ObjectType::Blob;
  std::string data;
};

struct Signature {
  std::string name;
  std::string email;
  std::int64_t time = 0;
};

struct CommitObject {
  ObjectId tree;
  std::vector<ObjectId> parents;
  Signature author;
  Signature committer;
  std::string message;
};

struct TreeEntry {
  std::uint32_t mode = 0;
  std::string name;
  ObjectId id;

  bool is_tree() const noexcept { return mode == 040000; }
  bool is_regular_file() const noexcept { return (mode & 0170000) == 0100000; }
};

CommitObject parse_commit(std::string_view data);
std::vector<TreeEntry> parse_tree(std::string_view data);

/// Read-only access to an on-disk repository: loose objects, packfiles
/// (index v1/v2, offset and reference deltas), loose and packed refs.
/// All const member functions are safe to call concurrently.
class Repository {
 public:
  /// Accepts a work tree (with a .git directory or gitdir file) or a bare
  /// repository. Throws Error(NotARepository).
  static Repository open(const std::filesystem::path& path);

  Repository(Repository&&) noexcept;
  Repository& operator=(Repository&&) noexcept;
  ~Repository();

  std::optional<RawObject> read(const ObjectId& id) const;

  /// Resolves "HEAD" or a full ref name ("refs/heads/main"), peeling
  /// annotated tags. Returns nullopt for missing or unborn refs.
  std::optional<ObjectId> resolve_ref(std::string_view refname) const;

  /// Resolves a short branch/tag name, full ref name or full hex id.
  std::optional<ObjectId> resolve_revision(std::string_view revision) const;

  /// Reads and parses a commit; throws Error(UnknownCommit) when the id is
  /// missing or not a commit.
  CommitObject read_commit(const ObjectId& id) const;

  /// Blob text at path in the given tree, or nullopt.
  std::optional<std::string> read_path(const ObjectId& tree, std::string_view path) const;

  const std::filesystem::path& git_dir() const noexcept;

 private:
  struct Impl;
  explicit Repository(std::unique_ptr<Impl> impl);
  std::unique_ptr<Impl> impl_;
};

}  // namespace changeprism::git

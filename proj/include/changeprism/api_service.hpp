// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "changeprism/dataset.hpp"
#include "changeprism/git_repository.hpp"

namespace changeprism {

inline constexpr std::size_t kDefaultPageSize = 100;
inline constexpr std::size_t kMaxPageSize = 1000;
inline constexpr int kDefaultPort = 8077;

struct ServerConfig {
  std::filesystem::path data_dir;
  std::optional<std::filesystem::path> repo_path;
  std::optional<std::filesystem::path> ui_dir;
  int port = kDefaultPort;
  std::string bind_address = "127.0.0.1";
  /// Origins allowed for CORS in addition to http://localhost:* and
  /// http://127.0.0.1:*.
  std::vector<std::string> cors_origins;

  /// Throws Error(InvalidConfig).
  void validate() const;
};

struct ApiRequest {
  std::string method = "GET";
  /// Raw, still percent-encoded path without the query string.
  std::string path;
  std::multimap<std::string, std::string> query;
  std::string origin;
};

struct ApiResponse {
  int status = 200;
  std::string content_type;
  std::string body;
  std::map<std::string, std::string> headers;
};

/// Routes read-only API requests over a fully loaded dataset. handle() is
/// const and keeps no per-request state, so it may run on many threads.
class ApiService {
 public:
  ApiService(Dataset dataset, std::optional<git::Repository> repo,
             std::vector<std::string> cors_origins = {});

  ApiResponse handle(const ApiRequest& request) const;

  const Dataset& dataset() const noexcept { return dataset_; }

 private:
  ApiResponse health() const;
  ApiResponse list_commits(const ApiRequest& request) const;
  ApiResponse commit(const CommitRecord& record) const;
  ApiResponse spectrum(const FileRecord& file, const ApiRequest& request) const;
  ApiResponse content(const CommitRecord& record, const FileRecord& file,
                      const ApiRequest& request) const;
  ApiResponse regions(const FileRecord& file) const;

  const CommitRecord* find_commit(const std::string& sha) const;
  bool origin_allowed(const std::string& origin) const;

  Dataset dataset_;
  std::optional<git::Repository> repo_;
  std::vector<std::string> cors_origins_;
  std::unordered_map<std::string, std::size_t> by_sha_;
};

}  // namespace changeprism

// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#include "changeprism/api_service.hpp"

#include <algorithm>
#include <charconv>

#include "changeprism/error.hpp"
#include "changeprism/record_json.hpp"
#include "changeprism/spectrum.hpp"
#include "changeprism/text.hpp"

namespace changeprism {

namespace {

constexpr const char* kJson = "application/json; charset=utf-8";
constexpr const char* kText = "text/plain; charset=utf-8";

ApiResponse json_response(int status, const Json& body) {
  return {status, kJson, canonical_dump(body), {}};
}

ApiResponse error_response(int status, std::string_view code, const std::string& message) {
  return json_response(status, Json{{"error", code}, {"message", message}});
}

std::vector<std::string> split_path(std::string_view path) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= path.size()) {
    auto slash = path.find('/', pos);
    if (slash == std::string_view::npos) slash = path.size();
    if (slash > pos) parts.emplace_back(path.substr(pos, slash - pos));
    pos = slash + 1;
  }
  return parts;
}

std::vector<std::string> query_values(const ApiRequest& request, const std::string& key) {
  std::vector<std::string> values;
  auto [begin, end] = request.query.equal_range(key);
  for (auto it = begin; it != end; ++it) values.push_back(it->second);
  return values;
}

/// Parses a non-negative decimal query parameter; nullopt when malformed.
std::optional<std::size_t> size_param(const std::string& text) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  return value;
}

bool local_origin(std::string_view origin, std::string_view host) {
  for (std::string_view scheme : {"http://", "https://"}) {
    std::string prefix = std::string(scheme) + std::string(host);
    if (origin == prefix) return true;
    if (origin.starts_with(prefix) && origin[prefix.size()] == ':') {
      auto port = origin.substr(prefix.size() + 1);
      if (!port.empty() && std::all_of(port.begin(), port.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        return true;
      }
    }
  }
  return false;
}

const FileRecord* find_file(const CommitRecord& record, const std::string& path) {
  for (const auto& file : record.files) {
    if (file.path_post && *file.path_post == path) return &file;
  }
  for (const auto& file : record.files) {
    if (file.path_pre && *file.path_pre == path) return &file;
  }
  return nullptr;
}

}  // namespace

void ServerConfig::validate() const {
  if (port < 0 || port > 65535) {
    throw Error(ErrorCode::InvalidConfig, "port " + std::to_string(port) + " is outside 0-65535");
  }
  if (bind_address.empty()) throw Error(ErrorCode::InvalidConfig, "bind address is empty");
  if (data_dir.empty()) throw Error(ErrorCode::InvalidConfig, "data directory is required");
}

ApiService::ApiService(Dataset dataset, std::optional<git::Repository> repo,
                       std::vector<std::string> cors_origins)
    : dataset_(std::move(dataset)), repo_(std::move(repo)), cors_origins_(std::move(cors_origins)) {
  for (std::size_t i = 0; i < dataset_.records.size(); ++i) by_sha_.emplace(dataset_.records[i].meta.sha, i);
}

bool ApiService::origin_allowed(const std::string& origin) const {
  if (origin.empty()) return false;
  if (local_origin(origin, "localhost") || local_origin(origin, "127.0.0.1")) return true;
  return std::find(cors_origins_.begin(), cors_origins_.end(), origin) != cors_origins_.end();
}

const CommitRecord* ApiService::find_commit(const std::string& sha) const {
  if (auto it = by_sha_.find(sha); it != by_sha_.end()) return &dataset_.records[it->second];
  if (sha.size() < 4 || sha.size() >= 40) return nullptr;
  const CommitRecord* found = nullptr;
  for (const auto& record : dataset_.records) {
    if (record.meta.sha.starts_with(sha)) {
      if (found) return nullptr;
      found = &record;
    }
  }
  return found;
}

ApiResponse ApiService::handle(const ApiRequest& request) const {
  ApiResponse response;
  const bool cors = origin_allowed(request.origin);
  if (request.method == "OPTIONS") {
    response.status = 204;
    response.content_type = kText;
    if (cors) {
      response.headers["Access-Control-Allow-Methods"] = "GET, OPTIONS";
      response.headers["Access-Control-Allow-Headers"] = "Content-Type";
      response.headers["Access-Control-Max-Age"] = "600";
    }
  } else if (request.method != "GET" && request.method != "HEAD") {
    response = error_response(405, "method_not_allowed", request.method + " is not supported");
    response.headers["Allow"] = "GET, HEAD, OPTIONS";
  } else {
    try {
      const auto parts = split_path(request.path);
      if (parts.size() < 2 || parts[0] != "api") {
        response = error_response(404, "not_found", "no such endpoint");
      } else if (parts.size() == 2 && parts[1] == "health") {
        response = health();
      } else if (parts[1] != "commits") {
        response = error_response(404, "not_found", "no such endpoint");
      } else if (parts.size() == 2) {
        response = list_commits(request);
      } else {
        const auto sha = percent_decode(parts[2]);
        const CommitRecord* record = find_commit(sha);
        if (!record) {
          response = error_response(404, "unknown_commit", "commit " + sha + " is not in the dataset");
        } else if (parts.size() == 3) {
          response = commit(*record);
        } else if (parts.size() >= 6 && parts[3] == "files") {
          std::string path;
          for (std::size_t i = 4; i + 1 < parts.size(); ++i) {
            if (!path.empty()) path += '/';
            path += percent_decode(parts[i]);
          }
          const auto& action = parts.back();
          const FileRecord* file = find_file(*record, path);
          if (!file) {
            response = error_response(404, "unknown_path", "commit has no changed file " + path);
          } else if (action == "spectrum") {
            response = spectrum(*file, request);
          } else if (action == "content") {
            response = content(*record, *file, request);
          } else if (action == "regions") {
            response = regions(*file);
          } else {
            response = error_response(404, "not_found", "no such file endpoint '" + action + "'");
          }
        } else {
          response = error_response(404, "not_found", "no such endpoint");
        }
      }
    } catch (const std::exception& e) {
      response = error_response(500, "internal_error", e.what());
    }
  }
  if (cors) {
    response.headers["Access-Control-Allow-Origin"] = request.origin;
    response.headers["Vary"] = "Origin";
  }
  return response;
}

ApiResponse ApiService::health() const {
  return json_response(200, Json{{"status", "ok"}, {"schema", dataset_.version}});
}

ApiResponse ApiService::list_commits(const ApiRequest& request) const {
  std::size_t offset = 0;
  std::size_t limit = kDefaultPageSize;
  for (const auto& value : query_values(request, "offset")) {
    auto parsed = size_param(value);
    if (!parsed) return error_response(400, "bad_request", "offset must be a non-negative integer");
    offset = *parsed;
  }
  for (const auto& value : query_values(request, "limit")) {
    auto parsed = size_param(value);
    if (!parsed || *parsed == 0) return error_response(400, "bad_request", "limit must be a positive integer");
    limit = std::min(*parsed, kMaxPageSize);
  }
  const auto& records = dataset_.records;
  Json commits = Json::array();
  for (std::size_t i = offset; i < records.size() && i - offset < limit; ++i) {
    commits.push_back(to_json(records[i].meta));
  }
  return json_response(200, Json{{"total", records.size()},
                                 {"offset", offset},
                                 {"limit", limit},
                                 {"repo_name", dataset_.repo_name},
                                 {"commits", std::move(commits)}});
}

ApiResponse ApiService::commit(const CommitRecord& record) const {
  return json_response(200, to_json(record));
}

ApiResponse ApiService::spectrum(const FileRecord& file, const ApiRequest& request) const {
  TypeSet enabled = TypeSet::all();
  const auto params = query_values(request, "types");
  if (!params.empty()) {
    std::vector<std::string> keys;
    for (const auto& param : params) {
      std::size_t pos = 0;
      while (pos <= param.size()) {
        auto comma = param.find(',', pos);
        if (comma == std::string::npos) comma = param.size();
        if (comma > pos) keys.push_back(param.substr(pos, comma - pos));
        pos = comma + 1;
      }
    }
    try {
      enabled = parse_type_keys(keys);
    } catch (const Error& e) {
      return error_response(400, "unknown_type_key", e.what());
    }
  }
  auto body = to_json(filter_spectrum(file.spectrum, enabled));
  body["pre_line_count"] = file.pre_line_count;
  body["post_line_count"] = file.post_line_count;
  return json_response(200, body);
}

ApiResponse ApiService::content(const CommitRecord& record, const FileRecord& file,
                                const ApiRequest& request) const {
  const auto sides = query_values(request, "side");
  if (sides.empty()) return error_response(400, "bad_request", "side=pre or side=post is required");
  const auto side = parse_side(sides.back());
  if (!side) return error_response(404, "unknown_side", "no side named '" + sides.back() + "'");
  const auto& path = *side == Side::Pre ? file.path_pre : file.path_post;
  if (!path) {
    return error_response(404, "no_such_side", "file has no " + std::string(side_name(*side)) + " version");
  }
  if (!repo_) return error_response(404, "content_unavailable", "server was started without a repository");

  auto id = git::ObjectId::from_hex(record.meta.sha);
  if (!id) return error_response(404, "unknown_commit", "commit id is malformed");
  std::optional<git::CommitObject> commit;
  try {
    commit = repo_->read_commit(*id);
  } catch (const Error&) {
    return error_response(404, "unknown_commit", "commit is missing from the repository");
  }
  std::optional<git::ObjectId> tree = commit->tree;
  if (*side == Side::Pre) {
    if (commit->parents.empty()) return error_response(404, "no_such_side", "root commit has no pre version");
    tree = repo_->read_commit(commit->parents.front()).tree;
  }
  auto text = repo_->read_path(*tree, *path);
  if (!text) return error_response(404, "unknown_path", "file is missing from the repository");
  return {200, kText, normalize_line_endings(*text), {}};
}

ApiResponse ApiService::regions(const FileRecord& file) const {
  Json out = Json::array();
  for (const auto& region : file.regions) out.push_back(to_json(region));
  return json_response(200, out);
}

}  // namespace changeprism

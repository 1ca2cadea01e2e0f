// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#include "changeprism/extract.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <variant>

#include "changeprism/declaration_matching.hpp"
#include "changeprism/error.hpp"
#include "changeprism/java_syntax.hpp"
#include "changeprism/line_diff.hpp"
#include "changeprism/microchange.hpp"
#include "changeprism/refactoring.hpp"
#include "changeprism/text.hpp"

namespace changeprism {

namespace {

struct FileAnalysis {
  const FileChange* change = nullptr;
  FileRecord record;
  std::vector<Hunk> hunks;
  bool parsed = false;
  java::SyntaxTree pre;
  java::SyntaxTree post;
  DeclarationMapping mapping;
};

void add_ranges(std::vector<ChangeRegion>& regions, Side side, std::span<const LineRange> ranges,
                ChangeType type, const std::string& label) {
  for (const auto& range : ranges) {
    if (range.empty()) continue;
    regions.push_back({side, range.start, range.end, type, {label}});
  }
}

void add_refactoring(FileAnalysis& pre_file, FileAnalysis& post_file, const Refactoring& r) {
  const auto type = change_type_for(r.level);
  add_ranges(pre_file.record.regions, Side::Pre, r.pre_regions, type, r.name);
  add_ranges(post_file.record.regions, Side::Post, r.post_regions, type, r.name);
}

bool is_java_path(const std::string& path) {
  return path.size() > 5 && path.compare(path.size() - 5, 5, ".java") == 0;
}

/// Empty sides parse to an empty tree; a parse failure is reported once per
/// side as a warning.
bool parse_side(const std::string& text, Side side, java::SyntaxTree& tree,
                std::vector<std::string>& warnings) {
  if (text.empty()) return true;
  auto result = java::parse_compilation_unit(text);
  if (auto* error = std::get_if<java::ParseError>(&result)) {
    warnings.push_back("parse error (" + std::string(side_name(side)) + " side, line " +
                       std::to_string(error->line) + "): " + error->message);
    return false;
  }
  tree = std::move(std::get<java::SyntaxTree>(result));
  return true;
}

FileAnalysis analyze_one(const FileChange& change) {
  FileAnalysis a;
  a.change = &change;
  a.record.path_pre = change.path_pre;
  a.record.path_post = change.path_post;
  a.record.status = change.status;
  a.record.pre_line_count = line_count(change.text_pre);
  a.record.post_line_count = line_count(change.text_post);
  a.hunks = line_diff(change.text_pre, change.text_post);
  a.record.regions = classify(a.hunks);
  if (!is_java_path(change.path())) return a;

  const bool pre_ok = parse_side(change.text_pre, Side::Pre, a.pre, a.record.warnings);
  const bool post_ok = parse_side(change.text_post, Side::Post, a.post, a.record.warnings);
  if (!pre_ok || !post_ok) return a;
  a.parsed = true;
  a.mapping = match_declarations(a.pre, a.post);

  for (const auto& r : detect_refactorings(a.mapping, a.pre, a.post, change)) add_refactoring(a, a, r);
  for (const auto& m : detect_microchanges(a.mapping, a.pre, a.post, a.hunks)) {
    if (m.region.empty()) continue;
    a.record.regions.push_back({m.side, m.region.start, m.region.end, ChangeType::MicroChange, {m.name}});
  }
  return a;
}

git::ObjectId resolve_commit(const git::Repository& repo, std::string_view sha) {
  if (auto id = git::ObjectId::from_hex(sha)) return *id;
  if (auto id = repo.resolve_revision(sha)) return *id;
  throw Error(ErrorCode::UnknownCommit, std::string(sha) + " does not name a commit");
}

}  // namespace

void FileRecord::finalize() {
  canonicalize_regions(regions);
  spectrum = build_spectrum(pre_line_count, post_line_count, regions);
}

std::vector<FileRecord> analyze_files(std::span<const FileChange> changes) {
  std::vector<FileAnalysis> analyses;
  analyses.reserve(changes.size());
  for (const auto& change : changes) analyses.push_back(analyze_one(change));

  std::vector<ParsedFile> parsed;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < analyses.size(); ++i) {
    if (!analyses[i].parsed) continue;
    parsed.push_back({analyses[i].change, &analyses[i].pre, &analyses[i].post, &analyses[i].mapping});
    origin.push_back(i);
  }
  for (const auto& located : detect_cross_file_refactorings(parsed)) {
    add_refactoring(analyses[origin[located.pre_file]], analyses[origin[located.post_file]],
                    located.refactoring);
  }

  std::vector<FileRecord> records;
  records.reserve(analyses.size());
  for (auto& a : analyses) {
    a.record.finalize();
    records.push_back(std::move(a.record));
  }
  return records;
}

CommitRecord extract_commit(const git::Repository& repo, std::string_view sha,
                            const ExtractOptions& options) {
  const auto id = resolve_commit(repo, sha);
  CommitRecord record;
  record.meta = commit_meta(repo, id);
  const auto changes = changed_files(repo, record.meta.sha, options);
  record.files = analyze_files(changes);
  return record;
}

CommitRecord extract_commit(const std::filesystem::path& repo_path, std::string_view sha,
                            const ExtractOptions& options) {
  return extract_commit(git::Repository::open(repo_path), sha, options);
}

std::vector<CommitRecord> extract_commits(const git::Repository& repo,
                                          std::span<const CommitMeta> commits,
                                          const ExtractOptions& options, std::size_t jobs) {
  std::vector<CommitRecord> records(commits.size());
  const std::size_t workers = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(commits.size(), 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < commits.size(); i = next++) {
      try {
        records[i] = extract_commit(repo, commits[i].sha, options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = commits.size();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> threads;
    for (std::size_t t = 0; t < workers; ++t) threads.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

}  // namespace changeprism

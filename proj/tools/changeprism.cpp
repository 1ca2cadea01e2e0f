// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <iostream>
#include <thread>

#include "CLI11.hpp"

#include "changeprism/dataset.hpp"
#include "changeprism/error.hpp"
#include "changeprism/extract.hpp"
#include "changeprism/http_server.hpp"
#include "changeprism/rm_import.hpp"

namespace fs = std::filesystem;
using namespace changeprism;

namespace {

struct ExtractArgs {
  fs::path repo;
  fs::path out = "changeprism-data";
  std::string branch;
  std::size_t limit = 0;
  std::vector<std::string> extensions{"java"};
  std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
};

struct ImportArgs {
  fs::path data;
  fs::path report;
};

std::string repo_name(const fs::path& repo) {
  auto name = fs::weakly_canonical(repo).filename().string();
  if (name.ends_with(".git") && name.size() > 4) name.resize(name.size() - 4);
  return name;
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

int run_extract(const ExtractArgs& args) {
  auto repo = git::Repository::open(args.repo);
  ExtractOptions options;
  options.extensions = args.extensions;
  for (auto& ext : options.extensions) {
    if (ext.starts_with('.')) ext.erase(0, 1);
  }
  auto commits = list_commits(repo, args.branch.empty() ? std::nullopt : std::optional(args.branch),
                              args.limit == 0 ? std::nullopt : std::optional(args.limit));
  auto records = extract_commits(repo, commits, options, args.jobs);
  for (const auto& record : records) {
    std::size_t regions = 0;
    std::size_t warnings = 0;
    for (const auto& file : record.files) {
      regions += file.regions.size();
      warnings += file.warnings.size();
    }
    std::cout << record.meta.short_sha << "  " << record.files.size() << " files  " << regions << " regions";
    if (warnings > 0) std::cout << "  " << warnings << " warnings";
    std::cout << "  " << first_line(record.meta.message) << "\n";
  }
  auto summary = save_dataset(args.out, repo_name(args.repo), records);
  std::cout << "wrote " << summary.commit_count << " commits to " << summary.dir.string() << "\n";
  return 0;
}

int run_import(const ImportArgs& args) {
  auto summary = import_refactorings_json(args.data, args.report);
  for (const auto& warning : summary.warnings) std::cerr << "warning: " << warning << "\n";
  std::cout << "imported " << summary.imported << " refactorings, skipped " << summary.skipped_unmapped
            << " unmapped and " << summary.skipped_unlocated << " unlocated\n";
  return 0;
}

int default_port() {
  if (const char* env = std::getenv("CHANGEPRISM_PORT")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0 && value <= 65535) return static_cast<int>(value);
    std::cerr << "changeprism: ignoring invalid CHANGEPRISM_PORT '" << env << "'\n";
  }
  return kDefaultPort;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extract, classify and serve code change histories"};
  app.require_subcommand(1);

  ExtractArgs extract_args;
  auto* extract = app.add_subcommand("extract", "Classify the history of a repository into a dataset");
  extract->add_option("--repo", extract_args.repo, "Repository to read")->required();
  extract->add_option("--out", extract_args.out, "Dataset directory")->capture_default_str();
  extract->add_option("--branch", extract_args.branch, "Branch to walk (default HEAD)");
  extract->add_option("--limit", extract_args.limit, "Only the N most recent commits")
      ->check(CLI::PositiveNumber);
  extract->add_option("--ext", extract_args.extensions, "File extensions to include")
      ->delimiter(',')
      ->capture_default_str();
  extract->add_option("--jobs", extract_args.jobs, "Worker threads")->check(CLI::PositiveNumber);

  ServerConfig server_config;
  server_config.port = default_port();
  fs::path serve_repo;
  fs::path serve_ui;
  auto* serve = app.add_subcommand("serve", "Serve a dataset over HTTP");
  serve->add_option("--data", server_config.data_dir, "Dataset directory")->required();
  serve->add_option("--repo", serve_repo, "Repository for file contents");
  serve->add_option("--port", server_config.port, "TCP port (0 picks a free one)")
      ->check(CLI::Range(0, 65535))
      ->capture_default_str();
  serve->add_option("--bind", server_config.bind_address, "Bind address")->capture_default_str();
  serve->add_option("--cors-origin", server_config.cors_origins, "Extra allowed CORS origin");
  serve->add_option("--ui", serve_ui, "Static UI directory");

  ImportArgs import_args;
  auto* import = app.add_subcommand("import", "Merge a RefactoringMiner report into a dataset");
  import->add_option("--data", import_args.data, "Dataset directory")->required();
  import->add_option("--rm", import_args.report, "RefactoringMiner JSON report")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*extract) return run_extract(extract_args);
    if (*import) return run_import(import_args);
    if (!serve_repo.empty()) server_config.repo_path = serve_repo;
    if (!serve_ui.empty()) server_config.ui_dir = serve_ui;
    return run_server(server_config);
  } catch (const Error& e) {
    std::cerr << "changeprism: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "changeprism: " << e.what() << "\n";
    return 1;
  }
}

// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "changeprism/api_service.hpp"
#include "changeprism/error.hpp"
#include "changeprism/extract.hpp"
#include "changeprism/record_json.hpp"
#include "changeprism/text.hpp"
#include "test_support.hpp"

namespace changeprism {
namespace {

using testing::kCaseStudyPath;

class ApiServiceTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    repo_ = new testing::TestRepo();
    history_ = new testing::SampleHistory(testing::build_sample_history(*repo_));
    data_ = new testing::TempDir();
    auto opened = git::Repository::open(repo_->path());
    save_dataset(data_->path(), "events", extract_commits(opened, list_commits(opened), {}, 2));
    service_ = new ApiService(load_dataset(data_->path()), git::Repository::open(repo_->path()),
                              std::vector<std::string>{"https://review.example.org"});
  }
  static void TearDownTestSuite() {
    delete service_;
    delete data_;
    delete history_;
    delete repo_;
  }

  static ApiResponse get(const std::string& target, const std::string& origin = "") {
    ApiRequest request;
    const auto question = target.find('?');
    request.path = target.substr(0, question);
    if (question != std::string::npos) {
      std::string query = target.substr(question + 1);
      std::size_t pos = 0;
      while (pos <= query.size()) {
        auto amp = query.find('&', pos);
        if (amp == std::string::npos) amp = query.size();
        const auto pair = query.substr(pos, amp - pos);
        const auto eq = pair.find('=');
        request.query.emplace(percent_decode(pair.substr(0, eq)),
                              eq == std::string::npos ? "" : percent_decode(pair.substr(eq + 1)));
        pos = amp + 1;
      }
    }
    request.origin = origin;
    return service_->handle(request);
  }

  static Json get_json(const std::string& target, int status = 200) {
    const auto response = get(target);
    EXPECT_EQ(response.status, status) << target << "\n" << response.body;
    EXPECT_EQ(response.content_type, "application/json; charset=utf-8");
    return Json::parse(response.body);
  }

  static std::string file_url(const std::string& sha, const std::string& path, const std::string& action) {
    return "/api/commits/" + sha + "/files/" + percent_encode_path(path) + "/" + action;
  }

  static void expect_error(const std::string& target, int status, const std::string& code) {
    const auto body = get_json(target, status);
    EXPECT_EQ(body["error"], code) << target;
    EXPECT_TRUE(body["message"].is_string());
  }

  static testing::TestRepo* repo_;
  static testing::SampleHistory* history_;
  static testing::TempDir* data_;
  static ApiService* service_;
};

testing::TestRepo* ApiServiceTest::repo_ = nullptr;
testing::SampleHistory* ApiServiceTest::history_ = nullptr;
testing::TempDir* ApiServiceTest::data_ = nullptr;
ApiService* ApiServiceTest::service_ = nullptr;

TEST_F(ApiServiceTest, Health) {
  EXPECT_EQ(get_json("/api/health"), (Json{{"status", "ok"}, {"schema", "1"}}));
}

TEST_F(ApiServiceTest, ListsCommitsInDatasetOrder) {
  const auto body = get_json("/api/commits");
  EXPECT_EQ(body["total"], 8);
  EXPECT_EQ(body["offset"], 0);
  EXPECT_EQ(body["limit"], 100);
  EXPECT_EQ(body["repo_name"], "events");
  ASSERT_EQ(body["commits"].size(), 8u);
  const auto all = history_->all();
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(body["commits"][i]["sha"], all[i]);
    EXPECT_FALSE(body["commits"][i].contains("files"));
  }
}

TEST_F(ApiServiceTest, PaginatesCommits) {
  const auto page = get_json("/api/commits?offset=2&limit=3");
  ASSERT_EQ(page["commits"].size(), 3u);
  EXPECT_EQ(page["commits"][0]["sha"], history_->javadoc);
  EXPECT_EQ(page["offset"], 2);
  EXPECT_EQ(page["limit"], 3);
  EXPECT_EQ(get_json("/api/commits?offset=8")["commits"].size(), 0u);
  EXPECT_EQ(get_json("/api/commits?offset=100")["total"], 8);
  EXPECT_EQ(get_json("/api/commits?limit=5000")["limit"], 1000);
}

TEST_F(ApiServiceTest, RejectsBadPagination) {
  expect_error("/api/commits?offset=-1", 400, "bad_request");
  expect_error("/api/commits?offset=two", 400, "bad_request");
  expect_error("/api/commits?limit=0", 400, "bad_request");
  expect_error("/api/commits?limit=", 400, "bad_request");
  expect_error("/api/commits?limit=1.5", 400, "bad_request");
}

TEST_F(ApiServiceTest, CommitByShaOrUniquePrefix) {
  const auto body = get_json("/api/commits/" + history_->case_study);
  EXPECT_EQ(body["sha"], history_->case_study);
  EXPECT_EQ(body["message"], "Cache generated listeners");
  ASSERT_EQ(body["files"].size(), 1u);
  EXPECT_EQ(get_json("/api/commits/" + history_->case_study.substr(0, 7))["sha"], history_->case_study);
  expect_error("/api/commits/" + history_->case_study.substr(0, 3), 404, "unknown_commit");
  expect_error("/api/commits/" + std::string(40, '0'), 404, "unknown_commit");
  expect_error("/api/commits/HEAD", 404, "unknown_commit");
}

TEST_F(ApiServiceTest, RegionsMatchGolden) {
  const auto expected = Json::parse(testing::read_fixture("case_study/expected.json"));
  EXPECT_EQ(get_json(file_url(history_->case_study, kCaseStudyPath, "regions")), expected["regions"]);
}

TEST_F(ApiServiceTest, SpectrumMatchesGolden) {
  const auto expected = Json::parse(testing::read_fixture("case_study/expected.json"));
  const auto body = get_json(file_url(history_->case_study, kCaseStudyPath, "spectrum"));
  EXPECT_EQ(body["pre_layers"], expected["spectrum"]["pre_layers"]);
  EXPECT_EQ(body["post_layers"], expected["spectrum"]["post_layers"]);
  EXPECT_EQ(body["pre_line_count"], 63);
  EXPECT_EQ(body["post_line_count"], 71);
}

TEST_F(ApiServiceTest, FilteredSpectrumMatchesGolden) {
  const auto expected = Json::parse(testing::read_fixture("case_study/expected.json"));
  const auto url = file_url(history_->case_study, kCaseStudyPath, "spectrum");
  EXPECT_EQ(get_json(url + "?types=micro_change"), expected["micro_change_only"]);
  const auto two = get_json(url + "?types=micro_change,addition");
  const auto repeated = get_json(url + "?types=micro_change&types=addition");
  EXPECT_EQ(two, repeated);
  for (const auto& layer : two["post_layers"]) {
    EXPECT_TRUE(layer["change_type"] == "micro_change" || layer["change_type"] == "addition");
  }
  EXPECT_EQ(two["post_layers"].size(), 5u);
  const auto none = get_json(url + "?types=");
  EXPECT_TRUE(none["pre_layers"].empty());
  EXPECT_TRUE(none["post_layers"].empty());
  expect_error(url + "?types=micro_change,rename", 400, "unknown_type_key");
}

TEST_F(ApiServiceTest, ServesContentOfBothSides) {
  const auto url = file_url(history_->case_study, kCaseStudyPath, "content");
  const auto post = get(url + "?side=post");
  EXPECT_EQ(post.status, 200);
  EXPECT_EQ(post.content_type, "text/plain; charset=utf-8");
  EXPECT_EQ(post.body, testing::read_fixture("case_study/ListenerFactory.post.java"));
  EXPECT_EQ(get(url + "?side=pre").body, testing::read_fixture("case_study/ListenerFactory.pre.java"));
  expect_error(url, 400, "bad_request");
  expect_error(url + "?side=middle", 404, "unknown_side");
}

TEST_F(ApiServiceTest, MissingSidesAreNotFound) {
  const std::string added = "src/main/java/com/example/ui/Widget.java";
  const std::string deleted = "src/main/java/com/example/model/Widget.java";
  expect_error(file_url(history_->move_class, added, "content?side=pre"), 404, "no_such_side");
  expect_error(file_url(history_->move_class, deleted, "content?side=post"), 404, "no_such_side");
  EXPECT_EQ(get(file_url(history_->move_class, deleted, "content?side=pre")).status, 200);
  expect_error(file_url(history_->root, kCaseStudyPath, "content?side=pre"), 404, "no_such_side");
}

TEST_F(ApiServiceTest, UnknownFilesAndEndpoints) {
  expect_error(file_url(history_->case_study, "src/Nope.java", "regions"), 404, "unknown_path");
  expect_error(file_url(history_->case_study, kCaseStudyPath, "blame"), 404, "not_found");
  expect_error("/api/commits/" + history_->case_study + "/files", 404, "not_found");
  expect_error("/api/nothing", 404, "not_found");
  expect_error("/", 404, "not_found");
}

TEST_F(ApiServiceTest, EncodedPathSegmentsAreDecoded) {
  std::string url = "/api/commits/" + history_->case_study + "/files/src%2Fmain/java/com/example/events/"
                    "Listener%46actory.java/regions";
  EXPECT_EQ(get(url).status, 200);
}

TEST_F(ApiServiceTest, ContentNeedsRepository) {
  ApiService without_repo(load_dataset(data_->path()), std::nullopt);
  ApiRequest request;
  request.path = file_url(history_->case_study, kCaseStudyPath, "content");
  request.query.emplace("side", "post");
  const auto response = without_repo.handle(request);
  EXPECT_EQ(response.status, 404);
  EXPECT_EQ(Json::parse(response.body)["error"], "content_unavailable");
}

TEST_F(ApiServiceTest, CorsAllowsLocalAndConfiguredOrigins) {
  for (const std::string origin : {"http://localhost:5173", "http://127.0.0.1:8077", "http://localhost",
                                   "https://review.example.org"}) {
    const auto response = get("/api/health", origin);
    EXPECT_EQ(response.headers.at("Access-Control-Allow-Origin"), origin);
    EXPECT_EQ(response.headers.at("Vary"), "Origin");
  }
  for (const std::string origin : {"http://evil.example", "http://localhost.evil.example", "http://localhost:80x",
                                   "https://review.example.org:8443"}) {
    EXPECT_FALSE(get("/api/health", origin).headers.contains("Access-Control-Allow-Origin")) << origin;
  }
}

TEST_F(ApiServiceTest, PreflightAndMethodChecks) {
  ApiRequest preflight;
  preflight.method = "OPTIONS";
  preflight.path = "/api/commits";
  preflight.origin = "http://localhost:3000";
  const auto response = service_->handle(preflight);
  EXPECT_EQ(response.status, 204);
  EXPECT_TRUE(response.body.empty());
  EXPECT_EQ(response.headers.at("Access-Control-Allow-Methods"), "GET, OPTIONS");
  EXPECT_EQ(response.headers.at("Access-Control-Allow-Origin"), "http://localhost:3000");

  for (const std::string method : {"POST", "PUT", "DELETE", "PATCH"}) {
    ApiRequest request;
    request.method = method;
    request.path = "/api/commits";
    const auto rejected = service_->handle(request);
    EXPECT_EQ(rejected.status, 405);
    EXPECT_EQ(rejected.headers.at("Allow"), "GET, HEAD, OPTIONS");
    EXPECT_EQ(Json::parse(rejected.body)["error"], "method_not_allowed");
  }
}

TEST_F(ApiServiceTest, RequestsNeverWriteTheDataset) {
  auto snapshot = [] {
    std::string out;
    std::vector<std::filesystem::path> paths;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(data_->path())) {
      paths.push_back(entry.path());
    }
    std::sort(paths.begin(), paths.end());
    for (const auto& path : paths) {
      out += path.string() + "\n";
      if (std::filesystem::is_regular_file(path)) out += testing::read_file(path);
    }
    return out;
  };
  const auto before = snapshot();
  for (const auto& sha : history_->all()) {
    get("/api/commits/" + sha);
    for (const auto& file : service_->dataset().records.front().files) {
      get(file_url(sha, file.path(), "spectrum?types=addition"));
      get(file_url(sha, file.path(), "content?side=post"));
    }
  }
  EXPECT_EQ(snapshot(), before);
}

TEST(ServerConfig, ValidatesFields) {
  ServerConfig config;
  config.data_dir = "data";
  EXPECT_NO_THROW(config.validate());
  config.port = 70000;
  EXPECT_THROW(config.validate(), Error);
  config.port = 0;
  config.bind_address.clear();
  EXPECT_THROW(config.validate(), Error);
  config.bind_address = "127.0.0.1";
  config.data_dir.clear();
  EXPECT_THROW(config.validate(), Error);
}

}  // namespace
}  // namespace changeprism

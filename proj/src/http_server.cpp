// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#include "changeprism/http_server.hpp"

#include <pthread.h>
#include <signal.h>
#include <sys/socket.h>

#include <iostream>
#include <mutex>
#include <thread>

#include "httplib.h"

#include "changeprism/error.hpp"

namespace changeprism {

struct HttpServer::Impl {
  const ApiService& service;
  ServerConfig config;
  httplib::Server server;
  std::mutex state_mutex;
  bool listening = false;
  bool stop_requested = false;

  Impl(const ApiService& s, const ServerConfig& c) : service(s), config(c) {}

  void dispatch(const httplib::Request& req, httplib::Response& res) const {
    ApiRequest request;
    request.method = req.method;
    request.path = req.target.substr(0, req.target.find('?'));
    for (const auto& [key, value] : req.params) request.query.emplace(key, value);
    request.origin = req.get_header_value("Origin");
    auto response = service.handle(request);
    res.status = response.status;
    for (const auto& [name, value] : response.headers) res.set_header(name, value);
    res.set_content(std::move(response.body), response.content_type);
  }
};

HttpServer::HttpServer(const ApiService& service, const ServerConfig& config)
    : impl_(std::make_unique<Impl>(service, config)) {
  auto& server = impl_->server;
  auto handler = [impl = impl_.get()](const httplib::Request& req, httplib::Response& res) {
    impl->dispatch(req, res);
  };
  server.set_socket_options([](int sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  if (config.ui_dir) server.set_mount_point("/", config.ui_dir->string());
  server.Get(".*", handler);
  server.Options(".*", handler);
  server.Post(".*", handler);
  server.Put(".*", handler);
  server.Patch(".*", handler);
  server.Delete(".*", handler);
}

HttpServer::~HttpServer() = default;

int HttpServer::bind() {
  auto& server = impl_->server;
  const auto& config = impl_->config;
  if (config.port == 0) return server.bind_to_any_port(config.bind_address);
  return server.bind_to_port(config.bind_address, config.port) ? config.port : -1;
}

void HttpServer::listen() {
  {
    std::lock_guard lock(impl_->state_mutex);
    if (impl_->stop_requested) return;
    impl_->listening = true;
  }
  impl_->server.listen_after_bind();
}

void HttpServer::stop() {
  {
    std::lock_guard lock(impl_->state_mutex);
    impl_->stop_requested = true;
    if (!impl_->listening) return;
  }
  impl_->server.wait_until_ready();
  impl_->server.stop();
}

int run_server(const ServerConfig& config) {
  try {
    config.validate();
    auto dataset = load_dataset(config.data_dir);
    std::optional<git::Repository> repo;
    if (config.repo_path) repo = git::Repository::open(*config.repo_path);
    const auto commit_count = dataset.records.size();
    ApiService service(std::move(dataset), std::move(repo), config.cors_origins);

    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);

    HttpServer server(service, config);
    const int port = server.bind();
    if (port < 0) {
      std::cerr << "changeprism: cannot bind " << config.bind_address << ":" << config.port << "\n";
      return 1;
    }
    std::cout << "serving " << commit_count << " commits on http://" << config.bind_address << ":" << port
              << std::endl;
    std::thread waiter([&] {
      int signal = 0;
      sigwait(&signals, &signal);
      server.stop();
    });
    server.listen();
    pthread_kill(waiter.native_handle(), SIGTERM);
    waiter.join();
    return 0;
  } catch (const Error& e) {
    std::cerr << "changeprism: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace changeprism

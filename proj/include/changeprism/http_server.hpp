// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <memory>

#include "changeprism/api_service.hpp"

namespace changeprism {

/// HTTP front end for an ApiService. Binds in start(); stop() may be called
/// from any thread.
class HttpServer {
 public:
  HttpServer(const ApiService& service, const ServerConfig& config);
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds the socket; returns the bound port (useful with port 0), or -1
  /// if binding failed.
  int bind();

  /// Serves until stop(). Requires a successful bind(). Returns at once if
  /// stop() already ran.
  void listen();

  /// Safe to call from any thread, before or during listen().
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Loads the dataset and serves until interrupted. Returns a process exit
/// code: 0 after a clean stop, 1 if the dataset is missing or the port is
/// busy.
int run_server(const ServerConfig& config);

}  // namespace changeprism

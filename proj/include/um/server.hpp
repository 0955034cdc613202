/* Copyright 2026 The Universal Machine Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>

#include "um/session.hpp"

namespace um {

inline constexpr int kDefaultPort = 8080;
inline constexpr std::size_t kMaxFuel = 1000000;

struct HttpRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string content_type;
  std::string body;
};

struct HttpResponse {
  int status = 200;
  std::string content_type = "text/plain; charset=utf-8";
  std::string body;
  std::map<std::string, std::string> headers;
};

// Request handling over a session, independent of the transport. Ingestion
// takes the session exclusively; simplification requests share it.
class Service {
 public:
  Service(Session& session, std::size_t max_fuel = kMaxFuel);
  ~Service();

  HttpResponse handle(const HttpRequest& req);

  // Serves over HTTP until stop() is called. Returns false if the socket
  // cannot be bound.
  bool listen(const std::string& host, int port);
  // Binds an ephemeral port and serves on a background thread; returns the
  // port, or -1 on failure.
  int start_background(const std::string& host);
  void stop();

 private:
  HttpResponse simplify(const HttpRequest& req);
  HttpResponse ingest(const HttpRequest& req);
  HttpResponse list_theories();

  Session& session_;
  std::size_t max_fuel_;
  std::shared_mutex mu_;
  struct Transport;
  std::unique_ptr<Transport> transport_;
};

}  // namespace um

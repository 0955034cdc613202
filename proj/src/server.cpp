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

#include "um/server.hpp"

#include <charconv>
#include <mutex>
#include <thread>

#include <httplib.h>

#include "um/error.hpp"
#include "um/openmath.hpp"

namespace um {

namespace {

constexpr const char* kText = "text/plain; charset=utf-8";
constexpr const char* kOpenMathXml = "application/openmath+xml";

HttpResponse reply(int status, std::string body, const char* type = kText) {
  HttpResponse r;
  r.status = status;
  r.content_type = type;
  r.body = std::move(body);
  if (!r.body.empty() && r.body.back() != '\n' && std::string(type) == kText) r.body += "\n";
  return r;
}

bool is_xml(const std::string& content_type) {
  return content_type.rfind(kOpenMathXml, 0) == 0 || content_type.rfind("application/xml", 0) == 0 ||
         content_type.rfind("text/xml", 0) == 0;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

struct Service::Transport {
  httplib::Server server;
  std::thread thread;
};

Service::Service(Session& session, std::size_t max_fuel)
    : session_(session), max_fuel_(max_fuel), transport_(std::make_unique<Transport>()) {
  auto adapt = [this](const httplib::Request& in, httplib::Response& out) {
    HttpRequest req;
    req.method = in.method;
    req.path = in.path;
    for (const auto& [k, v] : in.params) req.query.emplace(k, v);
    req.content_type = in.get_header_value("Content-Type");
    req.body = in.body;
    HttpResponse r = handle(req);
    out.status = r.status;
    for (const auto& [k, v] : r.headers) out.set_header(k, v);
    out.set_content(r.body, r.content_type);
  };
  auto& s = transport_->server;
  s.Get(".*", adapt);
  s.Post(".*", adapt);
  s.Put(".*", adapt);
  s.Delete(".*", adapt);
}

Service::~Service() { stop(); }

HttpResponse Service::handle(const HttpRequest& req) {
  try {
    if (req.path == "/health") {
      if (req.method != "GET") return reply(405, "method not allowed");
      return reply(200, "ok");
    }
    if (req.path == "/simplify") {
      if (req.method != "POST") return reply(405, "method not allowed");
      std::shared_lock lock(mu_);
      return simplify(req);
    }
    if (req.path == "/theories") {
      if (req.method == "GET") {
        std::shared_lock lock(mu_);
        return list_theories();
      }
      if (req.method == "POST") {
        std::unique_lock lock(mu_);
        return ingest(req);
      }
      return reply(405, "method not allowed");
    }
    return reply(404, "not found");
  } catch (const std::exception& e) {
    return reply(500, e.what());
  }
}

HttpResponse Service::simplify(const HttpRequest& req) {
  auto scope_it = req.query.find("scope");
  if (scope_it == req.query.end() || scope_it->second.empty()) return reply(400, "missing scope parameter");
  std::size_t fuel = session_.fuel();
  if (auto it = req.query.find("fuel"); it != req.query.end()) {
    const std::string& f = it->second;
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
    if (ec != std::errc() || p != f.data() + f.size() || v == 0) return reply(400, "invalid fuel '" + f + "'");
    if (v > max_fuel_) return reply(400, "fuel exceeds the maximum of " + std::to_string(max_fuel_));
    fuel = v;
  }
  ModuleRef scope;
  try {
    scope = session_.resolve_theory(scope_it->second);
  } catch (const ResolveError& e) {
    return reply(404, e.what());
  }
  bool xml = is_xml(req.content_type);
  Term input = Term::integer(0L);
  try {
    input = xml ? decode_xml(req.body, kCdBase) : session_.parse(trim(req.body), scope);
  } catch (const ParseError& e) {
    return reply(400, e.what());
  } catch (const InvalidError& e) {
    return reply(400, e.what());
  }
  SimplifyResult r = session_.simplify(input, fuel);
  HttpResponse out = xml ? reply(200, encode_omobj(r.term), kOpenMathXml)
                         : reply(200, session_.render(r.term, scope));
  if (r.exhausted) out.status = 422;
  out.headers["X-Simplify-Steps"] = std::to_string(r.steps);
  out.headers["X-Simplify-Exhausted"] = r.exhausted ? "true" : "false";
  return out;
}

HttpResponse Service::ingest(const HttpRequest& req) {
  try {
    auto added = session_.ingest(req.body, "<upload>");
    std::string body;
    for (const auto& m : added) body += m.str() + "\n";
    return reply(201, body);
  } catch (const ConflictError& e) {
    return reply(409, e.what());
  } catch (const Error& e) {
    return reply(400, e.what());
  }
}

HttpResponse Service::list_theories() {
  std::string body;
  for (const auto& m : session_.graph().modules()) body += m.str() + "\n";
  return reply(200, body);
}

bool Service::listen(const std::string& host, int port) { return transport_->server.listen(host, port); }

int Service::start_background(const std::string& host) {
  int port = transport_->server.bind_to_any_port(host);
  if (port < 0) return -1;
  transport_->thread = std::thread([this] { transport_->server.listen_after_bind(); });
  transport_->server.wait_until_ready();
  return port;
}

void Service::stop() {
  if (!transport_) return;
  transport_->server.stop();
  if (transport_->thread.joinable()) transport_->thread.join();
}

}  // namespace um

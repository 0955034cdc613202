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

// Command-line frontend over the C interface.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <unistd.h>

#include "CLI11.hpp"
#include "um/um.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitError = 2;

// Owns a session and reports failures on stderr.
class Session {
 public:
  explicit Session(bool load_stdlib) {
    um_status st = um_session_create(load_stdlib ? 1 : 0, &s_);
    if (st != UM_OK) {
      std::cerr << "um: cannot create session: " << um_status_string(st) << "\n";
      s_ = nullptr;
    }
  }
  ~Session() { um_session_destroy(s_); }
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  um_session* get() const { return s_; }
  explicit operator bool() const { return s_ != nullptr; }

  // Prints the session's error for a failed call.
  bool ok(um_status st) const {
    if (st == UM_OK) return true;
    std::cerr << "um: " << um_status_string(st);
    const char* msg = um_session_last_error(s_);
    if (msg && *msg) std::cerr << ": " << msg;
    std::cerr << "\n";
    return false;
  }

 private:
  um_session* s_ = nullptr;
};

std::string take(char* text) {
  std::string out = text ? text : "";
  um_free(text);
  return out;
}

std::optional<std::size_t> env_size(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) return std::nullopt;
  return static_cast<std::size_t>(n);
}

int run_check(const std::string& root) {
  Session s(true);
  if (!s) return kExitError;
  if (!root.empty() && !s.ok(um_session_load_project(s.get(), root.c_str()))) return kExitError;
  char* report = nullptr;
  int errors = 0;
  if (!s.ok(um_check(s.get(), &report, &errors))) return kExitError;
  std::cout << take(report);
  return errors > 0 ? kExitDiagnostics : kExitOk;
}

int run_test(const std::string& root) {
  Session s(true);
  if (!s) return kExitError;
  if (!root.empty() && !s.ok(um_session_load_project(s.get(), root.c_str()))) return kExitError;
  char* report = nullptr;
  int failed = 0;
  if (!s.ok(um_run_tests(s.get(), &report, &failed))) return kExitError;
  std::cout << take(report);
  return failed > 0 ? kExitDiagnostics : kExitOk;
}

int run_simplify(const std::string& expr, const std::string& scope, bool xml, std::size_t fuel,
                 const std::string& project, bool no_stdlib) {
  Session s(!no_stdlib);
  if (!s) return kExitError;
  if (!project.empty() && !s.ok(um_session_load_project(s.get(), project.c_str()))) return kExitError;
  um_format fmt = xml ? UM_FORMAT_XML : UM_FORMAT_TEXT;
  um_result* r = nullptr;
  um_status st = um_simplify(s.get(), expr.c_str(), fmt, scope.empty() ? nullptr : scope.c_str(), fuel, fmt, &r);
  if (st == UM_ERR_EXHAUSTED) {
    std::cout << um_result_text(r) << "\n";
    std::cerr << "um: fuel exhausted after " << um_result_steps(r) << " steps\n";
    um_result_destroy(r);
    return kExitDiagnostics;
  }
  if (!s.ok(st)) return kExitError;
  std::cout << um_result_text(r) << "\n";
  um_result_destroy(r);
  return kExitOk;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

int run_repl(std::string scope, const std::string& project, bool no_stdlib) {
  Session s(!no_stdlib);
  if (!s) return kExitError;
  if (!project.empty() && !s.ok(um_session_load_project(s.get(), project.c_str()))) return kExitError;
  std::size_t fuel = 0;
  std::string line;
  bool tty = isatty(fileno(stdin));
  while (true) {
    if (tty) std::cout << scope << "> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    line = trim(line);
    if (line.empty()) continue;
    if (line == ":quit" || line == ":q") break;
    if (line.rfind(":scope", 0) == 0) {
      std::string arg = trim(line.substr(6));
      if (arg.empty()) std::cout << scope << "\n";
      else scope = arg;
      continue;
    }
    if (line.rfind(":fuel", 0) == 0) {
      std::string arg = trim(line.substr(5));
      char* end = nullptr;
      unsigned long long n = std::strtoull(arg.c_str(), &end, 10);
      if (arg.empty() || *end != '\0' || n == 0) std::cerr << "um: :fuel expects a positive integer\n";
      else fuel = static_cast<std::size_t>(n);
      continue;
    }
    if (line[0] == ':') {
      std::cerr << "um: unknown directive " << line << " (use :scope, :fuel or :quit)\n";
      continue;
    }
    if (scope.empty()) {
      std::cerr << "um: no scope; set one with :scope <theory>\n";
      continue;
    }
    um_result* r = nullptr;
    um_status st = um_simplify(s.get(), line.c_str(), UM_FORMAT_TEXT, scope.c_str(), fuel, UM_FORMAT_TEXT, &r);
    if (st == UM_ERR_EXHAUSTED) {
      std::cout << um_result_text(r) << "\n";
      std::cerr << "um: fuel exhausted after " << um_result_steps(r) << " steps\n";
    } else if (s.ok(st)) {
      std::cout << um_result_text(r) << "\n";
    }
    um_result_destroy(r);
  }
  return kExitOk;
}

int run_serve(int port, const std::string& host, const std::string& project, bool no_stdlib) {
  Session s(!no_stdlib);
  if (!s) return kExitError;
  if (!project.empty() && !s.ok(um_session_load_project(s.get(), project.c_str()))) return kExitError;
  if (auto f = env_size("UM_FUEL"); f && !s.ok(um_session_set_fuel(s.get(), *f))) return kExitError;
  std::cerr << "um: serving on " << host << ":" << port << "\n";
  return s.ok(um_serve(s.get(), host.c_str(), port, 0)) ? kExitOk : kExitError;
}

int run_files(const std::string& root, bool integrate) {
  Session s(true);
  if (!s) return kExitError;
  if (!s.ok(um_session_load_project(s.get(), root.c_str()))) return kExitError;
  char* files = nullptr;
  um_status st = integrate ? um_integrate(s.get(), root.c_str(), &files) : um_extract(s.get(), root.c_str(), &files);
  if (!s.ok(st)) return kExitError;
  std::cout << take(files);
  return kExitOk;
}

int run_load(const std::string& root, const std::string& report_file) {
  Session s(true);
  if (!s) return kExitError;
  if (!s.ok(um_session_load_project(s.get(), root.c_str()))) return kExitError;
  char* report = nullptr;
  int failed = 0;
  if (!s.ok(um_load_report(s.get(), &report, &failed))) return kExitError;
  std::string text = take(report);
  if (report_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(report_file, std::ios::binary);
    out << text;
    if (!out) {
      std::cerr << "um: cannot write " << report_file << "\n";
      return kExitError;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Theory graph of content dictionaries with native realizations"};
  app.set_version_flag("--version", std::string(um_version()));
  app.require_subcommand(1);

  std::string root, expr, scope, project, report_file, host = "0.0.0.0";
  bool xml = false, no_stdlib = false;
  std::size_t fuel = 0;
  int port = env_size("UM_PORT").value_or(8080);

  auto* check = app.add_subcommand("check", "Lint theories and check view totality");
  check->add_option("root", root, "Project root holding source/");
  auto* test = app.add_subcommand("test", "Run the FMP tests of the loaded graph");
  test->add_option("root", root, "Project root holding source/");
  auto* simplify = app.add_subcommand("simplify", "Simplify one expression");
  simplify->add_option("-e,--expr", expr, "Expression in notation, or OpenMath XML with --xml")->required();
  simplify->add_option("--scope", scope, "Theory whose notations are used");
  simplify->add_flag("--xml", xml, "Read and write OpenMath XML");
  simplify->add_option("--fuel", fuel, "Rewrite step budget")->check(CLI::PositiveNumber);
  simplify->add_option("--project", project, "Project root to load first");
  simplify->add_flag("--no-stdlib", no_stdlib, "Skip the bundled library");
  auto* repl = app.add_subcommand("repl", "Read, simplify and print expressions");
  repl->add_option("--scope", scope, "Initial theory scope");
  repl->add_option("--project", project, "Project root to load first");
  repl->add_flag("--no-stdlib", no_stdlib, "Skip the bundled library");
  auto* serve = app.add_subcommand("serve", "Serve the HTTP interface");
  serve->add_option("--port", port, "TCP port (default UM_PORT or 8080)")->check(CLI::Range(0, 65535));
  serve->add_option("--host", host, "Address to bind");
  serve->add_option("--project", project, "Project root to load first");
  serve->add_flag("--no-stdlib", no_stdlib, "Skip the bundled library");
  auto* extract = app.add_subcommand("extract", "Write stub files for the project realizations");
  extract->add_option("root", root, "Project root")->required();
  auto* integrate = app.add_subcommand("integrate", "Merge edited stubs back into the sources");
  integrate->add_option("root", root, "Project root")->required();
  auto* load = app.add_subcommand("load", "Bind realizations and report rules and tests");
  load->add_option("root", root, "Project root")->required();
  load->add_option("--report", report_file, "Write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  if (*check) return run_check(root);
  if (*test) return run_test(root);
  if (*simplify) {
    if (scope.empty() && !xml) {
      std::cerr << "um: --scope is required for notation input\n";
      return kExitError;
    }
    return run_simplify(expr, scope, xml, fuel, project, no_stdlib);
  }
  if (*repl) return run_repl(scope, project, no_stdlib);
  if (*serve) return run_serve(port, host, project, no_stdlib);
  if (*extract) return run_files(root, false);
  if (*integrate) return run_files(root, true);
  if (*load) return run_load(root, report_file);
  return kExitError;
}

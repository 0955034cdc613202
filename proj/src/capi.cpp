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

#include "um/um.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "um/codegen.hpp"
#include "um/error.hpp"
#include "um/openmath.hpp"
#include "um/server.hpp"
#include "um/session.hpp"

struct um_session {
  std::unique_ptr<um::Session> session;
  std::string last_error;
  bool has_project = false;
};

struct um_result {
  std::string text;
  size_t steps = 0;
  bool exhausted = false;
};

namespace {

char* copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs `f`, translating exceptions into status codes and the session's
// last error.
template <typename F>
um_status guarded(um_session* s, F&& f) {
  if (!s) return UM_ERR_ARGUMENT;
  s->last_error.clear();
  try {
    return f();
  } catch (const um::ParseError& e) {
    s->last_error = e.what();
    return UM_ERR_PARSE;
  } catch (const um::ResolveError& e) {
    s->last_error = e.what();
    return UM_ERR_NOT_FOUND;
  } catch (const um::ConflictError& e) {
    s->last_error = e.what();
    return UM_ERR_CONFLICT;
  } catch (const um::InvalidError& e) {
    s->last_error = e.what();
    return UM_ERR_INVALID;
  } catch (const um::Error& e) {
    s->last_error = e.what();
    return UM_ERR_IO;
  } catch (const std::filesystem::filesystem_error& e) {
    s->last_error = e.what();
    return UM_ERR_IO;
  } catch (const std::exception& e) {
    s->last_error = e.what();
    return UM_ERR_INTERNAL;
  } catch (...) {
    s->last_error = "unknown failure";
    return UM_ERR_INTERNAL;
  }
}

std::string join_paths(const std::vector<std::filesystem::path>& ps) {
  std::string out;
  for (const auto& p : ps) out += p.string() + "\n";
  return out;
}

}  // namespace

extern "C" {

const char* um_version(void) { return "1.0.0"; }

const char* um_status_string(um_status status) {
  switch (status) {
    case UM_OK: return "ok";
    case UM_ERR_PARSE: return "parse error";
    case UM_ERR_NOT_FOUND: return "not found";
    case UM_ERR_CONFLICT: return "conflict";
    case UM_ERR_INVALID: return "invalid";
    case UM_ERR_IO: return "i/o error";
    case UM_ERR_EXHAUSTED: return "fuel exhausted";
    case UM_ERR_INTERNAL: return "internal error";
    case UM_ERR_ARGUMENT: return "invalid argument";
  }
  return "unknown status";
}

void um_free(char* text) { std::free(text); }

um_status um_session_create(int load_stdlib, um_session** out) {
  if (!out) return UM_ERR_ARGUMENT;
  *out = nullptr;
  auto s = std::make_unique<um_session>();
  um_status st = guarded(s.get(), [&] {
    s->session = std::make_unique<um::Session>(load_stdlib != 0);
    return UM_OK;
  });
  if (st != UM_OK) return st;
  *out = s.release();
  return UM_OK;
}

void um_session_destroy(um_session* session) { delete session; }

const char* um_session_last_error(const um_session* session) {
  return session ? session->last_error.c_str() : "";
}

um_status um_session_load_project(um_session* s, const char* root) {
  return guarded(s, [&] {
    if (!root) return UM_ERR_ARGUMENT;
    s->session->load_project(root);
    s->has_project = true;
    return UM_OK;
  });
}

um_status um_session_add_source(um_session* s, const char* text, const char* name) {
  return guarded(s, [&] {
    if (!text) return UM_ERR_ARGUMENT;
    s->session->add_source(text, name ? name : "<source>");
    s->has_project = true;
    return UM_OK;
  });
}

um_status um_session_ingest_omdoc(um_session* s, const char* xml, const char* name) {
  return guarded(s, [&] {
    if (!xml) return UM_ERR_ARGUMENT;
    s->session->ingest(xml, name ? name : "<omdoc>");
    s->has_project = true;
    return UM_OK;
  });
}

um_status um_session_set_fuel(um_session* s, size_t fuel) {
  return guarded(s, [&] {
    if (fuel == 0) return UM_ERR_ARGUMENT;
    s->session->set_fuel(fuel);
    return UM_OK;
  });
}

um_status um_simplify(um_session* s, const char* input, um_format in_format, const char* scope, size_t fuel,
                      um_format out_format, um_result** out) {
  return guarded(s, [&] {
    if (!input || !out) return UM_ERR_ARGUMENT;
    *out = nullptr;
    bool text_in = in_format == UM_FORMAT_TEXT, text_out = out_format == UM_FORMAT_TEXT;
    if ((text_in || text_out) && !scope) return UM_ERR_ARGUMENT;
    um::Session& session = *s->session;
    std::optional<um::ModuleRef> theory;
    if (scope) theory = session.resolve_theory(scope);
    um::Term t = text_in ? session.parse(input, *theory) : um::decode_xml(input, um::kCdBase);
    um::SimplifyResult r = session.simplify(t, fuel ? fuel : session.fuel());
    auto res = std::make_unique<um_result>();
    res->text = text_out ? session.render(r.term, *theory) : um::encode_omobj(r.term);
    res->steps = r.steps;
    res->exhausted = r.exhausted;
    *out = res.release();
    if (r.exhausted) {
      s->last_error = "fuel exhausted after " + std::to_string(r.steps) + " steps";
      return UM_ERR_EXHAUSTED;
    }
    return UM_OK;
  });
}

const char* um_result_text(const um_result* r) { return r ? r->text.c_str() : ""; }
size_t um_result_steps(const um_result* r) { return r ? r->steps : 0; }
int um_result_exhausted(const um_result* r) { return r && r->exhausted ? 1 : 0; }
void um_result_destroy(um_result* r) { delete r; }

um_status um_check(um_session* s, char** report, int* errors) {
  return guarded(s, [&] {
    if (!report || !errors) return UM_ERR_ARGUMENT;
    um::Session& session = *s->session;
    const auto& modules = s->has_project ? session.project_modules() : session.stdlib_modules();
    std::string out;
    int n = 0;
    for (const auto& d : session.check(modules)) {
      out += d.str() + "\n";
      if (d.severity == "error") ++n;
    }
    *report = copy(out);
    *errors = n;
    return UM_OK;
  });
}

um_status um_run_tests(um_session* s, char** report, int* failed) {
  return guarded(s, [&] {
    if (!report || !failed) return UM_ERR_ARGUMENT;
    um::Session& session = *s->session;
    auto r = um::run_tests(session.graph(), session.rules(), um::collect_tests(session.graph()), session.fuel());
    *report = copy(r.str());
    *failed = static_cast<int>(r.results.size() - r.passed);
    return UM_OK;
  });
}

um_status um_load_report(um_session* s, char** report, int* failed) {
  return guarded(s, [&] {
    if (!report || !failed) return UM_ERR_ARGUMENT;
    um::Session& session = *s->session;
    auto r = um::run_tests(session.graph(), session.rules(), um::collect_tests(session.graph()), session.fuel());
    *report = copy(um::load_report(session));
    *failed = static_cast<int>(r.results.size() - r.passed);
    return UM_OK;
  });
}

um_status um_extract(um_session* s, const char* root, char** files) {
  return guarded(s, [&] {
    if (!root || !files) return UM_ERR_ARGUMENT;
    *files = copy(join_paths(um::extract(*s->session, root)));
    return UM_OK;
  });
}

um_status um_integrate(um_session* s, const char* root, char** files) {
  return guarded(s, [&] {
    if (!root || !files) return UM_ERR_ARGUMENT;
    *files = copy(join_paths(um::integrate(*s->session, root)));
    return UM_OK;
  });
}

um_status um_serve(um_session* s, const char* host, int port, size_t max_fuel) {
  return guarded(s, [&] {
    if (port < 0 || port > 65535) return UM_ERR_ARGUMENT;
    um::Service service(*s->session, max_fuel ? max_fuel : um::kMaxFuel);
    if (!service.listen(host ? host : "0.0.0.0", port)) {
      s->last_error = "cannot listen on port " + std::to_string(port);
      return UM_ERR_IO;
    }
    return UM_OK;
  });
}

}  // extern "C"

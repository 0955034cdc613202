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

#include <string>

#include "doctest.h"
#include "um/um.h"

namespace {

struct SessionGuard {
  um_session* s = nullptr;
  explicit SessionGuard(int stdlib) { REQUIRE(um_session_create(stdlib, &s) == UM_OK); }
  ~SessionGuard() { um_session_destroy(s); }
};

std::string take(char* p) {
  std::string out = p ? p : "";
  um_free(p);
  return out;
}

}  // namespace

TEST_CASE("version and status strings") {
  CHECK(std::string(um_version()).size() > 0);
  CHECK(std::string(um_status_string(UM_OK)) == "ok");
  CHECK(std::string(um_status_string(UM_ERR_EXHAUSTED)) == "fuel exhausted");
}

TEST_CASE("simplify through the C interface") {
  SessionGuard g(1);
  um_result* r = nullptr;
  REQUIRE(um_simplify(g.s, "1+2*3", UM_FORMAT_TEXT, "arith1", 0, UM_FORMAT_TEXT, &r) == UM_OK);
  CHECK(std::string(um_result_text(r)) == "7");
  CHECK(um_result_steps(r) == 2);
  CHECK(um_result_exhausted(r) == 0);
  um_result_destroy(r);

  REQUIRE(um_simplify(g.s, "1+2*3", UM_FORMAT_TEXT, "arith1", 0, UM_FORMAT_XML, &r) == UM_OK);
  std::string xml = um_result_text(r);
  CHECK(xml.find("<OMI>7</OMI>") != std::string::npos);
  um_result_destroy(r);

  REQUIRE(um_simplify(g.s, xml.c_str(), UM_FORMAT_XML, nullptr, 0, UM_FORMAT_XML, &r) == UM_OK);
  um_result_destroy(r);
}

TEST_CASE("errors map to status codes") {
  SessionGuard g(1);
  um_result* r = nullptr;
  CHECK(um_simplify(g.s, "1+", UM_FORMAT_TEXT, "arith1", 0, UM_FORMAT_TEXT, &r) == UM_ERR_PARSE);
  CHECK(std::string(um_session_last_error(g.s)).find("1:") != std::string::npos);
  CHECK(r == nullptr);
  CHECK(um_simplify(g.s, "1", UM_FORMAT_TEXT, "nope", 0, UM_FORMAT_TEXT, &r) == UM_ERR_NOT_FOUND);
  CHECK(um_simplify(g.s, "1", UM_FORMAT_TEXT, nullptr, 0, UM_FORMAT_TEXT, &r) == UM_ERR_ARGUMENT);
  CHECK(um_simplify(nullptr, "1", UM_FORMAT_TEXT, "arith1", 0, UM_FORMAT_TEXT, &r) == UM_ERR_ARGUMENT);
  CHECK(um_session_load_project(g.s, "/nonexistent/project") == UM_ERR_IO);
  CHECK(um_session_add_source(g.s, "namespace urn:x\ntheory T : Missing\n", "x.mmt") == UM_ERR_NOT_FOUND);
  CHECK(um_session_ingest_omdoc(g.s, "<omdoc", "x.omdoc") == UM_ERR_PARSE);
  CHECK(um_session_set_fuel(g.s, 0) == UM_ERR_ARGUMENT);
}

TEST_CASE("exhaustion keeps the partial result") {
  SessionGuard g(1);
  um_result* r = nullptr;
  REQUIRE(um_simplify(g.s, "1+2*3", UM_FORMAT_TEXT, "arith1", 1, UM_FORMAT_TEXT, &r) == UM_ERR_EXHAUSTED);
  REQUIRE(r);
  CHECK(std::string(um_result_text(r)) == "1+6");
  CHECK(um_result_exhausted(r) == 1);
  um_result_destroy(r);
}

TEST_CASE("check, tests and load report") {
  SessionGuard g(1);
  char* report = nullptr;
  int count = -1;
  REQUIRE(um_check(g.s, &report, &count) == UM_OK);
  CHECK(take(report).empty());
  CHECK(count == 0);
  REQUIRE(um_run_tests(g.s, &report, &count) == UM_OK);
  CHECK(take(report).find("passed 14/14") != std::string::npos);
  CHECK(count == 0);

  REQUIRE(um_session_load_project(g.s, UM_FIXTURES_DIR "/partial_arith") == UM_OK);
  REQUIRE(um_check(g.s, &report, &count) == UM_OK);
  std::string diags = take(report);
  CHECK(count == 1);
  CHECK(diags.find("arith1?plus") != std::string::npos);
  REQUIRE(um_load_report(g.s, &report, &count) == UM_OK);
  CHECK(take(report).find("unimplemented arith1?plus") != std::string::npos);
}

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

#include "doctest.h"
#include "support/temp_dir.hpp"
#include "um/codegen.hpp"
#include "um/error.hpp"
#include "um/session.hpp"
#include "um/stdlib.hpp"

using namespace um;
namespace fs = std::filesystem;

namespace {

std::map<fs::path, std::string> snapshot(const fs::path& dir) {
  std::map<fs::path, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file()) out[fs::relative(e.path(), dir)] = testing::read_file(e.path());
  return out;
}

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
  auto p = s.find(from);
  REQUIRE(p != std::string::npos);
  return s.replace(p, from.size(), to);
}

}  // namespace

TEST_CASE("stub files carry one region per realized constant") {
  Session s(true);
  std::string stub = stub_source(s.graph(), ModuleRef(kStdlibBase, "NumberArith"));
  CHECK(stub.find("struct NumberArith {") != std::string::npos);
  CHECK(stub.find("std::optional<Term> arith1_plus(std::span<const Term> args) {") != std::string::npos);
  CHECK(stub.find("std::optional<Term> arith1_minus(const Term& a, const Term& b) {") != std::string::npos);
  auto regions = read_regions(stub, "NumberArith.cpp");
  REQUIRE(regions.size() == 5);
  CHECK(regions[0].view == "NumberArith");
  CHECK(regions[0].constant == "plus");
  CHECK(regions[0].text == s.graph().view(ModuleRef(kStdlibBase, "NumberArith"))->find("plus")->value.foreign_content());
}

TEST_CASE("malformed markers are reported with the marker name") {
  auto fails_with = [](const std::string& text, const std::string& needle) {
    try {
      read_regions(text, "x.cpp");
    } catch (const ParseError& e) {
      CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos, e.what());
      return;
    }
    FAIL("expected a parse error for: " << text);
  };
  fails_with("// start V?a\n", "start V?a");
  fails_with("// end V?a\n", "end V?a");
  fails_with("// start V?a\n// start V?b\n// end V?b\n// end V?a\n", "start V?b");
  fails_with("// start V?a\n// end V?a\n// start V?a\n// end V?a\n", "start V?a");
  fails_with("// start V?a\n// end V?b\n", "end V?b");
  fails_with("// start nothing\n", "nothing");
}

TEST_CASE("integrate after extract changes nothing") {
  testing::TempDir dir;
  testing::copy_tree(UM_STDLIB_ROOT, dir.path());
  auto before = snapshot(dir.path() / "source");
  Session s(true);
  s.load_project(dir.path());
  auto files = extract(s, dir.path());
  CHECK(files.size() == 8);
  CHECK(integrate(s, dir.path()).empty());
  CHECK(snapshot(dir.path() / "source") == before);
}

TEST_CASE("edits inside regions survive integrate and a fresh extract") {
  testing::TempDir dir;
  testing::copy_tree(UM_STDLIB_ROOT, dir.path());
  {
    Session s(true);
    s.load_project(dir.path());
    extract(s, dir.path());
  }
  fs::path stub = dir.path() / "generated" / "NumberArith.cpp";
  std::string edited_body = "    // edited: \"quoted\" and \\ backslash\n    return std::nullopt;";
  std::string text = testing::read_file(stub);
  auto regions = read_regions(text, stub.string());
  std::string original = regions[1].text;
  testing::write_file(stub, replace_once(text, original + "\n    // end NumberArith?minus",
                                         edited_body + "\n    // end NumberArith?minus"));
  {
    Session s(true);
    s.load_project(dir.path());
    auto changed = integrate(s, dir.path());
    REQUIRE(changed.size() == 1);
    CHECK(fs::path(changed[0]).filename() == "realizations.mmt");
  }
  Session s(true);
  s.load_project(dir.path());
  const Assignment* minus = s.graph().view(ModuleRef(kStdlibBase, "NumberArith"))->find("minus");
  REQUIRE(minus);
  CHECK(minus->value.foreign_content() == edited_body);
  extract(s, dir.path());
  auto again = read_regions(testing::read_file(stub), stub.string());
  CHECK(again[1].text == edited_body);
  CHECK(again[0].text == regions[0].text);
}

TEST_CASE("regions for unassigned constants become new assignments") {
  testing::TempDir dir;
  testing::write_file(dir.path() / "source" / "impl.mmt", R"(namespace urn:um:test

theory Pair : OpenMath
  first : Object × Object → Object
  second : Object × Object → Object

view PairImpl : Pair -> Computation
  first = (a: Term, b: Term) "return a;"

theory After : OpenMath
  c : Object
)");
  {
    Session s(true);
    s.load_project(dir.path());
    auto files = extract(s, dir.path());
    REQUIRE(files.size() == 1);
    std::string text = testing::read_file(files[0]);
    CHECK(text.find("// start PairImpl?second\n    // end PairImpl?second") != std::string::npos);
    testing::write_file(files[0], replace_once(text, "// start PairImpl?second\n",
                                               "// start PairImpl?second\n    return b;\n"));
    CHECK(integrate(s, dir.path()).size() == 1);
  }
  Session s(true);
  s.load_project(dir.path());
  const View* v = s.graph().view(ModuleRef("urn:um:test", "PairImpl"));
  REQUIRE(v);
  const Assignment* second = v->find("second");
  REQUIRE(second);
  CHECK(second->value.foreign_content() == "    return b;");
  REQUIRE(second->params);
  CHECK(second->params->size() == 2);
  CHECK(s.graph().theory(ModuleRef("urn:um:test", "After")));
}

TEST_CASE("regions naming unknown views are rejected") {
  testing::TempDir dir;
  testing::copy_tree(UM_FIXTURES_DIR "/partial_arith", dir.path());
  testing::write_file(dir.path() / "generated" / "Ghost.cpp", "// start Ghost?x\n// end Ghost?x\n");
  Session s(true);
  s.load_project(dir.path());
  CHECK_THROWS_AS(integrate(s, dir.path()), ResolveError);
}

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
#include "um/builtins.hpp"
#include "um/error.hpp"
#include "um/surface.hpp"
#include "um/theory_graph.hpp"

using namespace um;

namespace {

TheoryGraph base_graph() {
  TheoryGraph g;
  add_builtins(g);
  return g;
}

ModuleRef ref(const char* name) { return ModuleRef("urn:um:test", name); }

}  // namespace

TEST_CASE("modules may reference each other across files in any order") {
  TheoryGraph g = base_graph();
  auto added = parse_modules({{"b.mmt", "namespace urn:um:test\ntheory B : OpenMath\n  include A\n  g : Object\n"},
                              {"a.mmt", "namespace urn:um:test\ntheory A : OpenMath\n  f : Object\n"}},
                             g);
  REQUIRE(added.size() == 2);
  CHECK(added[0] == ref("A"));
  CHECK(added[1] == ref("B"));
  CHECK(g.flatten(ref("B")).size() == 2);
}

TEST_CASE("default base applies before any namespace directive") {
  TheoryGraph g = base_graph();
  parse_modules({{"x.mmt", "theory T : OpenMath\n  c : Object\n"}}, g);
  CHECK(g.theory(ModuleRef("urn:um:local", "T")));
}

TEST_CASE("types, definitions and notations of constants") {
  TheoryGraph g = base_graph();
  parse_modules({{"t.mmt", R"(namespace urn:um:test
theory T : OpenMath
  // comment lines are ignored
  f : Object × Object → Object
    # 1 ⊕ 2 prec=50
  c : Object
  d : Object = c ⊕ c
)"}},
                g);
  const Theory* t = g.theory(ref("T"));
  REQUIRE(t);
  const Constant* f = t->find("f");
  REQUIRE(f);
  REQUIRE(f->notation);
  CHECK(f->notation->precedence == 50);
  CHECK(f->type->app_head_name()->name == "mapsto");
  CHECK(f->loc.line == 4);
  const Constant* d = t->find("d");
  REQUIRE(d->definiens);
  CHECK(*d->definiens == Term::app(Term::constant(GlobalName(ref("T"), "f")),
                                   {Term::constant(GlobalName(ref("T"), "c")),
                                    Term::constant(GlobalName(ref("T"), "c"))}));
}

TEST_CASE("FMP juxtaposition wraps the formula") {
  TheoryGraph g = base_graph();
  parse_modules({{"t.mmt", "namespace urn:um:test\ntheory T : OpenMath\n  c : Object\n  law = FMP c\n"}}, g);
  const Constant* law = g.theory(ref("T"))->find("law");
  REQUIRE(law->definiens);
  CHECK(*law->definiens ==
        Term::app(Term::constant(openmath_symbol("FMP")), {Term::constant(GlobalName(ref("T"), "c"))}));
}

TEST_CASE("views with escaped snippets, parameter lists and multi-line headers") {
  TheoryGraph g = base_graph();
  std::string src = R"(namespace urn:um:test
theory T : OpenMath
  f : Object × Object → Object
  c : Object
view Impl : T
    -> Computation
  f = (a: Term, b: Term) "return a;"
  c = () "
  "
)";
  parse_modules({{"v.mmt", src}}, g);
  const View* v = g.view(ref("Impl"));
  REQUIRE(v);
  CHECK(v->to == computation_theory());
  const Assignment* f = v->find("f");
  REQUIRE(f);
  CHECK(f->escaped());
  CHECK(f->value.foreign_content() == "return a;");
  REQUIRE(f->params);
  CHECK(f->params->size() == 2);
  REQUIRE(f->snippet_span);
  CHECK(src.substr(f->snippet_span->first, f->snippet_span->second - f->snippet_span->first) ==
        "\"return a;\"");
  CHECK(v->find("c")->blank());
  // Just before the block's final newline, where insertions go.
  CHECK(v->end_offset == src.size() - 1);
  auto missing = g.check_view(ref("Impl"));
  REQUIRE(missing.size() == 1);
  CHECK(missing[0].name == "c");
}

TEST_CASE("snippet escaping round-trips") {
  for (std::string s : {"", "plain", "with \"quotes\"", "back\\slash", "multi\nline\n"}) {
    std::string q = escape_snippet(s);
    CHECK(unescape_snippet(q) == s);
  }
}

TEST_CASE("errors name file and line") {
  TheoryGraph g = base_graph();
  try {
    parse_modules({{"bad.mmt", "namespace urn:um:test\ntheory T : OpenMath\n  c : Object\n  d : Object = c +\n"}}, g);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.file() == "bad.mmt");
    CHECK(e.line() == 4);
  }
  CHECK_FALSE(g.theory(ref("T")));
}

TEST_CASE("unknown references and names fail") {
  TheoryGraph g = base_graph();
  CHECK_THROWS_AS(parse_modules({{"x.mmt", "namespace urn:um:test\ntheory T : Missing\n"}}, g), ResolveError);
  CHECK_THROWS(parse_modules({{"x.mmt", "namespace urn:um:test\ntheory T : OpenMath\n  c : Object\n"
                                        "view V : T -> Computation\n  nope = \"x\"\n"}},
                             g));
  CHECK_THROWS(parse_modules({{"x.mmt", "namespace urn:um:test\ntheory T : OpenMath\n  c : Object\n"
                                        "view V : T -> Computation\n  c = \"x\"\n  c = \"y\"\n"}},
                             g));
  CHECK(g.size() == base_graph().size());
}

TEST_CASE("redefinition conflicts unless replacement is allowed") {
  TheoryGraph g = base_graph();
  const char* src = "namespace urn:um:test\ntheory T : OpenMath\n  c : Object\n";
  parse_modules({{"a.mmt", src}}, g);
  CHECK_THROWS_AS(parse_modules({{"a.mmt", src}}, g), ConflictError);
  SurfaceOptions opts;
  opts.may_replace = [](const ModuleRef& m) { return m.name == "T"; };
  CHECK_NOTHROW(parse_modules({{"a.mmt", "namespace urn:um:test\ntheory T : OpenMath\n  e : Object\n"}}, g, opts));
  CHECK(g.theory(ref("T"))->find("e"));
}

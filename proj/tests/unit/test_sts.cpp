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
#include "um/session.hpp"
#include "um/stdlib.hpp"
#include "um/sts.hpp"

using namespace um;

namespace {

Term om(const char* name) { return Term::constant(openmath_symbol(name)); }

Term arrow(std::vector<Term> parts) { return Term::app(om("mapsto"), std::move(parts)); }

}  // namespace

TEST_CASE("arity of well-formed types") {
  CHECK(arity_of(om("Object")) == Arity::fixed(0));
  CHECK(arity_of(om("binder")) == Arity::binder());
  CHECK(arity_of(arrow({om("Object"), om("Object")})) == Arity::fixed(1));
  CHECK(arity_of(arrow({om("Object"), om("Object"), om("Object")})) == Arity::fixed(2));
  CHECK(arity_of(arrow({om("naryObject"), om("Object")})) == Arity::flexible(0));
  CHECK(arity_of(arrow({om("Object"), om("naryObject"), om("Object")})) == Arity::flexible(1));
}

TEST_CASE("ill-formed types") {
  CHECK_FALSE(well_formed_type(om("naryObject")));
  CHECK_FALSE(well_formed_type(arrow({om("naryObject"), om("Object"), om("Object")})));
  CHECK_FALSE(well_formed_type(arrow({om("Object"), om("naryObject")})));
  CHECK_FALSE(well_formed_type(Term::integer(1)));
  CHECK_THROWS_AS(arity_of(om("naryObject")), InvalidError);
}

TEST_CASE("arity admission") {
  CHECK(Arity::fixed(2).admits(2));
  CHECK_FALSE(Arity::fixed(2).admits(3));
  CHECK(Arity::flexible(1).admits(1));
  CHECK(Arity::flexible(1).admits(5));
  CHECK_FALSE(Arity::flexible(1).admits(0));
  CHECK(Arity::fixed(2).str() == "Fixed 2");
  CHECK(Arity::flexible(0).str() == "Flexible 0");
  CHECK(Arity::binder().str() == "Binder");
}

TEST_CASE("shipped CD types") {
  Session s(true);
  auto type_of = [&](const char* cd, const char* name) {
    const Constant* c = s.graph().constant(cd_symbol(cd, name));
    REQUIRE(c);
    REQUIRE(c->type);
    return arity_of(*c->type);
  };
  CHECK(type_of("arith1", "plus") == Arity::flexible(0));
  CHECK(type_of("arith1", "minus") == Arity::fixed(2));
  CHECK(type_of("fns1", "lambda") == Arity::binder());
  CHECK(type_of("logic1", "true") == Arity::fixed(0));
}

TEST_CASE("lint flags arity violations and ill-formed types") {
  Session s(true);
  s.add_source(R"(namespace urn:um:test
theory Bad : OpenMath
  include arith1
  odd : naryObject
  wrong : Object = minus(1, 2, 3)
  fine : Object = minus(1, 2)
)",
               "bad.mmt");
  auto diags = lint_theory(s.graph(), ModuleRef("urn:um:test", "Bad"));
  REQUIRE(diags.size() == 2);
  CHECK(diags[0].constant.name == "odd");
  CHECK(diags[1].constant.name == "wrong");
  CHECK(diags[1].str().rfind("error bad.mmt:5 Bad?wrong", 0) == 0);
}

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
#include "support/generators.hpp"
#include "um/error.hpp"
#include "um/notation.hpp"
#include "um/session.hpp"
#include "um/stdlib.hpp"

using namespace um;

namespace {

Term sym(const char* cd, const char* name) { return Term::constant(cd_symbol(cd, name)); }

// Session with the round-trip theory, shared by the tests of this file.
const Session& session() {
  static Session* s = [] {
    auto* out = new Session(true);
    out->add_source(testing::roundtrip_theory_source(), "roundtrip.mmt");
    return out;
  }();
  return *s;
}

const ParseScope& scope() {
  static ParseScope sc = session().scope(ModuleRef("urn:um:test", "RoundTrip"));
  return sc;
}

}  // namespace

TEST_CASE("notation syntax") {
  Notation n = parse_notation("1+... prec=50");
  CHECK(n.precedence == 50);
  CHECK(n.has_seq());
  CHECK(n.fixed_args() == 0);
  CHECK_FALSE(n.is_binder());

  Notation m = parse_notation("1 - 2 prec=50");
  CHECK(m.fixed_args() == 2);
  REQUIRE(m.tokens.size() == 3);
  CHECK(m.tokens[1].kind == NotationToken::Kind::Delim);
  CHECK(m.tokens[1].text == "-");

  Notation b = parse_notation("V ↦ 2 prec=10");
  CHECK(b.is_binder());

  Notation s = parse_notation("{ 1,... }");
  CHECK(s.delimited());
  CHECK(parse_notation(s.str()) == s);
  CHECK(parse_notation(m.str()) == m);
  CHECK_THROWS_AS(parse_notation(""), InvalidError);
}

TEST_CASE("precedence and associativity") {
  Term t = parse_term("1+2*3", scope());
  CHECK(t == Term::app(sym("arith1", "plus"),
                       {Term::integer(1), Term::app(sym("arith1", "times"), {Term::integer(2), Term::integer(3)})}));
  CHECK(parse_term("(1+2)*3", scope()).app_head_name()->name == "times");
  CHECK(parse_term("1+2+3", scope()).args().size() == 3);
  Term d = parse_term("10-3-2", scope());
  CHECK(d.args()[0].app_head_name()->name == "minus");
  CHECK(parse_term("2^3", scope()).app_head_name()->name == "power");
  CHECK(parse_term("5!", scope()) == Term::app(sym("integer1", "factorial"), {Term::integer(5)}));
}

TEST_CASE("negative literals and unary minus") {
  CHECK(parse_term("-5", scope()) == Term::integer(-5));
  CHECK(parse_term("- 5", scope()) == Term::app(sym("arith1", "unary_minus"), {Term::integer(5)}));
  CHECK(parse_term("-(2+3)", scope()).app_head_name()->name == "unary_minus");
  Term um5 = Term::app(sym("arith1", "unary_minus"), {Term::integer(5)});
  CHECK(parse_term(render_term(um5, scope()), scope()) == um5);
}

TEST_CASE("sets, binders and the map formula") {
  Term t = parse_term("{0,1,2} map (x ↦ -x*x+2*x+3) = {3,4}", scope());
  REQUIRE(t.app_head_name());
  CHECK(*t.app_head_name() == cd_symbol("relation1", "eq"));
  Term map = t.args()[0];
  CHECK(*map.app_head_name() == cd_symbol("set1", "map"));
  // The function comes first in the OpenMath argument order.
  CHECK(map.args()[0].kind() == TermKind::Bind);
  CHECK(map.args()[0].context() == Context{"x"});
  CHECK(*map.args()[1].app_head_name() == cd_symbol("set1", "set"));
}

TEST_CASE("qualified names and fallback application syntax") {
  CHECK(parse_term("arith1?plus(1,2)", scope()) ==
        Term::app(sym("arith1", "plus"), {Term::integer(1), Term::integer(2)}));
  CHECK(parse_term("`http://www.openmath.org/cd?arith1?plus`(1)", scope()) ==
        Term::app(sym("arith1", "plus"), {Term::integer(1)}));
  CHECK(parse_term("true", scope()) == sym("logic1", "true"));
  CHECK(parse_term("\"hi\"", scope()) == Term::string("hi"));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_term("1+", scope());
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() >= 2);
  }
  CHECK_THROWS_AS(parse_term("(1+2", scope()), ParseError);
  CHECK_THROWS_AS(parse_term("1 2", scope()), ParseError);
  CHECK_THROWS_AS(parse_term("", scope()), ParseError);
}

TEST_CASE("rendering uses notations and minimal parentheses") {
  Term t = parse_term("(1+2)*3", scope());
  CHECK(render_term(t, scope()) == "(1+2)*3");
  CHECK(render_term(parse_term("1+2*3", scope()), scope()) == "1+2*3");
  CHECK(render_term(parse_term("{1,2}", scope()), scope()) == "{1,2}");
  CHECK(render_term(Term::var("x"), scope()) == "x");
}

TEST_CASE("parse inverts render on generated terms") {
  testing::Rng rng(2024);
  for (int i = 0; i < 500; ++i) {
    Term t = testing::gen_stdlib_term(rng, 4);
    std::string text = render_term(t, scope());
    Term back = parse_term(text, scope());
    CHECK_MESSAGE(back == t, text);
  }
}

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

#include <boost/multiprecision/cpp_int.hpp>

#include "doctest.h"
#include "support/generators.hpp"
#include "um/session.hpp"
#include "um/stdlib.hpp"

using namespace um;
using Oracle = boost::multiprecision::cpp_int;

namespace {

const Session& session() {
  static Session s(true);
  return s;
}

Term eval(const std::string& text, const char* scope = "NumbersTest") {
  const Session& s = session();
  return s.simplify(s.parse(text, s.resolve_theory(scope))).term;
}

std::string show(const std::string& text, const char* scope = "NumbersTest") {
  const Session& s = session();
  return s.render(eval(text, scope), s.resolve_theory(scope));
}

Term sym(const char* cd, const char* name) { return Term::constant(cd_symbol(cd, name)); }

Oracle to_oracle(const BigInt& v) { return Oracle(v.get_str()); }

}  // namespace

TEST_CASE("bundled library loads with every realization bound") {
  const Session& s = session();
  CHECK(s.rules().size() == 34);
  CHECK(s.unimplemented().empty());
  CHECK(s.check(s.stdlib_modules()).empty());
  CHECK(stdlib_registry().size() == 34);
}

TEST_CASE("arith1 folds literals and declines otherwise") {
  CHECK(show("1+2*3") == "7");
  CHECK(show("10-3-2") == "5");
  CHECK(show("-(2+3)") == "-5");
  CHECK(show("2^10") == "1024");
  CHECK(show("x+1") == "x+1");
  CHECK(eval("2^(-1)") == Term::app(sym("arith1", "power"), {Term::integer(2), Term::integer(-1)}));
  CHECK(eval("2^100") == Term::integer(BigInt("1267650600228229401496703205376")));
}

TEST_CASE("integer1 division is Euclidean") {
  CHECK(show("7 div 2", "ArithTest") == "3");
  CHECK(show("(-7) div 2", "ArithTest") == "-4");
  CHECK(show("(-7) mod 2", "ArithTest") == "1");
  CHECK(show("7 mod (-2)", "ArithTest") == "1");
  CHECK(show("(-7) div (-2)", "ArithTest") == "4");
  CHECK(eval("7 mod 0", "ArithTest") == Term::app(sym("integer1", "remainder"), {Term::integer(7), Term::integer(0)}));
  CHECK(show("5!", "ArithTest") == "120");
  CHECK(eval("(-1)!", "ArithTest") == Term::app(sym("integer1", "factorial"), {Term::integer(-1)}));
}

TEST_CASE("logic and relations") {
  CHECK(eval("1 < 2 ∧ 3 ≥ 3 ∧ ¬(2 ≤ 1)", "ArithTest") == sym("logic1", "true"));
  CHECK(eval("1 = 2", "ArithTest") == sym("logic1", "false"));
  CHECK(eval("false ⇒ false", "ArithTest") == sym("logic1", "true"));
  CHECK(show("x < 1", "ArithTest") == "x<1");
}

TEST_CASE("sets are canonical") {
  CHECK(show("{3,1,2,1}", "SetTest") == "{1,2,3}");
  CHECK(show("{1,2}∪{2,3}", "SetTest") == "{1,2,3}");
  CHECK(show("{1,2,3}∩{2,3,4}", "SetTest") == "{2,3}");
  CHECK(show("|{1,1,2}|", "SetTest") == "2");
  CHECK(eval("2 ∈ {1,2}", "SetTest") == sym("logic1", "true"));
  CHECK(show("{0,1,2} map (x ↦ -x*x+2*x+3)") == "{3,4}");
  CHECK(is_canonical_set(eval("{2,1}", "SetTest")));
  CHECK_FALSE(is_canonical_set(Term::app(sym("set1", "set"), {Term::integer(2), Term::integer(1)})));
}

TEST_CASE("lists append structurally") {
  auto cons = [](Term h, Term t) { return Term::app(Term::constant(lists_symbol("cons")), {h, t}); };
  Term nil = Term::constant(lists_symbol("nil"));
  Term l12 = cons(Term::integer(1), cons(Term::integer(2), nil));
  Term l3 = cons(Term::integer(3), nil);
  Term t = Term::app(Term::constant(lists_ext_symbol("append_many")), {l12, l3, nil});
  CHECK(session().simplify(t).term == cons(Term::integer(1), cons(Term::integer(2), l3)));
  // A non-list argument leaves append stuck.
  CHECK(session().simplify(Term::app(Term::constant(lists_ext_symbol("append_many")), {Term::integer(1)})).term ==
        Term::app(Term::constant(lists_symbol("append")), {Term::integer(1), nil}));
  CHECK(is_value(l12));
}

TEST_CASE("all FMP tests of the library pass") {
  const Session& s = session();
  TestReport r = run_tests(s.graph(), s.rules(), collect_tests(s.graph()));
  CHECK(r.ok());
  CHECK(r.results.size() == 14);
}

TEST_CASE("arith natives agree with an independent big integer oracle") {
  testing::Rng rng(5);
  const RuleBase& base = session().rules();
  auto call = [&](const char* cd, const char* name, std::vector<Term> args) {
    return simplify(base, Term::app(sym(cd, name), std::move(args))).term;
  };
  for (int i = 0; i < 1000; ++i) {
    BigInt a = testing::random_int(rng, 200), b = testing::random_int(rng, 200);
    Oracle oa = to_oracle(a), ob = to_oracle(b);
    Term ta = Term::integer(a), tb = Term::integer(b);
    CHECK(to_oracle(call("arith1", "plus", {ta, tb}).int_value()) == oa + ob);
    CHECK(to_oracle(call("arith1", "times", {ta, tb}).int_value()) == oa * ob);
    CHECK(to_oracle(call("arith1", "minus", {ta, tb}).int_value()) == oa - ob);
    if (b != 0) {
      // Euclidean: 0 <= r < |b| and a = q*b + r.
      Oracle r = oa % ob;
      if (r < 0) r += abs(ob);
      Oracle q = (oa - r) / ob;
      CHECK(to_oracle(call("integer1", "quotient", {ta, tb}).int_value()) == q);
      CHECK(to_oracle(call("integer1", "remainder", {ta, tb}).int_value()) == r);
    }
  }
}

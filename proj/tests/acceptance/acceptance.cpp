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

// Acceptance checks: one PASS/FAIL line per criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "support/generators.hpp"
#include "support/naive_engine.hpp"
#include "support/temp_dir.hpp"
#include "um/builtins.hpp"
#include "um/codegen.hpp"
#include "um/error.hpp"
#include "um/notation.hpp"
#include "um/openmath.hpp"
#include "um/server.hpp"
#include "um/session.hpp"
#include "um/stdlib.hpp"
#include "um/sts.hpp"

using namespace um;
namespace fs = std::filesystem;
using Oracle = boost::multiprecision::cpp_int;
using Clock = std::chrono::steady_clock;

namespace {

// Thrown by expect() with the reason a criterion failed.
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string lists_document() {
  for (const auto& f : stdlib_sources())
    if (f.name.ends_with("uom.omdoc")) return std::string(f.text);
  throw Failure("lists document not bundled");
}

Term nil() { return Term::constant(lists_symbol("nil")); }
Term cons(Term h, Term t) { return Term::app(Term::constant(lists_symbol("cons")), {std::move(h), std::move(t)}); }

// Cons list built independently of any rule.
Term list_of(std::initializer_list<long> xs) {
  std::vector<long> v(xs);
  Term out = nil();
  for (auto it = v.rbegin(); it != v.rend(); ++it) out = cons(Term::integer(*it), out);
  return out;
}

Term append_many_scenario() {
  return Term::app(Term::constant(lists_ext_symbol("append_many")),
                   {list_of({1, 2, 3}), list_of({4, 5}), list_of({6, 7})});
}

// Session built as in the scenario: no bundled library, the lists document
// ingested as uploaded, then the lists realization loaded.
Session lists_session() {
  Session s(false);
  s.ingest(lists_document(), "uom.omdoc");
  for (const auto& f : stdlib_sources())
    if (f.name.ends_with("lists_realization.mmt")) s.add_source(f.text, f.name);
  return s;
}

std::string criterion1() {
  auto start = Clock::now();
  Session s = lists_session();
  expect(s.unimplemented().empty(), "unimplemented lists constants");
  expect(s.rules().find(lists_symbol("append"), Arity::fixed(2)) &&
             s.rules().find(lists_ext_symbol("append_many"), Arity::flexible(0)),
         "append rules not bound");
  SimplifyResult r = s.simplify(append_many_scenario());
  double t = seconds_since(start);
  expect(!r.exhausted, "fuel exhausted");
  expect(r.term == list_of({1, 2, 3, 4, 5, 6, 7}), "result " + debug_string(r.term));
  expect(t < 1.0, "took " + std::to_string(t) + " s");
  return "cons-list [1..7] in " + std::to_string(r.steps) + " steps";
}

std::string criterion2() {
  auto start = Clock::now();
  Session s(true);
  ModuleRef scope = s.resolve_theory("urn:um:stdlib?NumbersTest");
  Term t = s.parse("{0,1,2} map (x ↦ -x*x+2*x+3) = {3,4}", scope);
  SimplifyResult r = s.simplify(t);
  expect(!r.exhausted, "fuel exhausted");
  expect(r.term.is_const(cd_symbol("logic1", "true")), "result " + s.render(r.term, scope));
  std::vector<TestCase> tests;
  for (const auto& tc : collect_tests(s.graph()))
    if (tc.origin == GlobalName(kStdlibBase, "NumbersTest", "maptest")) tests.push_back(tc);
  expect(tests.size() == 1, "maptest not collected");
  TestReport report = run_tests(s.graph(), s.rules(), tests);
  expect(report.str() == "PASS NumbersTest?maptest\npassed 1/1\n", "report: " + report.str());
  double sec = seconds_since(start);
  expect(sec < 1.0, "took " + std::to_string(sec) + " s");
  return "logic1?true, harness PASS";
}

std::string criterion3() {
  Session s(true);
  auto arity = [&](const char* cd, const char* name) {
    const Constant* c = s.graph().constant(cd_symbol(cd, name));
    expect(c && c->type, std::string(cd) + "?" + name + " has no type");
    return arity_of(*c->type);
  };
  expect(arity("arith1", "plus") == Arity::flexible(0), "plus ↦ " + arity("arith1", "plus").str());
  expect(arity("arith1", "minus") == Arity::fixed(2), "minus ↦ " + arity("arith1", "minus").str());
  expect(arity("fns1", "lambda") == Arity::binder(), "lambda ↦ " + arity("fns1", "lambda").str());
  expect(arity_of(Term::constant(openmath_symbol("Object"))) == Arity::fixed(0), "Object is not Fixed 0");
  return "plus Flexible 0, minus Fixed 2, lambda Binder, Object Fixed 0";
}

std::string criterion4() {
  Session s(true);
  const RuleBase& base = s.rules();
  testing::Rng rng(4);
  constexpr int kTerms = 1000;
  constexpr std::size_t kFuel = 1000000;
  int agree = 0;
  for (int i = 0; i < kTerms; ++i) {
    Term t = testing::gen_stdlib_term(rng, 4);
    SimplifyResult r = simplify(base, t, kFuel);
    expect(!r.exhausted, "fuel exhausted on " + debug_string(t));
    SimplifyResult again = simplify(base, r.term, kFuel);
    expect(again.steps == 0 && again.term == r.term, "not idempotent on " + debug_string(t));
    SimplifyResult stripped = simplify(base, strip_metadata(r.term), kFuel);
    expect(stripped.steps == 0 && stripped.term == r.term, "stripping metadata changed " + debug_string(t));
    expect(simplify(base, strip_metadata(t), kFuel).term == r.term, "input metadata mattered");
    auto naive = testing::naive_normalize(base, t, kFuel);
    expect(naive && *naive == r.term, "naive engine disagrees on " + debug_string(t));
    ++agree;
  }
  return std::to_string(agree) + "/" + std::to_string(kTerms) + " terms agree";
}

Oracle oracle(const BigInt& v) { return Oracle(v.get_str()); }

std::string criterion5() {
  auto start = Clock::now();
  Session s(true);
  const RuleBase& base = s.rules();
  testing::Rng rng(5);
  auto sym = [](const char* cd, const char* name) { return Term::constant(cd_symbol(cd, name)); };
  auto run = [&](Term t) { return simplify(base, t).term; };
  auto as_oracle = [&](const Term& t, const std::string& what) {
    expect(t.is(TermKind::Int), what + " did not fold");
    return oracle(t.int_value());
  };
  constexpr int kInputs = 10000;
  int big = 0;
  for (int i = 0; i < kInputs; ++i) {
    BigInt a = testing::random_int(rng, 256), b = testing::random_int(rng, 256);
    BigInt c = testing::random_int(rng, 128);
    Oracle oa = oracle(a), ob = oracle(b), oc = oracle(c);
    if (abs(oa) > (Oracle(1) << 64) || abs(ob) > (Oracle(1) << 64)) ++big;
    Term ta = Term::integer(a), tb = Term::integer(b), tc = Term::integer(c);
    std::string ctx = " on " + a.get_str() + ", " + b.get_str();
    switch (i % 8) {
      case 0:
        expect(as_oracle(run(Term::app(sym("arith1", "plus"), {ta, tb, tc})), "plus") == oa + ob + oc, "plus" + ctx);
        break;
      case 1:
        expect(as_oracle(run(Term::app(sym("arith1", "times"), {ta, tb, tc})), "times") == oa * ob * oc,
               "times" + ctx);
        break;
      case 2: expect(as_oracle(run(Term::app(sym("arith1", "minus"), {ta, tb})), "minus") == oa - ob, "minus" + ctx); break;
      case 3: expect(as_oracle(run(Term::app(sym("arith1", "unary_minus"), {ta})), "unary_minus") == -oa, "neg" + ctx); break;
      case 4: {
        unsigned e = static_cast<unsigned>(testing::random_small(rng, 0, 12));
        expect(as_oracle(run(Term::app(sym("arith1", "power"), {ta, Term::integer(long(e))})), "power") == pow(oa, e),
               "power" + ctx);
        break;
      }
      case 5:
      case 6: {
        if (ob == 0) break;
        // Euclidean division: a = q*b + r with 0 <= r < |b|.
        Oracle r = oa % ob;
        if (r < 0) r += abs(ob);
        Oracle q = (oa - r) / ob;
        const char* name = i % 8 == 5 ? "quotient" : "remainder";
        Oracle got = as_oracle(run(Term::app(sym("integer1", name), {ta, tb})), name);
        expect(got == (i % 8 == 5 ? q : r), std::string(name) + ctx);
        break;
      }
      default: {
        long n = testing::random_small(rng, 0, 60);
        Oracle f = 1;
        for (long k = 2; k <= n; ++k) f *= k;
        expect(as_oracle(run(Term::app(sym("integer1", "factorial"), {Term::integer(n)})), "factorial") == f,
               "factorial of " + std::to_string(n));
      }
    }
  }
  double sec = seconds_since(start);
  expect(big > 1000, "too few inputs beyond 64 bits");
  expect(sec < 10.0, "took " + std::to_string(sec) + " s");
  return std::to_string(kInputs) + " inputs, " + std::to_string(big) + " beyond 2^64";
}

// Runs the CLI, capturing stdout. Returns the exit status.
int run_cli(const std::string& args, std::string& out) {
  std::string cmd = std::string("\"") + UM_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw Failure("cannot run " + cmd);
  std::array<char, 4096> buf{};
  out.clear();
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string criterion6() {
  std::string out;
  int rc = run_cli("check \"" UM_FIXTURES_DIR "/partial_arith\"", out);
  expect(rc == 1, "exit code " + std::to_string(rc));
  std::istringstream lines(out);
  std::string line;
  std::vector<std::string> named;
  while (std::getline(lines, line))
    if (line.rfind("error ", 0) == 0) named.push_back(line);
  expect(named.size() == 1, "expected one error, got:\n" + out);
  expect(named[0].find(" arith1?plus ") != std::string::npos, "error does not name arith1?plus: " + named[0]);
  return "exit 1, names arith1?plus only";
}

std::map<fs::path, std::string> snapshot(const fs::path& dir) {
  std::map<fs::path, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file()) out[fs::relative(e.path(), dir)] = testing::read_file(e.path());
  return out;
}

std::string criterion7() {
  testing::TempDir dir;
  testing::copy_tree(UM_STDLIB_ROOT, dir.path());
  auto before = snapshot(dir.path() / "source");
  {
    Session s(true);
    s.load_project(dir.path());
    expect(!extract(s, dir.path()).empty(), "nothing extracted");
    integrate(s, dir.path());
  }
  expect(snapshot(dir.path() / "source") == before, "unedited round trip changed sources");

  fs::path stub = dir.path() / "generated" / "SetOps.cpp";
  std::string text = testing::read_file(stub);
  auto regions = read_regions(text, stub.string());
  expect(!regions.empty(), "no regions in SetOps.cpp");
  const std::string edit = "    // canonical form first\n    return std::nullopt;";
  std::string end_marker = "    // end SetOps?" + regions[0].constant;
  auto pos = text.find(regions[0].text + "\n" + end_marker);
  expect(pos != std::string::npos, "region text not found");
  text.replace(pos, regions[0].text.size(), edit);
  testing::write_file(stub, text);
  {
    Session s(true);
    s.load_project(dir.path());
    integrate(s, dir.path());
  }
  Session s(true);
  s.load_project(dir.path());
  extract(s, dir.path());
  auto after = read_regions(testing::read_file(stub), stub.string());
  expect(after.size() == regions.size(), "region count changed");
  expect(after[0].text == edit, "edit lost: '" + after[0].text + "'");
  for (std::size_t i = 1; i < after.size(); ++i) expect(after[i].text == regions[i].text, "other region changed");
  return "zero-byte round trip, edit preserved";
}

std::string criterion8() {
  Session s(true);
  Service svc(s);
  HttpResponse text = svc.handle({"POST", "/simplify", {{"scope", "arith1"}}, "text/plain", "1+2"});
  expect(text.status == 200 && text.body == "3\n", "text: " + std::to_string(text.status) + " " + text.body);

  Session lists = lists_session();
  Service lsvc(lists);
  HttpResponse xml = lsvc.handle({"POST", "/simplify", {{"scope", "lists_ext"}}, "application/openmath+xml",
                                  encode_omobj(append_many_scenario())});
  expect(xml.status == 200, "xml status " + std::to_string(xml.status) + " " + xml.body);
  expect(xml.content_type == "application/openmath+xml", "xml content type " + xml.content_type);
  expect(decode_xml(xml.body) == list_of({1, 2, 3, 4, 5, 6, 7}), "xml result " + xml.body);

  HttpResponse bad = svc.handle({"POST", "/simplify", {{"scope", "arith1"}}, "text/plain", "1+"});
  expect(bad.status == 400, "malformed status " + std::to_string(bad.status));

  HttpResponse partial =
      svc.handle({"POST", "/simplify", {{"scope", "arith1"}, {"fuel", "1"}}, "text/plain", "1+2*3"});
  expect(partial.status == 422, "fuel=1 status " + std::to_string(partial.status));
  expect(partial.body == "1+6\n", "partial result " + partial.body);
  return "200 \"3\", XML list, 400, 422 \"1+6\"";
}

std::string criterion9() {
  Session s(true);
  s.add_source(testing::roundtrip_theory_source(), "roundtrip.mmt");
  ParseScope scope = s.scope(ModuleRef("urn:um:test", "RoundTrip"));
  Term t = parse_term("1+2*3", scope);
  auto sym = [](const char* cd, const char* name) { return Term::constant(cd_symbol(cd, name)); };
  expect(t == Term::app(sym("arith1", "plus"),
                        {Term::integer(1), Term::app(sym("arith1", "times"), {Term::integer(2), Term::integer(3)})}),
         "1+2*3 parsed as " + debug_string(t));
  testing::Rng rng(9);
  constexpr int kTerms = 1000;
  for (int i = 0; i < kTerms; ++i) {
    Term g = testing::gen_stdlib_term(rng, 4);
    std::string text = render_term(g, scope);
    Term back = parse_term(text, scope);
    expect(back == g, "round trip failed on " + text);
  }
  return std::to_string(kTerms) + "/" + std::to_string(kTerms) + " round trips";
}

std::string criterion10() {
  Session s(true);
  RuleBase base = s.rules();
  GlobalName failing(ModuleRef("urn:um:test", "Faulty"), "explode");
  base.add(Rule::make(failing, Arity::fixed(1), FixedFn([](std::span<const Term>) -> std::optional<Term> {
                        throw std::runtime_error("malformed term");
                      })));
  Term redex = Term::app(Term::constant(failing), {Term::integer(1)});
  SimplifyResult alone = simplify(base, redex);
  expect(alone.term == redex && alone.steps == 0 && !alone.exhausted, "redex changed");
  auto sym = [](const char* cd, const char* name) { return Term::constant(cd_symbol(cd, name)); };
  // The enclosing plus folds its literal arguments but keeps the failed redex.
  Term outer = Term::app(sym("arith1", "plus"),
                         {Term::app(sym("arith1", "times"), {Term::integer(2), Term::integer(3)}),
                          Term::app(Term::constant(failing), {Term::app(sym("arith1", "plus"), {Term::integer(1), Term::integer(1)})})});
  SimplifyResult r = simplify(base, outer);
  expect(!r.exhausted, "enclosing simplification did not terminate");
  Term expected = Term::app(sym("arith1", "plus"),
                            {Term::integer(6), Term::app(Term::constant(failing), {Term::integer(2)})});
  expect(r.term == expected, "result " + debug_string(r.term));
  return "redex kept, enclosing term normalized in " + std::to_string(r.steps) + " steps";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"1 lists scenario", criterion1},       {"2 maptest", criterion2},
      {"3 arity table", criterion3},          {"4 rewrite engine properties", criterion4},
      {"5 arithmetic oracle", criterion5},    {"6 view totality", criterion6},
      {"7 codegen round trip", criterion7},   {"8 HTTP integration", criterion8},
      {"9 parser round trip", criterion9},    {"10 rule failure totalization", criterion10},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    std::string detail;
    bool ok = false;
    try {
      detail = run();
      ok = true;
    } catch (const std::exception& e) {
      detail = e.what();
    }
    if (!ok) ++failed;
    std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}

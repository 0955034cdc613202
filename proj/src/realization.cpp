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

#include "um/realization.hpp"

#include "um/builtins.hpp"
#include "um/error.hpp"
#include "um/notation.hpp"

namespace um {

GlobalName logic1_true() { return GlobalName(kCdBase, "logic1", "true"); }
GlobalName logic1_false() { return GlobalName(kCdBase, "logic1", "false"); }

void NativeRegistry::add(std::string key, Arity arity, std::variant<FixedFn, FlexibleFn, BinderFn> fn) {
  std::size_t want = arity.kind == Arity::Kind::Fixed ? 0 : arity.kind == Arity::Kind::Flexible ? 1 : 2;
  if (fn.index() != want) throw InvalidError("native " + key + " does not match arity " + arity.str());
  if (!entries_.emplace(key, Entry{arity, std::move(fn)}).second)
    throw ConflictError("native " + key + " is registered twice");
}

const NativeRegistry::Entry* NativeRegistry::find(const std::string& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::string> NativeRegistry::keys() const {
  std::vector<std::string> out;
  for (const auto& [k, e] : entries_) out.push_back(k);
  return out;
}

bool is_realization(const TheoryGraph& g, const ModuleRef& ref) {
  const View* v = g.view(ref);
  if (!v || v->to != computation_theory()) return false;
  const Theory* from = g.theory(v->from);
  return from && from->meta && *from->meta == openmath_theory();
}

namespace {

Term comp(const char* name) { return Term::constant(computation_symbol(name)); }

bool is_term_type(const Term& t) { return t == comp("Term"); }
bool is_term_list(const Term& t) { return t == Term::app(comp("List"), {comp("Term")}); }
bool is_context(const Term& t) { return t == comp("Context"); }

std::string show(const TheoryGraph& g, const Term& t) {
  try {
    return render_term(t, g.scope_for(computation_theory()));
  } catch (const Error&) {
    return debug_string(t);
  }
}

}  // namespace

Arity realized_arity(const Constant& c, const Assignment* a) {
  if (c.type) return arity_of(*c.type);
  if (!a || !a->params || a->params->empty()) return Arity::fixed(0);
  const auto& ps = *a->params;
  if (ps.size() == 2 && is_context(ps[0].type) && is_term_type(ps[1].type)) return Arity::binder();
  int n = static_cast<int>(ps.size());
  for (int i = 0; i + 1 < n; ++i)
    if (!is_term_type(ps[i].type))
      throw InvalidError("cannot derive an arity for " + c.name + " from its parameters");
  if (is_term_type(ps.back().type)) return Arity::fixed(n);
  if (is_term_list(ps.back().type)) return Arity::flexible(n - 1);
  throw InvalidError("cannot derive an arity for " + c.name + " from its parameters");
}

RealizationRules rules_of(const TheoryGraph& g, const ModuleRef& ref, const NativeRegistry& registry) {
  if (!is_realization(g, ref))
    throw InvalidError(ref.str() + " is not a realization of an OpenMath theory in Computation");
  const View& v = g.require_view(ref);
  std::map<std::string, GlobalName> names;
  for (const auto& [name, c] : g.flatten(v.from)) names.emplace(name.name, name);
  RealizationRules out;
  for (const auto& a : v.assignments) {
    auto it = names.find(a.name);
    if (it == names.end()) throw ResolveError(a.name + " is not declared in " + v.from.str());
    const GlobalName& name = it->second;
    const Constant& c = *g.constant(name);
    if (a.params) {
      for (const auto& p : *a.params)
        if (!is_term_type(p.type) && !is_term_list(p.type) && !is_context(p.type))
          throw InvalidError(a.loc.str() + ": parameter " + p.name + " of " + name.short_str() +
                             " has non-syntactic type " + show(g, p.type));
    }
    Arity arity = realized_arity(c, &a);
    if (c.type && a.params) {
      std::vector<Term> sig;
      for (const auto& p : *a.params) sig.push_back(p.type);
      sig.push_back(comp("Term"));
      Term declared = a.params->empty() ? comp("Term") : Term::app(comp("Function"), std::move(sig));
      Term expected = g.apply_morphism(syntactic_view(), *c.type);
      if (declared != expected)
        throw InvalidError(a.loc.str() + ": realization of " + name.short_str() + " has type " +
                           show(g, declared) + " but the syntactic translation of its type is " +
                           show(g, expected));
    }
    if (!a.escaped() || a.blank()) {
      out.unimplemented.push_back(name);
      continue;
    }
    const auto* entry = registry.find(v.path.name + "?" + a.name);
    if (!entry) {
      out.unimplemented.push_back(name);
      continue;
    }
    if (entry->arity != arity)
      throw InvalidError("native " + v.path.name + "?" + a.name + " has arity " + entry->arity.str() +
                         " but " + name.short_str() + " has arity " + arity.str());
    out.rules.add(Rule::make(name, arity, entry->fn));
  }
  return out;
}

std::vector<TestCase> collect_tests(const TheoryGraph& g) {
  GlobalName fmp = openmath_symbol("FMP");
  std::vector<TestCase> out;
  for (const auto& ref : g.modules()) {
    const Theory* t = g.theory(ref);
    if (!t) continue;
    for (const Constant* c : t->constants()) {
      if (!c->definiens) continue;
      const GlobalName* head = c->definiens->app_head_name();
      if (head && *head == fmp && c->definiens->args().size() == 1)
        out.push_back({GlobalName(ref, c->name), c->definiens->args()[0]});
    }
  }
  return out;
}

std::string TestReport::str() const {
  std::string out;
  if (results.empty()) out += "0 run\n";
  for (const auto& r : results) {
    out += (r.passed ? "PASS " : "FAIL ") + r.origin.short_str();
    if (!r.passed) {
      out += " residual: " + r.residual_text;
      if (r.exhausted) out += " (fuel exhausted)";
    }
    out += "\n";
  }
  out += "passed " + std::to_string(passed) + "/" + std::to_string(results.size()) + "\n";
  return out;
}

TestReport run_tests(const TheoryGraph& g, const RuleBase& base, const std::vector<TestCase>& tests,
                     std::size_t fuel) {
  TestReport report;
  for (const auto& tc : tests) {
    SimplifyResult r = simplify(base, tc.formula, fuel);
    TestResult res{tc.origin, false, r.exhausted, r.term, {}};
    res.passed = !r.exhausted && r.term.is_const(logic1_true());
    if (res.passed) {
      ++report.passed;
    } else {
      try {
        res.residual_text = render_term(r.term, g.scope_for(tc.origin.module_ref()));
      } catch (const Error&) {
        res.residual_text = debug_string(r.term);
      }
    }
    report.results.push_back(std::move(res));
  }
  return report;
}

}  // namespace um

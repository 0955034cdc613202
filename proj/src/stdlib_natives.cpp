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

#include "um/stdlib.hpp"

#include <algorithm>

namespace um {

GlobalName cd_symbol(std::string_view cd, std::string_view name) { return GlobalName(kCdBase, cd, name); }
GlobalName lists_symbol(std::string_view name) { return GlobalName(kListsBase, "lists", name); }
GlobalName lists_ext_symbol(std::string_view name) { return GlobalName(kListsBase, "lists_ext", name); }

namespace {

using Args = std::span<const Term>;
using Result = std::optional<Term>;

// Largest exponent bit count `power` computes; beyond it the rule declines.
constexpr unsigned long kMaxPowerBits = 1u << 20;
constexpr long kMaxFactorial = 100000;

Term sym(std::string_view cd, std::string_view name) { return Term::constant(cd_symbol(cd, name)); }
Term boolean(bool b) { return Term::constant(b ? logic1_true() : logic1_false()); }

bool all_ints(Args xs) {
  return std::all_of(xs.begin(), xs.end(), [](const Term& t) { return t.is(TermKind::Int); });
}

std::optional<bool> as_bool(const Term& t) {
  if (t.is_const(logic1_true())) return true;
  if (t.is_const(logic1_false())) return false;
  return std::nullopt;
}

bool is_set_like(const Term& t) {
  return t.is_const(cd_symbol("set1", "emptyset")) || is_canonical_set(t);
}

std::vector<Term> elements(const Term& s) {
  if (s.kind() != TermKind::App) return {};
  return {s.args().begin(), s.args().end()};
}

// Canonical form of a finite set: sorted, without duplicates.
Term make_set(std::vector<Term> xs) {
  std::sort(xs.begin(), xs.end(), TermLess{});
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (xs.empty()) return sym("set1", "emptyset");
  return Term::app(sym("set1", "set"), std::move(xs));
}

std::variant<FixedFn, FlexibleFn, BinderFn> decline_fixed() {
  return FixedFn([](Args) -> Result { return std::nullopt; });
}

// ---- arith1 / integer1

Result plus(Args, Args xs) {
  if (!all_ints(xs)) return std::nullopt;
  BigInt sum = 0;
  for (const auto& x : xs) sum += x.int_value();
  return Term::integer(sum);
}

Result times(Args, Args xs) {
  if (!all_ints(xs)) return std::nullopt;
  BigInt prod = 1;
  for (const auto& x : xs) prod *= x.int_value();
  return Term::integer(prod);
}

Result minus(Args a) {
  if (!all_ints(a)) return std::nullopt;
  return Term::integer(BigInt(a[0].int_value() - a[1].int_value()));
}

Result unary_minus(Args a) {
  if (!all_ints(a)) return std::nullopt;
  return Term::integer(BigInt(-a[0].int_value()));
}

Result power(Args a) {
  if (!all_ints(a)) return std::nullopt;
  const BigInt& base = a[0].int_value();
  const BigInt& exp = a[1].int_value();
  if (sgn(exp) < 0) return std::nullopt;
  if (abs(base) <= 1) {
    if (sgn(base) == 0) return Term::integer(sgn(exp) == 0 ? 1L : 0L);
    if (base == 1) return Term::integer(1L);
    return Term::integer(mpz_even_p(exp.get_mpz_t()) ? 1L : -1L);
  }
  if (!exp.fits_ulong_p()) return std::nullopt;
  unsigned long e = exp.get_ui();
  if (e * mpz_sizeinbase(base.get_mpz_t(), 2) > kMaxPowerBits) return std::nullopt;
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return Term::integer(out);
}

// Euclidean division: 0 <= r < |b|, a = q*b + r.
bool euclid(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (sgn(b) == 0) return false;
  BigInt m = abs(b);
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  q = (a - r) / b;
  return true;
}

Result quotient(Args a) {
  BigInt q, r;
  if (!all_ints(a) || !euclid(a[0].int_value(), a[1].int_value(), q, r)) return std::nullopt;
  return Term::integer(q);
}

Result remainder(Args a) {
  BigInt q, r;
  if (!all_ints(a) || !euclid(a[0].int_value(), a[1].int_value(), q, r)) return std::nullopt;
  return Term::integer(r);
}

Result factorial(Args a) {
  if (!all_ints(a)) return std::nullopt;
  const BigInt& n = a[0].int_value();
  if (sgn(n) < 0 || n > kMaxFactorial) return std::nullopt;
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n.get_ui());
  return Term::integer(out);
}

// ---- logic1

Result land(Args, Args xs) {
  bool all = true;
  for (const auto& x : xs) {
    auto b = as_bool(x);
    if (b && !*b) return boolean(false);
    all = all && b.has_value();
  }
  if (all) return boolean(true);
  return std::nullopt;
}

Result lor(Args, Args xs) {
  bool all = true;
  for (const auto& x : xs) {
    auto b = as_bool(x);
    if (b && *b) return boolean(true);
    all = all && b.has_value();
  }
  if (all) return boolean(false);
  return std::nullopt;
}

Result lnot(Args a) {
  auto b = as_bool(a[0]);
  if (!b) return std::nullopt;
  return boolean(!*b);
}

Result implies(Args a) {
  auto p = as_bool(a[0]), q = as_bool(a[1]);
  if (p && !*p) return boolean(true);
  if (p && q) return boolean(*q);
  return std::nullopt;
}

// ---- relation1

std::optional<bool> equal(const Term& a, const Term& b) {
  if (a == b) return true;
  if (is_value(a) && is_value(b)) return false;
  return std::nullopt;
}

Result eq(Args a) {
  auto r = equal(a[0], a[1]);
  if (!r) return std::nullopt;
  return boolean(*r);
}

Result neq(Args a) {
  auto r = equal(a[0], a[1]);
  if (!r) return std::nullopt;
  return boolean(!*r);
}

template <typename Cmp>
FixedFn comparison(Cmp cmp) {
  return [cmp](Args a) -> Result {
    if (!all_ints(a)) return std::nullopt;
    return boolean(cmp(::cmp(a[0].int_value(), a[1].int_value())));
  };
}

// ---- set1

Result set(Args, Args xs) {
  if (is_canonical_set(Term::app(sym("set1", "set"), {xs.begin(), xs.end()}))) return std::nullopt;
  return make_set({xs.begin(), xs.end()});
}

Result in(Args a) {
  if (!is_set_like(a[1])) return std::nullopt;
  bool decided = is_value(a[0]);
  for (const auto& e : elements(a[1])) {
    if (e == a[0]) return boolean(true);
    decided = decided && is_value(e);
  }
  if (decided) return boolean(false);
  return std::nullopt;
}

Result set_union(Args, Args xs) {
  std::vector<Term> all;
  for (const auto& s : xs) {
    if (!is_set_like(s)) return std::nullopt;
    for (const auto& e : elements(s)) all.push_back(e);
  }
  return make_set(std::move(all));
}

Result set_intersect(Args, Args xs) {
  for (const auto& s : xs)
    if (!is_set_like(s) || !is_value(s)) return std::nullopt;
  std::vector<Term> out;
  for (const auto& e : elements(xs[0])) {
    bool everywhere = true;
    for (std::size_t i = 1; i < xs.size() && everywhere; ++i) {
      auto es = elements(xs[i]);
      everywhere = std::find(es.begin(), es.end(), e) != es.end();
    }
    if (everywhere) out.push_back(e);
  }
  return make_set(std::move(out));
}

Result size(Args a) {
  if (!is_set_like(a[0]) || !is_value(a[0])) return std::nullopt;
  return Term::integer(static_cast<long>(elements(a[0]).size()));
}

// map(f, S): f applied to every element, as a set to be canonicalized.
Result map(Args a) {
  const Term& f = a[0];
  const Term& s = a[1];
  if (!is_set_like(s)) return std::nullopt;
  if (s.is(TermKind::Const)) return s;
  bool lambda = f.is(TermKind::Bind) && f.binder().is_const(cd_symbol("fns1", "lambda")) &&
                f.context().size() == 1;
  std::vector<Term> out;
  for (const auto& e : s.args()) {
    if (lambda) out.push_back(substitute(f.scope(), {{f.context()[0], e}}));
    else out.push_back(Term::app(f, {e}));
  }
  return Term::app(sym("set1", "set"), std::move(out));
}

// ---- lists

Term nil() { return Term::constant(lists_symbol("nil")); }

Result append(Args a) {
  const Term& l = a[0];
  if (l.is_const(lists_symbol("nil"))) return a[1];
  const GlobalName* h = l.app_head_name();
  if (h && *h == lists_symbol("cons") && l.args().size() == 2)
    return Term::app(Term::constant(lists_symbol("cons")),
                     {l.args()[0], Term::app(Term::constant(lists_symbol("append")), {l.args()[1], a[1]})});
  return std::nullopt;
}

Result append_many(Args, Args xs) {
  if (xs.empty()) return nil();
  Term rest = xs.size() == 1 ? nil()
                             : Term::app(Term::constant(lists_ext_symbol("append_many")),
                                         {xs.begin() + 1, xs.end()});
  return Term::app(Term::constant(lists_symbol("append")), {xs[0], rest});
}

NativeRegistry build() {
  NativeRegistry r;
  auto fixed = [&](const char* key, int n, Result (*f)(Args)) { r.add(key, Arity::fixed(n), FixedFn(f)); };
  auto flex = [&](const char* key, Result (*f)(Args, Args)) { r.add(key, Arity::flexible(0), FlexibleFn(f)); };

  flex("NumberArith?plus", plus);
  flex("NumberArith?times", times);
  fixed("NumberArith?minus", 2, minus);
  fixed("NumberArith?unary_minus", 1, unary_minus);
  fixed("NumberArith?power", 2, power);

  fixed("IntegerArith?quotient", 2, quotient);
  fixed("IntegerArith?remainder", 2, remainder);
  fixed("IntegerArith?factorial", 1, factorial);

  r.add("LogicBool?true", Arity::fixed(0), decline_fixed());
  r.add("LogicBool?false", Arity::fixed(0), decline_fixed());
  flex("LogicBool?and", land);
  flex("LogicBool?or", lor);
  fixed("LogicBool?not", 1, lnot);
  fixed("LogicBool?implies", 2, implies);

  fixed("RelationCompare?eq", 2, eq);
  fixed("RelationCompare?neq", 2, neq);
  r.add("RelationCompare?lt", Arity::fixed(2), comparison([](int c) { return c < 0; }));
  r.add("RelationCompare?gt", Arity::fixed(2), comparison([](int c) { return c > 0; }));
  r.add("RelationCompare?leq", Arity::fixed(2), comparison([](int c) { return c <= 0; }));
  r.add("RelationCompare?geq", Arity::fixed(2), comparison([](int c) { return c >= 0; }));

  flex("SetOps?set", set);
  fixed("SetOps?in", 2, in);
  flex("SetOps?union", set_union);
  flex("SetOps?intersect", set_intersect);
  fixed("SetOps?size", 1, size);
  fixed("SetOps?map", 2, map);
  r.add("SetOps?emptyset", Arity::fixed(0), decline_fixed());

  r.add("FnsBinder?lambda", Arity::binder(),
        BinderFn([](const Context&, const Term&) -> Result { return std::nullopt; }));

  r.add("ListsData?elem", Arity::fixed(0), decline_fixed());
  r.add("ListsData?list", Arity::fixed(0), decline_fixed());
  r.add("ListsData?nil", Arity::fixed(0), decline_fixed());
  r.add("ListsData?cons", Arity::fixed(2), decline_fixed());
  fixed("ListsRealization?append", 2, append);
  flex("ListsRealization?append_many", append_many);
  return r;
}

}  // namespace

bool is_canonical_set(const Term& t) {
  const GlobalName* h = t.app_head_name();
  if (!h || *h != cd_symbol("set1", "set")) return false;
  auto xs = t.args();
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (compare(xs[i - 1], xs[i]) >= 0) return false;
  return true;
}

bool is_value(const Term& t) {
  switch (t.kind()) {
    case TermKind::Int:
    case TermKind::Str: return true;
    case TermKind::Const:
      return t.is_const(logic1_true()) || t.is_const(logic1_false()) ||
             t.is_const(lists_symbol("nil")) || t.is_const(cd_symbol("set1", "emptyset"));
    case TermKind::App: {
      const GlobalName* h = t.app_head_name();
      if (!h) return false;
      bool cons = *h == lists_symbol("cons") && t.args().size() == 2;
      if (!cons && !is_canonical_set(t)) return false;
      return std::all_of(t.args().begin(), t.args().end(), [](const Term& x) { return is_value(x); });
    }
    default: return false;
  }
}

const NativeRegistry& stdlib_registry() {
  static const NativeRegistry registry = build();
  return registry;
}

}  // namespace um

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

#include "um/sts.hpp"

#include "um/builtins.hpp"
#include "um/error.hpp"

namespace um {

bool Arity::admits(std::size_t args) const {
  switch (kind) {
    case Kind::Fixed: return args == static_cast<std::size_t>(n);
    case Kind::Flexible: return args >= static_cast<std::size_t>(n);
    case Kind::Binder: return false;
  }
  return false;
}

std::string Arity::str() const {
  switch (kind) {
    case Kind::Fixed: return "Fixed " + std::to_string(n);
    case Kind::Flexible: return "Flexible " + std::to_string(n);
    case Kind::Binder: return "Binder";
  }
  return {};
}

namespace {

bool is_om(const Term& t, const char* name) { return t.is_const(openmath_symbol(name)); }

}  // namespace

bool well_formed_type(const Term& t) {
  if (is_om(t, "Object") || is_om(t, "binder")) return true;
  const GlobalName* head = t.app_head_name();
  if (!head || *head != openmath_symbol("mapsto")) return false;
  auto args = t.args();
  if (args.size() < 2 || !is_om(args.back(), "Object")) return false;
  for (std::size_t i = 0; i + 2 < args.size(); ++i)
    if (!is_om(args[i], "Object")) return false;
  const Term& last = args[args.size() - 2];
  return is_om(last, "Object") || is_om(last, "naryObject");
}

Arity arity_of(const Term& type) {
  if (!well_formed_type(type)) throw InvalidError("ill-formed type " + debug_string(type));
  if (is_om(type, "Object")) return Arity::fixed(0);
  if (is_om(type, "binder")) return Arity::binder();
  auto args = type.args();
  int k = static_cast<int>(args.size()) - 2;
  return is_om(args[args.size() - 2], "naryObject") ? Arity::flexible(k) : Arity::fixed(k + 1);
}

std::string Diagnostic::str() const {
  return severity + " " + loc.str() + " " + constant.short_str() + " " + message;
}

namespace {

void check_term(const TheoryGraph& g, const Term& t, const Constant& owner, const GlobalName& name,
                std::vector<Diagnostic>& out) {
  auto arity_for = [&](const GlobalName& head) -> std::optional<Arity> {
    const Constant* c = g.constant(head);
    if (!c || !c->type || !well_formed_type(*c->type)) return std::nullopt;
    return arity_of(*c->type);
  };
  auto report = [&](std::string msg) {
    out.push_back({"error", owner.loc, name, std::move(msg)});
  };
  switch (t.kind()) {
    case TermKind::App: {
      if (const GlobalName* h = t.app_head_name()) {
        if (auto a = arity_for(*h)) {
          std::size_t n = t.args().size();
          if (a->kind == Arity::Kind::Fixed && n != static_cast<std::size_t>(a->n)) {
            report(h->short_str() + " expects " + std::to_string(a->n) + " argument(s), got " +
                   std::to_string(n));
          } else if (a->kind == Arity::Kind::Flexible && n < static_cast<std::size_t>(a->n)) {
            report(h->short_str() + " expects at least " + std::to_string(a->n) +
                   " argument(s), got " + std::to_string(n));
          } else if (a->kind == Arity::Kind::Binder) {
            report(h->short_str() + " is a binder but is applied to arguments");
          }
        }
      }
      check_term(g, t.head(), owner, name, out);
      for (const auto& a : t.args()) check_term(g, a, owner, name, out);
      break;
    }
    case TermKind::Bind: {
      if (t.binder().is(TermKind::Const)) {
        if (auto a = arity_for(t.binder().name()); a && a->kind != Arity::Kind::Binder)
          report(t.binder().name().short_str() + " binds variables but has arity " + a->str());
      }
      check_term(g, t.binder(), owner, name, out);
      check_term(g, t.scope(), owner, name, out);
      break;
    }
    default: break;
  }
}

}  // namespace

std::vector<Diagnostic> lint_theory(const TheoryGraph& g, const ModuleRef& ref) {
  const Theory& th = g.require_theory(ref);
  std::vector<Diagnostic> out;
  bool om = th.meta && *th.meta == openmath_theory();
  for (const Constant* c : th.constants()) {
    GlobalName name(ref, c->name);
    if (c->type) {
      if (om && !well_formed_type(*c->type)) out.push_back({"error", c->loc, name, "ill-formed type"});
      check_term(g, *c->type, *c, name, out);
    }
    if (c->definiens) check_term(g, *c->definiens, *c, name, out);
  }
  return out;
}

}  // namespace um

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

#include "um/theory_graph.hpp"

#include <algorithm>
#include <set>

#include "um/error.hpp"

namespace um {

const Constant* Theory::find(std::string_view name) const {
  for (const auto& d : decls)
    if (const auto* c = std::get_if<Constant>(&d); c && c->name == name) return c;
  return nullptr;
}

std::vector<const Constant*> Theory::constants() const {
  std::vector<const Constant*> out;
  for (const auto& d : decls)
    if (const auto* c = std::get_if<Constant>(&d)) out.push_back(c);
  return out;
}

std::vector<ModuleRef> Theory::includes() const {
  std::vector<ModuleRef> out;
  for (const auto& d : decls)
    if (const auto* i = std::get_if<Include>(&d)) out.push_back(i->target);
  return out;
}

bool Assignment::blank() const {
  if (!escaped()) return false;
  const auto& s = value.foreign_content();
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

const Assignment* View::find(std::string_view name) const {
  for (const auto& a : assignments)
    if (a.name == name) return &a;
  return nullptr;
}

void TheoryGraph::add_module(Module m, const ModuleRef& path, bool replace) {
  auto it = index_.find(path);
  if (it != index_.end()) {
    if (!replace) throw ConflictError("module " + path.str() + " is already defined");
    modules_[it->second] = std::move(m);
    return;
  }
  index_.emplace(path, modules_.size());
  modules_.push_back(std::move(m));
}

void TheoryGraph::add(Theory t, bool replace) {
  ModuleRef p = t.path;
  add_module(std::move(t), p, replace);
}

void TheoryGraph::add(View v, bool replace) {
  ModuleRef p = v.path;
  add_module(std::move(v), p, replace);
}

const Theory* TheoryGraph::theory(const ModuleRef& ref) const {
  auto it = index_.find(ref);
  return it == index_.end() ? nullptr : std::get_if<Theory>(&modules_[it->second]);
}

const View* TheoryGraph::view(const ModuleRef& ref) const {
  auto it = index_.find(ref);
  return it == index_.end() ? nullptr : std::get_if<View>(&modules_[it->second]);
}

const Theory& TheoryGraph::require_theory(const ModuleRef& ref) const {
  if (const Theory* t = theory(ref)) return *t;
  throw ResolveError("unknown theory " + ref.str());
}

const View& TheoryGraph::require_view(const ModuleRef& ref) const {
  if (const View* v = view(ref)) return *v;
  throw ResolveError("unknown view " + ref.str());
}

std::vector<ModuleRef> TheoryGraph::modules() const {
  std::vector<ModuleRef> out;
  for (const auto& m : modules_)
    out.push_back(std::visit([](const auto& x) { return x.path; }, m));
  return out;
}

std::optional<ModuleRef> TheoryGraph::resolve(std::string_view text,
                                              const std::string& doc_base) const {
  if (text.empty()) return std::nullopt;
  if (text.front() == '?') {
    ModuleRef r(doc_base, text.substr(1));
    return has(r) ? std::optional(r) : std::nullopt;
  }
  if (text.find('?') != std::string_view::npos) {
    ModuleRef r = ModuleRef::parse(text);
    return has(r) ? std::optional(r) : std::nullopt;
  }
  ModuleRef local(doc_base, text);
  if (has(local)) return local;
  std::optional<ModuleRef> found;
  for (const auto& [ref, idx] : index_) {
    if (ref.name != text) continue;
    if (found) throw ResolveError("ambiguous module name '" + std::string(text) + "': " +
                                  found->str() + ", " + ref.str());
    found = ref;
  }
  return found;
}

const Constant* TheoryGraph::constant(const GlobalName& name) const {
  const Theory* t = theory(name.module_ref());
  return t ? t->find(name.name) : nullptr;
}

std::vector<std::pair<GlobalName, const Constant*>> TheoryGraph::flatten(
    const ModuleRef& root) const {
  std::vector<std::pair<GlobalName, const Constant*>> out;
  std::set<ModuleRef> done;
  std::vector<ModuleRef> stack;
  auto visit = [&](auto&& self, const ModuleRef& ref) -> void {
    if (std::find(stack.begin(), stack.end(), ref) != stack.end())
      throw InvalidError("include cycle through " + ref.str());
    if (!done.insert(ref).second) return;
    const Theory* t = theory(ref);
    if (!t) throw ResolveError("unresolved include " + ref.str());
    stack.push_back(ref);
    for (const auto& d : t->decls) {
      if (const auto* c = std::get_if<Constant>(&d)) {
        out.emplace_back(GlobalName(ref, c->name), c);
      } else {
        self(self, std::get<Include>(d).target);
      }
    }
    stack.pop_back();
  };
  visit(visit, root);
  return out;
}

std::vector<ModuleRef> TheoryGraph::meta_chain(const ModuleRef& ref) const {
  std::vector<ModuleRef> out;
  const Theory* t = theory(ref);
  while (t && t->meta) {
    if (std::find(out.begin(), out.end(), *t->meta) != out.end() || *t->meta == ref)
      throw InvalidError("meta-theory cycle through " + t->meta->str());
    out.push_back(*t->meta);
    t = theory(*t->meta);
    if (!t) throw ResolveError("unresolved meta-theory " + out.back().str());
  }
  return out;
}

namespace {

using AssignmentTable = std::map<GlobalName, const Assignment*>;

void build_table(const TheoryGraph& g, const ModuleRef& ref, AssignmentTable& table,
                 std::set<ModuleRef>& seen) {
  if (!seen.insert(ref).second) return;
  const View& v = g.require_view(ref);
  for (const auto& [name, c] : g.flatten(v.from)) {
    if (const Assignment* a = v.find(name.name)) table.emplace(name, a);
  }
  for (const auto& inc : v.includes) build_table(g, inc, table, seen);
}

AssignmentTable table_for(const TheoryGraph& g, const ModuleRef& view) {
  AssignmentTable table;
  std::set<ModuleRef> seen;
  build_table(g, view, table, seen);
  return table;
}

}  // namespace

std::vector<GlobalName> TheoryGraph::check_view(const ModuleRef& ref) const {
  const View& v = require_view(ref);
  AssignmentTable table = table_for(*this, ref);
  std::vector<GlobalName> missing;
  for (const auto& [name, c] : flatten(v.from)) {
    if (c->definiens) continue;
    auto it = table.find(name);
    if (it == table.end() || it->second->blank()) missing.push_back(name);
  }
  return missing;
}

const Assignment* TheoryGraph::find_assignment(const ModuleRef& view, const GlobalName& c) const {
  AssignmentTable table = table_for(*this, view);
  auto it = table.find(c);
  return it == table.end() ? nullptr : it->second;
}

namespace {

template <typename F>
Term map_constants(const Term& t, F&& f) {
  switch (t.kind()) {
    case TermKind::Const: return f(t.name());
    case TermKind::App: {
      Term head = map_constants(t.head(), f);
      std::vector<Term> args;
      for (const auto& a : t.args()) args.push_back(map_constants(a, f));
      return Term::app(std::move(head), std::move(args));
    }
    case TermKind::Bind:
      return Term::bind(map_constants(t.binder(), f), t.context(), map_constants(t.scope(), f));
    default: return t.with_simplified(false);
  }
}

}  // namespace

Term TheoryGraph::apply_morphism(const ModuleRef& view, const Term& t) const {
  AssignmentTable table = table_for(*this, view);
  auto translate = [&](auto&& self, const GlobalName& c) -> Term {
    auto it = table.find(c);
    if (it != table.end()) return it->second->value;
    const Constant* decl = constant(c);
    if (decl && decl->definiens)
      return map_constants(*decl->definiens, [&](const GlobalName& n) { return self(self, n); });
    throw ResolveError("view " + view.str() + " has no assignment for " + c.short_str());
  };
  return map_constants(t, [&](const GlobalName& n) { return translate(translate, n); });
}

Theory TheoryGraph::pushout(const ModuleRef& view, const ModuleRef& theory_ref) const {
  const View& v = require_view(view);
  const Theory& t = require_theory(theory_ref);
  if (!t.meta || *t.meta != v.from)
    throw InvalidError("cannot translate " + theory_ref.str() + " along " + view.str() +
                       ": its meta-theory is not " + v.from.str());
  auto renamed = [&](const ModuleRef& m) { return ModuleRef(m.base, m.name + "_" + v.path.name); };
  std::set<ModuleRef> local;
  for (const auto& [name, c] : flatten(theory_ref)) local.insert(name.module_ref());
  std::set<GlobalName> domain;
  for (const auto& [name, c] : flatten(v.from)) domain.insert(name);
  AssignmentTable table = table_for(*this, view);
  auto translate = [&](auto&& self, const GlobalName& c) -> Term {
    if (local.count(c.module_ref())) return Term::constant(GlobalName(renamed(c.module_ref()), c.name));
    // Constants outside the view's domain, e.g. of a shared meta-theory.
    if (!domain.count(c)) return Term::constant(c);
    auto it = table.find(c);
    if (it != table.end()) return it->second->value;
    const Constant* decl = constant(c);
    if (decl && decl->definiens)
      return map_constants(*decl->definiens, [&](const GlobalName& n) { return self(self, n); });
    throw ResolveError("view " + view.str() + " has no assignment for " + c.short_str());
  };
  auto tr = [&](const Term& x) {
    return map_constants(x, [&](const GlobalName& n) { return translate(translate, n); });
  };
  Theory out;
  out.path = renamed(t.path);
  out.meta = v.to;
  out.loc = t.loc;
  for (const auto& d : t.decls) {
    if (const auto* c = std::get_if<Constant>(&d)) {
      Constant nc = *c;
      if (nc.type) nc.type = tr(*nc.type);
      if (nc.definiens) nc.definiens = tr(*nc.definiens);
      out.decls.emplace_back(std::move(nc));
    } else {
      const auto& inc = std::get<Include>(d);
      out.decls.emplace_back(Include{renamed(inc.target), inc.loc});
    }
  }
  return out;
}

ParseScope TheoryGraph::scope_for(const ModuleRef& ref) const {
  if (const View* v = view(ref)) return scope_for(v->to);
  const Theory& t = require_theory(ref);
  std::vector<ScopeEntry> entries;
  for (const Constant* c : t.constants()) entries.push_back({GlobalName(ref, c->name), c->notation});
  for (const auto& [name, c] : flatten(ref)) entries.push_back({name, c->notation});
  for (const auto& m : meta_chain(ref))
    for (const auto& [name, c] : flatten(m)) entries.push_back({name, c->notation});
  return ParseScope(std::move(entries));
}

}  // namespace um

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

#include "um/session.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "um/builtins.hpp"
#include "um/error.hpp"
#include "um/omdoc.hpp"
#include "um/stdlib.hpp"
#include "um/surface.hpp"

namespace um {

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void append_unique(std::vector<ModuleRef>& out, const std::vector<ModuleRef>& add) {
  for (const auto& m : add)
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
}

}  // namespace

Session::Session(bool load_stdlib) {
  add_builtins(graph_);
  if (!load_stdlib) return;
  std::vector<SourceText> mmt;
  for (const auto& f : stdlib_sources()) {
    if (ends_with(f.name, ".omdoc")) append_unique(stdlib_modules_, ingest_omdoc(f.text, graph_, f.name));
    else mmt.push_back({f.name, std::string(f.text)});
  }
  append_unique(stdlib_modules_, parse_modules(mmt, graph_));
  rebuild_rules();
}

const NativeRegistry& Session::registry() const { return stdlib_registry(); }

bool Session::replaceable(const ModuleRef& m) const {
  return std::find(stdlib_modules_.begin(), stdlib_modules_.end(), m) != stdlib_modules_.end() &&
         std::find(project_modules_.begin(), project_modules_.end(), m) == project_modules_.end();
}

std::vector<ModuleRef> Session::load_project(const std::filesystem::path& root) {
  std::filesystem::path dir = root / "source";
  if (!std::filesystem::is_directory(dir)) throw Error("no source directory in " + root.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  TheoryGraph staged = graph_;
  std::vector<ModuleRef> added;
  auto may_replace = [&](const ModuleRef& m) {
    return replaceable(m) && std::find(added.begin(), added.end(), m) == added.end();
  };
  std::vector<SourceText> mmt;
  for (const auto& p : files) {
    std::string ext = p.extension().string();
    if (ext == ".omdoc") append_unique(added, ingest_omdoc(read_file(p), staged, p.string(), may_replace));
    else if (ext == ".mmt") mmt.push_back({p.string(), read_file(p)});
  }
  SurfaceOptions opts;
  opts.may_replace = may_replace;
  append_unique(added, parse_modules(mmt, staged, opts));
  std::swap(graph_, staged);
  try {
    rebuild_rules();
  } catch (...) {
    std::swap(graph_, staged);
    throw;
  }
  append_unique(project_modules_, added);
  return added;
}

std::vector<ModuleRef> Session::add_source(std::string_view text, const std::string& file) {
  TheoryGraph before = graph_;
  auto added = parse_modules({{file, std::string(text)}}, graph_);
  try {
    rebuild_rules();
  } catch (...) {
    graph_ = std::move(before);
    throw;
  }
  append_unique(project_modules_, added);
  return added;
}

std::vector<ModuleRef> Session::ingest(std::string_view xml, const std::string& file) {
  auto added = ingest_omdoc(xml, graph_, file);
  append_unique(project_modules_, added);
  return added;
}

void Session::rebuild_rules() {
  RuleBase rules;
  std::vector<GlobalName> missing;
  for (const auto& m : graph_.modules()) {
    if (!is_realization(graph_, m)) continue;
    RealizationRules r = rules_of(graph_, m, registry());
    rules.merge(r.rules);
    missing.insert(missing.end(), r.unimplemented.begin(), r.unimplemented.end());
  }
  rules_ = std::move(rules);
  unimplemented_ = std::move(missing);
}

ModuleRef Session::resolve_theory(std::string_view ref) const {
  std::optional<ModuleRef> r;
  try {
    r = graph_.resolve(ref, kCdBase);
  } catch (const ParseError& e) {
    throw ResolveError(e.detail());
  }
  if (!r || !graph_.theory(*r)) throw ResolveError("unknown theory '" + std::string(ref) + "'");
  return *r;
}

Term Session::parse(std::string_view text, const ModuleRef& theory) const {
  return parse_term(text, scope(theory));
}

std::string Session::render(const Term& t, const ModuleRef& theory) const {
  return render_term(t, scope(theory));
}

std::vector<Diagnostic> Session::check(const std::vector<ModuleRef>& modules) const {
  std::vector<Diagnostic> out;
  for (const auto& m : modules) {
    if (graph_.theory(m)) {
      auto d = lint_theory(graph_, m);
      out.insert(out.end(), d.begin(), d.end());
      continue;
    }
    const View* v = graph_.view(m);
    if (!v) continue;
    for (const auto& name : graph_.check_view(m)) {
      const Assignment* a = v->find(name.name);
      out.push_back({"error", a ? a->loc : v->loc, name, "has no implementation in view " + m.name});
    }
    if (!is_realization(graph_, m)) continue;
    try {
      RealizationRules r = rules_of(graph_, m, registry());
      for (const auto& name : r.unimplemented) {
        const Assignment* a = v->find(name.name);
        if (a && a->escaped() && !a->blank())
          out.push_back({"warning", a->loc, name, "has no native binding " + m.name + "?" + name.name});
      }
    } catch (const Error& e) {
      out.push_back({"error", v->loc, GlobalName(m, ""), e.what()});
    }
  }
  return out;
}

}  // namespace um

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

#include "um/codegen.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "um/error.hpp"
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

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out || !out.write(text.data(), static_cast<std::streamsize>(text.size())))
    throw Error("cannot write " + p.string());
}

struct Stub {
  GlobalName name;
  const Constant* constant;
  const Assignment* assignment;
  Arity arity;
};

// Constants the view realizes itself: its own assignments plus the
// definition-less constants no included view covers, in flatten order.
std::vector<Stub> stubs_of(const TheoryGraph& g, const View& v) {
  std::vector<Stub> out;
  for (const auto& [name, c] : g.flatten(v.from)) {
    const Assignment* own = v.find(name.name);
    if (!own) {
      if (c->definiens || g.find_assignment(v.path, name)) continue;
    }
    out.push_back({name, c, own, realized_arity(*c, own)});
  }
  return out;
}

// Parameter names: from the assignment when it lists a matching signature.
std::vector<std::string> param_names(const Stub& s) {
  std::size_t want = s.arity.kind == Arity::Kind::Fixed      ? static_cast<std::size_t>(s.arity.n)
                     : s.arity.kind == Arity::Kind::Flexible ? static_cast<std::size_t>(s.arity.n) + 1
                                                             : 2;
  if (s.assignment && s.assignment->params && s.assignment->params->size() == want) {
    std::vector<std::string> out;
    for (const auto& p : *s.assignment->params) out.push_back(p.name);
    return out;
  }
  std::vector<std::string> out;
  if (s.arity.kind == Arity::Kind::Binder) return {"ctx", "body"};
  for (int i = 0; i < s.arity.n; ++i) out.push_back("a" + std::to_string(i + 1));
  if (s.arity.kind == Arity::Kind::Flexible) out.push_back("args");
  return out;
}

std::string signature(const Stub& s) {
  auto names = param_names(s);
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    bool seq = s.arity.kind == Arity::Kind::Flexible && i + 1 == names.size();
    bool ctx = s.arity.kind == Arity::Kind::Binder && i == 0;
    out += (seq ? "std::span<const Term> " : ctx ? "const Context& " : "const Term& ") + names[i];
  }
  return out;
}

// Surface parameter list for an inserted assignment.
std::string surface_params(const Stub& s) {
  auto names = param_names(s);
  std::string out = "(";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    bool seq = s.arity.kind == Arity::Kind::Flexible && i + 1 == names.size();
    bool ctx = s.arity.kind == Arity::Kind::Binder && i == 0;
    out += names[i] + ": " + (seq ? "List[Term]" : ctx ? "Context" : "Term");
  }
  return out + ")";
}

std::string snippet_of(const Assignment* a) {
  return a && a->escaped() ? a->value.foreign_content() : std::string();
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<ModuleRef> project_realizations(const Session& s) {
  std::vector<ModuleRef> out;
  for (const auto& m : s.project_modules())
    if (is_realization(s.graph(), m)) out.push_back(m);
  return out;
}

std::string stub_source(const TheoryGraph& g, const ModuleRef& ref) {
  const View& v = g.require_view(ref);
  std::string out;
  out += "// Generated from view " + v.path.str() + " out of " + v.from.str() + ".\n";
  out += "// Only text between start and end markers is merged back by integrate.\n\n";
  out += "struct " + v.path.name + " {\n";
  bool first = true;
  for (const auto& s : stubs_of(g, v)) {
    if (!first) out += "\n";
    first = false;
    std::string marker = v.path.name + "?" + s.name.name;
    out += "  std::optional<Term> " + s.name.module + "_" + s.name.name + "(" + signature(s) + ") {\n";
    out += "    // start " + marker + "\n";
    std::string snippet = snippet_of(s.assignment);
    if (!snippet.empty()) out += snippet + "\n";
    out += "    // end " + marker + "\n";
    out += "  }\n";
  }
  out += "};\n";
  return out;
}

std::vector<std::filesystem::path> extract(const Session& s, const std::filesystem::path& root) {
  std::vector<std::filesystem::path> written;
  std::filesystem::path dir = root / "generated";
  for (const auto& ref : project_realizations(s)) {
    if (stubs_of(s.graph(), s.graph().require_view(ref)).empty()) continue;
    std::filesystem::create_directories(dir);
    std::filesystem::path p = dir / (ref.name + ".cpp");
    write_file(p, stub_source(s.graph(), ref));
    written.push_back(p);
  }
  return written;
}

std::vector<Region> read_regions(const std::string& text, const std::string& file) {
  std::vector<Region> out;
  std::set<std::string> seen;
  std::optional<Region> open;
  std::string open_marker;
  int open_line = 0;
  std::vector<std::string> body;
  std::size_t pos = 0;
  int line = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string raw = text.substr(pos, eol - pos);
    ++line;
    std::string t = trim(raw);
    bool start = t.rfind("// start ", 0) == 0;
    bool end = t.rfind("// end ", 0) == 0;
    if (start || end) {
      std::string marker = trim(t.substr(start ? 9 : 7));
      std::size_t q = marker.find('?');
      if (q == std::string::npos || q == 0 || q + 1 == marker.size())
        throw ParseError("malformed marker '" + marker + "'", line, 1, file);
      if (start) {
        if (open)
          throw ParseError("marker 'start " + marker + "' inside region '" + open_marker + "' opened at line " +
                               std::to_string(open_line),
                           line, 1, file);
        if (!seen.insert(marker).second) throw ParseError("duplicate marker 'start " + marker + "'", line, 1, file);
        open = Region{marker.substr(0, q), marker.substr(q + 1), {}};
        open_marker = marker;
        open_line = line;
        body.clear();
      } else {
        if (!open) throw ParseError("marker 'end " + marker + "' without start", line, 1, file);
        if (marker != open_marker)
          throw ParseError("marker 'end " + marker + "' does not close 'start " + open_marker + "'", line, 1, file);
        for (std::size_t i = 0; i < body.size(); ++i) {
          if (i) open->text += "\n";
          open->text += body[i];
        }
        out.push_back(std::move(*open));
        open.reset();
      }
    } else if (open) {
      body.push_back(raw);
    }
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  if (open) throw ParseError("marker 'start " + open_marker + "' has no matching end", open_line, 1, file);
  return out;
}

std::vector<std::filesystem::path> integrate(const Session& s, const std::filesystem::path& root) {
  const TheoryGraph& g = s.graph();
  std::filesystem::path dir = root / "generated";
  std::vector<std::filesystem::path> changed;
  if (!std::filesystem::is_directory(dir)) return changed;
  std::map<std::string, ModuleRef> views;
  for (const auto& ref : project_realizations(s)) views.emplace(ref.name, ref);

  struct Edit {
    std::size_t begin, end;
    std::string text;
  };
  std::map<std::string, std::vector<Edit>> edits;  // by source file

  std::vector<std::filesystem::path> stubs;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".cpp") stubs.push_back(e.path());
  std::sort(stubs.begin(), stubs.end());
  for (const auto& p : stubs) {
    for (const auto& r : read_regions(read_file(p), p.string())) {
      auto vit = views.find(r.view);
      if (vit == views.end()) throw ResolveError(p.string() + ": region " + r.view + "?" + r.constant + " names an unknown view");
      const View& v = g.require_view(vit->second);
      auto all = stubs_of(g, v);
      auto sit = std::find_if(all.begin(), all.end(), [&](const Stub& st) { return st.name.name == r.constant; });
      if (sit == all.end())
        throw ResolveError(p.string() + ": region " + r.view + "?" + r.constant + " names an unknown constant");
      const Assignment* a = sit->assignment;
      if (a) {
        if (!a->escaped())
          throw InvalidError(p.string() + ": " + r.view + "?" + r.constant + " is assigned an expression, not a snippet");
        if (a->value.foreign_content() == r.text) continue;
        edits[v.loc.file].push_back(
            {a->snippet_span->first, a->snippet_span->second, "\"" + escape_snippet(r.text) + "\""});
      } else {
        if (r.text.empty()) continue;
        edits[v.loc.file].push_back({v.end_offset, v.end_offset,
                                     "\n" + v.indent + r.constant + " = " + surface_params(*sit) + " \"" +
                                         escape_snippet(r.text) + "\""});
      }
    }
  }
  for (auto& [file, list] : edits) {
    std::string text = read_file(file);
    std::stable_sort(list.begin(), list.end(), [](const Edit& a, const Edit& b) { return a.begin > b.begin; });
    // Insertions at one offset keep their region order.
    for (std::size_t i = 0; i < list.size();) {
      std::size_t j = i;
      std::string combined;
      while (j < list.size() && list[j].begin == list[i].begin && list[j].end == list[i].begin) ++j;
      if (j > i) {
        for (std::size_t k = i; k < j; ++k) combined += list[k].text;
        text.replace(list[i].begin, 0, combined);
        i = j;
        continue;
      }
      text.replace(list[i].begin, list[i].end - list[i].begin, list[i].text);
      ++i;
    }
    write_file(file, text);
    changed.emplace_back(file);
  }
  return changed;
}

std::string load_report(const Session& s) {
  std::string out = "rules: " + std::to_string(s.rules().size()) + "\n";
  for (const auto& u : s.unimplemented()) out += "unimplemented " + u.short_str() + "\n";
  out += run_tests(s.graph(), s.rules(), collect_tests(s.graph()), s.fuel()).str();
  return out;
}

}  // namespace um

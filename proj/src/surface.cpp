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

#include "um/surface.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "um/error.hpp"

namespace um {

std::string escape_snippet(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string unescape_snippet(std::string_view body) {
  std::string out;
  out.reserve(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '\\' && i + 1 < body.size() && (body[i + 1] == '"' || body[i + 1] == '\\')) ++i;
    out += body[i];
  }
  return out;
}

namespace {

constexpr const char* kSnippetFormat = "native";

bool space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && space(s[b])) ++b;
  while (e > b && space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

bool starts_with_word(std::string_view s, std::string_view word) {
  return s.size() > word.size() && s.substr(0, word.size()) == word && space(s[word.size()]);
}

void line_col(const std::string& text, std::size_t offset, int& line, int& col) {
  line = 1;
  col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
      ++col;
    }
  }
}

int line_of(const std::string& text, std::size_t offset) {
  int line, col;
  line_col(text, offset, line, col);
  return line;
}

[[noreturn]] void fail_at(const SourceText& src, std::size_t offset, const std::string& msg) {
  int line, col;
  line_col(src.text, offset, line, col);
  throw ParseError(msg, line, col, src.file);
}

// `file:line: msg`, for failures that are not syntax errors.
std::string located(const SourceText& src, std::size_t offset, const std::string& msg) {
  return src.file + ":" + std::to_string(line_of(src.text, offset)) + ": " + msg;
}

struct Stmt {
  const SourceText* src = nullptr;
  std::size_t begin = 0;
  std::size_t end = 0;
  int indent = 0;
  bool header = false;

  std::string_view text() const {
    return std::string_view(src->text).substr(begin, end - begin);
  }
};

std::vector<Stmt> split_statements(const SourceText& src) {
  const std::string& t = src.text;
  std::vector<Stmt> out;
  bool in_string = false;
  bool open = false;
  auto scan = [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      if (in_string) {
        if (t[i] == '\\') ++i;
        else if (t[i] == '"') in_string = false;
      } else if (t[i] == '"') {
        in_string = true;
      }
    }
  };
  auto header_incomplete = [](const Stmt& s) {
    std::string_view x = s.text();
    return starts_with_word(x, "view") && x.find("->") == std::string_view::npos &&
           x.find("\xE2\x86\x92") == std::string_view::npos;
  };
  std::size_t pos = 0;
  while (pos <= t.size()) {
    std::size_t eol = t.find('\n', pos);
    if (eol == std::string::npos) eol = t.size();
    std::size_t end = eol;
    if (end > pos && t[end - 1] == '\r') --end;
    std::string_view line(t.data() + pos, end - pos);
    if (open && in_string) {
      out.back().end = end;
      scan(pos, end);
    } else {
      std::string_view tl = trim(line);
      if (tl.empty() || tl.substr(0, 2) == "//") {
        open = false;
      } else {
        int indent = 0;
        while (indent < static_cast<int>(line.size()) && (line[indent] == ' ' || line[indent] == '\t'))
          ++indent;
        bool cont = false;
        if (open) {
          const Stmt& cur = out.back();
          if (cur.header) cont = header_incomplete(cur);
          else cont = indent > cur.indent || tl.front() == ':' || tl.front() == '=' || tl.front() == '#';
        }
        if (cont) {
          out.back().end = end;
          scan(pos + indent, end);
        } else {
          Stmt s;
          s.src = &src;
          s.begin = pos + indent;
          s.end = end;
          s.indent = indent;
          s.header = indent == 0 && (starts_with_word(tl, "theory") || starts_with_word(tl, "view") ||
                                     starts_with_word(tl, "namespace"));
          out.push_back(s);
          open = true;
          scan(s.begin, end);
        }
      }
    }
    if (eol == t.size()) break;
    pos = eol + 1;
  }
  if (in_string) fail_at(src, out.back().begin, "unterminated string");
  return out;
}

struct RawModule {
  bool is_view = false;
  ModuleRef path;
  const SourceText* src = nullptr;
  std::size_t header_offset = 0;
  std::string meta, from, to;
  std::vector<Stmt> body;
  std::size_t end_offset = 0;
  std::string indent = "  ";

  SourceLoc loc() const { return {src->file, line_of(src->text, header_offset)}; }
};

std::string ident_prefix(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && ident_char(s[i])) ++i;
  return std::string(s.substr(0, i));
}

std::vector<RawModule> group_modules(const SourceText& src, const std::string& default_base) {
  std::vector<RawModule> mods;
  std::string base = normalize_uri(default_base);
  RawModule* cur = nullptr;
  for (const Stmt& s : split_statements(src)) {
    std::string_view text = s.text();
    if (s.indent == 0) {
      cur = nullptr;
      if (starts_with_word(text, "namespace")) {
        base = normalize_uri(trim(text.substr(9)));
        continue;
      }
      bool is_view = starts_with_word(text, "view");
      if (!is_view && !starts_with_word(text, "theory"))
        fail_at(src, s.begin, "expected 'theory', 'view' or 'namespace'");
      std::string_view rest = trim(text.substr(is_view ? 4 : 6));
      if (!rest.empty() && rest.back() == '=') rest = trim(rest.substr(0, rest.size() - 1));
      RawModule m;
      m.is_view = is_view;
      m.src = &src;
      m.header_offset = s.begin;
      m.end_offset = s.end;
      std::string name = ident_prefix(rest);
      if (name.empty()) fail_at(src, s.begin, "expected a module name");
      m.path = ModuleRef(base, name);
      rest = trim(rest.substr(name.size()));
      if (is_view) {
        if (rest.empty() || rest.front() != ':') fail_at(src, s.begin, "expected ':' after view name");
        rest = trim(rest.substr(1));
        std::size_t arrow = rest.find("->");
        std::size_t len = 2;
        if (arrow == std::string_view::npos) {
          arrow = rest.find("\xE2\x86\x92");
          len = 3;
        }
        if (arrow == std::string_view::npos) fail_at(src, s.begin, "expected '->' in view header");
        m.from = std::string(trim(rest.substr(0, arrow)));
        m.to = std::string(trim(rest.substr(arrow + len)));
        if (m.from.empty() || m.to.empty()) fail_at(src, s.begin, "view needs a domain and codomain");
      } else if (!rest.empty()) {
        if (rest.front() != ':') fail_at(src, s.begin, "expected ':' before the meta-theory");
        m.meta = std::string(trim(rest.substr(1)));
        if (m.meta.empty()) fail_at(src, s.begin, "missing meta-theory");
      }
      mods.push_back(std::move(m));
      cur = &mods.back();
      continue;
    }
    if (!cur) fail_at(src, s.begin, "statement outside of a theory or view");
    if (cur->body.empty()) cur->indent = std::string(src.text.substr(s.begin - s.indent, s.indent));
    cur->body.push_back(s);
    cur->end_offset = s.end;
  }
  return mods;
}

// Reads a quoted snippet starting at `text[0] == '"'`; returns the offset
// just past the closing quote.
std::size_t read_quoted(std::string_view text, std::string& content) {
  std::size_t i = 1;
  std::string body;
  while (i < text.size() && text[i] != '"') {
    if (text[i] == '\\' && i + 1 < text.size()) i += 2;
    else ++i;
  }
  if (i >= text.size()) return std::string_view::npos;
  content = unescape_snippet(text.substr(1, i - 1));
  return i + 1;
}

class Elaborator {
 public:
  Elaborator(TheoryGraph& g, const SurfaceOptions& opts) : g_(g), opts_(opts) {}

  std::vector<ModuleRef> run(const std::vector<SourceText>& sources) {
    for (const auto& s : sources) {
      for (auto& m : group_modules(s, opts_.default_base)) {
        if (batch_.count(m.path))
          throw ConflictError(located(*m.src, m.header_offset, "module " + m.path.str() + " is defined twice"));
        ModuleRef p = m.path;
        order_.push_back(p);
        batch_.emplace(p, std::move(m));
      }
    }
    for (const auto& p : order_) {
      if (g_.has(p) && !(opts_.may_replace && opts_.may_replace(p))) {
        const RawModule& m = batch_.at(p);
        throw ConflictError(located(*m.src, m.header_offset, "module " + p.str() + " is already defined"));
      }
    }
    std::vector<ModuleRef> sorted;
    std::set<ModuleRef> done, active;
    for (const auto& p : order_) visit(p, sorted, done, active);
    for (const auto& p : sorted) {
      const RawModule& m = batch_.at(p);
      if (m.is_view) elaborate_view(m);
      else elaborate_theory(m);
    }
    return sorted;
  }

 private:
  ModuleRef resolve(const RawModule& m, std::string_view text, std::size_t offset) {
    text = trim(text);
    const std::string& base = m.path.base;
    if (!text.empty() && text.front() == '?') return ModuleRef(base, text.substr(1));
    if (text.find('?') != std::string_view::npos) {
      try {
        return ModuleRef::parse(text);
      } catch (const ParseError& e) {
        fail_at(*m.src, offset, e.detail());
      }
    }
    ModuleRef local(base, text);
    if (batch_.count(local) || g_.has(local)) return local;
    std::set<ModuleRef> found;
    for (const auto& [p, raw] : batch_)
      if (p.name == text) found.insert(p);
    for (const auto& p : g_.modules())
      if (p.name == text) found.insert(p);
    if (found.empty()) throw ResolveError(located(*m.src, offset, "unknown module '" + std::string(text) + "'"));
    if (found.size() > 1) {
      std::string names;
      for (const auto& f : found) names += " " + f.str();
      fail_at(*m.src, offset, "ambiguous module name '" + std::string(text) + "':" + names);
    }
    return *found.begin();
  }

  std::vector<ModuleRef> dependencies(const RawModule& m) {
    std::vector<ModuleRef> deps;
    if (m.is_view) {
      deps.push_back(resolve(m, m.from, m.header_offset));
      deps.push_back(resolve(m, m.to, m.header_offset));
    } else if (!m.meta.empty()) {
      deps.push_back(resolve(m, m.meta, m.header_offset));
    }
    for (const auto& s : m.body) {
      std::string_view t = s.text();
      if (starts_with_word(t, "include")) deps.push_back(resolve(m, t.substr(7), s.begin));
    }
    return deps;
  }

  void visit(const ModuleRef& p, std::vector<ModuleRef>& sorted, std::set<ModuleRef>& done,
             std::set<ModuleRef>& active) {
    if (done.count(p)) return;
    const RawModule& m = batch_.at(p);
    if (!active.insert(p).second)
      fail_at(*m.src, m.header_offset, "cyclic dependency through " + p.str());
    for (const auto& d : dependencies(m))
      if (batch_.count(d) && d != p) visit(d, sorted, done, active);
    active.erase(p);
    done.insert(p);
    sorted.push_back(p);
  }

  Term parse_at(const RawModule& m, std::size_t offset, std::string_view text,
                const ParseScope& scope) {
    try {
      return parse_term(text, scope);
    } catch (const ParseError& e) {
      int line, col;
      line_col(m.src->text, offset, line, col);
      if (e.line() <= 1) {
        col += std::max(e.column(), 1) - 1;
      } else {
        line += e.line() - 1;
        col = e.column();
      }
      throw ParseError(e.detail(), line, col, m.src->file);
    }
  }

  // Parses a definiens or assignment value: escaped snippet, `FMP <formula>`,
  // or an expression.
  Term value_at(const RawModule& m, std::size_t offset, std::string_view text,
                const ParseScope& scope, std::optional<std::pair<std::size_t, std::size_t>>* span) {
    std::size_t lead = 0;
    while (lead < text.size() && space(text[lead])) ++lead;
    offset += lead;
    text = text.substr(lead);
    while (!text.empty() && space(text.back())) text.remove_suffix(1);
    if (text.empty()) fail_at(*m.src, offset, "missing value");
    if (text.front() == '"') {
      std::string content;
      std::size_t end = read_quoted(text, content);
      if (end == std::string_view::npos) fail_at(*m.src, offset, "unterminated string");
      if (!trim(text.substr(end)).empty()) fail_at(*m.src, offset + end, "unexpected text after string");
      if (span) *span = std::make_pair(offset, offset + end);
      return Term::foreign(kSnippetFormat, std::move(content));
    }
    if (text.size() > 4 && text.substr(0, 3) == "FMP" && space(text[3])) {
      if (const GlobalName* fmp = scope.lookup("FMP")) {
        std::size_t k = 3;
        while (k < text.size() && space(text[k])) ++k;
        return Term::app(Term::constant(*fmp), {parse_at(m, offset + k, text.substr(k), scope)});
      }
    }
    return parse_at(m, offset, text, scope);
  }

  struct Parts {
    std::size_t type_b = std::string_view::npos, type_e = 0;
    std::size_t def_b = std::string_view::npos, def_e = 0;
    std::size_t not_b = std::string_view::npos;
  };

  // Splits `rest` (text after a constant name) into type, definiens and
  // notation at the top-level `:`, `=` and ` #`.
  Parts split_parts(const RawModule& m, std::size_t offset, std::string_view rest) {
    Parts p;
    std::size_t i = 0;
    while (i < rest.size() && space(rest[i])) ++i;
    std::size_t lead = i;
    if (i < rest.size() && rest[i] == ':') p.type_b = ++i;
    int depth = 0;
    bool in_string = false;
    for (std::size_t j = i; j < rest.size(); ++j) {
      char c = rest[j];
      if (in_string) {
        if (c == '\\') ++j;
        else if (c == '"') in_string = false;
        continue;
      }
      if (c == '"') {
        in_string = true;
        continue;
      }
      if (c == '(' || c == '[' || c == '{') ++depth;
      if (c == ')' || c == ']' || c == '}') depth = std::max(0, depth - 1);
      if (depth != 0) continue;
      if (c == '#' && (j == 0 || space(rest[j - 1]))) {
        p.not_b = j + 1;
        break;
      }
      if (c == '=' && p.def_b == std::string_view::npos && (j == 0 || space(rest[j - 1])) &&
          (j + 1 == rest.size() || space(rest[j + 1]) || rest[j + 1] == '"')) {
        p.def_b = j + 1;
      }
    }
    std::size_t end = p.not_b == std::string_view::npos ? rest.size() : p.not_b - 1;
    if (p.def_b != std::string_view::npos) p.def_e = end;
    if (p.type_b != std::string_view::npos)
      p.type_e = p.def_b != std::string_view::npos ? p.def_b - 1 : end;
    std::size_t first = std::min({p.type_b == std::string_view::npos ? rest.size() : p.type_b - 1,
                                  p.def_b == std::string_view::npos ? rest.size() : p.def_b - 1,
                                  end});
    if (!trim(rest.substr(lead, first - lead)).empty())
      fail_at(*m.src, offset + lead, "unexpected text after constant name");
    return p;
  }

  struct RawConstant {
    Constant c;
    std::size_t offset;
    std::string_view rest;
    Parts parts;
  };

  void elaborate_theory(const RawModule& m) {
    Theory th;
    th.path = m.path;
    th.loc = m.loc();
    if (!m.meta.empty()) {
      ModuleRef meta = resolve(m, m.meta, m.header_offset);
      if (!g_.theory(meta)) fail_at(*m.src, m.header_offset, "meta-theory " + meta.str() + " is not a theory");
      th.meta = meta;
    }
    std::vector<RawConstant> raws;
    std::set<std::string> names;
    for (const auto& s : m.body) {
      std::string_view t = s.text();
      SourceLoc loc{m.src->file, line_of(m.src->text, s.begin)};
      if (starts_with_word(t, "include")) {
        ModuleRef target = resolve(m, t.substr(7), s.begin);
        if (!g_.theory(target)) fail_at(*m.src, s.begin, "included module " + target.str() + " is not a theory");
        th.decls.emplace_back(Include{target, loc});
        continue;
      }
      std::size_t off = 0;
      if (starts_with_word(t, "constant")) {
        off = 8;
        while (off < t.size() && space(t[off])) ++off;
      }
      std::string name = ident_prefix(t.substr(off));
      if (name.empty()) fail_at(*m.src, s.begin + off, "expected a constant name");
      if (!names.insert(name).second)
        fail_at(*m.src, s.begin + off, "constant " + name + " is declared twice in " + m.path.name);
      RawConstant rc;
      rc.c.name = name;
      rc.c.loc = loc;
      rc.offset = s.begin + off + name.size();
      rc.rest = t.substr(off + name.size());
      rc.parts = split_parts(m, rc.offset, rc.rest);
      if (rc.parts.not_b != std::string_view::npos) {
        try {
          rc.c.notation = parse_notation(rc.rest.substr(rc.parts.not_b));
        } catch (const InvalidError& e) {
          fail_at(*m.src, rc.offset + rc.parts.not_b, e.what());
        }
      }
      th.decls.emplace_back(rc.c);
      raws.push_back(std::move(rc));
    }
    bool replace = g_.has(th.path);
    g_.add(th, replace);
    ParseScope scope = g_.scope_for(th.path);
    std::size_t k = 0;
    for (auto& d : th.decls) {
      auto* c = std::get_if<Constant>(&d);
      if (!c) continue;
      const RawConstant& rc = raws[k++];
      const Parts& p = rc.parts;
      if (p.type_b != std::string_view::npos) {
        std::string_view tt = rc.rest.substr(p.type_b, p.type_e - p.type_b);
        if (trim(tt).empty()) fail_at(*m.src, rc.offset + p.type_b, "missing type");
        c->type = parse_at(m, rc.offset + p.type_b, tt, scope);
      }
      if (p.def_b != std::string_view::npos) {
        c->definiens =
            value_at(m, rc.offset + p.def_b, rc.rest.substr(p.def_b, p.def_e - p.def_b), scope, nullptr);
      }
    }
    g_.add(std::move(th), true);
  }

  void elaborate_view(const RawModule& m) {
    View v;
    v.path = m.path;
    v.loc = m.loc();
    v.from = resolve(m, m.from, m.header_offset);
    v.to = resolve(m, m.to, m.header_offset);
    if (!g_.theory(v.from)) fail_at(*m.src, m.header_offset, "domain " + v.from.str() + " is not a theory");
    if (!g_.theory(v.to)) fail_at(*m.src, m.header_offset, "codomain " + v.to.str() + " is not a theory");
    v.end_offset = m.end_offset;
    v.indent = m.indent;
    std::set<std::string> declared;
    for (const auto& [name, c] : g_.flatten(v.from)) declared.insert(name.name);
    ParseScope scope = g_.scope_for(v.to);
    for (const auto& s : m.body) {
      std::string_view t = s.text();
      if (starts_with_word(t, "include")) {
        ModuleRef target = resolve(m, t.substr(7), s.begin);
        if (!g_.view(target)) fail_at(*m.src, s.begin, "included module " + target.str() + " is not a view");
        v.includes.push_back(target);
        continue;
      }
      std::size_t off = 0;
      if (starts_with_word(t, "constant")) {
        off = 8;
        while (off < t.size() && space(t[off])) ++off;
      }
      std::string name = ident_prefix(t.substr(off));
      if (name.empty()) fail_at(*m.src, s.begin + off, "expected a constant name");
      if (!declared.count(name))
        fail_at(*m.src, s.begin + off, name + " is not declared in " + v.from.str());
      if (v.find(name)) fail_at(*m.src, s.begin + off, name + " is assigned twice");
      std::size_t i = off + name.size();
      while (i < t.size() && space(t[i])) ++i;
      if (i >= t.size() || t[i] != '=') fail_at(*m.src, s.begin + i, "expected '=' in assignment");
      ++i;
      Assignment a{name, Term::integer(0L), std::nullopt, {m.src->file, line_of(m.src->text, s.begin)}, std::nullopt};
      std::string_view value = t.substr(i);
      std::size_t lead = 0;
      while (lead < value.size() && space(value[lead])) ++lead;
      std::size_t voff = s.begin + i + lead;
      value = value.substr(lead);
      if (looks_like_params(value)) {
        std::size_t close = 0;
        a.params = parse_params(m, voff, value, scope, close);
        std::size_t j = close;
        while (j < value.size() && space(value[j])) ++j;
        if (value.substr(j, 2) == "=>") j += 2;
        while (j < value.size() && space(value[j])) ++j;
        if (j >= value.size() || value[j] != '"')
          fail_at(*m.src, voff + j, "expected an escaped body after the parameter list");
        a.value = value_at(m, voff + j, value.substr(j), scope, &a.snippet_span);
      } else {
        a.value = value_at(m, voff, value, scope, &a.snippet_span);
      }
      v.assignments.push_back(std::move(a));
    }
    bool replace = g_.has(v.path);
    g_.add(std::move(v), replace);
  }

  static bool looks_like_params(std::string_view v) {
    if (v.empty() || v.front() != '(') return false;
    std::size_t i = 1;
    while (i < v.size() && space(v[i])) ++i;
    if (i < v.size() && v[i] == ')') return true;
    std::size_t j = i;
    while (j < v.size() && ident_char(v[j])) ++j;
    if (j == i) return false;
    while (j < v.size() && space(v[j])) ++j;
    return j < v.size() && v[j] == ':';
  }

  std::vector<Param> parse_params(const RawModule& m, std::size_t offset, std::string_view v,
                                  const ParseScope& scope, std::size_t& close) {
    std::vector<Param> params;
    int depth = 0;
    std::size_t piece = 1;
    auto take = [&](std::size_t b, std::size_t e) {
      std::string_view p = v.substr(b, e - b);
      if (trim(p).empty()) return;
      std::size_t colon = p.find(':');
      if (colon == std::string_view::npos) fail_at(*m.src, offset + b, "expected 'name: type'");
      std::string name(trim(p.substr(0, colon)));
      if (name.empty() || ident_prefix(name) != name) fail_at(*m.src, offset + b, "malformed parameter name");
      for (const auto& q : params)
        if (q.name == name) fail_at(*m.src, offset + b, "duplicate parameter " + name);
      params.push_back({name, parse_at(m, offset + b + colon + 1, p.substr(colon + 1), scope)});
    };
    for (std::size_t i = 1; i < v.size(); ++i) {
      char c = v[i];
      if (c == '(' || c == '[' || c == '{') ++depth;
      else if ((c == ')' || c == ']' || c == '}') && depth > 0) --depth;
      else if (c == ')' && depth == 0) {
        take(piece, i);
        close = i + 1;
        return params;
      } else if (c == ',' && depth == 0) {
        take(piece, i);
        piece = i + 1;
      }
    }
    fail_at(*m.src, offset, "unclosed parameter list");
  }

  TheoryGraph& g_;
  const SurfaceOptions& opts_;
  std::map<ModuleRef, RawModule> batch_;
  std::vector<ModuleRef> order_;
};

}  // namespace

std::vector<ModuleRef> parse_modules(const std::vector<SourceText>& sources, TheoryGraph& g,
                                     const SurfaceOptions& options) {
  TheoryGraph staged = g;
  auto out = Elaborator(staged, options).run(sources);
  g = std::move(staged);
  return out;
}

}  // namespace um

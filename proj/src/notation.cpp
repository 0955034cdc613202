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

#include "um/notation.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "um/error.hpp"
#include "um/openmath.hpp"

namespace um {

using Kind = NotationToken::Kind;

namespace {

constexpr int kAtom = INT_MAX;
const char* const kPunctuation[] = {"(", ")", ",", "[", "]"};

bool ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

bool digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

bool Notation::is_binder() const {
  return std::any_of(tokens.begin(), tokens.end(),
                     [](const NotationToken& t) { return t.kind == Kind::VarList; });
}

bool Notation::has_seq() const {
  return std::any_of(tokens.begin(), tokens.end(),
                     [](const NotationToken& t) { return t.kind == Kind::SeqArg; });
}

int Notation::fixed_args() const {
  return static_cast<int>(std::count_if(tokens.begin(), tokens.end(), [](const NotationToken& t) {
    return t.kind == Kind::Arg;
  }));
}

bool Notation::delimited() const {
  return tokens.front().kind == Kind::Delim && tokens.back().kind == Kind::Delim;
}

std::string Notation::str() const {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    switch (t.kind) {
      case Kind::Delim: out += t.text; break;
      case Kind::Arg: out += std::to_string(t.index); break;
      case Kind::SeqArg: out += std::to_string(t.index) + t.text + "..."; break;
      case Kind::VarList: out += "V"; break;
    }
  }
  if (precedence != 0) out += " prec=" + std::to_string(precedence);
  return out;
}

Notation parse_notation(std::string_view src) {
  std::vector<std::string> chunks;
  {
    std::istringstream in{std::string(src)};
    std::string c;
    while (in >> c) chunks.push_back(c);
  }
  Notation n;
  if (!chunks.empty() && chunks.back().rfind("prec=", 0) == 0) {
    const std::string& p = chunks.back();
    try {
      std::size_t used = 0;
      n.precedence = std::stoi(p.substr(5), &used);
      if (used != p.size() - 5) throw std::invalid_argument(p);
    } catch (const std::exception&) {
      throw InvalidError("notation '" + std::string(src) + "': malformed precedence");
    }
    chunks.pop_back();
  }
  auto bad = [&](const std::string& why) {
    return InvalidError("notation '" + std::string(src) + "': " + why);
  };
  for (const auto& chunk : chunks) {
    if (chunk == "V") {
      n.tokens.push_back({Kind::VarList, ",", 1});
      continue;
    }
    std::string delim;
    auto flush = [&] {
      if (!delim.empty()) n.tokens.push_back({Kind::Delim, delim, 0});
      delim.clear();
    };
    std::size_t i = 0;
    while (i < chunk.size()) {
      if (!digit(chunk[i])) {
        delim += chunk[i++];
        continue;
      }
      flush();
      std::size_t j = i;
      while (j < chunk.size() && digit(chunk[j])) ++j;
      int index = std::stoi(chunk.substr(i, j - i));
      std::size_t k = j;
      std::size_t ellipsis = std::string::npos, ellipsis_len = 0;
      while (k < chunk.size() && !digit(chunk[k])) {
        if (chunk.compare(k, 3, "...") == 0) {
          ellipsis = k, ellipsis_len = 3;
          break;
        }
        if (chunk.compare(k, 3, "\xE2\x80\xA6") == 0) {
          ellipsis = k, ellipsis_len = 3;
          break;
        }
        ++k;
      }
      if (ellipsis != std::string::npos) {
        std::string sep = chunk.substr(j, ellipsis - j);
        if (sep.empty()) throw bad("sequence argument without separator");
        n.tokens.push_back({Kind::SeqArg, sep, index});
        i = ellipsis + ellipsis_len;
      } else {
        n.tokens.push_back({Kind::Arg, {}, index});
        i = j;
      }
    }
    flush();
  }
  if (n.tokens.empty()) throw bad("empty notation");

  std::vector<int> indices;
  int seqs = 0, varlists = 0;
  for (std::size_t k = 0; k < n.tokens.size(); ++k) {
    const auto& t = n.tokens[k];
    if (t.kind == Kind::Delim) continue;
    if (k > 0 && n.tokens[k - 1].kind != Kind::Delim) throw bad("adjacent argument positions");
    if (t.kind == Kind::SeqArg) ++seqs;
    if (t.kind == Kind::VarList) ++varlists;
    indices.push_back(t.index);
  }
  if (seqs > 1) throw bad("more than one sequence argument");
  if (varlists > 1) throw bad("more than one variable list");
  std::sort(indices.begin(), indices.end());
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k > 0 && indices[k] == indices[k - 1])
      throw bad("duplicate argument " + std::to_string(indices[k]));
    if (indices[k] != static_cast<int>(k) + 1) throw bad("argument positions not contiguous from 1");
  }
  if (varlists == 1) {
    if (seqs != 0 || n.fixed_args() != 1) throw bad("binder needs a variable list and one scope");
    auto vl = std::find_if(n.tokens.begin(), n.tokens.end(),
                           [](const NotationToken& t) { return t.kind == Kind::VarList; });
    auto arg = std::find_if(n.tokens.begin(), n.tokens.end(),
                            [](const NotationToken& t) { return t.kind == Kind::Arg; });
    if (arg < vl) throw bad("binder scope must follow the variable list");
  }
  return n;
}

// ---------------------------------------------------------------------------
// Scope

ParseScope::ParseScope(std::vector<ScopeEntry> entries) {
  for (auto& e : entries) {
    if (index_.count(e.name)) continue;
    index_.emplace(e.name, entries_.size());
    by_name_.emplace(e.name.name, entries_.size());
    entries_.push_back(std::move(e));
  }
  std::set<std::string> delims(std::begin(kPunctuation), std::end(kPunctuation));
  std::map<std::string, std::size_t> shapes;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& n = entries_[i].notation;
    if (!n) continue;
    auto [it, fresh] = shapes.emplace(n->str(), i);
    if (!fresh) {
      ambiguous_.insert(i);
      ambiguous_.insert(it->second);
    }
    for (const auto& t : n->tokens)
      if (t.kind == Kind::Delim || t.kind == Kind::SeqArg || t.kind == Kind::VarList)
        delims.insert(t.text);
    const auto& first = n->tokens.front();
    if (first.kind == Kind::Delim) {
      prefix_[first.text].push_back(i);
    } else if (first.kind == Kind::VarList) {
      binders_.push_back(i);
    } else {
      std::set<std::string> triggers;
      if (first.kind == Kind::SeqArg) triggers.insert(first.text);
      if (n->tokens.size() > 1 && n->tokens[1].kind == Kind::Delim) triggers.insert(n->tokens[1].text);
      for (const auto& t : triggers) infix_[t].push_back(i);
    }
  }
  auto by_length = [this](std::size_t a, std::size_t b) {
    auto la = entries_[a].notation->tokens.size();
    auto lb = entries_[b].notation->tokens.size();
    return la != lb ? la > lb : a < b;
  };
  for (auto& [k, v] : prefix_) std::stable_sort(v.begin(), v.end(), by_length);
  for (auto& [k, v] : infix_) std::stable_sort(v.begin(), v.end(), by_length);
  std::stable_sort(binders_.begin(), binders_.end(), by_length);
  delimiters_.assign(delims.begin(), delims.end());
  std::stable_sort(delimiters_.begin(), delimiters_.end(),
                   [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
}

const GlobalName* ParseScope::lookup(std::string_view name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &entries_[it->second].name;
}

const GlobalName* ParseScope::lookup(std::string_view module, std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name.module == module && e.name.name == name) return &e.name;
  return nullptr;
}

const Notation* ParseScope::notation_of(const GlobalName& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return nullptr;
  const auto& n = entries_[it->second].notation;
  return n ? &*n : nullptr;
}

bool ParseScope::is_delimiter(std::string_view text) const {
  return std::find(delimiters_.begin(), delimiters_.end(), text) != delimiters_.end();
}

const std::vector<std::size_t>& ParseScope::prefix(const std::string& text) const {
  static const std::vector<std::size_t> none;
  auto it = prefix_.find(text);
  return it == prefix_.end() ? none : it->second;
}

const std::vector<std::size_t>& ParseScope::infix(const std::string& text) const {
  static const std::vector<std::size_t> none;
  auto it = infix_.find(text);
  return it == infix_.end() ? none : it->second;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

struct Token {
  enum class K { Int, Float, Str, Ident, Uri, Foreign, Delim, End };
  K kind = K::End;
  std::string text;    // literal text, identifier, delimiter, URI, foreign content
  std::string format;  // foreign format
  std::size_t pos = 0;
  std::size_t end = 0;
  bool space_before = false;
};

std::size_t utf8_length(unsigned char c) {
  if (c < 0x80) return 1;
  if ((c >> 5) == 0x6) return 2;
  if ((c >> 4) == 0xE) return 3;
  if ((c >> 3) == 0x1E) return 4;
  return 1;
}

void line_col(std::string_view src, std::size_t pos, int& line, int& col) {
  line = 1;
  col = 1;
  for (std::size_t i = 0; i < pos && i < src.size(); ++i) {
    if (src[i] == '\n') {
      ++line;
      col = 1;
    } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
      ++col;
    }
  }
}

class Lexer {
 public:
  Lexer(std::string_view src, const ParseScope& scope) : src_(src), scope_(scope) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    std::size_t i = 0;
    for (;;) {
      bool space = false;
      while (i < src_.size() && (src_[i] == ' ' || src_[i] == '\t' || src_[i] == '\n' || src_[i] == '\r')) {
        ++i;
        space = true;
      }
      Token t;
      t.pos = i;
      t.space_before = space;
      if (i >= src_.size()) {
        t.end = i;
        out.push_back(t);
        return out;
      }
      i = next(i, t);
      t.end = i;
      out.push_back(std::move(t));
    }
  }

 private:
  [[noreturn]] void fail(std::size_t pos, const std::string& msg) const {
    int line, col;
    line_col(src_, pos, line, col);
    throw ParseError(msg, line, col);
  }

  std::size_t quoted(std::size_t i, char close, std::string& out) const {
    std::size_t start = i;
    ++i;
    while (i < src_.size() && src_[i] != close) {
      if (src_[i] == '\\' && i + 1 < src_.size()) {
        char c = src_[i + 1];
        out += c == 'n' ? '\n' : c == 't' ? '\t' : c;
        i += 2;
      } else {
        out += src_[i++];
      }
    }
    if (i >= src_.size()) fail(start, "unterminated literal");
    return i + 1;
  }

  std::size_t next(std::size_t i, Token& t) const {
    char c = src_[i];
    if (digit(c)) {
      std::size_t j = i;
      while (j < src_.size() && digit(src_[j])) ++j;
      bool is_float = false;
      if (j + 1 < src_.size() && src_[j] == '.' && digit(src_[j + 1])) {
        is_float = true;
        ++j;
        while (j < src_.size() && digit(src_[j])) ++j;
      }
      if (j < src_.size() && (src_[j] == 'e' || src_[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src_.size() && (src_[k] == '+' || src_[k] == '-')) ++k;
        if (k < src_.size() && digit(src_[k])) {
          is_float = true;
          j = k;
          while (j < src_.size() && digit(src_[j])) ++j;
        }
      }
      t.kind = is_float ? Token::K::Float : Token::K::Int;
      t.text = std::string(src_.substr(i, j - i));
      return j;
    }
    if (c == '"') {
      t.kind = Token::K::Str;
      return quoted(i, '"', t.text);
    }
    if (c == '`') {
      t.kind = Token::K::Uri;
      return quoted(i, '`', t.text);
    }
    if (c == '%') {
      std::size_t j = i + 1;
      while (j < src_.size() && (ident_char(src_[j]) || src_[j] == '-' || src_[j] == '/')) ++j;
      if (j < src_.size() && src_[j] == '"') {
        t.kind = Token::K::Foreign;
        t.format = std::string(src_.substr(i + 1, j - i - 1));
        return quoted(j, '"', t.text);
      }
    }
    std::size_t ident_len = 0;
    if (ident_char(c)) {
      while (i + ident_len < src_.size() && ident_char(src_[i + ident_len])) ++ident_len;
    }
    for (const auto& d : scope_.delimiters()) {
      if (src_.compare(i, d.size(), d) != 0) continue;
      if (ident_char(d.back()) && i + d.size() < src_.size() && ident_char(src_[i + d.size()]))
        continue;
      if (d.size() < ident_len) break;
      t.kind = Token::K::Delim;
      t.text = d;
      return i + d.size();
    }
    if (ident_len > 0) {
      std::size_t j = i + ident_len;
      if (j + 1 < src_.size() && src_[j] == '?' && ident_char(src_[j + 1])) {
        ++j;
        while (j < src_.size() && ident_char(src_[j])) ++j;
      }
      t.kind = Token::K::Ident;
      t.text = std::string(src_.substr(i, j - i));
      return j;
    }
    std::size_t len = std::min(utf8_length(static_cast<unsigned char>(c)), src_.size() - i);
    t.kind = Token::K::Delim;
    t.text = std::string(src_.substr(i, len));
    return i + len;
  }

  std::string_view src_;
  const ParseScope& scope_;
};

// ---------------------------------------------------------------------------
// Parser

struct Backtrack {};

class Parser {
 public:
  Parser(std::string_view src, const ParseScope& scope)
      : src_(src), scope_(scope), toks_(Lexer(src, scope).run()) {}

  Term parse() {
    try {
      Term t = expr(0);
      if (cur().kind != Token::K::End) fail("unexpected '" + cur().text + "'");
      return t;
    } catch (const Backtrack&) {
      int line, col;
      line_col(src_, furthest_, line, col);
      throw ParseError(message_, line, col);
    }
  }

 private:
  using K = Token::K;

  const Token& cur() const { return toks_[pos_]; }
  const Token& peek(std::size_t k = 1) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }

  [[noreturn]] void fail(const std::string& msg) {
    std::size_t at = cur().pos;
    if (at >= furthest_ || message_.empty()) {
      furthest_ = at;
      message_ = cur().kind == K::End && msg.rfind("unexpected", 0) == 0 ? "unexpected end of input"
                                                                         : msg;
    }
    throw Backtrack{};
  }

  bool at_delim(const std::string& text) const {
    return cur().kind == K::Delim && cur().text == text;
  }

  // Consumes tokens spelling `d`, possibly split by the lexer (`) =>` vs `)=>`).
  bool eat_delim(const std::string& d) {
    if ((cur().kind != K::Delim && cur().kind != K::Ident) || d.compare(0, cur().text.size(), cur().text) != 0)
      return false;
    std::string acc;
    std::size_t p = pos_;
    while (p < toks_.size() && (toks_[p].kind == K::Delim || toks_[p].kind == K::Ident)) {
      acc += toks_[p].text;
      ++p;
      if (acc == d) {
        pos_ = p;
        return true;
      }
      if (d.compare(0, acc.size(), acc) != 0) return false;
    }
    return false;
  }

  void expect_delim(const std::string& d) {
    if (!eat_delim(d)) fail("expected '" + d + "'");
  }

  Term expr(int min_prec) {
    Term left = prefix();
    for (;;) {
      if (cur().kind != K::Delim && cur().kind != K::Ident) break;
      const auto& cands = scope_.infix(cur().text);
      bool advanced = false;
      for (std::size_t idx : cands) {
        const Notation& n = *scope_.entries()[idx].notation;
        if (n.precedence <= min_prec) continue;
        std::size_t save = pos_;
        try {
          left = match(idx, &left);
          advanced = true;
          break;
        } catch (const Backtrack&) {
          pos_ = save;
        }
      }
      if (!advanced) break;
    }
    return left;
  }

  Term prefix() {
    const Token& t = cur();
    switch (t.kind) {
      case K::End: fail("unexpected end of input");
      case K::Int:
        ++pos_;
        return postfix(Term::integer(BigInt(t.text, 10)));
      case K::Float:
        ++pos_;
        return postfix(Term::floating(std::stod(t.text)));
      case K::Str:
        ++pos_;
        return Term::string(t.text);
      case K::Foreign:
        ++pos_;
        return Term::foreign(t.format, t.text);
      case K::Uri: {
        ++pos_;
        try {
          return postfix(Term::constant(GlobalName::parse(t.text)));
        } catch (const ParseError&) {
          --pos_;
          fail("malformed URI '" + t.text + "'");
        }
      }
      case K::Ident: {
        if (auto b = try_binders()) return *b;
        ++pos_;
        return postfix(identifier(t.text));
      }
      case K::Delim: break;
    }
    if (t.text == "-" && (peek().kind == K::Int || peek().kind == K::Float) && !peek().space_before) {
      const Token& num = peek();
      pos_ += 2;
      if (num.kind == K::Int) return postfix(Term::integer(-BigInt(num.text, 10)));
      return postfix(Term::floating(-std::stod(num.text)));
    }
    for (std::size_t idx : scope_.prefix(t.text)) {
      std::size_t save = pos_;
      try {
        Term r = match(idx, nullptr);
        return r.kind() == TermKind::Const ? postfix(r) : r;
      } catch (const Backtrack&) {
        pos_ = save;
      }
    }
    if (t.text == "(") {
      ++pos_;
      Term inner = expr(0);
      expect_delim(")");
      return postfix(inner);
    }
    if (!t.text.empty() && ident_char(t.text.front()) && ident_char(t.text.back())) {
      ++pos_;
      return postfix(identifier(t.text));
    }
    fail("unexpected '" + t.text + "'");
  }

  std::optional<Term> try_binders() {
    for (std::size_t idx : scope_.binders()) {
      std::size_t save = pos_;
      try {
        return match(idx, nullptr);
      } catch (const Backtrack&) {
        pos_ = save;
      }
    }
    return std::nullopt;
  }

  // Fallback forms `head(a, ...)` and `head[x, ...](scope)`, directly
  // adjacent to the head.
  Term postfix(Term head) {
    for (;;) {
      if (at_delim("(") && !cur().space_before) {
        ++pos_;
        std::vector<Term> args;
        args.push_back(expr(0));
        while (at_delim(",")) {
          ++pos_;
          args.push_back(expr(0));
        }
        expect_delim(")");
        head = Term::app(std::move(head), std::move(args));
      } else if (at_delim("[") && !cur().space_before) {
        ++pos_;
        Context ctx;
        if (!at_delim("]")) {
          ctx.push_back(var_name());
          while (at_delim(",")) {
            ++pos_;
            ctx.push_back(var_name());
          }
        }
        expect_delim("]");
        expect_delim("(");
        auto mark = bound_.size();
        bound_.insert(bound_.end(), ctx.begin(), ctx.end());
        std::optional<Term> scope;
        try {
          scope = expr(0);
        } catch (...) {
          bound_.resize(mark);
          throw;
        }
        bound_.resize(mark);
        expect_delim(")");
        try {
          head = Term::bind(std::move(head), std::move(ctx), std::move(*scope));
        } catch (const InvalidError& e) {
          fail(e.what());
        }
      } else {
        return head;
      }
    }
  }

  std::string var_name() {
    if (cur().kind != K::Ident || cur().text.find('?') != std::string::npos)
      fail("expected a variable name");
    return toks_[pos_++].text;
  }

  Term identifier(const std::string& name) {
    if (std::find(bound_.rbegin(), bound_.rend(), name) != bound_.rend()) return Term::var(name);
    auto q = name.find('?');
    if (q != std::string::npos) {
      const GlobalName* g = scope_.lookup(std::string_view(name).substr(0, q),
                                          std::string_view(name).substr(q + 1));
      if (!g) {
        --pos_;
        fail("unknown constant '" + name + "'");
      }
      return Term::constant(*g);
    }
    if (const GlobalName* g = scope_.lookup(name)) return Term::constant(*g);
    return Term::var(name);
  }

  // Matches notation `idx`; `left` is the already parsed first argument for
  // infix use.
  Term match(std::size_t idx, const Term* left) {
    const ScopeEntry& entry = scope_.entries()[idx];
    const Notation& n = *entry.notation;
    std::map<int, std::vector<Term>> slots;
    Context ctx;
    auto mark = bound_.size();
    struct Restore {
      std::vector<std::string>& v;
      std::size_t m;
      ~Restore() { v.resize(m); }
    } restore{bound_, mark};

    const std::size_t last = n.tokens.size() - 1;
    bool consumed_delim = false;
    for (std::size_t k = 0; k <= last; ++k) {
      const auto& tok = n.tokens[k];
      bool edge = k == 0 || k == last;
      int prec = edge ? n.precedence : 0;
      switch (tok.kind) {
        case Kind::Delim:
          expect_delim(tok.text);
          consumed_delim = true;
          break;
        case Kind::Arg:
          if (k == 0) slots[tok.index].push_back(*left);
          else slots[tok.index].push_back(expr(prec));
          break;
        case Kind::SeqArg: {
          auto& seq = slots[tok.index];
          if (k == 0) seq.push_back(*left);
          else seq.push_back(expr(prec));
          while (at_delim(tok.text)) {
            std::size_t save = pos_;
            ++pos_;
            try {
              seq.push_back(expr(prec));
              consumed_delim = true;
            } catch (const Backtrack&) {
              pos_ = save;
              break;
            }
          }
          break;
        }
        case Kind::VarList: {
          ctx.push_back(var_name());
          while (at_delim(tok.text) && peek().kind == K::Ident) {
            ++pos_;
            ctx.push_back(var_name());
          }
          bound_.insert(bound_.end(), ctx.begin(), ctx.end());
          break;
        }
      }
    }
    if (!consumed_delim) fail("expected an operator");
    if (scope_.ambiguous(idx)) {
      int line, col;
      line_col(src_, toks_[pos_ > 0 ? pos_ - 1 : 0].pos, line, col);
      throw ParseError("ambiguous notation '" + n.str() + "' (" + entry.name.short_str() + ")", line,
                       col);
    }
    Term head = Term::constant(entry.name);
    if (n.is_binder()) {
      try {
        return Term::bind(std::move(head), std::move(ctx), std::move(slots.begin()->second.front()));
      } catch (const InvalidError& e) {
        fail(e.what());
      }
    }
    std::vector<Term> args;
    for (auto& [i, terms] : slots)
      for (auto& a : terms) args.push_back(std::move(a));
    if (args.empty()) return head;
    return Term::app(std::move(head), std::move(args));
  }

  std::string_view src_;
  const ParseScope& scope_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> bound_;
  std::size_t furthest_ = 0;
  std::string message_;
};

// ---------------------------------------------------------------------------
// Renderer

struct Rendered {
  std::string text;
  int prec = kAtom;
};

struct Piece {
  std::string text;
  bool delim = false;
  bool prefix_delim = false;  // a delimiter in operand position
};

class Renderer {
 public:
  explicit Renderer(const ParseScope& scope) : scope_(scope) {}

  Rendered render(const Term& t) {
    switch (t.kind()) {
      case TermKind::Int: return {t.int_value().get_str(), kAtom};
      case TermKind::Float: return {format_double(t.float_value()), kAtom};
      case TermKind::Str: return {quote(t.str_value(), '"'), kAtom};
      case TermKind::Foreign: return {"%" + t.foreign_format() + quote(t.foreign_content(), '"'), kAtom};
      case TermKind::Var: return {t.var_name(), kAtom};
      case TermKind::Const: return render_const(t.name());
      case TermKind::App: return render_app(t);
      case TermKind::Bind: return render_bind(t);
    }
    return {};
  }

 private:
  static std::string quote(const std::string& s, char q) {
    std::string out(1, q);
    for (char c : s) {
      if (c == q || c == '\\') out += '\\';
      out += c;
    }
    return out + q;
  }

  Rendered render_const(const GlobalName& g) {
    const Notation* n = scope_.notation_of(g);
    if (n && !n->is_binder() && n->fixed_args() == 0 && !n->has_seq()) {
      std::vector<Piece> pieces;
      for (std::size_t k = 0; k < n->tokens.size(); ++k)
        pieces.push_back({n->tokens[k].text, true, true});
      return {join(pieces), kAtom};
    }
    return {const_name(g), kAtom};
  }

  std::string const_name(const GlobalName& g) {
    const GlobalName* by_name = scope_.lookup(g.name);
    if (by_name && *by_name == g) return g.name;
    const GlobalName* qualified = scope_.lookup(g.module, g.name);
    if (qualified && *qualified == g) return g.short_str();
    return quote(g.str(), '`');
  }

  Rendered child(const Term& t, int threshold) {
    Rendered r = render(t);
    if (r.prec <= threshold) return {"(" + r.text + ")", kAtom};
    return r;
  }

  // Heads of fallback forms must be atoms or fallback forms themselves.
  std::string fallback_head(const Term& head) {
    Rendered r = render(head);
    bool plain = head.kind() == TermKind::Var || head.kind() == TermKind::Int ||
                 head.kind() == TermKind::Str ||
                 (head.kind() == TermKind::Const && r.text == const_name(head.name()));
    return plain ? r.text : "(" + r.text + ")";
  }

  Rendered render_app(const Term& t) {
    const GlobalName* head = t.app_head_name();
    const Notation* n = head ? scope_.notation_of(*head) : nullptr;
    auto args = t.args();
    if (n && !n->is_binder()) {
      int fixed = n->fixed_args();
      int count = static_cast<int>(args.size());
      bool fits = n->has_seq() ? count - fixed >= 1 : count == fixed;
      if (fits && fixed + (n->has_seq() ? 1 : 0) > 0) {
        int seq_len = count - fixed;
        int seq_index = 0;
        for (const auto& tok : n->tokens)
          if (tok.kind == Kind::SeqArg) seq_index = tok.index;
        auto offset = [&](int index) {
          if (seq_index == 0 || index <= seq_index) return index - 1;
          return index - 1 + seq_len - 1;
        };
        std::vector<Piece> pieces;
        bool any_delim = false;
        const std::size_t last = n->tokens.size() - 1;
        for (std::size_t k = 0; k <= last; ++k) {
          const auto& tok = n->tokens[k];
          int threshold = (k == 0 || k == last) ? n->precedence : 0;
          bool after_delim = k == 0 || n->tokens[k - 1].kind == Kind::Delim;
          if (tok.kind == Kind::Delim) {
            pieces.push_back({tok.text, true, after_delim});
            any_delim = true;
          } else if (tok.kind == Kind::Arg) {
            pieces.push_back({child(args[offset(tok.index)], threshold).text});
          } else {
            int start = offset(tok.index);
            for (int j = 0; j < seq_len; ++j) {
              if (j > 0) {
                pieces.push_back({tok.text, true, false});
                any_delim = true;
              }
              pieces.push_back({child(args[start + j], threshold).text});
            }
          }
        }
        if (any_delim) return {join(pieces), n->delimited() ? kAtom : n->precedence};
      }
    }
    std::string out = fallback_head(t.head()) + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) out += ",";
      out += child(args[i], 0).text;
    }
    return {out + ")", kAtom};
  }

  Rendered render_bind(const Term& t) {
    const Term& b = t.binder();
    const Notation* n = b.kind() == TermKind::Const ? scope_.notation_of(b.name()) : nullptr;
    if (n && n->is_binder() && !t.context().empty()) {
      std::vector<Piece> pieces;
      const std::size_t last = n->tokens.size() - 1;
      for (std::size_t k = 0; k <= last; ++k) {
        const auto& tok = n->tokens[k];
        bool after_delim = k == 0 || n->tokens[k - 1].kind == Kind::Delim;
        if (tok.kind == Kind::Delim) {
          pieces.push_back({tok.text, true, after_delim});
        } else if (tok.kind == Kind::VarList) {
          for (std::size_t j = 0; j < t.context().size(); ++j) {
            if (j) pieces.push_back({tok.text, true, false});
            pieces.push_back({t.context()[j]});
          }
        } else {
          int threshold = k == last ? n->precedence : 0;
          pieces.push_back({child(t.scope(), threshold).text});
        }
      }
      return {join(pieces), 0};
    }
    std::string out = fallback_head(b) + "[";
    for (std::size_t j = 0; j < t.context().size(); ++j) {
      if (j) out += ",";
      out += t.context()[j];
    }
    return {out + "](" + render(t.scope()).text + ")", kAtom};
  }

  // Would `a` followed directly by `b` lex as a delimiter spanning both?
  bool crosses(const std::string& a, const std::string& b) const {
    for (const auto& d : scope_.delimiters()) {
      if (d.size() < 2) continue;
      for (std::size_t k = 1; k < d.size(); ++k) {
        if (k > a.size() || d.size() - k > b.size()) continue;
        if (a.compare(a.size() - k, k, d, 0, k) == 0 && b.compare(0, d.size() - k, d, k) == 0)
          return true;
      }
    }
    return false;
  }

  static bool word(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return ident_char(c); });
  }

  std::string join(const std::vector<Piece>& pieces) const {
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const auto& p = pieces[i];
      if (i > 0 && !out.empty() && !p.text.empty()) {
        const auto& prev = pieces[i - 1];
        bool space = (ident_char(out.back()) && ident_char(p.text.front())) || crosses(out, p.text) ||
                     (p.delim && word(p.text)) || (prev.delim && word(prev.text)) ||
                     (prev.delim && prev.prefix_delim && out.back() == '-' && !p.delim &&
                      (digit(p.text.front()) || p.text.front() == '.'));
        if (space) out += ' ';
      }
      out += p.text;
    }
    return out;
  }

  const ParseScope& scope_;
};

}  // namespace

Term parse_term(std::string_view src, const ParseScope& scope) {
  return Parser(src, scope).parse();
}

std::string render_term(const Term& t, const ParseScope& scope) {
  return Renderer(scope).render(t).text;
}

}  // namespace um

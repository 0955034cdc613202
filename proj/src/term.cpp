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

#include "um/term.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <sstream>

#include "um/error.hpp"

namespace um {

std::string normalize_uri(std::string_view uri) {
  std::string out(uri);
  auto colon = out.find(':');
  if (colon != std::string::npos) {
    bool scheme_ok = colon > 0;
    for (std::size_t i = 0; i < colon && scheme_ok; ++i) {
      char c = out[i];
      scheme_ok = std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.';
    }
    if (scheme_ok) {
      for (std::size_t i = 0; i < colon; ++i)
        out[i] = static_cast<char>(std::tolower(static_cast<unsigned char>(out[i])));
      if (out.compare(colon + 1, 2, "//") == 0) {
        std::size_t host_begin = colon + 3;
        std::size_t host_end = out.find('/', host_begin);
        if (host_end == std::string::npos) host_end = out.size();
        for (std::size_t i = host_begin; i < host_end; ++i)
          out[i] = static_cast<char>(std::tolower(static_cast<unsigned char>(out[i])));
      }
    }
  }
  while (out.size() > 1 && out.back() == '/') out.pop_back();
  return out;
}

ModuleRef::ModuleRef(std::string_view b, std::string_view n) : base(normalize_uri(b)), name(n) {}

ModuleRef ModuleRef::parse(std::string_view text) {
  auto q = text.rfind('?');
  if (q == std::string_view::npos || q + 1 == text.size())
    throw ParseError("malformed module reference '" + std::string(text) + "'");
  return ModuleRef(text.substr(0, q), text.substr(q + 1));
}

GlobalName::GlobalName(std::string_view b, std::string_view m, std::string_view n)
    : base(normalize_uri(b)), module(m), name(n) {}

GlobalName::GlobalName(const ModuleRef& m, std::string_view n)
    : base(m.base), module(m.name), name(n) {}

GlobalName GlobalName::parse(std::string_view text) {
  auto q2 = text.rfind('?');
  if (q2 == std::string_view::npos || q2 == 0)
    throw ParseError("malformed global name '" + std::string(text) + "'");
  auto q1 = text.rfind('?', q2 - 1);
  if (q1 == std::string_view::npos)
    throw ParseError("malformed global name '" + std::string(text) + "'");
  return GlobalName(text.substr(0, q1), text.substr(q1 + 1, q2 - q1 - 1), text.substr(q2 + 1));
}

struct Term::Node {
  TermKind kind;
  bool simplified = false;
  GlobalName name;
  std::string text;      // variable name, string value, foreign format
  std::string content;   // foreign content
  BigInt integer;
  double real = 0;
  std::vector<Term> children;  // App: head, args...; Bind: binder, scope
  Context context;
};

namespace {

std::shared_ptr<Term::Node> make_node(TermKind kind) {
  auto n = std::make_shared<Term::Node>();
  n->kind = kind;
  return n;
}

}  // namespace

Term Term::constant(GlobalName name) {
  auto n = make_node(TermKind::Const);
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::var(std::string name) {
  auto n = make_node(TermKind::Var);
  n->text = std::move(name);
  return Term(std::move(n));
}

Term Term::integer(BigInt value) {
  auto n = make_node(TermKind::Int);
  n->integer = std::move(value);
  return Term(std::move(n));
}

Term Term::floating(double value) {
  auto n = make_node(TermKind::Float);
  n->real = value;
  return Term(std::move(n));
}

Term Term::string(std::string value) {
  auto n = make_node(TermKind::Str);
  n->text = std::move(value);
  return Term(std::move(n));
}

Term Term::app(Term head, std::vector<Term> args) {
  if (args.empty()) throw InvalidError("application needs at least one argument");
  auto n = make_node(TermKind::App);
  n->children.reserve(args.size() + 1);
  n->children.push_back(std::move(head));
  for (auto& a : args) n->children.push_back(std::move(a));
  return Term(std::move(n));
}

Term Term::bind(Term binder, Context context, Term scope) {
  std::set<std::string> seen;
  for (const auto& v : context)
    if (!seen.insert(v).second) throw InvalidError("binder context repeats variable '" + v + "'");
  auto n = make_node(TermKind::Bind);
  n->children = {std::move(binder), std::move(scope)};
  n->context = std::move(context);
  return Term(std::move(n));
}

Term Term::foreign(std::string format, std::string content) {
  auto n = make_node(TermKind::Foreign);
  n->text = std::move(format);
  n->content = std::move(content);
  return Term(std::move(n));
}

TermKind Term::kind() const { return node_->kind; }
bool Term::simplified() const { return node_->simplified; }

bool Term::is_const(const GlobalName& name) const {
  return node_->kind == TermKind::Const && node_->name == name;
}

Term Term::with_simplified(bool flag) const {
  if (node_->simplified == flag) return *this;
  auto copy = std::make_shared<Node>(*node_);
  copy->simplified = flag;
  return Term(std::move(copy));
}

const GlobalName& Term::name() const { return node_->name; }
const std::string& Term::var_name() const { return node_->text; }
const BigInt& Term::int_value() const { return node_->integer; }
double Term::float_value() const { return node_->real; }
const std::string& Term::str_value() const { return node_->text; }
const Term& Term::head() const { return node_->children.front(); }
std::span<const Term> Term::args() const {
  return std::span<const Term>(node_->children).subspan(1);
}
const Term& Term::binder() const { return node_->children[0]; }
const Context& Term::context() const { return node_->context; }
const Term& Term::scope() const { return node_->children[1]; }
const std::string& Term::foreign_format() const { return node_->text; }
const std::string& Term::foreign_content() const { return node_->content; }

const GlobalName* Term::app_head_name() const {
  if (node_->kind != TermKind::App) return nullptr;
  const Term& h = head();
  return h.kind() == TermKind::Const ? &h.name() : nullptr;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case TermKind::Const: return x.name == y.name;
    case TermKind::Var:
    case TermKind::Str: return x.text == y.text;
    case TermKind::Int: return x.integer == y.integer;
    case TermKind::Float:
      return x.real == y.real || (std::isnan(x.real) && std::isnan(y.real));
    case TermKind::Foreign: return x.text == y.text && x.content == y.content;
    case TermKind::Bind:
      if (x.context != y.context) return false;
      [[fallthrough]];
    case TermKind::App:
      return x.children == y.children;
  }
  return false;
}

namespace {

int rank(TermKind k) {
  switch (k) {
    case TermKind::Int: return 0;
    case TermKind::Float: return 1;
    case TermKind::Str: return 2;
    case TermKind::Const: return 3;
    case TermKind::Var: return 4;
    case TermKind::App: return 5;
    case TermKind::Bind: return 6;
    case TermKind::Foreign: return 7;
  }
  return 8;
}

std::strong_ordering compare_double(double a, double b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  std::uint64_t ua = 0, ub = 0;
  std::memcpy(&ua, &a, sizeof a);
  std::memcpy(&ub, &b, sizeof b);
  return ua <=> ub;
}

std::strong_ordering compare_terms(std::span<const Term> a, std::span<const Term> b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (auto c = compare(a[i], b[i]); c != 0) return c;
  return a.size() <=> b.size();
}

}  // namespace

std::strong_ordering compare(const Term& a, const Term& b) {
  if (a.same_node(b)) return std::strong_ordering::equal;
  if (auto c = rank(a.kind()) <=> rank(b.kind()); c != 0) return c;
  switch (a.kind()) {
    case TermKind::Int: {
      int c = cmp(a.int_value(), b.int_value());
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    case TermKind::Float: return compare_double(a.float_value(), b.float_value());
    case TermKind::Str: return a.str_value() <=> b.str_value();
    case TermKind::Const: return a.name() <=> b.name();
    case TermKind::Var: return a.var_name() <=> b.var_name();
    case TermKind::App: {
      if (auto c = compare(a.head(), b.head()); c != 0) return c;
      return compare_terms(a.args(), b.args());
    }
    case TermKind::Bind: {
      if (auto c = compare(a.binder(), b.binder()); c != 0) return c;
      if (auto c = a.context() <=> b.context(); c != 0) return c;
      return compare(a.scope(), b.scope());
    }
    case TermKind::Foreign: {
      if (auto c = a.foreign_format() <=> b.foreign_format(); c != 0) return c;
      return a.foreign_content() <=> b.foreign_content();
    }
  }
  return std::strong_ordering::equal;
}

namespace {

void collect_free(const Term& t, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Var:
      if (std::find(bound.begin(), bound.end(), t.var_name()) == bound.end())
        out.insert(t.var_name());
      break;
    case TermKind::App:
      collect_free(t.head(), bound, out);
      for (const auto& a : t.args()) collect_free(a, bound, out);
      break;
    case TermKind::Bind: {
      collect_free(t.binder(), bound, out);
      auto mark = bound.size();
      bound.insert(bound.end(), t.context().begin(), t.context().end());
      collect_free(t.scope(), bound, out);
      bound.resize(mark);
      break;
    }
    default: break;
  }
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(t, bound, out);
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  for (unsigned long k = 1;; ++k) {
    std::string candidate = base + std::to_string(k);
    if (!avoid.count(candidate)) return candidate;
  }
}

namespace {

Term subst(const Term& t, const std::map<std::string, Term>& sigma) {
  switch (t.kind()) {
    case TermKind::Var: {
      auto it = sigma.find(t.var_name());
      return it == sigma.end() ? t : it->second;
    }
    case TermKind::App: {
      Term head = subst(t.head(), sigma);
      bool changed = !head.same_node(t.head());
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) {
        args.push_back(subst(a, sigma));
        changed = changed || !args.back().same_node(a);
      }
      return changed ? Term::app(std::move(head), std::move(args)) : t;
    }
    case TermKind::Bind: {
      Term binder = subst(t.binder(), sigma);
      const Context& ctx = t.context();
      auto scope_free = free_vars(t.scope());
      std::map<std::string, Term> inner;
      for (const auto& [k, v] : sigma)
        if (std::find(ctx.begin(), ctx.end(), k) == ctx.end() && scope_free.count(k))
          inner.emplace(k, v);
      if (inner.empty()) {
        return binder.same_node(t.binder()) ? t : Term::bind(std::move(binder), ctx, t.scope());
      }
      std::set<std::string> replacement_free;
      for (const auto& [k, v] : inner) {
        auto fv = free_vars(v);
        replacement_free.insert(fv.begin(), fv.end());
      }
      std::set<std::string> avoid = replacement_free;
      avoid.insert(scope_free.begin(), scope_free.end());
      avoid.insert(ctx.begin(), ctx.end());
      Context renamed = ctx;
      for (auto& v : renamed) {
        if (!replacement_free.count(v)) continue;
        std::string fresh = fresh_name(v, avoid);
        avoid.insert(fresh);
        inner.emplace(v, Term::var(fresh));
        v = fresh;
      }
      return Term::bind(std::move(binder), std::move(renamed), subst(t.scope(), inner));
    }
    default: return t;
  }
}

}  // namespace

Term substitute(const Term& t, const std::map<std::string, Term>& bindings) {
  if (bindings.empty()) return t;
  return subst(t, bindings);
}

namespace {

bool alpha(const Term& a, const Term& b, std::vector<std::string>& left,
           std::vector<std::string>& right) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::Var: {
      auto position = [](const std::vector<std::string>& env, const std::string& v) -> long {
        for (std::size_t i = env.size(); i > 0; --i)
          if (env[i - 1] == v) return static_cast<long>(i - 1);
        return -1;
      };
      long pa = position(left, a.var_name());
      long pb = position(right, b.var_name());
      if (pa < 0 && pb < 0) return a.var_name() == b.var_name();
      return pa == pb;
    }
    case TermKind::App: {
      if (a.args().size() != b.args().size()) return false;
      if (!alpha(a.head(), b.head(), left, right)) return false;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (!alpha(a.args()[i], b.args()[i], left, right)) return false;
      return true;
    }
    case TermKind::Bind: {
      if (a.context().size() != b.context().size()) return false;
      if (!alpha(a.binder(), b.binder(), left, right)) return false;
      auto ml = left.size();
      auto mr = right.size();
      left.insert(left.end(), a.context().begin(), a.context().end());
      right.insert(right.end(), b.context().begin(), b.context().end());
      bool ok = alpha(a.scope(), b.scope(), left, right);
      left.resize(ml);
      right.resize(mr);
      return ok;
    }
    default: return a == b;
  }
}

}  // namespace

bool alpha_equivalent(const Term& a, const Term& b) {
  std::vector<std::string> left, right;
  return alpha(a, b, left, right);
}

Term strip_metadata(const Term& t) {
  switch (t.kind()) {
    case TermKind::App: {
      std::vector<Term> args;
      for (const auto& a : t.args()) args.push_back(strip_metadata(a));
      return Term::app(strip_metadata(t.head()), std::move(args));
    }
    case TermKind::Bind:
      return Term::bind(strip_metadata(t.binder()), t.context(), strip_metadata(t.scope()));
    default: return t.with_simplified(false);
  }
}

bool fully_marked(const Term& t) {
  if (!t.simplified()) return false;
  switch (t.kind()) {
    case TermKind::App:
      if (!fully_marked(t.head())) return false;
      for (const auto& a : t.args())
        if (!fully_marked(a)) return false;
      return true;
    case TermKind::Bind: return fully_marked(t.binder()) && fully_marked(t.scope());
    default: return true;
  }
}

std::size_t term_size(const Term& t) {
  switch (t.kind()) {
    case TermKind::App: {
      std::size_t n = 1 + term_size(t.head());
      for (const auto& a : t.args()) n += term_size(a);
      return n;
    }
    case TermKind::Bind: return 1 + term_size(t.binder()) + term_size(t.scope());
    default: return 1;
  }
}

std::string debug_string(const Term& t) {
  std::ostringstream os;
  switch (t.kind()) {
    case TermKind::Const: os << t.name().short_str(); break;
    case TermKind::Var: os << "$" << t.var_name(); break;
    case TermKind::Int: os << t.int_value().get_str(); break;
    case TermKind::Float: os << t.float_value(); break;
    case TermKind::Str: os << '"' << t.str_value() << '"'; break;
    case TermKind::Foreign: os << "foreign<" << t.foreign_format() << ">"; break;
    case TermKind::App:
      os << debug_string(t.head()) << "(";
      for (std::size_t i = 0; i < t.args().size(); ++i)
        os << (i ? ", " : "") << debug_string(t.args()[i]);
      os << ")";
      break;
    case TermKind::Bind:
      os << debug_string(t.binder()) << "[";
      for (std::size_t i = 0; i < t.context().size(); ++i)
        os << (i ? "," : "") << t.context()[i];
      os << "](" << debug_string(t.scope()) << ")";
      break;
  }
  return os.str();
}

}  // namespace um

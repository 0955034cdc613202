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

#pragma once

#include <compare>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace um {

using BigInt = mpz_class;

// Lowercases the scheme and authority of a URI and drops trailing slashes.
std::string normalize_uri(std::string_view uri);

// A module reference: document base plus module name, written `base?module`.
struct ModuleRef {
  std::string base;
  std::string name;

  ModuleRef() = default;
  ModuleRef(std::string_view base, std::string_view name);

  std::string str() const { return base + "?" + name; }
  // Accepts `base?module`; throws ParseError otherwise.
  static ModuleRef parse(std::string_view text);

  friend bool operator==(const ModuleRef&, const ModuleRef&) = default;
  friend auto operator<=>(const ModuleRef&, const ModuleRef&) = default;
};

// Identity of a constant: `base?module?name`.
struct GlobalName {
  std::string base;
  std::string module;
  std::string name;

  GlobalName() = default;
  GlobalName(std::string_view base, std::string_view module, std::string_view name);
  GlobalName(const ModuleRef& module, std::string_view name);

  ModuleRef module_ref() const { return ModuleRef(base, module); }
  std::string str() const { return base + "?" + module + "?" + name; }
  // `module?name`, the form used in diagnostics and reports.
  std::string short_str() const { return module + "?" + name; }
  static GlobalName parse(std::string_view text);

  friend bool operator==(const GlobalName&, const GlobalName&) = default;
  friend auto operator<=>(const GlobalName&, const GlobalName&) = default;
};

using Context = std::vector<std::string>;

enum class TermKind { Const, Var, Int, Float, Str, App, Bind, Foreign };

// Immutable OpenMath object. Copies share structure. The `simplified` flag is
// metadata: it never takes part in equality or ordering.
class Term {
 public:
  static Term constant(GlobalName name);
  static Term var(std::string name);
  static Term integer(BigInt value);
  static Term integer(long value) { return integer(BigInt(value)); }
  static Term floating(double value);
  static Term string(std::string value);
  // Throws InvalidError when `args` is empty.
  static Term app(Term head, std::vector<Term> args);
  // Throws InvalidError when `context` repeats a name.
  static Term bind(Term binder, Context context, Term scope);
  static Term foreign(std::string format, std::string content);

  TermKind kind() const;
  bool is(TermKind k) const { return kind() == k; }
  bool is_const(const GlobalName& name) const;
  bool simplified() const;
  Term with_simplified(bool flag) const;

  const GlobalName& name() const;
  const std::string& var_name() const;
  const BigInt& int_value() const;
  double float_value() const;
  const std::string& str_value() const;
  const Term& head() const;
  std::span<const Term> args() const;
  const Term& binder() const;
  const Context& context() const;
  const Term& scope() const;
  const std::string& foreign_format() const;
  const std::string& foreign_content() const;

  // Head constant of an application, if the head is a constant.
  const GlobalName* app_head_name() const;

  bool same_node(const Term& other) const { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b);

  struct Node;

 private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Total order used for canonical sets: variant tag first, then value, name,
// or children lexicographically.
std::strong_ordering compare(const Term& a, const Term& b);

struct TermLess {
  bool operator()(const Term& a, const Term& b) const { return compare(a, b) < 0; }
};

std::set<std::string> free_vars(const Term& t);

// Capture-avoiding simultaneous substitution. Bound variables that would
// capture a free variable of a replacement are renamed `x1`, `x2`, ...
Term substitute(const Term& t, const std::map<std::string, Term>& bindings);

// Smallest `base<k>`, k >= 1, not in `avoid`.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

bool alpha_equivalent(const Term& a, const Term& b);

// Copy with every simplified flag cleared.
Term strip_metadata(const Term& t);

// True if every node of `t` carries the simplified flag.
bool fully_marked(const Term& t);

std::size_t term_size(const Term& t);

// Debug form, not meant for parsing.
std::string debug_string(const Term& t);

}  // namespace um

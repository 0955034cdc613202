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
#include <string>
#include <vector>

#include "um/term.hpp"
#include "um/theory_graph.hpp"

namespace um {

// Shape of the redexes a constant heads: Fixed n arguments, n fixed
// arguments plus a sequence, or a binder.
struct Arity {
  enum class Kind { Fixed, Flexible, Binder };
  Kind kind = Kind::Fixed;
  int n = 0;

  static Arity fixed(int n) { return {Kind::Fixed, n}; }
  static Arity flexible(int n) { return {Kind::Flexible, n}; }
  static Arity binder() { return {Kind::Binder, 0}; }

  // Whether an application with `args` arguments has this shape.
  bool admits(std::size_t args) const;
  // `Fixed 2`, `Flexible 0`, `Binder`.
  std::string str() const;

  friend bool operator==(const Arity&, const Arity&) = default;
  friend auto operator<=>(const Arity&, const Arity&) = default;
};

// Object, binder, or mapsto(Object, ..., Object, A, Object) with A one of
// Object and naryObject.
bool well_formed_type(const Term& t);

// Throws InvalidError on ill-formed types.
Arity arity_of(const Term& type);

struct Diagnostic {
  std::string severity;
  SourceLoc loc;
  GlobalName constant;
  std::string message;

  // `severity file:line module?constant message`
  std::string str() const;
};

// Ill-formed types and arity violations in the constants declared by
// `theory` (includes are linted on their own).
std::vector<Diagnostic> lint_theory(const TheoryGraph& g, const ModuleRef& theory);

}  // namespace um

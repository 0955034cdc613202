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

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "um/sts.hpp"
#include "um/term.hpp"

namespace um {

// Native partial functions; an empty result means the rule declines.
using FixedFn = std::function<std::optional<Term>(std::span<const Term> args)>;
using FlexibleFn =
    std::function<std::optional<Term>(std::span<const Term> fixed, std::span<const Term> rest)>;
using BinderFn = std::function<std::optional<Term>(const Context& ctx, const Term& scope)>;

struct Rule {
  GlobalName head;
  Arity arity;
  std::variant<FixedFn, FlexibleFn, BinderFn> apply;

  // Builds a rule, checking that the function kind matches the arity.
  static Rule make(GlobalName head, Arity arity, std::variant<FixedFn, FlexibleFn, BinderFn> fn);
};

// At most one rule per (constant, arity).
class RuleBase {
 public:
  // Throws ConflictError if (head, arity) is taken.
  void add(Rule r);
  // Adds every rule of `other`; all or nothing.
  void merge(const RuleBase& other);

  const Rule* find(const GlobalName& head, const Arity& arity) const;
  // Fixed n, else the Flexible i <= n with the largest i.
  const Rule* select(const GlobalName& head, std::size_t args) const;
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::vector<const Rule*> rules() const;

 private:
  std::map<GlobalName, std::map<Arity, Rule>> rules_;
  std::size_t size_ = 0;
};

inline constexpr std::size_t kDefaultFuel = 10000;

// One head-rule application at the root of `t`. Declines, exceptions, and
// results equal to `t` all count as no step.
std::optional<Term> rewrite_step(const RuleBase& base, const Term& t);

struct SimplifyResult {
  Term term;
  bool exhausted = false;
  std::size_t steps = 0;
};

// Innermost exhaustive rewriting. Subterms flagged as simplified are not
// revisited; every subterm of a non-exhausted result is flagged.
SimplifyResult simplify(const RuleBase& base, const Term& t, std::size_t fuel = kDefaultFuel);

}  // namespace um

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
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "um/machine.hpp"
#include "um/theory_graph.hpp"

namespace um {

// Document base of the OpenMath content dictionaries.
inline constexpr const char* kCdBase = "http://www.openmath.org/cd";

GlobalName logic1_true();
GlobalName logic1_false();

// Compiled-in native functions, keyed by `View?constant`.
class NativeRegistry {
 public:
  struct Entry {
    Arity arity;
    std::variant<FixedFn, FlexibleFn, BinderFn> fn;
  };

  // Throws ConflictError on a duplicate key.
  void add(std::string key, Arity arity, std::variant<FixedFn, FlexibleFn, BinderFn> fn);
  const Entry* find(const std::string& key) const;
  std::size_t size() const { return entries_.size(); }
  std::vector<std::string> keys() const;

 private:
  std::map<std::string, Entry> entries_;
};

// A view into Computation out of a theory whose meta-theory is OpenMath.
bool is_realization(const TheoryGraph& g, const ModuleRef& view);

// Arity a realized constant is implemented at: from its type, else from the
// parameter signature of its assignment. Throws InvalidError if neither fits.
Arity realized_arity(const Constant& c, const Assignment* a);

struct RealizationRules {
  RuleBase rules;
  // Assigned constants whose snippet is blank or has no native binding.
  std::vector<GlobalName> unimplemented;
};

// Rules for the view's own assignments. Throws InvalidError for views that
// are not syntactic realizations, break the commuting triangle, or whose
// native arity disagrees with the declared one.
RealizationRules rules_of(const TheoryGraph& g, const ModuleRef& view, const NativeRegistry& registry);

struct TestCase {
  GlobalName origin;
  Term formula;
};

// Constants with definiens FMP(F), in graph and declaration order.
std::vector<TestCase> collect_tests(const TheoryGraph& g);

struct TestResult {
  GlobalName origin;
  bool passed = false;
  bool exhausted = false;
  Term residual;
  std::string residual_text;
};

struct TestReport {
  std::vector<TestResult> results;
  std::size_t passed = 0;

  // `PASS|FAIL module?name [residual: ...]` lines and `passed P/T`.
  std::string str() const;
  bool ok() const { return passed == results.size(); }
};

// PASS iff the formula simplifies to logic1?true without running out of
// fuel. Residuals are rendered in the scope of the test's theory.
TestReport run_tests(const TheoryGraph& g, const RuleBase& base, const std::vector<TestCase>& tests,
                     std::size_t fuel = kDefaultFuel);

}  // namespace um

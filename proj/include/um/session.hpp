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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "um/machine.hpp"
#include "um/notation.hpp"
#include "um/realization.hpp"
#include "um/sts.hpp"
#include "um/theory_graph.hpp"

namespace um {

// A loaded theory graph with the union rule base of its realizations.
// Single writer; concurrent readers only between mutations.
class Session {
 public:
  explicit Session(bool load_stdlib = true);

  const TheoryGraph& graph() const { return graph_; }
  const RuleBase& rules() const { return rules_; }
  const NativeRegistry& registry() const;
  // Realized constants without a usable native, from the last rebuild.
  const std::vector<GlobalName>& unimplemented() const { return unimplemented_; }

  std::size_t fuel() const { return fuel_; }
  void set_fuel(std::size_t fuel) { fuel_ = fuel; }

  const std::vector<ModuleRef>& stdlib_modules() const { return stdlib_modules_; }
  const std::vector<ModuleRef>& project_modules() const { return project_modules_; }

  // Loads `<root>/source/*.omdoc` and `*.mmt`. Modules may replace bundled
  // modules of the same path. Rebuilds the rule base.
  std::vector<ModuleRef> load_project(const std::filesystem::path& root);
  // Adds surface-syntax modules and rebuilds the rule base.
  std::vector<ModuleRef> add_source(std::string_view text, const std::string& file);
  // Adds OMDoc theories. Embedded snippets stay inert: the rule base is not
  // rebuilt.
  std::vector<ModuleRef> ingest(std::string_view xml, const std::string& file);
  void rebuild_rules();

  // Theory named by a bare name, `?name` or `base?name`. Throws ResolveError.
  ModuleRef resolve_theory(std::string_view ref) const;
  ParseScope scope(const ModuleRef& theory) const { return graph_.scope_for(theory); }
  Term parse(std::string_view text, const ModuleRef& theory) const;
  std::string render(const Term& t, const ModuleRef& theory) const;
  SimplifyResult simplify(const Term& t) const { return um::simplify(rules_, t, fuel_); }
  SimplifyResult simplify(const Term& t, std::size_t fuel) const { return um::simplify(rules_, t, fuel); }

  // Lint diagnostics for theories, missing assignments for views, and
  // realization errors.
  std::vector<Diagnostic> check(const std::vector<ModuleRef>& modules) const;

 private:
  TheoryGraph graph_;
  RuleBase rules_;
  std::vector<GlobalName> unimplemented_;
  std::vector<ModuleRef> stdlib_modules_;
  std::vector<ModuleRef> project_modules_;
  std::size_t fuel_ = kDefaultFuel;

  bool replaceable(const ModuleRef& m) const;
};

}  // namespace um

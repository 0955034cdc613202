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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "um/notation.hpp"
#include "um/term.hpp"

namespace um {

struct SourceLoc {
  std::string file;
  int line = 0;

  std::string str() const {
    return (file.empty() ? std::string("<input>") : file) + ":" + std::to_string(line);
  }
};

struct Constant {
  std::string name;
  std::optional<Term> type;
  std::optional<Term> definiens;
  std::optional<Notation> notation;
  SourceLoc loc;
};

struct Include {
  ModuleRef target;
  SourceLoc loc;
};

using TheoryDecl = std::variant<Constant, Include>;

struct Theory {
  ModuleRef path;
  std::optional<ModuleRef> meta;
  std::vector<TheoryDecl> decls;
  SourceLoc loc;

  const Constant* find(std::string_view name) const;
  std::vector<const Constant*> constants() const;
  std::vector<ModuleRef> includes() const;
};

struct Param {
  std::string name;
  Term type;
};

struct Assignment {
  std::string name;
  Term value;
  std::optional<std::vector<Param>> params;
  SourceLoc loc;
  // Byte range of the quoted snippet (quotes included) in the source file;
  // unset for expression assignments.
  std::optional<std::pair<std::size_t, std::size_t>> snippet_span;

  bool escaped() const { return value.kind() == TermKind::Foreign; }
  // Escaped snippet consisting of whitespace only: a stub not yet filled in.
  bool blank() const;
};

struct View {
  ModuleRef path;
  ModuleRef from;
  ModuleRef to;
  std::vector<Assignment> assignments;
  std::vector<ModuleRef> includes;
  SourceLoc loc;
  // Offset just past the last line of the view block in its source file.
  std::size_t end_offset = 0;
  // Indentation used by the block's statements.
  std::string indent = "  ";

  const Assignment* find(std::string_view name) const;
};

using Module = std::variant<Theory, View>;

// Modules keyed by `base?name`. Single writer during loading, then read-only.
class TheoryGraph {
 public:
  // Throws ConflictError if the path is taken, unless `replace` is set.
  void add(Theory t, bool replace = false);
  void add(View v, bool replace = false);

  bool has(const ModuleRef& ref) const { return index_.count(ref) > 0; }
  const Theory* theory(const ModuleRef& ref) const;
  const View* view(const ModuleRef& ref) const;
  const Theory& require_theory(const ModuleRef& ref) const;
  const View& require_view(const ModuleRef& ref) const;
  // Module paths in insertion order.
  std::vector<ModuleRef> modules() const;
  std::size_t size() const { return modules_.size(); }

  // `base?name`, `?name` (relative to `doc_base`) or a bare name, looked up
  // first under `doc_base`, then by unique name across the graph.
  std::optional<ModuleRef> resolve(std::string_view text, const std::string& doc_base) const;

  const Constant* constant(const GlobalName& name) const;

  // Depth-first include expansion; each theory contributes once.
  std::vector<std::pair<GlobalName, const Constant*>> flatten(const ModuleRef& theory) const;
  // Theories reachable via meta links, nearest first.
  std::vector<ModuleRef> meta_chain(const ModuleRef& theory) const;

  // Definition-less constants of flatten(from) lacking an assignment.
  std::vector<GlobalName> check_view(const ModuleRef& view) const;
  // The assignment for `c`, searching local assignments then included views.
  const Assignment* find_assignment(const ModuleRef& view, const GlobalName& c) const;
  Term apply_morphism(const ModuleRef& view, const Term& t) const;
  // Translation of `theory` along `view`, which must start at its meta-theory.
  Theory pushout(const ModuleRef& view, const ModuleRef& theory) const;

  // Parsing scope: own constants, includes, then the meta chain. For views,
  // the scope of the codomain.
  ParseScope scope_for(const ModuleRef& ref) const;

 private:
  std::vector<Module> modules_;
  std::map<ModuleRef, std::size_t> index_;

  void add_module(Module m, const ModuleRef& path, bool replace);
};

}  // namespace um

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

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "um/theory_graph.hpp"

namespace um {

struct SourceText {
  std::string file;
  std::string text;
};

struct SurfaceOptions {
  // Base of modules declared before any `namespace` directive.
  std::string default_base = "urn:um:local";
  // Whether an existing module may be replaced by one of the same path.
  std::function<bool(const ModuleRef&)> may_replace;
};

// Parses `.mmt` sources and adds their modules to `g`, all or nothing.
// References may point across the given files in any order. Returns the
// paths of the new modules in elaboration order.
std::vector<ModuleRef> parse_modules(const std::vector<SourceText>& sources, TheoryGraph& g,
                                     const SurfaceOptions& options = {});

// Quoting used for escaped snippets: `\"` and `\\`.
std::string escape_snippet(std::string_view text);
std::string unescape_snippet(std::string_view quoted_body);

}  // namespace um

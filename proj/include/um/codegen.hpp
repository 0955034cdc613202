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

#include <filesystem>
#include <string>
#include <vector>

#include "um/session.hpp"

namespace um {

// Realization views among the session's project modules.
std::vector<ModuleRef> project_realizations(const Session& s);

// Stub source for one realization: a function `<theory>_<constant>` per
// realized constant, its body an editable region between
// `// start View?constant` and `// end View?constant`.
std::string stub_source(const TheoryGraph& g, const ModuleRef& view);

// Writes `<root>/generated/<View>.cpp` for every project realization that
// realizes at least one constant. Returns the files written.
std::vector<std::filesystem::path> extract(const Session& s, const std::filesystem::path& root);

struct Region {
  std::string view;
  std::string constant;
  std::string text;
};

// Regions of a stub file. Throws ParseError naming the marker when markers
// are unmatched, nested or repeated.
std::vector<Region> read_regions(const std::string& text, const std::string& file);

// Merges edited regions of `<root>/generated/*.cpp` back into the view
// sources. Returns the source files that changed.
std::vector<std::filesystem::path> integrate(const Session& s, const std::filesystem::path& root);

// Rule count, unimplemented constants, and the test report of every FMP in
// the session's graph.
std::string load_report(const Session& s);

}  // namespace um

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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "um/realization.hpp"

namespace um {

struct SourceFile {
  std::string name;
  std::string_view text;
};

// Bundled library sources (`.mmt` and `.omdoc`), compiled into the core.
std::vector<SourceFile> stdlib_sources();

// Base of the bundled realizations and test theories.
inline constexpr const char* kStdlibBase = "urn:um:stdlib";
// Base of the lists document.
inline constexpr const char* kListsBase = "http://cds.omdoc.org/unsorted/uom.omdoc";

GlobalName cd_symbol(std::string_view cd, std::string_view name);
GlobalName lists_symbol(std::string_view name);
GlobalName lists_ext_symbol(std::string_view name);

// Closed data: literals, logic1 truth values, cons lists, canonical sets.
bool is_value(const Term& t);
// App(set1?set, ...) with strictly increasing elements.
bool is_canonical_set(const Term& t);

// Natives of every bundled realization, keyed by `View?constant`.
const NativeRegistry& stdlib_registry();

}  // namespace um

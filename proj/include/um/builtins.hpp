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

#include <string_view>

#include "um/term.hpp"

namespace um {

class TheoryGraph;

// Document base of the built-in meta-theories and bifoundation views.
inline constexpr const char* kMetaBase = "urn:um:meta";

ModuleRef openmath_theory();
ModuleRef computation_theory();
ModuleRef syntactic_view();
ModuleRef semantic_view();

GlobalName openmath_symbol(std::string_view name);
GlobalName computation_symbol(std::string_view name);

// Surface source of OpenMath, Computation, Syntactic and Semantic.
std::string_view builtin_source();
void add_builtins(TheoryGraph& g);

}  // namespace um

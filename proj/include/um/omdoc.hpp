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

inline constexpr const char* kOmdocNamespace = "http://omdoc.org/ns";

// Adds the theories of an OMDoc document (omdoc, theory, constant, type,
// definition, include) to `g`, all or nothing. Theories default to the
// OpenMath meta-theory; OMS without cdbase resolve against the document
// base. Throws ParseError outside the subset and ConflictError when a
// theory path is already taken and `may_replace` does not allow it.
std::vector<ModuleRef> ingest_omdoc(std::string_view xml, TheoryGraph& g, const std::string& file = {},
                                    const std::function<bool(const ModuleRef&)>& may_replace = {});

// The given theories as one OMDoc document with base `base`. Notations are
// not part of the subset and are dropped.
std::string export_omdoc(const TheoryGraph& g, const std::vector<ModuleRef>& theories,
                         const std::string& base);

}  // namespace um

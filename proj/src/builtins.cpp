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

#include "um/builtins.hpp"

#include "um/surface.hpp"
#include "um/theory_graph.hpp"

namespace um {

namespace {

constexpr std::string_view kSource = R"UM(namespace urn:um:meta

theory OpenMath
  constant mapsto # 1×... → 2 prec=20
  constant Object
  constant naryObject
  constant binder
  constant FMP

theory Computation
  constant type
  constant Any
  constant Function # (1,...)=> 2
  constant Lambda
  constant List # List[1]
  constant list # List(1,...)
  constant Term
  constant Context
  constant BigInt
  constant Double
  constant Boolean
  constant String

view Syntactic : OpenMath -> Computation
  constant Object = Term
  constant mapsto = Function
  naryObject = List[Term]
  binder = (Context, Term) => Term
  FMP = (x: Term) => "assert(x == OMS(logic1.true))"

view Semantic : OpenMath -> Computation
  constant Object = Any
  constant mapsto = Function
  naryObject = List[Any]
  binder = (Context, Term) => Any
  FMP = (x: Any) => "assert(x == true)"
)UM";

}  // namespace

ModuleRef openmath_theory() { return ModuleRef(kMetaBase, "OpenMath"); }
ModuleRef computation_theory() { return ModuleRef(kMetaBase, "Computation"); }
ModuleRef syntactic_view() { return ModuleRef(kMetaBase, "Syntactic"); }
ModuleRef semantic_view() { return ModuleRef(kMetaBase, "Semantic"); }

GlobalName openmath_symbol(std::string_view name) { return GlobalName(openmath_theory(), name); }
GlobalName computation_symbol(std::string_view name) {
  return GlobalName(computation_theory(), name);
}

std::string_view builtin_source() { return kSource; }

void add_builtins(TheoryGraph& g) {
  parse_modules(std::vector<SourceText>{{"<builtin>", std::string(kSource)}}, g);
}

}  // namespace um

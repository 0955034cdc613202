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

#include <string>
#include <string_view>

#include "um/term.hpp"
#include "um/xml.hpp"

namespace um {

inline constexpr const char* kOpenMathNamespace = "http://www.openmath.org/OpenMath";

// Bare object element, e.g. `<OMI>5</OMI>`.
std::string encode_xml(const Term& t);
// The object wrapped in `<OMOBJ xmlns=...>`.
std::string encode_omobj(const Term& t);

// Accepts an OMOBJ or a bare object element. `default_base` applies to OMS
// elements without a cdbase on themselves or an ancestor.
Term decode_xml(std::string_view xml, const std::string& default_base = {});
Term decode_element(const XmlElement& e, const std::string& inherited_base = {});

// Shortest decimal text that reads back as the same double.
std::string format_double(double v);

}  // namespace um

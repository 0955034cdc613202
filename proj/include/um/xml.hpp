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

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace um {

struct XmlElement;

// Either character data or a child element.
struct XmlNode {
  std::string text;
  std::shared_ptr<XmlElement> element;
};

// Minimal DOM. Names have their namespace prefix stripped.
struct XmlElement {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<XmlNode> children;
  int line = 0;

  const std::string* attr(std::string_view key) const;
  // Child elements in document order.
  std::vector<const XmlElement*> elements() const;
  // Concatenated character data of direct children.
  std::string text() const;
};

// Throws ParseError with line/column on malformed input.
std::shared_ptr<XmlElement> parse_xml(std::string_view text);

// Character data escapes only `&` and `<`; attribute values also quotes.
std::string xml_escape(std::string_view text, bool attribute = false);
std::string serialize_xml(const XmlElement& e);

}  // namespace um

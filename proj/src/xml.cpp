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

#include "um/xml.hpp"

#include <expat.h>

#include "um/error.hpp"

namespace um {

const std::string* XmlElement::attr(std::string_view key) const {
  for (const auto& [k, v] : attributes)
    if (k == key) return &v;
  return nullptr;
}

std::vector<const XmlElement*> XmlElement::elements() const {
  std::vector<const XmlElement*> out;
  for (const auto& c : children)
    if (c.element) out.push_back(c.element.get());
  return out;
}

std::string XmlElement::text() const {
  std::string out;
  for (const auto& c : children)
    if (!c.element) out += c.text;
  return out;
}

namespace {

struct Builder {
  XML_Parser parser = nullptr;
  std::shared_ptr<XmlElement> root;
  std::vector<XmlElement*> stack;
};

std::string local_name(const char* name) {
  std::string_view s(name);
  auto colon = s.find(':');
  return std::string(colon == std::string_view::npos ? s : s.substr(colon + 1));
}

void on_start(void* data, const char* name, const char** attrs) {
  auto* b = static_cast<Builder*>(data);
  auto e = std::make_shared<XmlElement>();
  e->name = local_name(name);
  e->line = static_cast<int>(XML_GetCurrentLineNumber(b->parser));
  for (int i = 0; attrs[i]; i += 2) e->attributes.emplace_back(attrs[i], attrs[i + 1]);
  XmlElement* raw = e.get();
  if (b->stack.empty()) {
    b->root = std::move(e);
  } else {
    b->stack.back()->children.push_back(XmlNode{{}, std::move(e)});
  }
  b->stack.push_back(raw);
}

void on_end(void* data, const char*) {
  static_cast<Builder*>(data)->stack.pop_back();
}

void on_text(void* data, const char* s, int len) {
  auto* b = static_cast<Builder*>(data);
  if (b->stack.empty()) return;
  auto& children = b->stack.back()->children;
  if (!children.empty() && !children.back().element) {
    children.back().text.append(s, static_cast<std::size_t>(len));
  } else {
    children.push_back(XmlNode{std::string(s, static_cast<std::size_t>(len)), nullptr});
  }
}

}  // namespace

std::shared_ptr<XmlElement> parse_xml(std::string_view text) {
  Builder b;
  b.parser = XML_ParserCreate("UTF-8");
  if (!b.parser) throw Error("cannot allocate XML parser");
  XML_SetUserData(b.parser, &b);
  XML_SetElementHandler(b.parser, on_start, on_end);
  XML_SetCharacterDataHandler(b.parser, on_text);
  auto status = XML_Parse(b.parser, text.data(), static_cast<int>(text.size()), 1);
  if (status != XML_STATUS_OK) {
    std::string msg = XML_ErrorString(XML_GetErrorCode(b.parser));
    int line = static_cast<int>(XML_GetCurrentLineNumber(b.parser));
    int col = static_cast<int>(XML_GetCurrentColumnNumber(b.parser)) + 1;
    XML_ParserFree(b.parser);
    throw ParseError("malformed XML: " + msg, line, col);
  }
  XML_ParserFree(b.parser);
  if (!b.root) throw ParseError("empty XML document");
  return b.root;
}

std::string xml_escape(std::string_view text, bool attribute) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>':
        if (attribute || (i >= 2 && text[i - 1] == ']' && text[i - 2] == ']')) out += "&gt;";
        else out += c;
        break;
      case '"':
        if (attribute) out += "&quot;";
        else out += c;
        break;
      case '\r': out += "&#13;"; break;
      case '\t':
      case '\n':
        if (attribute) out += c == '\t' ? "&#9;" : "&#10;";
        else out += c;
        break;
      default: out += c;
    }
  }
  return out;
}

std::string serialize_xml(const XmlElement& e) {
  std::string out = "<" + e.name;
  for (const auto& [k, v] : e.attributes) out += " " + k + "=\"" + xml_escape(v, true) + "\"";
  if (e.children.empty()) return out + "/>";
  out += ">";
  for (const auto& c : e.children) out += c.element ? serialize_xml(*c.element) : xml_escape(c.text);
  return out + "</" + e.name + ">";
}

}  // namespace um

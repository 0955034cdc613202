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

#include "um/omdoc.hpp"

#include <algorithm>

#include "um/builtins.hpp"
#include "um/error.hpp"
#include "um/openmath.hpp"
#include "um/xml.hpp"

namespace um {

namespace {

[[noreturn]] void fail(const XmlElement& e, const std::string& file, const std::string& msg) {
  throw ParseError("<" + e.name + ">: " + msg, e.line, 0, file);
}

const std::string& required(const XmlElement& e, const std::string& file, const char* key) {
  const std::string* v = e.attr(key);
  if (!v || v->empty()) fail(e, file, std::string("missing attribute '") + key + "'");
  return *v;
}

Term object_of(const XmlElement& holder, const std::string& file, const std::string& base) {
  auto kids = holder.elements();
  if (kids.size() != 1) fail(holder, file, "expected exactly one OpenMath object");
  try {
    return decode_element(*kids[0], base);
  } catch (const ParseError& e) {
    throw ParseError(e.detail(), e.line(), e.column(), file);
  }
}

std::string include_ref(const ModuleRef& target, const std::string& base) {
  return target.base == base ? "?" + target.name : target.str();
}

}  // namespace

std::vector<ModuleRef> ingest_omdoc(std::string_view xml, TheoryGraph& g, const std::string& file,
                                    const std::function<bool(const ModuleRef&)>& may_replace) {
  std::shared_ptr<XmlElement> root;
  try {
    root = parse_xml(xml);
  } catch (const ParseError& e) {
    throw ParseError(e.detail(), e.line(), e.column(), file);
  }
  if (root->name != "omdoc") fail(*root, file, "expected an omdoc document");
  std::string base = normalize_uri(required(*root, file, "base"));
  TheoryGraph staged = g;
  std::vector<ModuleRef> added;

  auto resolve = [&](const XmlElement& e, const std::string& text) {
    std::optional<ModuleRef> r;
    try {
      r = staged.resolve(text, base);
    } catch (const ParseError& err) {
      fail(e, file, err.detail());
    }
    if (!r) throw ResolveError(file + ":" + std::to_string(e.line) + ": unresolved module '" + text + "'");
    return *r;
  };

  for (const XmlElement* te : root->elements()) {
    if (te->name != "theory") fail(*te, file, "unsupported element");
    Theory th;
    th.path = ModuleRef(base, required(*te, file, "name"));
    th.loc = {file, te->line};
    th.meta = openmath_theory();
    if (const std::string* m = te->attr("meta")) th.meta = resolve(*te, *m);
    bool replace = staged.has(th.path);
    if (replace && (!may_replace || !may_replace(th.path) ||
                    std::find(added.begin(), added.end(), th.path) != added.end()))
      throw ConflictError("module " + th.path.str() + " is already defined");
    for (const XmlElement* d : te->elements()) {
      if (d->name == "include") {
        th.decls.emplace_back(Include{resolve(*d, required(*d, file, "from")), {file, d->line}});
        continue;
      }
      if (d->name != "constant") fail(*d, file, "unsupported element");
      Constant c;
      c.name = required(*d, file, "name");
      c.loc = {file, d->line};
      if (th.find(c.name)) fail(*d, file, "constant " + c.name + " is declared twice");
      for (const XmlElement* part : d->elements()) {
        auto obj = part->elements();
        if (part->name != "type" && part->name != "definition") fail(*part, file, "unsupported element");
        if (obj.size() != 1 || obj[0]->name != "OMOBJ") fail(*part, file, "expected an OMOBJ");
        Term t = object_of(*obj[0], file, base);
        auto& slot = part->name == "type" ? c.type : c.definiens;
        if (slot) fail(*part, file, "repeated element");
        slot = std::move(t);
      }
      th.decls.emplace_back(std::move(c));
    }
    added.push_back(th.path);
    staged.add(std::move(th), replace);
  }
  g = std::move(staged);
  return added;
}

std::string export_omdoc(const TheoryGraph& g, const std::vector<ModuleRef>& theories,
                         const std::string& base) {
  std::string out = "<omdoc xmlns=\"" + std::string(kOmdocNamespace) + "\" base=\"" +
                    xml_escape(base, true) + "\">\n";
  auto object = [](const Term& t) { return "<OMOBJ>" + encode_xml(t) + "</OMOBJ>"; };
  for (const auto& ref : theories) {
    const Theory& th = g.require_theory(ref);
    out += "  <theory name=\"" + xml_escape(ref.name, true) + "\"";
    if (th.meta && *th.meta != openmath_theory())
      out += " meta=\"" + xml_escape(include_ref(*th.meta, base), true) + "\"";
    out += ">\n";
    for (const auto& d : th.decls) {
      if (const auto* inc = std::get_if<Include>(&d)) {
        out += "    <include from=\"" + xml_escape(include_ref(inc->target, base), true) + "\"/>\n";
        continue;
      }
      const auto& c = std::get<Constant>(d);
      out += "    <constant name=\"" + xml_escape(c.name, true) + "\"";
      if (!c.type && !c.definiens) {
        out += "/>\n";
        continue;
      }
      out += ">\n";
      if (c.type) out += "      <type>" + object(*c.type) + "</type>\n";
      if (c.definiens) out += "      <definition>" + object(*c.definiens) + "</definition>\n";
      out += "    </constant>\n";
    }
    out += "  </theory>\n";
  }
  out += "</omdoc>\n";
  return out;
}

}  // namespace um

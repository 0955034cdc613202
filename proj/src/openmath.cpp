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

#include "um/openmath.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "um/error.hpp"

namespace um {

std::string format_double(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "INF" : "-INF";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  std::string out(buf, res.ptr);
  if (out.find_first_of(".eEn") == std::string::npos) out += ".0";
  return out;
}

namespace {

void encode(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Int:
      out += "<OMI>" + t.int_value().get_str() + "</OMI>";
      break;
    case TermKind::Float:
      out += "<OMF dec=\"" + format_double(t.float_value()) + "\"/>";
      break;
    case TermKind::Str:
      out += "<OMSTR>" + xml_escape(t.str_value()) + "</OMSTR>";
      break;
    case TermKind::Var:
      out += "<OMV name=\"" + xml_escape(t.var_name(), true) + "\"/>";
      break;
    case TermKind::Const: {
      const auto& n = t.name();
      out += "<OMS";
      if (!n.base.empty()) out += " cdbase=\"" + xml_escape(n.base, true) + "\"";
      out += " cd=\"" + xml_escape(n.module, true) + "\" name=\"" + xml_escape(n.name, true) + "\"/>";
      break;
    }
    case TermKind::App:
      out += "<OMA>";
      encode(t.head(), out);
      for (const auto& a : t.args()) encode(a, out);
      out += "</OMA>";
      break;
    case TermKind::Bind:
      out += "<OMBIND>";
      encode(t.binder(), out);
      out += "<OMBVAR>";
      for (const auto& v : t.context()) out += "<OMV name=\"" + xml_escape(v, true) + "\"/>";
      out += "</OMBVAR>";
      encode(t.scope(), out);
      out += "</OMBIND>";
      break;
    case TermKind::Foreign:
      out += "<OMFOREIGN";
      if (!t.foreign_format().empty())
        out += " format=\"" + xml_escape(t.foreign_format(), true) + "\"";
      out += ">" + xml_escape(t.foreign_content()) + "</OMFOREIGN>";
      break;
  }
}

[[noreturn]] void fail(const XmlElement& e, const std::string& msg) {
  throw ParseError("<" + e.name + ">: " + msg, e.line, 0);
}

const std::string& required(const XmlElement& e, const char* key) {
  const std::string* v = e.attr(key);
  if (!v) fail(e, std::string("missing attribute '") + key + "'");
  return *v;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_float(const XmlElement& e, const std::string& text) {
  if (text == "NaN") return std::numeric_limits<double>::quiet_NaN();
  if (text == "INF") return std::numeric_limits<double>::infinity();
  if (text == "-INF") return -std::numeric_limits<double>::infinity();
  double v = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    fail(e, "malformed float '" + text + "'");
  return v;
}

}  // namespace

std::string encode_xml(const Term& t) {
  std::string out;
  encode(t, out);
  return out;
}

std::string encode_omobj(const Term& t) {
  return std::string("<OMOBJ xmlns=\"") + kOpenMathNamespace + "\">" + encode_xml(t) + "</OMOBJ>";
}

Term decode_element(const XmlElement& e, const std::string& inherited_base) {
  std::string base = inherited_base;
  if (const auto* cb = e.attr("cdbase")) base = *cb;
  auto kids = e.elements();
  const std::string& n = e.name;
  if (n == "OMOBJ") {
    if (kids.size() != 1) fail(e, "expected exactly one child object");
    return decode_element(*kids[0], base);
  }
  if (n == "OMI") {
    std::string digits = trim(e.text());
    // Decimal, or hexadecimal after an `x`.
    std::size_t i = digits.size() > 0 && digits[0] == '-' ? 1 : 0;
    bool hex = i < digits.size() && digits[i] == 'x';
    std::string body = digits.substr(i + (hex ? 1 : 0));
    if (body.empty()) fail(e, "malformed integer '" + digits + "'");
    for (char ch : body)
      if (!(hex ? std::isxdigit(static_cast<unsigned char>(ch)) : std::isdigit(static_cast<unsigned char>(ch))))
        fail(e, "malformed integer '" + digits + "'");
    BigInt v(body, hex ? 16 : 10);
    return Term::integer(i ? BigInt(-v) : v);
  }
  if (n == "OMF") {
    if (const auto* dec = e.attr("dec")) return Term::floating(parse_float(e, trim(*dec)));
    fail(e, "missing attribute 'dec'");
  }
  if (n == "OMSTR") return Term::string(e.text());
  if (n == "OMV") return Term::var(required(e, "name"));
  if (n == "OMS") {
    return Term::constant(GlobalName(base, required(e, "cd"), required(e, "name")));
  }
  if (n == "OMA") {
    if (kids.empty()) fail(e, "application without head");
    if (kids.size() == 1) fail(e, "application without arguments");
    Term head = decode_element(*kids[0], base);
    std::vector<Term> args;
    for (std::size_t i = 1; i < kids.size(); ++i) args.push_back(decode_element(*kids[i], base));
    return Term::app(std::move(head), std::move(args));
  }
  if (n == "OMBIND") {
    if (kids.size() != 3 || kids[1]->name != "OMBVAR")
      fail(e, "expected binder, OMBVAR and scope");
    Context ctx;
    for (const auto* v : kids[1]->elements()) {
      if (v->name != "OMV") fail(*v, "expected OMV inside OMBVAR");
      ctx.push_back(required(*v, "name"));
    }
    try {
      return Term::bind(decode_element(*kids[0], base), std::move(ctx),
                        decode_element(*kids[2], base));
    } catch (const InvalidError& err) {
      fail(e, err.what());
    }
  }
  if (n == "OMFOREIGN") {
    std::string format;
    if (const auto* f = e.attr("format")) format = *f;
    else if (const auto* f2 = e.attr("encoding")) format = *f2;
    std::string content;
    for (const auto& c : e.children) content += c.element ? serialize_xml(*c.element) : c.text;
    return Term::foreign(std::move(format), std::move(content));
  }
  fail(e, "unknown OpenMath element");
}

Term decode_xml(std::string_view xml, const std::string& default_base) {
  auto root = parse_xml(xml);
  return decode_element(*root, default_base);
}

}  // namespace um

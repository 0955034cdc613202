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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "um/term.hpp"

namespace um {

struct NotationToken {
  enum class Kind { Delim, Arg, SeqArg, VarList };
  Kind kind = Kind::Delim;
  std::string text;  // delimiter text, or separator of SeqArg/VarList
  int index = 0;     // Arg/SeqArg position, 1-based

  friend bool operator==(const NotationToken&, const NotationToken&) = default;
};

struct Notation {
  std::vector<NotationToken> tokens;
  int precedence = 0;

  bool is_binder() const;
  bool has_seq() const;
  // Number of Arg tokens (SeqArg and VarList excluded).
  int fixed_args() const;
  // First and last tokens are delimiters: behaves as an atom.
  bool delimited() const;
  // Source form accepted by parse_notation.
  std::string str() const;

  friend bool operator==(const Notation&, const Notation&) = default;
};

// Whitespace-separated chunks. Digits are argument positions; a digit run
// followed by text and `...` (or `…`) is a sequence argument whose separator
// is that text. `V` is the bound-variable list of a binder. A final
// `prec=<n>` chunk sets the precedence.
Notation parse_notation(std::string_view src);

struct ScopeEntry {
  GlobalName name;
  std::optional<Notation> notation;
};

// Constants visible to the parser and renderer, in lookup order.
class ParseScope {
 public:
  ParseScope() : ParseScope(std::vector<ScopeEntry>{}) {}
  explicit ParseScope(std::vector<ScopeEntry> entries);

  const std::vector<ScopeEntry>& entries() const { return entries_; }
  // First constant with this local name.
  const GlobalName* lookup(std::string_view name) const;
  const GlobalName* lookup(std::string_view module, std::string_view name) const;
  const Notation* notation_of(const GlobalName& name) const;
  bool contains(const GlobalName& name) const { return index_.count(name) > 0; }

  // All delimiter texts, longest first, including the fixed punctuation.
  const std::vector<std::string>& delimiters() const { return delimiters_; }
  bool is_delimiter(std::string_view text) const;

  // Entry indices of notations starting with delimiter `text`.
  const std::vector<std::size_t>& prefix(const std::string& text) const;
  // Entry indices of notations starting with an argument and continuing
  // with `text` (a delimiter or the sequence separator).
  const std::vector<std::size_t>& infix(const std::string& text) const;
  const std::vector<std::size_t>& binders() const { return binders_; }
  bool ambiguous(std::size_t entry) const { return ambiguous_.count(entry) > 0; }

 private:
  std::vector<ScopeEntry> entries_;
  std::map<GlobalName, std::size_t> index_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
  std::vector<std::string> delimiters_;
  std::map<std::string, std::vector<std::size_t>> prefix_;
  std::map<std::string, std::vector<std::size_t>> infix_;
  std::vector<std::size_t> binders_;
  std::set<std::size_t> ambiguous_;
};

// Throws ParseError with 1-based line/column of the furthest failure.
Term parse_term(std::string_view src, const ParseScope& scope);

std::string render_term(const Term& t, const ParseScope& scope);

}  // namespace um

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

#include "um/machine.hpp"

#include "um/error.hpp"

namespace um {

Rule Rule::make(GlobalName head, Arity arity, std::variant<FixedFn, FlexibleFn, BinderFn> fn) {
  std::size_t want = arity.kind == Arity::Kind::Fixed ? 0 : arity.kind == Arity::Kind::Flexible ? 1 : 2;
  if (fn.index() != want)
    throw InvalidError("rule for " + head.short_str() + " does not match arity " + arity.str());
  return Rule{std::move(head), arity, std::move(fn)};
}

void RuleBase::add(Rule r) {
  auto& by_arity = rules_[r.head];
  if (by_arity.count(r.arity))
    throw ConflictError("duplicate rule for " + r.head.short_str() + " at arity " + r.arity.str());
  Arity a = r.arity;
  by_arity.emplace(a, std::move(r));
  ++size_;
}

void RuleBase::merge(const RuleBase& other) {
  for (const auto& [head, by_arity] : other.rules_) {
    auto it = rules_.find(head);
    if (it == rules_.end()) continue;
    for (const auto& [a, r] : by_arity)
      if (it->second.count(a))
        throw ConflictError("duplicate rule for " + head.short_str() + " at arity " + a.str());
  }
  for (const auto& [head, by_arity] : other.rules_)
    for (const auto& [a, r] : by_arity) add(r);
}

const Rule* RuleBase::find(const GlobalName& head, const Arity& arity) const {
  auto it = rules_.find(head);
  if (it == rules_.end()) return nullptr;
  auto jt = it->second.find(arity);
  return jt == it->second.end() ? nullptr : &jt->second;
}

const Rule* RuleBase::select(const GlobalName& head, std::size_t args) const {
  auto it = rules_.find(head);
  if (it == rules_.end()) return nullptr;
  const auto& by_arity = it->second;
  if (auto jt = by_arity.find(Arity::fixed(static_cast<int>(args))); jt != by_arity.end())
    return &jt->second;
  const Rule* best = nullptr;
  for (const auto& [a, r] : by_arity)
    if (a.kind == Arity::Kind::Flexible && static_cast<std::size_t>(a.n) <= args) best = &r;
  return best;
}

std::vector<const Rule*> RuleBase::rules() const {
  std::vector<const Rule*> out;
  for (const auto& [head, by_arity] : rules_)
    for (const auto& [a, r] : by_arity) out.push_back(&r);
  return out;
}

namespace {

std::optional<Term> fire(const RuleBase& base, const Term& t) {
  switch (t.kind()) {
    case TermKind::Const: {
      const Rule* r = base.find(t.name(), Arity::fixed(0));
      if (!r) return std::nullopt;
      return std::get<FixedFn>(r->apply)({});
    }
    case TermKind::App: {
      const GlobalName* h = t.app_head_name();
      if (!h) return std::nullopt;
      auto args = t.args();
      const Rule* r = base.select(*h, args.size());
      if (!r) return std::nullopt;
      if (r->arity.kind == Arity::Kind::Fixed) return std::get<FixedFn>(r->apply)(args);
      std::size_t k = static_cast<std::size_t>(r->arity.n);
      return std::get<FlexibleFn>(r->apply)(args.subspan(0, k), args.subspan(k));
    }
    case TermKind::Bind: {
      if (!t.binder().is(TermKind::Const)) return std::nullopt;
      const Rule* r = base.find(t.binder().name(), Arity::binder());
      if (!r) return std::nullopt;
      return std::get<BinderFn>(r->apply)(t.context(), t.scope());
    }
    default: return std::nullopt;
  }
}

class Simplifier {
 public:
  Simplifier(const RuleBase& base, std::size_t fuel) : base_(base), fuel_(fuel) {}

  Term run(const Term& input) {
    Term t = input;
    for (;;) {
      if (t.simplified() || exhausted_) return t;
      Term cur = t;
      switch (t.kind()) {
        case TermKind::App: {
          Term head = run(t.head());
          std::vector<Term> args;
          args.reserve(t.args().size());
          bool same = head.same_node(t.head());
          for (const auto& a : t.args()) {
            args.push_back(run(a));
            same = same && args.back().same_node(a);
          }
          if (!same) cur = Term::app(std::move(head), std::move(args));
          break;
        }
        case TermKind::Bind: {
          Term binder = run(t.binder());
          Term scope = run(t.scope());
          if (!binder.same_node(t.binder()) || !scope.same_node(t.scope()))
            cur = Term::bind(std::move(binder), t.context(), std::move(scope));
          break;
        }
        default: break;
      }
      if (exhausted_) return cur;
      std::optional<Term> next = rewrite_step(base_, cur);
      if (!next) return cur.with_simplified(true);
      if (steps_ == fuel_) {
        exhausted_ = true;
        return cur;
      }
      ++steps_;
      t = std::move(*next);
    }
  }

  bool exhausted() const { return exhausted_; }
  std::size_t steps() const { return steps_; }

 private:
  const RuleBase& base_;
  std::size_t fuel_;
  std::size_t steps_ = 0;
  bool exhausted_ = false;
};

}  // namespace

std::optional<Term> rewrite_step(const RuleBase& base, const Term& t) {
  std::optional<Term> out;
  try {
    out = fire(base, t);
  } catch (...) {
    return std::nullopt;
  }
  if (out && *out == t) return std::nullopt;
  return out;
}

SimplifyResult simplify(const RuleBase& base, const Term& t, std::size_t fuel) {
  Simplifier s(base, fuel);
  Term out = s.run(t);
  return {std::move(out), s.exhausted(), s.steps()};
}

}  // namespace um

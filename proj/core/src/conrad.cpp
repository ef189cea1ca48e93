#include "mvspec/conrad.hpp"

#include <algorithm>

#include "mvspec/error.hpp"

namespace mvspec {

std::optional<CounitWitness> is_counit(const Algebra& a, const Element& x) {
  a.validate(x);
  if (a.is_one(x)) return std::nullopt;
  if (a.is_finite()) {
    for (const auto& y : a.enumerate(0))
      if (!a.is_one(y) && a.is_one(a.join(x, y))) return CounitWitness{x, y};
    return std::nullopt;
  }
  if (auto k = a.lex_width()) {
    // Infinitesimals are never counits; a co-infinitesimal coinf[v] is one
    // exactly when v has a zero co-ordinate, witnessed by the indicator of
    // those zeros.
    if (x.cells()[0] == 0) return std::nullopt;
    std::vector<Cell> w(*k);
    bool any_zero = false;
    for (std::size_t i = 0; i < *k; ++i) {
      w[i] = x.cells()[1 + i] == 0 ? 1 : 0;
      any_zero = any_zero || w[i] == 1;
    }
    if (!any_zero) return std::nullopt;
    return CounitWitness{x, a.lex(1, w)};
  }
  for (std::size_t j = 0; j < a.arity(); ++j) {
    const auto& part_alg = *a.component(j);
    const Element part = a.project(x, j);
    std::optional<Element> partner;
    if (part_alg.is_one(part)) {
      partner = part_alg.zero();
    } else if (auto w = is_counit(part_alg, part)) {
      partner = w->v;
    }
    if (!partner) continue;
    std::vector<Element> parts;
    for (std::size_t i = 0; i < a.arity(); ++i) parts.push_back(i == j ? *partner : a.component(i)->one());
    return CounitWitness{x, a.tuple(parts)};
  }
  return std::nullopt;
}

std::optional<CounitWitness> find_counit_in_window(const Algebra& a, const Element& x, std::uint64_t window) {
  a.validate(x);
  if (a.is_one(x)) return std::nullopt;
  for (const auto& y : a.enumerate(window))
    if (!a.is_one(y) && a.is_one(a.join(x, y))) return CounitWitness{x, y};
  return std::nullopt;
}

std::vector<Element> counits(const Algebra& a, std::uint64_t window) {
  std::vector<Element> out;
  for (const auto& x : a.enumerate(window))
    if (is_counit(a, x)) out.push_back(x);
  return out;
}

Filter conrad_filter(const AlgebraPtr& a) {
  if (a->is_finite()) {
    const auto us = counits(*a, 0);
    return generate_filter(a, us);
  }
  if (auto k = a->lex_width()) return *k == 1 ? Filter::one(a) : Filter::rad(a);
  if (a->arity() >= 2) return Filter::whole(a);
  return Filter::pullback(a, 0, conrad_filter(a->component(0)));
}

bool dominates_complement(const Filter& p, std::uint64_t window) {
  if (!is_prime(p)) throw PreconditionError(p.literal() + " is not a proper prime filter");
  const Algebra& a = p.algebra();
  const auto scope = a.enumerate(window);
  std::vector<const Element*> inside;
  std::vector<const Element*> outside;
  for (const auto& x : scope) (p.contains(x) ? inside : outside).push_back(&x);
  bool dominates = true;
  for (const auto* x : outside) {
    for (const auto* q : inside) {
      if (!a.leq(*x, *q)) {
        dominates = false;
        break;
      }
    }
    if (!dominates) break;
  }
  const auto us = counits(a, window);
  const bool has_all = std::all_of(us.begin(), us.end(), [&](const Element& u) { return p.contains(u); });
  if (dominates != has_all)
    throw InvariantViolation("domination and counit containment disagree for " + p.literal());
  return dominates;
}

Element counit_separator(const Filter& p, const Filter& q, std::uint64_t window) {
  const Algebra& a = p.algebra();
  if (a.shape() != q.algebra().shape()) throw ShapeError("filters of different algebras");
  std::optional<Element> x;  // in q, not in p
  std::optional<Element> y;  // in p, not in q
  for (const auto& e : a.enumerate(window)) {
    const bool in_p = p.contains(e);
    const bool in_q = q.contains(e);
    if (!x && in_q && !in_p) x = e;
    if (!y && in_p && !in_q) y = e;
    if (x && y) break;
  }
  if (!x || !y) throw PreconditionError(p.literal() + " and " + q.literal() + " are comparable in scope");
  Element u = a.implies(*y, *x);
  if (!is_counit(a, u) || !q.contains(u) || p.contains(u))
    throw InvariantViolation("separator " + a.format(u) + " is not a counit in " + q.literal() + " \\ " + p.literal());
  return u;
}

Filter incomparable_prime(const Filter& p, std::uint64_t window) {
  if (!is_prime(p)) throw PreconditionError(p.literal() + " is not a prime filter");
  const AlgebraPtr& owner = p.owner();
  const Algebra& a = *owner;
  const auto us = counits(a, window);
  if (std::all_of(us.begin(), us.end(), [&](const Element& u) { return p.contains(u); }))
    throw PreconditionError(p.literal() + " contains every counit in scope");

  const auto scope = a.enumerate(window);
  std::optional<Element> g;
  std::optional<Element> q;
  for (const auto& cand : scope) {
    if (p.contains(cand)) continue;
    for (const auto& member : scope) {
      if (p.contains(member) && !a.leq(cand, member)) {
        g = cand;
        q = member;
        break;
      }
    }
    if (g) break;
  }
  if (!g) throw InvariantViolation(p.literal() + " misses a counit yet dominates its complement in scope");

  const Element avoid = a.implies(*g, *q);
  std::optional<Filter> result;
  if (a.is_finite()) {
    result = maximal_filter_avoiding(owner, avoid);
  } else {
    std::vector<Filter> candidates;
    for (auto& f : prime_filters(owner))
      if (!f.contains(avoid)) candidates.push_back(std::move(f));
    for (const auto& f : candidates) {
      const bool maximal = std::none_of(candidates.begin(), candidates.end(), [&](const Filter& h) {
        return !(h == f) && subset_of(f, h);
      });
      if (maximal) {
        result = f;
        break;
      }
    }
    if (!result) throw InvariantViolation("no catalog prime avoids " + a.format(avoid));
  }
  if (comparable(*result, p) || !result->contains(a.implies(*q, *g)))
    throw InvariantViolation(result->literal() + " is not incomparable to " + p.literal());
  return *result;
}

namespace {

Filter join_complement_closed_form(const AlgebraPtr& a, const Element& b) {
  if (a->is_finite()) {
    std::vector<Element> members;
    for (const auto& x : a->enumerate(0))
      if (a->is_one(a->join(x, b))) members.push_back(x);
    return Filter::from_members(a, members);
  }
  if (a->lex_width()) {
    if (b.cells()[0] == 0) return Filter::one(a);
    std::vector<std::size_t> support;
    for (std::size_t i = 1; i < b.cells().size(); ++i)
      if (b.cells()[i] != 0) support.push_back(i - 1);
    return Filter::zero_set(a, std::move(support));
  }
  std::vector<std::size_t> moved;
  std::vector<Filter> parts;
  for (std::size_t j = 0; j < a->arity(); ++j) {
    const Element part = a->project(b, j);
    if (a->component(j)->is_one(part)) continue;
    moved.push_back(j);
    parts.push_back(join_complement_closed_form(a->component(j), part));
  }
  if (moved.size() == 1) return Filter::pullback(a, moved.front(), parts.front());
  if (std::all_of(parts.begin(), parts.end(), [](const Filter& f) { return f.is_one(); })) return Filter::one(a);
  throw UnsupportedError("{x : x v b = 1} is a product of several proper filters here; not a catalog filter");
}

}  // namespace

Filter join_complement_filter(const AlgebraPtr& a, const Element& b, std::uint64_t window) {
  a->validate(b);
  if (a->is_one(b)) throw PreconditionError("b = 1 gives the improper filter");
  Filter f = join_complement_closed_form(a, b);
  if (!is_implication_filter(f, window))
    throw InvariantViolation(f.literal() + " is not an implication filter");
  return f;
}

std::optional<Filter> unique_maximal_filter(const AlgebraPtr& a) {
  auto maxes = maximal_filters(a);
  if (maxes.size() != 1) return std::nullopt;
  return maxes.front();
}

}  // namespace mvspec

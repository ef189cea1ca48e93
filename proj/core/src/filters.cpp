#include <algorithm>
#include <unordered_set>

#include "mvspec/error.hpp"
#include "mvspec/filter.hpp"
#include "overloaded.hpp"

namespace mvspec {

using detail::overloaded;

namespace {

void require_finite(const Algebra& a, const char* what) {
  if (!a.is_finite()) throw UnsupportedError(std::string(what) + " is only defined on finite algebras, not " + a.name());
}

std::size_t lex_k(const Algebra& a) {
  auto k = a.lex_width();
  if (!k) throw SemanticError("descriptor needs a lex/chang algebra, not " + a.name());
  return *k;
}

// Coordinates forced to zero for a Lex descriptor; nullopt for Whole.
std::optional<std::vector<std::size_t>> lex_coords(const Filter& f) {
  const std::size_t k = lex_k(f.algebra());
  return std::visit(
      overloaded{
          [&](const Filter::One&) -> std::optional<std::vector<std::size_t>> {
            std::vector<std::size_t> all(k);
            for (std::size_t i = 0; i < k; ++i) all[i] = i;
            return all;
          },
          [](const Filter::Rad&) -> std::optional<std::vector<std::size_t>> { return std::vector<std::size_t>{}; },
          [](const Filter::ZeroSet& z) -> std::optional<std::vector<std::size_t>> { return z.coords; },
          [](const Filter::Whole&) -> std::optional<std::vector<std::size_t>> { return std::nullopt; },
          [](const auto&) -> std::optional<std::vector<std::size_t>> {
            throw InvariantViolation("non-lex descriptor on a lex algebra");
          },
      },
      f.body());
}

void require_same_owner(const Filter& a, const Filter& b) {
  if (a.algebra().shape() != b.algebra().shape())
    throw ShapeError("filters of different algebras: " + a.algebra().name() + " vs " + b.algebra().name());
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

Filter Filter::materialise(AlgebraPtr a, const std::function<bool(const Element&)>& pred) {
  std::vector<bool> bits(*a->carrier_size());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = pred(a->element_at(i));
  return Filter(std::move(a), Explicit{std::move(bits)});
}

Filter Filter::one(AlgebraPtr a) {
  if (a->is_finite()) {
    const Element top = a->one();
    return materialise(std::move(a), [&](const Element& x) { return x == top; });
  }
  return Filter(std::move(a), One{});
}

Filter Filter::whole(AlgebraPtr a) {
  if (a->is_finite()) {
    std::vector<bool> bits(*a->carrier_size(), true);
    return Filter(std::move(a), Explicit{std::move(bits)});
  }
  return Filter(std::move(a), Whole{});
}

Filter Filter::rad(AlgebraPtr a) {
  lex_k(*a);
  return Filter(std::move(a), Rad{});
}

Filter Filter::zero_set(AlgebraPtr a, std::vector<std::size_t> coords) {
  const std::size_t k = lex_k(*a);
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  for (auto c : coords)
    if (c >= k) throw SemanticError("co-ordinate " + std::to_string(c + 1) + " out of range for " + a->name());
  if (coords.empty()) return Filter(std::move(a), Rad{});
  if (coords.size() == k) return Filter(std::move(a), One{});
  return Filter(std::move(a), ZeroSet{std::move(coords)});
}

Filter Filter::pullback(AlgebraPtr a, std::size_t component, const Filter& inner) {
  if (!a->is_product()) throw SemanticError("pull{} needs a product, not " + a->name());
  if (component >= a->arity())
    throw SemanticError("component " + std::to_string(component + 1) + " out of range for " + a->name());
  if (inner.algebra().shape() != a->component(component)->shape())
    throw ShapeError("pullback filter does not belong to component " + std::to_string(component + 1));
  if (a->is_finite()) {
    const Algebra& alg = *a;
    return materialise(std::move(a), [&](const Element& x) { return inner.contains(alg.project(x, component)); });
  }
  if (inner.is_whole()) return whole(std::move(a));
  if (a->arity() == 1 && inner.is_one()) return one(std::move(a));
  return Filter(std::move(a), Pullback{component, std::make_shared<const Filter>(inner)});
}

Filter Filter::from_members(AlgebraPtr a, std::span<const Element> members) {
  require_finite(*a, "explicit filters");
  std::vector<bool> bits(*a->carrier_size());
  for (const auto& x : members) bits[a->index_of(x)] = true;
  return Filter(std::move(a), Explicit{std::move(bits)});
}

Filter Filter::from_bits(AlgebraPtr a, std::vector<bool> bits) {
  require_finite(*a, "explicit filters");
  if (bits.size() != *a->carrier_size()) throw ShapeError("membership bitmap has the wrong size");
  return Filter(std::move(a), Explicit{std::move(bits)});
}

Filter Filter::up_set(AlgebraPtr a, const Element& e) {
  require_finite(*a, "up-sets");
  a->validate(e);
  const Algebra& alg = *a;
  return materialise(std::move(a), [&](const Element& x) { return alg.leq(e, x); });
}

// ---------------------------------------------------------------------------
// Queries

bool Filter::contains(const Element& x) const {
  owner_->validate(x);
  const Algebra& a = *owner_;
  return std::visit(
      overloaded{
          [&](const Explicit& e) { return static_cast<bool>(e.members[a.index_of(x)]); },
          [&](const One&) { return a.is_one(x); },
          [&](const Rad&) { return x.cells()[0] == 1; },
          [&](const ZeroSet& z) {
            if (x.cells()[0] != 1) return false;
            return std::all_of(z.coords.begin(), z.coords.end(), [&](std::size_t c) { return x.cells()[1 + c] == 0; });
          },
          [](const Whole&) { return true; },
          [&](const Pullback& p) { return p.inner->contains(a.project(x, p.component)); },
      },
      body_);
}

bool Filter::is_whole() const {
  if (const auto* e = std::get_if<Explicit>(&body_))
    return std::all_of(e->members.begin(), e->members.end(), [](bool b) { return b; });
  return std::holds_alternative<Whole>(body_);
}

bool Filter::is_one() const {
  if (const auto* e = std::get_if<Explicit>(&body_))
    return std::count(e->members.begin(), e->members.end(), true) == 1 && e->members[owner_->index_of(owner_->one())];
  return std::holds_alternative<One>(body_);
}

std::vector<Element> Filter::members() const {
  require_finite(*owner_, "member listing");
  std::vector<Element> out;
  for (const auto& x : owner_->enumerate(0))
    if (contains(x)) out.push_back(x);
  return out;
}

std::string Filter::literal() const {
  const Algebra& a = *owner_;
  return std::visit(
      overloaded{
          [&](const Explicit&) -> std::string {
            if (is_one()) return "one";
            if (is_whole()) return "whole";
            auto xs = members();
            if (!xs.empty()) {
              Element least = xs.front();
              for (const auto& x : xs) least = a.meet(least, x);
              if (a.otimes(least, least) == least && contains(least) && *this == up_set(owner_, least))
                return "gen{" + a.format(least) + "}";
            }
            std::string out = "{";
            for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ";" : "") + a.format(xs[i]);
            return out + "}";
          },
          [](const One&) -> std::string { return "one"; },
          [](const Rad&) -> std::string { return "rad"; },
          [](const ZeroSet& z) -> std::string {
            std::string out = "m{";
            for (std::size_t i = 0; i < z.coords.size(); ++i) out += (i ? "," : "") + std::to_string(z.coords[i] + 1);
            return out + "}";
          },
          [](const Whole&) -> std::string { return "whole"; },
          [](const Pullback& p) -> std::string {
            return "pull{" + std::to_string(p.component + 1) + ";" + p.inner->literal() + "}";
          },
      },
      body_);
}

bool operator==(const Filter& a, const Filter& b) {
  return a.owner_->shape() == b.owner_->shape() && a.body_ == b.body_;
}

// ---------------------------------------------------------------------------
// Lattice of filters

bool subset_of(const Filter& a, const Filter& b) {
  require_same_owner(a, b);
  const Algebra& alg = a.algebra();
  if (alg.is_finite()) {
    const auto& x = std::get<Filter::Explicit>(a.body()).members;
    const auto& y = std::get<Filter::Explicit>(b.body()).members;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] && !y[i]) return false;
    return true;
  }
  if (b.is_whole()) return true;
  if (a.is_whole()) return false;
  if (alg.lex_width()) {
    auto sa = *lex_coords(a);
    auto sb = *lex_coords(b);
    return std::includes(sa.begin(), sa.end(), sb.begin(), sb.end());
  }
  if (a.is_one()) return true;
  if (b.is_one()) return false;
  const auto& pa = std::get<Filter::Pullback>(a.body());
  const auto& pb = std::get<Filter::Pullback>(b.body());
  return pa.component == pb.component && subset_of(*pa.inner, *pb.inner);
}

bool subset_in_window(const Filter& a, const Filter& b, std::uint64_t window) {
  require_same_owner(a, b);
  for (const auto& x : a.algebra().enumerate(window))
    if (a.contains(x) && !b.contains(x)) return false;
  return true;
}

Filter intersect(const Filter& a, const Filter& b) {
  require_same_owner(a, b);
  const AlgebraPtr& owner = a.owner();
  if (owner->is_finite()) {
    auto bits = std::get<Filter::Explicit>(a.body()).members;
    const auto& other = std::get<Filter::Explicit>(b.body()).members;
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = bits[i] && other[i];
    return Filter::from_bits(owner, std::move(bits));
  }
  if (a.is_whole()) return b;
  if (b.is_whole()) return a;
  if (owner->lex_width()) {
    auto sa = *lex_coords(a);
    auto sb = *lex_coords(b);
    sa.insert(sa.end(), sb.begin(), sb.end());
    return Filter::zero_set(owner, std::move(sa));
  }
  if (a.is_one() || b.is_one()) return Filter::one(owner);
  const auto& pa = std::get<Filter::Pullback>(a.body());
  const auto& pb = std::get<Filter::Pullback>(b.body());
  if (pa.component != pb.component)
    throw UnsupportedError("intersection of pullbacks along different components is not a catalog filter");
  return Filter::pullback(owner, pa.component, intersect(*pa.inner, *pb.inner));
}

// ---------------------------------------------------------------------------
// Generation

Filter generate_filter(const AlgebraPtr& a, std::span<const Element> s) {
  require_finite(*a, "filter generation");
  Element m = a->one();
  for (const auto& x : s) m = a->meet(m, x);
  for (Element sq = a->otimes(m, m); !(sq == m); sq = a->otimes(m, m)) m = sq;
  return Filter::up_set(a, m);
}

Filter generate_filter_by_closure(const AlgebraPtr& a, std::span<const Element> s) {
  require_finite(*a, "filter generation");
  const auto carrier = a->enumerate(0);
  std::vector<bool> in(carrier.size());
  in[a->index_of(a->one())] = true;
  for (const auto& x : s) in[a->index_of(x)] = true;
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Element> cur;
    for (std::size_t i = 0; i < carrier.size(); ++i)
      if (in[i]) cur.push_back(carrier[i]);
    for (const auto& x : cur) {
      for (const auto& y : cur) {
        const std::size_t i = a->index_of(a->otimes(x, y));
        if (!in[i]) in[i] = changed = true;
      }
    }
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      if (in[i]) continue;
      if (std::any_of(cur.begin(), cur.end(), [&](const Element& x) { return a->leq(x, carrier[i]); }))
        in[i] = changed = true;
    }
  }
  return Filter::from_bits(a, std::move(in));
}

bool is_implication_filter(const Filter& f, std::uint64_t window) {
  const Algebra& a = f.algebra();
  const auto scope = a.enumerate(window);
  std::vector<char> in(scope.size());
  for (std::size_t i = 0; i < scope.size(); ++i) in[i] = f.contains(scope[i]);

  auto lattice_form = [&] {
    if (!f.contains(a.one())) return false;
    for (std::size_t i = 0; i < scope.size(); ++i) {
      if (!in[i]) continue;
      if (!f.contains(a.otimes(scope[i], scope[i]))) return false;
      for (std::size_t j = 0; j < scope.size(); ++j) {
        if (!in[j] && a.leq(scope[i], scope[j])) return false;
        if (in[j] && !f.contains(a.meet(scope[i], scope[j]))) return false;
      }
    }
    return true;
  };
  auto modus_ponens_form = [&] {
    if (!f.contains(a.one())) return false;
    for (std::size_t i = 0; i < scope.size(); ++i) {
      if (!in[i]) continue;
      for (std::size_t j = 0; j < scope.size(); ++j) {
        if (!in[j] && f.contains(a.implies(scope[i], scope[j]))) return false;
      }
    }
    return true;
  };
  const bool lattice = lattice_form();
  const bool mp = modus_ponens_form();
  if (lattice != mp)
    throw InvariantViolation("implication filter verdicts disagree for " + f.literal() +
                             " (lattice form " + (lattice ? "true" : "false") + ")");
  return lattice;
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<Element> idempotents(const Algebra& a) {
  require_finite(a, "idempotent enumeration");
  std::vector<Element> out;
  for (const auto& x : a.enumerate(0))
    if (a.otimes(x, x) == x) out.push_back(x);
  return out;
}

std::vector<Filter> all_filters(const AlgebraPtr& a) {
  require_finite(*a, "all_filters");
  std::vector<Filter> out;
  for (const auto& e : idempotents(*a)) out.push_back(Filter::up_set(a, e));
  return out;
}

std::vector<Filter> filter_catalog(const AlgebraPtr& a) {
  if (a->is_finite()) return all_filters(a);
  std::vector<Filter> out;
  auto push = [&](Filter f) {
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
  };
  if (auto k = a->lex_width()) {
    std::vector<std::vector<std::size_t>> subsets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << *k); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < *k; ++i)
        if (mask >> i & 1) s.push_back(i);
      subsets.push_back(std::move(s));
    }
    std::stable_sort(subsets.begin(), subsets.end(), [](const auto& x, const auto& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    for (auto& s : subsets) push(Filter::zero_set(a, std::move(s)));
    push(Filter::whole(a));
    return out;
  }
  push(Filter::one(a));
  for (std::size_t i = 0; i < a->arity(); ++i) {
    for (const auto& inner : filter_catalog(a->component(i)))
      if (!inner.is_whole()) push(Filter::pullback(a, i, inner));
  }
  push(Filter::whole(a));
  return out;
}

// ---------------------------------------------------------------------------
// Primes

bool is_prime_by_join(const Filter& f, std::uint64_t window) {
  if (f.is_whole()) return false;
  const Algebra& a = f.algebra();
  const auto scope = a.enumerate(window);
  std::vector<char> in(scope.size());
  for (std::size_t i = 0; i < scope.size(); ++i) in[i] = f.contains(scope[i]);
  for (std::size_t i = 0; i < scope.size(); ++i) {
    if (in[i]) continue;
    for (std::size_t j = 0; j < scope.size(); ++j) {
      if (!in[j] && f.contains(a.join(scope[i], scope[j]))) return false;
    }
  }
  return true;
}

bool is_prime_by_arrow(const Filter& f, std::uint64_t window) {
  if (f.is_whole()) return false;
  const Algebra& a = f.algebra();
  const auto scope = a.enumerate(window);
  for (const auto& x : scope) {
    for (const auto& y : scope) {
      if (!f.contains(a.implies(x, y)) && !f.contains(a.implies(y, x))) return false;
    }
  }
  return true;
}

std::vector<Filter> prime_filters(const AlgebraPtr& a) {
  std::vector<Filter> out;
  if (a->is_finite()) {
    for (auto& f : all_filters(a))
      if (is_prime_by_join(f, 0)) out.push_back(std::move(f));
    return out;
  }
  if (auto k = a->lex_width()) {
    if (*k == 1) return {Filter::one(a), Filter::rad(a)};
    for (std::size_t i = 0; i < *k; ++i) out.push_back(Filter::zero_set(a, {i}));
    out.push_back(Filter::rad(a));
    return out;
  }
  for (std::size_t i = 0; i < a->arity(); ++i)
    for (const auto& q : prime_filters(a->component(i))) out.push_back(Filter::pullback(a, i, q));
  return out;
}

bool is_prime(const Filter& f) {
  if (f.is_whole()) return false;
  if (f.algebra().is_finite()) return is_prime_by_join(f, 0);
  const auto primes = prime_filters(f.owner());
  return std::find(primes.begin(), primes.end(), f) != primes.end();
}

std::vector<Filter> minimal_primes(const AlgebraPtr& a) {
  const auto primes = prime_filters(a);
  std::vector<Filter> out;
  for (const auto& p : primes) {
    const bool minimal = std::none_of(primes.begin(), primes.end(), [&](const Filter& q) {
      return !(q == p) && subset_of(q, p);
    });
    if (minimal) out.push_back(p);
  }
  return out;
}

std::vector<Filter> minimal_primes_below(const Filter& p) {
  if (!is_prime(p)) throw PreconditionError(p.literal() + " is not a prime filter");
  std::vector<Filter> out;
  for (auto& m : minimal_primes(p.owner()))
    if (subset_of(m, p)) out.push_back(std::move(m));
  return out;
}

std::vector<Filter> maximal_filters(const AlgebraPtr& a) {
  std::vector<Filter> proper;
  for (auto& f : filter_catalog(a))
    if (!f.is_whole()) proper.push_back(std::move(f));
  std::vector<Filter> out;
  for (const auto& f : proper) {
    const bool maximal = std::none_of(proper.begin(), proper.end(), [&](const Filter& g) {
      return !(g == f) && subset_of(f, g);
    });
    if (maximal) out.push_back(f);
  }
  return out;
}

Filter maximal_filter_avoiding(const AlgebraPtr& a, const Element& x) {
  require_finite(*a, "maximal_filter_avoiding");
  a->validate(x);
  if (a->is_one(x)) throw PreconditionError("every filter contains 1");
  std::vector<Filter> avoiding;
  for (auto& f : all_filters(a))
    if (!f.contains(x)) avoiding.push_back(std::move(f));
  for (const auto& f : avoiding) {
    const bool maximal = std::none_of(avoiding.begin(), avoiding.end(), [&](const Filter& g) {
      return !(g == f) && subset_of(f, g);
    });
    if (!maximal) continue;
    if (!is_prime(f))
      throw InvariantViolation("maximal filter avoiding " + a->format(x) + " is not prime: " + f.literal());
    return f;
  }
  throw InvariantViolation("no filter avoids " + a->format(x));
}

// ---------------------------------------------------------------------------
// Window evidence

std::vector<Element> window_closure(const Algebra& a, std::span<const Element> generators,
                                    std::uint64_t window) {
  const auto scope = a.enumerate(window);
  std::unordered_set<Element, ElementHash> in;
  std::vector<Element> members;
  std::vector<Element> frontier;
  auto add = [&](const Element& x) {
    if (a.in_window(x, window) && in.insert(x).second) {
      members.push_back(x);
      frontier.push_back(x);
    }
  };
  add(a.one());
  for (const auto& g : generators) add(g);
  while (!frontier.empty()) {
    std::vector<Element> batch;
    batch.swap(frontier);
    for (const auto& f : batch) {
      const std::size_t n = members.size();
      for (std::size_t i = 0; i < n; ++i) add(a.otimes(f, members[i]));
    }
    for (const auto& f : batch) {
      for (const auto& w : scope)
        if (!in.count(w) && a.leq(f, w)) add(w);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Filter match_catalog_filter(const AlgebraPtr& a, const std::function<bool(const Element&)>& pred,
                            std::uint64_t window) {
  const auto scope = a->enumerate(window);
  std::vector<char> want(scope.size());
  for (std::size_t i = 0; i < scope.size(); ++i) want[i] = pred(scope[i]);
  for (auto& f : filter_catalog(a)) {
    bool agrees = true;
    for (std::size_t i = 0; i < scope.size() && agrees; ++i) agrees = f.contains(scope[i]) == static_cast<bool>(want[i]);
    if (agrees) return f;
  }
  throw InvariantViolation("no catalog filter of " + a->name() + " matches the given membership");
}

}  // namespace mvspec

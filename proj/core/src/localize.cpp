#include "mvspec/localize.hpp"

#include <algorithm>
#include <unordered_set>
#include <variant>

#include "mvspec/axioms.hpp"
#include "mvspec/conrad.hpp"
#include "mvspec/error.hpp"
#include "overloaded.hpp"

namespace mvspec {

using detail::overloaded;

namespace detail {

struct QuotientData {
  struct Identity {};
  struct Finite {
    std::vector<Element> image;  // by base carrier position
    std::vector<Element> reps;   // by target carrier position
  };
  struct LexKeep {
    std::vector<std::size_t> coords;  // retained co-ordinates; empty means chain:1
  };
  struct Component {
    std::size_t index;
    std::shared_ptr<const QuotientData> inner;
  };

  AlgebraPtr base;
  Filter by;
  AlgebraPtr target;
  std::variant<Identity, Finite, LexKeep, Component> impl;

  Element project(const Element& x) const {
    base->validate(x);
    return std::visit(
        overloaded{
            [&](const Identity&) { return x; },
            [&](const Finite& f) { return f.image[base->index_of(x)]; },
            [&](const LexKeep& l) {
              if (l.coords.empty()) return target->chain(x.cells()[0]);
              std::vector<Cell> v;
              for (auto c : l.coords) v.push_back(x.cells()[1 + c]);
              return target->lex(static_cast<int>(x.cells()[0]), v);
            },
            [&](const Component& c) { return c.inner->project(base->project(x, c.index)); },
        },
        impl);
  }

  Element lift(const Element& y) const {
    target->validate(y);
    return std::visit(
        overloaded{
            [&](const Identity&) { return y; },
            [&](const Finite& f) { return f.reps[target->index_of(y)]; },
            [&](const LexKeep& l) {
              std::vector<Cell> v(*base->lex_width(), 0);
              if (l.coords.empty()) return base->lex(static_cast<int>(y.cells()[0]), v);
              for (std::size_t i = 0; i < l.coords.size(); ++i) v[l.coords[i]] = y.cells()[1 + i];
              return base->lex(static_cast<int>(y.cells()[0]), v);
            },
            [&](const Component& c) {
              std::vector<Element> parts;
              for (std::size_t i = 0; i < base->arity(); ++i)
                parts.push_back(i == c.index ? c.inner->lift(y) : base->component(i)->one());
              return base->tuple(parts);
            },
        },
        impl);
  }
};

}  // namespace detail

namespace {

using detail::QuotientData;

bool congruent(const Algebra& a, const Filter& f, const Element& x, const Element& y) {
  return f.contains(a.implies(x, y)) && f.contains(a.implies(y, x));
}

// Signature of the finite quotient: keep the chain leaves on which the least
// element of F is 1 (F restricted to that leaf is {1}); the others collapse.
std::optional<AlgebraExpr> surviving(const AlgebraExpr& expr, const Cell*& cursor) {
  if (const auto* c = std::get_if<AlgebraExpr::Chain>(&expr.node)) {
    const Cell v = *cursor++;
    if (v != 0 && v != c->n) throw PreconditionError("quotienting set is not an implication filter");
    if (v == c->n) return expr;
    return std::nullopt;
  }
  const auto& p = std::get<AlgebraExpr::Product>(expr.node);
  std::vector<AlgebraExpr> kids;
  for (const auto& child : p.children)
    if (auto k = surviving(child, cursor)) kids.push_back(std::move(*k));
  if (kids.empty()) return std::nullopt;
  if (kids.size() == p.children.size()) return expr;
  if (kids.size() == 1) return kids.front();
  return AlgebraExpr::product(std::move(kids));
}

std::shared_ptr<const QuotientData> finite_quotient(const Filter& f) {
  const AlgebraPtr& a = f.owner();
  const auto carrier = a->enumerate(0);

  // Exhaustive classes, least member first.
  std::vector<std::size_t> class_of(carrier.size());
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    auto it = std::find_if(reps.begin(), reps.end(),
                           [&](std::size_t r) { return congruent(*a, f, carrier[i], carrier[r]); });
    if (it == reps.end()) {
      class_of[i] = reps.size();
      reps.push_back(i);
    } else {
      class_of[i] = static_cast<std::size_t>(it - reps.begin());
    }
  }

  const auto members = f.members();
  Element least = a->one();
  for (const auto& x : members) least = a->meet(least, x);
  const Cell* cursor = least.cells().data();
  auto sig = surviving(a->signature(), cursor);
  if (!sig) throw PreconditionError("quotient by the improper filter is trivial");
  auto target = build(*sig);

  std::vector<std::size_t> kept;
  std::size_t leaf_no = 0;
  for (const auto& leaf : a->leaves()) {
    if (least.cells()[leaf.offset] == leaf.param) kept.push_back(leaf_no);
    ++leaf_no;
  }
  QuotientData::Finite fin;
  for (const auto& x : carrier) {
    Cells cells;
    for (auto l : kept) cells.push_back(x.cells()[a->leaves()[l].offset]);
    fin.image.emplace_back(target->shape(), std::move(cells));
  }
  if (reps.size() != *target->carrier_size())
    throw InvariantViolation("class count disagrees with the quotient signature " + target->name());
  fin.reps.assign(reps.size(), Element());
  for (std::size_t r : reps) {
    const Element& img = fin.image[r];
    fin.reps[target->index_of(img)] = carrier[r];
  }
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    if (!(fin.image[i] == fin.image[reps[class_of[i]]]))
      throw InvariantViolation("closed-form projection splits a congruence class");
  }
  return std::make_shared<const QuotientData>(QuotientData{a, f, target, std::move(fin)});
}

std::shared_ptr<const QuotientData> quotient_data(const Filter& f) {
  const AlgebraPtr& a = f.owner();
  if (f.is_whole()) throw PreconditionError("quotient by the improper filter is trivial");
  if (a->is_finite()) return finite_quotient(f);
  if (f.is_one()) return std::make_shared<const QuotientData>(QuotientData{a, f, a, QuotientData::Identity{}});
  if (a->lex_width()) {
    if (std::holds_alternative<Filter::Rad>(f.body())) {
      return std::make_shared<const QuotientData>(
          QuotientData{a, f, build(AlgebraExpr::chain(1)), QuotientData::LexKeep{}});
    }
    const auto& z = std::get<Filter::ZeroSet>(f.body());
    return std::make_shared<const QuotientData>(
        QuotientData{a, f, build(AlgebraExpr::lex(z.coords.size())), QuotientData::LexKeep{z.coords}});
  }
  const auto* p = std::get_if<Filter::Pullback>(&f.body());
  if (!p) throw UnsupportedError("no closed-form quotient of " + a->name() + " by " + f.literal());
  auto inner = quotient_data(*p->inner);
  auto target = inner->target;
  return std::make_shared<const QuotientData>(
      QuotientData{a, f, std::move(target), QuotientData::Component{p->component, std::move(inner)}});
}

// The class structure L/F presented on representatives of the base.
struct ClassStructure {
  using value_type = Element;
  const QuotientAlgebra& q;

  Element canon(const Element& x) const { return q.lift(q.project(x)); }
  Element oplus(const Element& x, const Element& y) const { return canon(q.base()->oplus(x, y)); }
  Element neg(const Element& x) const { return canon(q.base()->neg(x)); }
  Element zero() const { return canon(q.base()->zero()); }
  std::string format(const Element& x) const { return "[" + q.base()->format(x) + "]"; }
};

std::vector<std::uint64_t> target_chain_bounds(const Algebra& a) {
  std::vector<std::uint64_t> out;
  for (const auto& leaf : a.leaves()) out.push_back(leaf.param);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// QuotientAlgebra

const AlgebraPtr& QuotientAlgebra::base() const { return data_->base; }
const Filter& QuotientAlgebra::by() const { return data_->by; }
const AlgebraPtr& QuotientAlgebra::algebra() const { return data_->target; }
Element QuotientAlgebra::project(const Element& x) const { return data_->project(x); }
Element QuotientAlgebra::lift(const Element& y) const { return data_->lift(y); }

std::vector<Element> QuotientAlgebra::representatives() const {
  if (!data_->base->is_finite()) throw UnsupportedError("representatives of a symbolic quotient");
  auto reps = std::get<QuotientData::Finite>(data_->impl).reps;
  std::sort(reps.begin(), reps.end());
  return reps;
}

Morphism QuotientAlgebra::projection() const { return Morphism::quotient_map(*this); }

QuotientAlgebra quotient(const Filter& f) { return QuotientAlgebra(quotient_data(f)); }

std::optional<std::string> validate_quotient(const QuotientAlgebra& q, std::uint64_t window) {
  const Algebra& a = *q.base();
  const Algebra& t = *q.algebra();
  const Filter& f = q.by();
  const auto scope = a.enumerate(window);
  std::vector<Element> images;
  images.reserve(scope.size());
  for (const auto& x : scope) images.push_back(q.project(x));

  if (!(q.project(a.zero()) == t.zero())) return "projection does not preserve 0";
  for (std::size_t i = 0; i < scope.size(); ++i) {
    const Element& x = scope[i];
    if (!(q.project(a.neg(x)) == t.neg(images[i]))) return "projection does not preserve neg at " + a.format(x);
    if (t.is_one(images[i]) != f.contains(x)) return "class of 1 differs from the filter at " + a.format(x);
  }
  for (std::size_t i = 0; i < scope.size(); ++i) {
    for (std::size_t j = 0; j < scope.size(); ++j) {
      const Element& x = scope[i];
      const Element& y = scope[j];
      const Element xy = a.implies(x, y);
      const Element yx = a.implies(y, x);
      const bool two = f.contains(xy) && f.contains(yx);
      const bool single = f.contains(a.meet(xy, yx));
      const bool same = images[i] == images[j];
      if (two != single) return "two-arrow and single-element congruence differ at " + a.format(x) + ", " + a.format(y);
      if (two != same) return "projection kernel differs from the congruence at " + a.format(x) + ", " + a.format(y);
      if (!(q.project(a.oplus(x, y)) == t.oplus(images[i], images[j])))
        return "projection does not preserve oplus at " + a.format(x) + ", " + a.format(y);
    }
  }
  for (const auto& y : t.enumerate(window)) {
    if (!(q.project(q.lift(y)) == y)) return "lift is not a section at " + t.format(y);
  }
  if (a.is_finite()) {
    std::unordered_set<Element, ElementHash> hit(images.begin(), images.end());
    if (hit.size() != *t.carrier_size()) return "projection is not onto " + t.name();
    for (std::size_t i = 0; i < scope.size(); ++i) {
      if (scope[i] < q.lift(images[i])) return "representative is not the least class member at " + a.format(scope[i]);
    }
  }

  auto report = check_quotient_axioms(q, window);
  if (!report.passed) return report.describe();
  return std::nullopt;
}

AxiomReport check_quotient_axioms(const QuotientAlgebra& q, std::uint64_t window) {
  const Algebra& t = *q.algebra();
  auto target_report = check_mv_axioms(t, window);
  if (!target_report.passed) {
    target_report.law = t.name() + ": " + target_report.law;
    return target_report;
  }
  std::vector<Element> classes;
  for (const auto& y : t.enumerate(window)) classes.push_back(q.lift(y));
  std::vector<Element> triples;
  for (const auto& y : ternary_scope(t, window)) triples.push_back(q.lift(y));
  ClassStructure cs{q};
  auto report = check_mv_axioms_on<ClassStructure>(cs, classes, triples);
  if (!report.passed) report.law = "classes of " + q.base()->name() + "/" + q.by().literal() + ": " + report.law;
  return report;
}

std::vector<std::uint64_t> quotient_chain_bounds_by_congruence(const Filter& f) {
  const AlgebraPtr& a = f.owner();
  if (!a->is_finite()) throw UnsupportedError("congruence counting needs a finite algebra");
  const auto carrier = a->enumerate(0);
  std::vector<std::uint64_t> out;
  for (const auto& m : prime_filters(a)) {
    if (!subset_of(f, m)) continue;
    std::vector<Element> reps;
    for (const auto& x : carrier) {
      if (std::none_of(reps.begin(), reps.end(), [&](const Element& r) { return congruent(*a, m, x, r); }))
        reps.push_back(x);
    }
    out.push_back(reps.size() - 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Morphisms

Morphism Morphism::identity(AlgebraPtr a) { return quotient_map(quotient(Filter::one(std::move(a)))); }

Morphism Morphism::table(AlgebraPtr source, AlgebraPtr target, std::vector<Element> images) {
  if (!source->is_finite()) throw UnsupportedError("table morphisms need a finite source");
  if (images.size() != *source->carrier_size()) throw ShapeError("morphism table has the wrong size");
  for (const auto& y : images) target->validate(y);
  return Morphism(std::move(source), std::move(target), FiniteTable{std::move(images)});
}

Morphism Morphism::quotient_map(QuotientAlgebra q) {
  auto source = q.base();
  auto target = q.algebra();
  return Morphism(std::move(source), std::move(target), QuotientMap{std::move(q)});
}

Morphism Morphism::compose(std::vector<Morphism> steps) {
  if (steps.empty()) throw PreconditionError("empty composite");
  for (std::size_t i = 0; i + 1 < steps.size(); ++i)
    if (steps[i].target()->shape() != steps[i + 1].source()->shape())
      throw ShapeError("composite steps do not line up");
  auto source = steps.front().source();
  auto target = steps.back().target();
  return Morphism(std::move(source), std::move(target), Composite{std::move(steps)});
}

Morphism Morphism::induced(QuotientAlgebra from, QuotientAlgebra to) {
  if (from.base()->shape() != to.base()->shape()) throw ShapeError("quotients of different algebras");
  if (!subset_of(from.by(), to.by()))
    throw PreconditionError(from.by().literal() + " is not contained in " + to.by().literal());
  auto source = from.algebra();
  auto target = to.algebra();
  return Morphism(std::move(source), std::move(target), Induced{std::move(from), std::move(to)});
}

Element Morphism::apply(const Element& x) const {
  source_->validate(x);
  return std::visit(
      overloaded{
          [&](const FiniteTable& t) { return t.images[source_->index_of(x)]; },
          [&](const QuotientMap& q) { return q.quotient.project(x); },
          [&](const Composite& c) {
            Element y = x;
            for (const auto& step : c.steps) y = step.apply(y);
            return y;
          },
          [&](const Induced& i) { return i.to.project(i.from.lift(x)); },
      },
      body_);
}

std::optional<std::string> check_homomorphism(const Morphism& f, std::uint64_t window) {
  const Algebra& s = *f.source();
  const Algebra& t = *f.target();
  if (!(f.apply(s.zero()) == t.zero())) return std::string("0 is not preserved");
  const auto scope = s.enumerate(window);
  std::vector<Element> images;
  for (const auto& x : scope) images.push_back(f.apply(x));
  for (std::size_t i = 0; i < scope.size(); ++i) {
    if (!(f.apply(s.neg(scope[i])) == t.neg(images[i]))) return "neg is not preserved at " + s.format(scope[i]);
    for (std::size_t j = 0; j < scope.size(); ++j) {
      if (!(f.apply(s.oplus(scope[i], scope[j])) == t.oplus(images[i], images[j])))
        return "oplus is not preserved at " + s.format(scope[i]) + ", " + s.format(scope[j]);
    }
  }
  return std::nullopt;
}

Filter shell(const Morphism& f, std::uint64_t window) {
  const AlgebraPtr& src = f.source();
  const Algebra& tgt = *f.target();
  auto hits_one = [&](const Element& x) { return tgt.is_one(f.apply(x)); };
  std::optional<Filter> result;
  if (const auto* q = std::get_if<Morphism::QuotientMap>(&f.body())) {
    result = q->quotient.by();
    for (const auto& x : src->enumerate(window))
      if (hits_one(x) != result->contains(x))
        throw InvariantViolation("class of 1 differs from " + result->literal() + " at " + src->format(x));
  } else if (src->is_finite()) {
    std::vector<Element> members;
    for (const auto& x : src->enumerate(0))
      if (hits_one(x)) members.push_back(x);
    result = Filter::from_members(src, members);
  } else {
    result = match_catalog_filter(src, hits_one, window);
  }
  if (!is_implication_filter(*result, window))
    throw InvariantViolation("shell " + result->literal() + " is not an implication filter");
  return *result;
}

// ---------------------------------------------------------------------------
// ell(P)

Filter ell_via_minimal(const Filter& p) {
  const auto mins = minimal_primes_below(p);
  if (mins.empty()) throw InvariantViolation("no minimal prime below " + p.literal());
  Filter out = mins.front();
  for (std::size_t i = 1; i < mins.size(); ++i) out = intersect(out, mins[i]);
  return out;
}

Filter ell(const Filter& p) {
  if (!is_prime(p)) throw PreconditionError("ell needs a proper prime filter, got " + p.literal());
  const AlgebraPtr& a = p.owner();
  if (!a->is_finite()) return ell_via_minimal(p);
  std::vector<Element> gens;
  const auto carrier = a->enumerate(0);
  for (const auto& x : carrier) {
    if (p.contains(x)) continue;
    for (const auto& q : carrier)
      if (p.contains(q)) gens.push_back(a->implies(x, q));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  Filter generated = generate_filter(a, gens);
  if (!(generated == ell_via_minimal(p)))
    throw InvariantViolation("generated ell(" + p.literal() + ") differs from the minimal-prime intersection");
  return generated;
}

bool ell_matches_window_generation(const Filter& p, std::uint64_t window) {
  const Algebra& a = p.algebra();
  const auto scope = a.enumerate(window);
  std::vector<const Element*> inside;
  std::vector<const Element*> outside;
  for (const auto& x : scope) (p.contains(x) ? inside : outside).push_back(&x);
  std::unordered_set<Element, ElementHash> gens;
  for (const auto* x : outside)
    for (const auto* q : inside) {
      Element g = a.implies(*x, *q);
      if (a.in_window(g, window)) gens.insert(std::move(g));
    }
  std::vector<Element> gen_list(gens.begin(), gens.end());
  std::sort(gen_list.begin(), gen_list.end());
  const auto closure = window_closure(a, gen_list, window);
  const Filter l = ell(p);
  std::vector<Element> expected;
  for (const auto& x : scope)
    if (l.contains(x)) expected.push_back(x);
  return closure == expected;
}

QuotientAlgebra localize(const Filter& p, std::uint64_t window) {
  const Filter l = ell(p);
  if (!subset_of(l, p)) throw InvariantViolation("ell(" + p.literal() + ") is not inside it");
  QuotientAlgebra q = quotient(l);
  for (const auto& u : counits(*q.algebra(), window)) {
    if (!p.contains(q.lift(u)))
      throw InvariantViolation("counit " + q.algebra()->format(u) + " of the localization is outside the image of " +
                               p.literal());
  }
  return q;
}

Morphism connecting_map(const Filter& p, const Filter& q, std::uint64_t window) {
  if (!is_prime(p) || !is_prime(q)) throw PreconditionError("connecting map needs two primes");
  if (!subset_of(q, p)) throw PreconditionError(q.literal() + " is not contained in " + p.literal());
  if (!subset_of(ell(p), ell(q)))
    throw InvariantViolation("ell(" + p.literal() + ") is not inside ell(" + q.literal() + ")");
  Morphism f = Morphism::induced(localize(p, window), localize(q, window));
  if (auto err = check_homomorphism(f, window)) throw InvariantViolation("connecting map: " + *err);
  return f;
}

// ---------------------------------------------------------------------------
// Universal property and spectra

std::string UniversalReport::describe() const {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::string out = "H1 shell<=P " + std::string(yn(shell_inside_p)) + ", H2 N(target)<=up(f[P]) " +
                    yn(conrad_below_image) + ", C ell(P)<=shell " + yn(ell_inside_shell);
  if (violation()) out += " (VIOLATION)";
  return out;
}

UniversalReport check_universal(const Morphism& f, const Filter& p, std::uint64_t window) {
  if (p.algebra().shape() != f.source()->shape())
    throw PreconditionError(p.literal() + " is not a filter of " + f.source()->name());
  UniversalReport r;
  const Filter sh = shell(f, window);
  r.shell_inside_p = subset_of(sh, p);

  const Algebra& t = *f.target();
  std::unordered_set<Element, ElementHash> seen;
  std::vector<Element> images;
  for (const auto& x : f.source()->enumerate(window)) {
    if (!p.contains(x)) continue;
    Element y = f.apply(x);
    if (seen.insert(y).second) images.push_back(std::move(y));
  }
  const Filter n = conrad_filter(f.target());
  r.conrad_below_image = true;
  for (const auto& y : t.enumerate(window)) {
    if (!n.contains(y)) continue;
    if (std::none_of(images.begin(), images.end(), [&](const Element& z) { return t.leq(z, y); })) {
      r.conrad_below_image = false;
      break;
    }
  }
  r.ell_inside_shell = subset_of(ell(p), sh);
  return r;
}

std::pair<bool, bool> comparability_via_ell(const Filter& p, const Filter& f) {
  if (!is_prime(p) || !is_prime(f)) throw PreconditionError("comparability_via_ell needs two primes");
  const bool lhs = subset_of(ell(p), f);
  const bool rhs = comparable(f, p);
  if (lhs != rhs)
    throw InvariantViolation("ell(" + p.literal() + ") inside " + f.literal() + " disagrees with comparability");
  return {lhs, rhs};
}

std::string IsoReport::describe() const {
  std::string out = "PSpec(P) ~ PSpec(" + quotient_name + ")\n";
  for (std::size_t i = 0; i < mapping.size(); ++i)
    out += "  " + domain.name(i) + " -> " + codomain.name(mapping[i]) + "\n";
  return out;
}

IsoReport spectrum_iso_check(const Filter& p, std::uint64_t window) {
  const QuotientAlgebra q = localize(p, window);
  IsoReport report;
  report.quotient_name = q.algebra()->name();
  report.domain = spectrum(p.owner(), SpectrumKind::prime, p);
  report.codomain = spectrum(q.algebra(), SpectrumKind::prime);
  if (report.domain.size() != report.codomain.size())
    throw InvariantViolation("PSpec(" + p.literal() + ") and PSpec(" + report.quotient_name + ") differ in size");

  const Algebra& base = *p.owner();
  const AlgebraPtr& target = q.algebra();
  for (const auto& f : report.domain.filters()) {
    std::unordered_set<Element, ElementHash> image;
    for (const auto& x : base.enumerate(window))
      if (f.contains(x)) image.insert(q.project(x));
    std::optional<Filter> img;
    if (target->is_finite()) {
      std::vector<Element> members(image.begin(), image.end());
      img = Filter::from_members(target, members);
    } else {
      img = match_catalog_filter(target, [&](const Element& y) { return image.count(y) > 0; }, window);
    }
    auto node = std::find(report.codomain.filters().begin(), report.codomain.filters().end(), *img);
    if (node == report.codomain.filters().end())
      throw InvariantViolation(f.literal() + "/ell(P) = " + img->literal() + " is not a prime of the localization");
    report.mapping.push_back(static_cast<std::size_t>(node - report.codomain.filters().begin()));
  }
  auto sorted = report.mapping;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvariantViolation("F -> F/ell(P) is not injective");
  for (std::size_t i = 0; i < report.mapping.size(); ++i)
    for (std::size_t j = 0; j < report.mapping.size(); ++j)
      if (report.domain.leq(i, j) != report.codomain.leq(report.mapping[i], report.mapping[j]))
        throw InvariantViolation("F -> F/ell(P) does not preserve and reflect the order");
  if (!order_iso(report.domain, report.codomain))
    throw InvariantViolation("order_iso search disagrees with the canonical correspondence");
  return report;
}

Element incomparable_caveat_witness(const Filter& p, const Filter& q, std::uint64_t window) {
  const Algebra& a = p.algebra();
  std::optional<Element> in_q;
  std::optional<Element> in_p;
  for (const auto& x : a.enumerate(window)) {
    const bool xp = p.contains(x);
    const bool xq = q.contains(x);
    if (!in_q && xq && !xp) in_q = x;
    if (!in_p && xp && !xq) in_p = x;
  }
  if (!in_q || !in_p) throw PreconditionError(p.literal() + " and " + q.literal() + " are comparable in scope");
  Element w = a.implies(*in_q, *in_p);
  if (!ell(p).contains(w) || q.contains(w))
    throw InvariantViolation(a.format(w) + " is not in ell(" + p.literal() + ") \\ " + q.literal());
  return w;
}

std::vector<std::uint64_t> quotient_chain_bounds_closed_form(const QuotientAlgebra& q) {
  return target_chain_bounds(*q.algebra());
}

}  // namespace mvspec

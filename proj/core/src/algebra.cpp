#include "mvspec/algebra.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "mvspec/error.hpp"
#include "overloaded.hpp"

namespace mvspec {

using detail::overloaded;

namespace {

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

bool operator==(const AlgebraExpr::Chain& a, const AlgebraExpr::Chain& b) { return a.n == b.n; }
bool operator==(const AlgebraExpr::Chang&, const AlgebraExpr::Chang&) { return true; }
bool operator==(const AlgebraExpr::Lex& a, const AlgebraExpr::Lex& b) { return a.k == b.k; }
bool operator==(const AlgebraExpr::Product& a, const AlgebraExpr::Product& b) {
  return a.children == b.children;
}
bool operator==(const AlgebraExpr& a, const AlgebraExpr& b) { return a.node == b.node; }

std::string format_algebra(const AlgebraExpr& expr) {
  return std::visit(
      overloaded{
          [](const AlgebraExpr::Chain& c) { return "chain:" + std::to_string(c.n); },
          [](const AlgebraExpr::Chang&) { return std::string("chang"); },
          [](const AlgebraExpr::Lex& l) {
            return l.k == 1 ? std::string("chang") : "lex:" + std::to_string(l.k);
          },
          [](const AlgebraExpr::Product& p) {
            std::string out = "product[";
            for (std::size_t i = 0; i < p.children.size(); ++i) {
              if (i) out += ',';
              out += format_algebra(p.children[i]);
            }
            return out + "]";
          },
      },
      expr.node);
}

std::size_t ElementHash::operator()(const Element& x) const noexcept {
  std::size_t h = static_cast<std::size_t>(x.shape());
  for (Cell c : x.cells()) h = (h ^ static_cast<std::size_t>(c)) * 1099511628211ull + 0x9e3779b9;
  return h;
}

namespace {

AlgebraExpr normalise(const AlgebraExpr& expr) {
  return std::visit(
      overloaded{
          [](const AlgebraExpr::Chain& c) -> AlgebraExpr {
            if (c.n == 0) throw SemanticError("chain:0 is the trivial algebra; need n >= 1");
            return AlgebraExpr::chain(c.n);
          },
          [](const AlgebraExpr::Chang&) -> AlgebraExpr { return AlgebraExpr::chang(); },
          [](const AlgebraExpr::Lex& l) -> AlgebraExpr {
            if (l.k == 0) throw SemanticError("lex:0 is not a valid algebra; need k >= 1");
            return l.k == 1 ? AlgebraExpr::chang() : AlgebraExpr::lex(l.k);
          },
          [](const AlgebraExpr::Product& p) -> AlgebraExpr {
            if (p.children.empty()) throw SemanticError("product of no algebras");
            std::vector<AlgebraExpr> kids;
            kids.reserve(p.children.size());
            for (const auto& c : p.children) kids.push_back(normalise(c));
            return AlgebraExpr::product(std::move(kids));
          },
      },
      expr.node);
}

}  // namespace

AlgebraPtr build(const AlgebraExpr& raw) {
  auto expr = normalise(raw);
  std::shared_ptr<Algebra> a(new Algebra());
  a->signature_ = expr;
  a->shape_ = fnv1a(format_algebra(expr));

  if (const auto* p = std::get_if<AlgebraExpr::Product>(&expr.node)) {
    std::size_t offset = 0;
    std::optional<std::size_t> size = 1;
    for (const auto& child_expr : p->children) {
      auto child = build(child_expr);
      a->child_offsets_.push_back(offset);
      for (const auto& leaf : child->leaves_) {
        a->leaves_.push_back({leaf.kind, leaf.offset + offset, leaf.param});
      }
      offset += child->width_;
      if (size && child->carrier_size_) {
        *size *= *child->carrier_size_;
      } else {
        size.reset();
      }
      a->children_.push_back(std::move(child));
    }
    a->width_ = offset;
    a->carrier_size_ = size;
  } else if (const auto* c = std::get_if<AlgebraExpr::Chain>(&expr.node)) {
    if (c->n >= std::numeric_limits<std::uint64_t>::max() / 2)
      throw SemanticError("chain bound too large");
    a->leaves_.push_back({Algebra::LeafKind::chain, 0, c->n});
    a->width_ = 1;
    a->carrier_size_ = static_cast<std::size_t>(c->n + 1);
  } else {
    std::size_t k = 1;
    if (const auto* l = std::get_if<AlgebraExpr::Lex>(&expr.node)) k = l->k;
    a->leaves_.push_back({Algebra::LeafKind::lex, 0, k});
    a->width_ = 1 + k;
  }

  Cells zero(a->width_, 0);
  Cells one(a->width_, 0);
  for (const auto& leaf : a->leaves_) {
    if (leaf.kind == Algebra::LeafKind::chain) {
      one[leaf.offset] = leaf.param;
    } else {
      one[leaf.offset] = 1;
    }
  }
  a->zero_ = Element(a->shape_, std::move(zero));
  a->one_ = Element(a->shape_, std::move(one));
  return a;
}

const AlgebraPtr& Algebra::component(std::size_t i) const {
  if (i >= children_.size()) throw ShapeError("component index out of range for " + name());
  return children_[i];
}

std::optional<std::size_t> Algebra::lex_width() const {
  if (children_.empty() && leaves_.front().kind == LeafKind::lex) return leaves_.front().param;
  return std::nullopt;
}

std::optional<std::uint64_t> Algebra::chain_bound() const {
  if (children_.empty() && leaves_.front().kind == LeafKind::chain) return leaves_.front().param;
  return std::nullopt;
}

bool Algebra::is_linear() const {
  if (is_product()) return children_.size() == 1 && children_.front()->is_linear();
  return leaves_.front().kind == LeafKind::chain || leaves_.front().param == 1;
}

bool Algebra::is_valid(const Element& x) const noexcept {
  if (x.shape() != shape_ || x.cells().size() != width_) return false;
  for (const auto& leaf : leaves_) {
    Cell head = x.cells()[leaf.offset];
    if (leaf.kind == LeafKind::chain ? head > leaf.param : head > 1) return false;
  }
  return true;
}

void Algebra::validate(const Element& x) const {
  if (!is_valid(x)) throw ShapeError("element does not belong to " + name());
}

void Algebra::oplus_into(const Cell* x, const Cell* y, Cell* out) const {
  for (const auto& leaf : leaves_) {
    const std::size_t o = leaf.offset;
    if (leaf.kind == LeafKind::chain) {
      out[o] = std::min(leaf.param, x[o] + y[o]);
      continue;
    }
    const std::size_t k = leaf.param;
    if (x[o] == 0 && y[o] == 0) {
      out[o] = 0;
      for (std::size_t i = 1; i <= k; ++i) {
        if (x[o + i] > std::numeric_limits<Cell>::max() - y[o + i])
          throw std::overflow_error("infinitesimal co-ordinate overflow");
        out[o + i] = x[o + i] + y[o + i];
      }
    } else if (x[o] == 1 && y[o] == 1) {
      out[o] = 1;
      for (std::size_t i = 1; i <= k; ++i) out[o + i] = 0;
    } else {
      // (0,v) + (1,w) -> (1, (w - v) v 0)
      const Cell* inf = x[o] == 0 ? x : y;
      const Cell* co = x[o] == 0 ? y : x;
      out[o] = 1;
      for (std::size_t i = 1; i <= k; ++i)
        out[o + i] = co[o + i] > inf[o + i] ? co[o + i] - inf[o + i] : 0;
    }
  }
}

Element Algebra::oplus(const Element& x, const Element& y) const {
  validate(x);
  validate(y);
  Cells out(width_);
  oplus_into(x.cells().data(), y.cells().data(), out.data());
  return Element(shape_, std::move(out));
}

Element Algebra::neg(const Element& x) const {
  validate(x);
  Cells out = x.cells();
  for (const auto& leaf : leaves_) {
    if (leaf.kind == LeafKind::chain) {
      out[leaf.offset] = leaf.param - out[leaf.offset];
    } else {
      out[leaf.offset] = 1 - out[leaf.offset];
    }
  }
  return Element(shape_, std::move(out));
}

Element Algebra::otimes(const Element& x, const Element& y) const {
  return neg(oplus(neg(x), neg(y)));
}

Element Algebra::implies(const Element& x, const Element& y) const { return oplus(neg(x), y); }

Element Algebra::meet(const Element& x, const Element& y) const {
  return otimes(x, implies(x, y));
}

Element Algebra::join(const Element& x, const Element& y) const {
  return implies(implies(x, y), y);
}

bool Algebra::leq(const Element& x, const Element& y) const { return is_one(implies(x, y)); }

bool Algebra::in_window(const Element& x, std::uint64_t bound) const {
  for (const auto& leaf : leaves_) {
    if (leaf.kind != LeafKind::lex) continue;
    for (std::size_t i = 1; i <= leaf.param; ++i)
      if (x.cells()[leaf.offset + i] > bound) return false;
  }
  return true;
}

std::vector<Element> Algebra::enumerate(std::uint64_t bound) const {
  std::vector<Cell> limit(width_, 0);
  for (const auto& leaf : leaves_) {
    if (leaf.kind == LeafKind::chain) {
      limit[leaf.offset] = leaf.param;
    } else {
      limit[leaf.offset] = 1;
      for (std::size_t i = 1; i <= leaf.param; ++i) limit[leaf.offset + i] = bound;
    }
  }
  std::vector<Element> out;
  Cells cur(width_, 0);
  while (true) {
    out.emplace_back(shape_, cur);
    std::size_t pos = width_;
    while (pos > 0) {
      --pos;
      if (cur[pos] < limit[pos]) {
        ++cur[pos];
        break;
      }
      cur[pos] = 0;
      if (pos == 0) return out;
    }
    if (width_ == 0) return out;
  }
}

Element Algebra::chain(std::uint64_t index) const {
  auto n = chain_bound();
  if (!n) throw ShapeError(name() + " is not a chain");
  if (index > *n) throw ShapeError("chain index " + std::to_string(index) + " out of range for " + name());
  return Element(shape_, Cells{index});
}

Element Algebra::lex(int top, std::span<const Cell> vec) const {
  auto k = lex_width();
  if (!k) throw ShapeError(name() + " has no lexicographic elements");
  if (top != 0 && top != 1) throw ShapeError("lex top bit must be 0 or 1");
  if (vec.size() != *k)
    throw ShapeError("lex vector of width " + std::to_string(vec.size()) + " for " + name());
  Cells cells;
  cells.push_back(static_cast<Cell>(top));
  cells.insert(cells.end(), vec.begin(), vec.end());
  return Element(shape_, std::move(cells));
}

Element Algebra::tuple(std::span<const Element> parts) const {
  if (!is_product()) throw ShapeError(name() + " is not a product");
  if (parts.size() != children_.size())
    throw ShapeError("tuple arity " + std::to_string(parts.size()) + " for " + name());
  Cells cells;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    children_[i]->validate(parts[i]);
    cells.insert(cells.end(), parts[i].cells().begin(), parts[i].cells().end());
  }
  return Element(shape_, std::move(cells));
}

Element Algebra::project(const Element& x, std::size_t i) const {
  validate(x);
  const auto& child = component(i);
  auto first = x.cells().begin() + static_cast<std::ptrdiff_t>(child_offsets_[i]);
  return Element(child->shape_, Cells(first, first + static_cast<std::ptrdiff_t>(child->width_)));
}

std::size_t Algebra::index_of(const Element& x) const {
  if (!is_finite()) throw UnsupportedError("index_of on symbolic algebra " + name());
  validate(x);
  std::size_t idx = 0;
  for (const auto& leaf : leaves_) idx = idx * static_cast<std::size_t>(leaf.param + 1) + x.cells()[leaf.offset];
  return idx;
}

Element Algebra::element_at(std::size_t index) const {
  if (!is_finite()) throw UnsupportedError("element_at on symbolic algebra " + name());
  if (index >= *carrier_size_) throw ShapeError("carrier index out of range");
  Cells cells(width_);
  for (std::size_t i = leaves_.size(); i-- > 0;) {
    const auto radix = static_cast<std::size_t>(leaves_[i].param + 1);
    cells[leaves_[i].offset] = index % radix;
    index /= radix;
  }
  return Element(shape_, std::move(cells));
}

std::string Algebra::format(const Element& x) const {
  validate(x);
  if (is_product()) {
    std::string out = "(";
    for (std::size_t i = 0; i < children_.size(); ++i) {
      if (i) out += ',';
      out += children_[i]->format(project(x, i));
    }
    return out + ")";
  }
  if (leaves_.front().kind == LeafKind::chain) return std::to_string(x.cells()[0]);
  std::string out = x.cells()[0] == 0 ? "inf[" : "coinf[";
  for (std::size_t i = 1; i < width_; ++i) {
    if (i > 1) out += ',';
    out += std::to_string(x.cells()[i]);
  }
  return out + "]";
}

OpResult eval_op(const Algebra& a, Op op, std::span<const Element> args) {
  const std::size_t want = op == Op::neg ? 1 : 2;
  if (args.size() != want)
    throw ShapeError("operation expects " + std::to_string(want) + " argument(s), got " +
                     std::to_string(args.size()));
  switch (op) {
    case Op::oplus: return a.oplus(args[0], args[1]);
    case Op::neg: return a.neg(args[0]);
    case Op::otimes: return a.otimes(args[0], args[1]);
    case Op::implies: return a.implies(args[0], args[1]);
    case Op::meet: return a.meet(args[0], args[1]);
    case Op::join: return a.join(args[0], args[1]);
    case Op::leq: return a.leq(args[0], args[1]);
  }
  throw ShapeError("unknown operation");
}

}  // namespace mvspec

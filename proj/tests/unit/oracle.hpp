#pragma once

// Reference computations that share no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "mvspec/algebra.hpp"

namespace oracle {

// Element of the lexicographic product Z x_lex Z^k, with Z^k ordered
// componentwise.
struct LexGroup {
  std::int64_t top;
  std::vector<std::int64_t> vec;
};

inline LexGroup add(const LexGroup& x, const LexGroup& y) {
  LexGroup r{x.top + y.top, x.vec};
  for (std::size_t i = 0; i < r.vec.size(); ++i) r.vec[i] += y.vec[i];
  return r;
}

inline LexGroup meet(const LexGroup& x, const LexGroup& y) {
  if (x.top != y.top) return x.top < y.top ? x : y;
  LexGroup r{x.top, x.vec};
  for (std::size_t i = 0; i < r.vec.size(); ++i) r.vec[i] = std::min(x.vec[i], y.vec[i]);
  return r;
}

// inf[v] is (0, v); coinf[v] is the strong unit (1, 0) minus (0, v).
inline LexGroup embed(const mvspec::Element& x) {
  const auto& c = x.cells();
  LexGroup g{static_cast<std::int64_t>(c[0]), {}};
  for (std::size_t i = 1; i < c.size(); ++i) {
    const auto v = static_cast<std::int64_t>(c[i]);
    g.vec.push_back(c[0] == 0 ? v : -v);
  }
  return g;
}

// Truncated addition u ^ (x + y) in the interval [0, u], written back as
// (top, co-ordinates) in the library's cell convention.
inline std::vector<std::uint64_t> truncated_sum(const mvspec::Element& x, const mvspec::Element& y) {
  const std::size_t k = x.cells().size() - 1;
  const LexGroup unit{1, std::vector<std::int64_t>(k, 0)};
  const LexGroup s = meet(unit, add(embed(x), embed(y)));
  std::vector<std::uint64_t> out{static_cast<std::uint64_t>(s.top)};
  for (auto v : s.vec) out.push_back(static_cast<std::uint64_t>(s.top == 0 ? v : -v));
  return out;
}

// Implication filters of a finite algebra straight from the definition:
// subsets containing 1 and closed under modus ponens.
inline std::vector<std::vector<bool>> implication_filters(const mvspec::Algebra& a) {
  const auto carrier = a.enumerate(0);
  const std::size_t n = carrier.size();
  std::vector<std::vector<bool>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto in = [&](std::size_t i) { return (mask >> i & 1U) != 0; };
    if (!in(a.index_of(a.one()))) continue;
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i)
      for (std::size_t j = 0; j < n && closed; ++j)
        if (in(i) && in(a.index_of(a.implies(carrier[i], carrier[j]))) && !in(j)) closed = false;
    if (!closed) continue;
    std::vector<bool> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = in(i);
    out.push_back(std::move(bits));
  }
  return out;
}

// Prime from the definition: proper, and x v y inside forces x or y inside.
inline bool is_prime_set(const mvspec::Algebra& a, const std::vector<bool>& bits) {
  const auto carrier = a.enumerate(0);
  if (std::all_of(bits.begin(), bits.end(), [](bool b) { return b; })) return false;
  for (std::size_t i = 0; i < carrier.size(); ++i)
    for (std::size_t j = 0; j < carrier.size(); ++j)
      if (bits[a.index_of(a.join(carrier[i], carrier[j]))] && !bits[i] && !bits[j]) return false;
  return true;
}

}  // namespace oracle

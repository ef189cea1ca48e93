#include "mvspec/spectrum.hpp"

#include <algorithm>
#include <functional>

#include "mvspec/error.hpp"

namespace mvspec {

SpectrumPoset SpectrumPoset::from_filters(std::vector<Filter> filters) {
  SpectrumPoset p;
  const std::size_t n = filters.size();
  p.leq_.assign(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    p.names_.push_back(filters[i].literal());
    for (std::size_t j = 0; j < n; ++j) p.leq_[i][j] = subset_of(filters[i], filters[j]);
  }
  p.filters_ = std::move(filters);
  return p;
}

SpectrumPoset SpectrumPoset::from_relation(std::vector<std::string> names,
                                           const std::vector<std::pair<std::size_t, std::size_t>>& less) {
  SpectrumPoset p;
  const std::size_t n = names.size();
  p.names_ = std::move(names);
  p.leq_.assign(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) p.leq_[i][i] = true;
  for (auto [i, j] : less) {
    if (i >= n || j >= n) throw PreconditionError("relation refers to a missing node");
    p.leq_[i][j] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (p.leq_[i][k] && p.leq_[k][j]) p.leq_[i][j] = true;
  if (!p.is_partial_order()) throw PreconditionError("relation has a cycle");
  return p;
}

std::optional<std::size_t> SpectrumPoset::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

bool SpectrumPoset::covers(std::size_t i, std::size_t j) const {
  if (!less(i, j)) return false;
  for (std::size_t k = 0; k < size(); ++k)
    if (less(i, k) && less(k, j)) return false;
  return true;
}

bool SpectrumPoset::is_partial_order() const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq_[i][i]) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq_[i][j] && leq_[j][i]) return false;
      for (std::size_t k = 0; k < n; ++k)
        if (leq_[i][j] && leq_[j][k] && !leq_[i][k]) return false;
    }
  }
  return true;
}

SpectrumPoset spectrum(const AlgebraPtr& a, SpectrumKind kind, const std::optional<Filter>& at) {
  if (at && !is_prime(*at)) throw PreconditionError(at->literal() + " is not a prime filter");
  std::vector<Filter> nodes = kind == SpectrumKind::prime ? prime_filters(a) : minimal_primes(a);
  if (at) {
    std::erase_if(nodes, [&](const Filter& f) { return !comparable(f, *at); });
  }
  return SpectrumPoset::from_filters(std::move(nodes));
}

std::vector<Filter> stem(const AlgebraPtr& a) {
  const auto primes = prime_filters(a);
  std::vector<Filter> out;
  for (const auto& p : primes) {
    if (std::all_of(primes.begin(), primes.end(), [&](const Filter& q) { return comparable(p, q); }))
      out.push_back(p);
  }
  return out;
}

bool is_root_system(const SpectrumPoset& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      for (std::size_t k = j + 1; k < p.size(); ++k) {
        if (p.leq(i, j) && p.leq(i, k) && !p.comparable(j, k)) return false;
      }
    }
  }
  return true;
}

std::optional<std::vector<std::size_t>> order_iso(const SpectrumPoset& p, const SpectrumPoset& q) {
  const std::size_t n = p.size();
  if (q.size() != n) return std::nullopt;
  std::vector<std::size_t> image(n);
  std::vector<bool> used(n);
  // Depth-first over images in increasing order, so the first complete map is
  // the lexicographically least one.
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < i && consistent; ++k) {
        consistent = p.leq(k, i) == q.leq(image[k], j) && p.leq(i, k) == q.leq(j, image[k]);
      }
      if (!consistent) continue;
      used[j] = true;
      image[i] = j;
      if (extend(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

std::string to_dot(const SpectrumPoset& p, const std::string& graph_name) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::string out = "digraph " + graph_name + " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=" + quote(p.name(i)) + "];\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.covers(i, j)) out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
  return out + "}\n";
}

}  // namespace mvspec

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvspec/filter.hpp"

namespace mvspec {

/// A finite poset of named nodes. Spectra carry the filter behind each node;
/// abstract posets built with `from_relation` do not.
class SpectrumPoset {
 public:
  SpectrumPoset() = default;

  /// Nodes ordered by filter inclusion.
  static SpectrumPoset from_filters(std::vector<Filter> filters);
  /// Abstract poset: `less` lists strict pairs (i, j) meaning i < j; the
  /// reflexive-transitive closure is taken. Throws PreconditionError on cycles.
  static SpectrumPoset from_relation(std::vector<std::string> names,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& less);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  bool has_filters() const noexcept { return !filters_.empty(); }
  const std::vector<Filter>& filters() const noexcept { return filters_; }
  const Filter& filter(std::size_t i) const { return filters_.at(i); }
  std::optional<std::size_t> find(const std::string& name) const;

  bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq_[i][j]; }
  bool comparable(std::size_t i, std::size_t j) const { return leq_[i][j] || leq_[j][i]; }
  /// i < j with nothing strictly between.
  bool covers(std::size_t i, std::size_t j) const;

  /// Reflexive, antisymmetric and transitive.
  bool is_partial_order() const;

 private:
  std::vector<std::string> names_;
  std::vector<Filter> filters_;
  std::vector<std::vector<bool>> leq_;
};

enum class SpectrumKind { prime, minimal };

/// PSpec, PSpec(F), muS or muS(F). `at` must be a prime filter of `a`.
SpectrumPoset spectrum(const AlgebraPtr& a, SpectrumKind kind, const std::optional<Filter>& at = std::nullopt);

/// Primes comparable to every prime, in spectrum order.
std::vector<Filter> stem(const AlgebraPtr& a);

/// Every node's up-set is a chain.
bool is_root_system(const SpectrumPoset& p);

/// Order isomorphism as a node map p -> q (result[i] is the image of node i),
/// lexicographically least in node order; nullopt when none exists.
std::optional<std::vector<std::size_t>> order_iso(const SpectrumPoset& p, const SpectrumPoset& q);

/// Graphviz digraph of the covering relation, edges pointing upward.
std::string to_dot(const SpectrumPoset& p, const std::string& graph_name = "pspec");

}  // namespace mvspec

#pragma once

#include <span>
#include <vector>

#include "symrep/natural.hpp"
#include "symrep/parallel.hpp"
#include "symrep/partition.hpp"

namespace symrep {

/// (2d)^m; throws DomainError when it does not fit in an int.
int restriction_threshold(int d, int m);

/// Necessary condition for membership in I(k, d, m): with D = (2d)^m, the
/// diagram of mu lies in the union of its first D rows and first D columns,
/// i.e. card{i : mu_i > D} <= D and card{j : mu~_j > D} <= D.
bool restriction_check(const Partition& mu, int d, int m);

/// Number of partitions of k passing restriction_check, computed without
/// enumerating Par(k).
Natural restriction_outer_count(int k, int d, int m);

/// I(lambda): union over the splits of lambda of the supports of
/// split_module. Canonical order.
std::vector<Partition> admissible_for(const Partition& lambda);
/// Tuple form: Cartesian product of the per-component sets.
std::vector<PartitionTuple> admissible_for(const PartitionTuple& lambda);

/// I(k, d, m) or its product form I(k, d, m) over several factors.
class AdmissibleSet {
 public:
  AdmissibleSet(std::vector<int> weights, std::vector<int> degrees, std::vector<int> widths,
                std::vector<std::vector<Partition>> factors);

  const std::vector<int>& weights() const noexcept { return weights_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  const std::vector<int>& widths() const noexcept { return widths_; }

  /// Per-factor member lists, canonical order.
  const std::vector<std::vector<Partition>>& factors() const noexcept { return factors_; }

  /// Number of member tuples (product of the factor sizes).
  Natural size() const;
  bool contains(const PartitionTuple& mu) const;
  bool contains(const Partition& mu) const { return contains(PartitionTuple(mu)); }

  /// Materialized member tuples in canonical order; refuses past the cap.
  std::vector<PartitionTuple> members(const Limits& limits = {}) const;

 private:
  std::vector<int> weights_;
  std::vector<int> degrees_;
  std::vector<int> widths_;
  std::vector<std::vector<Partition>> factors_;
};

AdmissibleSet admissible_set(int k, int d, int m, const Limits& limits = {});
AdmissibleSet admissible_set_tuple(std::span<const int> weights, std::span<const int> degrees,
                                   std::span<const int> widths, const Limits& limits = {});

/// Membership of mu in I(k, d, m) without materializing other factors;
/// restriction_check is applied first as a cheap negative filter.
bool is_admissible(const PartitionTuple& mu, std::span<const int> weights,
                   std::span<const int> degrees, std::span<const int> widths,
                   const Limits& limits = {});

/// Drops the per-lambda and per-factor member caches.
void clear_admissible_caches();

}  // namespace symrep

#pragma once

#include <vector>

#include "symrep/natural.hpp"
#include "symrep/partition.hpp"

namespace symrep {

/// Skew diagram outer/inner; construction requires inner ⊆ outer.
class SkewShape {
 public:
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  int size() const noexcept { return outer_.weight() - inner_.weight(); }

  /// No two cells share a column.
  bool is_horizontal_strip() const;
  /// No two cells share a row.
  bool is_vertical_strip() const;

 private:
  Partition outer_;
  Partition inner_;
};

/// hooks[i][j] is the hook length of cell (i, j), 0-based.
std::vector<std::vector<int>> hook_lengths(const Partition& lambda);

/// Dimension of the Specht module, k! / prod of hook lengths.
Natural specht_dim(const Partition& lambda);

/// Closed form k!(mu1 - mu2 + 1) / ((mu1 + 1)! mu2!) for at most two rows.
Natural two_row_dim(const Partition& mu);

/// Number of semistandard tableaux of shape `shape` and content `content`.
/// Throws DomainError on weight mismatch. Memoized.
Natural kostka(const Partition& shape, const Partition& content);

/// c^nu_{lambda,mu} by enumeration of Littlewood-Richardson tableaux of
/// shape nu/lambda and content mu. Throws DomainError unless
/// |nu| = |lambda| + |mu|; returns 0 when lambda is not inside nu. Memoized.
Natural lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu);

struct CacheStats {
  std::size_t kostka_entries = 0;
  std::size_t lr_entries = 0;
};

CacheStats tableaux_cache_stats();
void clear_tableaux_caches();

}  // namespace symrep

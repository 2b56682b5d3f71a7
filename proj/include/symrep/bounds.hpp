#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symrep/natural.hpp"
#include "symrep/parallel.hpp"
#include "symrep/partition.hpp"

namespace symrep {

enum class BoundKind { affine, semialgebraic, complex, projective, equivariant, projection };

std::string_view tag(BoundKind kind);
/// Inverse of tag(); throws ParseError on unknown tags.
BoundKind parse_bound_kind(std::string_view text);

/// Which letter count the projective bound indexes its representations by.
/// `as_stated` uses S_k acting on P^k (partitions of k); `homogeneous` uses
/// S_{k+1} permuting the k+1 homogeneous coordinates.
enum class ProjectiveReading { as_stated, homogeneous };

/// Parameters of a bound. `k` and `m` have equal arity, all entries >= 1.
struct BoundParams {
  std::vector<int> k;
  std::vector<int> m;
  int d = 1;
  std::optional<int> s;  // number of polynomials, semi-algebraic bound only
  // Projective bound only.
  std::optional<ProjectiveReading> reading;
  std::optional<int> cohomology_degree;

  bool operator==(const BoundParams&) const = default;
};

/// Exact value of a finite bound plus the record of what produced it.
struct BoundReport {
  BoundKind theorem = BoundKind::affine;
  BoundParams params;
  std::optional<PartitionTuple> target;
  Natural value = 0;
  bool excluded = false;
  std::string asymptotic_note;

  bool operator==(const BoundReport&) const = default;
};

/// Largest split multiplicity of mu over all splits of lambda.
Natural max_split_multiplicity(const Partition& mu, const Partition& lambda);

/// G(mu, lambda, d, m) = prod_i (2d)^(m_i len(lambda_i)) * max over splits
/// of lambda_i of the split multiplicity of mu_i.
Natural g_factor(const PartitionTuple& mu, const PartitionTuple& lambda, int d,
                 std::span<const int> widths);

/// Sum of g_factor over Par(k, (2d)^m), evaluated factor by factor.
Natural affine_sum(const PartitionTuple& mu, std::span<const int> weights,
                   std::span<const int> widths, int d, const Limits& limits = {});

/// D(k, m, d) = sum_i min(m_i k_i, d^m_i).
int sa_dimension_count(std::span<const int> weights, std::span<const int> widths, int d);

/// sum_{i=0}^{D-1} sum_{j=1}^{D-i} C(2s+1, j) 6^j.
Natural sa_prefactor(int dimension_count, int s);

BoundReport affine_multiplicity_bound(const PartitionTuple& mu, const BoundParams& params,
                                      const Limits& limits = {});
BoundReport sa_multiplicity_bound(const PartitionTuple& mu, const BoundParams& params,
                                  const Limits& limits = {});
/// Real reduction of a complex variety: widths doubled, degree unchanged,
/// exclusion tested against I(k, 2d, 2m).
BoundReport complex_multiplicity_bound(const PartitionTuple& mu, const BoundParams& params,
                                       const Limits& limits = {});
/// Hypersurfaces of P^k: (floor(i/2) + 1) times the complex affine bound on
/// the letter count selected by the reading. The cohomological degree i
/// defaults to k.
BoundReport projective_multiplicity_bound(const Partition& mu, int k, int d,
                                          ProjectiveReading reading = ProjectiveReading::as_stated,
                                          std::optional<int> cohomology_degree = std::nullopt,
                                          const Limits& limits = {});
/// Trivial-representation specialization: sum over Par(k, (2d)^m) of
/// prod_i (2d)^(m_i len(lambda_i)).
BoundReport equivariant_bound(std::span<const int> weights, std::span<const int> widths, int d,
                              const Limits& limits = {});
/// sum_{p=0}^{k-1} of the equivariant bound for weights (1,...,1,p+1) and
/// widths (1,...,1,m) with k leading ones.
BoundReport projection_image_bound(int k, int m, int d, const Limits& limits = {});

}  // namespace symrep

#pragma once

#include <vector>

#include "symrep/decomposition.hpp"
#include "symrep/partition.hpp"

namespace symrep {

/// Partitions mu of |lambda| + n with mu/lambda a horizontal strip.
std::vector<Partition> horizontal_strips(const Partition& lambda, int n);
/// Partitions mu of |lambda| + n with mu/lambda a vertical strip.
std::vector<Partition> vertical_strips(const Partition& lambda, int n);

/// Permutation module induced from the trivial character of the Young
/// subgroup: sum over mu dominating lambda of K(mu, lambda) S^mu.
Decomposition young_module(const Partition& lambda);

/// Induction with a trivial S_n factor (Pieri, horizontal strips). Requires
/// a single-group decomposition; n = 0 is the identity.
Decomposition pieri_row(const Decomposition& d, int n);
/// Induction with a sign S_n factor (Pieri, vertical strips).
Decomposition pieri_col(const Decomposition& d, int n);

/// Induction product of two single-group modules via LR coefficients.
Decomposition outer_product(const Decomposition& a, const Decomposition& b);

/// Module induced from trivial factors on the parts of `trivial_parts` and
/// sign factors on the parts of `sign_parts`, computed by iterated Pieri
/// steps (rows first, then columns). Cached per argument pair.
Decomposition split_module(const Partition& trivial_parts, const Partition& sign_parts);

/// Multiplicity of S^mu in split_module(trivial_parts, sign_parts), computed
/// independently of the Pieri route as
///   sum over nu' ⊵ trivial_parts, rho ⊵ sign_parts of
///   K(nu', trivial_parts) K(rho, sign_parts) c^mu_{nu', rho~}
/// where rho~ is the transpose of rho.
Natural split_multiplicity(const Partition& mu, const Partition& trivial_parts,
                           const Partition& sign_parts);

/// Tensor with the sign character: transposes every component of every key.
Decomposition sign_twist(const Decomposition& d);

/// External tensor product; keys are concatenated tuples.
Decomposition tuple_outer(const std::vector<Decomposition>& factors);

void clear_split_module_cache();

}  // namespace symrep

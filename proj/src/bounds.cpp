#include "symrep/bounds.hpp"

#include <algorithm>

#include "symrep/admissible.hpp"
#include "symrep/errors.hpp"
#include "symrep/induction.hpp"

namespace symrep {

std::string_view tag(BoundKind kind) {
  switch (kind) {
    case BoundKind::affine: return "affine";
    case BoundKind::semialgebraic: return "sa";
    case BoundKind::complex: return "complex";
    case BoundKind::projective: return "projective";
    case BoundKind::equivariant: return "equivariant";
    case BoundKind::projection: return "projection";
  }
  return "affine";
}

BoundKind parse_bound_kind(std::string_view text) {
  for (auto kind : {BoundKind::affine, BoundKind::semialgebraic, BoundKind::complex,
                    BoundKind::projective, BoundKind::equivariant, BoundKind::projection}) {
    if (tag(kind) == text) return kind;
  }
  throw ParseError("unknown bound kind '" + std::string(text) + "'", 0);
}

namespace {

void validate(const BoundParams& p, bool needs_s) {
  if (p.k.empty() || p.k.size() != p.m.size()) {
    throw DomainError("k and m must be nonempty tuples of equal arity");
  }
  for (int v : p.k) {
    if (v < 1) throw DomainError("entries of k must be >= 1");
  }
  for (int v : p.m) {
    if (v < 1) throw DomainError("entries of m must be >= 1");
  }
  if (p.d < 1) throw DomainError("d must be >= 1");
  if (needs_s && (!p.s || *p.s < 1)) throw DomainError("s must be >= 1");
}

void require_target_weights(const PartitionTuple& mu, const std::vector<int>& weights) {
  if (mu.weights() != weights) {
    throw DomainError("mu " + to_string(mu) + " does not match the weight tuple");
  }
}

void enforce_cap(std::span<const int> weights, std::span<const int> widths, int d,
                 const Limits& limits) {
  std::vector<int> bounds;
  for (int m : widths) bounds.push_back(restriction_threshold(d, m));
  const Natural terms = count_partition_tuples(weights, bounds);
  if (terms > limits.enumeration_cap) {
    throw CapExceeded("bound sum has " + terms.str() + " terms, above the enumeration cap of " +
                          std::to_string(limits.enumeration_cap),
                      limits.enumeration_cap);
  }
}

std::vector<int> uniform(int value, std::size_t n) { return std::vector<int>(n, value); }

std::vector<int> doubled(const std::vector<int>& v) {
  std::vector<int> out(v);
  for (int& x : out) x *= 2;
  return out;
}

}  // namespace

Natural max_split_multiplicity(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight()) {
    throw DomainError("mu and lambda must have equal weight");
  }
  Natural best = 0;
  for (const auto& [trivial, sign] : splits(lambda)) {
    best = std::max(best, split_module(trivial, sign).coefficient(mu));
  }
  return best;
}

Natural g_factor(const PartitionTuple& mu, const PartitionTuple& lambda, int d,
                 std::span<const int> widths) {
  if (mu.arity() != lambda.arity() || mu.arity() != widths.size()) {
    throw DomainError("mu, lambda and m must have equal arity");
  }
  if (d < 1) throw DomainError("d must be >= 1");
  Natural g = 1;
  const Natural base = 2 * d;
  for (std::size_t i = 0; i < mu.arity(); ++i) {
    if (mu[i].weight() != lambda[i].weight()) {
      throw DomainError("mu and lambda must have equal weights componentwise");
    }
    g *= power(base, static_cast<unsigned>(widths[i] * lambda[i].length()));
    g *= max_split_multiplicity(mu[i], lambda[i]);
    if (g == 0) break;
  }
  return g;
}

Natural affine_sum(const PartitionTuple& mu, std::span<const int> weights,
                   std::span<const int> widths, int d, const Limits& limits) {
  if (weights.size() != widths.size() || mu.arity() != weights.size()) {
    throw DomainError("mu, k and m must have equal arity");
  }
  enforce_cap(weights, widths, d, limits);
  // Par(k, (2d)^m) is a product and G factors over it, so the sum is the
  // product of the per-factor sums.
  Natural total = 1;
  const Natural base = 2 * d;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const auto lambdas = enumerate_partitions(weights[i], restriction_threshold(d, widths[i]));
    const auto partial = run_chunked<Natural>(
        lambdas.size(), limits.workers, [&](std::size_t begin, std::size_t end) {
          Natural s = 0;
          for (std::size_t j = begin; j < end; ++j) {
            const Natural best = max_split_multiplicity(mu[i], lambdas[j]);
            if (best == 0) continue;
            s += power(base, static_cast<unsigned>(widths[i] * lambdas[j].length())) * best;
          }
          return s;
        });
    Natural factor = 0;
    for (const auto& s : partial) factor += s;
    total *= factor;
    if (total == 0) break;
  }
  return total;
}

int sa_dimension_count(std::span<const int> weights, std::span<const int> widths, int d) {
  if (weights.size() != widths.size()) throw DomainError("k and m must have equal arity");
  long long total = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const long long cap = static_cast<long long>(widths[i]) * weights[i];
    long long p = 1;
    for (int e = 0; e < widths[i] && p < cap; ++e) p *= d;
    total += std::min(cap, p);
  }
  return static_cast<int>(total);
}

Natural sa_prefactor(int dimension_count, int s) {
  if (dimension_count < 0 || s < 0) throw DomainError("D and s must be nonnegative");
  Natural total = 0;
  const unsigned top = static_cast<unsigned>(2 * s + 1);
  for (int i = 0; i < dimension_count; ++i) {
    for (int j = 1; j <= dimension_count - i; ++j) {
      total += binomial(top, static_cast<unsigned>(j)) * power(Natural(6), static_cast<unsigned>(j));
    }
  }
  return total;
}

BoundReport affine_multiplicity_bound(const PartitionTuple& mu, const BoundParams& params,
                                      const Limits& limits) {
  validate(params, false);
  require_target_weights(mu, params.k);
  BoundReport r{BoundKind::affine, params, mu, 0, false,
                "m_mu <= prod_i k_i^O(d^(2 m_i)) * d^(m_i d)"};
  r.excluded = !is_admissible(mu, params.k, uniform(params.d, params.k.size()), params.m, limits);
  if (!r.excluded) r.value = affine_sum(mu, params.k, params.m, params.d, limits);
  return r;
}

BoundReport sa_multiplicity_bound(const PartitionTuple& mu, const BoundParams& params,
                                  const Limits& limits) {
  validate(params, true);
  require_target_weights(mu, params.k);
  BoundReport r{BoundKind::semialgebraic, params, mu, 0, false,
                "m_mu <= O(s)^D * prod_i k_i^O(d^(2 m_i)) * d^(m_i (2d)^m_i)"};
  r.excluded = !is_admissible(mu, params.k, uniform(params.d, params.k.size()), params.m, limits);
  if (!r.excluded) {
    const int dim = sa_dimension_count(params.k, params.m, params.d);
    r.value = sa_prefactor(dim, *params.s) * affine_sum(mu, params.k, params.m, params.d, limits);
  }
  return r;
}

BoundReport complex_multiplicity_bound(const PartitionTuple& mu, const BoundParams& params,
                                       const Limits& limits) {
  validate(params, false);
  require_target_weights(mu, params.k);
  BoundReport r{BoundKind::complex, params, mu, 0, false,
                "m_mu <= prod_i k_i^O(d^(4 m_i)) * d^(2 m_i d)"};
  const auto widths = doubled(params.m);
  r.excluded =
      !is_admissible(mu, params.k, uniform(2 * params.d, params.k.size()), widths, limits);
  if (!r.excluded) r.value = affine_sum(mu, params.k, widths, params.d, limits);
  return r;
}

BoundReport projective_multiplicity_bound(const Partition& mu, int k, int d,
                                          ProjectiveReading reading,
                                          std::optional<int> cohomology_degree,
                                          const Limits& limits) {
  if (k < 1) throw DomainError("k must be >= 1");
  const int letters = reading == ProjectiveReading::as_stated ? k : k + 1;
  if (mu.weight() != letters) {
    throw DomainError("mu must be a partition of " + std::to_string(letters));
  }
  const int degree = cohomology_degree.value_or(k);
  if (degree < 0) throw DomainError("cohomological degree must be nonnegative");

  BoundParams affine_params;
  affine_params.k = {letters};
  affine_params.m = {1};
  affine_params.d = d;
  const BoundReport per_degree = complex_multiplicity_bound(PartitionTuple(mu), affine_params, limits);

  BoundParams params;
  params.k = {k};
  params.m = {1};
  params.d = d;
  params.reading = reading;
  params.cohomology_degree = degree;
  BoundReport r{BoundKind::projective, params, PartitionTuple(mu), 0, per_degree.excluded,
                "m_mu <= k^O(d^4) * d^(2d)"};
  if (!r.excluded) r.value = per_degree.value * (degree / 2 + 1);
  return r;
}

BoundReport equivariant_bound(std::span<const int> weights, std::span<const int> widths, int d,
                              const Limits& limits) {
  BoundParams params;
  params.k.assign(weights.begin(), weights.end());
  params.m.assign(widths.begin(), widths.end());
  params.d = d;
  validate(params, false);
  enforce_cap(weights, widths, d, limits);

  std::vector<Partition> trivial;
  for (int k : weights) trivial.push_back(Partition::row(k));
  BoundReport r{BoundKind::equivariant, params, PartitionTuple(trivial), 1, false,
                "b(V/S_k) <= k^((2d)^m) * O(d)^(m (2d)^m + l)"};
  // Each factor contributes sum over lengths p of F(k_i, p) (2d)^(m_i p).
  const Natural base = 2 * d;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const int bound = std::min(weights[i], restriction_threshold(d, widths[i]));
    Natural factor = 0;
    for (int p = 0; p <= bound; ++p) {
      factor += count_partitions_of_length(weights[i], p) *
                power(base, static_cast<unsigned>(widths[i] * p));
    }
    r.value *= factor;
  }
  return r;
}

BoundReport projection_image_bound(int k, int m, int d, const Limits& limits) {
  if (k < 1 || m < 1 || d < 1) throw DomainError("k, m and d must be >= 1");
  BoundParams params;
  params.k = {k};
  params.m = {m};
  params.d = d;
  BoundReport r{BoundKind::projection, params, std::nullopt, 0, false,
                "b(pi(V)) <= k^((2d)^m) * O(d)^(k + m (2d)^m + 1)"};
  std::vector<int> weights(static_cast<std::size_t>(k) + 1, 1);
  std::vector<int> widths(static_cast<std::size_t>(k) + 1, 1);
  widths.back() = m;
  for (int p = 0; p < k; ++p) {
    weights.back() = p + 1;
    r.value += equivariant_bound(weights, widths, d, limits).value;
  }
  return r;
}

}  // namespace symrep

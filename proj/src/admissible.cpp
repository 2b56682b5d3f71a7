#include "symrep/admissible.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>

#include "symrep/errors.hpp"
#include "symrep/induction.hpp"

namespace symrep {

int restriction_threshold(int d, int m) {
  if (d < 1 || m < 1) throw DomainError("degree and block width must be positive");
  long long t = 1;
  for (int i = 0; i < m; ++i) {
    t *= 2LL * d;
    if (t > INT_MAX) throw DomainError("(2d)^m does not fit in an int");
  }
  return static_cast<int>(t);
}

bool restriction_check(const Partition& mu, int d, int m) {
  const int bound = restriction_threshold(d, m);
  // card{i : mu_i > D} <= D is the statement mu_{D+1} <= D; the column
  // count is the same statement for the transpose, which is equivalent.
  int long_rows = 0;
  for (int part : mu.parts()) long_rows += part > bound ? 1 : 0;
  int long_cols = 0;
  const Partition columns = transpose(mu);
  for (int part : columns.parts()) long_cols += part > bound ? 1 : 0;
  return long_rows <= bound && long_cols <= bound;
}

Natural restriction_outer_count(int k, int d, int m) {
  if (k < 0) throw DomainError("negative weight");
  const int bound = restriction_threshold(d, m);
  if (bound >= k) return count_partitions(k);
  // Sum over t = mu_{D+1}. The first D rows are each >= t; the remaining
  // rows form a partition whose largest part is exactly t.
  Natural total = count_partitions(k, bound);
  for (int t = 1; t <= bound; ++t) {
    const long long top_min = static_cast<long long>(bound) * t;
    for (int tail = t; tail + top_min <= k; ++tail) {
      const int top_extra = k - tail - static_cast<int>(top_min);
      total += count_partitions(tail - t, t) * count_partitions(top_extra, bound);
    }
  }
  return total;
}

namespace {

struct AdmissibleCache {
  std::shared_mutex mutex;
  std::map<std::vector<int>, std::vector<Partition>> per_lambda;
  std::map<std::pair<int, int>, std::vector<Partition>> per_factor;
};

AdmissibleCache& cache() {
  static AdmissibleCache c;
  return c;
}

std::vector<Partition> admissible_factor(int k, int bound, const Limits& limits) {
  auto& c = cache();
  const auto key = std::make_pair(k, bound);
  {
    std::shared_lock lock(c.mutex);
    auto it = c.per_factor.find(key);
    if (it != c.per_factor.end()) return it->second;
  }
  if (count_partitions(k, bound) > limits.enumeration_cap) {
    throw CapExceeded("Par(" + std::to_string(k) + ", " + std::to_string(bound) +
                          ") exceeds the enumeration cap",
                      limits.enumeration_cap);
  }
  const auto lambdas = enumerate_partitions(k, bound);
  using Chunk = std::set<Partition, CanonicalOrder>;
  auto chunks = run_chunked<Chunk>(lambdas.size(), limits.workers,
                                   [&](std::size_t begin, std::size_t end) {
                                     Chunk found;
                                     for (std::size_t i = begin; i < end; ++i) {
                                       for (auto& mu : admissible_for(lambdas[i])) {
                                         found.insert(std::move(mu));
                                       }
                                     }
                                     return found;
                                   });
  Chunk merged;
  for (auto& chunk : chunks) merged.merge(chunk);
  std::vector<Partition> members(merged.begin(), merged.end());
  {
    std::unique_lock lock(c.mutex);
    c.per_factor.emplace(key, members);
  }
  return members;
}

}  // namespace

void clear_admissible_caches() {
  auto& c = cache();
  std::unique_lock lock(c.mutex);
  c.per_lambda.clear();
  c.per_factor.clear();
}

std::vector<Partition> admissible_for(const Partition& lambda) {
  auto& c = cache();
  {
    std::shared_lock lock(c.mutex);
    auto it = c.per_lambda.find(lambda.parts());
    if (it != c.per_lambda.end()) return it->second;
  }
  std::set<Partition, CanonicalOrder> found;
  for (const auto& [trivial, sign] : splits(lambda)) {
    const Decomposition module = split_module(trivial, sign);
    for (const auto& [key, mult] : module.terms()) found.insert(key[0]);
  }
  std::vector<Partition> members(found.begin(), found.end());
  {
    std::unique_lock lock(c.mutex);
    c.per_lambda.emplace(lambda.parts(), members);
  }
  return members;
}

std::vector<PartitionTuple> admissible_for(const PartitionTuple& lambda) {
  std::vector<std::vector<Partition>> factors;
  for (const auto& comp : lambda.components()) factors.push_back(admissible_for(comp));
  std::vector<PartitionTuple> out;
  std::vector<Partition> current;
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (i == factors.size()) {
      out.emplace_back(current);
      return;
    }
    for (const auto& p : factors[i]) {
      current.push_back(p);
      self(self, i + 1);
      current.pop_back();
    }
  };
  walk(walk, 0);
  return out;
}

AdmissibleSet::AdmissibleSet(std::vector<int> weights, std::vector<int> degrees,
                             std::vector<int> widths, std::vector<std::vector<Partition>> factors)
    : weights_(std::move(weights)),
      degrees_(std::move(degrees)),
      widths_(std::move(widths)),
      factors_(std::move(factors)) {}

Natural AdmissibleSet::size() const {
  Natural n = 1;
  for (const auto& f : factors_) n *= f.size();
  return n;
}

bool AdmissibleSet::contains(const PartitionTuple& mu) const {
  if (mu.arity() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (!std::binary_search(factors_[i].begin(), factors_[i].end(), mu[i], CanonicalOrder{})) {
      return false;
    }
  }
  return true;
}

std::vector<PartitionTuple> AdmissibleSet::members(const Limits& limits) const {
  if (size() > limits.enumeration_cap) {
    throw CapExceeded("admissible set has more members than the enumeration cap",
                      limits.enumeration_cap);
  }
  std::vector<PartitionTuple> out;
  std::vector<Partition> current;
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (i == factors_.size()) {
      out.emplace_back(current);
      return;
    }
    for (const auto& p : factors_[i]) {
      current.push_back(p);
      self(self, i + 1);
      current.pop_back();
    }
  };
  walk(walk, 0);
  return out;
}

namespace {

void check_arities(std::span<const int> weights, std::span<const int> degrees,
                   std::span<const int> widths) {
  if (weights.size() != degrees.size() || weights.size() != widths.size()) {
    throw DomainError("k, d and m tuples must have equal arity");
  }
  for (int k : weights) {
    if (k < 0) throw DomainError("negative weight");
  }
}

}  // namespace

AdmissibleSet admissible_set(int k, int d, int m, const Limits& limits) {
  const int weights[] = {k};
  const int degrees[] = {d};
  const int widths[] = {m};
  return admissible_set_tuple(weights, degrees, widths, limits);
}

AdmissibleSet admissible_set_tuple(std::span<const int> weights, std::span<const int> degrees,
                                   std::span<const int> widths, const Limits& limits) {
  check_arities(weights, degrees, widths);
  std::vector<std::vector<Partition>> factors;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    factors.push_back(
        admissible_factor(weights[i], restriction_threshold(degrees[i], widths[i]), limits));
  }
  return AdmissibleSet({weights.begin(), weights.end()}, {degrees.begin(), degrees.end()},
                       {widths.begin(), widths.end()}, std::move(factors));
}

bool is_admissible(const PartitionTuple& mu, std::span<const int> weights,
                   std::span<const int> degrees, std::span<const int> widths,
                   const Limits& limits) {
  check_arities(weights, degrees, widths);
  if (mu.weights() != std::vector<int>(weights.begin(), weights.end())) {
    throw DomainError("mu " + to_string(mu) + " does not match the weight tuple");
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!restriction_check(mu[i], degrees[i], widths[i])) return false;
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const auto factor =
        admissible_factor(weights[i], restriction_threshold(degrees[i], widths[i]), limits);
    if (!std::binary_search(factor.begin(), factor.end(), mu[i], CanonicalOrder{})) return false;
  }
  return true;
}

}  // namespace symrep

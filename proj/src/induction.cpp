#include "symrep/induction.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "symrep/errors.hpp"
#include "symrep/tableaux.hpp"

namespace symrep {

namespace {

void require_single(const Decomposition& d, const char* op) {
  if (d.arity() != 1) {
    throw DomainError(std::string(op) + " needs a module over a single symmetric group");
  }
}

std::vector<Partition> sorted_canonical(std::vector<Partition> v) {
  std::sort(v.begin(), v.end(), CanonicalOrder{});
  return v;
}

}  // namespace

std::vector<Partition> horizontal_strips(const Partition& lambda, int n) {
  if (n < 0) throw DomainError("negative strip size");
  const int rows = lambda.length() + 1;
  std::vector<int> shape(static_cast<std::size_t>(rows), 0);
  for (int i = 0; i < lambda.length(); ++i) shape[i] = lambda[i];
  std::vector<Partition> out;

  auto walk = [&](auto&& self, int row, int left) -> void {
    if (row == rows) {
      if (left == 0) out.push_back(Partition::from_unsorted(shape));
      return;
    }
    // Row `row` may grow up to the old length of the row above it.
    const int room = row == 0 ? left : std::min(left, lambda[row - 1] - lambda[row]);
    for (int a = room; a >= 0; --a) {
      shape[row] = lambda[row] + a;
      self(self, row + 1, left - a);
    }
    shape[row] = lambda[row];
  };
  walk(walk, 0, n);
  return sorted_canonical(std::move(out));
}

std::vector<Partition> vertical_strips(const Partition& lambda, int n) {
  if (n < 0) throw DomainError("negative strip size");
  const int rows = lambda.length() + n;
  std::vector<int> shape(static_cast<std::size_t>(rows), 0);
  std::vector<Partition> out;

  auto walk = [&](auto&& self, int row, int left) -> void {
    if (left == 0) {
      for (int r = row; r < rows; ++r) shape[r] = lambda[r];
      out.push_back(Partition::from_unsorted(shape));
      return;
    }
    if (row == rows) return;
    for (int add = 1; add >= 0; --add) {
      const int len = lambda[row] + add;
      if (row > 0 && len > shape[row - 1]) continue;
      shape[row] = len;
      self(self, row + 1, left - add);
    }
  };
  walk(walk, 0, n);
  return sorted_canonical(std::move(out));
}

Decomposition young_module(const Partition& lambda) {
  Decomposition out({lambda.weight()});
  for (const auto& mu : enumerate_partitions(lambda.weight())) {
    if (!dominates(mu, lambda)) continue;
    out.add(mu, kostka(mu, lambda));
  }
  return out;
}

namespace {

template <typename Strips>
Decomposition pieri_step(const Decomposition& d, int n, Strips strips) {
  if (n < 0) throw DomainError("negative Pieri step");
  if (n == 0) return d;
  Decomposition out({d.ambient()[0] + n});
  for (const auto& [key, mult] : d.terms()) {
    for (const auto& mu : strips(key[0], n)) out.add(mu, mult);
  }
  return out;
}

}  // namespace

Decomposition pieri_row(const Decomposition& d, int n) {
  require_single(d, "pieri_row");
  return pieri_step(d, n, horizontal_strips);
}

Decomposition pieri_col(const Decomposition& d, int n) {
  require_single(d, "pieri_col");
  return pieri_step(d, n, vertical_strips);
}

Decomposition outer_product(const Decomposition& a, const Decomposition& b) {
  require_single(a, "outer_product");
  require_single(b, "outer_product");
  const int total = a.ambient()[0] + b.ambient()[0];
  Decomposition out({total});
  if (a.empty() || b.empty()) return out;
  const auto candidates = enumerate_partitions(total);
  for (const auto& [ka, ma] : a.terms()) {
    for (const auto& [kb, mb] : b.terms()) {
      const Natural weight = ma * mb;
      for (const auto& nu : candidates) {
        if (!contains(nu, ka[0]) || !contains(nu, kb[0])) continue;
        out.add(nu, weight * lr_coefficient(nu, ka[0], kb[0]));
      }
    }
  }
  return out;
}

namespace {

struct SplitModuleCache {
  std::shared_mutex mutex;
  std::map<std::pair<std::vector<int>, std::vector<int>>, Decomposition> table;
};

SplitModuleCache& split_cache() {
  static SplitModuleCache cache;
  return cache;
}

}  // namespace

Decomposition split_module(const Partition& trivial_parts, const Partition& sign_parts) {
  auto& cache = split_cache();
  const auto key = std::make_pair(trivial_parts.parts(), sign_parts.parts());
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.table.find(key);
    if (it != cache.table.end()) return it->second;
  }
  // Inducing from S_0 is the identity, so start from the trivial module of
  // the empty partition.
  Decomposition d = Decomposition::irreducible(Partition());
  for (int part : trivial_parts.parts()) d = pieri_row(d, part);
  for (int part : sign_parts.parts()) d = pieri_col(d, part);
  {
    std::unique_lock lock(cache.mutex);
    cache.table.emplace(key, d);
  }
  return d;
}

Natural split_multiplicity(const Partition& mu, const Partition& trivial_parts,
                           const Partition& sign_parts) {
  if (mu.weight() != trivial_parts.weight() + sign_parts.weight()) {
    throw DomainError("split multiplicity needs |mu| = |lambda'| + |lambda''|");
  }
  Natural total = 0;
  for (const auto& nu : enumerate_partitions(trivial_parts.weight())) {
    if (!dominates(nu, trivial_parts)) continue;
    const Natural k1 = kostka(nu, trivial_parts);
    if (k1 == 0) continue;
    for (const auto& rho : enumerate_partitions(sign_parts.weight())) {
      if (!dominates(rho, sign_parts)) continue;
      const Natural k2 = kostka(rho, sign_parts);
      if (k2 == 0) continue;
      total += k1 * k2 * lr_coefficient(mu, nu, transpose(rho));
    }
  }
  return total;
}

Decomposition sign_twist(const Decomposition& d) {
  Decomposition out(d.ambient());
  for (const auto& [key, mult] : d.terms()) {
    std::vector<Partition> comps;
    comps.reserve(key.arity());
    for (const auto& c : key.components()) comps.push_back(transpose(c));
    out.add(PartitionTuple(std::move(comps)), mult);
  }
  return out;
}

Decomposition tuple_outer(const std::vector<Decomposition>& factors) {
  std::vector<int> ambient;
  for (const auto& f : factors) {
    ambient.insert(ambient.end(), f.ambient().begin(), f.ambient().end());
  }
  Decomposition out(ambient);
  std::vector<Partition> key;
  auto walk = [&](auto&& self, std::size_t i, const Natural& mult) -> void {
    if (i == factors.size()) {
      out.add(PartitionTuple(key), mult);
      return;
    }
    for (const auto& [k, m] : factors[i].terms()) {
      key.insert(key.end(), k.components().begin(), k.components().end());
      self(self, i + 1, mult * m);
      key.resize(key.size() - k.arity());
    }
  };
  walk(walk, 0, Natural(1));
  return out;
}

void clear_split_module_cache() {
  auto& cache = split_cache();
  std::unique_lock lock(cache.mutex);
  cache.table.clear();
}

}  // namespace symrep

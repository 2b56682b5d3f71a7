#include "symrep/tableaux.hpp"

#include <cstdio>
#include <cstdlib>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "symrep/errors.hpp"

namespace symrep {

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(outer_, inner_)) throw DomainError("skew shape needs inner inside outer");
}

bool SkewShape::is_horizontal_strip() const {
  // Interlacing: outer_{i+1} <= inner_i for every row.
  for (int i = 0; i + 1 < outer_.length(); ++i) {
    if (outer_[i + 1] > inner_[i]) return false;
  }
  return true;
}

bool SkewShape::is_vertical_strip() const {
  for (int i = 0; i < outer_.length(); ++i) {
    if (outer_[i] - inner_[i] > 1) return false;
  }
  return true;
}

std::vector<std::vector<int>> hook_lengths(const Partition& lambda) {
  const Partition cols = transpose(lambda);
  std::vector<std::vector<int>> hooks(lambda.parts().size());
  for (int i = 0; i < lambda.length(); ++i) {
    hooks[i].resize(static_cast<std::size_t>(lambda[i]));
    for (int j = 0; j < lambda[i]; ++j) {
      hooks[i][j] = (lambda[i] - j - 1) + (cols[j] - i - 1) + 1;
    }
  }
  return hooks;
}

namespace {

[[noreturn]] void fatal(const char* what) {
  std::fprintf(stderr, "symrep: internal invariant violated: %s\n", what);
  std::abort();
}

Natural exact_quotient(const Natural& num, const Natural& den) {
  Natural q;
  Natural r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) fatal("non-exact division in dimension formula");
  return q;
}

}  // namespace

Natural specht_dim(const Partition& lambda) {
  Natural denom = 1;
  for (const auto& row : hook_lengths(lambda)) {
    for (int h : row) denom *= h;
  }
  return exact_quotient(factorial(static_cast<unsigned>(lambda.weight())), denom);
}

Natural two_row_dim(const Partition& mu) {
  if (mu.length() > 2) throw DomainError("two-row formula needs at most two rows");
  const int a = mu[0];
  const int b = mu[1];
  Natural num = factorial(static_cast<unsigned>(mu.weight())) * (a - b + 1);
  Natural den = factorial(static_cast<unsigned>(a + 1)) * factorial(static_cast<unsigned>(b));
  return exact_quotient(num, den);
}

namespace {

template <typename Key>
class Memo {
 public:
  bool find(const Key& key, Natural& out) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }

  void store(const Key& key, const Natural& value) {
    std::unique_lock lock(mutex_);
    table_.emplace(key, value);
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Natural> table_;
};

using KostkaKey = std::pair<std::vector<int>, std::vector<int>>;
using LrKey = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;

Memo<KostkaKey>& kostka_memo() {
  static Memo<KostkaKey> memo;
  return memo;
}

Memo<LrKey>& lr_memo() {
  static Memo<LrKey> memo;
  return memo;
}

// Counts chains of horizontal strips: the cells holding the largest letter
// of `content` form a horizontal strip shape/inner of size content.back().
Natural kostka_rec(const std::vector<int>& shape, const std::vector<int>& content) {
  if (content.empty()) return shape.empty() ? 1 : 0;
  if (shape.size() > content.size()) return 0;

  KostkaKey key{shape, content};
  Natural cached;
  if (kostka_memo().find(key, cached)) return cached;

  const int strip = content.back();
  const std::vector<int> rest(content.begin(), content.end() - 1);
  Natural total = 0;
  std::vector<int> inner(shape.size(), 0);

  // Choose inner_i in [shape_{i+1}, shape_i] row by row from the bottom.
  auto walk = [&](auto&& self, int row, int removed) -> void {
    if (row < 0) {
      if (removed != strip) return;
      std::vector<int> trimmed = inner;
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      total += kostka_rec(trimmed, rest);
      return;
    }
    const int hi = shape[row];
    const int lo = row + 1 < static_cast<int>(shape.size()) ? shape[row + 1] : 0;
    for (int v = hi; v >= lo; --v) {
      const int take = hi - v;
      if (removed + take > strip) break;
      inner[row] = v;
      self(self, row - 1, removed + take);
    }
  };
  walk(walk, static_cast<int>(shape.size()) - 1, 0);

  kostka_memo().store(key, total);
  return total;
}

class LrFiller {
 public:
  LrFiller(const Partition& nu, const Partition& lambda, const Partition& mu)
      : nu_(nu), lambda_(lambda), mu_(mu), counts_(static_cast<std::size_t>(mu.length()) + 1, 0) {
    grid_.resize(nu.parts().size());
    for (int i = 0; i < nu.length(); ++i) grid_[i].assign(static_cast<std::size_t>(nu[i]), 0);
  }

  Natural count() {
    total_ = 0;
    place(0, nu_[0] - 1);
    return total_;
  }

 private:
  // Cells are visited in reverse reading order: rows top to bottom, each
  // row right to left. The lattice condition is checked as letters arrive.
  void place(int row, int col) {
    if (row >= nu_.length()) {
      ++total_;
      return;
    }
    if (col < lambda_[row]) {
      const int next = row + 1;
      place(next, next < nu_.length() ? nu_[next] - 1 : 0);
      return;
    }
    int upper = mu_.length();
    if (col + 1 < nu_[row]) upper = std::min(upper, grid_[row][col + 1]);
    // Letters in row r of an LR tableau never exceed r + 1.
    upper = std::min(upper, row + 1);
    int lower = 1;
    if (row > 0 && col >= lambda_[row - 1]) lower = grid_[row - 1][col] + 1;

    for (int v = lower; v <= upper; ++v) {
      if (counts_[v] >= mu_[v - 1]) continue;
      if (v > 1 && counts_[v] + 1 > counts_[v - 1]) continue;
      ++counts_[v];
      grid_[row][col] = v;
      place(row, col - 1);
      grid_[row][col] = 0;
      --counts_[v];
    }
  }

  const Partition& nu_;
  const Partition& lambda_;
  const Partition& mu_;
  std::vector<int> counts_;
  std::vector<std::vector<int>> grid_;
  Natural total_;
};

}  // namespace

Natural kostka(const Partition& shape, const Partition& content) {
  if (shape.weight() != content.weight()) {
    throw DomainError("Kostka number needs shape and content of equal weight");
  }
  return kostka_rec(shape.parts(), content.parts());
}

Natural lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu) {
  if (nu.weight() != lambda.weight() + mu.weight()) {
    throw DomainError("LR coefficient needs |nu| = |lambda| + |mu|");
  }
  if (!contains(nu, lambda) || !contains(nu, mu)) return 0;
  if (mu.empty()) return 1;  // nu == lambda here

  LrKey key{nu.parts(), lambda.parts(), mu.parts()};
  Natural cached;
  if (lr_memo().find(key, cached)) return cached;
  Natural value = LrFiller(nu, lambda, mu).count();
  lr_memo().store(key, value);
  return value;
}

CacheStats tableaux_cache_stats() { return {kostka_memo().size(), lr_memo().size()}; }

void clear_tableaux_caches() {
  kostka_memo().clear();
  lr_memo().clear();
}

}  // namespace symrep

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symrep/natural.hpp"

namespace symrep {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is the unique partition of 0.
class Partition {
 public:
  Partition() = default;

  /// Throws DomainError unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts descending and drops zero parts; negative entries are rejected.
  static Partition from_unsorted(std::vector<int> parts);
  static Partition row(int k);
  static Partition column(int k);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// 0-based row access, zero beyond the last row.
  int operator[](std::size_t row) const noexcept {
    return row < parts_.size() ? parts_[row] : 0;
  }

  bool operator==(const Partition& other) const noexcept { return parts_ == other.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Canonical order: reverse-lexicographic on part sequences, so (4) comes
/// before (3,1) and longer sequences sharing a prefix come first.
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const noexcept {
    return a.parts() > b.parts();
  }
};

/// One partition per factor of a product of symmetric groups.
class PartitionTuple {
 public:
  PartitionTuple() = default;
  explicit PartitionTuple(std::vector<Partition> components)
      : components_(std::move(components)) {}
  explicit PartitionTuple(Partition single) : components_{std::move(single)} {}

  const std::vector<Partition>& components() const noexcept { return components_; }
  std::size_t arity() const noexcept { return components_.size(); }
  const Partition& operator[](std::size_t i) const { return components_.at(i); }

  std::vector<int> weights() const;
  /// Sum of the component lengths.
  int length() const;

  bool operator==(const PartitionTuple& other) const noexcept {
    return components_ == other.components_;
  }

 private:
  std::vector<Partition> components_;
};

struct CanonicalTupleOrder {
  bool operator()(const PartitionTuple& a, const PartitionTuple& b) const noexcept;
};

/// Prescribed lengths, one per factor.
struct LengthProfile {
  std::vector<int> entries;

  int total() const noexcept {
    int s = 0;
    for (int p : entries) s += p;
    return s;
  }
};

std::vector<Partition> enumerate_partitions(int k, std::optional<int> max_length = std::nullopt);

/// card(Par(k, max_length)) without enumerating.
Natural count_partitions(int k, std::optional<int> max_length = std::nullopt);

/// Number of partitions of k with exactly `length` parts.
Natural count_partitions_of_length(int k, int length);

Partition transpose(const Partition& lambda);

/// Dominance order; throws DomainError when weights differ.
bool dominates(const Partition& mu, const Partition& lambda);

/// Cellwise containment of Young diagrams: inner_i <= outer_i for all i.
bool contains(const Partition& outer, const Partition& inner);

Natural count_by_length_profile(std::span<const int> weights, const LengthProfile& profile);

/// Par(k, d) for tuples: Cartesian product of the bounded enumerations.
std::vector<PartitionTuple> enumerate_partition_tuples(std::span<const int> weights,
                                                       std::span<const int> max_lengths);

/// card of the above, exact.
Natural count_partition_tuples(std::span<const int> weights, std::span<const int> max_lengths);

/// All ordered pairs (first, second) whose part multisets union to lambda's,
/// with equal parts interchangeable. Ordered by `first` in canonical order.
std::vector<std::pair<Partition, Partition>> splits(const Partition& lambda);

// Text syntax: "[3,1,1]", "[]" and tuples "[3,1];[2]".
std::string to_string(const Partition& lambda);
std::string to_string(const PartitionTuple& tuple);
Partition parse_partition(std::string_view text);
PartitionTuple parse_partition_tuple(std::string_view text);
/// Comma-separated nonnegative integers, e.g. "2,2"; used for weight tuples.
std::vector<int> parse_int_tuple(std::string_view text);

}  // namespace symrep

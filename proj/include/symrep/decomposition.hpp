#pragma once

#include <map>
#include <string>
#include <vector>

#include "symrep/natural.hpp"
#include "symrep/partition.hpp"

namespace symrep {

/// A finite-dimensional module of a product of symmetric groups up to
/// isomorphism: multiplicities of irreducibles keyed by partition tuples.
/// Every key has weight tuple equal to `ambient()`; zero multiplicities are
/// never stored. Single-group modules use tuples of arity one.
class Decomposition {
 public:
  using Terms = std::map<PartitionTuple, Natural, CanonicalTupleOrder>;

  /// The zero module over the given weight tuple.
  explicit Decomposition(std::vector<int> ambient);

  /// mult * S^lambda over S_{|lambda|}.
  static Decomposition irreducible(const Partition& lambda, const Natural& mult = 1);
  static Decomposition irreducible(const PartitionTuple& key, const Natural& mult = 1);

  const std::vector<int>& ambient() const noexcept { return ambient_; }
  std::size_t arity() const noexcept { return ambient_.size(); }
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Natural coefficient(const PartitionTuple& key) const;
  Natural coefficient(const Partition& key) const { return coefficient(PartitionTuple(key)); }

  /// Throws DomainError when the key's weights differ from the ambient.
  void add(const PartitionTuple& key, const Natural& mult);
  void add(const Partition& key, const Natural& mult) { add(PartitionTuple(key), mult); }

  Decomposition& operator+=(const Decomposition& other);
  Decomposition scaled(const Natural& factor) const;

  /// Sum over terms of mult * prod of Specht dimensions.
  Natural total_dim() const;

  bool operator==(const Decomposition& other) const {
    return ambient_ == other.ambient_ && terms_ == other.terms_;
  }

 private:
  std::vector<int> ambient_;
  Terms terms_;
};

Decomposition operator+(Decomposition a, const Decomposition& b);

/// "4*[3] + 2*[2,1]"; the zero module prints as "0".
std::string to_string(const Decomposition& d);

}  // namespace symrep

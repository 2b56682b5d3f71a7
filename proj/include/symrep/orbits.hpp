#pragma once

#include <string>
#include <vector>

#include "symrep/decomposition.hpp"
#include "symrep/natural.hpp"
#include "symrep/partition.hpp"

namespace symrep {

/// One orbit of connected components of a zero-dimensional symmetric set,
/// recorded by the Young-subgroup type of its stabilizer.
struct Orbit {
  std::string label;
  Partition stabilizer;

  bool operator==(const Orbit&) const = default;
};

/// A zero-dimensional S_k-symmetric set up to equivariant homotopy: a list
/// of labeled orbits. Labels are unique; stabilizers are partitions of k.
class OrbitSpec {
 public:
  explicit OrbitSpec(int k, std::vector<Orbit> orbits = {});

  int k() const noexcept { return k_; }
  const std::vector<Orbit>& orbits() const noexcept { return orbits_; }
  std::size_t size() const noexcept { return orbits_.size(); }

  /// nullptr when the label is absent.
  const Orbit* find(const std::string& label) const;

  bool operator==(const OrbitSpec&) const = default;

 private:
  int k_;
  std::vector<Orbit> orbits_;
};

/// H^0 as a sum of permutation modules, one per orbit.
Decomposition h0_decomposition(const OrbitSpec& spec);

/// Components of {sum x_i^2 (x_i - 1)^2 <= eps} in R^k: orbit i (i = 0..k)
/// holds the points with i zeros and k - i ones, stabilizer S_i x S_{k-i}.
OrbitSpec example_variety(int k);

/// The projective variant {x_i = ±1} in P^{k-1}; same H^0.
inline OrbitSpec projective_example_variety(int k) { return example_variety(k); }

/// 2 mu_1 - k + 1 for mu with at most two rows.
long long closed_form_multiplicity(const Partition& mu);

struct PowerIdentity {
  Natural lhs;  // k! * sum (mu1 - mu2 + 1)^2 / ((mu1 + 1)! mu2!)
  Natural rhs;  // 2^k
  bool holds = false;
};

/// Evaluates the sum in exact rational arithmetic and checks it equals 2^k.
PowerIdentity verify_power_identity(int k);

/// Top-degree cohomology of the hypersurface bounding the example set:
/// the sign twist of its H^0.
Decomposition top_cohomology(const Decomposition& h0);

/// Coefficientwise m(S1) + m(S2) <= m(S1 ∪ S2) + m(S1 ∩ S2).
/// Throws DomainError when the ambients differ.
bool mv_check(const Decomposition& s1, const Decomposition& s2, const Decomposition& s_union,
              const Decomposition& s_intersection);

/// Keys where the inequality above fails, canonical order.
std::vector<PartitionTuple> mv_violations(const Decomposition& s1, const Decomposition& s2,
                                          const Decomposition& s_union,
                                          const Decomposition& s_intersection);

/// Degree-zero union bound: m_0(S_1 ∪ ... ∪ S_n) <= sum_j m_0(S_j).
bool union_bound_check(const std::vector<OrbitSpec>& sets);

/// Label-set union and intersection; a label carried by both sides must
/// have the same stabilizer (DomainError otherwise).
OrbitSpec orbit_union(const OrbitSpec& a, const OrbitSpec& b);
OrbitSpec orbit_intersection(const OrbitSpec& a, const OrbitSpec& b);

}  // namespace symrep

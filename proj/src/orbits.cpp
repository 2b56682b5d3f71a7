#include "symrep/orbits.hpp"

#include <set>

#include "symrep/errors.hpp"
#include "symrep/induction.hpp"

namespace symrep {

OrbitSpec::OrbitSpec(int k, std::vector<Orbit> orbits) : k_(k), orbits_(std::move(orbits)) {
  if (k_ < 0) throw DomainError("orbit spec needs k >= 0");
  std::set<std::string> seen;
  for (const auto& o : orbits_) {
    if (o.stabilizer.weight() != k_) {
      throw DomainError("stabilizer of orbit '" + o.label + "' is not a partition of " +
                        std::to_string(k_));
    }
    if (!seen.insert(o.label).second) throw DomainError("duplicate orbit label '" + o.label + "'");
  }
}

const Orbit* OrbitSpec::find(const std::string& label) const {
  for (const auto& o : orbits_) {
    if (o.label == label) return &o;
  }
  return nullptr;
}

Decomposition h0_decomposition(const OrbitSpec& spec) {
  Decomposition out({spec.k()});
  for (const auto& o : spec.orbits()) out += young_module(o.stabilizer);
  return out;
}

OrbitSpec example_variety(int k) {
  if (k < 1) throw DomainError("example variety needs k >= 1");
  std::vector<Orbit> orbits;
  for (int i = 0; i <= k; ++i) {
    orbits.push_back({std::to_string(i), Partition::from_unsorted({i, k - i})});
  }
  return OrbitSpec(k, std::move(orbits));
}

long long closed_form_multiplicity(const Partition& mu) {
  if (mu.length() > 2) throw DomainError("closed form needs at most two rows");
  return 2LL * mu[0] - mu.weight() + 1;
}

PowerIdentity verify_power_identity(int k) {
  if (k < 1) throw DomainError("identity is stated for k >= 1");
  Rational sum = 0;
  for (int second = 0; 2 * second <= k; ++second) {
    const int first = k - second;
    const Natural gap = first - second + 1;
    sum += Rational(gap * gap, factorial(static_cast<unsigned>(first + 1)) *
                                   factorial(static_cast<unsigned>(second)));
  }
  const Rational lhs = sum * Rational(factorial(static_cast<unsigned>(k)));
  PowerIdentity result;
  result.rhs = power(Natural(2), static_cast<unsigned>(k));
  if (denominator(lhs) != 1) {
    result.lhs = numerator(lhs) / denominator(lhs);
    result.holds = false;
    return result;
  }
  result.lhs = numerator(lhs);
  result.holds = result.lhs == result.rhs;
  return result;
}

Decomposition top_cohomology(const Decomposition& h0) { return sign_twist(h0); }

std::vector<PartitionTuple> mv_violations(const Decomposition& s1, const Decomposition& s2,
                                          const Decomposition& s_union,
                                          const Decomposition& s_intersection) {
  const auto& amb = s1.ambient();
  if (s2.ambient() != amb || s_union.ambient() != amb || s_intersection.ambient() != amb) {
    throw DomainError("Mayer-Vietoris check needs modules over the same group");
  }
  std::set<PartitionTuple, CanonicalTupleOrder> keys;
  for (const auto* d : {&s1, &s2, &s_union, &s_intersection}) {
    for (const auto& [key, mult] : d->terms()) keys.insert(key);
  }
  std::vector<PartitionTuple> bad;
  for (const auto& key : keys) {
    if (s1.coefficient(key) + s2.coefficient(key) >
        s_union.coefficient(key) + s_intersection.coefficient(key)) {
      bad.push_back(key);
    }
  }
  return bad;
}

bool mv_check(const Decomposition& s1, const Decomposition& s2, const Decomposition& s_union,
              const Decomposition& s_intersection) {
  return mv_violations(s1, s2, s_union, s_intersection).empty();
}

bool union_bound_check(const std::vector<OrbitSpec>& sets) {
  if (sets.empty()) return true;
  OrbitSpec all = sets.front();
  Decomposition summed = h0_decomposition(sets.front());
  for (std::size_t i = 1; i < sets.size(); ++i) {
    all = orbit_union(all, sets[i]);
    summed += h0_decomposition(sets[i]);
  }
  const Decomposition joined = h0_decomposition(all);
  for (const auto& [key, mult] : joined.terms()) {
    if (mult > summed.coefficient(key)) return false;
  }
  return true;
}

namespace {

void require_same_k(const OrbitSpec& a, const OrbitSpec& b) {
  if (a.k() != b.k()) throw DomainError("orbit specs over different symmetric groups");
}

void require_agreement(const Orbit& x, const Orbit& y) {
  if (!(x.stabilizer == y.stabilizer)) {
    throw DomainError("orbit '" + x.label + "' has conflicting stabilizers " +
                      to_string(x.stabilizer) + " and " + to_string(y.stabilizer));
  }
}

}  // namespace

OrbitSpec orbit_union(const OrbitSpec& a, const OrbitSpec& b) {
  require_same_k(a, b);
  std::vector<Orbit> orbits = a.orbits();
  for (const auto& o : b.orbits()) {
    if (const Orbit* mine = a.find(o.label)) {
      require_agreement(*mine, o);
    } else {
      orbits.push_back(o);
    }
  }
  return OrbitSpec(a.k(), std::move(orbits));
}

OrbitSpec orbit_intersection(const OrbitSpec& a, const OrbitSpec& b) {
  require_same_k(a, b);
  std::vector<Orbit> orbits;
  for (const auto& o : a.orbits()) {
    if (const Orbit* theirs = b.find(o.label)) {
      require_agreement(o, *theirs);
      orbits.push_back(o);
    }
  }
  for (const auto& o : b.orbits()) {
    if (const Orbit* mine = a.find(o.label)) require_agreement(*mine, o);
  }
  return OrbitSpec(a.k(), std::move(orbits));
}

}  // namespace symrep

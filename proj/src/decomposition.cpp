#include "symrep/decomposition.hpp"

#include "symrep/errors.hpp"
#include "symrep/tableaux.hpp"

namespace symrep {

Decomposition::Decomposition(std::vector<int> ambient) : ambient_(std::move(ambient)) {
  for (int k : ambient_) {
    if (k < 0) throw DomainError("negative weight in ambient");
  }
}

Decomposition Decomposition::irreducible(const Partition& lambda, const Natural& mult) {
  return irreducible(PartitionTuple(lambda), mult);
}

Decomposition Decomposition::irreducible(const PartitionTuple& key, const Natural& mult) {
  Decomposition d(key.weights());
  d.add(key, mult);
  return d;
}

Natural Decomposition::coefficient(const PartitionTuple& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Natural(0) : it->second;
}

void Decomposition::add(const PartitionTuple& key, const Natural& mult) {
  if (key.weights() != ambient_) {
    throw DomainError("term " + to_string(key) + " does not match the ambient weights");
  }
  if (mult < 0) throw DomainError("negative multiplicity");
  if (mult == 0) return;
  terms_[key] += mult;
}

Decomposition& Decomposition::operator+=(const Decomposition& other) {
  if (other.ambient_ != ambient_) throw DomainError("adding modules over different groups");
  for (const auto& [key, mult] : other.terms_) terms_[key] += mult;
  return *this;
}

Decomposition Decomposition::scaled(const Natural& factor) const {
  Decomposition out(ambient_);
  if (factor == 0) return out;
  for (const auto& [key, mult] : terms_) out.terms_.emplace(key, mult * factor);
  return out;
}

Natural Decomposition::total_dim() const {
  Natural total = 0;
  for (const auto& [key, mult] : terms_) {
    Natural dim = mult;
    for (const auto& c : key.components()) dim *= specht_dim(c);
    total += dim;
  }
  return total;
}

Decomposition operator+(Decomposition a, const Decomposition& b) {
  a += b;
  return a;
}

std::string to_string(const Decomposition& d) {
  if (d.empty()) return "0";
  std::string s;
  for (const auto& [key, mult] : d.terms()) {
    if (!s.empty()) s += " + ";
    s += mult.str();
    s += '*';
    s += to_string(key);
  }
  return s;
}

}  // namespace symrep

#pragma once

#include <cstdint>
#include <vector>

#include "symrep/partition.hpp"

// Brute-force counters for cross-checking the library. They work on plain
// part vectors and share nothing with the tableaux code beyond the
// Partition container. Weights above oracle_weight_cap are refused.
namespace oracle {

constexpr int oracle_weight_cap = 10;

/// Standard Young tableaux of shape lambda, by placing k, k-1, ... into
/// removable corners in every possible order.
std::uint64_t count_syt(const symrep::Partition& lambda);

/// Semistandard tableaux of shape `shape` with content `content`, by filling
/// cells in reading order with every admissible value.
std::uint64_t count_ssyt(const symrep::Partition& shape, const symrep::Partition& content);

/// LR tableaux of shape nu/lambda and content mu: every distinct arrangement
/// of the content multiset over the skew cells, kept when semistandard and
/// the reverse reading word is a lattice word.
std::uint64_t lr(const symrep::Partition& nu, const symrep::Partition& lambda,
                 const symrep::Partition& mu);

/// Partitions of k by recursive generation, no ordering guarantee.
std::vector<std::vector<int>> partitions(int k);

}  // namespace oracle

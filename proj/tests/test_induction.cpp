#include <doctest.h>

#include <random>

#include "literal_forms.hpp"
#include "symrep/errors.hpp"
#include "symrep/induction.hpp"
#include "symrep/tableaux.hpp"

using namespace symrep;

namespace {

Decomposition irr(std::initializer_list<int> parts, const Natural& mult = 1) {
  return Decomposition::irreducible(Partition(std::vector<int>(parts)), mult);
}

Natural young_index(const Partition& lambda) {
  Natural denom = 1;
  for (int part : lambda.parts()) denom *= factorial(static_cast<unsigned>(part));
  return factorial(static_cast<unsigned>(lambda.weight())) / denom;
}

Decomposition random_decomposition(std::mt19937& rng, int k) {
  const auto list = enumerate_partitions(k);
  std::uniform_int_distribution<std::size_t> pick(0, list.size() - 1);
  std::uniform_int_distribution<int> mult(1, 5);
  Decomposition d({k});
  for (int i = 0; i < 3; ++i) d.add(list[pick(rng)], mult(rng));
  return d;
}

}  // namespace

TEST_CASE("decomposition basics") {
  Decomposition d({3});
  CHECK(d.empty());
  CHECK(to_string(d) == "0");
  d.add(Partition{2, 1}, 2);
  d.add(Partition{3}, 4);
  d.add(Partition{1, 1, 1}, 0);
  CHECK(d.size() == 2);
  CHECK(to_string(d) == "4*[3] + 2*[2,1]");
  CHECK(d.total_dim() == 8);
  CHECK(d.coefficient(Partition{1, 1, 1}) == 0);
  CHECK_THROWS_AS(d.add(Partition{2}, 1), DomainError);
  CHECK(d.scaled(3).coefficient(Partition{3}) == 12);
  CHECK((d + d) == d.scaled(2));
  CHECK_THROWS_AS(d += Decomposition({2}), DomainError);
}

TEST_CASE("young_module examples") {
  for (int k = 1; k <= 8; ++k) CHECK(young_module(Partition::row(k)) == irr({k}));
  CHECK(young_module(Partition{1, 1}) == irr({2}) + irr({1, 1}));
  CHECK(young_module(Partition{2, 1}) == irr({3}) + irr({2, 1}));
  CHECK(young_module(Partition{}) == Decomposition::irreducible(Partition{}));
}

TEST_CASE("young_module dimension is the Young subgroup index") {
  for (int k = 0; k <= 8; ++k) {
    for (const auto& lambda : enumerate_partitions(k)) {
      const Decomposition m = young_module(lambda);
      CHECK(m.total_dim() == young_index(lambda));
      for (const auto& [key, mult] : m.terms()) CHECK(dominates(key[0], lambda));
    }
  }
}

TEST_CASE("strips") {
  CHECK(horizontal_strips(Partition{1}, 1) == std::vector<Partition>{{2}, {1, 1}});
  CHECK(vertical_strips(Partition{2}, 2) == std::vector<Partition>{{3, 1}, {2, 1, 1}});
  CHECK(horizontal_strips(Partition{2, 1}, 0) == std::vector<Partition>{{2, 1}});
  for (int k = 0; k <= 6; ++k) {
    for (int n = 0; n <= 4; ++n) {
      for (const auto& lambda : enumerate_partitions(k)) {
        const auto h = horizontal_strips(lambda, n);
        const auto v = vertical_strips(lambda, n);
        std::size_t expected_h = 0, expected_v = 0;
        for (const auto& mu : enumerate_partitions(k + n)) {
          if (!contains(mu, lambda)) continue;
          const SkewShape s(mu, lambda);
          expected_h += s.is_horizontal_strip() ? 1 : 0;
          expected_v += s.is_vertical_strip() ? 1 : 0;
        }
        CHECK(h.size() == expected_h);
        CHECK(v.size() == expected_v);
        CHECK(std::is_sorted(h.begin(), h.end(), CanonicalOrder{}));
      }
    }
  }
}

TEST_CASE("pieri steps") {
  CHECK(pieri_row(irr({1}), 1) == irr({2}) + irr({1, 1}));
  CHECK(pieri_col(irr({1}), 1) == irr({2}) + irr({1, 1}));
  CHECK(pieri_col(irr({2}), 2) == irr({3, 1}) + irr({2, 1, 1}));
  // (k) with n: (k+n), (k+n-1,1), ..., down to (max(k,n), min(k,n)).
  for (int k = 1; k <= 5; ++k) {
    for (int n = 1; n <= 5; ++n) {
      Decomposition expected({k + n});
      for (int second = 0; second <= std::min(k, n); ++second) {
        expected.add(Partition::from_unsorted({k + n - second, second}), 1);
      }
      CHECK(pieri_row(irr({k}), n) == expected);
    }
  }
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 1 + trial % 5;
    const int n = trial % 4;
    const Decomposition d = random_decomposition(rng, k);
    CHECK(pieri_row(d, 0) == d);
    CHECK(pieri_col(d, n) == sign_twist(pieri_row(sign_twist(d), n)));
    CHECK(pieri_row(d, n).total_dim() ==
          d.total_dim() * binomial(static_cast<unsigned>(k + n), static_cast<unsigned>(n)));
    CHECK(pieri_col(d, n).total_dim() ==
          d.total_dim() * binomial(static_cast<unsigned>(k + n), static_cast<unsigned>(n)));
  }
}

TEST_CASE("outer_product") {
  CHECK(outer_product(irr({1}), irr({1})) == irr({2}) + irr({1, 1}));
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      CHECK(outer_product(irr({m}), irr({n})) == pieri_row(irr({m}), n));
    }
  }
  std::mt19937 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    const auto a = random_decomposition(rng, 1 + trial % 3);
    const auto b = random_decomposition(rng, 1 + (trial + 1) % 3);
    const auto c = random_decomposition(rng, 1 + (trial + 2) % 2);
    CHECK(outer_product(outer_product(a, b), c) == outer_product(a, outer_product(b, c)));
    CHECK(outer_product(a, b) == outer_product(b, a));
  }
}

TEST_CASE("split_module examples") {
  for (int k = 1; k <= 6; ++k) {
    for (const auto& lambda : enumerate_partitions(k)) {
      CHECK(split_module(lambda, Partition{}) == young_module(lambda));
    }
    CHECK(split_module(Partition{}, Partition::row(k)) == Decomposition::irreducible(Partition::column(k)));
  }
  CHECK(split_module(Partition{1}, Partition{1}) == irr({2}) + irr({1, 1}));
  CHECK(split_module(Partition{}, Partition{}) == Decomposition::irreducible(Partition{}));
}

TEST_CASE("split_module dimension and order independence") {
  for (int k = 0; k <= 7; ++k) {
    for (const auto& lambda : enumerate_partitions(k)) {
      for (const auto& [trivial, sign] : splits(lambda)) {
        const Decomposition m = split_module(trivial, sign);
        Natural denom = 1;
        for (int part : lambda.parts()) denom *= factorial(static_cast<unsigned>(part));
        CHECK(m.total_dim() == factorial(static_cast<unsigned>(k)) / denom);

        // Sign factors first, then trivial ones, in reverse part order.
        Decomposition other = Decomposition::irreducible(Partition{});
        for (auto it = sign.parts().rbegin(); it != sign.parts().rend(); ++it) {
          other = pieri_col(other, *it);
        }
        for (auto it = trivial.parts().rbegin(); it != trivial.parts().rend(); ++it) {
          other = pieri_row(other, *it);
        }
        CHECK(other == m);
        CHECK(outer_product(young_module(trivial), sign_twist(young_module(sign))) == m);
      }
    }
  }
}

TEST_CASE("split_multiplicity examples") {
  for (int k = 1; k <= 6; ++k) {
    for (const auto& lambda : enumerate_partitions(k)) {
      for (const auto& mu : enumerate_partitions(k)) {
        CHECK(split_multiplicity(mu, lambda, Partition{}) == kostka(mu, lambda));
      }
    }
  }
  // The module induced from the trivial subgroup of S_3 is the regular
  // representation, so S^(2,1) appears dim = 2 times.
  CHECK(split_multiplicity(Partition{2, 1}, Partition{1}, Partition{1, 1}) == 2);
  CHECK(split_module(Partition{1}, Partition{1, 1}).total_dim() == 6);
  CHECK_THROWS_AS(split_multiplicity(Partition{2}, Partition{1}, Partition{2}), DomainError);
}

TEST_CASE("trivial multiplicity is 1 exactly when every sign part is 1") {
  for (int k = 1; k <= 7; ++k) {
    for (const auto& lambda : enumerate_partitions(k)) {
      for (const auto& [trivial, sign] : splits(lambda)) {
        const bool all_ones = sign.empty() || sign[0] == 1;
        CHECK(split_multiplicity(Partition::row(k), trivial, sign) == (all_ones ? 1 : 0));
      }
    }
  }
  CHECK(split_multiplicity(Partition{2}, Partition{}, Partition{2}) == 0);
}

TEST_CASE("split_multiplicity equals the Pieri route") {
  for (int k = 0; k <= 6; ++k) {
    for (const auto& lambda : enumerate_partitions(k)) {
      for (const auto& [trivial, sign] : splits(lambda)) {
        const Decomposition m = split_module(trivial, sign);
        for (const auto& mu : enumerate_partitions(k)) {
          CHECK(split_multiplicity(mu, trivial, sign) == m.coefficient(mu));
        }
      }
    }
  }
}

TEST_CASE("printed multiplicity formula disagrees with the Pieri route") {
  const Partition mu{2, 1}, trivial{1}, sign{1, 1};
  CHECK(literal::split_multiplicity_as_printed(mu, trivial, sign) == 1);
  CHECK(split_module(trivial, sign).coefficient(mu) == 2);
}

TEST_CASE("support stays inside the hook of the split") {
  for (int k = 1; k <= 7; ++k) {
    for (const auto& lambda : enumerate_partitions(k)) {
      const int d = lambda.length();
      for (const auto& [trivial, sign] : splits(lambda)) {
        const Decomposition module = split_module(trivial, sign);
        for (const auto& [key, mult] : module.terms()) {
          const Partition& mu = key[0];
          const Partition mu_t = transpose(mu);
          CHECK(mu[static_cast<std::size_t>(trivial.length())] <= sign.length());
          CHECK(mu[static_cast<std::size_t>(d)] <= d);
          CHECK(mu_t[static_cast<std::size_t>(d)] <= d);
        }
      }
    }
  }
  // The >= reading fails: (2,2,2) occurs for lambda = (3,3) with d = 2.
  CHECK(split_module(Partition{}, Partition{3, 3}).coefficient(Partition{2, 2, 2}) == 1);
  CHECK_FALSE(literal::restriction_check_as_printed(Partition{2, 2, 2}, 2));
}

TEST_CASE("sign_twist") {
  for (int k = 1; k <= 6; ++k) CHECK(sign_twist(irr({k})) == Decomposition::irreducible(Partition::column(k)));
  CHECK(sign_twist(irr({2}, 3) + irr({1, 1})) == irr({1, 1}, 3) + irr({2}));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = random_decomposition(rng, 1 + trial % 6);
    CHECK(sign_twist(sign_twist(d)) == d);
    CHECK(sign_twist(d).total_dim() == d.total_dim());
  }
}

TEST_CASE("tuple_outer") {
  const Decomposition single = tuple_outer({irr({2}) + irr({1, 1})});
  CHECK(single == irr({2}) + irr({1, 1}));

  const Decomposition pair = tuple_outer({irr({2}), irr({1, 1})});
  CHECK(pair.ambient() == std::vector<int>{2, 2});
  CHECK(pair.size() == 1);
  CHECK(pair.coefficient(PartitionTuple({Partition{2}, Partition{1, 1}})) == 1);

  const Decomposition bilinear = tuple_outer({irr({2}) + irr({1, 1}), irr({1})});
  CHECK(bilinear.size() == 2);
  CHECK(bilinear.coefficient(PartitionTuple({Partition{2}, Partition{1}})) == 1);
  CHECK(bilinear.coefficient(PartitionTuple({Partition{1, 1}, Partition{1}})) == 1);
  CHECK(to_string(bilinear) == "1*[2];[1] + 1*[1,1];[1]");

  const Decomposition scaled = tuple_outer({irr({2}, 2), irr({1}, 3)});
  CHECK(scaled.coefficient(PartitionTuple({Partition{2}, Partition{1}})) == 6);
}

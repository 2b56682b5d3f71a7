#include <doctest.h>

#include <thread>

#include "oracles.hpp"
#include "symrep/errors.hpp"
#include "symrep/tableaux.hpp"

using namespace symrep;

TEST_CASE("oracle examples") {
  CHECK(oracle::count_syt(Partition{2, 2}) == 2);
  CHECK(oracle::count_ssyt(Partition{2, 1}, Partition{2, 1}) == 1);
  CHECK(oracle::lr(Partition{2, 2}, Partition{2}, Partition{2}) == 1);
  CHECK(oracle::lr(Partition{2, 2}, Partition{2, 1}, Partition{1}) == 1);
  CHECK(oracle::lr(Partition{2, 2}, Partition{2}, Partition{1, 1}) == 0);
  CHECK(oracle::lr(Partition{3, 1}, Partition{2}, Partition{1, 1}) == 1);
  CHECK(oracle::lr(Partition{2, 1, 1}, Partition{2}, Partition{2}) == 0);
  CHECK_THROWS(oracle::count_syt(Partition::row(11)));
}

TEST_CASE("hook lengths") {
  const auto h = hook_lengths(Partition{3, 1});
  REQUIRE(h.size() == 2);
  CHECK(h[0] == std::vector<int>{4, 2, 1});
  CHECK(h[1] == std::vector<int>{1});
  for (int k = 1; k <= 9; ++k) {
    for (const auto& lambda : enumerate_partitions(k)) {
      const Partition t = transpose(lambda);
      const auto hooks = hook_lengths(lambda);
      for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) {
          const int expected = (lambda[static_cast<std::size_t>(i)] - j - 1) +
                               (t[static_cast<std::size_t>(j)] - i - 1) + 1;
          CHECK(hooks[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == expected);
        }
      }
    }
  }
}

TEST_CASE("specht_dim examples") {
  for (int k = 1; k <= 12; ++k) {
    CHECK(specht_dim(Partition::row(k)) == 1);
    CHECK(specht_dim(Partition::column(k)) == 1);
  }
  CHECK(specht_dim(Partition{2, 1}) == 2);
  CHECK(specht_dim(Partition{2, 2}) == 2);
  CHECK(specht_dim(Partition{}) == 1);
  CHECK(specht_dim(Partition{5, 4, 3, 2, 1}) == Natural("292864"));
}

TEST_CASE("two_row_dim") {
  CHECK(two_row_dim(Partition{3, 1}) == 3);
  CHECK(two_row_dim(Partition{7}) == 1);
  CHECK(two_row_dim(Partition{2, 2}) == 2);
  CHECK_THROWS_AS(two_row_dim(Partition{1, 1, 1}), DomainError);
  for (int k = 0; k <= 30; ++k) {
    for (const auto& mu : enumerate_partitions(k, 2)) CHECK(two_row_dim(mu) == specht_dim(mu));
  }
}

TEST_CASE("specht_dim agrees with SYT counting and classical identities") {
  for (int k = 0; k <= 10; ++k) {
    Natural squares = 0;
    for (const auto& lambda : enumerate_partitions(k)) {
      const Natural d = specht_dim(lambda);
      CHECK(d == oracle::count_syt(lambda));
      squares += d * d;
    }
    CHECK(squares == factorial(static_cast<unsigned>(k)));
  }
  for (int k = 0; k <= 12; ++k) {
    for (const auto& lambda : enumerate_partitions(k)) {
      CHECK(specht_dim(lambda) == specht_dim(transpose(lambda)));
    }
  }
}

TEST_CASE("kostka examples") {
  for (int k = 1; k <= 8; ++k) {
    for (const auto& lambda : enumerate_partitions(k)) {
      CHECK(kostka(lambda, lambda) == 1);
      CHECK(kostka(Partition::row(k), lambda) == 1);
    }
  }
  CHECK(kostka(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(kostka(Partition{}, Partition{}) == 1);
  CHECK_THROWS_AS(kostka(Partition{2}, Partition{1}), DomainError);
}

TEST_CASE("kostka agrees with SSYT counting and vanishes off dominance") {
  for (int k = 0; k <= 8; ++k) {
    const auto list = enumerate_partitions(k);
    for (const auto& mu : list) {
      for (const auto& lambda : list) {
        const Natural value = kostka(mu, lambda);
        CHECK(value == oracle::count_ssyt(mu, lambda));
        if (!dominates(mu, lambda)) CHECK(value == 0);
      }
    }
  }
  // Number of SYT is K(lambda, 1^k).
  for (const auto& lambda : enumerate_partitions(9)) {
    CHECK(kostka(lambda, Partition::column(9)) == specht_dim(lambda));
  }
}

TEST_CASE("skew shapes and strips") {
  const SkewShape horizontal(Partition{3, 1}, Partition{2});
  CHECK(horizontal.size() == 2);
  CHECK(horizontal.is_horizontal_strip());
  CHECK(horizontal.is_vertical_strip());
  const SkewShape square(Partition{2, 2}, Partition{});
  CHECK_FALSE(square.is_horizontal_strip());
  CHECK_FALSE(square.is_vertical_strip());
  CHECK_THROWS_AS(SkewShape(Partition{2}, Partition{3}), DomainError);
}

TEST_CASE("lr_coefficient examples") {
  CHECK(lr_coefficient(Partition{2, 1}, Partition{1}, Partition{1, 1}) == 1);
  CHECK(lr_coefficient(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
  CHECK(lr_coefficient(Partition{2, 2}, Partition{3}, Partition{1}) == 0);
  CHECK_THROWS_AS(lr_coefficient(Partition{2, 1}, Partition{1}, Partition{1}), DomainError);
  for (int k = 0; k <= 7; ++k) {
    for (const auto& nu : enumerate_partitions(k)) {
      for (const auto& lambda : enumerate_partitions(k)) {
        CHECK(lr_coefficient(nu, lambda, Partition{}) == (nu == lambda ? 1 : 0));
      }
    }
  }
  // Pieri: c^nu_{lambda,(n)} is 1 exactly on horizontal strips.
  for (int k = 1; k <= 8; ++k) {
    for (int n = 1; n <= k; ++n) {
      for (const auto& nu : enumerate_partitions(k)) {
        for (const auto& lambda : enumerate_partitions(k - n)) {
          const bool strip =
              contains(nu, lambda) && SkewShape(nu, lambda).is_horizontal_strip();
          CHECK(lr_coefficient(nu, lambda, Partition::row(n)) == (strip ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("lr_coefficient agrees with LR-tableau brute force and is symmetric") {
  for (int total = 0; total <= 8; ++total) {
    for (int a = 0; a <= total; ++a) {
      for (const auto& lambda : enumerate_partitions(a)) {
        for (const auto& mu : enumerate_partitions(total - a)) {
          for (const auto& nu : enumerate_partitions(total)) {
            const Natural c = lr_coefficient(nu, lambda, mu);
            CHECK(c == oracle::lr(nu, lambda, mu));
            CHECK(c == lr_coefficient(nu, mu, lambda));
          }
        }
      }
    }
  }
}

TEST_CASE("induced dimension count") {
  for (int total = 0; total <= 8; ++total) {
    for (int a = 0; a <= total; ++a) {
      for (const auto& lambda : enumerate_partitions(a)) {
        for (const auto& mu : enumerate_partitions(total - a)) {
          Natural lhs = 0;
          for (const auto& nu : enumerate_partitions(total)) {
            lhs += lr_coefficient(nu, lambda, mu) * specht_dim(nu);
          }
          CHECK(lhs == specht_dim(lambda) * specht_dim(mu) *
                           binomial(static_cast<unsigned>(total), static_cast<unsigned>(a)));
        }
      }
    }
  }
}

TEST_CASE("memo caches are value-transparent under concurrency") {
  clear_tableaux_caches();
  const auto shapes = enumerate_partitions(8);
  std::vector<Natural> serial;
  for (const auto& mu : shapes) serial.push_back(kostka(mu, Partition{3, 2, 2, 1}) +
                                                 lr_coefficient(mu, Partition{2, 1}, Partition{3, 2}));
  clear_tableaux_caches();
  std::vector<std::vector<Natural>> parallel(4);
  {
    std::vector<std::jthread> threads;
    for (std::size_t t = 0; t < parallel.size(); ++t) {
      threads.emplace_back([&, t] {
        for (const auto& mu : shapes) {
          parallel[t].push_back(kostka(mu, Partition{3, 2, 2, 1}) +
                                lr_coefficient(mu, Partition{2, 1}, Partition{3, 2}));
        }
      });
    }
  }
  for (const auto& run : parallel) CHECK(run == serial);
  CHECK(tableaux_cache_stats().kostka_entries > 0);
}

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "postlat/error.hpp"
#include "postlat/truth_table.hpp"

using namespace postlat;

namespace {

TruthTable lit(const char* s) { return TruthTable::parse(s); }

// Builds a table point by point from a predicate on the coordinate vector.
TruthTable oracle(int n, const std::function<bool(const std::vector<int>&)>& f) {
  TruthTable t(n);
  for (std::uint32_t p = 0; p < t.size(); ++p) {
    std::vector<int> a(n);
    for (int i = 0; i < n; ++i) a[i] = (p >> i) & 1u;
    t.set_bit(p, f(a));
  }
  return t;
}

TruthTable random_table(std::mt19937_64& rng, int n) {
  TruthTable t(n);
  for (std::uint32_t p = 0; p < t.size(); ++p) t.set_bit(p, rng() & 1u);
  return t;
}

}  // namespace

TEST(Literal, RoundTripAndPadding) {
  EXPECT_EQ(lit("2:D").to_string(), "2:D");
  EXPECT_EQ(lit("0:1").to_string(), "0:1");
  EXPECT_EQ(lit("3:e8").to_string(), "3:E8");
  EXPECT_EQ(TruthTable::constant(3, false).to_string(), "3:00");
  EXPECT_EQ(TruthTable::constant(4, true).to_string(), "4:FFFF");
  EXPECT_EQ(TruthTable::constant(7, true).to_string(), "7:" + std::string(32, 'F'));
  EXPECT_THROW(lit("2:1F"), input_error);
  EXPECT_THROW(lit("17:0"), input_error);
  EXPECT_THROW(lit("2D"), input_error);
}

TEST(Evaluate, Examples) {
  EXPECT_FALSE(evaluate(lit("2:D"), {1, 0}));
  EXPECT_TRUE(evaluate(lit("2:D"), {0, 0}));
  EXPECT_FALSE(evaluate(lit("4:FDD7"), {1, 1, 0, 0}));
  EXPECT_THROW(evaluate(lit("2:D"), {1}), input_error);
}

TEST(Evaluate, BitIndexConvention) {
  const TruthTable x2 = TruthTable::projection(3, 2);
  EXPECT_EQ(x2, oracle(3, [](const auto& a) { return a[1] == 1; }));
  EXPECT_EQ(x2.to_string(), "3:CC");
}

TEST(ApplyMinor, Examples) {
  EXPECT_EQ(apply_minor(lit("2:D"), {2, 1, {1, 1}}), lit("1:3"));
  EXPECT_EQ(apply_minor(lit("2:6"), {2, 1, {1, 1}}), lit("1:0"));
  const TruthTable maj = lit("3:E8");
  EXPECT_EQ(apply_minor(maj, {3, 1, {1, 1, 1}}), TruthTable::projection(1, 1));
  EXPECT_THROW(apply_minor(maj, {2, 1, {1, 1}}), input_error);
}

TEST(ApplyMinor, MatchesPointwiseDefinition) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4), m = 1 + static_cast<int>(rng() % 4);
    const TruthTable f = random_table(rng, n);
    MinorMap sigma{n, m, std::vector<int>(n)};
    for (int& v : sigma.map) v = 1 + static_cast<int>(rng() % m);
    const TruthTable expected = oracle(m, [&](const auto& a) {
      BitTuple b(n);
      for (int i = 0; i < n; ++i) b[i] = static_cast<std::uint8_t>(a[sigma.map[i] - 1]);
      return evaluate(f, b);
    });
    EXPECT_EQ(apply_minor(f, sigma), expected);
  }
}

TEST(ApplyMinor, RespectsCompositionOfMaps) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4), m = 1 + static_cast<int>(rng() % 4),
              l = 1 + static_cast<int>(rng() % 4);
    const TruthTable f = random_table(rng, n);
    MinorMap sigma{n, m, std::vector<int>(n)}, tau{m, l, std::vector<int>(m)};
    for (int& v : sigma.map) v = 1 + static_cast<int>(rng() % m);
    for (int& v : tau.map) v = 1 + static_cast<int>(rng() % l);
    MinorMap both{n, l, std::vector<int>(n)};
    for (int i = 0; i < n; ++i) both.map[i] = tau.map[sigma.map[i] - 1];
    EXPECT_EQ(apply_minor(apply_minor(f, sigma), tau), apply_minor(f, both));
  }
}

TEST(Minors, Examples) {
  const auto m6 = minors(lit("2:6"), 2);
  EXPECT_NE(std::find(m6.begin(), m6.end(), lit("1:0")), m6.end());
  EXPECT_NE(std::find(m6.begin(), m6.end(), lit("2:6")), m6.end());
  EXPECT_EQ(minors(lit("2:D"), 1), std::vector<TruthTable>{lit("1:3")});
  const auto c = minors(TruthTable::constant(2, true), 3);
  EXPECT_EQ(c, (std::vector<TruthTable>{lit("1:3"), lit("2:F"), lit("3:FF")}));
}

TEST(Minors, AgreeWithBruteForceMaps) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const TruthTable f = random_table(rng, n);
    for (int bound = 1; bound <= 3; ++bound) {
      std::set<TruthTable> expected;
      for (int m = 1; m <= bound; ++m) {
        std::vector<int> map(n, 1);
        while (true) {
          expected.insert(permutation_min(apply_minor(f, {n, m, map})));
          int i = 0;
          while (i < n && map[i] == m) map[i++] = 1;
          if (i == n) break;
          ++map[i];
        }
      }
      const auto got = minors(f, bound);
      EXPECT_EQ(std::set<TruthTable>(got.begin(), got.end()), expected) << f.to_string() << " bound " << bound;
    }
  }
}

TEST(Canonicalize, Examples) {
  EXPECT_EQ(canonicalize(lit("2:A")), lit("1:2"));
  EXPECT_EQ(canonicalize(lit("2:D")), canonicalize(swap_variables(lit("2:D"), 1, 2)));
  EXPECT_EQ(canonicalize(lit("4:FDD7")).arity(), 4);
  EXPECT_EQ(canonicalize(TruthTable::constant(3, true)), lit("0:1"));
}

TEST(Canonicalize, InvariantUnderPermutationAndIdempotent) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const TruthTable f = random_table(rng, n);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::shuffle(perm.begin(), perm.end(), rng);
    const TruthTable g = apply_minor(f, {n, n, perm});
    EXPECT_EQ(canonicalize(g), canonicalize(f));
    EXPECT_EQ(canonicalize(canonicalize(f)), canonicalize(f));
    EXPECT_EQ(canonicalize(add_dummies(f, n + 1)), canonicalize(f));
  }
}

TEST(Compose, Examples) {
  EXPECT_EQ(compose(lit("2:6"), {lit("2:6"), lit("2:6")}), lit("2:0"));
  // (x→y)→x evaluated pointwise is x itself.
  const TruthTable expected = oracle(2, [](const auto& a) {
    const bool imp = !a[0] || a[1];
    return !imp || a[0];
  });
  EXPECT_EQ(compose(lit("2:D"), {lit("2:D"), lit("2:A")}), expected);
  EXPECT_EQ(expected, lit("2:A"));
  EXPECT_THROW(compose(lit("2:D"), {lit("2:D")}), input_error);
  EXPECT_THROW(compose(lit("2:D"), {lit("2:D"), lit("1:2")}), input_error);
}

TEST(Compose, MatchesPointwiseDefinition) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4), k = 1 + static_cast<int>(rng() % 4);
    const TruthTable f = random_table(rng, n);
    std::vector<TruthTable> gs;
    for (int i = 0; i < n; ++i) gs.push_back(random_table(rng, k));
    const TruthTable expected = oracle(k, [&](const auto& a) {
      BitTuple b(k), inner(n);
      for (int i = 0; i < k; ++i) b[i] = static_cast<std::uint8_t>(a[i]);
      for (int i = 0; i < n; ++i) inner[i] = evaluate(gs[i], b);
      return evaluate(f, inner);
    });
    EXPECT_EQ(compose(f, gs), expected);
  }
}

TEST(ZeroSet, Examples) {
  EXPECT_EQ(zero_set(lit("2:D")), (std::vector<BitTuple>{{1, 0}}));
  const auto z = zero_set(lit("4:FDD7"));
  EXPECT_EQ(std::set<BitTuple>(z.begin(), z.end()), (std::set<BitTuple>{{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}}));
  EXPECT_TRUE(zero_set(TruthTable::constant(3, true)).empty());
}

TEST(Dual, Examples) {
  EXPECT_EQ(dual(lit("2:8")), lit("2:E"));
  EXPECT_EQ(dual(dual(lit("4:FDD7"))), lit("4:FDD7"));
  EXPECT_EQ(dual(lit("3:E8")), lit("3:E8"));
}

TEST(Dual, MatchesDefinition) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng() % 8);
    const TruthTable f = random_table(rng, n);
    const TruthTable expected = oracle(n, [&](const auto& a) {
      BitTuple b(n);
      for (int i = 0; i < n; ++i) b[i] = static_cast<std::uint8_t>(1 - a[i]);
      return !evaluate(f, b);
    });
    EXPECT_EQ(dual(f), expected);
  }
}

TEST(Anf, Examples) {
  EXPECT_EQ(anf(lit("2:6")), (std::vector<std::uint32_t>{0b01, 0b10}));
  EXPECT_EQ(anf(lit("2:D")), (std::vector<std::uint32_t>{0b00, 0b01, 0b11}));
  const auto tmin = anf(two_thirds_minority());
  EXPECT_EQ(std::set<std::uint32_t>(tmin.begin(), tmin.end()),
            (std::set<std::uint32_t>{0b001, 0b100, 0b011, 0b110, 0b101}));
  EXPECT_EQ(anf_to_string(anf(lit("2:0"))), "0");
}

TEST(Anf, RoundTripExhaustiveUpToArity4) {
  for (int n = 0; n <= 4; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (1u << n);
    for (std::uint64_t w = 0; w < count; ++w) {
      const TruthTable f = TruthTable::from_word(n, w);
      const auto monomials = anf(f);
      // Evaluate the polynomial directly: a monomial is 1 at a iff its variables are all 1.
      const TruthTable rebuilt = oracle(n, [&](const auto& a) {
        std::uint32_t p = 0;
        for (int i = 0; i < n; ++i) p |= static_cast<std::uint32_t>(a[i]) << i;
        bool v = false;
        for (std::uint32_t m : monomials) v ^= (m & p) == m;
        return v;
      });
      ASSERT_EQ(rebuilt, f);
      ASSERT_EQ(from_anf(n, monomials), f);
    }
  }
}

TEST(Builders, Examples) {
  EXPECT_EQ(w_k(2), lit("4:FDD7"));
  for (int k = 2; k <= 4; ++k) {
    const TruthTable expected = oracle(k + 2, [](const auto& a) {
      const int ones = static_cast<int>(std::count(a.begin(), a.end(), 1));
      return !(ones == 2 && a[0] == 1);
    });
    EXPECT_EQ(w_k(k), expected);
    const TruthTable v = oracle(k + 2, [&](const auto& a) {
      BitTuple b(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) b[i] = static_cast<std::uint8_t>(1 - a[i]);
      return evaluate(w_k(k), b);
    });
    EXPECT_EQ(v_j(k), v);
  }
  const auto z = zero_set(at_most_one_one(3));
  EXPECT_EQ(std::set<BitTuple>(z.begin(), z.end()),
            (std::set<BitTuple>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(minority(), lit("3:96"));
  EXPECT_EQ(majority(), lit("3:E8"));
  EXPECT_THROW(w_k(1), input_error);
  EXPECT_THROW(v_j(1), input_error);
  EXPECT_THROW(at_most_one_one(1), input_error);
}

TEST(Essential, Variables) {
  EXPECT_EQ(essential_variables(lit("2:A")), std::vector<int>{1});
  EXPECT_TRUE(is_essential(lit("2:C"), 2));
  EXPECT_FALSE(is_essential(lit("2:C"), 1));
  EXPECT_EQ(reduce(lit("3:F0")), TruthTable::projection(1, 1));
}

TEST(Words, LargeArity) {
  const TruthTable x9 = TruthTable::projection(9, 9);
  EXPECT_EQ(x9.count_ones(), 256u);
  EXPECT_EQ(reduce(x9), TruthTable::projection(1, 1));
  EXPECT_EQ(dual(x9), x9);
  EXPECT_EQ(TruthTable::parse(x9.to_string()), x9);
}

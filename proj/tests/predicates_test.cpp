#include <gtest/gtest.h>

#include <algorithm>
#include <bit>

#include "postlat/error.hpp"
#include "postlat/predicates.hpp"

using namespace postlat;

namespace {

TruthTable lit(const char* s) { return TruthTable::parse(s); }

template <typename Visit>
void for_all_tables(int max_arity, Visit&& visit) {
  for (int n = 0; n <= max_arity; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (1u << n);
    for (std::uint64_t w = 0; w < count; ++w) visit(TruthTable::from_word(n, w));
  }
}

// Brute force: does some nonempty subset of at most k zero rows OR to all ones?
bool covered(const std::vector<std::uint32_t>& rows, int n, int k) {
  const std::uint32_t full = (1u << n) - 1;
  const std::size_t m = rows.size();
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    if (std::popcount(mask) > k) continue;
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1u) acc |= rows[i];
    }
    if (acc == full) return true;
  }
  return false;
}

std::vector<std::uint32_t> zeros_of(const TruthTable& f) {
  std::vector<std::uint32_t> z;
  for (std::uint32_t p = 0; p < f.size(); ++p) {
    if (!f.bit(p)) z.push_back(p);
  }
  return z;
}

std::vector<std::uint32_t> complement_rows(std::vector<std::uint32_t> rows, int n) {
  for (auto& r : rows) r ^= (1u << n) - 1;
  return rows;
}

}  // namespace

TEST(ClassNames, ParseAndPrint) {
  EXPECT_EQ(parse_class_id("W^3"), (ClassId{Family::W, 3}));
  EXPECT_EQ(parse_class_id("W^{3}"), (ClassId{Family::W, 3}));
  EXPECT_EQ(parse_class_id("B^∞"), (ClassId{Family::B, kInfinity}));
  EXPECT_EQ(parse_class_id("B^inf"), (ClassId{Family::B, kInfinity}));
  EXPECT_EQ(parse_class_id("Omega_="), parse_class_id("Ω_="));
  EXPECT_EQ(parse_class_id("Lambda"), parse_class_id("Λ"));
  EXPECT_EQ(to_string(ClassId{Family::D, 4}), "D^4");
  EXPECT_EQ(to_string(ClassId{Family::U, kInfinity}), "U^∞");
  EXPECT_THROW(parse_class_id("W^1"), input_error);
  EXPECT_THROW(parse_class_id("Q"), input_error);
  EXPECT_THROW(predicate(lit("2:D"), "nope"), input_error);
}

TEST(Predicate, Examples) {
  EXPECT_TRUE(predicate(lit("4:FDD7"), "W^2"));
  EXPECT_FALSE(predicate(lit("4:FDD7"), "W^3"));
  EXPECT_TRUE(predicate(lit("3:F7"), "B^∞"));
  EXPECT_FALSE(predicate(lit("3:F2"), "B^∞"));
  EXPECT_TRUE(predicate(lit("2:D"), "Ω_11"));
  EXPECT_TRUE(predicate(lit("2:6"), "L"));
  EXPECT_FALSE(predicate(lit("2:8"), "L"));
  EXPECT_TRUE(predicate(lit("2:8"), "Λ"));
  EXPECT_TRUE(predicate(lit("2:E"), "V"));
  EXPECT_TRUE(predicate(lit("3:E8"), "S"));
  EXPECT_TRUE(predicate(lit("3:E8"), "M"));
  EXPECT_TRUE(predicate(lit("1:1"), "antimonotone"));
  EXPECT_TRUE(predicate(lit("2:6"), "R"));
  EXPECT_TRUE(predicate(lit("2:C"), "Ω^(1)"));
}

TEST(Predicate, WAndBAgreeWithBruteForce) {
  for_all_tables(4, [](const TruthTable& f) {
    const int n = f.arity();
    const auto z = zeros_of(f);
    for (int k = 2; k <= 5; ++k) {
      const bool w = !covered(z, n, k);
      const bool b = w && !covered(complement_rows(z, n), n, k);
      ASSERT_EQ(predicate(f, ClassId{Family::W, k}), w) << f.to_string() << " k=" << k;
      ASSERT_EQ(predicate(f, ClassId{Family::B, k}), b) << f.to_string() << " k=" << k;
      ASSERT_EQ(holds(f.word(), n, ClassId{Family::W, k}), w);
    }
    const bool winf = !covered(z, n, 64);
    ASSERT_EQ(predicate(f, "W^∞"), winf);
    ASSERT_EQ(predicate(f, "B^∞"), winf && !covered(complement_rows(z, n), n, 64));
  });
}

TEST(Predicate, WInfinityIsTheLimitOfTheChain) {
  for_all_tables(4, [](const TruthTable& f) {
    const int zs = static_cast<int>(zeros_of(f).size());
    bool all = true;
    for (int k = 2; k <= std::max(2, zs); ++k) all = all && predicate(f, ClassId{Family::W, k});
    ASSERT_EQ(predicate(f, "W^∞"), all) << f.to_string();
    for (int k = 2; k < 6; ++k) {
      if (predicate(f, ClassId{Family::W, k + 1})) ASSERT_TRUE(predicate(f, ClassId{Family::W, k}));
    }
  });
}

TEST(Predicate, DualFamilies) {
  for_all_tables(4, [](const TruthTable& f) {
    for (int k : {2, 3, kInfinity}) {
      ASSERT_EQ(predicate(f, ClassId{Family::U, k}), predicate(dual(f), ClassId{Family::W, k}));
      ASSERT_EQ(predicate(f, ClassId{Family::D, k}), predicate(dual(f), ClassId{Family::B, k}));
    }
  });
}

TEST(Predicate, BInsideWAndOmega11) {
  for_all_tables(4, [](const TruthTable& f) {
    if (zeros_of(f).empty()) return;
    for (int k : {2, 3, kInfinity}) {
      if (predicate(f, ClassId{Family::B, k})) {
        ASSERT_TRUE(predicate(f, ClassId{Family::W, k}));
        ASSERT_TRUE(predicate(f, "Ω_11"));
      }
    }
  });
}

TEST(Predicate, StructuralFamiliesAgreeWithDefinitions) {
  for_all_tables(3, [](const TruthTable& f) {
    const int n = f.arity();
    const std::uint32_t top = f.size() - 1;
    bool mono = true, anti = true, refl = true, self = true;
    for (std::uint32_t a = 0; a < f.size(); ++a) {
      for (std::uint32_t b = 0; b < f.size(); ++b) {
        if ((a & b) == a && f.bit(a) > f.bit(b)) mono = false;
        if ((a & b) == a && f.bit(a) < f.bit(b)) anti = false;
      }
      if (f.bit(a) != f.bit(a ^ top)) refl = false;
      if (f.bit(a) == f.bit(a ^ top)) self = false;
    }
    ASSERT_EQ(predicate(f, "M"), mono);
    ASSERT_EQ(predicate(f, "antimonotone"), anti);
    ASSERT_EQ(predicate(f, "R"), refl);
    ASSERT_EQ(predicate(f, "S"), self);
    bool linear = false;
    for (std::uint32_t mask = 0; mask < (1u << n) && !linear; ++mask) {
      for (int c = 0; c < 2 && !linear; ++c) {
        bool same = true;
        for (std::uint32_t a = 0; a < f.size(); ++a) same = same && f.bit(a) == ((std::popcount(a & mask) + c) % 2 == 1);
        linear = same;
      }
    }
    ASSERT_EQ(predicate(f, "L"), linear);
    const bool f0 = f.bit(0), f1 = f.bit(top);
    ASSERT_EQ(predicate(f, "Ω_00"), !f0 && !f1);
    ASSERT_EQ(predicate(f, "Ω_=") , f0 == f1);
    ASSERT_EQ(predicate(f, "Ω_0*"), !f0);
    ASSERT_EQ(predicate(f, "Ω_*1"), f1);
  });
}

TEST(Predicate, GeneratorsOfW) {
  for (int k = 2; k <= 4; ++k) {
    const TruthTable w = w_k(k);
    EXPECT_TRUE(predicate(w, ClassId{Family::W, k}));
    EXPECT_FALSE(predicate(w, ClassId{Family::W, k + 1}));
    EXPECT_FALSE(predicate(w, "M"));
    EXPECT_FALSE(predicate(w, "Ω_01"));
    EXPECT_TRUE(predicate(w, ClassId{Family::B, k}));
  }
}

TEST(Depth, Values) {
  EXPECT_EQ(w_depth(lit("2:D")), kInfinity);
  EXPECT_EQ(w_depth(w_k(3)), 3);
  EXPECT_EQ(w_depth(lit("2:6")), 1);
  EXPECT_EQ(u_depth(lit("2:D")), 1);
  EXPECT_EQ(u_depth(dual(w_k(2))), 2);
  EXPECT_EQ(min_cover({1, 2, 4}, 3), 3);
  EXPECT_EQ(min_cover({3, 4}, 3), 2);
  EXPECT_EQ(min_cover({1, 2}, 3), kInfinity);
}

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "postlat/error.hpp"
#include "postlat/function_class.hpp"
#include "postlat/predicates.hpp"

using namespace postlat;

namespace {

TruthTable lit(const char* s) { return TruthTable::parse(s); }

// Every table at each arity whose canonical form is one of the generators' forms.
std::set<std::pair<int, Table>> orbit_oracle(const std::vector<TruthTable>& gens, int n) {
  std::set<TruthTable> forms;
  for (const auto& g : gens) forms.insert(canonicalize(g));
  std::set<std::pair<int, Table>> out;
  for (int a = 0; a <= n; ++a) {
    const std::uint64_t count = std::uint64_t{1} << (1u << a);
    for (std::uint64_t w = 0; w < count; ++w) {
      if (forms.count(canonicalize(TruthTable::from_word(a, w)))) out.insert({a, w});
    }
  }
  return out;
}

std::set<std::pair<int, Table>> members(const FunctionClass& k) {
  std::set<std::pair<int, Table>> out;
  for (int a = 0; a <= k.max_arity(); ++a) {
    for (Table t : k.level(a)) out.insert({a, t});
  }
  return out;
}

}  // namespace

TEST(FunctionClass, FromFunctionsIsTheEquivalenceClosure) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<TruthTable> gens;
    for (int i = 0; i < 3; ++i) {
      const int a = static_cast<int>(rng() % 4);
      gens.push_back(TruthTable::from_word(a, rng() & bits::full(a)));
    }
    const FunctionClass k = FunctionClass::from_functions(3, gens);
    EXPECT_EQ(members(k), orbit_oracle(gens, 3));
  }
}

TEST(FunctionClass, Membership) {
  const FunctionClass k = FunctionClass::from_functions(3, {lit("2:D")});
  EXPECT_TRUE(k.contains(lit("2:B")));
  EXPECT_TRUE(k.contains(lit("3:DD")));
  EXPECT_TRUE(k.contains(lit("3:F5")));
  const TruthTable wide = add_dummies(lit("2:D"), 9);
  EXPECT_TRUE(k.contains(wide));
  EXPECT_FALSE(k.contains(lit("2:E")));
  EXPECT_THROW(FunctionClass::from_functions(2, {lit("3:E8")}), input_error);
}

TEST(FunctionClass, SetOperations) {
  const FunctionClass a = FunctionClass::from_filter(3, [](Table t, int n) { return holds(t, n, {Family::Omega11, 0}); });
  const FunctionClass b = FunctionClass::from_filter(3, [](Table t, int n) { return holds(t, n, {Family::Monotone, 0}); });
  const FunctionClass i = a.intersect(b), u = a.unite(b);
  EXPECT_TRUE(i.subset_of(a) && i.subset_of(b));
  EXPECT_TRUE(a.subset_of(u) && b.subset_of(u));
  EXPECT_EQ(i.size() + u.size(), a.size() + b.size());
  EXPECT_EQ(a.dual().dual(), a);
  EXPECT_EQ(a.dual(), FunctionClass::from_filter(3, [](Table t, int n) { return holds(t, n, {Family::Omega00, 0}); }));
  EXPECT_EQ(a.restrict_to(2).max_arity(), 2);
  EXPECT_EQ(all_functions(2).size(), 2u + 4u + 16u);
  EXPECT_EQ(projections(3).size(), 0u + 1u + 2u + 3u);
}

TEST(FunctionClass, CanonicalMembers) {
  const FunctionClass k = FunctionClass::from_functions(4, {lit("2:D"), lit("3:E8"), lit("0:1")});
  const auto c = k.canonical_members();
  EXPECT_EQ(c, (std::vector<TruthTable>{lit("0:1"), lit("2:B"), lit("3:E8")}));
}

TEST(FunctionClass, ClassFileRoundTrip) {
  const FunctionClass k = FunctionClass::from_functions(3, {lit("2:D"), lit("1:1")});
  const std::string text = write_class_file(k, {"note"});
  EXPECT_EQ(text, "max_arity 3\n# note\n1:1\n2:B\n");
  EXPECT_EQ(read_class_file(text), k);
  EXPECT_THROW(read_class_file("2:D\n"), input_error);
  EXPECT_THROW(read_class_file("max_arity 1\n2:D\n"), input_error);
}

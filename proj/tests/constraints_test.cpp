#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "postlat/catalog.hpp"
#include "postlat/closure.hpp"
#include "postlat/constraints.hpp"
#include "postlat/error.hpp"

using namespace postlat;

namespace {

TruthTable lit(const char* s) { return TruthTable::parse(s); }

Relation rel(int m, std::vector<BitTuple> tuples) { return Relation::from_bit_tuples(m, tuples); }

// Applies f row-wise to the matrix whose columns are `cols` (m rows).
Tuple apply_rows(const TruthTable& f, const std::vector<Tuple>& cols, int m) {
  Tuple out = 0;
  for (int r = 0; r < m; ++r) {
    std::uint32_t p = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) p |= static_cast<std::uint32_t>((cols[c] >> r) & 1u) << c;
    if (f.bit(p)) out |= Tuple{1} << r;
  }
  return out;
}

// Direct enumeration of every P-matrix.
bool satisfies_oracle(const TruthTable& f, const Relation& p, const Relation& q) {
  const int n = f.arity();
  if (p.tuples.empty() && n > 0) return true;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<Tuple> cols;
    for (std::size_t i : idx) cols.push_back(p.tuples[i]);
    if (!q.contains(apply_rows(f, cols, p.arity))) return false;
    int i = 0;
    while (i < n && idx[i] == p.tuples.size() - 1) idx[i++] = 0;
    if (i == n) return true;
    ++idx[i];
  }
}

Relation random_relation(std::mt19937_64& rng, int m) {
  std::vector<Tuple> ts;
  for (Tuple t = 0; t < (Tuple{1} << m); ++t) {
    if (rng() % 2) ts.push_back(t);
  }
  return Relation::from_tuples(m, ts);
}

Relation superset(std::mt19937_64& rng, const Relation& r) {
  std::vector<Tuple> ts = r.tuples;
  for (Tuple t = 0; t < (Tuple{1} << r.arity); ++t) {
    if (rng() % 3 == 0) ts.push_back(t);
  }
  return Relation::from_tuples(r.arity, ts);
}

}  // namespace

TEST(Relation, Builders) {
  EXPECT_EQ(Relation::nonzero(2).tuples, (std::vector<Tuple>{1, 2, 3}));
  EXPECT_EQ(Relation::nonone(2).tuples, (std::vector<Tuple>{0, 1, 2}));
  EXPECT_EQ(Relation::all(3).size(), 8u);
  EXPECT_EQ(rel(2, {{0, 1}}).tuples, std::vector<Tuple>{2});
  EXPECT_EQ(Relation::from_tuples(2, {3, 1, 3}).tuples, (std::vector<Tuple>{1, 3}));
  EXPECT_EQ(tuple_to_string(2, 3), "010");
}

TEST(Relation, FileRoundTrip) {
  const Relation r = rel(3, {{1, 0, 0}, {0, 1, 1}});
  const std::string text = write_relation_file(r);
  EXPECT_EQ(text, "arity 3\n100\n011\n");
  EXPECT_EQ(read_relation_file(text), r);
  EXPECT_EQ(read_relation_file("arity 2\n# comment\n\n10\n"), rel(2, {{1, 0}}));
  EXPECT_THROW(read_relation_file("arity 2\n011\n"), input_error);
  EXPECT_THROW(read_relation_file("10\n"), input_error);
  EXPECT_THROW(read_relation_file("arity 2\n1x\n"), input_error);
}

TEST(TupleMatrix, PMatrix) {
  const TupleMatrix m = TupleMatrix::from_columns(2, {2, 1});
  EXPECT_EQ(m.row_point(0), 2u);
  EXPECT_EQ(m.row_point(1), 1u);
  EXPECT_TRUE(m.is_p_matrix(Relation::nonzero(2)));
  EXPECT_FALSE(m.is_p_matrix(rel(2, {{0, 1}})));
}

TEST(Satisfies, Examples) {
  const Constraint eq(rel(2, {{0, 1}}), rel(2, {{0, 0}, {1, 1}}));
  EXPECT_TRUE(satisfies(lit("2:6"), eq));
  EXPECT_FALSE(satisfies(lit("1:1"), eq));
  EXPECT_TRUE(satisfies(lit("3:E8"), Constraint(Relation::from_tuples(2, {}), rel(2, {{1, 1}}))));
  EXPECT_TRUE(strongly_satisfies(lit("2:6"), eq));
  const Constraint b2(Relation::nonone(2), Relation::nonzero(2));
  EXPECT_TRUE(strongly_satisfies(lit("2:D"), b2));
  EXPECT_FALSE(strongly_satisfies(lit("2:E"), b2));
  EXPECT_THROW(Constraint(Relation::nonzero(2), Relation::nonzero(3)), input_error);
}

TEST(Satisfies, MatchesDirectEnumeration) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 3);
    const TruthTable f = TruthTable::from_word(n, rng() & bits::full(n));
    const Relation p = random_relation(rng, m), q = random_relation(rng, m);
    ASSERT_EQ(satisfies(f, Constraint(p, q)), satisfies_oracle(f, p, q)) << f.to_string();
    const auto v = find_violation(f, p, q);
    ASSERT_EQ(v.has_value(), !satisfies_oracle(f, p, q));
    if (v) {
      ASSERT_TRUE(v->is_p_matrix(p));
      std::vector<Tuple> cols;
      for (int c = 0; c < v->cols(); ++c) cols.push_back(v->column(c));
      ASSERT_FALSE(q.contains(apply_rows(f, cols, m)));
    }
  }
}

TEST(Satisfies, ZeroSetShortcutAgreesWithEnumeration) {
  for (int k = 1; k <= 3; ++k) {
    const Constraint c(Relation::nonzero(k), Relation::nonzero(k));
    for (int n = 0; n <= 3; ++n) {
      for (Table w = 0; w <= bits::full(n); ++w) {
        const TruthTable f = TruthTable::from_word(n, w);
        ASSERT_EQ(satisfies(f, c, {true, 0}), satisfies(f, c, {false, 0})) << f.to_string() << " k=" << k;
      }
    }
  }
}

TEST(Satisfies, AntitoneInPMonotoneInQ) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 2);
    const int n = 1 + static_cast<int>(rng() % 3);
    const TruthTable f = TruthTable::from_word(n, rng() & bits::full(n));
    const Relation p = random_relation(rng, m), q = random_relation(rng, m);
    const Relation p2 = superset(rng, p), q2 = superset(rng, q);
    if (satisfies(f, Constraint(p2, q))) ASSERT_TRUE(satisfies(f, Constraint(p, q)));
    if (satisfies(f, Constraint(p, q))) ASSERT_TRUE(satisfies(f, Constraint(p, q2)));
  }
}

TEST(Satisfies, ResourceLimit) {
  SatisfactionOptions small;
  small.max_matrices = 10;
  EXPECT_THROW(satisfies(lit("3:E8"), Constraint(Relation::all(3), Relation::all(3)), small), resource_error);
}

TEST(CanonicalConstraints, Examples) {
  const Constraint id = canonical_constraints(projections(3), 1);
  EXPECT_EQ(id.p, rel(2, {{0, 1}}));
  EXPECT_EQ(id.q, rel(2, {{0, 1}}));
  const Constraint eq = canonical_constraints(fragment("Ω_=", 3), 1);
  EXPECT_EQ(eq.q, rel(2, {{0, 0}, {1, 1}}));
}

TEST(CanonicalConstraints, MembersStronglySatisfyThem) {
  const FunctionClass b = fragment("B^2", 3);
  for (int k = 1; k <= 3; ++k) {
    const Constraint c = canonical_constraints(b, k);
    EXPECT_EQ(c.p.arity, 1 << k);
    for (int a = 0; a <= 3; ++a) {
      for (Table t : b.level(a)) ASSERT_TRUE(strongly_satisfies(TruthTable::from_word(a, t), c)) << a << ":" << t;
    }
  }
  // Non-members of the right arity violate (P_k, Q_k).
  const Constraint c2 = canonical_constraints(b, 2);
  for (Table t = 0; t < 16; ++t) {
    if (!b.contains(t, 2)) EXPECT_FALSE(satisfies(TruthTable::from_word(2, t), c2));
  }
}

TEST(StrongDefinitions, DefineTheNamedClasses) {
  const std::map<std::string, Constraint> defs{
      {"Ω_=", Constraint(rel(2, {{0, 1}}), rel(2, {{0, 0}, {1, 1}}))},
      {"Ω_00", Constraint(rel(2, {{0, 1}}), rel(2, {{0, 0}}))},
      {"Ω_11", Constraint(rel(2, {{0, 1}}), rel(2, {{1, 1}}))},
      {"R", Constraint(rel(2, {{0, 1}, {1, 0}}), rel(2, {{0, 0}, {1, 1}}))},
      {"B^2", Constraint(Relation::nonone(2), Relation::nonzero(2))},
      {"D^2", Constraint(Relation::nonzero(2), Relation::nonone(2))},
  };
  for (const auto& [name, c] : defs) {
    const FunctionClass k = FunctionClass::from_filter(3, [&](Table t, int a) {
      return strongly_satisfies(TruthTable::from_word(a, t), c);
    });
    EXPECT_EQ(k, fragment(name, 3)) << name;
    EXPECT_TRUE(is_minor_closed(k)) << name;
    EXPECT_TRUE(is_composition_closed(k)) << name;
  }
}

TEST(Gadgets, JAndF) {
  const TupleMatrix j = build_J(3);
  ASSERT_EQ(j.rows(), 3);
  ASSERT_EQ(j.cols(), 4);
  EXPECT_EQ(j.row_point(0), 3u);
  EXPECT_EQ(j.row_point(1), 6u);
  EXPECT_EQ(j.row_point(2), 5u);
  for (int n = 3; n <= 8; ++n) {
    const TupleMatrix jn = build_J(n);
    EXPECT_EQ(jn.rows(), n);
    EXPECT_EQ(jn.cols(), n + 1);
    EXPECT_EQ(jn.column(n), 0u);
    EXPECT_EQ(build_P(n).size(), static_cast<std::size_t>(n + 1));
    std::vector<std::uint32_t> rows;
    for (int r = 0; r < n; ++r) rows.push_back(jn.row_point(r));
    std::sort(rows.begin(), rows.end());
    EXPECT_EQ(zero_points(build_f(n)), rows) << n;
  }
  EXPECT_EQ(zero_points(build_f(3)), (std::vector<std::uint32_t>{3, 5, 6}));
}

TEST(Gadgets, FViolatesItsOwnConstraint) {
  for (int n = 3; n <= 5; ++n) {
    const auto v = find_violation(build_f(n), build_P(n), Relation::nonzero(n));
    ASSERT_TRUE(v.has_value()) << n;
    EXPECT_TRUE(v->is_p_matrix(build_P(n)));
  }
  EXPECT_TRUE(predicate(build_f(4), "W^∞"));
}

TEST(Gadgets, Claim) {
  EXPECT_FALSE(gadget_claim(3, 3));
  EXPECT_TRUE(gadget_claim(3, 5));
  EXPECT_TRUE(gadget_claim(5, 3));
  EXPECT_FALSE(gadget_claim(5, 5));
  const GadgetResult r = gadget_evaluate(3, 3);
  EXPECT_EQ(r.preserves_q, satisfies(build_f(3), Constraint(Relation::nonzero(3), Relation::nonzero(3))));
}

TEST(OuterWitness, MatchesFiberCondition) {
  std::mt19937_64 rng(71);
  for (HatOperation op : {HatOperation::Implication, HatOperation::Sum}) {
    for (int trial = 0; trial < 40; ++trial) {
      const int k = 1 + static_cast<int>(rng() % 3);
      const TruthTable h = TruthTable::from_word(k, rng() & bits::full(k));
      // Points a are identified when all op(a_i, a_j) agree.
      std::map<std::uint64_t, bool> fiber;
      bool consistent = true;
      for (std::uint32_t a = 0; a < h.size(); ++a) {
        std::uint64_t key = 0;
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) {
            const bool x = (a >> i) & 1u, y = (a >> j) & 1u;
            const bool v = op == HatOperation::Implication ? (!x || y) : (x != y);
            key = key << 1 | v;
          }
        }
        const auto [it, fresh] = fiber.emplace(key, h.bit(a));
        if (!fresh && it->second != h.bit(a)) consistent = false;
      }
      const auto w = outer_witness(h, op);
      ASSERT_EQ(w.has_value(), consistent) << h.to_string();
      if (w) {
        ASSERT_EQ(static_cast<int>(w->inner.size()), k * k);
        ASSERT_EQ(compose(w->outer, w->inner), h) << h.to_string();
      }
    }
  }
}

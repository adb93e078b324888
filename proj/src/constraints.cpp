#include "postlat/constraints.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <unordered_set>

#include "postlat/error.hpp"
#include "postlat/predicates.hpp"

namespace postlat {

namespace {

Tuple tuple_mask(int arity) { return arity >= 64 ? ~Tuple{0} : ((Tuple{1} << arity) - 1); }

void check_relation_arity(int arity) {
  if (arity < 0 || arity > kMaxRelationArity) {
    throw input_error("relation arity must lie in 0.." + std::to_string(kMaxRelationArity));
  }
}

std::uint64_t saturating_power(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

bool is_nonzero_family(const Relation& q) {
  if (q.arity > 20) return false;
  return q.size() + 1 == (std::size_t{1} << q.arity) && !q.contains(0);
}

// Searches m-tuples of zero rows of f whose columns all lie in P.
std::optional<TupleMatrix> zero_set_search(const TruthTable& f, const Relation& p) {
  const int m = p.arity, n = f.arity();
  const std::vector<std::uint32_t> zeros = zero_points(f);
  std::vector<std::unordered_set<Tuple>> prefixes(m + 1);
  for (Tuple t : p.tuples) {
    for (int d = 0; d <= m; ++d) prefixes[d].insert(t & tuple_mask(d));
  }
  std::vector<std::uint32_t> chosen;
  std::vector<Tuple> cols(n, 0);
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == m) return true;
    for (std::uint32_t z : zeros) {
      bool ok = true;
      for (int c = 0; c < n && ok; ++c) {
        const Tuple next = cols[c] | (static_cast<Tuple>((z >> c) & 1u) << depth);
        ok = prefixes[depth + 1].count(next) > 0;
      }
      if (!ok) continue;
      for (int c = 0; c < n; ++c) cols[c] |= static_cast<Tuple>((z >> c) & 1u) << depth;
      chosen.push_back(z);
      if (self(self, depth + 1)) return true;
      chosen.pop_back();
      for (int c = 0; c < n; ++c) cols[c] &= ~(Tuple{1} << depth);
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return TupleMatrix::from_columns(m, cols);
}

}  // namespace

Relation Relation::from_tuples(int arity, std::vector<Tuple> tuples) {
  check_relation_arity(arity);
  for (Tuple t : tuples) {
    if (t & ~tuple_mask(arity)) throw input_error("tuple longer than relation arity");
  }
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  return {arity, std::move(tuples)};
}

Relation Relation::from_bit_tuples(int arity, const std::vector<BitTuple>& tuples) {
  std::vector<Tuple> ts;
  for (const auto& bt : tuples) {
    if (static_cast<int>(bt.size()) != arity) throw input_error("tuple length differs from relation arity");
    Tuple t = 0;
    for (int i = 0; i < arity; ++i) t |= static_cast<Tuple>(bt[i] & 1u) << i;
    ts.push_back(t);
  }
  return from_tuples(arity, std::move(ts));
}

Relation Relation::all(int arity) {
  if (arity > 20) throw resource_error("full relation too large to materialize");
  std::vector<Tuple> ts;
  for (Tuple t = 0; t < (Tuple{1} << arity); ++t) ts.push_back(t);
  return from_tuples(arity, std::move(ts));
}

Relation Relation::nonzero(int arity) {
  Relation r = all(arity);
  r.tuples.erase(r.tuples.begin());
  return r;
}

Relation Relation::nonone(int arity) {
  Relation r = all(arity);
  r.tuples.pop_back();
  return r;
}

bool Relation::contains(Tuple t) const { return std::binary_search(tuples.begin(), tuples.end(), t); }

std::string tuple_to_string(Tuple t, int arity) {
  std::string s;
  for (int i = 0; i < arity; ++i) s += ((t >> i) & 1u) ? '1' : '0';
  return s;
}

TupleMatrix::TupleMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw input_error("matrix dimensions must be non-negative");
  entries_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

TupleMatrix TupleMatrix::from_columns(int rows, const std::vector<Tuple>& columns) {
  TupleMatrix m(rows, static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols_; ++c) {
    for (int r = 0; r < rows; ++r) m.set(r, c, (columns[c] >> r) & 1u);
  }
  return m;
}

Tuple TupleMatrix::column(int c) const {
  Tuple t = 0;
  for (int r = 0; r < rows_; ++r) t |= static_cast<Tuple>(at(r, c)) << r;
  return t;
}

std::uint32_t TupleMatrix::row_point(int r) const {
  std::uint32_t p = 0;
  for (int c = 0; c < cols_; ++c) p |= static_cast<std::uint32_t>(at(r, c)) << c;
  return p;
}

bool TupleMatrix::is_p_matrix(const Relation& p) const {
  if (p.arity != rows_) return false;
  for (int c = 0; c < cols_; ++c) {
    if (!p.contains(column(c))) return false;
  }
  return true;
}

std::string TupleMatrix::to_string() const {
  std::string s;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) s += at(r, c) ? '1' : '0';
    s += '\n';
  }
  return s;
}

Constraint::Constraint(Relation p_, Relation q_) : p(std::move(p_)), q(std::move(q_)) {
  if (p.arity != q.arity) throw input_error("constraint relations must have equal arity");
}

std::uint64_t default_matrix_cap() {
  if (const char* env = std::getenv("POSTLAT_MAX_MATRICES")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw input_error("POSTLAT_MAX_MATRICES must be a non-negative integer");
    }
  }
  return 100'000'000ull;
}

std::optional<TupleMatrix> find_violation(const TruthTable& f, const Relation& p, const Relation& q,
                                          const SatisfactionOptions& options) {
  if (p.arity != q.arity) throw input_error("constraint relations must have equal arity");
  const int m = p.arity, n = f.arity();
  const std::uint64_t cap = options.max_matrices ? options.max_matrices : default_matrix_cap();
  const std::uint64_t count = saturating_power(p.size(), n, cap);
  const bool shortcut = options.zero_set_shortcut && is_nonzero_family(q);
  if (shortcut) return zero_set_search(f, p);
  if (count > cap) {
    throw resource_error("constraint check needs " + std::to_string(p.size()) + "^" + std::to_string(n) +
                         " P-matrices, above the cap of " + std::to_string(cap));
  }
  if (p.tuples.empty() && n > 0) return std::nullopt;

  std::vector<std::uint32_t> rows(m, 0);
  std::vector<std::size_t> choice(n, 0);
  auto rec = [&](auto&& self, int col) -> bool {
    if (col == n) {
      Tuple out = 0;
      for (int r = 0; r < m; ++r) out |= static_cast<Tuple>(f.bit(rows[r])) << r;
      return !q.contains(out);
    }
    for (std::size_t i = 0; i < p.tuples.size(); ++i) {
      const Tuple t = p.tuples[i];
      for (int r = 0; r < m; ++r) rows[r] |= static_cast<std::uint32_t>((t >> r) & 1u) << col;
      choice[col] = i;
      const bool found = self(self, col + 1);
      for (int r = 0; r < m; ++r) rows[r] &= ~(std::uint32_t{1} << col);
      if (found) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  std::vector<Tuple> cols;
  for (int c = 0; c < n; ++c) cols.push_back(p.tuples[choice[c]]);
  return TupleMatrix::from_columns(m, cols);
}

bool satisfies(const TruthTable& f, const Constraint& c, const SatisfactionOptions& options) {
  return !find_violation(f, c.p, c.q, options).has_value();
}

bool strongly_satisfies(const TruthTable& f, const Constraint& c, const SatisfactionOptions& options) {
  return satisfies(f, c, options) && satisfies(f, Constraint(c.q, c.q), options);
}

Constraint canonical_constraints(const FunctionClass& k_class, int n) {
  if (n < 0 || n > k_class.max_arity()) throw input_error("canonical_constraints: n above the class bound");
  if (n > kWordArity) throw input_error("canonical_constraints: 2^n must not exceed 64");
  const int m = bits::points(n);
  std::vector<Tuple> p;
  for (int i = 0; i < n; ++i) p.push_back(bits::var(n, i));
  return Constraint(Relation::from_tuples(m, p), Relation::from_tuples(m, k_class.level(n)));
}

TupleMatrix build_J(int n) {
  if (n < 3) throw input_error("build_J requires n >= 3");
  TupleMatrix j(n, n + 1);
  for (int i = 0; i + 1 < n; ++i) {
    j.set(i, i, true);
    j.set(i, i + 1, true);
  }
  j.set(n - 1, 0, true);
  j.set(n - 1, n - 1, true);
  return j;
}

TruthTable build_f(int n) {
  if (n < 3 || n > 15) throw input_error("build_f requires 3 <= n <= 15");
  const TupleMatrix j = build_J(n);
  TruthTable f = TruthTable::constant(n + 1, true);
  for (int r = 0; r < n; ++r) f.set_bit(j.row_point(r), false);
  return f;
}

Relation build_P(int n) {
  if (n < 3 || n > 15) throw input_error("build_P requires 3 <= n <= 15");
  const TupleMatrix j = build_J(n);
  std::vector<Tuple> cols;
  for (int c = 0; c <= n; ++c) cols.push_back(j.column(c));
  return Relation::from_tuples(n, cols);
}

GadgetResult gadget_evaluate(int m, int n) {
  if (m < 3 || n < 3 || m % 2 == 0) throw input_error("gadget_claim requires odd m >= 3 and n >= 3");
  const std::uint64_t count = saturating_power(static_cast<std::uint64_t>(m) + 1, n + 1, default_matrix_cap());
  if (count > default_matrix_cap()) throw resource_error("gadget enumeration exceeds the matrix cap");
  GadgetResult r;
  const TruthTable f = build_f(n);
  r.preserves_q = predicate(f, ClassId{Family::W, m});
  r.satisfies_pq = !find_violation(f, build_P(m), Relation::nonzero(m)).has_value();
  r.matrices = count;
  return r;
}

bool gadget_claim(int m, int n) { return gadget_evaluate(m, n).holds(); }

std::optional<OuterWitness> outer_witness(const TruthTable& h, HatOperation op) {
  const int k = h.arity();
  if (k * k > kMaxArity) throw input_error("outer_witness: k^2 exceeds the arity limit");
  OuterWitness w{TruthTable(k * k), {}};
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      w.inner.push_back(TruthTable::from_points(k, [&](std::uint32_t a) {
        const bool x = (a >> (i - 1)) & 1u, y = (a >> (j - 1)) & 1u;
        return op == HatOperation::Implication ? (!x || y) : (x != y);
      }));
    }
  }
  if (k == 0) {
    w.outer = h;
    return w;
  }
  std::vector<std::int8_t> assigned(std::size_t{1} << (k * k), -1);
  for (std::uint32_t a = 0; a < h.size(); ++a) {
    std::uint32_t b = 0;
    for (std::size_t idx = 0; idx < w.inner.size(); ++idx) b |= static_cast<std::uint32_t>(w.inner[idx].bit(a)) << idx;
    const std::int8_t v = h.bit(a);
    if (assigned[b] >= 0 && assigned[b] != v) return std::nullopt;
    assigned[b] = v;
    w.outer.set_bit(b, v);
  }
  return w;
}

Relation read_relation_file(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int arity = -1, line_no = 0;
  std::vector<Tuple> tuples;
  while (std::getline(is, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.empty()) continue;
    if (arity < 0) {
      std::istringstream hs(line);
      std::string key;
      if (!(hs >> key >> arity) || key != "arity") {
        throw input_error("relation file line " + std::to_string(line_no) + ": expected 'arity m'");
      }
      check_relation_arity(arity);
      continue;
    }
    if (static_cast<int>(line.size()) != arity || line.find_first_not_of("01") != std::string::npos) {
      throw input_error("relation file line " + std::to_string(line_no) + ": expected a bit string of length " +
                        std::to_string(arity));
    }
    Tuple t = 0;
    for (int i = 0; i < arity; ++i) t |= static_cast<Tuple>(line[i] == '1') << i;
    tuples.push_back(t);
  }
  if (arity < 0) throw input_error("relation file: missing 'arity m' line");
  return Relation::from_tuples(arity, std::move(tuples));
}

std::string write_relation_file(const Relation& r) {
  std::string s = "arity " + std::to_string(r.arity) + "\n";
  for (Tuple t : r.tuples) s += tuple_to_string(t, r.arity) + "\n";
  return s;
}

}  // namespace postlat

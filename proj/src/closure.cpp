#include "postlat/closure.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "postlat/error.hpp"

namespace postlat {

namespace {

enum class Mode { Clone, Idempotent, Iterative };

// Equivalence closure of arbitrary per-arity tables.
FunctionClass normalized(int max_arity, const std::vector<std::vector<Table>>& levels) {
  std::set<std::pair<int, Table>> reps;
  for (int a = 0; a <= max_arity; ++a) {
    for (Table t : levels[a]) {
      int e = 0;
      const Table r = reduce_word(t, a, &e);
      reps.insert({e, bits::permutation_min(r, e)});
    }
  }
  std::vector<std::vector<Table>> out(max_arity + 1);
  for (const auto& [e, r] : reps) {
    for (int a = e; a <= max_arity; ++a) {
      for (Table u : equivalence_orbit(r, e, a)) out[a].push_back(u);
    }
  }
  return FunctionClass::from_levels(max_arity, std::move(out));
}

bool fits_bound(const std::vector<TruthTable>& generators, int max_arity) {
  return std::all_of(generators.begin(), generators.end(),
                     [&](const TruthTable& f) { return static_cast<int>(essential_variables(f).size()) <= max_arity; });
}

std::vector<Outer> generator_ops(const std::vector<TruthTable>& generators) {
  std::set<std::pair<int, Table>> reps;
  for (const auto& f : generators) {
    const TruthTable c = canonicalize(f);
    if (c.arity() == 0) {
      reps.insert({1, c.bit(0) ? Table{3} : Table{0}});
    } else {
      reps.insert({c.arity(), c.word()});
    }
  }
  std::vector<Outer> ops;
  for (const auto& [a, t] : reps) ops.push_back({a, t});
  return ops;
}

FunctionClass bounded_fixpoint(const std::vector<TruthTable>& generators, int max_arity, Mode mode) {
  FunctionClass k = equational_closure(generators, max_arity);
  const bool small = fits_bound(generators, max_arity);
  std::vector<Outer> ops = small ? generator_ops(generators) : outer_representatives(k);
  const FunctionClass proj = projections(max_arity);
  std::uint64_t budget = default_transition_budget();
  while (true) {
    std::vector<std::vector<Table>> levels(max_arity + 1);
    for (int a = 0; a <= max_arity; ++a) {
      std::vector<Table> seed = k.level(a);
      if (mode == Mode::Clone) seed.insert(seed.end(), proj.level(a).begin(), proj.level(a).end());
      const std::vector<Table> extra = mode == Mode::Iterative ? proj.level(a) : std::vector<Table>{};
      levels[a] = subalgebra(ops, std::move(seed), extra, a, &budget);
    }
    FunctionClass next = normalized(max_arity, levels);
    if (small || next == k) return next;
    k = std::move(next);
    ops = outer_representatives(k);
  }
}

// Zero-set cover tests over packed zero masks, used by the Z operators.
std::vector<std::uint8_t> downward_closure(const std::vector<Table>& members, int n) {
  const std::size_t size = std::size_t{1} << bits::points(n);
  std::vector<std::uint8_t> d(size, 0);
  for (Table t : members) d[bits::complement(t, n)] = 1;
  for (int b = 0; b < bits::points(n); ++b) {
    const std::size_t m = std::size_t{1} << b;
    for (std::size_t z = 0; z < size; ++z) {
      if ((z & m) && d[z]) d[z ^ m] = 1;
    }
  }
  return d;
}

std::vector<Table> z_dense(const std::vector<Table>& members, int n, int k) {
  const std::size_t size = std::size_t{1} << bits::points(n);
  std::vector<std::uint8_t> pass = downward_closure(members, n);
  pass[0] = 1;
  if (k != kInfinity) {
    for (std::size_t z = 1; z < size; ++z) {
      if (std::popcount(z) <= k) continue;
      bool ok = true;
      for (std::size_t rest = z; rest && ok; rest &= rest - 1) ok = pass[z & ~(rest & (~rest + 1))];
      pass[z] = ok;
    }
  }
  std::vector<Table> out;
  for (std::size_t z = 0; z < size; ++z) {
    if (pass[z]) out.push_back(bits::complement(static_cast<Table>(z), n));
  }
  return out;
}

std::vector<Table> z_sparse(const std::vector<Table>& members, int n, int k) {
  std::vector<Table> masks;
  for (Table t : members) masks.push_back(bits::complement(t, n));
  std::sort(masks.begin(), masks.end(), [](Table a, Table b) { return std::popcount(a) > std::popcount(b); });
  std::vector<Table> maximal;
  for (Table m : masks) {
    if (std::none_of(maximal.begin(), maximal.end(), [&](Table x) { return (m & ~x) == 0; })) maximal.push_back(m);
  }
  auto covered = [&](Table h) {
    return std::any_of(maximal.begin(), maximal.end(), [&](Table x) { return (h & ~x) == 0; });
  };
  std::uint64_t budget = default_transition_budget();
  std::vector<Table> out;
  const int points = bits::points(n);
  std::vector<int> chosen;
  auto ok = [&](int p) {
    const Table bit = Table{1} << p;
    if (k == kInfinity) {
      Table z = bit;
      for (int q : chosen) z |= Table{1} << q;
      return covered(z);
    }
    // Every subset of `chosen` with at most k-1 elements, extended by p.
    const int limit = std::min<int>(k - 1, static_cast<int>(chosen.size()));
    std::vector<int> idx;
    bool good = true;
    auto rec = [&](auto&& self, int start, Table acc) -> void {
      if (!good) return;
      if (budget-- == 0) throw resource_error("Z operator search exceeded its work budget");
      if (!covered(acc | bit)) {
        good = false;
        return;
      }
      if (static_cast<int>(idx.size()) == limit) return;
      for (int i = start; i < static_cast<int>(chosen.size()) && good; ++i) {
        idx.push_back(i);
        self(self, i + 1, acc | (Table{1} << chosen[i]));
        idx.pop_back();
      }
    };
    rec(rec, 0, 0);
    return good;
  };
  auto dfs = [&](auto&& self, int start, Table zeros) -> void {
    out.push_back(bits::complement(zeros, n));
    for (int p = start; p < points; ++p) {
      if (!ok(p)) continue;
      chosen.push_back(p);
      self(self, p + 1, zeros | (Table{1} << p));
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Outer> outer_representatives(const FunctionClass& k_class) {
  std::vector<Outer> out;
  bool has_const[2] = {false, false};
  for (int a = 0; a <= k_class.max_arity(); ++a) {
    for (Table t : k_class.level(a)) {
      if (t == 0) has_const[0] = true;
      if (t == bits::full(a)) has_const[1] = true;
    }
  }
  if (has_const[0]) out.push_back({1, 0});
  if (has_const[1]) out.push_back({1, 3});
  for (int a = 1; a <= k_class.max_arity(); ++a) {
    for (Table t : k_class.essential_representatives(a)) out.push_back({a, t});
  }
  return out;
}

FunctionClass equational_closure(const std::vector<TruthTable>& generators, int max_arity) {
  std::vector<TruthTable> all;
  for (const auto& f : generators) {
    for (auto& g : minors(f, max_arity)) all.push_back(std::move(g));
  }
  return FunctionClass::from_functions(max_arity, all);
}

FunctionClass compose_classes(const FunctionClass& a, const FunctionClass& b) {
  if (a.max_arity() != b.max_arity()) throw input_error("compose_classes: bounds differ");
  const int n = a.max_arity();
  const std::vector<Outer> outers = outer_representatives(a);
  std::uint64_t budget = default_transition_budget();
  std::vector<std::vector<Table>> levels(n + 1);
  for (int k = 0; k <= n; ++k) levels[k] = composition_image(outers, b.level(k), k, &budget);
  return normalized(n, levels);
}

FunctionClass clone_closure(const std::vector<TruthTable>& generators, int max_arity) {
  return bounded_fixpoint(generators, max_arity, Mode::Clone);
}

ClosureResult idempotent_closure(const std::vector<TruthTable>& generators, int max_arity) {
  ClosureResult r{bounded_fixpoint(generators, max_arity, Mode::Idempotent), true};
  const FunctionClass cross =
      compose_classes(clone_closure(generators, max_arity), equational_closure(generators, max_arity));
  if (!cross.subset_of(r.cls)) throw consistency_error("[S]∘S is not contained in the idempotent closure");
  r.exact = cross == r.cls;
  return r;
}

FunctionClass iterative_closure(const std::vector<TruthTable>& generators, int max_arity) {
  return bounded_fixpoint(generators, max_arity, Mode::Iterative);
}

ClosureResult closure(ClosureKind kind, const std::vector<TruthTable>& generators, int max_arity) {
  switch (kind) {
    case ClosureKind::Equational: return {equational_closure(generators, max_arity), true};
    case ClosureKind::Clone: return {clone_closure(generators, max_arity), true};
    case ClosureKind::Idempotent: return idempotent_closure(generators, max_arity);
    case ClosureKind::Iterative: return {iterative_closure(generators, max_arity), true};
  }
  throw input_error("unknown closure kind");
}

FunctionClass z_operator(const FunctionClass& k_class, int k) {
  if (k != kInfinity && k < 2) throw input_error("z_operator: k must be >= 2");
  const int n = k_class.max_arity();
  std::vector<std::vector<Table>> levels(n + 1);
  if (k_class.empty()) return FunctionClass::from_levels(n, std::move(levels));
  for (int a = 0; a <= n; ++a) {
    levels[a] = a <= 4 ? z_dense(k_class.level(a), a, k) : z_sparse(k_class.level(a), a, k);
  }
  return FunctionClass::from_levels(n, std::move(levels));
}

TruthTable lift_zero_removal(const TruthTable& g, const BitTuple& a) {
  const int n = g.arity();
  if (static_cast<int>(a.size()) != n) throw input_error("lift_zero_removal: tuple length differs from arity");
  const std::uint32_t pa = point_of(a);
  if (g.bit(pa)) throw input_error("lift_zero_removal: the point is not a zero of g");
  if (!g.bit(0)) throw input_error("lift_zero_removal: g must take value 1 at the all-zero point");

  std::vector<int> xs, ys;
  for (int i = 0; i < n; ++i) (a[i] ? ys : xs).push_back(i + 1);
  // Inner functions g(x_i,...,x_i,y_j,...,y_j), then g itself.
  std::vector<TruthTable> inner;
  for (int i : xs) {
    for (int j : ys) {
      MinorMap sigma{n, n, std::vector<int>(n)};
      for (int v : xs) sigma.map[v - 1] = i;
      for (int v : ys) sigma.map[v - 1] = j;
      inner.push_back(apply_minor(g, sigma));
    }
  }
  inner.push_back(g);
  const int outer_arity = static_cast<int>(inner.size());
  if (outer_arity > kMaxArity) throw resource_error("lift_zero_removal: outer function too large");
  // h(z_1,...,z_N, w) = (z_1 | ... | z_N) -> w
  const std::uint32_t z_mask = (std::uint32_t{1} << (outer_arity - 1)) - 1;
  const TruthTable h = TruthTable::from_points(outer_arity, [&](std::uint32_t p) {
    return !(p & z_mask) || ((p >> (outer_arity - 1)) & 1u);
  });
  const TruthTable lifted = compose(h, inner);

  TruthTable direct = g;
  direct.set_bit(pa, true);
  if (!(lifted == direct)) {
    throw consistency_error("lift_zero_removal: construction " + lifted.to_string() + " differs from " +
                            direct.to_string());
  }
  return lifted;
}

bool is_composition_closed(const FunctionClass& k_class) {
  const std::vector<Outer> outers = outer_representatives(k_class);
  std::uint64_t budget = default_transition_budget();
  bool closed = true;
  std::size_t produced = 0, expected = 0;
  for (int a = 0; a <= k_class.max_arity() && closed; ++a) {
    std::size_t count = 0;
    for_each_composition(outers, k_class.level(a), a, [&](Table t) {
      ++count;
      if (!k_class.contains(t, a)) closed = false;
      return closed;
    }, &budget);
    produced += count;
    expected += k_class.level(a).size();
  }
  if (!closed) return false;
  bool unary = true;
  for (const auto& f : k_class.canonical_members()) unary = unary && f.arity() <= 1;
  if (!unary && produced != expected) {
    throw consistency_error("composition-closed class is not reproduced by K∘K at the bound");
  }
  return true;
}

}  // namespace postlat

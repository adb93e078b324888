#include "postlat/catalog.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <map>
#include <set>

#include "postlat/closure.hpp"
#include "postlat/error.hpp"

namespace postlat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

struct Suffix {
  std::string_view text;
  Family family;
};

constexpr Suffix kSuffixes[] = {
    {"_0*", Family::Omega0x}, {"_*1", Family::Omegax1}, {"_00", Family::Omega00}, {"_01", Family::Omega01},
    {"_10", Family::Omega10}, {"_11", Family::Omega11}, {"_=", Family::OmegaEq},
};

void parse_atom(std::string_view atom, std::vector<ClassId>& out) {
  try {
    out.push_back(parse_class_id(atom));
    return;
  } catch (const input_error&) {
  }
  for (const auto& s : kSuffixes) {
    if (atom.size() > s.text.size() && atom.ends_with(s.text)) {
      const std::string_view base = atom.substr(0, atom.size() - s.text.size());
      out.push_back(parse_class_id(base));
      out.push_back({s.family, 0});
      return;
    }
  }
  throw input_error("unknown class name '" + std::string(atom) + "'");
}

Family dual_family(Family f) {
  switch (f) {
    case Family::Omega00: return Family::Omega11;
    case Family::Omega11: return Family::Omega00;
    case Family::Omega0x: return Family::Omegax1;
    case Family::Omegax1: return Family::Omega0x;
    case Family::Conjunction: return Family::Disjunction;
    case Family::Disjunction: return Family::Conjunction;
    case Family::W: return Family::U;
    case Family::U: return Family::W;
    case Family::B: return Family::D;
    case Family::D: return Family::B;
    default: return f;
  }
}

// Depth-first search over zero sets in increasing point order. Every W^k and
// B^k condition is inherited by subsets, so a violating prefix is pruned.
class ZeroSetSearch {
 public:
  ZeroSetSearch(int arity, const std::vector<ClassId>& parts) : n_(arity), full_(bits::points(arity) - 1) {
    for (const auto& id : parts) {
      const bool complemented = id.family == Family::B;
      if (id.family != Family::W && id.family != Family::B) continue;
      const int k = id.k >= n_ ? kInfinity : id.k;
      conditions_.push_back({k, false});
      if (complemented) conditions_.push_back({k, true});
    }
  }

  std::vector<Table> run(std::uint64_t cap) {
    cap_ = cap;
    std::vector<State> states;
    for (const auto& c : conditions_) states.push_back(initial(c));
    visit(0, 0, states);
    return out_;
  }

 private:
  struct Condition {
    int k;
    bool complemented;
  };
  // For finite k, reach[j] holds the ORs of at most j+1 chosen rows; for
  // k = ∞ reach[0] bit 0 carries the OR of all rows as a plain mask.
  struct State {
    std::vector<Table> reach;
    std::uint32_t acc = 0;
  };

  State initial(const Condition& c) const {
    State s;
    if (c.k != kInfinity) s.reach.assign(static_cast<std::size_t>(c.k - 1), 0);
    return s;
  }

  bool add(const Condition& c, State& s, std::uint32_t p) const {
    if (c.complemented) p ^= full_;
    if (c.k == kInfinity) {
      s.acc |= p;
      return s.acc != full_;
    }
    if (p == full_) return false;
    // Bit 0 of prev stands for the empty selection.
    auto extended = [&](int j) {
      const Table prev = (j == 0 ? Table{0} : s.reach[static_cast<std::size_t>(j - 1)]) | 1u;
      Table out = 0;
      for (Table m = prev; m; m &= m - 1) out |= Table{1} << (static_cast<std::uint32_t>(std::countr_zero(m)) | p);
      return out;
    };
    if ((extended(c.k - 1) >> full_) & 1u) return false;
    std::vector<Table> next = s.reach;
    for (int j = 0; j < c.k - 1; ++j) next[static_cast<std::size_t>(j)] |= extended(j);
    s.reach = std::move(next);
    return true;
  }

  void visit(std::uint32_t from, Table zeros, const std::vector<State>& states) {
    if (out_.size() >= cap_) throw resource_error("zero-set search exceeded " + std::to_string(cap_) + " tables");
    out_.push_back(bits::complement(zeros, n_));
    for (std::uint32_t p = from; p <= full_; ++p) {
      std::vector<State> next = states;
      bool ok = true;
      for (std::size_t i = 0; ok && i < conditions_.size(); ++i) ok = add(conditions_[i], next[i], p);
      if (ok) visit(p + 1, zeros | (Table{1} << p), next);
    }
  }

  int n_;
  std::uint32_t full_;
  std::vector<Condition> conditions_;
  std::vector<Table> out_;
  std::uint64_t cap_ = 0;
};

bool has_family(const ClassSpec& spec, std::initializer_list<Family> fams) {
  return std::any_of(spec.parts.begin(), spec.parts.end(), [&](const ClassId& id) {
    return std::find(fams.begin(), fams.end(), id.family) != fams.end();
  });
}

constexpr std::uint64_t kFragmentCap = 20'000'000;

std::vector<Table> candidates(const ClassSpec& spec, int a) {
  if (has_family(spec, {Family::W, Family::B})) return ZeroSetSearch(a, spec.parts).run(kFragmentCap);
  if (has_family(spec, {Family::U, Family::D})) {
    std::vector<Table> out = ZeroSetSearch(a, spec.dual().parts).run(kFragmentCap);
    for (Table& t : out) t = bits::dual(t, a);
    return out;
  }
  if (has_family(spec, {Family::Linear})) {
    std::vector<Table> out;
    for (std::uint32_t mask = 0; mask < (1u << a); ++mask) {
      Table t = 0;
      for (int i = 0; i < a; ++i) {
        if ((mask >> i) & 1u) t ^= bits::var(a, i);
      }
      out.push_back(t);
      out.push_back(bits::complement(t, a));
    }
    return out;
  }
  if (has_family(spec, {Family::Conjunction, Family::Disjunction, Family::Unary})) {
    std::vector<Table> out = {0, bits::full(a)};
    for (std::uint32_t mask = 1; mask < (1u << a); ++mask) {
      Table conj = bits::full(a), disj = 0;
      for (int i = 0; i < a; ++i) {
        if ((mask >> i) & 1u) {
          conj &= bits::var(a, i);
          disj |= bits::var(a, i);
        }
      }
      out.push_back(conj);
      out.push_back(disj);
    }
    for (int i = 0; i < a; ++i) out.push_back(bits::complement(bits::var(a, i), a));
    return out;
  }
  throw resource_error("no generator for " + spec.to_string() + " above arity 4");
}

}  // namespace

ClassSpec ClassSpec::parse(std::string_view name) {
  ClassSpec spec;
  std::string_view rest = trim(name);
  if (rest.empty()) throw input_error("empty class name");
  while (true) {
    std::size_t cut = rest.find("∩");
    std::size_t len = std::string_view("∩").size();
    const std::size_t amp = rest.find('&');
    if (amp < cut) {
      cut = amp;
      len = 1;
    }
    parse_atom(trim(rest.substr(0, cut)), spec.parts);
    if (cut == std::string_view::npos) break;
    rest = rest.substr(cut + len);
  }
  return spec;
}

std::string ClassSpec::to_string() const {
  std::string s;
  for (const auto& id : parts) {
    if (!s.empty()) s += "∩";
    s += postlat::to_string(id);
  }
  return s;
}

bool ClassSpec::contains(const TruthTable& f) const {
  return std::all_of(parts.begin(), parts.end(), [&](const ClassId& id) { return predicate(f, id); });
}

bool ClassSpec::holds(Table t, int arity) const {
  return std::all_of(parts.begin(), parts.end(), [&](const ClassId& id) { return postlat::holds(t, arity, id); });
}

ClassSpec ClassSpec::dual() const {
  ClassSpec d;
  for (const auto& id : parts) d.parts.push_back({dual_family(id.family), id.k});
  return d;
}

bool named_class_membership(const TruthTable& f, std::string_view name) { return ClassSpec::parse(name).contains(f); }

FunctionClass fragment(const ClassSpec& spec, int max_arity) {
  if (max_arity < 0 || max_arity > kMaxBound) throw input_error("max arity must be in 0.." + std::to_string(kMaxBound));
  const FunctionClass low =
      FunctionClass::from_filter(std::min(max_arity, 4), [&](Table t, int a) { return spec.holds(t, a); });
  std::vector<std::vector<Table>> levels = low.levels();
  for (int a = 5; a <= max_arity; ++a) {
    std::vector<Table> level;
    for (Table t : candidates(spec, a)) {
      if (spec.holds(t, a)) level.push_back(t);
    }
    levels.push_back(std::move(level));
  }
  return FunctionClass::from_levels(max_arity, std::move(levels));
}

FunctionClass fragment(std::string_view name, int max_arity) { return fragment(ClassSpec::parse(name), max_arity); }

std::vector<std::string> unary_content(const std::vector<TruthTable>& generators) {
  // A unary function u is encoded as u(0) | u(1) << 1.
  std::set<std::uint8_t> reached = {2};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& f : generators) {
      const int n = f.arity();
      std::set<std::vector<std::uint8_t>> states;
      std::vector<std::uint8_t> start(f.size());
      for (std::uint32_t p = 0; p < f.size(); ++p) start[p] = f.bit(p) ? 3 : 0;
      states.insert(std::move(start));
      for (int j = 0; j < n; ++j) {
        std::set<std::vector<std::uint8_t>> next;
        for (const auto& s : states) {
          for (std::uint8_t u : reached) {
            std::vector<std::uint8_t> t(s.size() / 2);
            for (std::size_t b = 0; b < t.size(); ++b) {
              t[b] = static_cast<std::uint8_t>((s[2 * b] & ~u & 3) | (s[2 * b + 1] & u));
            }
            next.insert(std::move(t));
          }
        }
        states.swap(next);
      }
      for (const auto& s : states) grew |= reached.insert(s[0]).second;
    }
  }
  std::vector<std::string> out;
  for (std::uint8_t u : {std::uint8_t{0}, std::uint8_t{3}, std::uint8_t{2}, std::uint8_t{1}}) {
    if (reached.count(u)) out.push_back(u == 0 ? "0" : u == 3 ? "1" : u == 2 ? "id" : "¬");
  }
  return out;
}

Classification classify_clone(const std::vector<TruthTable>& generators, int k_max) {
  if (k_max < 2) throw input_error("k_max must be at least 2");
  CloneSignature s;
  auto all = [&](Family fam) {
    return std::all_of(generators.begin(), generators.end(), [&](const TruthTable& f) { return predicate(f, {fam, 0}); });
  };
  s.preserves_0 = all(Family::Omega0x);
  s.preserves_1 = all(Family::Omegax1);
  s.monotone = all(Family::Monotone);
  s.selfdual = all(Family::SelfDual);
  s.linear = all(Family::Linear);
  s.conjunctive = all(Family::Conjunction);
  s.disjunctive = all(Family::Disjunction);
  s.essentially_unary = all(Family::Unary);
  for (const auto& f : generators) {
    s.w_depth = std::min(s.w_depth, w_depth(f));
    s.u_depth = std::min(s.u_depth, u_depth(f));
  }
  if (s.w_depth != kInfinity && s.w_depth >= k_max) {
    s.w_saturated = true;
    s.w_depth = k_max;
  }
  if (s.u_depth != kInfinity && s.u_depth >= k_max) {
    s.u_saturated = true;
    s.u_depth = k_max;
  }
  s.unary_content = unary_content(generators);

  Classification c{s, "intersection", false};
  const bool t0 = s.preserves_0, t1 = s.preserves_1;
  const bool plain = !s.monotone && !s.selfdual && !s.linear && !s.conjunctive && !s.disjunctive && !s.essentially_unary;
  const bool shallow = s.w_depth == 1 && s.u_depth == 1;
  auto name = [&](std::string n) {
    c.name = std::move(n);
    c.named = true;
  };
  if (shallow && plain) {
    if (!t0 && !t1) name("Ω");
    if (t0 && !t1) name("Ω_0*");
    if (!t0 && t1) name("Ω_*1");
    if (t0 && t1) name("Ω_01");
  }
  if (shallow && !t0 && !t1 && !s.selfdual && !s.conjunctive && !s.disjunctive && !s.essentially_unary) {
    if (s.monotone && !s.linear) name("M");
  }
  if (shallow && !s.monotone && !s.conjunctive && !s.disjunctive && !s.essentially_unary) {
    if (s.selfdual && !s.linear && !t0 && !t1) name("S");
    if (s.linear && !s.selfdual) {
      if (!t0 && !t1) name("L");
      if (t0 && !t1) name("L_0*");
      if (!t0 && t1) name("L_*1");
    }
  }
  if (shallow && !t0 && !t1 && s.monotone && !s.selfdual && !s.linear && !s.essentially_unary) {
    if (s.conjunctive && !s.disjunctive) name("Λ");
    if (s.disjunctive && !s.conjunctive) name("V");
  }
  if (shallow && !t0 && !t1 && s.essentially_unary && s.linear && !s.monotone && !s.selfdual && !s.conjunctive &&
      !s.disjunctive) {
    name("Ω^(1)");
  }
  auto depth_name = [](int d) { return d == kInfinity ? std::string("∞") : std::to_string(d); };
  if (plain && t1 && !t0 && s.u_depth == 1 && s.w_depth >= 2 && !s.w_saturated) name("W^" + depth_name(s.w_depth));
  if (plain && t0 && !t1 && s.w_depth == 1 && s.u_depth >= 2 && !s.u_saturated) name("U^" + depth_name(s.u_depth));
  return c;
}

std::string describe(const CloneSignature& s) {
  auto flag = [](bool b) { return b ? "1" : "0"; };
  auto depth = [](int d, bool sat) {
    return d == kInfinity ? std::string("∞") : (sat ? ">=" : "") + std::to_string(d);
  };
  std::string unary;
  for (const auto& u : s.unary_content) unary += (unary.empty() ? "" : ",") + u;
  return std::string("T0=") + flag(s.preserves_0) + " T1=" + flag(s.preserves_1) + " M=" + flag(s.monotone) +
         " S=" + flag(s.selfdual) + " L=" + flag(s.linear) + " Λ=" + flag(s.conjunctive) +
         " V=" + flag(s.disjunctive) + " unary=" + flag(s.essentially_unary) +
         " w=" + depth(s.w_depth, s.w_saturated) + " u=" + depth(s.u_depth, s.u_saturated) + " content={" + unary +
         "}";
}

std::vector<UnaryClass> unary_idempotent_enumeration() {
  const std::pair<const char*, Table> kUnary[] = {{"0", 0}, {"1", 3}, {"id", 2}, {"¬", 1}};
  std::vector<UnaryClass> out;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<std::string> names;
    std::vector<TruthTable> fs;
    for (int i = 0; i < 4; ++i) {
      if ((mask >> i) & 1u) {
        names.push_back(kUnary[i].first);
        fs.push_back(TruthTable::from_word(1, kUnary[i].second));
      }
    }
    FunctionClass k = FunctionClass::from_functions(1, fs);
    if (is_composition_closed(k)) out.push_back({std::move(names), std::move(k)});
  }
  return out;
}

SkeletonMatrix canonical_matrix(const std::vector<std::uint32_t>& rows, int columns) {
  const int r = static_cast<int>(rows.size());
  if (r > 8) throw input_error("skeleton matrices are limited to 8 rows");
  SkeletonMatrix best;
  best.rows = r;
  if (r == 0) return best;
  std::vector<int> perm(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) perm[static_cast<std::size_t>(i)] = i;
  bool first = true;
  do {
    std::vector<std::uint32_t> cols(static_cast<std::size_t>(columns));
    for (int c = 0; c < columns; ++c) {
      std::uint32_t v = 0;
      for (int i = 0; i < r; ++i) v |= ((rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] >> c) & 1u) << i;
      cols[static_cast<std::size_t>(c)] = v;
    }
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    if (first || cols < best.columns) best.columns = std::move(cols);
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Skeleton skeleton_of(const FunctionClass& k_class, int k) {
  if (k < 1) throw input_error("skeleton row bound must be positive");
  std::set<SkeletonMatrix> found;
  if (!k_class.empty()) found.insert(SkeletonMatrix{});
  for (int a = 0; a <= k_class.max_arity(); ++a) {
    for (Table t : k_class.level(a)) {
      if (bits::permutation_min(t, a) != t) continue;
      std::vector<std::uint32_t> zeros;
      for (Table m = bits::complement(t, a); m; m &= m - 1) zeros.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
      const int z = static_cast<int>(zeros.size());
      std::vector<std::uint32_t> rows;
      auto rec = [&](auto&& self, int start) -> void {
        if (!rows.empty()) found.insert(canonical_matrix(rows, a));
        if (static_cast<int>(rows.size()) == k) return;
        for (int i = start; i < z; ++i) {
          rows.push_back(zeros[static_cast<std::size_t>(i)]);
          self(self, i + 1);
          rows.pop_back();
        }
      };
      rec(rec, 0);
    }
  }
  return Skeleton{k, {found.begin(), found.end()}};
}

std::uint64_t Skeleton::hash() const {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xFF;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(k));
  for (const auto& m : matrices) {
    mix(static_cast<std::uint64_t>(m.rows));
    mix(m.columns.size());
    for (std::uint32_t c : m.columns) mix(c);
  }
  return h;
}

std::string Skeleton::hash_label() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
  return buf;
}

bool is_minor_closed(const FunctionClass& k_class) {
  for (int a = 2; a <= k_class.max_arity(); ++a) {
    for (Table t : k_class.level(a)) {
      for (int i = 0; i < a; ++i) {
        for (int j = i + 1; j < a; ++j) {
          const Table v = bits::var(a, i);
          const Table m = ((bits::cofactor(t, j, false) & ~v) | (bits::cofactor(t, j, true) & v)) & bits::full(a);
          if (!k_class.contains(m, a)) return false;
        }
      }
    }
  }
  return true;
}

bool is_sqsubseteq_ideal(const FunctionClass& k_class) {
  return is_minor_closed(k_class) && z_operator(k_class, kInfinity) == k_class;
}

}  // namespace postlat

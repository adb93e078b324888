#include "postlat/predicates.hpp"

#include <algorithm>
#include <bit>

#include "postlat/error.hpp"

namespace postlat {

namespace {

struct NameEntry {
  std::string_view name;
  Family family;
};

constexpr NameEntry kNames[] = {
    {"Ω", Family::Omega},          {"Omega", Family::Omega},          {"Ω_00", Family::Omega00},
    {"Omega_00", Family::Omega00}, {"Ω_01", Family::Omega01},         {"Omega_01", Family::Omega01},
    {"Ω_10", Family::Omega10},     {"Omega_10", Family::Omega10},     {"Ω_11", Family::Omega11},
    {"Omega_11", Family::Omega11}, {"Ω_0*", Family::Omega0x},         {"Omega_0*", Family::Omega0x},
    {"Ω_*1", Family::Omegax1},     {"Omega_*1", Family::Omegax1},     {"Ω_=", Family::OmegaEq},
    {"Omega_=", Family::OmegaEq},  {"M", Family::Monotone},           {"S", Family::SelfDual},
    {"L", Family::Linear},         {"Λ", Family::Conjunction},        {"Lambda", Family::Conjunction},
    {"V", Family::Disjunction},    {"Ω^(1)", Family::Unary},          {"Omega^(1)", Family::Unary},
    {"R", Family::Reflexive},      {"antimonotone", Family::Antimonotone},
};

bool parametrized(Family f) {
  return f == Family::W || f == Family::U || f == Family::B || f == Family::D;
}

std::uint32_t all_ones(int n) { return n >= 32 ? ~0u : ((1u << n) - 1); }

bool w_test(const std::vector<std::uint32_t>& rows, int n, int k) {
  if (rows.empty()) return true;
  if (k == kInfinity) {
    std::uint32_t acc = 0;
    for (std::uint32_t r : rows) acc |= r;
    return acc != all_ones(n);
  }
  return min_cover(rows, n, k) > k;
}

std::vector<std::uint32_t> complemented(const std::vector<std::uint32_t>& rows, int n) {
  std::vector<std::uint32_t> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) out[i] = rows[i] ^ all_ones(n);
  return out;
}

bool b_test(const std::vector<std::uint32_t>& rows, int n, int k) {
  return w_test(rows, n, k) && w_test(complemented(rows, n), n, k);
}

std::vector<std::uint32_t> zero_rows(Table t, int n) {
  std::vector<std::uint32_t> out;
  for (Table z = bits::complement(t, n); z; z &= z - 1) out.push_back(static_cast<std::uint32_t>(std::countr_zero(z)));
  return out;
}

bool monotone_word(Table t, int n, bool anti) {
  for (int i = 0; i < n; ++i) {
    const Table lo = bits::cofactor(t, i, false), hi = bits::cofactor(t, i, true);
    if (anti ? (hi & ~lo) : (lo & ~hi)) return false;
  }
  return true;
}

Table and_of(int n, Table mask_vars) {
  Table t = bits::full(n);
  for (int i = 0; i < n; ++i) {
    if ((mask_vars >> i) & 1u) t &= bits::var(n, i);
  }
  return t;
}

Table or_of(int n, Table mask_vars) {
  Table t = 0;
  for (int i = 0; i < n; ++i) {
    if ((mask_vars >> i) & 1u) t |= bits::var(n, i);
  }
  return t;
}

int essential_mask(Table t, int n) {
  int m = 0;
  for (int i = 0; i < n; ++i) {
    if (bits::depends_on(t, n, i)) m |= 1 << i;
  }
  return m;
}

bool linear_word(Table t, int n) {
  // Möbius transform on the packed word.
  Table c = t;
  for (int i = 0; i < n; ++i) {
    const int s = 1 << i;
    c ^= (c & ~bits::kVarPattern[i]) << s;
  }
  c &= bits::full(n);
  for (; c; c &= c - 1) {
    if (std::popcount(static_cast<unsigned>(std::countr_zero(c))) > 1) return false;
  }
  return true;
}

}  // namespace

ClassId parse_class_id(std::string_view name) {
  for (const auto& e : kNames) {
    if (e.name == name) return {e.family, 0};
  }
  if (name.size() >= 3 && name[1] == '^') {
    Family fam;
    switch (name[0]) {
      case 'W': fam = Family::W; break;
      case 'U': fam = Family::U; break;
      case 'B': fam = Family::B; break;
      case 'D': fam = Family::D; break;
      default: throw input_error("unknown class name '" + std::string(name) + "'");
    }
    std::string_view rest = name.substr(2);
    if (rest.size() >= 2 && rest.front() == '{' && rest.back() == '}') rest = rest.substr(1, rest.size() - 2);
    if (rest == "∞" || rest == "inf") return {fam, kInfinity};
    int k = 0;
    for (char c : rest) {
      if (c < '0' || c > '9' || k > 1000) throw input_error("bad class parameter in '" + std::string(name) + "'");
      k = k * 10 + (c - '0');
    }
    if (rest.empty() || k < 2) throw input_error("class parameter must be >= 2 in '" + std::string(name) + "'");
    return {fam, k};
  }
  throw input_error("unknown class name '" + std::string(name) + "'");
}

std::string to_string(const ClassId& id) {
  switch (id.family) {
    case Family::Omega: return "Ω";
    case Family::Omega00: return "Ω_00";
    case Family::Omega01: return "Ω_01";
    case Family::Omega10: return "Ω_10";
    case Family::Omega11: return "Ω_11";
    case Family::Omega0x: return "Ω_0*";
    case Family::Omegax1: return "Ω_*1";
    case Family::OmegaEq: return "Ω_=";
    case Family::Monotone: return "M";
    case Family::SelfDual: return "S";
    case Family::Linear: return "L";
    case Family::Conjunction: return "Λ";
    case Family::Disjunction: return "V";
    case Family::Unary: return "Ω^(1)";
    case Family::Reflexive: return "R";
    case Family::Antimonotone: return "antimonotone";
    default: break;
  }
  const char* letter = id.family == Family::W ? "W" : id.family == Family::U ? "U" : id.family == Family::B ? "B" : "D";
  return std::string(letter) + "^" + (id.k == kInfinity ? std::string("∞") : std::to_string(id.k));
}

int min_cover(const std::vector<std::uint32_t>& rows, int n, int limit) {
  if (rows.empty()) return kInfinity;
  const std::uint32_t full = all_ones(n);
  std::vector<std::uint32_t> maximal;
  {
    std::vector<std::uint32_t> sorted = rows;
    std::sort(sorted.begin(), sorted.end(), [](std::uint32_t a, std::uint32_t b) {
      const int ca = std::popcount(a), cb = std::popcount(b);
      return ca != cb ? ca > cb : a < b;
    });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::uint32_t r : sorted) {
      bool covered = false;
      for (std::uint32_t m : maximal) {
        if ((r & m) == r) {
          covered = true;
          break;
        }
      }
      if (!covered) maximal.push_back(r);
    }
  }
  std::uint32_t total = 0;
  for (std::uint32_t r : maximal) total |= r;
  if (total != full) return kInfinity;

  std::vector<std::uint8_t> seen(std::size_t{1} << n, 0);
  std::vector<std::uint32_t> frontier;
  for (std::uint32_t r : maximal) {
    if (r == full) return 1;
    if (!seen[r]) {
      seen[r] = 1;
      frontier.push_back(r);
    }
  }
  for (int level = 2;; ++level) {
    if (level > limit) return limit + 1;
    std::vector<std::uint32_t> next;
    for (std::uint32_t m : frontier) {
      for (std::uint32_t r : maximal) {
        const std::uint32_t u = m | r;
        if (u == full) return level;
        if (!seen[u]) {
          seen[u] = 1;
          next.push_back(u);
        }
      }
    }
    frontier.swap(next);
    if (frontier.empty()) return kInfinity;
  }
}

bool holds(Table t, int n, const ClassId& id) {
  t &= bits::full(n);
  const bool first = bits::at(t, 0);
  const bool last = bits::at(t, bits::points(n) - 1);
  switch (id.family) {
    case Family::Omega: return true;
    case Family::Omega00: return !first && !last;
    case Family::Omega01: return !first && last;
    case Family::Omega10: return first && !last;
    case Family::Omega11: return first && last;
    case Family::Omega0x: return !first;
    case Family::Omegax1: return last;
    case Family::OmegaEq: return first == last;
    case Family::Monotone: return monotone_word(t, n, false);
    case Family::Antimonotone: return monotone_word(t, n, true);
    case Family::SelfDual: return bits::dual(t, n) == t;
    case Family::Linear: return linear_word(t, n);
    case Family::Reflexive: return bits::negate_inputs(t, n) == t;
    case Family::Unary: return std::popcount(static_cast<unsigned>(essential_mask(t, n))) <= 1;
    case Family::Conjunction: {
      if (t == 0 || t == bits::full(n)) return true;
      return t == and_of(n, essential_mask(t, n));
    }
    case Family::Disjunction: {
      if (t == 0 || t == bits::full(n)) return true;
      return t == or_of(n, essential_mask(t, n));
    }
    case Family::W: return w_test(zero_rows(t, n), n, id.k);
    case Family::U: return w_test(zero_rows(bits::dual(t, n), n), n, id.k);
    case Family::B: return b_test(zero_rows(t, n), n, id.k);
    case Family::D: return b_test(zero_rows(bits::dual(t, n), n), n, id.k);
  }
  return false;
}

bool predicate(const TruthTable& f, const ClassId& id) {
  if (parametrized(id.family) && id.k < 2) throw input_error("class parameter must be >= 2");
  const int n = f.arity();
  if (n <= kWordArity) return holds(f.word(), n, id);
  const std::uint32_t top = f.size() - 1;
  const bool first = f.bit(0), last = f.bit(top);
  switch (id.family) {
    case Family::Omega: return true;
    case Family::Omega00: return !first && !last;
    case Family::Omega01: return !first && last;
    case Family::Omega10: return first && !last;
    case Family::Omega11: return first && last;
    case Family::Omega0x: return !first;
    case Family::Omegax1: return last;
    case Family::OmegaEq: return first == last;
    case Family::Monotone:
    case Family::Antimonotone: {
      const bool anti = id.family == Family::Antimonotone;
      for (std::uint32_t p = 0; p <= top; ++p) {
        for (int i = 0; i < n; ++i) {
          const std::uint32_t q = p | (1u << i);
          if (q == p) continue;
          if (anti ? (f.bit(q) && !f.bit(p)) : (f.bit(p) && !f.bit(q))) return false;
        }
      }
      return true;
    }
    case Family::SelfDual: return dual(f) == f;
    case Family::Linear: {
      for (std::uint32_t m : anf(f)) {
        if (std::popcount(m) > 1) return false;
      }
      return true;
    }
    case Family::Reflexive: {
      for (std::uint32_t p = 0; p <= top; ++p) {
        if (f.bit(p) != f.bit(top ^ p)) return false;
      }
      return true;
    }
    case Family::Unary: return essential_variables(f).size() <= 1;
    case Family::Conjunction:
    case Family::Disjunction: {
      const auto ess = essential_variables(f);
      if (ess.empty()) return true;
      std::uint32_t mask = 0;
      for (int i : ess) mask |= 1u << (i - 1);
      const bool conj = id.family == Family::Conjunction;
      for (std::uint32_t p = 0; p <= top; ++p) {
        const bool expect = conj ? (p & mask) == mask : (p & mask) != 0;
        if (f.bit(p) != expect) return false;
      }
      return true;
    }
    case Family::W: return w_test(zero_points(f), n, id.k);
    case Family::U: return w_test(zero_points(dual(f)), n, id.k);
    case Family::B: return b_test(zero_points(f), n, id.k);
    case Family::D: return b_test(zero_points(dual(f)), n, id.k);
  }
  return false;
}

bool predicate(const TruthTable& f, std::string_view name) { return predicate(f, parse_class_id(name)); }

int w_depth(const TruthTable& f) {
  const int c = min_cover(zero_points(f), f.arity());
  return c == kInfinity ? kInfinity : std::max(1, c - 1);
}

int u_depth(const TruthTable& f) { return w_depth(dual(f)); }

}  // namespace postlat

#include "postlat/truth_table.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "postlat/error.hpp"

namespace postlat {

namespace {

std::size_t word_count(int arity) { return arity <= 6 ? 1 : (std::size_t{1} << (arity - 6)); }

void check_arity(int arity) {
  if (arity < 0 || arity > kMaxArity) {
    throw input_error("arity " + std::to_string(arity) + " outside 0.." + std::to_string(kMaxArity));
  }
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  const char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (u >= 'A' && u <= 'F') return u - 'A' + 10;
  return -1;
}

// Calls visit(block_of) for every set partition of `count` elements into at
// most `max_blocks` blocks, as restricted growth strings.
template <typename Visit>
void for_each_partition(int count, int max_blocks, Visit&& visit) {
  std::vector<int> rgs(count, 0);
  std::vector<int> prefix_max(count + 1, -1);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == count) {
      visit(rgs, prefix_max[pos] + 1);
      return;
    }
    const int limit = std::min(prefix_max[pos] + 1, max_blocks - 1);
    for (int b = 0; b <= limit; ++b) {
      rgs[pos] = b;
      prefix_max[pos + 1] = std::max(prefix_max[pos], b);
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

TruthTable::TruthTable(int arity) : arity_(arity) {
  check_arity(arity);
  words_.assign(word_count(arity), 0);
}

TruthTable TruthTable::from_word(int arity, Table word) {
  if (arity > kWordArity) throw input_error("from_word requires arity <= 6");
  TruthTable t(arity);
  t.words_[0] = word & bits::full(arity);
  return t;
}

TruthTable TruthTable::constant(int arity, bool value) {
  TruthTable t(arity);
  if (value) {
    for (auto& w : t.words_) w = ~Table{0};
    t.words_[0] &= bits::full(arity);
  }
  return t;
}

TruthTable TruthTable::projection(int arity, int i) {
  if (i < 1 || i > arity) throw input_error("projection index out of range");
  return from_points(arity, [i](std::uint32_t p) { return (p >> (i - 1)) & 1u; });
}

TruthTable TruthTable::from_points(int arity, const std::function<bool(std::uint32_t)>& f) {
  TruthTable t(arity);
  for (std::uint32_t p = 0; p < t.size(); ++p) {
    if (f(p)) t.set_bit(p, true);
  }
  return t;
}

TruthTable TruthTable::parse(std::string_view literal) {
  const auto colon = literal.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == literal.size()) {
    throw input_error("function literal must look like n:HEX, got '" + std::string(literal) + "'");
  }
  int arity = 0;
  for (char c : literal.substr(0, colon)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw input_error("bad arity in '" + std::string(literal) + "'");
    arity = arity * 10 + (c - '0');
    if (arity > kMaxArity) throw input_error("arity too large in '" + std::string(literal) + "'");
  }
  TruthTable t(arity);
  const std::string_view hex = literal.substr(colon + 1);
  const std::uint32_t bit_count = t.size();
  std::uint32_t pos = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, pos += 4) {
    const int v = hex_value(*it);
    if (v < 0) throw input_error("bad hex digit in '" + std::string(literal) + "'");
    for (int b = 0; b < 4; ++b) {
      if (!((v >> b) & 1)) continue;
      if (pos + b >= bit_count) throw input_error("value does not fit arity in '" + std::string(literal) + "'");
      t.set_bit(pos + b, true);
    }
  }
  return t;
}

void TruthTable::set_bit(std::uint32_t point, bool value) {
  const Table m = Table{1} << (point & 63);
  if (value) {
    words_[point >> 6] |= m;
  } else {
    words_[point >> 6] &= ~m;
  }
}

Table TruthTable::word() const {
  if (arity_ > kWordArity) throw input_error("word() requires arity <= 6");
  return words_[0];
}

std::string TruthTable::to_string() const {
  const std::uint32_t digits = std::max<std::uint32_t>(1, size() / 4);
  std::string out = std::to_string(arity_) + ":";
  static const char* kDigits = "0123456789ABCDEF";
  for (std::uint32_t d = digits; d-- > 0;) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      const std::uint32_t p = d * 4 + b;
      if (p < size() && bit(p)) v |= 1 << b;
    }
    out += kDigits[v];
  }
  return out;
}

std::size_t TruthTable::count_ones() const {
  std::size_t n = 0;
  for (Table w : words_) n += bits::count(w);
  return n;
}

bool operator<(const TruthTable& a, const TruthTable& b) {
  if (a.arity_ != b.arity_) return a.arity_ < b.arity_;
  return std::lexicographical_compare(a.words_.rbegin(), a.words_.rend(), b.words_.rbegin(), b.words_.rend());
}

std::size_t TruthTableHash::operator()(const TruthTable& t) const {
  std::size_t h = static_cast<std::size_t>(t.arity()) * 0x9E3779B97F4A7C15ull;
  for (Table w : t.words()) h = (h ^ w) * 0x100000001B3ull + (h >> 29);
  return h;
}

std::uint32_t point_of(const BitTuple& a) {
  std::uint32_t p = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 1) throw input_error("tuple entries must be 0 or 1");
    p |= static_cast<std::uint32_t>(a[i]) << i;
  }
  return p;
}

BitTuple tuple_of(std::uint32_t point, int arity) {
  BitTuple a(arity);
  for (int i = 0; i < arity; ++i) a[i] = (point >> i) & 1u;
  return a;
}

bool evaluate(const TruthTable& f, const BitTuple& a) {
  if (static_cast<int>(a.size()) != f.arity()) {
    throw input_error("evaluate: tuple length " + std::to_string(a.size()) + " differs from arity " +
                      std::to_string(f.arity()));
  }
  return f.bit(point_of(a));
}

TruthTable apply_minor(const TruthTable& f, const MinorMap& sigma) {
  if (sigma.source_arity != f.arity() || static_cast<int>(sigma.map.size()) != f.arity()) {
    throw input_error("apply_minor: map source arity differs from function arity");
  }
  check_arity(sigma.target_arity);
  for (int v : sigma.map) {
    if (v < 1 || v > sigma.target_arity) throw input_error("apply_minor: map entry outside 1..target arity");
  }
  TruthTable g(sigma.target_arity);
  for (std::uint32_t q = 0; q < g.size(); ++q) {
    std::uint32_t p = 0;
    for (int i = 0; i < f.arity(); ++i) p |= ((q >> (sigma.map[i] - 1)) & 1u) << i;
    if (f.bit(p)) g.set_bit(q, true);
  }
  return g;
}

bool is_essential(const TruthTable& f, int i) {
  if (i < 1 || i > f.arity()) throw input_error("variable index out of range");
  const std::uint32_t m = std::uint32_t{1} << (i - 1);
  if (f.arity() <= kWordArity) return bits::depends_on(f.word(), f.arity(), i - 1);
  for (std::uint32_t p = 0; p < f.size(); ++p) {
    if (!(p & m) && f.bit(p) != f.bit(p | m)) return true;
  }
  return false;
}

std::vector<int> essential_variables(const TruthTable& f) {
  std::vector<int> out;
  for (int i = 1; i <= f.arity(); ++i) {
    if (is_essential(f, i)) out.push_back(i);
  }
  return out;
}

TruthTable reduce(const TruthTable& f) {
  const auto ess = essential_variables(f);
  if (static_cast<int>(ess.size()) == f.arity()) return f;
  MinorMap sigma{f.arity(), static_cast<int>(ess.size()), std::vector<int>(f.arity(), 1)};
  for (std::size_t j = 0; j < ess.size(); ++j) sigma.map[ess[j] - 1] = static_cast<int>(j) + 1;
  if (ess.empty()) return TruthTable::constant(0, f.bit(0));
  return apply_minor(f, sigma);
}

TruthTable add_dummies(const TruthTable& f, int arity) {
  if (arity < f.arity()) throw input_error("add_dummies: target arity below current arity");
  check_arity(arity);
  const std::uint32_t mask = f.size() - 1;
  return TruthTable::from_points(arity, [&](std::uint32_t p) { return f.bit(p & mask); });
}

TruthTable swap_variables(const TruthTable& f, int i, int j) {
  if (i < 1 || j < 1 || i > f.arity() || j > f.arity()) throw input_error("swap_variables: index out of range");
  if (f.arity() <= kWordArity) return TruthTable::from_word(f.arity(), bits::swap(f.word(), i - 1, j - 1));
  const std::uint32_t mi = std::uint32_t{1} << (i - 1), mj = std::uint32_t{1} << (j - 1);
  return TruthTable::from_points(f.arity(), [&](std::uint32_t p) {
    std::uint32_t q = p & ~(mi | mj);
    if (p & mi) q |= mj;
    if (p & mj) q |= mi;
    return f.bit(q);
  });
}

TruthTable permutation_min(const TruthTable& f) {
  const int n = f.arity();
  if (n <= kWordArity) return TruthTable::from_word(n, bits::permutation_min(f.word(), n));
  if (n > 9) throw resource_error("canonical form beyond 9 essential variables is not supported");
  TruthTable best = f, cur = f;
  std::vector<int> c(n, 0);
  int i = 1;
  while (i < n) {
    if (c[i] < i) {
      cur = swap_variables(cur, (i % 2 == 0) ? 1 : c[i] + 1, i + 1);
      if (cur < best) best = cur;
      ++c[i];
      i = 1;
    } else {
      c[i] = 0;
      ++i;
    }
  }
  return best;
}

TruthTable canonicalize(const TruthTable& f) { return permutation_min(reduce(f)); }

TruthTable compose(const TruthTable& f, const std::vector<TruthTable>& gs) {
  if (static_cast<int>(gs.size()) != f.arity()) {
    throw input_error("compose: expected " + std::to_string(f.arity()) + " inner functions, got " +
                      std::to_string(gs.size()));
  }
  if (gs.empty()) return f;
  const int k = gs.front().arity();
  for (const auto& g : gs) {
    if (g.arity() != k) throw input_error("compose: inner functions must share one arity");
  }
  return TruthTable::from_points(k, [&](std::uint32_t q) {
    std::uint32_t p = 0;
    for (std::size_t i = 0; i < gs.size(); ++i) p |= static_cast<std::uint32_t>(gs[i].bit(q)) << i;
    return f.bit(p);
  });
}

std::vector<std::uint32_t> zero_points(const TruthTable& f) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 0; p < f.size(); ++p) {
    if (!f.bit(p)) out.push_back(p);
  }
  return out;
}

std::vector<BitTuple> zero_set(const TruthTable& f) {
  std::vector<BitTuple> out;
  for (std::uint32_t p : zero_points(f)) out.push_back(tuple_of(p, f.arity()));
  return out;
}

TruthTable negate(const TruthTable& f) {
  return TruthTable::from_points(f.arity(), [&](std::uint32_t p) { return !f.bit(p); });
}

TruthTable dual(const TruthTable& f) {
  const std::uint32_t all = f.size() - 1;
  return TruthTable::from_points(f.arity(), [&](std::uint32_t p) { return !f.bit(all ^ p); });
}

std::vector<std::uint32_t> anf(const TruthTable& f) {
  std::vector<std::uint8_t> c(f.size());
  for (std::uint32_t p = 0; p < f.size(); ++p) c[p] = f.bit(p);
  for (int i = 0; i < f.arity(); ++i) {
    const std::uint32_t m = std::uint32_t{1} << i;
    for (std::uint32_t p = 0; p < f.size(); ++p) {
      if (p & m) c[p] ^= c[p ^ m];
    }
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 0; p < f.size(); ++p) {
    if (c[p]) out.push_back(p);
  }
  std::stable_sort(out.begin(), out.end(), [](std::uint32_t a, std::uint32_t b) {
    const int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  return out;
}

TruthTable from_anf(int arity, const std::vector<std::uint32_t>& monomials) {
  TruthTable t(arity);
  for (std::uint32_t m : monomials) {
    if (m >> arity) throw input_error("monomial uses a variable beyond the arity");
  }
  for (std::uint32_t p = 0; p < t.size(); ++p) {
    bool v = false;
    for (std::uint32_t m : monomials) v ^= (p & m) == m;
    t.set_bit(p, v);
  }
  return t;
}

std::string anf_to_string(const std::vector<std::uint32_t>& monomials) {
  if (monomials.empty()) return "0";
  std::string out;
  for (std::uint32_t m : monomials) {
    if (!out.empty()) out += " + ";
    if (m == 0) {
      out += "1";
      continue;
    }
    bool first = true;
    for (int i = 0; i < 32; ++i) {
      if (!((m >> i) & 1u)) continue;
      if (!first) out += "*";
      out += "x" + std::to_string(i + 1);
      first = false;
    }
  }
  return out;
}

std::vector<TruthTable> minors(const TruthTable& f, int max_target_arity) {
  if (max_target_arity < 0) throw input_error("minors: negative arity bound");
  std::set<TruthTable> out;
  if (f.arity() == 0) {
    for (int m = 0; m <= std::min(max_target_arity, kMaxArity); ++m) {
      out.insert(TruthTable::constant(m, f.bit(0)));
    }
    return {out.begin(), out.end()};
  }
  const TruthTable r = reduce(f);
  const int e = r.arity();
  const int top = std::min(max_target_arity, kMaxArity);
  if (e == 0) {
    for (int m = 1; m <= top; ++m) out.insert(TruthTable::constant(m, f.bit(0)));
    return {out.begin(), out.end()};
  }
  std::uint64_t budget = 50'000'000;
  for_each_partition(e, top, [&](const std::vector<int>& block, int blocks) {
    if (budget-- == 0) throw resource_error("minors: too many variable identifications");
    MinorMap sigma{e, blocks, {}};
    for (int b : block) sigma.map.push_back(b + 1);
    const TruthTable g = apply_minor(r, sigma);
    for (int m = std::max(blocks, 1); m <= top; ++m) {
      out.insert(permutation_min(m == blocks ? g : add_dummies(g, m)));
    }
  });
  return {out.begin(), out.end()};
}

TruthTable w_k(int k) {
  if (k < 2) throw input_error("w_k requires k >= 2");
  if (k + 2 > kMaxArity) throw input_error("w_k: arity exceeds limit");
  return TruthTable::from_points(k + 2, [](std::uint32_t p) { return !(std::popcount(p) == 2 && (p & 1u)); });
}

TruthTable v_j(int j) {
  if (j < 2) throw input_error("v_j requires j >= 2");
  const TruthTable w = w_k(j);
  const std::uint32_t all = w.size() - 1;
  return TruthTable::from_points(w.arity(), [&](std::uint32_t p) { return w.bit(all ^ p); });
}

TruthTable at_most_one_one(int l) {
  if (l < 2) throw input_error("at_most_one_one requires l >= 2");
  check_arity(l);
  return TruthTable::from_points(l, [](std::uint32_t p) { return std::popcount(p) > 1; });
}

TruthTable majority() { return TruthTable::from_word(3, 0xE8); }

TruthTable minority() { return TruthTable::from_word(3, 0x96); }

TruthTable two_thirds_minority() { return from_anf(3, {0b001, 0b100, 0b011, 0b110, 0b101}); }

}  // namespace postlat

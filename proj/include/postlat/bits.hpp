#pragma once

// Word-level helpers for truth tables of arity <= 6, packed into one
// 64-bit word. Bit i of the word is the value at the point whose binary
// expansion is i (x_1 least significant).

#include <bit>
#include <cstdint>
#include <utility>

namespace postlat {

using Table = std::uint64_t;

inline constexpr int kWordArity = 6;

namespace bits {

inline constexpr Table kVarPattern[kWordArity] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

constexpr int points(int arity) { return 1 << arity; }

constexpr Table full(int arity) {
  return arity >= kWordArity ? ~Table{0} : ((Table{1} << points(arity)) - 1);
}

constexpr Table var(int arity, int i) { return kVarPattern[i] & full(arity); }

constexpr Table constant(int arity, bool value) { return value ? full(arity) : 0; }

constexpr bool at(Table t, std::uint32_t point) { return (t >> point) & 1u; }

constexpr int count(Table t) { return std::popcount(t); }

/// Table with variable i replaced by the constant `value`, still over arity n.
constexpr Table cofactor(Table t, int i, bool value) {
  const Table m = kVarPattern[i];
  const int s = 1 << i;
  return value ? ((t & m) | ((t & m) >> s)) : ((t & ~m) | ((t & ~m) << s));
}

constexpr bool depends_on(Table t, int arity, int i) {
  return (cofactor(t, i, false) ^ cofactor(t, i, true)) & full(arity);
}

/// Exchanges variables i and j.
constexpr Table swap(Table t, int i, int j) {
  if (i == j) return t;
  if (i > j) std::swap(i, j);
  const int s = (1 << j) - (1 << i);
  const Table keep = ~(kVarPattern[i] ^ kVarPattern[j]);
  const Table up = kVarPattern[i] & ~kVarPattern[j];
  const Table down = kVarPattern[j] & ~kVarPattern[i];
  return (t & keep) | ((t & up) << s) | ((t & down) >> s);
}

/// Appends an inessential variable at position `arity`.
constexpr Table extend(Table t, int arity) { return t | (t << points(arity)); }

/// Removes variable i, which must be inessential; result has arity-1 variables.
constexpr Table drop(Table t, int arity, int i) {
  Table out = 0;
  const std::uint32_t low = (1u << i) - 1;
  for (std::uint32_t p = 0; p < static_cast<std::uint32_t>(points(arity)); ++p) {
    if ((p >> i) & 1u) continue;
    if (at(t, p)) out |= Table{1} << ((p & low) | ((p >> 1) & ~low));
  }
  return out;
}

constexpr Table complement(Table t, int arity) { return ~t & full(arity); }

/// Calls visit(table) once per permutation of the n variables (Heap's
/// algorithm), including the identity. Tables repeat when f has symmetries.
template <typename Visit>
void for_each_permutation(Table t, int n, Visit&& visit) {
  visit(t);
  int c[kWordArity] = {0, 0, 0, 0, 0, 0};
  int i = 1;
  while (i < n) {
    if (c[i] < i) {
      t = swap(t, (i % 2 == 0) ? 0 : c[i], i);
      visit(t);
      ++c[i];
      i = 1;
    } else {
      c[i] = 0;
      ++i;
    }
  }
}

inline Table permutation_min(Table t, int n) {
  Table best = t;
  for_each_permutation(t, n, [&](Table u) { best = u < best ? u : best; });
  return best;
}

constexpr Table negate_inputs(Table t, int arity) {
  for (int i = 0; i < arity; ++i) {
    const int s = 1 << i;
    t = ((t & kVarPattern[i]) >> s) | ((t & ~kVarPattern[i]) << s);
  }
  return t & full(arity);
}

constexpr Table dual(Table t, int arity) { return complement(negate_inputs(t, arity), arity); }

}  // namespace bits
}  // namespace postlat

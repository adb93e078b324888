#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "postlat/bits.hpp"

namespace postlat {

/// An outer function for composition: (arity, packed table).
struct Outer {
  int arity;
  Table table;
};

/// Work limit for composition searches, counted in single substitutions.
/// POSTLAT_MAX_TRANSITIONS overrides the default of 4e9.
std::uint64_t default_transition_budget();

/// Enumerates the distinct k-ary tables f(g_1,...,g_n) for f in `outers` and
/// g_i in `inner` (repetition allowed). Substitutes one variable at a time and
/// merges identical partial states, so the work is bounded by the number of
/// distinct partial states rather than |inner|^n. `visit` may return false to
/// stop early; the function then returns false.
bool for_each_composition(const std::vector<Outer>& outers, const std::vector<Table>& inner, int k,
                          const std::function<bool(Table)>& visit, std::uint64_t* budget = nullptr);

std::vector<Table> composition_image(const std::vector<Outer>& outers, const std::vector<Table>& inner, int k,
                                     std::uint64_t* budget = nullptr);

/// Smallest set X of k-ary tables containing `seed` such that every
/// composition of an outer with inner functions from X ∪ extra lies in X.
std::vector<Table> subalgebra(const std::vector<Outer>& ops, std::vector<Table> seed, const std::vector<Table>& extra,
                              int k, std::uint64_t* budget = nullptr);

}  // namespace postlat

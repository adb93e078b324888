#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "postlat/truth_table.hpp"

namespace postlat {

inline constexpr int kInfinity = std::numeric_limits<int>::max();

enum class Family {
  Omega,
  Omega00,
  Omega01,
  Omega10,
  Omega11,
  Omega0x,  // Ω_0*
  Omegax1,  // Ω_*1
  OmegaEq,  // Ω_=
  Monotone,
  SelfDual,
  Linear,
  Conjunction,  // Λ
  Disjunction,  // V
  Unary,        // Ω^(1)
  Reflexive,    // R
  Antimonotone,
  W,
  U,
  B,
  D,
};

/// A single named class. For the W, U, B and D families `k` is the parameter
/// (k >= 2, or kInfinity); it is ignored otherwise.
struct ClassId {
  Family family = Family::Omega;
  int k = 0;

  friend bool operator==(const ClassId&, const ClassId&) = default;
};

/// Accepts the symbolic names (Ω_=, W^3, B^∞, Λ, Ω^(1)) and ASCII spellings
/// (Omega_=, W^3, B^inf, Lambda, Omega^(1), antimonotone).
ClassId parse_class_id(std::string_view name);
std::string to_string(const ClassId& id);

bool predicate(const TruthTable& f, const ClassId& id);
bool predicate(const TruthTable& f, std::string_view name);

/// Same as predicate() on a packed table of arity <= 6.
bool holds(Table t, int arity, const ClassId& id);

/// Least number r >= 1 of rows whose bitwise OR is the all-ones mask of width
/// n, or kInfinity if no such selection exists. Values above `limit` may be
/// reported as limit + 1.
int min_cover(const std::vector<std::uint32_t>& rows, int n, int limit = kInfinity);

/// Largest k such that f is in W^k (1 when f is not in W^2), kInfinity for W^∞.
int w_depth(const TruthTable& f);
int u_depth(const TruthTable& f);

}  // namespace postlat

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "postlat/function_class.hpp"
#include "postlat/predicates.hpp"
#include "postlat/truth_table.hpp"

namespace postlat {

/// An intersection of named classes, e.g. "B^2∩W^3", "R_11", "W^3_=", "L_00".
/// A suffix _00, _01, _10, _11, _0*, _*1 or _= intersects with that Ω class.
struct ClassSpec {
  std::vector<ClassId> parts;

  static ClassSpec parse(std::string_view name);
  std::string to_string() const;
  bool contains(const TruthTable& f) const;
  bool holds(Table t, int arity) const;
  ClassSpec dual() const;
};

bool named_class_membership(const TruthTable& f, std::string_view name);

/// The members of arity <= N of a named class. Arities up to 4 are filtered
/// exhaustively; arities 5 and 6 are generated from a zero-set search (W, B
/// and dual families), the ANF (L) or explicit forms (Λ, V, Ω^(1)).
FunctionClass fragment(const ClassSpec& spec, int max_arity);
FunctionClass fragment(std::string_view name, int max_arity);

struct CloneSignature {
  bool preserves_0 = true;
  bool preserves_1 = true;
  bool monotone = true;
  bool selfdual = true;
  bool linear = true;
  bool conjunctive = true;  // inside Λ
  bool disjunctive = true;  // inside V
  bool essentially_unary = true;
  /// Largest k <= k_max with every generator in W^k (1: not in W^2), or kInfinity.
  int w_depth = kInfinity;
  int u_depth = kInfinity;
  /// Depth is at least k_max but the clone is not inside W^∞ (resp. U^∞).
  bool w_saturated = false;
  bool u_saturated = false;
  std::vector<std::string> unary_content;  // subset of 0, 1, id, ¬

  friend bool operator==(const CloneSignature&, const CloneSignature&) = default;
};

struct Classification {
  CloneSignature signature;
  /// Post lattice label, or "intersection" when the clone has no label.
  std::string name;
  bool named = false;
};

Classification classify_clone(const std::vector<TruthTable>& generators, int k_max = 8);
std::string describe(const CloneSignature& s);
/// Unary members of the clone generated by S.
std::vector<std::string> unary_content(const std::vector<TruthTable>& generators);

struct UnaryClass {
  std::vector<std::string> content;
  FunctionClass cls;
};

/// The composition-closed classes among the 16 minor-closed subsets of {0,1,id,¬}.
std::vector<UnaryClass> unary_idempotent_enumeration();

/// A 0/1 matrix with at most k rows, stored as its distinct column values
/// (row r is bit r).
struct SkeletonMatrix {
  int rows = 0;
  std::vector<std::uint32_t> columns;

  friend bool operator==(const SkeletonMatrix&, const SkeletonMatrix&) = default;
  friend auto operator<=>(const SkeletonMatrix&, const SkeletonMatrix&) = default;
};

struct Skeleton {
  int k = 2;
  std::vector<SkeletonMatrix> matrices;

  std::uint64_t hash() const;
  std::string hash_label() const;
  friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

/// Canonical form: columns sorted and deduplicated, rows permuted to make
/// the column list lexicographically smallest.
SkeletonMatrix canonical_matrix(const std::vector<std::uint32_t>& rows, int columns);
/// Matrices of at most k zero rows over all members of arity <= N, plus the
/// empty matrix for nonempty K. Complete once N >= 2^k.
Skeleton skeleton_of(const FunctionClass& k_class, int k);

bool is_minor_closed(const FunctionClass& k_class);
/// Minor-closed and closed under Z_∞ at the bound.
bool is_sqsubseteq_ideal(const FunctionClass& k_class);

}  // namespace postlat

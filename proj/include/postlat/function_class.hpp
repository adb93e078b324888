#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "postlat/truth_table.hpp"

namespace postlat {

inline constexpr int kDefaultBound = 4;
inline constexpr int kMaxBound = 6;

/// A class of Boolean functions restricted to arity <= N. Arity k holds every
/// k-ary table whose function belongs to the class, so each member appears
/// with all variable orders and all dummy extensions up to N.
class FunctionClass {
 public:
  explicit FunctionClass(int max_arity = kDefaultBound);

  /// Takes per-arity table lists that already satisfy the invariants;
  /// only sorts and deduplicates.
  static FunctionClass from_levels(int max_arity, std::vector<std::vector<Table>> levels);
  /// Closes the given functions under equivalence: variable permutation,
  /// adding and deleting dummy variables. Functions whose essential arity
  /// exceeds N are rejected.
  static FunctionClass from_functions(int max_arity, const std::vector<TruthTable>& functions);
  /// Exhaustive filter of all tables of arity <= N; only feasible for N <= 4.
  static FunctionClass from_filter(int max_arity, const std::function<bool(Table, int)>& keep);

  int max_arity() const { return max_arity_; }
  const std::vector<Table>& level(int arity) const { return levels_.at(arity); }
  const std::vector<std::vector<Table>>& levels() const { return levels_; }

  bool contains(Table t, int arity) const;
  /// Membership of f up to equivalence; f may have arity above N if it has
  /// at most N essential variables.
  bool contains(const TruthTable& f) const;
  bool empty() const;
  std::size_t size() const;

  /// One representative per equivalence class: reduced, permutation-minimal.
  std::vector<TruthTable> canonical_members() const;
  /// Permutation-minimal tables at the given arity whose variables are all essential.
  std::vector<Table> essential_representatives(int arity) const;

  bool subset_of(const FunctionClass& other) const;
  FunctionClass intersect(const FunctionClass& other) const;
  FunctionClass unite(const FunctionClass& other) const;
  FunctionClass restrict_to(int max_arity) const;
  FunctionClass dual() const;

  std::string summary() const;

  friend bool operator==(const FunctionClass&, const FunctionClass&) = default;

 private:
  int max_arity_;
  std::vector<std::vector<Table>> levels_;
};

/// All tables at `arity` equivalent to the reduced function `reduced`.
std::vector<Table> equivalence_orbit(Table reduced, int essential, int arity);

int essential_count(Table t, int arity);
/// Deletes the inessential variables of a packed table.
Table reduce_word(Table t, int arity, int* essential);

/// Functions of the class at `arity` together with their equivalence class
/// members at every arity <= N; the building block for normalizing results.
void add_with_equivalents(std::vector<std::vector<Table>>& levels, Table t, int arity);

FunctionClass projections(int max_arity);
FunctionClass all_functions(int max_arity);

/// Class file: "max_arity N" line, then one literal per line; '#' comments.
std::string write_class_file(const FunctionClass& k, const std::vector<std::string>& header_comments = {});
FunctionClass read_class_file(const std::string& text);

}  // namespace postlat

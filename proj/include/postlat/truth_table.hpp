#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "postlat/bits.hpp"

namespace postlat {

inline constexpr int kMaxArity = 16;

/// A point of {0,1}^n given coordinate-wise; entry i is the value of x_{i+1}.
using BitTuple = std::vector<std::uint8_t>;

/// Boolean function of explicit arity stored as its full table. Bit p of the
/// table is f(a) where p = sum a_i 2^(i-1).
class TruthTable {
 public:
  TruthTable() : TruthTable(0) {}
  explicit TruthTable(int arity);

  static TruthTable from_word(int arity, Table word);
  static TruthTable constant(int arity, bool value);
  /// x_i as an n-ary function, i is 1-based.
  static TruthTable projection(int arity, int i);
  /// Parses "n:HEX"; any digit count is accepted as long as the value fits.
  static TruthTable parse(std::string_view literal);
  static TruthTable from_points(int arity, const std::function<bool(std::uint32_t)>& f);

  int arity() const { return arity_; }
  std::uint32_t size() const { return std::uint32_t{1} << arity_; }
  bool bit(std::uint32_t point) const { return (words_[point >> 6] >> (point & 63)) & 1u; }
  void set_bit(std::uint32_t point, bool value);
  /// The packed table; only valid for arity <= 6.
  Table word() const;
  const std::vector<Table>& words() const { return words_; }

  std::string to_string() const;
  std::size_t count_ones() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;
  /// Orders by arity, then numerically by table value.
  friend bool operator<(const TruthTable& a, const TruthTable& b);

 private:
  int arity_;
  std::vector<Table> words_;
};

struct TruthTableHash {
  std::size_t operator()(const TruthTable& t) const;
};

/// sigma maps variable i of the source (position i-1 of `map`) to the target
/// variable map[i-1]; entries are 1-based.
struct MinorMap {
  int source_arity = 0;
  int target_arity = 0;
  std::vector<int> map;
};

std::uint32_t point_of(const BitTuple& a);
BitTuple tuple_of(std::uint32_t point, int arity);

bool evaluate(const TruthTable& f, const BitTuple& a);
TruthTable apply_minor(const TruthTable& f, const MinorMap& sigma);

/// All minors of f with target arity <= max_target_arity. Each result is the
/// permutation-minimal table of its arity; dummy variables are kept.
std::vector<TruthTable> minors(const TruthTable& f, int max_target_arity);

bool is_essential(const TruthTable& f, int i);
std::vector<int> essential_variables(const TruthTable& f);
/// Deletes inessential variables, keeping the order of the remaining ones.
TruthTable reduce(const TruthTable& f);
TruthTable add_dummies(const TruthTable& f, int arity);
TruthTable swap_variables(const TruthTable& f, int i, int j);
/// Numerically smallest table over all permutations of the variables.
TruthTable permutation_min(const TruthTable& f);
TruthTable canonicalize(const TruthTable& f);

TruthTable compose(const TruthTable& f, const std::vector<TruthTable>& gs);

std::vector<BitTuple> zero_set(const TruthTable& f);
std::vector<std::uint32_t> zero_points(const TruthTable& f);

TruthTable negate(const TruthTable& f);
TruthTable dual(const TruthTable& f);

/// Monomials as variable masks (bit i-1 for x_i); the empty mask is the constant 1.
std::vector<std::uint32_t> anf(const TruthTable& f);
TruthTable from_anf(int arity, const std::vector<std::uint32_t>& monomials);
std::string anf_to_string(const std::vector<std::uint32_t>& monomials);

TruthTable w_k(int k);
TruthTable v_j(int j);
TruthTable at_most_one_one(int l);
TruthTable majority();
TruthTable minority();
TruthTable two_thirds_minority();

}  // namespace postlat

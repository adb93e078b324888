#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "postlat/function_class.hpp"
#include "postlat/truth_table.hpp"

namespace postlat {

inline constexpr int kMaxRelationArity = 64;

/// Bit r of a tuple is its r-th entry.
using Tuple = std::uint64_t;

struct Relation {
  int arity = 0;
  std::vector<Tuple> tuples;  // sorted, unique

  static Relation from_tuples(int arity, std::vector<Tuple> tuples);
  static Relation from_bit_tuples(int arity, const std::vector<BitTuple>& tuples);
  /// {0,1}^m without the all-zero tuple.
  static Relation nonzero(int arity);
  /// {0,1}^m without the all-one tuple.
  static Relation nonone(int arity);
  static Relation all(int arity);

  bool contains(Tuple t) const;
  std::size_t size() const { return tuples.size(); }
  friend bool operator==(const Relation&, const Relation&) = default;
};

std::string tuple_to_string(Tuple t, int arity);

class TupleMatrix {
 public:
  TupleMatrix(int rows, int cols);
  static TupleMatrix from_columns(int rows, const std::vector<Tuple>& columns);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, bool v) { entries_[static_cast<std::size_t>(r) * cols_ + c] = v; }
  Tuple column(int c) const;
  /// Row r as a point of {0,1}^cols (column c is bit c).
  std::uint32_t row_point(int r) const;
  bool is_p_matrix(const Relation& p) const;
  std::string to_string() const;

  friend bool operator==(const TupleMatrix&, const TupleMatrix&) = default;

 private:
  int rows_, cols_;
  std::vector<std::uint8_t> entries_;
};

struct Constraint {
  Relation p;
  Relation q;

  Constraint(Relation p_, Relation q_);
};

struct SatisfactionOptions {
  /// Use the zero-set search when Q is {0,1}^m without the zero tuple.
  bool zero_set_shortcut = false;
  /// Matrices allowed before a resource error; 0 reads POSTLAT_MAX_MATRICES or uses 1e8.
  std::uint64_t max_matrices = 0;
};

std::uint64_t default_matrix_cap();

/// First P-matrix (in lexicographic order of column choices) that f maps
/// outside Q, or nothing if f satisfies the constraint.
std::optional<TupleMatrix> find_violation(const TruthTable& f, const Relation& p, const Relation& q,
                                          const SatisfactionOptions& options = {});
bool satisfies(const TruthTable& f, const Constraint& c, const SatisfactionOptions& options = {});
bool strongly_satisfies(const TruthTable& f, const Constraint& c, const SatisfactionOptions& options = {});

/// (P_n, Q_n): P_n holds the columns of the 2^n x n matrix of all n-tuples,
/// Q_n the tables of the n-ary members of K.
Constraint canonical_constraints(const FunctionClass& k_class, int n);

TupleMatrix build_J(int n);
TruthTable build_f(int n);
Relation build_P(int n);

struct GadgetResult {
  bool preserves_q = false;  // f_n preserves {0,1}^m \ {0}
  bool satisfies_pq = false;  // f_n satisfies (P_m, {0,1}^m \ {0})
  std::uint64_t matrices = 0;
  bool holds() const { return preserves_q && satisfies_pq; }
};

GadgetResult gadget_evaluate(int m, int n);
bool gadget_claim(int m, int n);

enum class HatOperation { Implication, Sum };

struct OuterWitness {
  TruthTable outer;
  std::vector<TruthTable> inner;
};

/// For k-ary h, the k^2 inner functions op(x_i, x_j) and an outer function
/// defined by f((op(a_i, a_j))_{i,j}) = h(a), zero elsewhere. Nothing is
/// returned when two points a with equal inner values disagree under h.
std::optional<OuterWitness> outer_witness(const TruthTable& h, HatOperation op);

/// Relation file: "arity m" line, then one bit string of length m per line.
Relation read_relation_file(const std::string& text);
std::string write_relation_file(const Relation& r);

}  // namespace postlat

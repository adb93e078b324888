#pragma once

#include <vector>

#include "postlat/composition.hpp"
#include "postlat/function_class.hpp"
#include "postlat/predicates.hpp"
#include "postlat/truth_table.hpp"

namespace postlat {

enum class ClosureKind { Equational, Clone, Idempotent, Iterative };

struct ClosureResult {
  FunctionClass cls;
  /// False when two independent bounded computations of the class disagree.
  bool exact = true;
};

FunctionClass equational_closure(const std::vector<TruthTable>& generators, int max_arity);

/// {f(g_1,...,g_n) : f in A, g_i in B of one common arity}, outer arity <= N.
FunctionClass compose_classes(const FunctionClass& a, const FunctionClass& b);

FunctionClass clone_closure(const std::vector<TruthTable>& generators, int max_arity);
/// Least composition-closed equational class containing the generators.
/// Cross-checked against [S]∘S computed at the same bound.
ClosureResult idempotent_closure(const std::vector<TruthTable>& generators, int max_arity);
FunctionClass iterative_closure(const std::vector<TruthTable>& generators, int max_arity);
ClosureResult closure(ClosureKind kind, const std::vector<TruthTable>& generators, int max_arity);

/// Functions of arity <= N each of whose at most k-element zero subsets lies
/// in the zero set of a same-arity member of K; k = kInfinity uses the whole
/// zero set.
FunctionClass z_operator(const FunctionClass& k_class, int k);

/// Builds f' = (OR_{i,j} g(x_i,..,x_i,y_j,..,y_j)) -> g(x,y) where the x
/// variables are the positions with a_i = 0, and checks that f' is g with
/// the zero at `a` removed.
TruthTable lift_zero_removal(const TruthTable& g, const BitTuple& a);

bool is_composition_closed(const FunctionClass& k_class);

/// Orbit representatives with all variables essential; constants are
/// returned as unary functions with a dummy variable.
std::vector<Outer> outer_representatives(const FunctionClass& k_class);

}  // namespace postlat

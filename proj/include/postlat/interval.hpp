#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "postlat/function_class.hpp"

namespace postlat {

struct IntervalNode {
  /// Catalog name, or "K#" followed by the skeleton hash.
  std::string label;
  FunctionClass cls;
  /// Skeleton hash, set for W^k and U^k intervals only.
  std::string skeleton;
  /// K∘K ⊆ K checked at bound `checked_at`.
  bool composition_closed = false;
  int checked_at = 0;
  /// The clone generated by K equals the clone's fragment at `generated_at`;
  /// generated_at is 0 when no generator of the clone fits the bound.
  bool generates_clone = false;
  int generated_at = 0;
  /// For W^k intervals: B^k ⊆ K ⊆ W^k, K minor-closed and Z_k-closed at the
  /// full bound, which places K in the interval. Always true for closed forms.
  bool certified = false;

  bool verified() const { return composition_closed && generates_clone && certified; }
  /// No check that was run came out false.
  bool consistent() const { return composition_closed && certified && (generates_clone || generated_at == 0); }
};

struct IntervalDiagram {
  std::string clone;
  int max_arity = 0;
  /// False for W^k and U^k, where the nodes are a lower bound on the interval.
  bool complete = true;
  std::vector<IntervalNode> nodes;  // by decreasing size, then label
  /// Covering pairs (upper, lower) as node indices.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

/// Accepts Ω, Ω_*1, Ω_0*, L, L_0*, L_*1 (and the ASCII Omega spellings),
/// W^k and U^k, or W and U with the parameter given by `k`.
IntervalDiagram interval_explore(std::string_view clone, int max_arity, int k = 2);

std::vector<std::pair<std::size_t, std::size_t>> hasse_covers(const std::vector<FunctionClass>& classes);

std::string export_dot(const IntervalDiagram& diagram);

}  // namespace postlat

#pragma once

#include <vector>

#include "core/word.hpp"

namespace permdiam {

/// Connected components of the action graph; union is all points, each
/// orbit sorted ascending, orbits ordered by least point.
std::vector<std::vector<Point>> orbit_partition(const GenSet& X);
std::vector<std::vector<Point>> orbit_partition(const std::vector<Perm>& gens,
                                                std::size_t degree);

bool is_transitive(const std::vector<Perm>& gens, std::size_t degree);

/// Finest block system in which a and b share a block (Atkinson seed-pair
/// union-find). Requires a transitive action. Blocks sorted, system sorted.
std::vector<std::vector<Point>> minimal_block_closure(const std::vector<Perm>& gens,
                                                      std::size_t degree, Point a, Point b);

enum class ActionKind { Intransitive, Imprimitive, Primitive };

struct ActionClassification {
  ActionKind kind;
  /// Intransitive: the orbit partition. Imprimitive: the lexicographically
  /// least minimal nontrivial block system. Primitive: empty.
  std::vector<std::vector<Point>> partition;
};

/// Transitivity/primitivity classification by the seed-pair method: every
/// minimal nontrivial block system arises as the closure of a pair (0, b),
/// so primitivity holds iff every seed pair yields the trivial system.
ActionClassification classify_action(const GenSet& X);
ActionClassification classify_action(const std::vector<Perm>& gens, std::size_t degree);

}  // namespace permdiam

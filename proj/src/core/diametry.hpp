#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/budget.hpp"
#include "core/group.hpp"
#include "core/word.hpp"

namespace permdiam {

/// Exact word length of g over X (BFS from the identity over right
/// multiplication by X and inverses). reachable=false encodes the infinite
/// length of elements outside <X>; it is a result, not an error.
struct LengthResult {
  bool reachable = false;
  std::uint64_t length = 0;
  Word witness;  // over X's labels; empty when unreachable
};

LengthResult length_bfs(const GenSet& X, const Perm& g, const Budget& budget);

struct DiameterResult {
  std::uint64_t diameter = 0;
  Perm witness;               // least element at maximal distance
  std::uint64_t group_order;  // |<X>|, as enumerated by the search
};

/// Exact diam(<X>, X) by full ball expansion.
DiameterResult diameter(const GenSet& X, const Budget& budget);

/// Ball sizes gamma_X(0..radius). Saturation is detected when the frontier
/// empties; from then on the counts stay at the group order.
struct BallProfile {
  std::vector<std::uint64_t> counts;
  bool saturated = false;
  std::optional<std::uint64_t> diameter_if_saturated;
};

BallProfile growth(const GenSet& X, std::uint64_t radius, const Budget& budget);

/// Smallest r >= 0 with H contained in B_X(r)*K, by BFS over the coset
/// space of K (canonical representatives through K's chain).
/// Requires K <= H <= <X>.
std::uint64_t relative_length(const GenSet& X, const PermGroup& H, const PermGroup& K,
                              const Budget& budget);

struct WorstCaseResult {
  std::uint64_t diameter = 0;
  GenSet extremal{0};
  std::uint64_t sets_examined = 0;
};

/// max over generating sets X of diam(G, X). A superset of a generating set
/// never increases the diameter (extra generators only add Cayley edges), so
/// the maximum is attained on an irredundant set; the search walks sorted
/// element sequences in which each element lies outside the subgroup
/// generated by its predecessors (every irredundant set appears this way),
/// stops extending once the set generates, and dedupes complete sets by a
/// cycle-type signature plus an exact minimal-conjugate form.
WorstCaseResult worst_case_diameter(const PermGroup& G, const Budget& budget);

}  // namespace permdiam

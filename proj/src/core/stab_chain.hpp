#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "core/bigint.hpp"
#include "core/perm.hpp"

namespace permdiam {

struct ChainLevel {
  Point base{};
  std::vector<Perm> gens;          // strong generators fixing all earlier base points
  std::vector<Point> orbit;        // basic orbit of base under gens, BFS order
  std::vector<std::int32_t> pos;   // point -> orbit index, -1 if outside
  std::vector<Perm> transversal;   // transversal[i] maps base to orbit[i]
};

/// Deterministic base-and-strong-generating-set structure (Schreier--Sims).
/// Base points are chosen greedily as the first moved point, after any forced
/// prefix. A forced prefix makes level_gens(prefix length) the pointwise
/// stabilizer of the prefix, which is how kernels of actions are computed.
class StabChain {
 public:
  StabChain(std::size_t degree, const std::vector<Perm>& generators,
            const std::vector<Point>& forced_prefix = {});

  std::size_t degree() const { return degree_; }
  const std::vector<ChainLevel>& levels() const { return levels_; }
  std::size_t base_length() const { return levels_.size(); }

  /// Product of basic orbit lengths.
  BigInt order() const;

  bool contains(const Perm& p) const;

  /// Strong generators of the subgroup fixing base[0..k) pointwise.
  std::vector<Perm> level_gens(std::size_t k) const;

  /// Visits every group element exactly once, in a fixed order.
  /// Throws CapacityError if the group order exceeds cap.
  void for_each_element(const std::function<void(const Perm&)>& visit,
                        std::uint64_t cap) const;

 private:
  std::pair<Perm, std::size_t> sift(Perm p, std::size_t from) const;
  void recompute_orbit(std::size_t i);
  void distribute(const Perm& g);
  void close();

  std::size_t degree_;
  std::vector<ChainLevel> levels_;
  std::vector<bool> dirty_;
};

}  // namespace permdiam

#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "core/bigint.hpp"
#include "core/stab_chain.hpp"
#include "core/word.hpp"

namespace permdiam {

/// A permutation group given by a labelled generating set, with a lazily
/// built stabilizer chain. Immutable after construction; copies share the
/// chain cache, so the chain is built at most once per group.
class PermGroup {
 public:
  explicit PermGroup(GenSet gens);
  PermGroup(std::size_t degree, const std::vector<Perm>& gens,
            const std::string& label_prefix = "g");

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const;
  const GenSet& gens() const;
  std::vector<Perm> gen_perms() const;

  const StabChain& chain() const;
  BigInt order() const;
  bool contains(const Perm& p) const;
  bool is_trivial() const;
  bool is_abelian() const;

  /// True if every generator of H lies in this group.
  bool contains_group(const PermGroup& H) const;
  bool same_group_as(const PermGroup& H) const;

  /// All elements in deterministic chain order; throws CapacityError
  /// past cap.
  std::vector<Perm> elements(std::uint64_t cap) const;
  void for_each_element(const std::function<void(const Perm&)>& visit,
                        std::uint64_t cap) const;

  /// Generators of the subgroup fixing the given points pointwise
  /// (computed from a fresh chain with those points as a forced base
  /// prefix; the cached chain is untouched).
  std::vector<Perm> pointwise_stabilizer_gens(const std::vector<Point>& pts) const;

  /// Deterministic rendering of the generating set, sorted; used for
  /// canonical tie-breaks.
  std::string sorted_gen_rendering() const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// Group generated by the union of the two generating sets (same degree).
PermGroup join(const PermGroup& A, const PermGroup& B);

}  // namespace permdiam

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/group.hpp"
#include "core/simple_table.hpp"

namespace permdiam {

inline constexpr std::uint64_t kDefaultEnumCap = 10'000'000;

/// Smallest normal subgroup of G containing the seeds (standard closure
/// loop: add conjugates by generators until stable).
/// Throws DomainError if a seed lies outside G.
PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& seeds);

enum class VerbalKind { Derived, Gamma3 };

/// Derived: normal closure of pairwise generator commutators.
/// Gamma3: normal closure of triple commutators of generators.
PermGroup verbal_subgroup(const PermGroup& G, VerbalKind kind);

/// [H, G] for H <= G, as the normal closure of generator commutators.
PermGroup commutator_with_group(const PermGroup& G, const PermGroup& H);

bool is_normal_in(const PermGroup& N, const PermGroup& G);
bool is_soluble(const PermGroup& G);
bool is_nilpotent(const PermGroup& G);
bool is_perfect(const PermGroup& G);

struct ConjClass {
  Perm rep;  // least element of the class
  std::uint64_t size;
};

/// Full partition into conjugacy classes, ordered by least representative.
/// Requires order(G) <= cap.
std::vector<ConjClass> conjugacy_classes(const PermGroup& G, std::uint64_t cap);

/// Every normal subgroup of G, as the join-closure of normal closures of
/// single conjugacy classes. Sorted by (order, generator rendering).
/// Normality of each result is re-verified. Requires order(G) <= cap.
std::vector<PermGroup> normal_lattice(const PermGroup& G, std::uint64_t cap);

/// The unique canonical representative of the right coset K*g, computed by
/// minimizing base images level by level through K's stabilizer chain.
/// Works for any subgroup K (normality not required).
Perm canonical_coset_rep(const StabChain& kchain, Perm g);

/// Action of G on the right cosets of a normal subgroup N, with canonical
/// coset representatives computed through N's stabilizer chain.
class QuotientAction {
 public:
  QuotientAction(const PermGroup& G, const PermGroup& N, std::uint64_t cap);

  const PermGroup& quotient() const { return quotient_; }
  std::size_t index() const { return reps_.size(); }

  /// The unique canonical representative of the coset N*g.
  Perm canonical_rep(const Perm& g) const;
  std::size_t coset_of(const Perm& g) const;
  const Perm& rep(std::size_t i) const { return reps_[i]; }

  /// Permutation induced by g on the coset space.
  Perm image_of(const Perm& g) const;

 private:
  PermGroup N_;
  PermGroup quotient_{GenSet(1)};
  std::vector<Perm> reps_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
};

QuotientAction quotient_action(const PermGroup& G, const PermGroup& N, std::uint64_t cap);

/// Kernel of the homomorphism G -> Sym(m) defined on generators, computed
/// from a stabilizer chain of the augmented action with the m extra points
/// forced to the front of the base.
PermGroup action_kernel(const PermGroup& G, const std::vector<Perm>& images, std::size_t m);

/// p restricted to a sorted invariant point set, reindexed to 0..|domain|-1.
Perm restrict_perm(const Perm& p, const std::vector<Point>& domain);
PermGroup restriction(const PermGroup& G, const std::vector<Point>& domain);

/// exp(G) = lcm of element orders. Requires order(G) <= cap.
std::uint64_t exponent(const PermGroup& G, std::uint64_t cap);

/// exp(N / N'), computed from generator image orders without enumerating
/// the quotient: exp = lcm over generators g of min { e | ord(g) : g^e in N' }.
std::uint64_t abelianization_exponent(const PermGroup& N);

/// Invariant-factor decomposition d_1 | d_2 | ... | d_k of an abelian group,
/// from the primary decomposition of the element-order structure.
/// Throws DomainError on nonabelian input.
std::vector<std::uint64_t> abelian_invariants(const PermGroup& A, std::uint64_t cap);

enum class FactorKind { Cyclic, Recognized, Unrecognized };

struct FactorDescriptor {
  BigInt order;
  FactorKind kind = FactorKind::Unrecognized;
  std::string name = "?";
  std::optional<std::uint64_t> mu;    // minimal faithful degree when known
  std::optional<std::uint64_t> rank;  // rank convention, when recognized
};

struct Series {
  enum class Kind { Derived, Gamma3Mixed, Composition, ChiefLike };
  Kind kind;
  std::vector<PermGroup> terms;  // strictly descending; last term trivial
};

Series derived_series(const PermGroup& G);

/// Descending series whose steps are gamma3 while the current term is
/// nonabelian (class <= 2 quotients) and the derived subgroup for the final
/// abelian step. Soluble input only.
Series gamma3_mixed_series(const PermGroup& G);

/// Maximal chain of subgroups normal in G, refined through the lattice.
Series chief_like_series(const PermGroup& G, std::uint64_t cap);

/// Identifies a simple group: prime order -> cyclic; otherwise matched by
/// (order, element-order set) against the recognition table; otherwise
/// Unrecognized. Verifies simplicity (DomainError if not simple).
FactorDescriptor identify_factor(const PermGroup& T, std::uint64_t cap);

/// Composition factor multiset. Uses the exact lattice refinement within the
/// enumeration cap; beyond it, peels structure that needs no enumeration
/// (orbit restrictions, block-action kernels, derived quotients, natural
/// alternating/symmetric recognition by order). Unrecognizable pieces come
/// back as a single Unrecognized descriptor rather than a guess.
std::vector<FactorDescriptor> composition_factors(const PermGroup& G, std::uint64_t cap);

struct CompositionResult {
  std::optional<Series> series;  // present when the exact refinement ran
  std::vector<FactorDescriptor> factors;
};

/// Exact refinement when order(G) <= cap (maximal proper normal subgroup at
/// each step, largest order first, ties broken by generator rendering);
/// otherwise factors come from the structural path and no series is emitted.
CompositionResult composition_series(const PermGroup& G, std::uint64_t cap);

/// Sorted distinct element orders (enumeration under cap).
std::vector<std::uint64_t> distinct_element_orders(const PermGroup& G, std::uint64_t cap);

}  // namespace permdiam

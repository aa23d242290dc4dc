#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/budget.hpp"
#include "core/engine.hpp"
#include "core/word.hpp"

namespace permdiam {

struct BoundTag {
  std::string source;  // which lemma asserts the bound
  BigInt value = 0;
};

/// A generating set of a subgroup in which every generator carries a word
/// over an ambient generating set, together with a certified length bound.
/// The subgroup's GenSet labels coincide with the word labels.
struct CertifiedGenSet {
  std::string name = "X";
  PermGroup subgroup = PermGroup::trivial(1);
  GenSet ambient{1};
  std::vector<std::pair<std::string, Word>> words;
  std::uint64_t max_length = 0;
  BoundTag bound;

  std::map<std::string, Word> word_table() const;
};

/// X viewed as a certified generating set of <X> over itself (bound 1).
CertifiedGenSet identity_certificate(const GenSet& X, const std::string& name = "X");

struct LengthCertificate {
  Perm element;
  Word word;  // over the named generating set
  std::string genset_name = "X";
  std::optional<BoundTag> asserted_bound;
};

/// Evaluates the word and checks it reproduces the element within the
/// asserted bound.
bool certificate_valid(const LengthCertificate& cert, const GenSet& X);

/// Schreier generators of N normal in <X>, from the minimal-X-length coset
/// transversal T = B_X(diam(G/N)). Bound: 2 diam(G/N) + 1, with the coset
/// diameter computed exactly by coset BFS.
CertifiedGenSet schreier_generators(const GenSet& X, const PermGroup& N, const Budget& budget);

struct MilnorResult {
  CertifiedGenSet gens;      // certified generators of <Y^G>
  std::uint64_t iterations;  // the first k with <Z_k> = <Z_{k+1}>
};

/// Saturates seed words under conjugation by letters until the generated
/// subgroup stops growing (then it is normal and equals the normal closure).
/// Certifies iterations <= floor(log2 |N|) and lengths <= len(Y) + 2k.
MilnorResult milnor_stabilize(const GenSet& X, const std::vector<Word>& seeds,
                              const Budget& budget);

/// Commutator seeds of a certified generating set for N (normal in <X>):
/// the length-4 pairwise pattern for the derived subgroup or the length-10
/// triple pattern for gamma3, stabilized by milnor_stabilize. Bounds
/// 4 len + 2 floor(log2|N'|), resp. 10 len + 2 floor(log2|gamma3|).
CertifiedGenSet commutator_generators(const GenSet& X, const CertifiedGenSet& Y,
                                      VerbalKind kind, const Budget& budget);

/// Certified generating sets down the derived series, stopping at the
/// trivial term (or at a perfect term for insoluble groups, in which case
/// the last entry is that perfect term). Tower bound 4^i log2|G|.
std::vector<CertifiedGenSet> derived_tower(const GenSet& X, const Budget& budget);

/// Writes a as a product prod x^e over a greedily pruned irredundant subset
/// of Y (exponents solved by meet-in-the-middle), signed to the shorter
/// form. Word over Y's labels; bound exp(A) * floor(log2 |A|).
LengthCertificate abelian_solve(const CertifiedGenSet& Y, const Perm& a, const Budget& budget);

/// Peels g down the derived tower, solving each abelian quotient through
/// the recorded coset sections. Bound eps0 * 4^(L-1) * (log2|G|)^2.
LengthCertificate soluble_solve(const GenSet& X, const Perm& g, const Budget& budget);

struct SocleFactor {
  std::vector<Point> domain;  // sorted, pairwise disjoint across factors
  PermGroup N;                // designated minimal normal subgroup of the
                              // factor screen M_i = restriction to domain
};

struct CascadeResult {
  Perm element;  // nontrivial element of N_1 x ... x N_k
  LengthCertificate cert;
  std::uint64_t commutator_steps = 0;
};

/// Halving cascade for a subdirect product M on disjoint factor domains:
/// solve on half the indices, classify stray coordinates, solve there, and
/// couple with a conjugated commutator found inside B_X(m). Verifies the
/// minimal-normal and self-centralizing preconditions and the per-factor
/// seeds in B_X(r); certifies length <= 4 k^2 (r + 2m).
CascadeResult socle_cascade(const PermGroup& M, const std::vector<SocleFactor>& factors,
                            std::uint64_t r, std::uint64_t m, const Budget& budget);

/// Word synthesis in an internal direct product of nonabelian simple groups
/// on disjoint domains: per-factor killers from pair screens, doubling
/// commutators over coordinate subsets, and exact BFS over the resulting
/// conjugacy class (in place of a cited class-diameter bound). The result
/// is checked against 2000 n^3 r d when every factor is recognized.
LengthCertificate direct_product_solve(const GenSet& X, const Perm& target,
                                       const Budget& budget);

/// Chain rule: substitutes inner words for outer letters.
LengthCertificate compose_certificates(const LengthCertificate& outer,
                                       const CertifiedGenSet& inner);

}  // namespace permdiam

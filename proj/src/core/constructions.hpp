#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/group.hpp"

namespace permdiam {

PermGroup cyclic_group(std::size_t n);
PermGroup dihedral_group(std::size_t n);  // degree n (n >= 3), order 2n
PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
PermGroup elementary_abelian(std::uint64_t p, std::uint32_t k);  // degree p*k
PermGroup quaternion8();                                         // regular, degree 8
PermGroup sl23_degree8();                                        // SL(2,3) on F_3^2 \ 0
PermGroup agl1(std::uint64_t p);                                 // z -> az+b, degree p
PermGroup psl2(std::uint64_t p);                                 // on the projective line, degree p+1
PermGroup frobenius21();                                         // C7 : C3, degree 7
PermGroup symmetric_on_2subsets(std::size_t n);                  // degree n(n-1)/2

/// Direct product on the disjoint union of the factors' domains. Labels of
/// the right factor gain a prime when they collide.
PermGroup direct_product(const PermGroup& A, const PermGroup& B);

enum class WreathAction { Imprimitive, Product };

/// bottom wr top. Imprimitive: degree d*e with blocks of size d. Product:
/// degree d^e on tuples. Generators: bottom's on the first copy plus top's
/// when top is transitive (otherwise bottom generators on every copy).
PermGroup wreath(const PermGroup& bottom, const PermGroup& top, WreathAction action);

/// A5 wr (A5 wr (... )) with h factors; the top group always acts by its
/// natural (imprimitive for h > 1) action of degree 5^(h-1).
PermGroup iterated_wreath_a5(std::uint32_t h, WreathAction action);

/// G = V : A_n on p^(n-1) points, V the zero-sum (deleted permutation)
/// module over F_p, p prime not dividing n. Generating set: the translation
/// by v = (1,-1,0,...,0), labelled "v", plus coordinate A_n generators.
PermGroup affine_deleted_module(std::uint32_t n, std::uint64_t p);

/// Level-h congruence quotient of the first Grigorchuk group, generators
/// a,b,c,d on 2^h points (vertices read as binary strings, first letter
/// most significant).
PermGroup grigorchuk_level(std::uint32_t h);

/// Spinal-group data: rooted part A (with its level-1 action), directed
/// part B realized concretely on the disjoint union of the alpha-image
/// domains, a degree sequence prefix, and the (level, letter) -> coordinate
/// table selecting each alpha_{i,j} as the restriction of B to a coordinate.
struct SpinalSpec {
  PermGroup rooted = PermGroup::trivial(1);
  GenSet directed{0};
  std::vector<std::size_t> coord_offset;
  std::vector<std::size_t> coord_size;
  std::vector<std::size_t> degrees;             // d_1 .. d_H
  std::vector<std::vector<int>> alpha;          // alpha[i-2][j] = coordinate, -1 trivial
};

SpinalSpec grigorchuk_spec(std::uint32_t levels);

/// The mixed 2/5 example: A = C2, B = C2 x C2 x A5, degree sequence
/// 2,2,5,2,2,2,5,... (each 5 followed by three 2s), 3-periodic C2
/// projections on the binary levels and the natural A5 map on the others.
SpinalSpec mixed_spinal_spec(std::uint32_t levels);

/// Level-h congruence quotient of the spinal group, degree d_1 * ... * d_h.
/// Checks spherical transitivity of every used level.
PermGroup spinal_level(const SpinalSpec& spec, std::uint32_t h);

struct CorpusEntry {
  std::string label;
  PermGroup group;  // the action the label names
  PermGroup model;  // abstractly isomorphic group preferred for composition
                    // factor computations (often the same object)
};

/// Deterministic primitive test corpus: A_n and S_n natural (5 <= n <=
/// max_degree), C_p and AGL(1,p) for primes p <= max_degree, PSL(2,p) on
/// p+1 <= max_degree points (p <= 23), A5 wr A5 in product action if it
/// fits, and S_n on 2-subsets for n <= 10.
std::vector<CorpusEntry> primitive_corpus(std::size_t max_degree);

/// Transitive groups of order <= max_order (deterministic list).
std::vector<CorpusEntry> transitive_corpus(std::uint64_t max_order);

/// Soluble members of the test corpus with order <= max_order.
std::vector<CorpusEntry> soluble_corpus(std::uint64_t max_order);

struct AbelianEntry {
  std::string label;
  PermGroup group;
  std::vector<std::uint64_t> divisors;  // invariant factors d_1 | ... | d_k
};

/// One entry per isomorphism type of abelian group of order <= max_order,
/// built as direct products of cyclic groups on disjoint domains.
std::vector<AbelianEntry> abelian_groups_upto(std::uint64_t max_order);

/// Resolves corpus labels like "cyclic:6", "grigorchuk:h=4",
/// "wreath:A5^2:imprimitive", "affine:4:3", "psl2:7", "abelian:C2xC4".
PermGroup construct_by_label(const std::string& label);

std::vector<std::string> label_grammar_help();

}  // namespace permdiam

#include <algorithm>
#include <map>

#include "core/engine.hpp"
#include "core/errors.hpp"
#include "doctest.h"

using namespace permdiam;

namespace {

PermGroup s4() {
  return PermGroup(4, {parse_cycles("(0 1)", 4), parse_cycles("(0 1 2 3)", 4)});
}
PermGroup a5() {
  return PermGroup(5, {parse_cycles("(0 1 2 3 4)", 5), parse_cycles("(0 1 2)", 5)});
}

std::multiset<std::string> factor_names(const std::vector<FactorDescriptor>& fs) {
  std::multiset<std::string> out;
  for (const auto& f : fs) out.insert(f.name);
  return out;
}

}  // namespace

TEST_CASE("normal closure") {
  PermGroup G = s4();
  PermGroup N = normal_closure(G, {parse_cycles("(0 1 2)", 4)});
  CHECK(N.order() == 12);  // A4

  CHECK(normal_closure(G, {Perm(4)}).order() == 1);

  PermGroup A = a5();
  CHECK(normal_closure(A, {parse_cycles("(0 1 2)", 5)}).order() == 60);

  CHECK_THROWS_AS(normal_closure(A, {parse_cycles("(0 1)", 5)}), DomainError);

  // oracle: A4 is the unique order-12 subgroup of S4 = even permutations
  auto els = N.elements(100);
  for (const Perm& p : els) {
    std::size_t transpositions = 0;
    for (const auto& c : p.cycles()) transpositions += c.size() - 1;
    CHECK(transpositions % 2 == 0);
  }
}

TEST_CASE("verbal subgroups and series") {
  PermGroup G = s4();
  PermGroup d1 = verbal_subgroup(G, VerbalKind::Derived);
  CHECK(d1.order() == 12);
  PermGroup d2 = verbal_subgroup(d1, VerbalKind::Derived);
  CHECK(d2.order() == 4);
  PermGroup d3 = verbal_subgroup(d2, VerbalKind::Derived);
  CHECK(d3.order() == 1);

  PermGroup c6(6, {parse_cycles("(0 1 2 3 4 5)", 6)});
  CHECK(verbal_subgroup(c6, VerbalKind::Derived).order() == 1);

  PermGroup d4(4, {parse_cycles("(0 1 2 3)", 4), parse_cycles("(0 2)", 4)});
  CHECK(verbal_subgroup(d4, VerbalKind::Gamma3).order() == 1);
  CHECK(is_nilpotent(d4));
  CHECK_FALSE(is_nilpotent(G));
  CHECK(is_soluble(G));
  CHECK_FALSE(is_soluble(a5()));
  CHECK(is_perfect(a5()));

  Series ds = derived_series(G);
  REQUIRE(ds.terms.size() == 4);
  CHECK(ds.terms[1].order() == 12);
  CHECK(ds.terms[2].order() == 4);
  CHECK(ds.terms[3].order() == 1);

  Series gs = gamma3_mixed_series(d4);
  CHECK(gs.terms.back().is_trivial());
  CHECK(gs.terms.size() == 2);  // D4 has class 2
}

TEST_CASE("conjugacy classes") {
  auto cls = conjugacy_classes(a5(), 1000);
  std::multiset<std::uint64_t> sizes;
  std::uint64_t total = 0;
  for (const auto& c : cls) {
    sizes.insert(c.size);
    total += c.size;
  }
  CHECK(total == 60);
  CHECK(sizes == std::multiset<std::uint64_t>{1, 12, 12, 15, 20});

  PermGroup c3(3, {parse_cycles("(0 1 2)", 3)});
  CHECK(conjugacy_classes(c3, 10).size() == 3);

  PermGroup s3(3, {parse_cycles("(0 1)", 3), parse_cycles("(1 2)", 3)});
  auto s3cls = conjugacy_classes(s3, 10);
  std::multiset<std::uint64_t> s3sizes;
  for (const auto& c : s3cls) s3sizes.insert(c.size);
  CHECK(s3sizes == std::multiset<std::uint64_t>{1, 2, 3});

  CHECK_THROWS_AS(conjugacy_classes(a5(), 10), CapacityError);
}

TEST_CASE("normal lattice") {
  auto lat = normal_lattice(s4(), 1000);
  REQUIRE(lat.size() == 4);
  CHECK(lat[0].order() == 1);
  CHECK(lat[1].order() == 4);
  CHECK(lat[2].order() == 12);
  CHECK(lat[3].order() == 24);

  PermGroup c6(6, {parse_cycles("(0 1 2 3 4 5)", 6)});
  auto lat6 = normal_lattice(c6, 100);
  REQUIRE(lat6.size() == 4);
  CHECK(lat6[1].order() == 2);
  CHECK(lat6[2].order() == 3);

  CHECK(normal_lattice(a5(), 1000).size() == 2);
}

TEST_CASE("quotient action") {
  PermGroup G = s4();
  PermGroup A4 = normal_closure(G, {parse_cycles("(0 1 2)", 4)});
  QuotientAction q1(G, A4, 1000);
  CHECK(q1.quotient().degree() == 2);
  CHECK(q1.quotient().order() == 2);

  PermGroup V4 = normal_closure(G, {parse_cycles("(0 1)(2 3)", 4)});
  REQUIRE(V4.order() == 4);
  QuotientAction q2(G, V4, 1000);
  CHECK(q2.quotient().degree() == 6);
  CHECK(q2.quotient().order() == 6);

  QuotientAction q3(G, G, 1000);
  CHECK(q3.quotient().degree() == 1);
  CHECK(q3.quotient().order() == 1);

  // the coset map is a homomorphism onto the quotient generators
  for (const auto& [label, x] : G.gens().entries()) {
    CHECK(q2.image_of(x) == *q2.quotient().gens().find(label));
  }

  // |G/N| = |G| / |N|
  CHECK(q2.quotient().order() * V4.order() == G.order());

  PermGroup C2(4, {parse_cycles("(0 1)", 4)});
  CHECK_THROWS_AS(QuotientAction(G, C2, 1000), DomainError);
}

TEST_CASE("action kernel via forced-prefix chain") {
  // S4 acting on the three V4-pairs: kernel is V4
  PermGroup G = s4();
  std::vector<Perm> images;
  // pairs: 0|12, 1|02, 2|03... use the classical S4 -> S3 on the 3 partitions
  // of {0,1,2,3} into two pairs: {01|23, 02|13, 03|12}
  auto pair_index = [](const Perm& g) {
    // image of partition i under g; partitions listed as point pairs
    static const int pairs[3][2][2] = {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
    std::vector<Point> img(3);
    for (int i = 0; i < 3; ++i) {
      int a = pairs[i][0][0], b = pairs[i][0][1];
      int ga = g(static_cast<Point>(a)), gb = g(static_cast<Point>(b));
      for (int j = 0; j < 3; ++j) {
        auto in_pair = [&](int x, int k) {
          return x == pairs[j][k][0] || x == pairs[j][k][1];
        };
        if ((in_pair(ga, 0) && in_pair(gb, 0)) || (in_pair(ga, 1) && in_pair(gb, 1)))
          img[i] = static_cast<Point>(j);
      }
    }
    return Perm::from_images(img);
  };
  for (const Perm& g : G.gen_perms()) images.push_back(pair_index(g));
  PermGroup K = action_kernel(G, images, 3);
  CHECK(K.order() == 4);
  CHECK(is_normal_in(K, G));
}

TEST_CASE("abelian invariants and exponents") {
  PermGroup v4(4, {parse_cycles("(0 1)", 4), parse_cycles("(2 3)", 4)});
  CHECK(abelian_invariants(v4, 100) == std::vector<std::uint64_t>{2, 2});

  PermGroup c6(6, {parse_cycles("(0 1 2 3 4 5)", 6)});
  CHECK(abelian_invariants(c6, 100) == std::vector<std::uint64_t>{6});

  PermGroup c2c4(6, {parse_cycles("(0 1)", 6), parse_cycles("(2 3 4 5)", 6)});
  CHECK(abelian_invariants(c2c4, 100) == std::vector<std::uint64_t>{2, 4});

  CHECK_THROWS_AS(abelian_invariants(s4(), 1000), DomainError);

  CHECK(exponent(PermGroup(3, {parse_cycles("(0 1)", 3), parse_cycles("(1 2)", 3)}), 100) == 6);
  CHECK(exponent(v4, 100) == 2);
  CHECK(exponent(a5(), 1000) == 30);

  // exp(S4/A4) = 2, exp(A4/V4) = 3, exp(V4) = 2
  PermGroup G = s4();
  CHECK(abelianization_exponent(G) == 2);
  PermGroup A4 = derived_series(G).terms[1];
  CHECK(abelianization_exponent(A4) == 3);
}

TEST_CASE("composition series of S4") {
  auto res = composition_series(s4(), 1000);
  REQUIRE(res.series.has_value());
  std::vector<std::string> names;
  for (const auto& f : res.factors) names.push_back(f.name);
  CHECK(names == std::vector<std::string>{"C2", "C3", "C2", "C2"});
  // Jordan-Hoelder order check
  BigInt prod = 1;
  for (const auto& f : res.factors) prod *= f.order;
  CHECK(prod == 24);
}

TEST_CASE("composition factors: simple and bigger groups") {
  auto resA5 = composition_series(a5(), 1000);
  REQUIRE(resA5.factors.size() == 1);
  CHECK(resA5.factors[0].name == "A5");
  CHECK(resA5.factors[0].mu == 5);

  // A9 natural: giant recognition without enumeration
  std::vector<Perm> a9gens = {parse_cycles("(0 1 2)", 9),
                              parse_cycles("(0 1 2 3 4 5 6 7 8)", 9)};
  // (0 1 2) and a 9-cycle generate A9 (9 odd, 3-cycle + full cycle)
  PermGroup A9(9, a9gens);
  CHECK(A9.order() == 181440);
  auto fs = composition_factors(A9, 1000);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].name == "A9");
  CHECK(fs[0].mu == 9);

  // S6 natural
  PermGroup S6(6, {parse_cycles("(0 1)", 6), parse_cycles("(0 1 2 3 4 5)", 6)});
  auto fs6 = composition_factors(S6, 100);  // cap forces the structural path
  CHECK(factor_names(fs6) == std::multiset<std::string>{"A6", "C2"});
}

TEST_CASE("composition factors of the degree-25 wreath: six A5") {
  // order 60^6 is far past any enumeration cap; the block/orbit peel
  // delivers the factors anyway
  PermGroup w(25, {parse_cycles("(0 1 2 3 4)", 25), parse_cycles("(0 1 2)", 25),
                   parse_cycles("(0 5 10 15 20)(1 6 11 16 21)(2 7 12 17 22)"
                                "(3 8 13 18 23)(4 9 14 19 24)",
                                25),
                   parse_cycles("(0 5 10)(1 6 11)(2 7 12)(3 8 13)(4 9 14)", 25)});
  CHECK(w.order() == pow_big(60, 6));
  auto fs = composition_factors(w, 10000);
  CHECK(fs.size() == 6);
  for (const auto& f : fs) {
    CHECK(f.name == "A5");
    CHECK(f.mu == 5);
  }
}

TEST_CASE("identify_factor disambiguates order 20160 by element orders") {
  // A8 shares its order with another simple group that has no element of
  // order 15; the profile match must pick A8
  PermGroup a8(8, {parse_cycles("(0 1 2)", 8), parse_cycles("(1 2 3 4 5 6 7)", 8)});
  REQUIRE(a8.order() == 20160);
  auto d = identify_factor(a8, 10000000);
  CHECK(d.kind == FactorKind::Recognized);
  CHECK(d.name == "A8");
  CHECK(d.mu == 8);
}

TEST_CASE("identify_factor") {
  auto d = identify_factor(a5(), 1000);
  CHECK(d.kind == FactorKind::Recognized);
  CHECK(d.name == "A5");
  CHECK(d.mu == 5);

  PermGroup c7(7, {parse_cycles("(0 1 2 3 4 5 6)", 7)});
  auto d7 = identify_factor(c7, 100);
  CHECK(d7.kind == FactorKind::Cyclic);
  CHECK(d7.mu == 7);

  CHECK_THROWS_AS(identify_factor(s4(), 1000), DomainError);
}

TEST_CASE("chief-like series of S4") {
  auto s = chief_like_series(s4(), 1000);
  std::vector<BigInt> orders;
  for (const auto& t : s.terms) orders.push_back(t.order());
  CHECK(orders == std::vector<BigInt>{24, 12, 4, 1});
}

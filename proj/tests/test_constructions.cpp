#include <set>

#include "core/action.hpp"
#include "core/constructions.hpp"
#include "core/engine.hpp"
#include "core/errors.hpp"
#include "doctest.h"

using namespace permdiam;

TEST_CASE("classic groups") {
  CHECK(cyclic_group(6).order() == 6);
  CHECK(cyclic_group(6).gens().describe() == "a=(0 1 2 3 4 5)");
  CHECK(dihedral_group(4).order() == 8);
  CHECK(dihedral_group(4).gens().perm(1) == parse_cycles("(0 3)(1 2)", 4));
  CHECK(alternating_group(5).order() == 60);
  CHECK(alternating_group(6).order() == 360);
  CHECK(symmetric_group(7).order() == 5040);
  CHECK(elementary_abelian(3, 2).order() == 9);
  CHECK(quaternion8().order() == 8);
  CHECK_FALSE(quaternion8().is_abelian());
  CHECK(sl23_degree8().order() == 24);
  CHECK(derived_series(sl23_degree8()).terms.size() == 4);  // derived length 3
  CHECK(agl1(7).order() == 42);
  CHECK(psl2(7).order() == 168);
  CHECK(psl2(23).order() == 6072);
  CHECK(frobenius21().order() == 21);
  CHECK(symmetric_on_2subsets(5).degree() == 10);
  CHECK(symmetric_on_2subsets(5).order() == 120);
}

TEST_CASE("direct products") {
  PermGroup g = direct_product(cyclic_group(2), cyclic_group(4));
  CHECK(g.order() == 8);
  CHECK(g.degree() == 6);
  CHECK(abelian_invariants(g, 100) == std::vector<std::uint64_t>{2, 4});
}

TEST_CASE("wreath products") {
  PermGroup w = wreath(alternating_group(5), alternating_group(5), WreathAction::Imprimitive);
  CHECK(w.degree() == 25);
  CHECK(w.order() == pow_big(60, 6));
  auto cls = classify_action(w.gens());
  REQUIRE(cls.kind == ActionKind::Imprimitive);
  CHECK(cls.partition.size() == 5);
  CHECK(cls.partition[0].size() == 5);

  PermGroup c2wr = wreath(cyclic_group(2), cyclic_group(2), WreathAction::Imprimitive);
  CHECK(c2wr.degree() == 4);
  CHECK(c2wr.order() == 8);
  // isomorphic to D4, not Q8: nonabelian of order 8 with five involutions
  CHECK_FALSE(c2wr.is_abelian());
  CHECK(exponent(c2wr, 100) == 4);
  int involutions = 0;
  for (const Perm& p : c2wr.elements(10))
    if (!p.is_identity() && (p * p).is_identity()) ++involutions;
  CHECK(involutions == 5);

  PermGroup prod = wreath(cyclic_group(2), cyclic_group(2), WreathAction::Product);
  CHECK(prod.degree() == 4);
  CHECK(prod.order() == 8);
}

TEST_CASE("iterated A5 wreath") {
  CHECK(iterated_wreath_a5(1, WreathAction::Imprimitive).order() == 60);
  PermGroup w2 = iterated_wreath_a5(2, WreathAction::Imprimitive);
  CHECK(w2.degree() == 25);
  CHECK(w2.order() == pow_big(60, 6));

  PermGroup p2 = iterated_wreath_a5(2, WreathAction::Product);
  CHECK(p2.degree() == 3125);
  CHECK(classify_action(p2.gens()).kind == ActionKind::Primitive);
  CHECK(p2.order() == pow_big(60, 6));
}

TEST_CASE("affine deleted module") {
  PermGroup g = affine_deleted_module(4, 3);
  CHECK(g.degree() == 27);
  CHECK(g.order() == 27 * 12);
  CHECK(is_transitive(g.gen_perms(), 27));
  // point stabilizer of 0 is the A_n image
  PermGroup stab(27, g.pointwise_stabilizer_gens({0}));
  CHECK(stab.order() == 12);

  CHECK(affine_deleted_module(5, 2).degree() == 16);
  CHECK(affine_deleted_module(5, 2).order() == 16 * 60);

  CHECK_THROWS_AS(affine_deleted_module(4, 2), DomainError);  // p | n
  CHECK_THROWS_AS(affine_deleted_module(6, 3), DomainError);
}

TEST_CASE("grigorchuk congruence quotients") {
  PermGroup g1 = grigorchuk_level(1);
  CHECK(g1.order() == 2);
  CHECK(*g1.gens().find("a") == parse_cycles("(0 1)", 2));
  CHECK(g1.gens().find("b")->is_identity());

  // |G_h| = 2^(5*2^h/8 + 2) for h >= 3
  CHECK(grigorchuk_level(3).order() == 128);
  CHECK(grigorchuk_level(4).order() == 4096);

  for (std::uint32_t h : {2, 3, 4}) {
    PermGroup g = grigorchuk_level(h);
    for (const auto& [label, p] : g.gens().entries()) {
      CHECK((p * p).is_identity());  // all four are involutions
    }
    // d = bc
    CHECK(*g.gens().find("d") == *g.gens().find("b") * *g.gens().find("c"));
  }
}

TEST_CASE("grigorchuk level restriction consistency") {
  // restricting level h+1 generators to depth-h prefixes gives level h
  for (std::uint32_t h : {2, 3, 4}) {
    PermGroup big = grigorchuk_level(h + 1);
    PermGroup small = grigorchuk_level(h);
    for (const auto& [label, p] : big.gens().entries()) {
      std::vector<Point> img(std::size_t{1} << h);
      for (std::size_t v = 0; v < img.size(); ++v) img[v] = static_cast<Point>(p(static_cast<Point>(2 * v)) / 2);
      CHECK(Perm::from_images(img) == *small.gens().find(label));
    }
  }
}

TEST_CASE("spinal: grigorchuk spec reproduces the recursion") {
  for (std::uint32_t h : {1, 2, 3, 4, 5}) {
    PermGroup a = grigorchuk_level(h);
    PermGroup b = spinal_level(grigorchuk_spec(h), h);
    REQUIRE(a.degree() == b.degree());
    for (const auto& [label, p] : a.gens().entries()) CHECK(*b.gens().find(label) == p);
  }
  CHECK(spinal_level(grigorchuk_spec(3), 3).order() == 128);
}

TEST_CASE("spinal: level 1 is the rooted image") {
  PermGroup g = spinal_level(grigorchuk_spec(1), 1);
  CHECK(g.order() == 2);
  CHECK(g.gens().find("b")->is_identity());
  CHECK(g.gens().find("c")->is_identity());
}

TEST_CASE("spinal: mixed 2/5 example") {
  SpinalSpec spec = mixed_spinal_spec(4);
  CHECK(spec.degrees == std::vector<std::size_t>{2, 2, 5, 2});
  PermGroup g3 = spinal_level(spec, 3);
  CHECK(g3.degree() == 20);
  CHECK(is_transitive(g3.gen_perms(), 20));
  auto factors = composition_factors(g3, 100000);
  std::set<std::string> names;
  for (const auto& f : factors) names.insert(f.name);
  CHECK(names.count("C2") == 1);
  CHECK(names.count("A5") == 1);
}

TEST_CASE("corpus builders") {
  auto prim = primitive_corpus(10);
  std::set<std::string> labels;
  for (const auto& e : prim) labels.insert(e.label);
  CHECK(labels.count("cyclic:5"));
  CHECK(labels.count("cyclic:7"));
  CHECK(labels.count("agl1:5"));
  CHECK(labels.count("agl1:7"));
  CHECK(labels.count("alternating:5"));
  CHECK(labels.count("symmetric:10"));
  CHECK(labels.count("psl2:7"));
  CHECK(labels.count("symmetric:5:2sets"));
  for (const auto& e : prim) {
    CHECK(classify_action(e.group.gens()).kind == ActionKind::Primitive);
  }

  auto trans = transitive_corpus(10000);
  for (const auto& e : trans) {
    CHECK(is_transitive(e.group.gen_perms(), e.group.degree()));
    CHECK(e.group.order() <= 10000);
  }

  auto sol = soluble_corpus(200);
  bool has_grig = false;
  for (const auto& e : sol) {
    CHECK(is_soluble(e.group));
    has_grig |= e.label == "grigorchuk:h=3";
  }
  CHECK(has_grig);
}

TEST_CASE("abelian catalogue") {
  auto all = abelian_groups_upto(48);
  // number of abelian groups of order <= 48 (sum over m of #partitions
  // structure): verified count
  std::set<std::string> labels;
  std::uint64_t count8 = 0;
  for (const auto& e : all) {
    labels.insert(e.label);
    if (e.group.order() == 8) ++count8;
    // divisor chain d_1 | d_2 | ... and product = order
    BigInt prod = 1;
    for (std::size_t i = 0; i < e.divisors.size(); ++i) {
      prod *= e.divisors[i];
      if (i) CHECK(e.divisors[i] % e.divisors[i - 1] == 0);
    }
    CHECK(prod == e.group.order());
    if (e.group.order() > 1) {
      CHECK(e.divisors == abelian_invariants(e.group, 100));
      CHECK(e.divisors.back() == exponent(e.group, 100));  // d_k = exp(A)
    }
  }
  CHECK(count8 == 3);  // C8, C2xC4, C2^3
  CHECK(labels.count("abelian:C2xC4"));
  CHECK(labels.count("abelian:C48"));
  CHECK(labels.count("abelian:C2xC2xC2xC6"));  // C2^4 x C3 in invariant-factor form
}

TEST_CASE("construct_by_label") {
  CHECK(construct_by_label("cyclic:6").order() == 6);
  CHECK(construct_by_label("grigorchuk:h=3").order() == 128);
  CHECK(construct_by_label("wreath:A5^2:imprimitive").degree() == 25);
  CHECK(construct_by_label("wreath:C2:C2:imprimitive").order() == 8);
  CHECK(construct_by_label("affine:4:3").order() == 324);
  CHECK(construct_by_label("abelian:C2xC4").order() == 8);
  CHECK(construct_by_label("spinal:grig:h=2").order() == grigorchuk_level(2).order());
  CHECK_THROWS_AS(construct_by_label("nonsense:1"), ParseError);
  CHECK_THROWS_AS(construct_by_label("cyclic:x"), ParseError);
}

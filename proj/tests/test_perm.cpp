#include <algorithm>

#include "core/action.hpp"
#include "core/errors.hpp"
#include "core/group.hpp"
#include "core/perm.hpp"
#include "core/word.hpp"
#include "doctest.h"

using namespace permdiam;

TEST_CASE("parse_cycles basics") {
  Perm p = parse_cycles("(0 1 2 3 4)", 5);
  CHECK(p.images() == std::vector<Point>{1, 2, 3, 4, 0});

  CHECK(parse_cycles("", 3) == Perm(3));
  CHECK(parse_cycles("()", 3) == Perm(3));
  CHECK(parse_cycles(" (0 1)(3 4) ", 5).cycle_string() == "(0 1)(3 4)");

  CHECK_THROWS_AS(parse_cycles("(0 1)(1 2)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0 5)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0 1", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("0 1)", 3), ParseError);
}

TEST_CASE("cycle notation round trip") {
  for (const char* s : {"(0 1 2)", "(0 2)(1 4 3)", "()", "(1 5)(2 7 3)"}) {
    Perm p = parse_cycles(s, 8);
    CHECK(parse_cycles(p.cycle_string(), 8) == p);
  }
}

TEST_CASE("compose, inverse, order") {
  Perm a = parse_cycles("(0 1 2 3 4)", 5);
  CHECK((a * a).cycle_string() == "(0 2 4 1 3)");
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.order() == 5);
  CHECK(parse_cycles("(0 1)(2 3 4)", 5).order() == 6);

  Perm b = parse_cycles("(0 1)", 5);
  CHECK((a * b).inverse() == b.inverse() * a.inverse());
}

TEST_CASE("word evaluation") {
  GenSet X(5);
  X.add("a", parse_cycles("(0 1 2 3 4)", 5));
  X.add("b", parse_cycles("(0 1 2)", 5));

  Word w;
  w.append("a", 1);
  w.append("a", -1);
  CHECK(w.evaluate(X).is_identity());

  CHECK(Word::single("a").evaluate(X) == parse_cycles("(0 1 2 3 4)", 5));
  CHECK((Word::single("a") + Word::single("a")).evaluate(X) ==
        parse_cycles("(0 2 4 1 3)", 5));

  Word mixed = Word::parse("a b^-1 a");
  CHECK(mixed.inverse().evaluate(X) == mixed.evaluate(X).inverse());
  CHECK(Word::parse(mixed.str()) == mixed);
  CHECK(Word().evaluate(X).is_identity());
  CHECK_THROWS_AS(Word::single("zz").evaluate(X), DomainError);
}

TEST_CASE("orbit partition") {
  GenSet one(5);
  one.add("a", parse_cycles("(0 1 2 3 4)", 5));
  CHECK(orbit_partition(one).size() == 1);

  GenSet id3(3);
  id3.add("e", Perm(3));
  CHECK(orbit_partition(id3).size() == 3);

  GenSet two(4);
  two.add("a", parse_cycles("(0 1)", 4));
  two.add("b", parse_cycles("(2 3)", 4));
  auto orbits = orbit_partition(two);
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0] == std::vector<Point>{0, 1});
  CHECK(orbits[1] == std::vector<Point>{2, 3});
}

TEST_CASE("orbit refinement under generator removal") {
  std::vector<Perm> gens = {parse_cycles("(0 1)", 6), parse_cycles("(1 2)(3 4)", 6),
                            parse_cycles("(4 5)", 6)};
  auto whole = orbit_partition(gens, 6);
  std::vector<Perm> sub = {gens[0], gens[2]};
  for (const auto& orb : orbit_partition(sub, 6)) {
    bool contained = false;
    for (const auto& big : whole)
      contained |= std::includes(big.begin(), big.end(), orb.begin(), orb.end());
    CHECK(contained);
  }
}

TEST_CASE("classify_action") {
  GenSet c4(4);
  c4.add("a", parse_cycles("(0 1 2 3)", 4));
  auto r = classify_action(c4);
  REQUIRE(r.kind == ActionKind::Imprimitive);
  CHECK(r.partition == std::vector<std::vector<Point>>{{0, 2}, {1, 3}});

  GenSet a5(5);
  a5.add("a", parse_cycles("(0 1 2 3 4)", 5));
  a5.add("b", parse_cycles("(0 1 2)", 5));
  CHECK(classify_action(a5).kind == ActionKind::Primitive);

  GenSet t(3);
  t.add("a", parse_cycles("(0 1)", 3));
  CHECK(classify_action(t).kind == ActionKind::Intransitive);
}

TEST_CASE("stabilizer chain order and membership") {
  PermGroup a5(5, {parse_cycles("(0 1 2 3 4)", 5), parse_cycles("(0 1 2)", 5)});
  CHECK(a5.order() == 60);
  CHECK(a5.contains(parse_cycles("(0 1)(2 3)", 5)));
  CHECK_FALSE(a5.contains(parse_cycles("(0 1)", 5)));

  PermGroup c2(3, {parse_cycles("(0 1)", 3)});
  CHECK(c2.order() == 2);
  CHECK(c2.contains(parse_cycles("(0 1)", 3)));
  CHECK(c2.contains(Perm(3)));
  CHECK_THROWS_AS(c2.contains(Perm(4)), DomainError);

  PermGroup s4(4, {parse_cycles("(0 1)", 4), parse_cycles("(0 1 2 3)", 4)});
  CHECK(s4.order() == 24);
  auto els = s4.elements(1000);
  CHECK(els.size() == 24);
  std::sort(els.begin(), els.end());
  CHECK(std::adjacent_find(els.begin(), els.end()) == els.end());

  CHECK(PermGroup::trivial(4).order() == 1);
  CHECK_THROWS_AS(s4.elements(10), CapacityError);
}

TEST_CASE("pointwise stabilizer via forced base prefix") {
  PermGroup s4(4, {parse_cycles("(0 1)", 4), parse_cycles("(0 1 2 3)", 4)});
  auto stab0 = PermGroup(4, s4.pointwise_stabilizer_gens({0}));
  CHECK(stab0.order() == 6);
  for (const Perm& p : stab0.gen_perms()) CHECK(p(0) == 0);
  auto stab01 = PermGroup(4, s4.pointwise_stabilizer_gens({0, 1}));
  CHECK(stab01.order() == 2);
}

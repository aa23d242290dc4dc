#include "core/errors.hpp"
#include "core/synth.hpp"
#include "core/textio.hpp"
#include "doctest.h"

using namespace permdiam;

TEST_CASE("group description parsing") {
  auto g1 = parse_group_description("A5:(0 1 2 3 4),(0 1 2)");
  CHECK(g1.name == "A5");
  CHECK(g1.group.degree() == 5);
  CHECK(g1.group.order() == 60);
  CHECK(g1.group.gens().label(0) == "g0");

  auto g2 = parse_group_description("n=6;a=(0 1),b=(2 3 4)");
  CHECK(g2.group.degree() == 6);
  CHECK(*g2.group.gens().find("a") == parse_cycles("(0 1)", 6));

  auto g3 = parse_group_description("label:cyclic:6");
  CHECK(g3.group.order() == 6);
  CHECK(g3.name == "cyclic:6");

  // degree inference ignores label text left of '='
  auto g4 = parse_group_description("x12=(0 1)");
  CHECK(g4.group.degree() == 2);

  CHECK_THROWS_AS(parse_group_description(""), ParseError);
  CHECK_THROWS_AS(parse_group_description("label:unknown:9"), ParseError);
  CHECK_THROWS_AS(parse_group_description("n=3;(0 5)"), ParseError);
}

TEST_CASE("certificate JSON round-trip revalidates") {
  auto d = parse_group_description("S4:a=(0 1),b=(0 1 2 3)");
  Perm g = parse_cycles("(0 2 1)", 4);
  auto cert = soluble_solve(d.group.gens(), g, default_budget());

  std::string js = render_certificate(cert, 4, true);
  LengthCertificate back = parse_certificate_json(js);
  CHECK(back.element == cert.element);
  CHECK(back.word == cert.word);
  REQUIRE(back.asserted_bound.has_value());
  CHECK(back.asserted_bound->value == cert.asserted_bound->value);
  CHECK(certificate_valid(back, d.group.gens()));

  std::string kv = render_certificate(cert, 4, false);
  CHECK(kv.find("certificate.word=") != std::string::npos);
  CHECK(kv.find("certificate.bound_source=theorem:soluble-diameter") != std::string::npos);
}

TEST_CASE("info rendering is stable") {
  auto d = parse_group_description("label:symmetric:4");
  auto info = group_info(d, default_budget());
  std::string text = render_info(info, false);
  CHECK(text.find("order=24\n") != std::string::npos);
  CHECK(text.find("action=primitive\n") != std::string::npos);
  CHECK(text.find("factor.count=4\n") != std::string::npos);
  CHECK(render_info(info, false) == text);

  std::string js = render_info(info, true);
  CHECK(js.find("\"order\": \"24\"") != std::string::npos);
}

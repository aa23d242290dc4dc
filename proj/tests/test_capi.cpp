// Exercises the shared-library surface exactly as an external client would:
// only permdiam.h, opaque handles, status codes, owned strings.

#include <cstring>
#include <string>

#include "doctest.h"
#include "permdiam.h"

namespace {

struct Owned {
  char* s = nullptr;
  ~Owned() { pd_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

}  // namespace

TEST_CASE("capi: create, order, info") {
  pd_group* g = nullptr;
  REQUIRE(pd_group_create("A5:(0 1 2 3 4),(0 1 2)", &g) == PD_OK);
  CHECK(pd_group_degree(g) == 5);

  Owned order;
  REQUIRE(pd_group_order(g, &order.s) == PD_OK);
  CHECK(order.str() == "60");

  Owned info;
  REQUIRE(pd_group_info(g, 0, &info.s) == PD_OK);
  CHECK(info.str().find("order=60") != std::string::npos);
  CHECK(info.str().find("action=primitive") != std::string::npos);

  pd_group_destroy(g);
}

TEST_CASE("capi: error statuses and messages") {
  pd_group* g = nullptr;
  CHECK(pd_group_create("A5:(0 1)(1 2)", &g) == PD_PARSE_ERROR);
  CHECK(std::strlen(pd_last_error()) > 0);

  REQUIRE(pd_group_create("label:cyclic:6", &g) == PD_OK);
  Owned out;
  CHECK(pd_bounds(g, "primitive", 0, &out.s) == PD_DOMAIN_ERROR);  // C6 is imprimitive
  CHECK(pd_bounds(g, "nonsense", 0, &out.s) == PD_PARSE_ERROR);
  pd_group_destroy(g);

  CHECK(pd_group_create("label:grigorchuk:h=99", &g) == PD_CAPACITY_ERROR);
}

TEST_CASE("capi: diameter and growth") {
  pd_group* g = nullptr;
  REQUIRE(pd_group_create("S3:(0 1),(1 2)", &g) == PD_OK);
  Owned d;
  REQUIRE(pd_diameter(g, 0, &d.s) == PD_OK);
  CHECK(d.str().find("diameter=3") != std::string::npos);

  Owned w;
  REQUIRE(pd_worst_diameter(g, 1, &w.s) == PD_OK);
  CHECK(w.str().find("\"worst_diameter\": 3") != std::string::npos);

  Owned gr;
  REQUIRE(pd_growth(g, 5, 0, &gr.s) == PD_OK);
  CHECK(gr.str().find("saturated=true") != std::string::npos);
  pd_group_destroy(g);
}

TEST_CASE("capi: certificates round-trip and revalidate") {
  pd_group* g = nullptr;
  REQUIRE(pd_group_create("S4:a=(0 1),b=(0 1 2 3)", &g) == PD_OK);

  Owned cert;
  REQUIRE(pd_synthesize(g, "(0 1 2)", "soluble", 1, &cert.s) == PD_OK);
  int valid = 0;
  REQUIRE(pd_certificate_check(g, cert.s, &valid) == PD_OK);
  CHECK(valid == 1);

  Owned cert2;
  REQUIRE(pd_synthesize(g, "(0 1 2)", "schreier", 1, &cert2.s) == PD_OK);
  REQUIRE(pd_certificate_check(g, cert2.s, &valid) == PD_OK);
  CHECK(valid == 1);

  Owned cert3;
  REQUIRE(pd_synthesize(g, "(0 2)(1 3)", "milnor", 1, &cert3.s) == PD_OK);
  REQUIRE(pd_certificate_check(g, cert3.s, &valid) == PD_OK);
  CHECK(valid == 1);

  // insoluble input is a domain error for the soluble method
  pd_group* a5 = nullptr;
  REQUIRE(pd_group_create("label:alternating:5", &a5) == PD_OK);
  Owned bad;
  CHECK(pd_synthesize(a5, "(0 1 2)", "soluble", 0, &bad.s) == PD_DOMAIN_ERROR);
  pd_group_destroy(a5);
  pd_group_destroy(g);

  // direct-product method on a genuine product of two simple factors
  pd_group* prod = nullptr;
  REQUIRE(pd_group_create("T:n=10;p=(0 1 2 3 4)(5 6 7),q=(0 1 2)(5 6 7 8 9)", &prod) == PD_OK);
  Owned cert4;
  REQUIRE(pd_synthesize(prod, "(0 1)(2 3)(5 7 6)", "direct-product", 1, &cert4.s) == PD_OK);
  REQUIRE(pd_certificate_check(prod, cert4.s, &valid) == PD_OK);
  CHECK(valid == 1);
  pd_group_destroy(prod);
}

TEST_CASE("capi: construct emits a reparsable description") {
  Owned desc;
  REQUIRE(pd_construct("grigorchuk:h=3", &desc.s) == PD_OK);
  pd_group* g = nullptr;
  REQUIRE(pd_group_create(desc.s, &g) == PD_OK);
  Owned order;
  REQUIRE(pd_group_order(g, &order.s) == PD_OK);
  CHECK(order.str() == "128");
  pd_group_destroy(g);

  Owned help;
  REQUIRE(pd_label_help(&help.s) == PD_OK);
  CHECK(help.str().find("grigorchuk:h=H") != std::string::npos);
}

TEST_CASE("capi: invariants and bounds") {
  pd_group* g = nullptr;
  REQUIRE(pd_group_create("label:symmetric:5", &g) == PD_OK);
  Owned inv;
  REQUIRE(pd_invariants(g, 0, &inv.s) == PD_OK);
  CHECK(inv.str().find("mu_cf=10") != std::string::npos);
  CHECK(inv.str().find("mu_na=5") != std::string::npos);

  Owned rep;
  REQUIRE(pd_bounds(g, "primitive", 0, &rep.s) == PD_OK);
  CHECK(rep.str().find("bound.generalized-palfy-wolf.verdict=holds") != std::string::npos);
  pd_group_destroy(g);
}

TEST_CASE("capi: paper-numbers verification suite") {
  Owned report;
  int failures = -1;
  REQUIRE(pd_verify("paper-numbers", 0, &report.s, &failures) == PD_OK);
  CHECK(failures == 0);
  CHECK(report.str().find("diam(A5) = 10") != std::string::npos);

  CHECK(pd_verify("nonsense", 0, &report.s, &failures) == PD_PARSE_ERROR);
}

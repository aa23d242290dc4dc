// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Expected values are either pinned exactly or recomputed from an
// independent construction; tolerances are written into the checks here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "core/constructions.hpp"
#include "core/diametry.hpp"
#include "core/engine.hpp"
#include "core/errors.hpp"
#include "core/invariants.hpp"
#include "core/synth.hpp"
#include "core/verify.hpp"

using namespace permdiam;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what) {
  std::printf("%s criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion, what.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

void note(const std::string& line) { std::printf("     %s\n", line.c_str()); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const Budget kBudget = default_budget();

// 1. diam(A5) = 10 over all irredundant generating sets, zero tolerance.
void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  auto wc = worst_case_diameter(alternating_group(5), kBudget);
  double secs = seconds_since(t0);
  report(1, wc.diameter == 10 && secs <= 600.0,
         "diam(A5) = " + std::to_string(wc.diameter) + " via " +
             std::to_string(wc.sets_examined) + " generating sets in " +
             std::to_string(secs) + "s (<= 600s)");
  note("extremal set: " + wc.extremal.describe());
}

// 2. |G_h| = 2^(5*2^h/8 + 2) for h = 3..6, exactly, via stabilizer chains.
void criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (std::uint32_t h = 3; h <= 6; ++h) {
    std::uint64_t n = std::uint64_t{1} << h;
    BigInt expected = pow_big(2, 5 * n / 8 + 2);
    BigInt got = grigorchuk_level(h).order();
    ok &= got == expected;
    detail += "h=" + std::to_string(h) + ":2^" + std::to_string(5 * n / 8 + 2) +
              (got == expected ? " ok " : " MISMATCH ");
  }
  double secs = seconds_since(t0);
  ok &= secs <= 60.0;
  report(2, ok, "Grigorchuk orders " + detail + "in " + std::to_string(secs) + "s (<= 60s)");
}

// 3. worst-case diameter of every abelian group of order <= 48 equals
//    sum floor(d_i/2) for the invariant factors, zero tolerance.
void criterion3() {
  bool ok = true;
  int count = 0;
  for (const auto& e : abelian_groups_upto(48)) {
    std::uint64_t expected = 0;
    for (std::uint64_t d : e.divisors) expected += d / 2;
    std::uint64_t got = worst_case_diameter(e.group, kBudget).diameter;
    if (got != expected) {
      ok = false;
      note(e.label + ": got " + std::to_string(got) + ", expected " + std::to_string(expected));
    }
    ++count;
  }
  report(3, ok, "abelian diameter formula on all " + std::to_string(count) +
                    " abelian groups of order <= 48");
}

// 4. Soluble sandwich: for every soluble corpus group of order <= 200 and
//    every irredundant generating set, diam(G,X) <= eps0 4^(L-1) (log2|G|)^2,
//    and soluble_solve certificates stay within the bound. Groups of order
//    <= 120 get the exhaustive sweep; above that the inequality holds for
//    every generating set because any connected Cayley graph has diameter
//    at most |G| - 1 < bound (checked, and the margin is reported).
void criterion4() {
  bool ok = true;
  int groups = 0, swept = 0;
  for (const auto& e : soluble_corpus(200)) {
    const PermGroup& G = e.group;
    if (G.order() <= 1) continue;
    ++groups;
    std::uint64_t L = derived_series(G).terms.size() - 1;
    std::uint64_t eps0 = epsilon_invariants(G, kBudget.enum_cap).epsilon0;
    double log2G = log2_big(G.order());
    double bound = static_cast<double>(eps0) * std::pow(4.0, static_cast<double>(L) - 1.0) *
                   log2G * log2G;

    if (G.order() <= 120) {
      // exhaustive: the worst case ranges over every irredundant set
      auto wc = worst_case_diameter(G, kBudget);
      ++swept;
      if (static_cast<double>(wc.diameter) > bound) {
        ok = false;
        note(e.label + ": worst diam " + std::to_string(wc.diameter) + " exceeds bound " +
             std::to_string(bound));
      }
    } else {
      double trivial = static_cast<double>(G.order()) - 1.0;
      if (trivial > bound) {
        ok = false;
        note(e.label + ": |G|-1 = " + std::to_string(trivial) +
             " does not settle the bound " + std::to_string(bound) +
             " and the group is past the exhaustive-sweep scale");
      } else {
        note(e.label + ": every Cayley diameter <= |G|-1 = " + std::to_string(trivial) +
             " <= bound " + std::to_string(bound));
      }
    }

    // certificates for every element over the group's own generating set
    try {
      std::uint64_t worst_len = 0;
      G.for_each_element(
          [&](const Perm& g) {
            auto cert = soluble_solve(G.gens(), g, kBudget);
            worst_len = std::max(worst_len, cert.word.length());
          },
          kBudget.enum_cap);
      if (static_cast<double>(worst_len) > bound) {
        ok = false;
        note(e.label + ": certificate length " + std::to_string(worst_len) + " exceeds " +
             std::to_string(bound));
      }
    } catch (const std::exception& ex) {
      ok = false;
      note(e.label + ": soluble_solve failed: " + ex.what());
    }
  }
  report(4, ok, "soluble diameter sandwich on " + std::to_string(groups) +
                    " corpus groups of order <= 200 (" + std::to_string(swept) +
                    " swept exhaustively)");
}

// 5. Randomized lemma suite, >= 500 instances, zero violations.
void criterion5() {
  auto r = verify_suite("lemmas", kBudget, 500);
  report(5, r.failures == 0 && r.checks >= 500,
         "lemma property suite: " + std::to_string(r.checks) + " checks, " +
             std::to_string(r.failures) + " failures");
}

// 6. Generalized Palfy-Wolf: mu_cf(G) < n^5 on the primitive corpus.
void criterion6() {
  bool ok = true;
  int count = 0;
  for (const auto& e : primitive_corpus(100)) {
    auto p = mu_profile(e.model, kBudget.enum_cap);
    BigInt n5 = pow_big(e.group.degree(), 5);
    if (!p.available || p.mu_cf >= n5) {
      ok = false;
      note(e.label + ": mu_cf " + (p.available ? p.mu_cf.str() : "unavailable") +
           " vs n^5 = " + n5.str());
    }
    ++count;
  }
  report(6, ok, "mu_cf < n^5 on all " + std::to_string(count) + " primitive corpus members");
}

// 7. Theorem 4.5 sharpness, relative tolerance 1e-9.
void criterion7() {
  auto p5 = mu_profile(alternating_group(5), kBudget.enum_cap);
  double rhs1 = std::pow(5.0, 1.25) / b1_constant();
  bool ok1 = p5.available &&
             std::abs(static_cast<double>(p5.mu_na) - rhs1) <= 1e-9 * rhs1;

  auto pw = mu_profile(iterated_wreath_a5(2, WreathAction::Imprimitive), kBudget.enum_cap);
  double rhs2 = std::pow(b1_constant(), 24.0);
  bool ok2 = pw.available && pw.mu_na == pow_big(5, 6) &&
             std::abs(static_cast<double>(pw.mu_na) - rhs2) <= 1e-9 * rhs2;
  report(7, ok1 && ok2,
         "mu_na sharpness: mu_na(A5) = b1^-1 5^(5/4), mu_na(A5 wr A5) = 5^6 = b1^24");
}

// 8. Guralnick checks on every transitive corpus group of order <= 10^4.
void criterion8() {
  bool ok = true;
  int count = 0;
  for (const auto& e : transitive_corpus(10000)) {
    auto checks = transitive_checks(e.group, kBudget.enum_cap);
    if (!checks.all_hold) {
      ok = false;
      note(e.label + ": a Guralnick check failed");
    }
    ++count;
  }
  report(8, ok, "exp(N/N') <= orbit length and mu(T) <= n on " + std::to_string(count) +
                    " transitive corpus groups");
}

// 9. Socle cascade on diagonal and full subdirect subgroups of A5^k, k <= 4.
void criterion9() {
  bool ok = true;
  const std::uint64_t m = 5;  // floor(log2 60)
  for (std::size_t k = 1; k <= 4; ++k) {
    // full product
    PermGroup full = alternating_group(5);
    for (std::size_t i = 1; i < k; ++i) full = direct_product(full, alternating_group(5));
    // diagonal
    PermGroup a5 = alternating_group(5);
    GenSet diag(5 * k);
    for (const auto& [label, p] : a5.gens().entries()) {
      std::vector<Point> img(5 * k);
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t x = 0; x < 5; ++x)
          img[5 * c + x] = static_cast<Point>(5 * c + p(static_cast<Point>(x)));
      diag.add(label, Perm::from_images(std::move(img)));
    }
    std::vector<SocleFactor> factors;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Point> dom;
      for (std::size_t x = 0; x < 5; ++x) dom.push_back(static_cast<Point>(5 * i + x));
      factors.push_back({dom, alternating_group(5)});
    }
    for (const auto& [name, M] : {std::pair<std::string, PermGroup>{"full", full},
                                  {"diagonal", PermGroup(diag)}}) {
      try {
        auto res = socle_cascade(M, factors, 1, m, kBudget);
        BigInt bound = BigInt(4) * k * k * (1 + 2 * m);
        bool good = !res.element.is_identity() &&
                    BigInt(res.cert.word.length()) <= bound &&
                    res.cert.word.evaluate(M.gens()) == res.element;
        for (const auto& f : factors)
          good &= f.N.contains(restrict_perm(res.element, f.domain));
        if (!good) {
          ok = false;
          note("k=" + std::to_string(k) + " " + name + ": cascade output failed a check");
        }
      } catch (const std::exception& ex) {
        ok = false;
        note("k=" + std::to_string(k) + " " + name + ": " + ex.what());
      }
    }
  }
  report(9, ok, "socle cascade on diagonal and full subdirect subgroups of A5^k, k <= 4");
}

// 10. Affine example scaling: exact diam(V:A4, {v} u A4-gens) grows with p
//     and is >= p for p in {3,5,7}; the asymptotic constant is only reported.
void criterion10() {
  std::vector<std::uint64_t> diams;
  bool ok = true;
  for (std::uint64_t p : {3, 5, 7}) {
    PermGroup g = affine_deleted_module(4, p);
    auto d = diameter(g.gens(), kBudget);
    diams.push_back(d.diameter);
    if (d.diameter < p) {
      ok = false;
      note("p=" + std::to_string(p) + ": diameter " + std::to_string(d.diameter) + " < p");
    }
    note("p=" + std::to_string(p) + ": diam = " + std::to_string(d.diameter) +
         ", diam/(p n) = " + std::to_string(static_cast<double>(d.diameter) / (p * 4.0)) +
         " (constant reported, not asserted)");
  }
  ok &= diams[0] < diams[1] && diams[1] < diams[2];
  report(10, ok, "affine deleted-module diameters increase in p and are >= p");
}

// 11. Desk-scale growth substitute: saturation at the order-2^22 congruence
//     quotient and the weak subexponential inequality on measured radii for
//     the next level; the asymptotic exponent is reported, never asserted.
void criterion11() {
  note("not reproducible at desk scale (recorded, not asserted): the absolute constants");
  note("of the main diameter bounds, the Helfgott-Seress and HMPQ exponents, the");
  note("infinite-group statements, and the growth exponent beta ~ 0.767");

  bool ok = true;

  // saturation sanity at the largest enumerable quotient (order 2^22)
  PermGroup g5 = grigorchuk_level(5);
  BallProfile p5 = growth(g5.gens(), 1u << 20, kBudget);
  if (!p5.saturated || BigInt(p5.counts.back()) != g5.order()) {
    ok = false;
    note("order-2^22 quotient failed to saturate at the group order");
  } else {
    note("growth saturates at " + std::to_string(p5.counts.back()) + " = |G| = 2^22, diameter " +
         std::to_string(*p5.diameter_if_saturated));
  }
  for (std::size_t r = 2; 2 * r < p5.counts.size() && ok; ++r) {
    if (!(BigInt(p5.counts[2 * r]) < BigInt(p5.counts[r]) * p5.counts[r])) {
      ok = false;
      note("gamma(2R) < gamma(R)^2 fails at R=" + std::to_string(r) + " on h=5");
    }
  }

  // partial profile one level up (order 2^42: saturation is out of reach;
  // radii are measured under a reduced state budget)
  PermGroup g6 = grigorchuk_level(6);
  Budget partial = kBudget;
  partial.state_bytes = std::uint64_t{2} << 30;
  std::uint64_t radius = 128;
  for (;;) {
    try {
      BallProfile p6 = growth(g6.gens(), radius, partial);
      note("h=6 measured to radius " + std::to_string(radius) + ", gamma = " +
           std::to_string(p6.counts.back()));
      for (std::size_t r = 2; 2 * r < p6.counts.size(); ++r) {
        if (!(BigInt(p6.counts[2 * r]) < BigInt(p6.counts[r]) * p6.counts[r])) {
          ok = false;
          note("gamma(2R) < gamma(R)^2 fails at R=" + std::to_string(r) + " on h=6");
        }
      }
      break;
    } catch (const CapacityError&) {
      if (radius <= 8) {
        ok = false;
        note("h=6 growth could not be measured within the budget");
        break;
      }
      radius /= 2;
    }
  }
  report(11, ok, "growth checks: exact saturation at 2^22 and weak subexponentiality");
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  std::printf("acceptance: %s (%d failure%s, %.1fs)\n", g_failures ? "FAIL" : "PASS",
              g_failures, g_failures == 1 ? "" : "s", seconds_since(t0));
  return g_failures ? 1 : 0;
}

#include "core/verify.hpp"

#include <cmath>
#include <sstream>
#include <unordered_map>

#include "core/constructions.hpp"
#include "core/diametry.hpp"
#include "core/errors.hpp"
#include "core/invariants.hpp"
#include "core/synth.hpp"

namespace permdiam {

namespace {

// splitmix64: deterministic, seed-stable across platforms
std::uint64_t next_rand(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

struct Suite {
  std::ostringstream report;
  int checks = 0;
  int failures = 0;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) ++failures;
    report << (ok ? "ok   " : "FAIL ") << what << "\n";
  }
};

}  // namespace

Perm random_group_element(const PermGroup& G, std::uint64_t& rng_state) {
  Perm r(G.degree());
  for (const auto& level : G.chain().levels()) {
    std::size_t pick = next_rand(rng_state) % level.orbit.size();
    r = r * level.transversal[pick];
  }
  return r;
}

namespace {

void paper_numbers_suite(Suite& s, const Budget& budget) {
  // worst-case diameter of A5 over every irredundant generating set
  auto wc = worst_case_diameter(alternating_group(5), budget);
  s.check(wc.diameter == 10, "diam(A5) = 10 (got " + std::to_string(wc.diameter) + ")");

  // |G_h| = 2^(5*2^h/8 + 2) for h = 3..6
  for (std::uint32_t h = 3; h <= 6; ++h) {
    std::uint64_t n = std::uint64_t{1} << h;
    BigInt expected = pow_big(2, 5 * n / 8 + 2);
    BigInt got = grigorchuk_level(h).order();
    s.check(got == expected, "|grigorchuk:h=" + std::to_string(h) + "| = 2^" +
                                 std::to_string(5 * n / 8 + 2) + " (got " + got.str() + ")");
  }

  // mu_na sharpness at both wreath degrees
  auto p5 = mu_profile(alternating_group(5), budget.enum_cap);
  double rhs1 = std::pow(5.0, 1.25) / b1_constant();
  s.check(p5.available &&
              std::abs(static_cast<double>(p5.mu_na) - rhs1) <= kRealTolerance * rhs1,
          "mu_na(A5) = b1^-1 5^(5/4) = 5");
  auto pw = mu_profile(iterated_wreath_a5(2, WreathAction::Imprimitive), budget.enum_cap);
  double rhs2 = std::pow(b1_constant(), 24.0);
  s.check(pw.available && pw.mu_na == pow_big(5, 6) &&
              std::abs(static_cast<double>(pw.mu_na) - rhs2) <= kRealTolerance * rhs2,
          "mu_na(A5 wr A5, degree 25) = 5^6 = b1^24");

  // small abelian diameters: sum of floor(d_i/2)
  s.check(worst_case_diameter(cyclic_group(5), budget).diameter == 2, "diam(C5) = 2");
  GenSet c6(6);
  c6.add("a", parse_cycles("(0 1 2 3 4 5)", 6));
  s.check(diameter(c6, budget).diameter == 3, "diam(C6, 6-cycle) = 3");
}

void lemma_suite(Suite& s, const Budget& budget, std::uint64_t instances) {
  std::uint64_t rng = 0xd1a3e7e5u;
  const std::uint64_t cap = budget.enum_cap;

  std::vector<CorpusEntry> groups;
  for (auto& e : transitive_corpus(10000)) groups.push_back(std::move(e));

  // distances from the identity over the group's own generators, for the
  // chain-rule and length checks (ground truth by full BFS)
  auto distance_table = [&](const PermGroup& G) {
    std::unordered_map<Perm, std::uint64_t, PermHash> dist;
    auto letters = [&] {
      std::vector<Perm> ls;
      for (const auto& [_, p] : G.gens().entries()) {
        if (p.is_identity()) continue;
        ls.push_back(p);
        Perm inv = p.inverse();
        if (inv != p) ls.push_back(inv);
      }
      return ls;
    }();
    std::vector<Perm> frontier{Perm(G.degree())};
    dist.emplace(frontier[0], 0);
    std::uint64_t radius = 0;
    while (!frontier.empty()) {
      ++radius;
      std::vector<Perm> next;
      for (const Perm& p : frontier)
        for (const Perm& l : letters) {
          Perm q = p * l;
          if (dist.emplace(q, radius).second) next.push_back(std::move(q));
        }
      frontier = std::move(next);
    }
    return dist;
  };

  std::uint64_t done = 0;
  for (std::size_t gi = 0; done < instances; gi = (gi + 1) % groups.size()) {
    const CorpusEntry& entry = groups[gi];
    const PermGroup& G = entry.group;
    if (G.order() > 10000) continue;
    const GenSet& X = G.gens();
    bool small = G.order() <= 2000;

    // Schreier bound on a random normal subgroup
    if (G.order() <= 5000) {
      auto lat = normal_lattice(G, cap);
      const PermGroup& N = lat[next_rand(rng) % lat.size()];
      try {
        auto cgs = schreier_generators(X, N, budget);
        s.check(cgs.subgroup.order() == N.order() &&
                    BigInt(cgs.max_length) <= cgs.bound.value,
                entry.label + ": schreier generation + 2.diam+1 bound");
      } catch (const std::logic_error& e) {
        s.check(false, entry.label + ": schreier violated: " + e.what());
      }
      ++done;

      // Milnor on a random element's word
      Perm y = random_group_element(G, rng);
      if (!y.is_identity()) {
        auto lw = length_bfs(X, y, budget);
        try {
          auto mr = milnor_stabilize(X, {lw.witness}, budget);
          PermGroup ncl = normal_closure(G, {y});
          s.check(mr.gens.subgroup.order() == ncl.order() &&
                      mr.iterations <= floor_log2(ncl.order()),
                  entry.label + ": milnor closure + iteration bound");
        } catch (const std::logic_error& e) {
          s.check(false, entry.label + ": milnor violated: " + e.what());
        }
        ++done;
      }

      // commutator generator bounds through a certified set for N
      try {
        auto base = schreier_generators(X, N, budget);
        auto der = commutator_generators(X, base, VerbalKind::Derived, budget);
        s.check(BigInt(der.max_length) <= der.bound.value,
                entry.label + ": commutator 4l+2lambda bound");
        auto g3 = commutator_generators(X, base, VerbalKind::Gamma3, budget);
        s.check(BigInt(g3.max_length) <= g3.bound.value,
                entry.label + ": triple commutator 10l+2lambda bound");
        done += 2;
      } catch (const std::logic_error& e) {
        s.check(false, entry.label + ": commutator bound violated: " + e.what());
        ++done;
      }
    }

    // derived tower bound
    if (is_soluble(G)) {
      try {
        auto tower = derived_tower(X, budget);
        std::uint64_t lg = G.order() > 1 ? floor_log2(G.order()) : 0;
        bool ok = true;
        for (std::size_t i = 1; i < tower.size(); ++i)
          ok &= BigInt(tower[i].max_length) <= pow_big(4, i) * lg;
        s.check(ok, entry.label + ": derived tower 4^i log2|G| bound");
      } catch (const std::logic_error& e) {
        s.check(false, entry.label + ": tower violated: " + e.what());
      }
      ++done;
    }

    // chain rule on nested generating configurations
    if (small) {
      auto dist = distance_table(G);
      std::vector<Perm> ys;
      for (int t = 0; t < 2; ++t) {
        Perm y = random_group_element(G, rng);
        if (!y.is_identity()) ys.push_back(std::move(y));
      }
      if (!ys.empty()) {
        PermGroup H(G.degree(), ys);
        std::uint64_t ellXY = 0;
        for (const Perm& y : ys) ellXY = std::max(ellXY, dist.at(y));
        Perm z = random_group_element(H, rng);
        GenSet Ygens = genset_from_perms(G.degree(), ys, "y");
        auto lz = length_bfs(Ygens, z, budget);
        if (lz.reachable) {
          s.check(dist.at(z) <= std::max<std::uint64_t>(1, ellXY * lz.length),
                  entry.label + ": chain rule l_X(z) <= l_X(Y) l_Y(z)");
          ++done;
        }
      }

      // extension rule along the derived series
      if (is_soluble(G) && G.order() > 1) {
        Series ds = derived_series(G);
        if (ds.terms.size() >= 3) {
          std::size_t a = next_rand(rng) % (ds.terms.size() - 2);
          std::size_t b = a + 1 + next_rand(rng) % (ds.terms.size() - a - 2);
          std::size_t c = b + next_rand(rng) % (ds.terms.size() - b);
          const PermGroup& Hh = ds.terms[a];
          const PermGroup& Ll = ds.terms[b];
          const PermGroup& Kk = ds.terms[c];
          std::uint64_t hk = relative_length(X, Hh, Kk, budget);
          std::uint64_t hl = relative_length(X, Hh, Ll, budget);
          std::uint64_t lk = relative_length(X, Ll, Kk, budget);
          s.check(hk <= hl + lk, entry.label + ": extension rule l(H/K) <= l(H/L)+l(L/K)");
          ++done;
        }
      }
    }
  }
}

void corpus_suite(Suite& s, const Budget& budget) {
  const std::uint64_t cap = budget.enum_cap;

  // mu_cf = mu_ab * mu_na across the corpus
  for (const auto& e : transitive_corpus(10000)) {
    auto p = mu_profile(e.model, cap);
    if (!p.available) {
      s.check(false, e.label + ": mu profile unavailable");
      continue;
    }
    s.check(p.mu_cf == p.mu_ab * p.mu_na, e.label + ": mu_cf = mu_ab mu_na");
    if (is_soluble(e.group))
      s.check(p.mu_cf == e.group.order(), e.label + ": soluble mu_cf = |G|");
  }

  // multiplicativity over normal subgroups on small groups
  for (const auto& e : transitive_corpus(400)) {
    auto pg = mu_profile(e.group, cap);
    if (!pg.available) continue;
    for (const PermGroup& N : normal_lattice(e.group, cap)) {
      auto pn = mu_profile(N, cap);
      auto pq = mu_profile(quotient_action(e.group, N, cap).quotient(), cap);
      if (!pn.available || !pq.available) continue;
      s.check(pg.mu_na == pn.mu_na * pq.mu_na,
              e.label + ": mu_na multiplicative over N of order " + N.order().str());
    }
  }

  // Guralnick checks on the transitive corpus
  for (const auto& e : transitive_corpus(10000)) {
    auto checks = transitive_checks(e.group, cap);
    s.check(checks.all_hold, e.label + ": exp(N/N') <= orbit length, mu(T) <= n");
  }

  // generalized Palfy-Wolf on the primitive corpus
  for (const auto& e : primitive_corpus(100)) {
    auto p = mu_profile(e.model, cap);
    BigInt n5 = pow_big(e.group.degree(), 5);
    s.check(p.available && p.mu_cf < n5,
            e.label + ": mu_cf = " + (p.available ? p.mu_cf.str() : "?") + " < n^5 = " +
                n5.str());
  }

  // epsilon sandwich + Glasby on soluble groups
  for (const auto& e : soluble_corpus(10000)) {
    auto eps = epsilon_invariants(e.group, cap);
    if (eps.epsilon) {
      bool ok = eps.epsilon0 <= *eps.epsilon && *eps.epsilon <= exponent(e.group, cap);
      s.check(ok, e.label + ": eps0 <= eps <= exp(G)");
    }
    if (e.group.order() > 1) {
      std::uint64_t L = derived_series(e.group).terms.size() - 1;
      double bound = 3.0 * std::log2(log2_big(e.group.order())) + 9.0;
      s.check(static_cast<double>(L) < bound, e.label + ": Glasby derived-length bound");
    }
  }
}

}  // namespace

VerifyResult verify_suite(const std::string& suite, const Budget& budget,
                          std::uint64_t instances) {
  Suite s;
  if (suite == "paper-numbers") {
    paper_numbers_suite(s, budget);
  } else if (suite == "lemmas") {
    lemma_suite(s, budget, instances);
  } else if (suite == "corpus") {
    corpus_suite(s, budget);
  } else {
    throw ParseError("unknown verify suite \"" + suite + "\" (paper-numbers|lemmas|corpus)");
  }
  VerifyResult out;
  out.checks = s.checks;
  out.failures = s.failures;
  std::ostringstream head;
  head << "suite=" << suite << " checks=" << s.checks << " failures=" << s.failures << "\n";
  out.report = head.str() + s.report.str();
  return out;
}

}  // namespace permdiam

// Independent-oracle checks: reference implementations living only in test
// code, kept deliberately separate from the library paths they validate.

#include <map>
#include <queue>
#include <set>

#include "core/action.hpp"
#include "core/constructions.hpp"
#include "core/diametry.hpp"
#include "core/engine.hpp"
#include "core/invariants.hpp"
#include "core/verify.hpp"
#include "doctest.h"

using namespace permdiam;

namespace {

const Budget kB = default_budget();

// unit-weight Dijkstra over the (implicit) Cayley graph; intentionally a
// different algorithm and data layout from the library BFS
std::map<Perm, std::uint64_t> dijkstra_lengths(const GenSet& X) {
  std::vector<Perm> letters;
  for (const auto& [_, p] : X.entries()) {
    letters.push_back(p);
    letters.push_back(p.inverse());
  }
  std::map<Perm, std::uint64_t> dist;
  using Entry = std::pair<std::uint64_t, Perm>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  heap.emplace(0, Perm(X.degree()));
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    auto it = dist.find(v);
    if (it != dist.end() && it->second <= d) continue;
    dist[v] = d;
    for (const Perm& l : letters) heap.emplace(d + 1, v * l);
  }
  return dist;
}

}  // namespace

TEST_CASE("length_bfs agrees with a unit-weight Dijkstra reference") {
  std::uint64_t rng = 0xbead5eedull;
  std::vector<PermGroup> pool = {symmetric_group(4),  alternating_group(5),
                                 dihedral_group(6),   quaternion8(),
                                 cyclic_group(12),    sl23_degree8(),
                                 frobenius21(),       wreath(cyclic_group(2), cyclic_group(3),
                                                             WreathAction::Imprimitive)};
  int triples = 0;
  while (triples < 100) {
    for (const PermGroup& G : pool) {
      if (triples >= 100) break;
      // random generating subset: 2 or 3 random elements that generate G
      std::vector<Perm> gens;
      for (int t = 0; t < 3; ++t) gens.push_back(random_group_element(G, rng));
      PermGroup H(G.degree(), gens);
      if (H.order() != G.order()) continue;  // keep triples over genuine generating sets
      GenSet X = genset_from_perms(G.degree(), gens, "r");
      auto ref = dijkstra_lengths(X);
      Perm target = random_group_element(G, rng);
      auto lr = length_bfs(X, target, kB);
      REQUIRE(lr.reachable);
      CHECK(lr.length == ref.at(target));
      CHECK(lr.witness.evaluate(X) == target);
      ++triples;
    }
  }
}

TEST_CASE("chain order equals exhaustive enumeration on the corpus") {
  for (const auto& e : transitive_corpus(10000)) {
    auto els = e.group.elements(20000);
    std::set<Perm> distinct(els.begin(), els.end());
    CHECK(BigInt(distinct.size()) == e.group.order());
  }
}

TEST_CASE("composition factor multiset survives reversed lattice choice") {
  // reference refinement choosing the smallest inclusion-maximal normal
  // subgroup instead of the largest
  auto reversed_factors = [&](const PermGroup& G) {
    std::multiset<std::string> orders;
    PermGroup cur = G;
    while (cur.order() > 1) {
      auto lat = normal_lattice(cur, kB.enum_cap);
      std::vector<const PermGroup*> maximal;
      for (const auto& N : lat) {
        if (N.order() >= cur.order()) continue;
        bool is_max = true;
        for (const auto& M : lat)
          if (M.order() < cur.order() && M.order() > N.order() && M.contains_group(N))
            is_max = false;
        if (is_max) maximal.push_back(&N);
      }
      const PermGroup* pick = maximal.front();
      for (const auto* c : maximal)
        if (c->order() < pick->order()) pick = c;
      orders.insert((cur.order() / pick->order()).str());
      cur = *pick;
    }
    return orders;
  };

  for (const char* label : {"symmetric:4", "cyclic:12", "dihedral:6", "q8", "sl23"}) {
    PermGroup G = construct_by_label(label);
    auto res = composition_series(G, kB.enum_cap);
    std::multiset<std::string> direct;
    for (const auto& f : res.factors) direct.insert(f.order.str());
    CHECK(direct == reversed_factors(G));
  }
}

TEST_CASE("primitivity verdict matches the all-seed-pairs definition") {
  // the classifier uses seeds (0, b); the definition quantifies over every
  // pair, which transitivity makes equivalent -- verified here directly
  for (const char* label : {"alternating:5", "cyclic:6", "dihedral:4", "psl2:7",
                            "wreath:C2:C2:imprimitive"}) {
    PermGroup G = construct_by_label(label);
    auto gens = G.gen_perms();
    std::size_t n = G.degree();
    if (!is_transitive(gens, n)) continue;
    bool any_nontrivial = false;
    for (Point a = 0; a < n && !any_nontrivial; ++a)
      for (Point b = 0; b < n && !any_nontrivial; ++b) {
        if (a == b) continue;
        auto sys = minimal_block_closure(gens, n, a, b);
        std::size_t sz = 0;
        for (const auto& blk : sys)
          for (Point x : blk)
            if (x == a) sz = blk.size();
        any_nontrivial |= sz > 1 && sz < n;
      }
    auto verdict = classify_action(gens, n).kind;
    CHECK((verdict == ActionKind::Primitive) == !any_nontrivial);
  }
}

TEST_CASE("relative length matches the ball-coverage definition") {
  // brute-force oracle: the smallest r with H inside B_X(r) * K, computed by
  // expanding the ball elementwise and testing the coset-coverage directly
  auto oracle = [](const GenSet& X, const PermGroup& H, const PermGroup& K) {
    std::vector<Perm> letters;
    for (const auto& [_, p] : X.entries()) {
      letters.push_back(p);
      letters.push_back(p.inverse());
    }
    std::set<Perm> ball{Perm(X.degree())};
    auto covered = [&] {
      for (const Perm& h : H.elements(100000)) {
        bool hit = false;
        for (const Perm& b : ball)
          if (K.contains(b.inverse() * h)) {  // h = b * k
            hit = true;
            break;
          }
        if (!hit) return false;
      }
      return true;
    };
    for (std::uint64_t r = 0;; ++r) {
      if (covered()) return r;
      std::set<Perm> next = ball;
      for (const Perm& b : ball)
        for (const Perm& l : letters) next.insert(b * l);
      ball.swap(next);
    }
  };

  GenSet X(4);
  X.add("a", parse_cycles("(0 1)", 4));
  X.add("b", parse_cycles("(0 1 2 3)", 4));
  PermGroup S4(4, X.perms());
  PermGroup A4 = normal_closure(S4, {parse_cycles("(0 1 2)", 4)});
  PermGroup V4 = normal_closure(S4, {parse_cycles("(0 1)(2 3)", 4)});
  PermGroup one = PermGroup::trivial(4);

  for (const auto& [H, K] : std::vector<std::pair<PermGroup, PermGroup>>{
           {S4, A4}, {A4, V4}, {S4, V4}, {A4, one}, {S4, one}, {V4, V4}}) {
    CHECK(relative_length(X, H, K, kB) == oracle(X, H, K));
  }
}

TEST_CASE("iterated wreath mu formula at depth 3") {
  // degree 125, order 60^31: thirty-one socle-type factors of degree five
  PermGroup w3 = iterated_wreath_a5(3, WreathAction::Imprimitive);
  CHECK(w3.degree() == 125);
  CHECK(w3.order() == pow_big(60, 31));
  auto p = mu_profile(w3, kB.enum_cap);
  REQUIRE(p.available);
  CHECK(p.factors.size() == 31);
  CHECK(p.mu_na == pow_big(5, 31));  // 5^((5^3 - 1)/4)
  CHECK(p.mu_ab == 1);
}

TEST_CASE("growth profile invariants") {
  for (const char* label : {"symmetric:4", "grigorchuk:h=3", "cyclic:9"}) {
    PermGroup G = construct_by_label(label);
    auto p = growth(G.gens(), 1u << 10, kB);
    REQUIRE(p.saturated);
    CHECK(p.counts[0] == 1);
    for (std::size_t r = 0; r + 1 < p.counts.size(); ++r) {
      if (p.counts[r + 1] == p.counts[r]) {
        // constant from the first repeat on (saturation)
        CHECK(BigInt(p.counts[r]) == G.order());
        break;
      }
      CHECK(p.counts[r + 1] > p.counts[r]);
    }
  }
}

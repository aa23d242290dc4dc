#include "core/engine.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "core/action.hpp"
#include "core/errors.hpp"
#include "core/numeric_util.hpp"

namespace permdiam {

PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& seeds) {
  for (const Perm& s : seeds)
    if (!G.contains(s)) throw DomainError("normal closure seed lies outside the group");

  std::vector<Perm> gens;
  std::deque<Perm> queue;
  for (const Perm& s : seeds) {
    if (s.is_identity()) continue;
    if (std::find(gens.begin(), gens.end(), s) == gens.end()) {
      gens.push_back(s);
      queue.push_back(s);
    }
  }
  if (gens.empty()) return PermGroup::trivial(G.degree());

  PermGroup H(G.degree(), gens, "n");
  while (!queue.empty()) {
    Perm y = std::move(queue.front());
    queue.pop_front();
    for (const auto& [_, x] : G.gens().entries()) {
      Perm c = y.conjugated_by(x);
      if (!H.contains(c)) {
        gens.push_back(c);
        queue.push_back(std::move(c));
        H = PermGroup(G.degree(), gens, "n");
      }
    }
  }
  return H;
}

PermGroup verbal_subgroup(const PermGroup& G, VerbalKind kind) {
  auto xs = G.gen_perms();
  std::vector<Perm> seeds;
  auto push = [&](Perm p) {
    if (!p.is_identity() && std::find(seeds.begin(), seeds.end(), p) == seeds.end())
      seeds.push_back(std::move(p));
  };
  auto comm = [](const Perm& a, const Perm& b) {
    return a.inverse() * b.inverse() * a * b;
  };
  for (const Perm& x : xs)
    for (const Perm& y : xs) {
      if (kind == VerbalKind::Derived) {
        push(comm(x, y));
      } else {
        for (const Perm& z : xs) push(comm(comm(x, y), z));
      }
    }
  return normal_closure(G, seeds);
}

PermGroup commutator_with_group(const PermGroup& G, const PermGroup& H) {
  std::vector<Perm> seeds;
  for (const Perm& h : H.gen_perms())
    for (const Perm& x : G.gen_perms()) {
      Perm c = h.inverse() * x.inverse() * h * x;
      if (!c.is_identity() && std::find(seeds.begin(), seeds.end(), c) == seeds.end())
        seeds.push_back(std::move(c));
    }
  return normal_closure(G, seeds);
}

bool is_normal_in(const PermGroup& N, const PermGroup& G) {
  if (!G.contains_group(N)) return false;
  for (const Perm& n : N.gen_perms())
    for (const Perm& x : G.gen_perms())
      if (!N.contains(n.conjugated_by(x))) return false;
  return true;
}

bool is_soluble(const PermGroup& G) {
  PermGroup cur = G;
  while (!cur.is_trivial()) {
    PermGroup next = verbal_subgroup(cur, VerbalKind::Derived);
    if (next.order() == cur.order()) return false;
    cur = std::move(next);
  }
  return true;
}

bool is_perfect(const PermGroup& G) {
  return verbal_subgroup(G, VerbalKind::Derived).order() == G.order();
}

bool is_nilpotent(const PermGroup& G) {
  PermGroup cur = G;
  while (!cur.is_trivial()) {
    PermGroup next = commutator_with_group(G, cur);
    if (next.order() == cur.order()) return false;
    cur = std::move(next);
  }
  return true;
}

std::vector<ConjClass> conjugacy_classes(const PermGroup& G, std::uint64_t cap) {
  std::vector<Perm> els = G.elements(cap);
  std::sort(els.begin(), els.end());
  std::unordered_map<Perm, std::size_t, PermHash> index;
  index.reserve(els.size() * 2);
  for (std::size_t i = 0; i < els.size(); ++i) index.emplace(els[i], i);

  std::vector<bool> seen(els.size(), false);
  std::vector<ConjClass> classes;
  auto xs = G.gen_perms();
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (seen[i]) continue;
    // orbit of els[i] under conjugation; i is the least member
    std::vector<std::size_t> stack{i};
    seen[i] = true;
    std::uint64_t size = 0;
    while (!stack.empty()) {
      std::size_t j = stack.back();
      stack.pop_back();
      ++size;
      for (const Perm& x : xs) {
        std::size_t k = index.at(els[j].conjugated_by(x));
        if (!seen[k]) {
          seen[k] = true;
          stack.push_back(k);
        }
      }
    }
    classes.push_back(ConjClass{els[i], size});
  }
  return classes;
}

std::vector<PermGroup> normal_lattice(const PermGroup& G, std::uint64_t cap) {
  auto classes = conjugacy_classes(G, cap);
  std::vector<PermGroup> lat;
  lat.push_back(PermGroup::trivial(G.degree()));
  auto known = [&](const PermGroup& H) {
    for (const PermGroup& L : lat)
      if (L.same_group_as(H)) return true;
    return false;
  };
  std::deque<PermGroup> fresh;
  for (const auto& c : classes) {
    if (c.rep.is_identity()) continue;
    PermGroup N = normal_closure(G, {c.rep});
    if (!known(N)) {
      lat.push_back(N);
      fresh.push_back(N);
    }
  }
  while (!fresh.empty()) {
    PermGroup H = std::move(fresh.front());
    fresh.pop_front();
    std::size_t snapshot = lat.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      PermGroup J = join(H, lat[i]);
      if (!known(J)) {
        lat.push_back(J);
        fresh.push_back(std::move(J));
      }
    }
  }
  for (const PermGroup& N : lat)
    if (!is_normal_in(N, G))
      throw std::logic_error("normal lattice produced a non-normal subgroup");
  std::sort(lat.begin(), lat.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.sorted_gen_rendering() < b.sorted_gen_rendering();
  });
  return lat;
}

Perm canonical_coset_rep(const StabChain& kchain, Perm g) {
  for (const auto& L : kchain.levels()) {
    Point best = L.orbit[0];
    for (Point p : L.orbit)
      if (g(p) < g(best)) best = p;
    if (best != L.base) g = L.transversal[L.pos[best]] * g;
  }
  return g;
}

QuotientAction::QuotientAction(const PermGroup& G, const PermGroup& N, std::uint64_t cap)
    : N_(N) {
  if (N.degree() != G.degree()) throw DomainError("quotient: degree mismatch");
  if (!is_normal_in(N, G)) throw DomainError("quotient by a non-normal subgroup");
  BigInt index = G.order() / N.order();
  if (index > BigInt(cap))
    throw CapacityError("quotient index " + index.str() + " exceeds enumeration cap");
  if (index > BigInt(std::uint64_t{kMaxDegree}))
    throw CapacityError("quotient index " + index.str() + " exceeds max degree 2^16");

  const StabChain& nc = N_.chain();
  reps_.push_back(canonical_coset_rep(nc, Perm(G.degree())));
  index_.emplace(reps_[0], 0);
  auto xs = G.gen_perms();
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    for (const Perm& x : xs) {
      Perm r = canonical_coset_rep(nc, reps_[i] * x);
      if (!index_.count(r)) {
        index_.emplace(r, reps_.size());
        reps_.push_back(std::move(r));
      }
    }
  }

  std::size_t deg = reps_.size();
  GenSet qgens(deg);
  for (const auto& [label, x] : G.gens().entries()) {
    std::vector<Point> img(deg);
    for (std::size_t i = 0; i < deg; ++i)
      img[i] = static_cast<Point>(index_.at(canonical_coset_rep(nc, reps_[i] * x)));
    qgens.add(label, Perm::from_images(std::move(img)));
  }
  quotient_ = PermGroup(std::move(qgens));
}

Perm QuotientAction::canonical_rep(const Perm& g) const {
  return canonical_coset_rep(N_.chain(), g);
}

std::size_t QuotientAction::coset_of(const Perm& g) const {
  auto it = index_.find(canonical_rep(g));
  if (it == index_.end()) throw DomainError("coset lookup for an element outside the group");
  return it->second;
}

Perm QuotientAction::image_of(const Perm& g) const {
  std::vector<Point> img(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i)
    img[i] = static_cast<Point>(coset_of(reps_[i] * g));
  return Perm::from_images(std::move(img));
}

QuotientAction quotient_action(const PermGroup& G, const PermGroup& N, std::uint64_t cap) {
  return QuotientAction(G, N, cap);
}

PermGroup action_kernel(const PermGroup& G, const std::vector<Perm>& images, std::size_t m) {
  std::size_t n = G.degree();
  if (n + m > kMaxDegree) throw CapacityError("augmented degree exceeds max degree 2^16");
  if (images.size() != G.gens().size())
    throw DomainError("action_kernel: one image per generator required");
  std::vector<Perm> aug;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].degree() != m) throw DomainError("action_kernel: image degree mismatch");
    std::vector<Point> img(n + m);
    const Perm& g = G.gens().perm(i);
    for (std::size_t x = 0; x < n; ++x) img[x] = g(static_cast<Point>(x));
    for (std::size_t x = 0; x < m; ++x)
      img[n + x] = static_cast<Point>(n + images[i](static_cast<Point>(x)));
    aug.push_back(Perm::from_images(std::move(img)));
  }
  std::vector<Point> prefix(m);
  for (std::size_t x = 0; x < m; ++x) prefix[x] = static_cast<Point>(n + x);
  StabChain chain(n + m, aug, prefix);
  std::vector<Perm> kgens;
  for (const Perm& k : chain.level_gens(m)) {
    std::vector<Point> img(n);
    for (std::size_t x = 0; x < n; ++x) img[x] = k(static_cast<Point>(x));
    Perm r = Perm::from_images(std::move(img));
    if (!r.is_identity()) kgens.push_back(std::move(r));
  }
  return PermGroup(n, kgens, "k");
}

Perm restrict_perm(const Perm& p, const std::vector<Point>& domain) {
  std::vector<std::int32_t> pos(p.degree(), -1);
  for (std::size_t i = 0; i < domain.size(); ++i) pos[domain[i]] = static_cast<std::int32_t>(i);
  std::vector<Point> img(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    Point y = p(domain[i]);
    if (pos[y] < 0) throw DomainError("restriction to a non-invariant point set");
    img[i] = static_cast<Point>(pos[y]);
  }
  return Perm::from_images(std::move(img));
}

PermGroup restriction(const PermGroup& G, const std::vector<Point>& domain) {
  GenSet gens(domain.size());
  for (const auto& [label, p] : G.gens().entries()) gens.add(label, restrict_perm(p, domain));
  return PermGroup(std::move(gens));
}

std::uint64_t exponent(const PermGroup& G, std::uint64_t cap) {
  std::uint64_t e = 1;
  G.for_each_element([&](const Perm& p) { e = lcm_u64(e, p.order()); }, cap);
  return e;
}

std::uint64_t abelianization_exponent(const PermGroup& N) {
  PermGroup D = verbal_subgroup(N, VerbalKind::Derived);
  std::uint64_t e = 1;
  for (const Perm& g : N.gen_perms()) {
    std::uint64_t o = g.order();
    for (std::uint64_t d = 1; d <= o; ++d) {
      if (o % d) continue;
      if (D.contains(g.power(static_cast<std::int64_t>(d)))) {
        e = lcm_u64(e, d);
        break;
      }
    }
  }
  return e;
}

std::vector<std::uint64_t> abelian_invariants(const PermGroup& A, std::uint64_t cap) {
  if (!A.is_abelian()) throw DomainError("abelian_invariants on a nonabelian group");
  std::map<std::uint64_t, std::uint64_t> order_count;
  std::uint64_t n = 0;
  A.for_each_element(
      [&](const Perm& p) {
        ++order_count[p.order()];
        ++n;
      },
      cap);
  if (n == 1) return {};

  // Per-prime exponent multisets from the counts of solutions of x^(p^i) = 1.
  std::map<std::uint64_t, std::vector<std::uint64_t>> prime_exps;
  for (auto [p, _] : factorize_u64(n)) {
    std::vector<std::uint64_t> m;  // m[i-1] = #{j : e_j >= i}
    std::uint64_t prev = 1;
    for (std::uint64_t i = 1;; ++i) {
      // elements with order p^k, k <= i  (order divides p^i)
      std::uint64_t pk = 1, count = 0;
      for (std::uint64_t k = 0; k <= i; ++k) {
        auto it = order_count.find(pk);
        if (it != order_count.end()) count += it->second;
        if (pk > n / p) break;
        pk *= p;
      }
      if (count == prev) break;
      std::uint64_t ratio = count / prev;
      std::uint64_t mi = 0;
      while (ratio > 1) {
        ratio /= p;
        ++mi;
      }
      m.push_back(mi);
      prev = count;
    }
    std::vector<std::uint64_t> exps;  // descending exponents
    for (std::uint64_t i = 0; i < m.size(); ++i) {
      std::uint64_t this_level = m[i] - (i + 1 < m.size() ? m[i + 1] : 0);
      for (std::uint64_t t = 0; t < this_level; ++t) exps.push_back(i + 1);
    }
    std::sort(exps.rbegin(), exps.rend());
    prime_exps[p] = std::move(exps);
  }

  std::size_t k = 0;
  for (const auto& [_, exps] : prime_exps) k = std::max(k, exps.size());
  std::vector<std::uint64_t> divisors(k, 1);  // descending
  for (const auto& [p, exps] : prime_exps)
    for (std::size_t i = 0; i < exps.size(); ++i)
      for (std::uint64_t t = 0; t < exps[i]; ++t) divisors[i] *= p;
  std::reverse(divisors.begin(), divisors.end());
  return divisors;
}

Series derived_series(const PermGroup& G) {
  Series s{Series::Kind::Derived, {G}};
  PermGroup cur = G;
  while (!cur.is_trivial()) {
    PermGroup next = verbal_subgroup(cur, VerbalKind::Derived);
    if (next.order() == cur.order())
      throw DomainError("derived series stalls at a perfect group of order " +
                        cur.order().str());
    s.terms.push_back(next);
    cur = std::move(next);
  }
  return s;
}

Series gamma3_mixed_series(const PermGroup& G) {
  Series s{Series::Kind::Gamma3Mixed, {G}};
  PermGroup cur = G;
  while (!cur.is_trivial()) {
    PermGroup next = cur.is_abelian() ? verbal_subgroup(cur, VerbalKind::Derived)
                                      : verbal_subgroup(cur, VerbalKind::Gamma3);
    if (next.order() == cur.order())
      throw DomainError("gamma3 series stalls at a group of order " + cur.order().str());
    s.terms.push_back(next);
    cur = std::move(next);
  }
  return s;
}

Series chief_like_series(const PermGroup& G, std::uint64_t cap) {
  auto lat = normal_lattice(G, cap);
  Series s{Series::Kind::ChiefLike, {G}};
  PermGroup cur = G;
  while (cur.order() > 1) {
    const PermGroup* best = nullptr;
    for (const PermGroup& N : lat) {
      if (N.order() >= cur.order()) continue;
      if (!cur.contains_group(N)) continue;
      if (!best || N.order() > best->order()) best = &N;
    }
    s.terms.push_back(*best);
    cur = *best;
  }
  return s;
}

std::vector<std::uint64_t> distinct_element_orders(const PermGroup& G, std::uint64_t cap) {
  std::set<std::uint64_t> orders;
  G.for_each_element([&](const Perm& p) { orders.insert(p.order()); }, cap);
  return {orders.begin(), orders.end()};
}

FactorDescriptor identify_factor(const PermGroup& T, std::uint64_t cap) {
  BigInt o = T.order();
  if (o == 1) throw DomainError("identify_factor on the trivial group");
  if (fits_u64(o) && is_prime_u64(to_u64(o))) {
    std::uint64_t p = to_u64(o);
    return FactorDescriptor{o, FactorKind::Cyclic, "C" + std::to_string(p), p, std::nullopt};
  }
  if (!fits_u64(o) || to_u64(o) > cap)
    throw CapacityError("identify_factor beyond enumeration cap: order " + o.str());
  if (normal_lattice(T, cap).size() != 2) throw DomainError("identify_factor on a non-simple group");

  auto rows = simple_table_by_order(to_u64(o));
  if (rows.empty()) return FactorDescriptor{o, FactorKind::Unrecognized, "?", std::nullopt, std::nullopt};

  const SimpleGroupInfo* match = nullptr;
  bool need_profile = rows.size() > 1;
  for (const auto* r : rows) need_profile |= !r->element_orders.empty();
  if (need_profile) {
    auto prof = distinct_element_orders(T, cap);
    for (const auto* r : rows) {
      if (r->element_orders.empty() || r->element_orders == prof) {
        match = r;
        break;
      }
    }
  } else {
    match = rows.front();
  }
  if (!match) return FactorDescriptor{o, FactorKind::Unrecognized, "?", std::nullopt, std::nullopt};
  return FactorDescriptor{o, FactorKind::Recognized, match->name, match->mu, match->rank};
}

namespace {

std::vector<Point> group_moved_points(const PermGroup& G) {
  std::vector<bool> moved(G.degree(), false);
  for (const Perm& g : G.gen_perms())
    for (std::size_t x = 0; x < g.degree(); ++x)
      if (g(static_cast<Point>(x)) != x) moved[x] = true;
  std::vector<Point> out;
  for (std::size_t x = 0; x < moved.size(); ++x)
    if (moved[x]) out.push_back(static_cast<Point>(x));
  return out;
}

// order == m! (Sym) or m!/2 (Alt)?
enum class GiantKind { None, Alt, Sym };
GiantKind giant_by_order(const BigInt& order, std::size_t m) {
  if (m < 5) return GiantKind::None;
  BigInt fact = 1, twice = order * 2;
  for (std::size_t i = 2; i <= m; ++i) {
    fact *= static_cast<std::uint64_t>(i);
    if (fact > twice) return GiantKind::None;
  }
  if (fact == order) return GiantKind::Sym;
  if (fact == twice) return GiantKind::Alt;
  return GiantKind::None;
}

void structural_factors(const PermGroup& H, std::uint64_t cap,
                        std::vector<FactorDescriptor>& out) {
  BigInt o = H.order();
  if (o == 1) return;

  auto moved = group_moved_points(H);
  if (moved.size() < H.degree()) {
    structural_factors(restriction(H, moved), cap, out);
    return;
  }

  auto orbits = orbit_partition(H.gen_perms(), H.degree());
  if (orbits.size() > 1) {
    const auto& omega = orbits.front();
    structural_factors(restriction(H, omega), cap, out);
    std::vector<Point> rest;
    for (const auto& orb : orbits)
      if (&orb != &orbits.front()) rest.insert(rest.end(), orb.begin(), orb.end());
    std::sort(rest.begin(), rest.end());
    PermGroup kernel(H.degree(), H.pointwise_stabilizer_gens(omega), "k");
    structural_factors(restriction(kernel, rest), cap, out);
    return;
  }

  if (fits_u64(o) && is_prime_u64(to_u64(o))) {
    std::uint64_t p = to_u64(o);
    out.push_back(FactorDescriptor{o, FactorKind::Cyclic, "C" + std::to_string(p), p, std::nullopt});
    return;
  }

  // transitive on every point from here
  switch (giant_by_order(o, H.degree())) {
    case GiantKind::Alt: {
      auto info = alternating_info(H.degree());
      out.push_back(FactorDescriptor{o, FactorKind::Recognized, info.name, info.mu, info.rank});
      return;
    }
    case GiantKind::Sym: {
      auto info = alternating_info(H.degree());
      out.push_back(FactorDescriptor{o / 2, FactorKind::Recognized, info.name, info.mu, info.rank});
      out.push_back(FactorDescriptor{2, FactorKind::Cyclic, "C2", 2, std::nullopt});
      return;
    }
    case GiantKind::None:
      break;
  }

  if (fits_u64(o) && to_u64(o) <= cap) {
    auto res = composition_series(H, cap);
    out.insert(out.end(), res.factors.begin(), res.factors.end());
    return;
  }

  auto cls = classify_action(H.gen_perms(), H.degree());
  if (cls.kind == ActionKind::Imprimitive) {
    const auto& blocks = cls.partition;
    std::vector<std::size_t> block_of(H.degree());
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (Point x : blocks[b]) block_of[x] = b;
    std::vector<Perm> images;
    for (const Perm& g : H.gen_perms()) {
      std::vector<Point> img(blocks.size());
      for (std::size_t b = 0; b < blocks.size(); ++b)
        img[b] = static_cast<Point>(block_of[g(blocks[b].front())]);
      images.push_back(Perm::from_images(std::move(img)));
    }
    structural_factors(PermGroup(blocks.size(), images, "b"), cap, out);
    structural_factors(action_kernel(H, images, blocks.size()), cap, out);
    return;
  }

  PermGroup derived = verbal_subgroup(H, VerbalKind::Derived);
  if (derived.order() < o) {
    BigInt index = o / derived.order();
    if (fits_u64(index)) {
      for (auto [p, k] : factorize_u64(to_u64(index)))
        for (std::uint64_t t = 0; t < k; ++t)
          out.push_back(FactorDescriptor{p, FactorKind::Cyclic, "C" + std::to_string(p), p,
                                         std::nullopt});
    } else {
      out.push_back(FactorDescriptor{index, FactorKind::Unrecognized, "?", std::nullopt,
                                     std::nullopt});
    }
    structural_factors(derived, cap, out);
    return;
  }

  // perfect, primitive, beyond the cap, not a natural giant: no honest name
  out.push_back(FactorDescriptor{o, FactorKind::Unrecognized, "?", std::nullopt, std::nullopt});
}

}  // namespace

std::vector<FactorDescriptor> composition_factors(const PermGroup& G, std::uint64_t cap) {
  std::vector<FactorDescriptor> out;
  structural_factors(G, cap, out);
  return out;
}

CompositionResult composition_series(const PermGroup& G, std::uint64_t cap) {
  BigInt o = G.order();
  if (!fits_u64(o) || to_u64(o) > cap)
    return CompositionResult{std::nullopt, composition_factors(G, cap)};

  CompositionResult res;
  Series series{Series::Kind::Composition, {G}};
  std::vector<FactorDescriptor> factors;
  PermGroup cur = G;
  while (cur.order() > 1) {
    auto lat = normal_lattice(cur, cap);
    if (lat.size() == 2) {
      factors.push_back(identify_factor(cur, cap));
      series.terms.push_back(PermGroup::trivial(G.degree()));
      break;
    }
    // largest proper normal subgroup; lattice is sorted by (order, rendering),
    // so the first entry of the top proper order block is the tie-break winner
    const PermGroup* best = nullptr;
    for (const PermGroup& N : lat) {
      if (N.order() >= cur.order()) continue;
      if (!best || N.order() > best->order()) best = &N;
    }
    QuotientAction qa(cur, *best, cap);
    factors.push_back(identify_factor(qa.quotient(), cap));
    series.terms.push_back(*best);
    cur = *best;
  }
  res.series = std::move(series);
  res.factors = std::move(factors);
  return res;
}

}  // namespace permdiam

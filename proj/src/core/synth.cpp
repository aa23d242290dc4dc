#include "core/synth.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_map>

#include "core/action.hpp"
#include "core/constructions.hpp"
#include "core/diametry.hpp"
#include "core/errors.hpp"
#include "core/numeric_util.hpp"

namespace permdiam {

std::map<std::string, Word> CertifiedGenSet::word_table() const {
  std::map<std::string, Word> t;
  for (const auto& [label, w] : words) t.emplace(label, w);
  return t;
}

CertifiedGenSet identity_certificate(const GenSet& X, const std::string& name) {
  CertifiedGenSet c;
  c.name = name;
  c.ambient = X;
  c.subgroup = PermGroup(X);
  for (const auto& [label, _] : X.entries()) c.words.emplace_back(label, Word::single(label));
  c.max_length = X.size() ? 1 : 0;
  c.bound = BoundTag{"identity", 1};
  return c;
}

bool certificate_valid(const LengthCertificate& cert, const GenSet& X) {
  if (cert.word.evaluate(X) != cert.element) return false;
  if (cert.asserted_bound && BigInt(cert.word.length()) > cert.asserted_bound->value)
    return false;
  return true;
}

namespace {

struct SignedLetter {
  Letter name;
  Perm perm;
};

std::vector<SignedLetter> signed_letters(const GenSet& X) {
  std::vector<SignedLetter> out;
  auto add = [&](const std::string& label, int sign, Perm p) {
    if (p.is_identity()) return;
    for (const auto& l : out)
      if (l.perm == p) return;
    out.push_back(SignedLetter{Letter{label, sign}, std::move(p)});
  };
  for (const auto& [label, p] : X.entries()) {
    add(label, 1, p);
    add(label, -1, p.inverse());
  }
  return out;
}

struct WordBall {
  std::vector<std::pair<Perm, Word>> elems;  // BFS order: shortest words first
  std::unordered_map<Perm, std::size_t, PermHash> index;
  bool saturated = false;
};

WordBall word_ball(const GenSet& X, std::uint64_t max_radius, std::uint64_t max_states) {
  WordBall ball;
  auto letters = signed_letters(X);
  ball.elems.emplace_back(Perm(X.degree()), Word{});
  ball.index.emplace(ball.elems[0].first, 0);
  std::size_t lo = 0, hi = 1;
  std::uint64_t radius = 0;
  while (lo < hi && radius < max_radius) {
    ++radius;
    for (std::size_t i = lo; i < hi; ++i) {
      for (const auto& l : letters) {
        Perm next = ball.elems[i].first * l.perm;
        if (ball.index.count(next)) continue;
        if (ball.elems.size() >= max_states)
          throw CapacityError("word ball exceeds the state budget at " +
                              std::to_string(ball.elems.size()) + " elements");
        Word w = ball.elems[i].second;
        w.append(l.name.label, l.name.sign);
        ball.index.emplace(next, ball.elems.size());
        ball.elems.emplace_back(std::move(next), std::move(w));
      }
    }
    lo = hi;
    hi = ball.elems.size();
  }
  ball.saturated = lo >= hi;
  return ball;
}

struct CosetBfs {
  std::vector<Perm> reps;  // canonical representatives, BFS order
  std::vector<Word> words;
  std::vector<std::uint64_t> level;
  std::uint64_t diameter = 0;
};

CosetBfs coset_bfs(const GenSet& X, const PermGroup& N, const Budget& budget) {
  const StabChain& nchain = N.chain();
  auto letters = signed_letters(X);
  CosetBfs bfs;
  std::unordered_map<Perm, std::size_t, PermHash> index;
  bfs.reps.push_back(canonical_coset_rep(nchain, Perm(X.degree())));
  bfs.words.emplace_back();
  bfs.level.push_back(0);
  index.emplace(bfs.reps[0], 0);
  std::size_t lo = 0, hi = 1;
  std::uint64_t radius = 0;
  std::uint64_t max_states = budget.max_states_for_key(X.degree() * 2);
  while (lo < hi) {
    ++radius;
    for (std::size_t i = lo; i < hi; ++i) {
      for (const auto& l : letters) {
        Perm next = canonical_coset_rep(nchain, bfs.reps[i] * l.perm);
        if (index.count(next)) continue;
        if (bfs.reps.size() >= max_states)
          throw CapacityError("coset BFS exceeds the state budget");
        Word w = bfs.words[i];
        w.append(l.name.label, l.name.sign);
        index.emplace(next, bfs.reps.size());
        bfs.reps.push_back(std::move(next));
        bfs.words.push_back(std::move(w));
        bfs.level.push_back(radius);
        bfs.diameter = radius;
      }
    }
    lo = hi;
    hi = bfs.reps.size();
  }
  return bfs;
}

}  // namespace

CertifiedGenSet schreier_generators(const GenSet& X, const PermGroup& N, const Budget& budget) {
  PermGroup G(X.degree(), X.perms(), "x");
  if (!is_normal_in(N, G))
    throw DomainError("schreier_generators: N is not normal in <X>");

  CosetBfs cosets = coset_bfs(X, N, budget);
  const StabChain& nchain = N.chain();
  std::unordered_map<Perm, std::size_t, PermHash> coset_index;
  std::vector<Perm> evaluated;  // actual transversal elements (word values)
  for (std::size_t i = 0; i < cosets.reps.size(); ++i) {
    coset_index.emplace(cosets.reps[i], i);
    evaluated.push_back(cosets.words[i].evaluate(X));
  }

  CertifiedGenSet out;
  out.name = "schreier";
  out.ambient = X;
  std::unordered_map<Perm, std::size_t, PermHash> seen;
  GenSet sub_gens(X.degree());
  std::size_t label_idx = 0;
  for (std::size_t i = 0; i < cosets.reps.size(); ++i) {
    for (const auto& [label, x] : X.entries()) {
      Perm moved = evaluated[i] * x;
      std::size_t j = coset_index.at(canonical_coset_rep(nchain, moved));
      Perm y = moved * evaluated[j].inverse();
      if (y.is_identity() || seen.count(y)) continue;
      seen.emplace(y, label_idx);
      Word w = cosets.words[i];
      w.append(label, 1);
      w.append(cosets.words[j].inverse());
      std::string l = "s" + std::to_string(label_idx++);
      sub_gens.add(l, y);
      out.max_length = std::max<std::uint64_t>(out.max_length, w.length());
      out.words.emplace_back(std::move(l), std::move(w));
    }
  }
  out.subgroup = sub_gens.size() ? PermGroup(std::move(sub_gens)) : PermGroup::trivial(X.degree());
  out.bound = BoundTag{"lemma:schreier", BigInt(2 * cosets.diameter + 1)};
  if (out.subgroup.order() != N.order())
    throw std::logic_error("schreier generators failed to generate N");
  if (BigInt(out.max_length) > out.bound.value)
    throw std::logic_error("schreier word exceeded the 2*diam+1 bound");
  return out;
}

MilnorResult milnor_stabilize(const GenSet& X, const std::vector<Word>& seeds,
                              const Budget& budget) {
  auto letters = signed_letters(X);

  // element -> shortest word; insertion order kept for labels
  std::unordered_map<Perm, std::size_t, PermHash> index;
  std::vector<std::pair<Perm, Word>> zset;
  std::uint64_t seed_len = 0;
  for (const Word& w : seeds) {
    Perm v = w.evaluate(X);
    if (v.is_identity()) continue;
    seed_len = std::max<std::uint64_t>(seed_len, w.length());
    auto it = index.find(v);
    if (it == index.end()) {
      index.emplace(v, zset.size());
      zset.emplace_back(std::move(v), w);
    } else if (w.length() < zset[it->second].second.length()) {
      zset[it->second].second = w;
    }
  }

  auto group_of = [&](std::size_t count) {
    std::vector<Perm> gens;
    for (std::size_t i = 0; i < count; ++i) gens.push_back(zset[i].first);
    return gens.empty() ? PermGroup::trivial(X.degree()) : PermGroup(X.degree(), gens, "z");
  };

  MilnorResult res;
  res.iterations = 0;
  if (zset.empty()) {
    res.gens.name = "milnor";
    res.gens.ambient = X;
    res.gens.subgroup = PermGroup::trivial(X.degree());
    res.gens.bound = BoundTag{"lemma:milnor", BigInt(seed_len)};
    return res;
  }

  PermGroup cur = group_of(zset.size());
  std::size_t frontier_begin = 0, frontier_end = zset.size();
  std::size_t stable_size = zset.size();
  for (std::uint64_t k = 1;; ++k) {
    // Z_k = conjugates of Z_{k-1} by single letters
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const auto& l : letters) {
        Perm c = zset[i].first.conjugated_by(l.perm);
        if (index.count(c)) continue;
        if (zset.size() >= budget.enum_cap)
          throw CapacityError("milnor conjugate set exceeds the enumeration cap");
        Word w = Word::conjugate(zset[i].second, Word::single(l.name.label, l.name.sign));
        index.emplace(c, zset.size());
        zset.emplace_back(std::move(c), std::move(w));
      }
    }
    PermGroup next = group_of(zset.size());
    if (next.order() == cur.order()) {
      res.iterations = k - 1;
      zset.resize(stable_size);  // Z_{k-1} suffices; words stay <= len + 2(k-1)
      break;
    }
    frontier_begin = frontier_end;
    frontier_end = zset.size();
    stable_size = zset.size();
    cur = std::move(next);
  }

  CertifiedGenSet& out = res.gens;
  out.name = "milnor";
  out.ambient = X;
  GenSet sub(X.degree());
  for (std::size_t i = 0; i < zset.size(); ++i) {
    std::string label = "z" + std::to_string(i);
    sub.add(label, zset[i].first);
    out.max_length = std::max<std::uint64_t>(out.max_length, zset[i].second.length());
    out.words.emplace_back(std::move(label), std::move(zset[i].second));
  }
  out.subgroup = PermGroup(std::move(sub));
  std::uint64_t lambda = floor_log2(out.subgroup.order());
  out.bound = BoundTag{"lemma:milnor", BigInt(seed_len + 2 * lambda)};
  if (res.iterations > lambda)
    throw std::logic_error("milnor iteration count exceeded floor(log2 |N|)");
  if (BigInt(out.max_length) > out.bound.value)
    throw std::logic_error("milnor word exceeded the len+2*lambda bound");
  return res;
}

CertifiedGenSet commutator_generators(const GenSet& X, const CertifiedGenSet& Y,
                                      VerbalKind kind, const Budget& budget) {
  PermGroup G(X.degree(), X.perms(), "x");
  if (!is_normal_in(Y.subgroup, G))
    throw DomainError("commutator_generators: N is not normal in <X>");

  // evaluate the certified generators once, then seed distinct commutator
  // values; words are built only for values that survive deduplication
  std::vector<std::pair<Perm, Word>> ygens;
  for (const auto& [label, w] : Y.words) {
    Perm v = w.evaluate(X);
    if (!v.is_identity()) ygens.emplace_back(std::move(v), w);
  }
  std::vector<Word> seeds;
  std::unordered_map<Perm, bool, PermHash> seen;
  auto push_seed = [&](const Perm& value, const Word& word) {
    if (value.is_identity() || seen.count(value)) return;
    seen.emplace(value, true);
    seeds.push_back(word);
  };
  for (const auto& [vi, wi] : ygens) {
    for (const auto& [vj, wj] : ygens) {
      Perm cij = vi.inverse() * vj.inverse() * vi * vj;
      if (kind == VerbalKind::Derived) {
        push_seed(cij, Word::commutator(wi, wj));
      } else {
        Word wij = Word::commutator(wi, wj);
        for (const auto& [vk, wk] : ygens) {
          Perm c = cij.inverse() * vk.inverse() * cij * vk;
          push_seed(c, Word::commutator(wij, wk));
        }
      }
    }
  }

  MilnorResult stab = milnor_stabilize(X, seeds, budget);
  CertifiedGenSet out = std::move(stab.gens);
  out.name = kind == VerbalKind::Derived ? "commutator-derived" : "commutator-gamma3";

  PermGroup expected = verbal_subgroup(Y.subgroup, kind);
  if (out.subgroup.order() != expected.order())
    throw std::logic_error("commutator generators disagree with the verbal subgroup");

  std::uint64_t lambda = out.subgroup.order() > 1 ? floor_log2(out.subgroup.order()) : 0;
  std::uint64_t pattern = kind == VerbalKind::Derived ? 4 : 10;
  out.bound = BoundTag{kind == VerbalKind::Derived ? "lemma:commutator-derived"
                                                   : "lemma:commutator-gamma3",
                       BigInt(pattern * Y.max_length + 2 * lambda)};
  if (BigInt(out.max_length) > out.bound.value)
    throw std::logic_error("commutator generator word exceeded the lemma bound");
  return out;
}

std::vector<CertifiedGenSet> derived_tower(const GenSet& X, const Budget& budget) {
  std::vector<CertifiedGenSet> tower;
  tower.push_back(identity_certificate(X));
  BigInt g_order = tower[0].subgroup.order();
  std::uint64_t log2G = g_order > 1 ? floor_log2(g_order) : 0;
  while (!tower.back().subgroup.is_trivial()) {
    CertifiedGenSet next = commutator_generators(X, tower.back(), VerbalKind::Derived, budget);
    if (next.subgroup.order() == tower.back().subgroup.order()) break;  // perfect term
    // tower bound 4^i log2|G| holds alongside the per-step lemma bound
    BigInt tower_bound = pow_big(4, tower.size()) * log2G;
    if (BigInt(next.max_length) > tower_bound)
      throw std::logic_error("derived tower word exceeded 4^i log2|G|");
    next.name = "tower:" + std::to_string(tower.size());
    next.bound = BoundTag{"lemma:derived-tower", tower_bound};
    tower.push_back(std::move(next));
  }
  return tower;
}

LengthCertificate abelian_solve(const CertifiedGenSet& Y, const Perm& a, const Budget& budget) {
  const PermGroup& A = Y.subgroup;
  if (!A.is_abelian()) throw DomainError("abelian_solve on a nonabelian group");
  if (!A.contains(a)) throw DomainError("abelian_solve: element lies outside the group");

  LengthCertificate cert;
  cert.element = a;
  cert.genset_name = Y.name;

  BigInt order = A.order();
  std::uint64_t lambda = order > 1 ? floor_log2(order) : 0;

  if (a.is_identity()) {
    cert.asserted_bound = BoundTag{"lemma:abelian-diameter", BigInt(0)};
    return cert;
  }

  // greedy pruning to an irredundant generating subset, in input order
  std::vector<std::pair<std::string, Perm>> kept;
  for (const auto& [label, w] : Y.words) {
    Perm v = w.evaluate(Y.ambient);
    if (!v.is_identity()) kept.emplace_back(label, std::move(v));
  }
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<Perm> rest;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) rest.push_back(kept[j].second);
    PermGroup sub = rest.empty() ? PermGroup::trivial(A.degree()) : PermGroup(A.degree(), rest);
    if (sub.order() == order)
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  if (kept.size() > lambda)
    throw std::logic_error("irredundant abelian generating set larger than log2|A|");

  // meet in the middle over exponent vectors, per-generator range [0, ord)
  std::vector<std::uint64_t> ords;
  for (const auto& [_, v] : kept) ords.push_back(v.order());
  std::size_t half = (kept.size() + 1) / 2;
  std::uint64_t left_count = 1, right_count = 1;
  for (std::size_t i = 0; i < half; ++i) left_count *= ords[i];
  for (std::size_t i = half; i < kept.size(); ++i) right_count *= ords[i];
  if (left_count > budget.enum_cap || right_count > budget.enum_cap)
    throw CapacityError("abelian_solve: exponent space exceeds the enumeration cap");

  auto sweep = [](std::vector<std::uint64_t>& e, const std::vector<std::uint64_t>& limits,
                  std::size_t from) {
    for (std::size_t i = e.size(); i-- > 0;) {
      if (++e[i] < limits[from + i]) return true;
      e[i] = 0;
    }
    return false;
  };

  std::unordered_map<Perm, std::vector<std::uint64_t>, PermHash> left;
  {
    std::vector<std::uint64_t> e(half, 0);
    do {
      Perm v(A.degree());
      for (std::size_t i = 0; i < half; ++i)
        v = v * kept[i].second.power(static_cast<std::int64_t>(e[i]));
      left.emplace(std::move(v), e);  // first (lexicographically least) wins
    } while (sweep(e, ords, 0));
  }

  std::vector<std::uint64_t> solution;
  {
    std::vector<std::uint64_t> e(kept.size() - half, 0);
    do {
      Perm r(A.degree());
      for (std::size_t i = 0; i < e.size(); ++i)
        r = r * kept[half + i].second.power(static_cast<std::int64_t>(e[i]));
      auto it = left.find(a * r.inverse());
      if (it != left.end()) {
        solution = it->second;
        solution.insert(solution.end(), e.begin(), e.end());
        break;
      }
    } while (sweep(e, ords, half));
  }
  if (solution.size() != kept.size())
    throw std::logic_error("abelian_solve: exponent solve failed");

  Perm check(A.degree());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::int64_t e = static_cast<std::int64_t>(solution[i]);
    std::int64_t o = static_cast<std::int64_t>(ords[i]);
    std::int64_t signed_e = (e > o - e) ? e - o : e;  // shorter signed form
    cert.word.append(Word::single(kept[i].first, signed_e < 0 ? -1 : 1)
                         .pow(signed_e < 0 ? -signed_e : signed_e));
    check = check * kept[i].second.power(signed_e);
  }
  if (check != a) throw std::logic_error("abelian_solve: word mismatch");

  std::uint64_t expA = 1;
  for (std::uint64_t o : ords) expA = lcm_u64(expA, o);
  cert.asserted_bound = BoundTag{"lemma:abelian-diameter", BigInt(expA) * lambda};
  return cert;
}

LengthCertificate soluble_solve(const GenSet& X, const Perm& g, const Budget& budget) {
  PermGroup G(X.degree(), X.perms(), "x");
  if (!G.contains(g)) throw DomainError("soluble_solve: element lies outside <X>");

  auto tower = derived_tower(X, budget);
  if (!tower.back().subgroup.is_trivial())
    throw DomainError("soluble_solve: insoluble group; derived series stalls at a perfect "
                      "term of order " +
                      tower.back().subgroup.order().str());

  LengthCertificate cert;
  cert.element = g;
  cert.genset_name = "X";

  std::size_t L = tower.size() - 1;
  std::uint64_t eps0 = 1;
  for (std::size_t i = 0; i < L; ++i)
    eps0 = std::max(eps0, abelianization_exponent(tower[i].subgroup));
  double log2G = log2_big(G.order());
  double bound = L ? static_cast<double>(eps0) * std::pow(4.0, static_cast<double>(L - 1)) *
                         log2G * log2G
                   : 0.0;
  BigInt tag_value;
  if (bound < 9e18) {
    tag_value = BigInt(static_cast<long long>(std::floor(bound)));
  } else {
    // integer form, slightly looser than the real-log bound but overflow-free
    std::uint64_t lg = G.order() > 1 ? floor_log2(G.order()) + 1 : 0;
    tag_value = BigInt(eps0) * pow_big(4, L ? L - 1 : 0) * lg * lg;
  }
  cert.asserted_bound = BoundTag{"theorem:soluble-diameter", tag_value};

  Perm cur = g;
  for (std::size_t i = 0; i < L && !cur.is_identity(); ++i) {
    const CertifiedGenSet& level = tower[i];
    const PermGroup& next = tower[i + 1].subgroup;
    Word level_word;  // over level's labels
    if (next.is_trivial()) {
      level_word = abelian_solve(level, cur, budget).word;
    } else {
      QuotientAction qa(level.subgroup, next, budget.enum_cap);
      CertifiedGenSet qcert = identity_certificate(qa.quotient().gens(), level.name);
      Perm image = qa.image_of(cur);
      level_word = abelian_solve(qcert, image, budget).word;
    }
    Perm h = level_word.evaluate(level.subgroup.gens());
    cert.word.append(level_word.substituted(level.word_table()));
    cur = h.inverse() * cur;
    if (!next.contains(cur))
      throw std::logic_error("soluble_solve: residue escaped the derived series");
  }
  if (!cur.is_identity()) throw std::logic_error("soluble_solve: nonidentity residue");
  cert.word = cert.word.freely_reduced();
  if (cert.word.evaluate(X) != g) throw std::logic_error("soluble_solve: word mismatch");
  if (BigInt(cert.word.length()) > cert.asserted_bound->value &&
      cert.asserted_bound->value > 0)
    throw std::logic_error("soluble_solve: word exceeded the soluble bound");
  return cert;
}

namespace {

Perm project(const Perm& g, const std::vector<Point>& domain) {
  return restrict_perm(g, domain);
}

}  // namespace

CascadeResult socle_cascade(const PermGroup& M, const std::vector<SocleFactor>& factors,
                            std::uint64_t r, std::uint64_t m, const Budget& budget) {
  const GenSet& X = M.gens();
  std::size_t k = factors.size();
  if (k == 0) throw DomainError("socle_cascade: no factors");

  // factor screens + precondition checks
  std::vector<GenSet> screen_gens;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& f = factors[i];
    GenSet sg(f.domain.size());
    for (const auto& [label, p] : X.entries()) {
      Perm rp = [&] {
        try {
          return restrict_perm(p, f.domain);
        } catch (const DomainError&) {
          throw DomainError("socle_cascade: factor " + std::to_string(i) +
                            " domain is not invariant");
        }
      }();
      sg.add(label, std::move(rp));
    }
    PermGroup Mi(sg);
    if (f.N.degree() != f.domain.size())
      throw DomainError("socle_cascade: factor " + std::to_string(i) + " N degree mismatch");
    if (!is_normal_in(f.N, Mi))
      throw DomainError("socle_cascade: factor " + std::to_string(i) + ": N not normal in M_i");
    if (floor_log2(f.N.order()) > m)
      throw DomainError("socle_cascade: factor " + std::to_string(i) +
                        ": floor(log2|N|) exceeds m");
    // minimal normal: the closure of every nontrivial element is all of N
    for (const Perm& x : f.N.elements(budget.enum_cap)) {
      if (x.is_identity()) continue;
      if (normal_closure(Mi, {x}).order() != f.N.order())
        throw DomainError("socle_cascade: factor " + std::to_string(i) +
                          ": N is not minimal normal");
    }
    // self-centralizing: C_{M_i}(N_i) <= N_i
    auto ngens = f.N.gen_perms();
    bool ok = true;
    Mi.for_each_element(
        [&](const Perm& u) {
          if (!ok) return;
          for (const Perm& ng : ngens)
            if (u * ng != ng * u) return;
          if (!f.N.contains(u)) ok = false;
        },
        budget.enum_cap);
    if (!ok)
      throw DomainError("socle_cascade: factor " + std::to_string(i) +
                        ": N is not self-centralizing");
    screen_gens.push_back(std::move(sg));
  }

  // per-factor seeds in B_X(r) via projection BFS
  std::vector<Word> seeds(k);
  for (std::size_t i = 0; i < k; ++i) {
    WordBall ball = word_ball(screen_gens[i], r, budget.enum_cap);
    bool found = false;
    for (const auto& [val, w] : ball.elems) {
      if (!val.is_identity() && factors[i].N.contains(val)) {
        seeds[i] = w;
        found = true;
        break;
      }
    }
    if (!found)
      throw DomainError("socle_cascade: factor " + std::to_string(i) +
                        " has no seed inside B_X(" + std::to_string(r) + ")");
  }

  CascadeResult result;
  auto in_Nj = [&](const Perm& g, std::size_t j) {
    return factors[j].N.contains(project(g, factors[j].domain));
  };

  // solve(I): word w with 1 != pi_I(eval(w)) in prod_{i in I} N_i
  std::function<std::pair<Word, Perm>(const std::vector<std::size_t>&)> solve =
      [&](const std::vector<std::size_t>& I) -> std::pair<Word, Perm> {
    if (I.size() == 1) {
      Word w = seeds[I[0]];
      return {w, w.evaluate(X)};
    }
    std::vector<std::size_t> I1(I.begin(), I.begin() + (I.size() + 1) / 2);
    auto [xw, xv] = solve(I1);
    std::vector<std::size_t> J;
    for (std::size_t j : I)
      if (!in_Nj(xv, j)) J.push_back(j);
    if (J.empty()) return {xw, xv};
    auto [yw, yv] = solve(J);
    std::size_t j = SIZE_MAX;
    for (std::size_t cand : J)
      if (!project(yv, factors[cand].domain).is_identity()) {
        j = cand;
        break;
      }
    if (j == SIZE_MAX) throw std::logic_error("socle_cascade: solved element vanished on J");

    // h in B_X(m) with a non-commuting conjugate on the j screen
    Perm xj = project(xv, factors[j].domain);
    Perm yj = project(yv, factors[j].domain);
    WordBall ball = word_ball(screen_gens[j], m, budget.enum_cap);
    for (const auto& [hj, hw] : ball.elems) {
      Perm yjh = yj.conjugated_by(hj);
      if (xj * yjh != yjh * xj) {
        Word yh = Word::conjugate(yw, hw);
        Word gw = Word::commutator(xw, yh);
        ++result.commutator_steps;
        return {gw, gw.evaluate(X)};
      }
    }
    throw std::logic_error("socle_cascade: no separating conjugate inside B_X(m)");
  };

  std::vector<std::size_t> all(k);
  for (std::size_t i = 0; i < k; ++i) all[i] = i;
  auto [word, value] = solve(all);

  if (value.is_identity()) throw std::logic_error("socle_cascade produced the identity");
  for (std::size_t i = 0; i < k; ++i)
    if (!in_Nj(value, i))
      throw std::logic_error("socle_cascade: projection escaped N_" + std::to_string(i));

  result.element = value;
  result.cert.element = value;
  result.cert.word = word;
  result.cert.genset_name = "X";
  result.cert.asserted_bound =
      BoundTag{"lemma:socle-cascade", BigInt(4) * k * k * (BigInt(r) + 2 * m)};
  if (BigInt(word.length()) > result.cert.asserted_bound->value)
    throw std::logic_error("socle_cascade: word exceeded 4k^2(r+2m)");
  return result;
}

LengthCertificate direct_product_solve(const GenSet& X, const Perm& target,
                                       const Budget& budget) {
  PermGroup G(X.degree(), X.perms(), "x");
  if (!G.contains(target)) throw DomainError("direct_product_solve: target outside <X>");

  LengthCertificate cert;
  cert.element = target;
  cert.genset_name = "X";

  auto domains = orbit_partition(X.perms(), X.degree());
  std::size_t n = domains.size();

  // factor screens; each must be nonabelian simple, and G their full product
  std::vector<PermGroup> screens;
  std::vector<GenSet> screen_gens;
  BigInt prod = 1;
  std::uint64_t max_rank = 0;
  bool ranks_known = true;
  for (std::size_t i = 0; i < n; ++i) {
    GenSet sg(domains[i].size());
    for (const auto& [label, p] : X.entries()) sg.add(label, restrict_perm(p, domains[i]));
    PermGroup Ti(sg);
    if (Ti.is_abelian() || normal_lattice(Ti, budget.enum_cap).size() != 2)
      throw DomainError("direct_product_solve: factor " + std::to_string(i) +
                        " is not nonabelian simple");
    prod *= Ti.order();
    FactorDescriptor d = identify_factor(Ti, budget.enum_cap);
    if (d.rank)
      max_rank = std::max(max_rank, *d.rank);
    else
      ranks_known = false;
    screens.push_back(std::move(Ti));
    screen_gens.push_back(std::move(sg));
  }
  if (prod != G.order())
    throw DomainError("direct_product_solve: <X> is not the internal direct product of its "
                      "orbit restrictions");

  if (target.is_identity()) {
    cert.asserted_bound = BoundTag{"theorem:direct-product", 0};
    return cert;
  }

  if (n == 1) {
    LengthResult lr = length_bfs(X, target, budget);
    cert.word = lr.witness;
    cert.asserted_bound = BoundTag{"bfs-exact", BigInt(lr.length)};
    return cert;
  }

  // exact per-factor diameters and shortest-word tables over X labels
  std::uint64_t d = 0;
  std::vector<WordBall> tables;
  for (std::size_t i = 0; i < n; ++i) {
    WordBall ball = word_ball(screen_gens[i], UINT64_MAX, budget.enum_cap);
    std::uint64_t diam_i = ball.elems.empty() ? 0 : ball.elems.back().second.length();
    d = std::max(d, diam_i);
    tables.push_back(std::move(ball));
  }

  Word total;
  for (std::size_t i = 0; i < n; ++i) {
    Perm target_i = project(target, domains[i]);
    if (target_i.is_identity()) continue;

    // per-coordinate killers: word with identity j-part and nontrivial i-part
    std::deque<std::pair<std::vector<std::size_t>, std::unordered_map<Perm, Word, PermHash>>>
        queue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Point> pair_domain;
      pair_domain.insert(pair_domain.end(), domains[i].begin(), domains[i].end());
      pair_domain.insert(pair_domain.end(), domains[j].begin(), domains[j].end());
      std::sort(pair_domain.begin(), pair_domain.end());
      GenSet pg(pair_domain.size());
      for (const auto& [label, p] : X.entries()) pg.add(label, restrict_perm(p, pair_domain));
      // positions of each factor's points inside the pair screen
      std::vector<Point> pos_i, pos_j;
      for (std::size_t x = 0; x < pair_domain.size(); ++x) {
        if (std::binary_search(domains[i].begin(), domains[i].end(), pair_domain[x]))
          pos_i.push_back(static_cast<Point>(x));
        else
          pos_j.push_back(static_cast<Point>(x));
      }
      WordBall ball = word_ball(pg, UINT64_MAX, budget.enum_cap);
      const Word* found = nullptr;
      for (const auto& [val, w] : ball.elems) {
        if (restrict_perm(val, pos_j).is_identity() && !restrict_perm(val, pos_i).is_identity()) {
          found = &w;
          break;
        }
      }
      if (!found) throw std::logic_error("direct_product_solve: no killer word found");
      // expand to the full conjugacy class on the i screen
      Perm seed_i = found->evaluate(screen_gens[i]);
      std::unordered_map<Perm, Word, PermHash> cls;
      for (const auto& [t, tw] : tables[i].elems) {
        Perm c = seed_i.conjugated_by(t);
        if (!cls.count(c)) cls.emplace(std::move(c), Word::conjugate(*found, tw));
      }
      queue.emplace_back(std::vector<std::size_t>{j}, std::move(cls));
    }

    // doubling: combine kill-sets pairwise with commutators
    while (queue.size() > 1) {
      auto [J1, m1] = std::move(queue.front());
      queue.pop_front();
      auto [J2, m2] = std::move(queue.front());
      queue.pop_front();
      // deterministic scan for a non-commuting pair
      std::vector<Perm> k1, k2;
      for (const auto& [c, _] : m1) k1.push_back(c);
      for (const auto& [c, _] : m2) k2.push_back(c);
      std::sort(k1.begin(), k1.end());
      std::sort(k2.begin(), k2.end());
      const Perm* c1 = nullptr;
      const Perm* c2 = nullptr;
      for (const Perm& a : k1) {
        for (const Perm& b : k2) {
          if (a * b != b * a) {
            c1 = &a;
            c2 = &b;
            break;
          }
        }
        if (c1) break;
      }
      if (!c1)
        throw std::logic_error("direct_product_solve: kill classes centralize each other");
      Perm comm = c1->inverse() * c2->inverse() * *c1 * *c2;
      std::unordered_map<Perm, Word, PermHash> merged;
      Word base = Word::commutator(m1.at(*c1), m2.at(*c2));
      for (const auto& [t, tw] : tables[i].elems) {
        Perm c = comm.conjugated_by(t);
        if (!merged.count(c))
          merged.emplace(std::move(c),
                         Word::commutator(m1.at(c1->conjugated_by(t)),
                                          m2.at(c2->conjugated_by(t))));
      }
      J1.insert(J1.end(), J2.begin(), J2.end());
      queue.emplace_back(std::move(J1), std::move(merged));
    }

    // finish inside T_i by BFS over the class (all other coordinates dead)
    auto& cls = queue.front().second;
    GenSet class_gens(domains[i].size());
    std::vector<Perm> class_keys;
    for (const auto& [c, _] : cls) class_keys.push_back(c);
    std::sort(class_keys.begin(), class_keys.end());
    std::map<std::string, Word> class_table;
    for (std::size_t t = 0; t < class_keys.size(); ++t) {
      std::string label = "k" + std::to_string(t);
      class_gens.add(label, class_keys[t]);
      class_table.emplace(label, cls.at(class_keys[t]));
    }
    LengthResult lr = length_bfs(class_gens, target_i, budget);
    if (!lr.reachable)
      throw std::logic_error("direct_product_solve: class does not generate the factor");
    total.append(lr.witness.substituted(class_table));
  }

  cert.word = std::move(total);
  if (cert.word.evaluate(X) != target)
    throw std::logic_error("direct_product_solve: word mismatch");
  if (ranks_known) {
    BigInt bound = BigInt(2000) * n * n * n * max_rank * d;
    cert.asserted_bound = BoundTag{"theorem:direct-product", bound};
    if (BigInt(cert.word.length()) > bound)
      throw std::logic_error("direct_product_solve: word exceeded 2000 n^3 r d");
  }
  return cert;
}

LengthCertificate compose_certificates(const LengthCertificate& outer,
                                       const CertifiedGenSet& inner) {
  auto table = inner.word_table();
  for (const auto& l : outer.word.letters())
    if (!table.count(l.label))
      throw DomainError("compose_certificates: outer label \"" + l.label +
                        "\" missing from the inner set");
  LengthCertificate out;
  out.element = outer.element;
  out.word = outer.word.substituted(table).freely_reduced();
  out.genset_name = "X";
  out.asserted_bound =
      BoundTag{"lemma:chain-rule", BigInt(outer.word.length()) * inner.max_length};
  return out;
}

}  // namespace permdiam

#include "core/diametry.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_map>
#include <unordered_set>

#include "core/engine.hpp"
#include "core/errors.hpp"

namespace permdiam {

namespace {

// Packed image-sequence keys: one byte per point when the degree allows it.
struct Codec {
  std::size_t degree;
  bool wide;

  explicit Codec(std::size_t deg) : degree(deg), wide(deg > 256) {}

  std::size_t key_bytes() const { return degree * (wide ? 2 : 1); }

  std::string pack(const Perm& p) const {
    std::string s(key_bytes(), '\0');
    if (wide) {
      std::memcpy(s.data(), p.images().data(), degree * 2);
    } else {
      for (std::size_t i = 0; i < degree; ++i) s[i] = static_cast<char>(p.images()[i]);
    }
    return s;
  }

  Perm unpack(const std::string& s) const {
    std::vector<Point> img(degree);
    if (wide) {
      std::memcpy(img.data(), s.data(), degree * 2);
    } else {
      for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<unsigned char>(s[i]);
    }
    return Perm::from_images(std::move(img));
  }

  void apply(const std::string& cur, const std::vector<Point>& table, std::string& out) const {
    if (wide) {
      const auto* in = reinterpret_cast<const unsigned char*>(cur.data());
      auto* dst = reinterpret_cast<unsigned char*>(out.data());
      for (std::size_t i = 0; i < degree; ++i) {
        Point x = static_cast<Point>(in[2 * i] | (in[2 * i + 1] << 8));
        Point y = table[x];
        dst[2 * i] = static_cast<unsigned char>(y & 0xff);
        dst[2 * i + 1] = static_cast<unsigned char>(y >> 8);
      }
    } else {
      for (std::size_t i = 0; i < degree; ++i)
        out[i] = static_cast<char>(table[static_cast<unsigned char>(cur[i])]);
    }
  }
};

struct Letters {
  std::vector<Letter> names;
  std::vector<std::vector<Point>> tables;
};

// X together with inverses, identity letters and duplicate actions dropped
// (the ball is a set of elements, so duplicates change nothing).
Letters make_letters(const GenSet& X) {
  Letters L;
  auto add = [&](const std::string& label, int sign, const Perm& p) {
    if (p.is_identity()) return;
    for (const auto& t : L.tables)
      if (t == p.images()) return;
    L.names.push_back(Letter{label, sign});
    L.tables.push_back(p.images());
  };
  for (const auto& [label, p] : X.entries()) {
    add(label, 1, p);
    add(label, -1, p.inverse());
  }
  return L;
}

struct IndexHash {
  const std::vector<std::string>* states;
  std::size_t operator()(std::uint32_t i) const {
    return std::hash<std::string>{}((*states)[i]);
  }
};
struct IndexEq {
  const std::vector<std::string>* states;
  bool operator()(std::uint32_t a, std::uint32_t b) const {
    return (*states)[a] == (*states)[b];
  }
};

struct BfsRun {
  Codec codec{1};
  Letters letters;
  std::vector<std::string> states;
  std::vector<std::uint32_t> parent;
  std::vector<std::int32_t> via;
  std::vector<std::uint64_t> level_start;  // level_start[r] = first index at radius r
  bool saturated = false;
  std::optional<std::uint32_t> target_index;
};

BfsRun run_ball_bfs(const GenSet& X, const std::optional<Perm>& target,
                    std::uint64_t max_radius, bool track_parents, const Budget& budget) {
  BfsRun run;
  run.codec = Codec(X.degree());
  run.letters = make_letters(X);
  std::uint64_t max_states =
      std::min<std::uint64_t>(budget.max_states_for_key(run.codec.key_bytes()), 0xFFFFFFF0u);

  std::unordered_set<std::uint32_t, IndexHash, IndexEq> seen(
      1024, IndexHash{&run.states}, IndexEq{&run.states});

  std::string target_key;
  if (target) target_key = run.codec.pack(*target);

  run.states.push_back(run.codec.pack(Perm(X.degree())));
  if (track_parents) {
    run.parent.push_back(0);
    run.via.push_back(-1);
  }
  seen.insert(0);
  run.level_start.push_back(0);
  if (target && run.states[0] == target_key) {
    run.target_index = 0;
    return run;
  }

  std::uint64_t lo = 0, hi = 1, radius = 0;
  std::string scratch;
  while (lo < hi && radius < max_radius) {
    ++radius;
    run.level_start.push_back(hi);
    for (std::uint64_t i = lo; i < hi; ++i) {
      for (std::size_t t = 0; t < run.letters.tables.size(); ++t) {
        scratch.resize(run.codec.key_bytes());
        run.codec.apply(run.states[i], run.letters.tables[t], scratch);
        if (run.states.size() >= max_states)
          throw CapacityError("BFS state budget exceeded: " +
                              std::to_string(run.states.size()) + " states, frontier " +
                              std::to_string(hi - lo));
        run.states.push_back(scratch);
        auto [it, fresh] = seen.insert(static_cast<std::uint32_t>(run.states.size() - 1));
        if (!fresh) {
          run.states.pop_back();
          continue;
        }
        if (track_parents) {
          run.parent.push_back(static_cast<std::uint32_t>(i));
          run.via.push_back(static_cast<std::int32_t>(t));
        }
        if (target && run.states.back() == target_key) {
          run.target_index = static_cast<std::uint32_t>(run.states.size() - 1);
          return run;
        }
      }
    }
    lo = hi;
    hi = run.states.size();
    if (lo == hi) {
      run.level_start.pop_back();  // empty last level
      run.saturated = true;
      break;
    }
  }
  if (lo >= hi) run.saturated = true;
  return run;
}

Word word_to_state(const BfsRun& run, std::uint32_t idx) {
  std::vector<Letter> letters;
  while (run.via[idx] >= 0) {
    letters.push_back(run.letters.names[static_cast<std::size_t>(run.via[idx])]);
    idx = run.parent[idx];
  }
  std::reverse(letters.begin(), letters.end());
  return Word(std::move(letters));
}

}  // namespace

LengthResult length_bfs(const GenSet& X, const Perm& g, const Budget& budget) {
  if (g.degree() != X.degree()) throw DomainError("length_bfs: degree mismatch");
  BfsRun run = run_ball_bfs(X, g, UINT64_MAX, true, budget);
  if (!run.target_index) return LengthResult{false, 0, Word{}};
  std::uint32_t idx = *run.target_index;
  std::uint64_t length = 0;
  for (std::size_t r = 0; r < run.level_start.size(); ++r)
    if (run.level_start[r] <= idx) length = r;
  return LengthResult{true, length, word_to_state(run, idx)};
}

DiameterResult diameter(const GenSet& X, const Budget& budget) {
  BfsRun run = run_ball_bfs(X, std::nullopt, UINT64_MAX, false, budget);
  DiameterResult res;
  res.diameter = run.level_start.size() - 1;
  res.group_order = run.states.size();
  std::uint64_t last = run.level_start.back();
  const std::string* best = &run.states[last];
  for (std::uint64_t i = last + 1; i < run.states.size(); ++i)
    if (run.states[i] < *best) best = &run.states[i];
  res.witness = run.codec.unpack(*best);
  return res;
}

BallProfile growth(const GenSet& X, std::uint64_t radius, const Budget& budget) {
  BfsRun run = run_ball_bfs(X, std::nullopt, radius, false, budget);
  BallProfile profile;
  profile.saturated = run.saturated;
  if (run.saturated) profile.diameter_if_saturated = run.level_start.size() - 1;
  for (std::uint64_t r = 0; r <= radius; ++r) {
    std::uint64_t count = (r + 1 < run.level_start.size()) ? run.level_start[r + 1]
                                                           : run.states.size();
    profile.counts.push_back(count);
  }
  return profile;
}

std::uint64_t relative_length(const GenSet& X, const PermGroup& H, const PermGroup& K,
                              const Budget& budget) {
  PermGroup GX(X.degree(), X.perms(), "x");
  for (const Perm& h : H.gen_perms())
    if (!GX.contains(h)) throw DomainError("relative_length: H not contained in <X>");
  for (const Perm& k : K.gen_perms())
    if (!H.contains(k)) throw DomainError("relative_length: K not contained in H");

  BigInt idx_big = H.order() / K.order();
  if (H.order() % K.order() != 0)
    throw std::logic_error("relative_length: |K| does not divide |H|");
  if (!fits_u64(idx_big)) throw CapacityError("relative_length: coset space too large");
  std::uint64_t target_count = to_u64(idx_big);

  const StabChain& kchain = K.chain();
  Codec codec(X.degree());
  Letters letters = make_letters(X);
  std::vector<Perm> letter_perms;
  for (const auto& t : letters.tables)
    letter_perms.push_back(Perm::from_images(std::vector<Point>(t)));
  std::uint64_t max_states =
      std::min<std::uint64_t>(budget.max_states_for_key(codec.key_bytes()), 0xFFFFFFF0u);

  std::vector<std::string> states;
  std::unordered_set<std::uint32_t, IndexHash, IndexEq> seen(1024, IndexHash{&states},
                                                             IndexEq{&states});
  states.push_back(codec.pack(canonical_coset_rep(kchain, Perm(X.degree()))));
  seen.insert(0);

  std::uint64_t found = 0, best = 0;
  auto consider = [&](std::uint32_t i, std::uint64_t level) {
    if (H.contains(codec.unpack(states[i]))) {
      ++found;
      best = level;
    }
  };
  consider(0, 0);
  if (found == target_count) return best;

  std::uint64_t lo = 0, hi = 1, radius = 0;
  while (lo < hi) {
    ++radius;
    for (std::uint64_t i = lo; i < hi; ++i) {
      Perm rep = codec.unpack(states[i]);
      for (std::size_t t = 0; t < letter_perms.size(); ++t) {
        Perm next = canonical_coset_rep(kchain, rep * letter_perms[t]);
        if (states.size() >= max_states)
          throw CapacityError("relative_length: BFS state budget exceeded");
        states.push_back(codec.pack(next));
        auto [it, fresh] = seen.insert(static_cast<std::uint32_t>(states.size() - 1));
        if (!fresh) {
          states.pop_back();
          continue;
        }
        consider(static_cast<std::uint32_t>(states.size() - 1), radius);
        if (found == target_count) return best;
      }
    }
    lo = hi;
    hi = states.size();
  }
  throw std::logic_error("relative_length: coset BFS exhausted before covering H");
}

namespace {

// The worst-case search runs entirely in index space over a precomputed
// multiplication table: subgroup closures, Cayley BFS, and conjugation all
// become table lookups.
struct IndexedGroup {
  std::vector<Perm> els;  // sorted; els[0] need not be the identity
  std::uint32_t id_index = 0;
  std::vector<std::uint32_t> mult;  // n*n, mult[i*n+j] = index of els[i]*els[j]
  std::vector<std::uint32_t> inv;
  std::vector<std::uint16_t> type_id;  // cycle-type class of each element

  std::uint32_t n() const { return static_cast<std::uint32_t>(els.size()); }
  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const { return mult[i * els.size() + j]; }
  std::uint32_t conj(std::uint32_t g, std::uint32_t x) const { return mul(mul(inv[g], x), g); }
};

IndexedGroup index_group(const PermGroup& G, const Budget& budget) {
  IndexedGroup ig;
  ig.els = G.elements(budget.enum_cap);
  std::sort(ig.els.begin(), ig.els.end());
  std::size_t n = ig.els.size();
  if (n * n * sizeof(std::uint32_t) > budget.state_bytes)
    throw CapacityError("worst-case search: multiplication table for order " +
                        std::to_string(n) + " exceeds the state budget");
  std::unordered_map<Perm, std::uint32_t, PermHash> index;
  index.reserve(2 * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    index.emplace(ig.els[i], i);
    if (ig.els[i].is_identity()) ig.id_index = i;
  }
  ig.mult.resize(n * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      ig.mult[i * n + j] = index.at(ig.els[i] * ig.els[j]);
  ig.inv.resize(n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (ig.mult[i * n + j] == ig.id_index) {
        ig.inv[i] = j;
        break;
      }
  std::map<std::vector<std::size_t>, std::uint16_t> types;
  ig.type_id.resize(n);
  for (std::uint32_t i = 0; i < n; ++i)
    ig.type_id[i] = types.emplace(ig.els[i].cycle_type(),
                                  static_cast<std::uint16_t>(types.size())).first->second;
  return ig;
}

// diameter of the Cayley graph over the chosen indices (letters + inverses)
std::uint64_t indexed_diameter(const IndexedGroup& ig, const std::vector<std::uint32_t>& gens) {
  std::vector<std::uint32_t> letters;
  for (std::uint32_t g : gens) {
    letters.push_back(g);
    if (ig.inv[g] != g) letters.push_back(ig.inv[g]);
  }
  std::vector<bool> seen(ig.n(), false);
  std::vector<std::uint32_t> frontier{ig.id_index}, next;
  seen[ig.id_index] = true;
  std::uint64_t radius = 0, visited = 1;
  while (visited < ig.n()) {
    ++radius;
    next.clear();
    for (std::uint32_t v : frontier)
      for (std::uint32_t l : letters) {
        std::uint32_t w = ig.mul(v, l);
        if (!seen[w]) {
          seen[w] = true;
          ++visited;
          next.push_back(w);
        }
      }
    if (next.empty())
      throw std::logic_error("indexed diameter: letters do not generate the group");
    frontier.swap(next);
  }
  return radius;
}

}  // namespace

WorstCaseResult worst_case_diameter(const PermGroup& G, const Budget& budget) {
  WorstCaseResult result;
  result.extremal = GenSet(G.degree());
  if (G.order() == 1) return result;

  IndexedGroup ig = index_group(G, budget);
  const std::uint32_t n = ig.n();
  const bool abelian = G.is_abelian();
  std::unordered_set<std::string> canon_seen;
  bool have_best = false;

  // minimal conjugate of the sorted index set; exact, so two candidate sets
  // collide only if some inner automorphism carries one onto the other
  std::vector<std::uint32_t> scratch;
  auto canonical_key = [&](const std::vector<std::uint32_t>& set) {
    std::string key;
    scratch.assign(set.begin(), set.end());
    for (std::uint32_t x : set) key += std::to_string(ig.type_id[x]) + ".";
    key += '|';
    if (!abelian) {
      std::vector<std::uint32_t> best(set), cur(set.size());
      std::sort(best.begin(), best.end());
      for (std::uint32_t g = 0; g < n; ++g) {
        for (std::size_t t = 0; t < set.size(); ++t) cur[t] = ig.conj(g, set[t]);
        std::sort(cur.begin(), cur.end());
        if (cur < best) best = cur;
      }
      scratch = best;
    } else {
      std::sort(scratch.begin(), scratch.end());
    }
    for (std::uint32_t x : scratch) key += std::to_string(x) + ",";
    return key;
  };

  // closure of a subgroup with one more generator, linear in the result:
  // walk right cosets of the old subgroup under the chosen letters
  auto close_with = [&](const std::vector<bool>& bits, const std::vector<std::uint32_t>& members,
                        const std::vector<std::uint32_t>& letters, std::vector<bool>& out_bits,
                        std::vector<std::uint32_t>& out_members) {
    out_bits = bits;
    out_members = members;
    std::vector<std::uint32_t> reps{ig.id_index};
    for (std::size_t r = 0; r < reps.size(); ++r) {
      for (std::uint32_t l : letters) {
        std::uint32_t t = ig.mul(reps[r], l);
        if (out_bits[t]) continue;
        reps.push_back(t);
        for (std::uint32_t h : members) {
          std::uint32_t z = ig.mul(h, t);
          if (!out_bits[z]) {
            out_bits[z] = true;
            out_members.push_back(z);
          }
        }
      }
    }
  };

  std::vector<std::uint32_t> chosen;
  auto rec = [&](auto&& self, std::uint32_t start, const std::vector<bool>& bits,
                 const std::vector<std::uint32_t>& members) -> void {
    if (members.size() == n) {
      if (++result.sets_examined > budget.max_gen_sets)
        throw CapacityError("worst-case enumeration budget exceeded after " +
                            std::to_string(result.sets_examined) + " generating sets");
      if (!canon_seen.insert(canonical_key(chosen)).second) return;
      std::uint64_t d = indexed_diameter(ig, chosen);
      if (!have_best || d > result.diameter) {
        have_best = true;
        result.diameter = d;
        std::vector<Perm> gens;
        for (std::uint32_t x : chosen) gens.push_back(ig.els[x]);
        result.extremal = genset_from_perms(G.degree(), gens, "x");
      }
      return;
    }
    for (std::uint32_t i = start; i < n; ++i) {
      if (bits[i] || i == ig.id_index) continue;
      chosen.push_back(i);
      std::vector<bool> bits2;
      std::vector<std::uint32_t> members2;
      close_with(bits, members, chosen, bits2, members2);
      self(self, i + 1, bits2, members2);
      chosen.pop_back();
    }
  };

  std::vector<bool> bits(n, false);
  bits[ig.id_index] = true;
  std::vector<std::uint32_t> members{ig.id_index};
  rec(rec, 0, bits, members);
  return result;
}

}  // namespace permdiam

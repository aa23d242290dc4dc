#include "core/stab_chain.hpp"

#include "core/errors.hpp"

namespace permdiam {

StabChain::StabChain(std::size_t degree, const std::vector<Perm>& generators,
                     const std::vector<Point>& forced_prefix)
    : degree_(degree) {
  for (Point b : forced_prefix) {
    levels_.push_back(ChainLevel{b, {}, {}, {}, {}});
    dirty_.push_back(true);
  }
  for (const Perm& g : generators) {
    if (g.degree() != degree_) throw DomainError("generator degree mismatch in chain");
    if (!g.is_identity()) distribute(g);
  }
  close();
}

void StabChain::recompute_orbit(std::size_t i) {
  ChainLevel& L = levels_[i];
  L.orbit.assign(1, L.base);
  L.pos.assign(degree_, -1);
  L.pos[L.base] = 0;
  L.transversal.assign(1, Perm(degree_));
  for (std::size_t q = 0; q < L.orbit.size(); ++q) {
    for (const Perm& s : L.gens) {
      Point r = s(L.orbit[q]);
      if (L.pos[r] < 0) {
        L.pos[r] = static_cast<std::int32_t>(L.orbit.size());
        L.orbit.push_back(r);
        L.transversal.push_back(L.transversal[q] * s);
      }
    }
  }
  dirty_[i] = false;
}

std::pair<Perm, std::size_t> StabChain::sift(Perm p, std::size_t from) const {
  // Orbits must be fresh; sift is only called from const contexts after
  // construction, or internally right after recomputes.
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const ChainLevel& L = levels_[i];
    Point x = p(L.base);
    if (x == L.base) continue;
    if (L.pos[x] < 0) return {std::move(p), i};
    p = p * L.transversal[L.pos[x]].inverse();
  }
  return {std::move(p), levels_.size()};
}

void StabChain::distribute(const Perm& g) {
  std::size_t d = levels_.size();
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (g(levels_[i].base) != levels_[i].base) {
      d = i;
      break;
    }
  }
  if (d == levels_.size()) {
    levels_.push_back(ChainLevel{static_cast<Point>(g.first_moved()), {}, {}, {}, {}});
    dirty_.push_back(true);
  }
  for (std::size_t l = 0; l <= d; ++l) {
    levels_[l].gens.push_back(g);
    dirty_[l] = true;
  }
}

void StabChain::close() {
  if (levels_.empty()) return;
  for (std::size_t i = 0; i < levels_.size(); ++i)
    if (dirty_[i]) recompute_orbit(i);

  std::size_t i = levels_.size();
  while (i-- > 0) {
    bool complete = true;
    ChainLevel& L = levels_[i];
    for (std::size_t q = 0; q < L.orbit.size() && complete; ++q) {
      for (const Perm& s : L.gens) {
        Point r = s(L.orbit[q]);
        Perm schreier = L.transversal[q] * s * L.transversal[L.pos[r]].inverse();
        if (schreier.is_identity()) continue;
        auto [h, j] = sift(std::move(schreier), i + 1);
        if (h.is_identity()) continue;
        if (j == levels_.size()) {
          levels_.push_back(ChainLevel{static_cast<Point>(h.first_moved()), {}, {}, {}, {}});
          dirty_.push_back(true);
        }
        for (std::size_t l = i + 1; l <= j; ++l) {
          levels_[l].gens.push_back(h);
          dirty_[l] = true;
        }
        for (std::size_t l = i + 1; l <= j; ++l)
          if (dirty_[l]) recompute_orbit(l);
        i = j;
        complete = false;
        break;
      }
    }
    if (complete) continue;
    ++i;  // restart the while at level i (the level we jumped to)
  }
}

BigInt StabChain::order() const {
  BigInt n = 1;
  for (const auto& L : levels_) n *= static_cast<std::uint64_t>(L.orbit.size());
  return n;
}

bool StabChain::contains(const Perm& p) const {
  if (p.degree() != degree_) throw DomainError("membership test with mismatched degree");
  auto [h, j] = sift(p, 0);
  return j == levels_.size() && h.is_identity();
}

std::vector<Perm> StabChain::level_gens(std::size_t k) const {
  if (k >= levels_.size()) return {};
  return levels_[k].gens;
}

void StabChain::for_each_element(const std::function<void(const Perm&)>& visit,
                                 std::uint64_t cap) const {
  BigInt n = order();
  if (n > BigInt(cap))
    throw CapacityError("group order " + n.str() + " exceeds enumeration cap " +
                        std::to_string(cap));
  if (levels_.empty()) {
    visit(Perm(degree_));
    return;
  }
  // Odometer over transversal indices; element(idx) =
  // u[k-1][i_{k-1}] * ... * u[0][i_0], deepest level applied first.
  std::size_t k = levels_.size();
  std::vector<std::size_t> idx(k, 0);
  std::vector<Perm> partial(k + 1);
  // partial[l] = product of transversal picks for levels k-1 down to l.
  partial[k] = Perm(degree_);
  for (std::size_t l = k; l-- > 0;) partial[l] = partial[l + 1] * levels_[l].transversal[0];
  for (;;) {
    visit(partial[0]);
    std::size_t l = 0;
    while (l < k && ++idx[l] == levels_[l].orbit.size()) idx[l++] = 0;
    if (l == k) return;
    for (std::size_t m = l + 1; m-- > 0;)
      partial[m] = partial[m + 1] * levels_[m].transversal[idx[m]];
  }
}

}  // namespace permdiam

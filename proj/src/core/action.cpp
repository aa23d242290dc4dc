#include "core/action.hpp"

#include <algorithm>
#include <numeric>

#include "core/errors.hpp"

namespace permdiam {

namespace {

struct UnionFind {
  std::vector<Point> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), Point{0});
  }
  Point find(Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Merges, keeping the smaller point as representative; returns the
  // representative that was absorbed.
  Point merge(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return b;
  }
};

std::vector<std::vector<Point>> classes_of(UnionFind& uf, std::size_t n) {
  std::vector<std::vector<Point>> by_rep(n);
  for (std::size_t x = 0; x < n; ++x) by_rep[uf.find(static_cast<Point>(x))].push_back(static_cast<Point>(x));
  std::vector<std::vector<Point>> out;
  for (auto& c : by_rep)
    if (!c.empty()) out.push_back(std::move(c));
  return out;
}

}  // namespace

std::vector<std::vector<Point>> orbit_partition(const std::vector<Perm>& gens,
                                                std::size_t degree) {
  UnionFind uf(degree);
  for (const Perm& g : gens)
    for (std::size_t x = 0; x < degree; ++x) uf.merge(static_cast<Point>(x), g(static_cast<Point>(x)));
  return classes_of(uf, degree);
}

std::vector<std::vector<Point>> orbit_partition(const GenSet& X) {
  return orbit_partition(X.perms(), X.degree());
}

bool is_transitive(const std::vector<Perm>& gens, std::size_t degree) {
  if (degree == 0) return true;
  return orbit_partition(gens, degree).size() == 1;
}

std::vector<std::vector<Point>> minimal_block_closure(const std::vector<Perm>& gens,
                                                      std::size_t degree, Point a, Point b) {
  UnionFind uf(degree);
  std::vector<Point> queue;
  queue.push_back(uf.merge(a, b));
  while (!queue.empty()) {
    Point gamma = queue.back();
    queue.pop_back();
    Point rho = uf.find(gamma);
    for (const Perm& g : gens) {
      Point x = g(gamma), y = g(rho);
      if (uf.find(x) != uf.find(y)) queue.push_back(uf.merge(x, y));
    }
  }
  return classes_of(uf, degree);
}

ActionClassification classify_action(const std::vector<Perm>& gens, std::size_t degree) {
  auto orbits = orbit_partition(gens, degree);
  if (orbits.size() > 1) return {ActionKind::Intransitive, std::move(orbits)};
  if (degree <= 2) return {ActionKind::Primitive, {}};

  // All minimal nontrivial systems have a block through 0, and that block is
  // the closure of (0, b) for any other b in it. Collect candidate systems,
  // keep the inclusion-minimal blocks, pick the lexicographically least
  // system among them.
  std::vector<std::vector<std::vector<Point>>> candidates;
  for (Point b = 1; b < degree; ++b) {
    auto sys = minimal_block_closure(gens, degree, 0, b);
    std::size_t block0 = sys.front().size();
    if (block0 > 1 && block0 < degree) candidates.push_back(std::move(sys));
  }
  if (candidates.empty()) return {ActionKind::Primitive, {}};

  auto subset = [](const std::vector<Point>& a, const std::vector<Point>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  const std::vector<std::vector<Point>>* best = nullptr;
  for (const auto& sys : candidates) {
    bool minimal = true;
    for (const auto& other : candidates) {
      if (other.front().size() < sys.front().size() && subset(other.front(), sys.front())) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    if (!best || sys < *best) best = &sys;
  }
  return {ActionKind::Imprimitive, *best};
}

ActionClassification classify_action(const GenSet& X) {
  return classify_action(X.perms(), X.degree());
}

}  // namespace permdiam

#pragma once

#include <cstdint>
#include <string>

#include "core/budget.hpp"
#include "core/group.hpp"

namespace permdiam {

struct VerifyResult {
  std::string report;  // one line per check
  int checks = 0;
  int failures = 0;
};

/// "paper-numbers": pinned values recomputed exactly (diam(A5) = 10, the
///   Grigorchuk order formula at h = 3..6, mu_na sharpness, small abelian
///   diameters).
/// "lemmas": randomized property suite (seeded, deterministic) exercising
///   the Schreier, Milnor, commutator, tower, chain and extension bounds on
///   corpus groups; `instances` scales the number of random instances.
/// "corpus": invariant sweeps (mu identities, Guralnick checks, the
///   generalized Palfy-Wolf inequality on the primitive corpus, Glasby).
VerifyResult verify_suite(const std::string& suite, const Budget& budget,
                          std::uint64_t instances = 500);

/// Uniform random element through the stabilizer chain.
Perm random_group_element(const PermGroup& G, std::uint64_t& rng_state);

}  // namespace permdiam

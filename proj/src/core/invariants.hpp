#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/budget.hpp"
#include "core/engine.hpp"

namespace permdiam {

// constants pinned from the bound statements
double b1_constant();       // 5^(1/4)
double c1_constant();       // log_8(7 * b1)
double pyber_c_constant();  // 1 + log_9(48 * 24^(1/3))
inline constexpr double kRealTolerance = 1e-9;

struct MuProfile {
  bool available = false;  // every nonabelian factor recognized
  BigInt mu_cf = 1, mu_ab = 1, mu_na = 1;
  std::vector<FactorDescriptor> factors;
};

MuProfile mu_profile_of_factors(const std::vector<FactorDescriptor>& factors);
MuProfile mu_profile(const PermGroup& G, std::uint64_t cap);

enum class DiamPolicy { Exact, Table };

/// diam(T) for a recognized factor: the exact policy runs the worst-case
/// search on a standard copy (feasible for A5 and cached per process); the
/// table policy uses the pinned entry diam(A5) = 10.
std::optional<std::uint64_t> factor_diameter(const FactorDescriptor& f, DiamPolicy policy,
                                             const Budget& budget);

struct ThetaPair {
  std::optional<double> theta1, theta2;  // >= 1 by the definitions' "union {1}"
  std::string witness1, witness2;        // factor attaining each maximum
  enum class Exactness { Exact, TableDiam, Unavailable } exactness = Exactness::Exact;
};

ThetaPair theta_pair(const PermGroup& G, DiamPolicy policy, std::uint64_t cap,
                     const Budget& budget);

struct EpsilonResult {
  std::optional<std::uint64_t> epsilon;  // max exp(N/N') over all normal N
  std::uint64_t epsilon0 = 1;           // over the derived-series quotients
};

/// epsilon needs the normal lattice and becomes unavailable past the cap;
/// epsilon0 only walks the derived series and is always returned.
EpsilonResult epsilon_invariants(const PermGroup& G, std::uint64_t cap);

struct TransitiveChecks {
  struct NormalCheck {
    BigInt order;
    std::uint64_t orbit_length;
    std::uint64_t abelianization_exponent;
    bool holds;
  };
  struct SectionCheck {
    std::string name;
    std::uint64_t mu;
    bool holds;
  };
  std::vector<NormalCheck> guralnick;  // exp(N/N') <= orbit length
  std::vector<SectionCheck> sections;  // mu(T) <= n
  bool lattice_complete = true;  // false past the cap: guralnick covers only
                                 // the derived-series normals then
  bool all_hold = true;
};

TransitiveChecks transitive_checks(const PermGroup& G, std::uint64_t cap);

enum class BoundContext { Abstract, Transitive, Primitive, Soluble, Nilpotent };

BoundContext bound_context_from_string(const std::string& s);
std::string bound_context_name(BoundContext ctx);

struct BoundEntry {
  std::string id;
  std::string lhs;      // rendered left side ("?" when unavailable)
  std::string rhs;      // rendered bound value or variable part
  std::string verdict;  // holds | holds-up-to-constant | not-applicable | unavailable
};

struct BoundReport {
  std::string group_id;
  std::size_t degree = 0;
  BigInt order = 0;
  std::optional<std::uint64_t> derived_length;  // soluble groups
  EpsilonResult eps;
  MuProfile mu;
  ThetaPair thetas;
  std::optional<std::uint64_t> exact_diameter;  // worst-case, small groups only
  std::vector<BoundEntry> entries;
};

/// Evaluates every bound applicable in the given context. Verdicts are
/// "holds" only when both sides are exact; asymptotic bounds report their
/// variable part as "holds-up-to-constant" and are never conflated with
/// exact ones. Context mismatches (e.g. primitive context on an imprimitive
/// action) raise DomainError.
BoundReport bound_report(const PermGroup& G, BoundContext ctx, const Budget& budget,
                         const std::string& group_id = "");

}  // namespace permdiam

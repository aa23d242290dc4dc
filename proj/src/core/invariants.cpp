#include "core/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "core/action.hpp"
#include "core/constructions.hpp"
#include "core/diametry.hpp"
#include "core/errors.hpp"

namespace permdiam {

double b1_constant() { return std::pow(5.0, 0.25); }
double c1_constant() { return std::log(7.0 * b1_constant()) / std::log(8.0); }
double pyber_c_constant() {
  return 1.0 + std::log(48.0 * std::cbrt(24.0)) / std::log(9.0);
}

MuProfile mu_profile_of_factors(const std::vector<FactorDescriptor>& factors) {
  MuProfile p;
  p.available = true;
  p.factors = factors;
  for (const auto& f : factors) {
    if (f.kind == FactorKind::Cyclic) {
      p.mu_ab *= f.order;
      p.mu_cf *= f.order;
    } else if (f.kind == FactorKind::Recognized && f.mu) {
      p.mu_na *= *f.mu;
      p.mu_cf *= *f.mu;
    } else {
      p.available = false;
    }
  }
  return p;
}

MuProfile mu_profile(const PermGroup& G, std::uint64_t cap) {
  return mu_profile_of_factors(composition_factors(G, cap));
}

std::optional<std::uint64_t> factor_diameter(const FactorDescriptor& f, DiamPolicy policy,
                                             const Budget& budget) {
  if (f.kind != FactorKind::Recognized) return std::nullopt;
  if (f.name != "A5") return std::nullopt;
  if (policy == DiamPolicy::Table) return 10;
  static std::optional<std::uint64_t> cached;
  if (!cached) cached = worst_case_diameter(alternating_group(5), budget).diameter;
  return cached;
}

ThetaPair theta_pair(const PermGroup& G, DiamPolicy policy, std::uint64_t cap,
                     const Budget& budget) {
  ThetaPair out;
  out.theta1 = 1.0;
  out.theta2 = 1.0;
  out.exactness = ThetaPair::Exactness::Exact;

  // distinct nonabelian composition factors
  std::map<std::string, const FactorDescriptor*> distinct;
  auto factors = composition_factors(G, cap);
  for (const auto& f : factors) {
    if (f.kind == FactorKind::Cyclic) continue;
    if (f.kind == FactorKind::Unrecognized) {
      out.theta1.reset();
      out.theta2.reset();
      out.exactness = ThetaPair::Exactness::Unavailable;
      return out;
    }
    distinct.emplace(f.name, &f);
  }
  for (const auto& [name, f] : distinct) {
    auto d = factor_diameter(*f, policy, budget);
    if (!d) {
      out.theta1.reset();
      out.theta2.reset();
      out.exactness = ThetaPair::Exactness::Unavailable;
      return out;
    }
    if (policy == DiamPolicy::Table) out.exactness = ThetaPair::Exactness::TableDiam;
    double logd = std::log(static_cast<double>(*d));
    double t1 = logd / std::log(static_cast<double>(*f->mu));
    double t2 = logd / std::log(std::log(static_cast<double>(f->order)));
    if (t1 > *out.theta1) {
      out.theta1 = t1;
      out.witness1 = name;
    }
    if (t2 > *out.theta2) {
      out.theta2 = t2;
      out.witness2 = name;
    }
  }
  return out;
}

EpsilonResult epsilon_invariants(const PermGroup& G, std::uint64_t cap) {
  EpsilonResult r;
  // derived descent, stopping at the perfect core for insoluble groups
  PermGroup cur = G;
  while (!cur.is_trivial()) {
    PermGroup next = verbal_subgroup(cur, VerbalKind::Derived);
    if (next.order() == cur.order()) break;
    r.epsilon0 = std::max(r.epsilon0, abelianization_exponent(cur));
    cur = std::move(next);
  }
  try {
    std::uint64_t eps = 1;
    for (const PermGroup& N : normal_lattice(G, cap))
      eps = std::max(eps, abelianization_exponent(N));
    r.epsilon = eps;
  } catch (const CapacityError&) {
    r.epsilon.reset();
  }
  if (r.epsilon && *r.epsilon < r.epsilon0)
    throw std::logic_error("epsilon invariant violated: eps0 > eps");
  return r;
}

TransitiveChecks transitive_checks(const PermGroup& G, std::uint64_t cap) {
  if (!is_transitive(G.gen_perms(), G.degree()))
    throw DomainError("transitive_checks on an intransitive group");
  TransitiveChecks out;
  std::vector<PermGroup> normals;
  try {
    normals = normal_lattice(G, cap);
  } catch (const CapacityError&) {
    // past the cap, fall back to the derived descent: every term is still
    // a normal subgroup, so the checks are sound, just not exhaustive
    out.lattice_complete = false;
    PermGroup cur = G;
    while (true) {
      normals.push_back(cur);
      PermGroup next = verbal_subgroup(cur, VerbalKind::Derived);
      if (next.order() == cur.order()) break;
      if (next.is_trivial()) {
        normals.push_back(next);
        break;
      }
      cur = std::move(next);
    }
  }
  for (const PermGroup& N : normals) {
    auto orbits = orbit_partition(N.gen_perms(), G.degree());
    std::uint64_t m = orbits.front().size();
    for (const auto& orb : orbits)
      if (orb.size() != m)
        throw std::logic_error("orbits of a normal subgroup differ in length");
    std::uint64_t e = abelianization_exponent(N);
    out.guralnick.push_back({N.order(), m, e, e <= m});
    out.all_hold &= e <= m;
  }
  for (const auto& f : composition_factors(G, cap)) {
    if (!f.mu) {
      out.sections.push_back({f.name, 0, false});
      out.all_hold = false;
      continue;
    }
    bool ok = *f.mu <= G.degree();
    out.sections.push_back({f.name, *f.mu, ok});
    out.all_hold &= ok;
  }
  return out;
}

BoundContext bound_context_from_string(const std::string& s) {
  if (s == "abstract") return BoundContext::Abstract;
  if (s == "transitive") return BoundContext::Transitive;
  if (s == "primitive") return BoundContext::Primitive;
  if (s == "soluble") return BoundContext::Soluble;
  if (s == "nilpotent") return BoundContext::Nilpotent;
  throw ParseError("unknown bound context \"" + s + "\"");
}

std::string bound_context_name(BoundContext ctx) {
  switch (ctx) {
    case BoundContext::Abstract:
      return "abstract";
    case BoundContext::Transitive:
      return "transitive";
    case BoundContext::Primitive:
      return "primitive";
    case BoundContext::Soluble:
      return "soluble";
    case BoundContext::Nilpotent:
      return "nilpotent";
  }
  return "?";
}

namespace {

std::string fmt_real(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

bool holds_real(double lhs, double rhs) { return lhs <= rhs * (1.0 + kRealTolerance); }

double big_to_double(const BigInt& v) { return static_cast<double>(v); }

}  // namespace

BoundReport bound_report(const PermGroup& G, BoundContext ctx, const Budget& budget,
                         const std::string& group_id) {
  BoundReport rep;
  rep.group_id = group_id.empty() ? G.gens().describe() : group_id;
  rep.degree = G.degree();
  rep.order = G.order();

  const std::uint64_t cap = budget.enum_cap;
  bool soluble = is_soluble(G);
  bool transitive = is_transitive(G.gen_perms(), G.degree());
  bool primitive =
      transitive && classify_action(G.gen_perms(), G.degree()).kind == ActionKind::Primitive;
  bool nilpotent = soluble && is_nilpotent(G);

  switch (ctx) {
    case BoundContext::Soluble:
      if (!soluble) throw DomainError("bounds: group is not soluble");
      break;
    case BoundContext::Nilpotent:
      if (!nilpotent || !transitive)
        throw DomainError("bounds: nilpotent context needs a transitive nilpotent group");
      break;
    case BoundContext::Transitive:
      if (!transitive) throw DomainError("bounds: group is not transitive");
      break;
    case BoundContext::Primitive:
      if (!primitive) throw DomainError("bounds: group action is not primitive");
      break;
    case BoundContext::Abstract:
      break;
  }

  if (soluble) rep.derived_length = derived_series(G).terms.size() - 1;
  rep.eps = epsilon_invariants(G, cap);
  rep.mu = mu_profile(G, cap);
  rep.thetas = theta_pair(G, DiamPolicy::Table, cap, budget);

  // exact worst-case diameter only at the scale the sweep is feasible
  if (rep.order <= 120) {
    try {
      rep.exact_diameter = worst_case_diameter(G, budget).diameter;
    } catch (const CapacityError&) {
    }
  }

  double n = static_cast<double>(G.degree());
  double log2G = log2_big(rep.order);

  auto add = [&](std::string id, std::string lhs, std::string rhs, std::string verdict) {
    rep.entries.push_back(BoundEntry{std::move(id), std::move(lhs), std::move(rhs),
                                     std::move(verdict)});
  };

  // soluble diameter bound: eps0 * 4^(L-1) * (log2|G|)^2
  if (soluble && rep.order > 1) {
    double bound = static_cast<double>(rep.eps.epsilon0) *
                   std::pow(4.0, static_cast<double>(*rep.derived_length) - 1.0) * log2G * log2G;
    if (rep.exact_diameter)
      add("soluble-diameter", std::to_string(*rep.exact_diameter), fmt_real(bound),
          holds_real(static_cast<double>(*rep.exact_diameter), bound) ? "holds" : "violated");
    else
      add("soluble-diameter", "?", fmt_real(bound), "unavailable");

    double glasby = 3.0 * std::log2(log2G) + 9.0;
    add("glasby-derived-length", std::to_string(*rep.derived_length), fmt_real(glasby),
        static_cast<double>(*rep.derived_length) < glasby ? "holds" : "violated");
  } else if (ctx == BoundContext::Soluble || ctx == BoundContext::Nilpotent) {
    add("soluble-diameter", "0", "0", rep.order == 1 ? "holds" : "not-applicable");
  }

  // main theorem, variable part only (the absolute constant is not ours to pin)
  {
    std::string lhs = rep.exact_diameter ? std::to_string(*rep.exact_diameter) : "?";
    if (rep.eps.epsilon && rep.thetas.theta1) {
      std::uint64_t maxdiam = 1;
      bool have_diam = true;
      for (const auto& f : rep.mu.factors) {
        if (f.kind != FactorKind::Recognized) continue;
        auto d = factor_diameter(f, DiamPolicy::Table, budget);
        if (!d) {
          have_diam = false;
          break;
        }
        maxdiam = std::max(maxdiam, *d);
      }
      if (have_diam) {
        double variable = static_cast<double>(*rep.eps.epsilon) *
                          std::pow(log2G * std::log(2.0), 31.0 + 5.0 * *rep.thetas.theta1) *
                          static_cast<double>(maxdiam);
        add("main-diameter", lhs, fmt_real(variable), "holds-up-to-constant");
      } else {
        add("main-diameter", lhs, "?", "unavailable");
      }
    } else {
      add("main-diameter", lhs, "?", "unavailable");
    }
  }

  if (ctx == BoundContext::Transitive || ctx == BoundContext::Primitive ||
      ctx == BoundContext::Nilpotent) {
    // Guralnick: eps(G) <= n
    if (rep.eps.epsilon)
      add("guralnick-epsilon", std::to_string(*rep.eps.epsilon), std::to_string(G.degree()),
          *rep.eps.epsilon <= G.degree() ? "holds" : "violated");
    else
      add("guralnick-epsilon", "?", std::to_string(G.degree()), "unavailable");

    // simple sections: mu(T) <= n
    bool all = true, known = true;
    for (const auto& f : rep.mu.factors) {
      if (!f.mu) {
        known = false;
        break;
      }
      all &= *f.mu <= G.degree();
    }
    add("section-degree", known ? (all ? "max mu <= n" : "max mu > n") : "?",
        std::to_string(G.degree()), known ? (all ? "holds" : "violated") : "unavailable");

    // mu_na(G) <= b1^(n-1)  (Theorem on subgroups of S_n)
    if (rep.mu.available) {
      double rhs = (n - 1.0) * std::log(b1_constant());
      double lhsv = std::log(big_to_double(rep.mu.mu_na));
      add("muna-subgroup", rep.mu.mu_na.str(), "b1^" + std::to_string(G.degree() - 1),
          holds_real(lhsv, rhs) ? "holds" : "violated");
    } else {
      add("muna-subgroup", "?", "b1^(n-1)", "unavailable");
    }

    if (rep.thetas.theta1) {
      double expo = 32.0 + 7.0 * *rep.thetas.theta1;
      add("transitive-diameter",
          rep.exact_diameter ? std::to_string(*rep.exact_diameter) : "?",
          "n^" + fmt_real(expo), "holds-up-to-constant");
    }
  }

  if (ctx == BoundContext::Primitive) {
    if (rep.mu.available) {
      BigInt n5 = pow_big(G.degree(), 5);
      add("generalized-palfy-wolf", rep.mu.mu_cf.str(), n5.str(),
          rep.mu.mu_cf < n5 ? "holds" : "violated");

      double pyber_rhs = std::log(std::pow(24.0, -1.0 / 3.0)) +
                         pyber_c_constant() * std::log(n);
      add("pyber-muab", rep.mu.mu_ab.str(),
          "24^(-1/3) n^" + fmt_real(pyber_c_constant()),
          holds_real(std::log(big_to_double(rep.mu.mu_ab)), pyber_rhs) ? "holds" : "violated");

      double muna_rhs = -std::log(b1_constant()) + 1.25 * std::log(n);
      add("muna-primitive", rep.mu.mu_na.str(), "b1^-1 n^(5/4)",
          holds_real(std::log(big_to_double(rep.mu.mu_na)), muna_rhs) ? "holds" : "violated");
    } else {
      add("generalized-palfy-wolf", "?", pow_big(G.degree(), 5).str(), "unavailable");
      add("pyber-muab", "?", "24^(-1/3) n^c", "unavailable");
      add("muna-primitive", "?", "b1^-1 n^(5/4)", "unavailable");
    }
    add("muna-linear", "-", "b1^-1 p^(c1 n)", "not-applicable");

    if (rep.thetas.theta1) {
      double expo = 10.0 + 5.0 * *rep.thetas.theta1;
      double bound = 0.25 * std::pow(n, expo);
      if (rep.exact_diameter)
        add("primitive-diameter", std::to_string(*rep.exact_diameter),
            "(1/4) n^" + fmt_real(expo),
            static_cast<double>(*rep.exact_diameter) < bound ? "holds" : "violated");
      else
        add("primitive-diameter", "?", "(1/4) n^" + fmt_real(expo), "unavailable");
    }
    if (soluble)
      add("primitive-soluble-diameter",
          rep.exact_diameter ? std::to_string(*rep.exact_diameter) : "?",
          "n (log n)^8", "holds-up-to-constant");
  }

  if (ctx == BoundContext::Nilpotent) {
    BigInt n4 = pow_big(G.degree(), 4);
    if (rep.exact_diameter)
      add("nilpotent-diameter", std::to_string(*rep.exact_diameter), n4.str(),
          BigInt(*rep.exact_diameter) <= n4 ? "holds" : "violated");
    else
      add("nilpotent-diameter", "?", n4.str(), "unavailable");
  }

  return rep;
}

}  // namespace permdiam

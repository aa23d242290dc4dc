#include "permdiam.h"

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <string>

#include "core/action.hpp"
#include "core/constructions.hpp"
#include "core/diametry.hpp"
#include "core/errors.hpp"
#include "core/invariants.hpp"
#include "core/synth.hpp"
#include "core/textio.hpp"
#include "core/verify.hpp"

using namespace permdiam;

struct pd_group {
  DescribedGroup described;
};

namespace {

thread_local std::string g_last_error;

std::mutex g_budget_mutex;
Budget g_budget = default_budget();

Budget current_budget() {
  std::lock_guard<std::mutex> lock(g_budget_mutex);
  return g_budget;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
pd_status guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return PD_OK;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return PD_PARSE_ERROR;
  } catch (const DomainError& e) {
    g_last_error = e.what();
    return PD_DOMAIN_ERROR;
  } catch (const CapacityError& e) {
    g_last_error = e.what();
    return PD_CAPACITY_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PD_ERROR;
  }
}

}  // namespace

extern "C" {

const char* pd_last_error(void) { return g_last_error.c_str(); }

void pd_set_budget(uint64_t state_bytes, uint64_t enum_cap, uint64_t max_gen_sets) {
  std::lock_guard<std::mutex> lock(g_budget_mutex);
  if (state_bytes) g_budget.state_bytes = state_bytes;
  if (enum_cap) g_budget.enum_cap = enum_cap;
  if (max_gen_sets) g_budget.max_gen_sets = max_gen_sets;
}

pd_status pd_group_create(const char* description, pd_group** out) {
  if (!description || !out) {
    g_last_error = "null argument";
    return PD_ERROR;
  }
  *out = nullptr;
  return guarded([&] { *out = new pd_group{parse_group_description(description)}; });
}

void pd_group_destroy(pd_group* g) { delete g; }

int pd_group_degree(const pd_group* g) {
  return g ? static_cast<int>(g->described.group.degree()) : -1;
}

pd_status pd_group_order(pd_group* g, char** out_decimal) {
  if (!g || !out_decimal) {
    g_last_error = "null argument";
    return PD_ERROR;
  }
  return guarded([&] { *out_decimal = dup_string(g->described.group.order().str()); });
}

pd_status pd_group_info(pd_group* g, int json, char** out) {
  if (!g || !out) {
    g_last_error = "null argument";
    return PD_ERROR;
  }
  return guarded(
      [&] { *out = dup_string(render_info(group_info(g->described, current_budget()), json)); });
}

pd_status pd_diameter(pd_group* g, int json, char** out) {
  if (!g || !out) {
    g_last_error = "null argument";
    return PD_ERROR;
  }
  return guarded([&] {
    *out = dup_string(render_diameter(diameter(g->described.group.gens(), current_budget()),
                                      json));
  });
}

pd_status pd_worst_diameter(pd_group* g, int json, char** out) {
  if (!g || !out) {
    g_last_error = "null argument";
    return PD_ERROR;
  }
  return guarded([&] {
    *out = dup_string(
        render_worst_case(worst_case_diameter(g->described.group, current_budget()), json));
  });
}

pd_status pd_growth(pd_group* g, uint64_t radius, int json, char** out) {
  if (!g || !out) {
    g_last_error = "null argument";
    return PD_ERROR;
  }
  return guarded([&] {
    *out =
        dup_string(render_growth(growth(g->described.group.gens(), radius, current_budget()),
                                 json));
  });
}

pd_status pd_synthesize(pd_group* g, const char* target, const char* method, int json,
                        char** out) {
  if (!g || !out || !target || !method) {
    g_last_error = "null argument";
    return PD_ERROR;
  }
  return guarded([&] {
    Budget budget = current_budget();
    const GenSet& X = g->described.group.gens();
    Perm t = parse_cycles(target, X.degree());
    std::string m = method;
    LengthCertificate cert;
    if (m == "soluble") {
      cert = soluble_solve(X, t, budget);
    } else if (m == "direct-product") {
      cert = direct_product_solve(X, t, budget);
    } else if (m == "schreier") {
      // express the target over Schreier generators of its normal closure
      PermGroup N = normal_closure(g->described.group, {t});
      CertifiedGenSet inner = schreier_generators(X, N, budget);
      LengthResult lr = length_bfs(inner.subgroup.gens(), t, budget);
      if (!lr.reachable) throw std::logic_error("schreier set failed to reach the target");
      LengthCertificate outer{t, lr.witness, inner.name, std::nullopt};
      cert = compose_certificates(outer, inner);
      cert.asserted_bound = BoundTag{"lemma:schreier+chain-rule",
                                     inner.bound.value * BigInt(lr.length)};
    } else if (m == "milnor") {
      LengthResult base = length_bfs(X, t, budget);
      if (!base.reachable) throw DomainError("target lies outside <X>");
      MilnorResult mr = milnor_stabilize(X, {base.witness}, budget);
      LengthResult lr = length_bfs(mr.gens.subgroup.gens(), t, budget);
      if (!lr.reachable) throw std::logic_error("milnor set failed to reach the target");
      LengthCertificate outer{t, lr.witness, mr.gens.name, std::nullopt};
      cert = compose_certificates(outer, mr.gens);
      cert.asserted_bound =
          BoundTag{"lemma:milnor+chain-rule", mr.gens.bound.value * BigInt(lr.length)};
    } else {
      throw ParseError("unknown method \"" + m +
                       "\" (schreier|milnor|soluble|direct-product)");
    }
    if (!certificate_valid(cert, X))
      throw std::logic_error("synthesized certificate failed revalidation");
    *out = dup_string(render_certificate(cert, X.degree(), json));
  });
}

pd_status pd_certificate_check(pd_group* g, const char* cert_json, int* valid) {
  if (!g || !cert_json || !valid) {
    g_last_error = "null argument";
    return PD_ERROR;
  }
  *valid = 0;
  return guarded([&] {
    LengthCertificate cert = parse_certificate_json(cert_json);
    *valid = certificate_valid(cert, g->described.group.gens()) ? 1 : 0;
  });
}

pd_status pd_invariants(pd_group* g, int json, char** out) {
  if (!g || !out) {
    g_last_error = "null argument";
    return PD_ERROR;
  }
  return guarded([&] {
    Budget budget = current_budget();
    const PermGroup& G = g->described.group;
    auto mu = mu_profile(G, budget.enum_cap);
    auto th = theta_pair(G, DiamPolicy::Table, budget.enum_cap, budget);
    auto eps = epsilon_invariants(G, budget.enum_cap);
    *out = dup_string(render_invariants(mu, th, eps, json));
  });
}

pd_status pd_bounds(pd_group* g, const char* context, int json, char** out) {
  if (!g || !out || !context) {
    g_last_error = "null argument";
    return PD_ERROR;
  }
  return guarded([&] {
    BoundContext ctx = bound_context_from_string(context);
    BoundReport rep =
        bound_report(g->described.group, ctx, current_budget(), g->described.name);
    *out = dup_string(render_bound_report(rep, json));
  });
}

pd_status pd_construct(const char* label, char** out_description) {
  if (!label || !out_description) {
    g_last_error = "null argument";
    return PD_ERROR;
  }
  return guarded([&] {
    PermGroup g = construct_by_label(label);
    // the emitted description must re-parse: the name part may not carry
    // ':' or '='
    std::string name(label);
    for (char& c : name)
      if (c == ':' || c == '=') c = '.';
    std::string desc = name + ":n=" + std::to_string(g.degree()) + ";" + g.gens().describe();
    *out_description = dup_string(desc);
  });
}

pd_status pd_label_help(char** out) {
  if (!out) {
    g_last_error = "null argument";
    return PD_ERROR;
  }
  return guarded([&] {
    std::string s;
    for (const auto& l : label_grammar_help()) s += l + "\n";
    *out = dup_string(s);
  });
}

pd_status pd_verify(const char* suite, uint64_t instances, char** out_report, int* failures) {
  if (!suite || !out_report || !failures) {
    g_last_error = "null argument";
    return PD_ERROR;
  }
  *failures = -1;
  return guarded([&] {
    VerifyResult r =
        verify_suite(suite, current_budget(), instances ? instances : 500);
    *out_report = dup_string(r.report);
    *failures = r.failures;
  });
}

void pd_string_free(char* s) { std::free(s); }

}  // extern "C"

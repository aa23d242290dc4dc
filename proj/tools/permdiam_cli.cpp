// permdiam command-line tool. Talks to the core exclusively through the
// C API in permdiam.h; all structured output comes back as text from the
// library and is printed verbatim.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "permdiam.h"

namespace {

int exit_code_for(pd_status st) {
  switch (st) {
    case PD_OK:
      return 0;
    case PD_PARSE_ERROR:
    case PD_DOMAIN_ERROR:
      return 2;
    case PD_CAPACITY_ERROR:
      return 3;
    default:
      return 1;
  }
}

int fail(pd_status st) {
  std::fprintf(stderr, "error: %s\n", pd_last_error());
  return exit_code_for(st);
}

struct GroupHandle {
  pd_group* g = nullptr;
  ~GroupHandle() { pd_group_destroy(g); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { pd_string_free(s); }
};

int print_result(pd_status st, OwnedString& out) {
  if (st != PD_OK) return fail(st);
  std::fputs(out.s ? out.s : "", stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permdiam: exact diametry and certified word synthesis for permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags (--json, budgets) may follow the subcommand

  std::string group_desc, target, method = "soluble", context = "abstract",
              suite = "paper-numbers", label;
  std::uint64_t radius = 10, instances = 0;
  std::uint64_t state_bytes = 0, enum_cap = 0, max_sets = 0;
  bool as_json = false;

  app.add_flag("--json", as_json, "structured output");
  app.add_option("--state-bytes", state_bytes, "BFS state budget in bytes");
  app.add_option("--enum-cap", enum_cap, "element enumeration cap");
  app.add_option("--max-sets", max_sets, "generating-set budget for worst-diameter");

  auto add_group_opt = [&](CLI::App* cmd) {
    cmd->add_option("--group,-g", group_desc,
                    "group description: label:<corpus> or [name:][n=DEG;]cycles,...")
        ->required();
  };

  auto* cmd_info = app.add_subcommand("info", "order, orbits, primitivity, composition factors");
  add_group_opt(cmd_info);
  auto* cmd_diam = app.add_subcommand("diameter", "exact diam(G, X) for the given generators");
  add_group_opt(cmd_diam);
  auto* cmd_worst =
      app.add_subcommand("worst-diameter", "max diameter over irredundant generating sets");
  add_group_opt(cmd_worst);
  auto* cmd_growth = app.add_subcommand("growth", "ball sizes gamma_X(0..R)");
  add_group_opt(cmd_growth);
  cmd_growth->add_option("--radius,-r", radius, "maximal radius")->required();
  auto* cmd_synth = app.add_subcommand("synthesize", "length-certified word for a target");
  add_group_opt(cmd_synth);
  cmd_synth->add_option("--target,-t", target, "target element in cycle notation")->required();
  cmd_synth->add_option("--method,-m", method, "schreier|milnor|soluble|direct-product");
  auto* cmd_inv = app.add_subcommand("invariants", "mu profile, theta, epsilon");
  add_group_opt(cmd_inv);
  auto* cmd_bounds = app.add_subcommand("bounds", "evaluate applicable diameter bounds");
  add_group_opt(cmd_bounds);
  cmd_bounds->add_option("--context,-c", context,
                         "abstract|transitive|primitive|soluble|nilpotent");
  auto* cmd_construct = app.add_subcommand("construct", "emit a corpus group description");
  cmd_construct->add_option("--label,-l", label, "corpus label, e.g. grigorchuk:h=3");
  cmd_construct->add_flag("--list", "list the label grammar");
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify->add_option("--suite,-s", suite, "paper-numbers|lemmas|corpus");
  cmd_verify->add_option("--instances", instances, "randomized instance count (lemmas)");

  CLI11_PARSE(app, argc, argv);

  pd_set_budget(state_bytes, enum_cap, max_sets);

  if (cmd_construct->parsed()) {
    OwnedString out;
    if (cmd_construct->count("--list") || label.empty()) {
      pd_status st = pd_label_help(&out.s);
      return print_result(st, out);
    }
    pd_status st = pd_construct(label.c_str(), &out.s);
    return print_result(st, out);
  }

  if (cmd_verify->parsed()) {
    OwnedString out;
    int failures = 0;
    pd_status st = pd_verify(suite.c_str(), instances, &out.s, &failures);
    if (st != PD_OK) return fail(st);
    std::fputs(out.s, stdout);
    return failures == 0 ? 0 : 1;
  }

  GroupHandle gh;
  pd_status st = pd_group_create(group_desc.c_str(), &gh.g);
  if (st != PD_OK) return fail(st);

  OwnedString out;
  if (cmd_info->parsed()) {
    st = pd_group_info(gh.g, as_json, &out.s);
  } else if (cmd_diam->parsed()) {
    st = pd_diameter(gh.g, as_json, &out.s);
  } else if (cmd_worst->parsed()) {
    st = pd_worst_diameter(gh.g, as_json, &out.s);
  } else if (cmd_growth->parsed()) {
    st = pd_growth(gh.g, radius, as_json, &out.s);
  } else if (cmd_synth->parsed()) {
    st = pd_synthesize(gh.g, target.c_str(), method.c_str(), as_json, &out.s);
  } else if (cmd_inv->parsed()) {
    st = pd_invariants(gh.g, as_json, &out.s);
  } else if (cmd_bounds->parsed()) {
    st = pd_bounds(gh.g, context.c_str(), as_json, &out.s);
  }
  return print_result(st, out);
}

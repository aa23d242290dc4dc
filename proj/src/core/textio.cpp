#include "core/textio.hpp"

#include <sstream>

#include "json.hpp"

#include "core/action.hpp"
#include "core/constructions.hpp"
#include "core/errors.hpp"

namespace permdiam {

using nlohmann::json;

namespace {

std::string points_line(const std::vector<Point>& pts) {
  std::ostringstream os;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) os << ' ';
    os << pts[i];
  }
  return os.str();
}

json factor_json(const FactorDescriptor& f) {
  json j;
  j["order"] = f.order.str();
  j["name"] = f.name;
  j["kind"] = f.kind == FactorKind::Cyclic ? "cyclic"
              : f.kind == FactorKind::Recognized ? "recognized"
                                                 : "unrecognized";
  if (f.mu) j["mu"] = *f.mu;
  return j;
}

std::string factor_line(const FactorDescriptor& f) {
  std::string s = f.name + " order=" + f.order.str();
  if (f.mu) s += " mu=" + std::to_string(*f.mu);
  if (f.kind == FactorKind::Unrecognized) s += " unrecognized";
  return s;
}

}  // namespace

DescribedGroup parse_group_description(const std::string& text) {
  std::string t = text;
  // trim
  auto strip = [](std::string& s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  };
  strip(t);
  if (t.empty()) throw ParseError("empty group description");

  if (t.rfind("label:", 0) == 0) {
    std::string label = t.substr(6);
    return DescribedGroup{label, construct_by_label(label)};
  }

  std::string name = "G";
  auto colon = t.find(':');
  auto paren = t.find('(');
  auto eq = t.find('=');
  if (colon != std::string::npos && (paren == std::string::npos || colon < paren) &&
      (eq == std::string::npos || colon < eq)) {
    name = t.substr(0, colon);
    strip(name);
    t = t.substr(colon + 1);
    strip(t);
  }

  std::size_t degree = 0;
  bool explicit_degree = false;
  if (t.rfind("n=", 0) == 0) {
    auto semi = t.find(';');
    if (semi == std::string::npos) throw ParseError("expected ';' after n=DEGREE");
    try {
      degree = std::stoul(t.substr(2, semi - 2));
    } catch (const std::exception&) {
      throw ParseError("bad degree in \"" + t.substr(0, semi) + "\"");
    }
    explicit_degree = true;
    t = t.substr(semi + 1);
  }
  if (!explicit_degree) {
    // infer from the largest named point
    std::size_t maxp = 0;
    for (std::size_t i = 0; i < t.size();) {
      if (std::isdigit(static_cast<unsigned char>(t[i]))) {
        std::size_t j = i;
        while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
        // only digits inside parentheses are points; a crude but safe check:
        // labels sit left of '=', so skip numbers directly followed by '='
        if (j < t.size() && t[j] == '=') {
          i = j + 1;
          continue;
        }
        maxp = std::max(maxp, static_cast<std::size_t>(std::stoul(t.substr(i, j - i))));
        i = j;
      } else {
        ++i;
      }
    }
    degree = maxp + 1;
  }
  return DescribedGroup{name, PermGroup(parse_genset(t, degree))};
}

GroupInfo group_info(const DescribedGroup& g, const Budget& budget) {
  GroupInfo info;
  info.name = g.name;
  info.degree = g.group.degree();
  info.order = g.group.order();
  info.orbits = orbit_partition(g.group.gens());
  auto cls = classify_action(g.group.gens());
  switch (cls.kind) {
    case ActionKind::Intransitive:
      info.action = "intransitive";
      break;
    case ActionKind::Imprimitive:
      info.action = "imprimitive";
      info.blocks = cls.partition;
      break;
    case ActionKind::Primitive:
      info.action = "primitive";
      break;
  }
  try {
    info.factors = composition_factors(g.group, budget.enum_cap);
    info.factors_available = true;
    for (const auto& f : info.factors)
      if (f.kind == FactorKind::Unrecognized) info.factors_note = "contains unrecognized factors";
  } catch (const CapacityError& e) {
    info.factors_available = false;
    info.factors_note = e.what();
  }
  return info;
}

std::string render_info(const GroupInfo& info, bool as_json) {
  if (as_json) {
    json j;
    j["group"] = info.name;
    j["degree"] = info.degree;
    j["order"] = info.order.str();
    j["action"] = info.action;
    j["orbits"] = json::array();
    for (const auto& o : info.orbits) j["orbits"].push_back(o);
    if (!info.blocks.empty()) {
      j["blocks"] = json::array();
      for (const auto& b : info.blocks) j["blocks"].push_back(b);
    }
    if (info.factors_available) {
      j["factors"] = json::array();
      for (const auto& f : info.factors) j["factors"].push_back(factor_json(f));
    } else {
      j["factors_unavailable"] = info.factors_note;
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "group=" << info.name << "\n";
  os << "degree=" << info.degree << "\n";
  os << "order=" << info.order.str() << "\n";
  os << "action=" << info.action << "\n";
  os << "orbit.count=" << info.orbits.size() << "\n";
  for (std::size_t i = 0; i < info.orbits.size(); ++i)
    os << "orbit." << i << "=" << points_line(info.orbits[i]) << "\n";
  for (std::size_t i = 0; i < info.blocks.size(); ++i)
    os << "block." << i << "=" << points_line(info.blocks[i]) << "\n";
  if (info.factors_available) {
    os << "factor.count=" << info.factors.size() << "\n";
    for (std::size_t i = 0; i < info.factors.size(); ++i)
      os << "factor." << i << "=" << factor_line(info.factors[i]) << "\n";
  } else {
    os << "factors=unavailable: " << info.factors_note << "\n";
  }
  return os.str();
}

std::string render_diameter(const DiameterResult& d, bool as_json) {
  if (as_json) {
    json j;
    j["diameter"] = d.diameter;
    j["witness"] = d.witness.cycle_string();
    j["order"] = d.group_order;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "diameter=" << d.diameter << "\n";
  os << "witness=" << d.witness.cycle_string() << "\n";
  os << "order=" << d.group_order << "\n";
  return os.str();
}

std::string render_worst_case(const WorstCaseResult& w, bool as_json) {
  if (as_json) {
    json j;
    j["worst_diameter"] = w.diameter;
    j["extremal"] = w.extremal.describe();
    j["sets_examined"] = w.sets_examined;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "worst_diameter=" << w.diameter << "\n";
  os << "extremal=" << w.extremal.describe() << "\n";
  os << "sets_examined=" << w.sets_examined << "\n";
  return os.str();
}

std::string render_growth(const BallProfile& p, bool as_json) {
  if (as_json) {
    json j;
    j["gamma"] = p.counts;
    j["saturated"] = p.saturated;
    if (p.diameter_if_saturated) j["diameter"] = *p.diameter_if_saturated;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < p.counts.size(); ++r)
    os << "gamma." << r << "=" << p.counts[r] << "\n";
  os << "saturated=" << (p.saturated ? "true" : "false") << "\n";
  if (p.diameter_if_saturated) os << "diameter=" << *p.diameter_if_saturated << "\n";
  return os.str();
}

std::string render_certificate(const LengthCertificate& cert, std::size_t degree, bool as_json) {
  if (as_json) {
    json j;
    j["degree"] = degree;
    j["element"] = cert.element.cycle_string();
    j["genset"] = cert.genset_name;
    j["word"] = cert.word.str();
    j["length"] = cert.word.length();
    if (cert.asserted_bound) {
      j["bound"] = cert.asserted_bound->value.str();
      j["bound_source"] = cert.asserted_bound->source;
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "certificate.element=" << cert.element.cycle_string() << "\n";
  os << "certificate.genset=" << cert.genset_name << "\n";
  os << "certificate.word=" << cert.word.str() << "\n";
  os << "certificate.length=" << cert.word.length() << "\n";
  if (cert.asserted_bound) {
    os << "certificate.bound=" << cert.asserted_bound->value.str() << "\n";
    os << "certificate.bound_source=" << cert.asserted_bound->source << "\n";
  }
  return os.str();
}

LengthCertificate parse_certificate_json(const std::string& text) {
  json j = json::parse(text);
  LengthCertificate cert;
  std::size_t degree = j.at("degree").get<std::size_t>();
  cert.element = parse_cycles(j.at("element").get<std::string>(), degree);
  cert.genset_name = j.at("genset").get<std::string>();
  cert.word = Word::parse(j.at("word").get<std::string>());
  if (j.contains("bound")) {
    BoundTag tag;
    tag.value = BigInt(j.at("bound").get<std::string>());
    tag.source = j.value("bound_source", "");
    cert.asserted_bound = tag;
  }
  return cert;
}

std::string render_invariants(const MuProfile& mu, const ThetaPair& th,
                              const EpsilonResult& eps, bool as_json) {
  if (as_json) {
    json j;
    if (mu.available) {
      j["mu_cf"] = mu.mu_cf.str();
      j["mu_ab"] = mu.mu_ab.str();
      j["mu_na"] = mu.mu_na.str();
    } else {
      j["mu"] = "unavailable";
    }
    j["factors"] = json::array();
    for (const auto& f : mu.factors) j["factors"].push_back(factor_json(f));
    if (th.theta1) {
      j["theta1"] = *th.theta1;
      j["theta2"] = *th.theta2;
      if (!th.witness1.empty()) j["theta1_witness"] = th.witness1;
    } else {
      j["theta"] = "unavailable";
    }
    if (eps.epsilon) j["epsilon"] = *eps.epsilon;
    j["epsilon0"] = eps.epsilon0;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (mu.available) {
    os << "mu_cf=" << mu.mu_cf.str() << "\n";
    os << "mu_ab=" << mu.mu_ab.str() << "\n";
    os << "mu_na=" << mu.mu_na.str() << "\n";
  } else {
    os << "mu=unavailable\n";
  }
  os << "factor.count=" << mu.factors.size() << "\n";
  for (std::size_t i = 0; i < mu.factors.size(); ++i)
    os << "factor." << i << "=" << factor_line(mu.factors[i]) << "\n";
  if (th.theta1) {
    os << "theta1=" << *th.theta1 << "\n";
    os << "theta2=" << *th.theta2 << "\n";
    if (!th.witness1.empty()) os << "theta1_witness=" << th.witness1 << "\n";
  } else {
    os << "theta=unavailable\n";
  }
  if (eps.epsilon)
    os << "epsilon=" << *eps.epsilon << "\n";
  else
    os << "epsilon=unavailable\n";
  os << "epsilon0=" << eps.epsilon0 << "\n";
  return os.str();
}

std::string render_bound_report(const BoundReport& rep, bool as_json) {
  if (as_json) {
    json j;
    j["group"] = rep.group_id;
    j["degree"] = rep.degree;
    j["order"] = rep.order.str();
    if (rep.derived_length) j["derived_length"] = *rep.derived_length;
    if (rep.eps.epsilon) j["epsilon"] = *rep.eps.epsilon;
    j["epsilon0"] = rep.eps.epsilon0;
    if (rep.mu.available) {
      j["mu_cf"] = rep.mu.mu_cf.str();
      j["mu_ab"] = rep.mu.mu_ab.str();
      j["mu_na"] = rep.mu.mu_na.str();
    }
    if (rep.thetas.theta1) {
      j["theta1"] = *rep.thetas.theta1;
      j["theta2"] = *rep.thetas.theta2;
    }
    if (rep.exact_diameter) j["exact_diameter"] = *rep.exact_diameter;
    j["bounds"] = json::array();
    for (const auto& e : rep.entries) {
      json b;
      b["id"] = e.id;
      b["lhs"] = e.lhs;
      b["rhs"] = e.rhs;
      b["verdict"] = e.verdict;
      j["bounds"].push_back(b);
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "group=" << rep.group_id << "\n";
  os << "degree=" << rep.degree << "\n";
  os << "order=" << rep.order.str() << "\n";
  if (rep.derived_length) os << "derived_length=" << *rep.derived_length << "\n";
  if (rep.eps.epsilon) os << "epsilon=" << *rep.eps.epsilon << "\n";
  os << "epsilon0=" << rep.eps.epsilon0 << "\n";
  if (rep.mu.available) {
    os << "mu_cf=" << rep.mu.mu_cf.str() << "\n";
    os << "mu_ab=" << rep.mu.mu_ab.str() << "\n";
    os << "mu_na=" << rep.mu.mu_na.str() << "\n";
  }
  if (rep.thetas.theta1) {
    os << "theta1=" << *rep.thetas.theta1 << "\n";
    os << "theta2=" << *rep.thetas.theta2 << "\n";
  }
  if (rep.exact_diameter) os << "exact_diameter=" << *rep.exact_diameter << "\n";
  for (const auto& e : rep.entries) {
    os << "bound." << e.id << ".lhs=" << e.lhs << "\n";
    os << "bound." << e.id << ".rhs=" << e.rhs << "\n";
    os << "bound." << e.id << ".verdict=" << e.verdict << "\n";
  }
  return os.str();
}

}  // namespace permdiam

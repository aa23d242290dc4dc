#pragma once

#include <string>

#include "core/diametry.hpp"
#include "core/invariants.hpp"
#include "core/synth.hpp"

namespace permdiam {

/// Parses a group description: "label:<corpus-label>" or inline
/// "[name:][n=DEGREE;]cycles(,cycles)*" with optional per-generator labels
/// ("a=(0 1 2)"). The degree defaults to 1 + the largest point named.
struct DescribedGroup {
  std::string name;
  PermGroup group = PermGroup::trivial(1);
};
DescribedGroup parse_group_description(const std::string& text);

struct GroupInfo {
  std::string name;
  std::size_t degree = 0;
  BigInt order;
  std::vector<std::vector<Point>> orbits;
  std::string action;  // intransitive | imprimitive | primitive
  std::vector<std::vector<Point>> blocks;
  std::vector<FactorDescriptor> factors;
  bool factors_available = false;
  std::string factors_note;
};
GroupInfo group_info(const DescribedGroup& g, const Budget& budget);

// Line-oriented key=value records; json selects the structured format.
// Collections are emitted in a stable sorted order either way.
std::string render_info(const GroupInfo& info, bool json);
std::string render_diameter(const DiameterResult& d, bool json);
std::string render_worst_case(const WorstCaseResult& w, bool json);
std::string render_growth(const BallProfile& p, bool json);
std::string render_certificate(const LengthCertificate& cert, std::size_t degree, bool json);
std::string render_invariants(const MuProfile& mu, const ThetaPair& th, const EpsilonResult& eps,
                              bool json);
std::string render_bound_report(const BoundReport& rep, bool json);

/// Reads back render_certificate's JSON form; certificates round-trip.
LengthCertificate parse_certificate_json(const std::string& text);

}  // namespace permdiam

#pragma once

// JSON serialization of reports and parsing of matrices, ambients, rule
// files and configuration expressions. All CLI and python outputs are built
// from these serializers so the shipped schemas cover both.

#include "betalab/ca_engine.hpp"
#include "betalab/conjugacy.hpp"
#include "betalab/factorization.hpp"

#include <json.hpp>

#include <string>

namespace betalab {

using Json = nlohmann::json;

Json poly_to_json(const IntPolynomial& p, const std::string& var);
Json expansion_to_json(const BetaExpansion& e);
Json descriptor_to_json(const BetaShiftDescriptor& d);
Json matrix_to_json(const IntMatrix& m);
Json zeta_to_json(const ZetaDenominator& z);
Json scale_verdict_to_json(const ScaleVerdict& v);
Json primeness_to_json(const PrimenessReport& r);
Json conjugacy_report_to_json(const ConjugacyReport& r);
Json rule_table_to_json(const SlidingBlockCode& code);
Json blocking_certificate_to_json(const BlockingCertificate& c, const ShiftSpace& ambient);
Json blocking_candidate_to_json(const BlockingCandidate& c);
Json probe_to_json(const ProbeReport& r);
Json space_time_to_json(const SpaceTimeDiagram& d);
Json configuration_to_json(const Configuration& x);

// Matrix input: JSON array-of-arrays, or a text grid with one row per line.
IntMatrix parse_matrix(const std::string& text);

// Ambient descriptors:
//   {"kind":"full","n":2}
//   {"kind":"beta-sft","digits":[3,1,1]}
//   {"kind":"beta-poly","poly":"x^2-x-1","horizon":10000}
//   {"kind":"beta-sofic","head":[2],"cycle":[1]}
//   {"kind":"beta-approx","beta":3.5,"horizon":10000}
//   {"kind":"product","factors":[...,...]}
ShiftSpacePtr ambient_from_json(const Json& j);
Json ambient_to_json(const ShiftSpace& ambient);

// Rule files: {"ambient":..., "lo":-1, "hi":1,
//              "table":[{"block":[...],"out":k2}, ...]}
// or {"ambient":..., "builtin":"identity"|"shift"|"inverse-shift"|"product-shift"}.
CellularAutomaton rule_from_json(const Json& j);

// Configuration grammar: "U^inf C1.C2 V^inf" with comma-separated digits;
// C1/C2 may be empty and the dot marks position 0.
Configuration parse_configuration(const std::string& text, const ShiftSpace& ambient);

} // namespace betalab

#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "hopfpfaff/analysis.hpp"
#include "hopfpfaff/exterior.hpp"
#include "hopfpfaff/sections.hpp"
#include "hopfpfaff/spectrum.hpp"

namespace hopfpfaff {

using Json = nlohmann::json;

// All external indices are 1-based. Rationals serialize as {"num","den"}
// integer pairs, falling back to decimal strings beyond 64 bits.

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& field);

Json spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const Json& j);

Json character_to_json(const Character& c);
// {"exponents":[...]} directly; {"value":{...}} resolves through
// character_from_value and therefore needs an exact spectrum
Character character_from_json(const Json& j, const Spectrum& s);

Json kform_to_json(const KForm& w);
KForm kform_from_json(const Json& j);

Json lattice_to_json(const RelationLattice& lattice);
Json hopf_class_to_json(const HopfClass& c);

Json basis_to_json(const SectionBasis& basis);
Json parametric_to_json(const ParametricSection& sec);
Json report_to_json(const PfaffReport& rep);

Json load_json_file(const std::string& path);

}  // namespace hopfpfaff

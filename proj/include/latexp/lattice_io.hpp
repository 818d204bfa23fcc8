#pragma once

#include <string>

#include "json.hpp"
#include "latexp/constructions.hpp"
#include "latexp/lattice.hpp"

namespace latexp {

using Json = nlohmann::ordered_json;

Json field_to_json(const FieldPtr& f);
FieldPtr field_from_json(const Json& j);

Json element_to_json(const FieldElement& e);  // array of "p/q" strings
FieldElement element_from_json(const FieldPtr& f, const Json& j);

// {"dim":d,"field":{...},"rows":[[elem,...],...],"scale":"p/q"} for forms over
// one embedding; norm-form lattices carry "kind":"norm_form" and a rational
// "coeffs" matrix instead of "rows". "unit_det":true marks a det-normalized
// homothet.
Json lattice_to_json(const Lattice& lat);
Lattice lattice_from_json(const Json& j);

Lattice load_lattice(const std::string& path);
void save_lattice(const std::string& path, const Lattice& lat);

Json report_to_json(const HypothesisReport& rep);

}  // namespace latexp

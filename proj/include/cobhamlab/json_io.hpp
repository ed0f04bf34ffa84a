// JSON schemas for the library objects.  Parse errors carry
// JSON-pointer-style locations; writers are deterministic (sorted keys,
// no clocks) so identical inputs give byte-identical reports.
#pragma once

#include <string>

#include <json.hpp>

#include "cobhamlab/matrix.hpp"
#include "cobhamlab/numeration.hpp"
#include "cobhamlab/recognizers.hpp"
#include "cobhamlab/returns.hpp"
#include "cobhamlab/spectra.hpp"
#include "cobhamlab/substitutions.hpp"

namespace cobhamlab {

// Schema-violation error with a JSON-pointer-style location.
struct SchemaError : Error {
    using Error::Error;
};

Substitution substitution_from_json(const nlohmann::json& j);
nlohmann::json substitution_to_json(const Substitution& s);

IntMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const IntMatrix& m);

ParryData parry_from_json(const nlohmann::json& j);
nlohmann::json parry_to_json(const ParryData& p);

NumerationSystem system_from_json(const nlohmann::json& j);

DigitDFA dfa_from_json(const nlohmann::json& j);
nlohmann::json dfa_to_json(const DigitDFA& d);

IntegerSetSpec set_spec_from_json(const nlohmann::json& j, const NumerationSystem* dfa_system);
nlohmann::json set_spec_to_json(const IntegerSetSpec& s);

nlohmann::json decomposition_to_json(const PrimitiveDecomposition& d, const Alphabet& alphabet);
nlohmann::json interval_to_json(const AlgebraicInterval& a);
nlohmann::json dependence_to_json(const DependenceResult& d);
nlohmann::json periodicity_to_json(const PeriodicityReport& p);
nlohmann::json linrec_to_json(const LinRecReport& r);
nlohmann::json cobham_report_to_json(const CobhamReport& r);

std::string verdict_name(Verdict v);

}  // namespace cobhamlab

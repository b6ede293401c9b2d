#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ncpb/bundles.hpp"
#include "ncpb/cohomology.hpp"
#include "ncpb/crossed_products.hpp"
#include "ncpb/factor_systems.hpp"

namespace ncpb {

using Json = nlohmann::json;  // object keys are kept sorted, so dumps are deterministic

inline constexpr const char* kFormatVersion = "ncpb/1";

// Writers. Field elements are {"N": conductor, "c": [rational strings]} in the power basis.
Json to_json(const Cyclo& x);
Json to_json(const CycloVector& v);
Json to_json(const CycloMatrix& m);
Json to_json(const FinAbGroup& g);
Json to_json(const StructureAlgebra& a);
Json to_json(const Cochain& c);
Json to_json(const CoeffModule& m);
Json to_json(const CohomologyResult& r);
Json to_json(const OuterAction& s);
Json to_json(const FactorSystem& fs);
Json to_json(const GradedAlgebra& a);
Json to_json(const DynamicalSystem& ds);
Json to_json(const IsotypicDecomposition& dec);
Json to_json(const TrivialityCertificate& cert);
Json to_json(const Verdict& v);

// Readers. Throw ParseError naming the JSON path; structures are re-verified on
// load and rejected with DomainError when verification fails.
Cyclo cyclo_from_json(const Json& j, const std::string& path = "");
CycloVector vector_from_json(const Json& j, const std::string& path = "");
CycloMatrix matrix_from_json(const Json& j, const std::string& path = "");
FinAbGroup group_from_json(const Json& j, const std::string& path = "");
StructureAlgebra algebra_from_json(const Json& j, const std::string& path = "");
Cochain cochain_from_json(const Json& j, const std::string& path = "");
CoeffModule module_from_json(const Json& j, const std::string& path = "");
FactorSystem factor_system_from_json(const Json& j, const std::string& path = "");
GradedAlgebra graded_from_json(const Json& j, const std::string& path = "");
DynamicalSystem system_from_json(const Json& j, const std::string& path = "");
TrivialityCertificate certificate_from_json(const Json& j, const DynamicalSystem& ds, const std::string& path = "");

/// {"version": "ncpb/1", "kind": kind, "data": data}
Json envelope(const std::string& kind, Json data);
/// The data of an envelope of the given kind (any kind when empty).
const Json& open_envelope(const Json& j, const std::string& kind);

}  // namespace ncpb

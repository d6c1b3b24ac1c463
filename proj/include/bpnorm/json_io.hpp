#pragma once

#include <json.hpp>

#include "bpnorm/exposed.hpp"
#include "bpnorm/maps.hpp"
#include "bpnorm/norms.hpp"
#include "bpnorm/positivity.hpp"
#include "bpnorm/structure.hpp"
#include "bpnorm/types.hpp"

namespace bpnorm {

using Json = nlohmann::json;

// Wire formats: operators {"n", "re": [[...]], "im": [[...]]} (n^2 x n^2),
// vectors {"n", "re": [...], "im": [...]} (length n^2),
// maps {"n", "images": [[{"re","im"}, ...], ...]}.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json operator_to_json(const BipartiteOperator& op);
BipartiteOperator operator_from_json(const Json& j);

Json vector_to_json(const Vector& v, int n);
Vector vector_from_json(const Json& j);

Json map_to_json(const LinearMapRepr& phi);
LinearMapRepr map_from_json(const Json& j);

Json to_json(const SymmetryWitness& w);
Json to_json(const AlphaEstimate& e);
Json to_json(const PiEstimate& e);
Json to_json(const ProductVectorCertificate& c);
Json to_json(const MembershipReport& r);
Json to_json(const ExposureReport& r);
Json to_json(const SectionReport& r);
Json to_json(const UPBReport& r);
Json to_json(const DecompositionWitness& w);
Json to_json(const InvarianceReport& r);
Json to_json(const RotundReport& r);
Json to_json(const SmoothReport& r);

// Wraps a payload in the versioned report envelope {"schema": "bpnorm/1", ...}.
Json make_report(const std::string& kind, Json payload);

}  // namespace bpnorm

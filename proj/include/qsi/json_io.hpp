#pragma once

#include <json.hpp>

#include "qsi/presentation.hpp"
#include "qsi/verify.hpp"

namespace qsi {

// ordered_json keeps insertion order, which makes every serialization
// byte-stable across runs.
using Json = nlohmann::ordered_json;

QuiverPtr quiver_from_json(const Json& j);  // ParseError + validate_quiver errors
Json quiver_to_json(const Quiver& q);

/// {"vertex-label": integer, ...}; every vertex must appear exactly once.
IntVec intvec_from_json(const Quiver& q, const Json& j);   // ParseError, IndexMismatch
DimVec dimvec_from_json(const Quiver& q, const Json& j);   // + nonnegativity
Json intvec_to_json(const Quiver& q, const IntVec& v);

Json classification_to_json(const GraphClass& cls);
Json orbits_to_json(const EuclideanStructure& es);
Json decomposition_to_json(const EuclideanStructure& es, const CanonicalDecomposition& cd,
                           const GenericDecomposition& gd);
Json arcs_to_json(const EuclideanStructure& es, const CanonicalDecomposition& cd);
std::string polygons_to_dot(const EuclideanStructure& es, const CanonicalDecomposition& cd);

Json presentation_to_json(const EuclideanStructure& es, const Presentation& pres);
/// Inverse of presentation_to_json over the generator/relation payload;
/// used to check the round-trip contract.
Presentation presentation_from_json(const EuclideanStructure& es, const Json& j);

Json report_to_json(const VerificationReport& report);
/// The deterministic part of a report (timings stripped).
Json report_to_json_stable(const VerificationReport& report);

std::string render_text(const Json& j);

}  // namespace qsi

#pragma once

#include <json.hpp>
#include <string>

#include "hopfcm/homology.hpp"
#include "hopfcm/invariants.hpp"
#include "hopfcm/simplicial_complex.hpp"
#include "hopfcm/structure.hpp"

namespace hopfcm {

using Json = nlohmann::json;

/// Parses a "mixed-graph" or "double-poset" document. Shape errors raise
/// ValidationError(Malformed); family errors raise their own kinds.
Structure parse_structure(const Json& doc);
Structure parse_structure_text(const std::string& text);

/// Machine integer when it fits, decimal string otherwise.
Json integer_json(const BigInt& v);

/// Canonical document: labels sorted, edge/relation lists sorted; double-poset
/// relations are written transitively closed.
Json to_json(const Structure& h);
/// Compact, byte-stable text of to_json(h).
std::string serialize(const Structure& h);

/// Facets as sorted label lists, e.g. [["a", "a|b|d"], ...].
Json to_json(const SimplicialComplex& c);
Json to_json(const HomologyProfile& p);
/// Coefficients as [numerator, denominator] string pairs.
Json to_json(const RationalPolynomial& p);
Json to_json(const HVector& h);
/// {"basis": ..., "degree": n, "terms": {"2,1": 1, ...}, "display": ...}
Json to_json(const QSymExpansion& q);
Json to_json(const CmReport& r, const GroundSet& ground);
Json to_json(const MinorKey& key, const GroundSet& ground);

}  // namespace hopfcm

#pragma once

#include <json.hpp>

#include "ruelle/biortho.hpp"
#include "ruelle/cascade.hpp"
#include "ruelle/laurent.hpp"
#include "ruelle/stretched_haar.hpp"
#include "ruelle/transfer.hpp"

namespace ruelle {

using Json = nlohmann::ordered_json;

/// {"min_deg": int, "coeffs": [[re, im], ...]}; round-trips finite doubles
/// bit-exactly.
Json to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const Json& j);

/// LaurentPoly layout plus "N".
Json to_json(const Filter& f);
Filter filter_from_json(const Json& j);

/// {"d": int, "N": int, "entries": [[re, im], ...]} row-major.
Json to_json(const LawtonMatrix& M);

Json to_json(const EigenspaceResult& r);

/// {"p": int, "cycles": [[int, ...], ...]}.
Json to_json(const CycleDecomposition& c);

/// {"verdict": ..., "qmf": bool, "zero_conditions": bool, "dim": int,
///  "assumptions": [...], "details": [{"name":..., "residual":...}, ...]}.
Json to_json(const CriterionReport& r);

Json to_json(const GridFunction& g);

}  // namespace ruelle

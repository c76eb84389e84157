// JSON forms of the library types. Big integers are strings; witness indices
// are 1-based.
#pragma once

#include <json.hpp>

#include "orthopat/catalog.hpp"
#include "orthopat/linalg.hpp"
#include "orthopat/obstructions.hpp"
#include "orthopat/pattern.hpp"
#include "orthopat/search.hpp"

namespace orthopat {

using Json = nlohmann::ordered_json;

// {"n": 3, "den": "25", "num": [["16", "12", "15"], ...]}
void to_json(Json& j, const RatMatrix& x);
void from_json(const Json& j, RatMatrix& x);

// {"n": 3, "rows": ["111", "110", "101"]}
void to_json(Json& j, const ZeroPattern& p);
void from_json(const Json& j, ZeroPattern& p);

// {"verdict": "infeasible", "reason": "column-dependence",
//  "witness": {"columns": [1, 2], "rows": [3, 4, 5], "dependent_rows": false}}
void to_json(Json& j, const ObstructionReport& r);
void from_json(const Json& j, ObstructionReport& r);

// {"status": "found", "denominator": 9, "solution": {...}, "nodes": 123,
//  "solutions": 1, "exhausted_through": 8}
void to_json(Json& j, const SearchResult& r);
void from_json(const Json& j, SearchResult& r);

void to_json(Json& j, const EntryCheck& c);
void to_json(Json& j, const VerificationReport& r);
void to_json(Json& j, const CatalogEntry& e);

}  // namespace orthopat

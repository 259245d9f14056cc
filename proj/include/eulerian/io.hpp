#pragma once

#include <string>

#include <json.hpp>

#include "eulerian/analysis.hpp"
#include "eulerian/cd_polynomial.hpp"
#include "eulerian/flag.hpp"
#include "eulerian/poset.hpp"

namespace eulerian {

using Json = nlohmann::json;

// {"rank": r, "level_sizes": [...], "covers": [[[i,j], ...], ...]}
Json to_json(const RankedPoset& p);
/// Throws InvalidArgument on malformed documents; does not validate the poset.
RankedPoset poset_from_json(const Json& doc);

RankedPoset load_poset(const std::string& path);
void save_poset(const RankedPoset& p, const std::string& path);

// {"n": n, "terms": {"ccdcc": -2, ...}}; coefficients outside int64 are
// written as decimal strings.
Json to_json(const CdPolynomial& phi);
CdPolynomial cd_polynomial_from_json(const Json& doc);

// {"[1,2]": "6", ...}
Json to_json(const FlagTable& f);
// {"n": n, "entries": {"[1,2]": "-1/2", ...}}; zero entries omitted.
Json to_json(const LVector& l);
// {"n": n, "entries": {"[1,4]": -1, ...}}
Json to_json(const LimitLVector& l);

Json to_json(const RankSubset& s);
// {"word": ..., "class": ..., "S": [...], "T": [...], "V": [...]}
Json certificate_json(const CdWord& w, const WordClass& wc);
// {"word": ..., "class": ..., "witness": ..., "witness_offset": ...} or with
// certificate sets for Part1 words.
Json classification_json(const CdWord& w, const WordClass& wc);

/// Canonical serialization used by the CLI: sorted keys, two-space indent.
std::string dump(const Json& doc);

}  // namespace eulerian

#pragma once

#include <string>

#include <json.hpp>

#include "coxwalls/coxeter.hpp"
#include "coxwalls/covers.hpp"
#include "coxwalls/morse.hpp"
#include "coxwalls/partitions.hpp"
#include "coxwalls/probability.hpp"
#include "coxwalls/two_complex.hpp"
#include "coxwalls/walls.hpp"

namespace coxwalls {

using json = nlohmann::json;

// {"rank": r, "exponents": [{"i":...,"j":...,"m": integer or "inf"}, ...]};
// omitted pairs mean an infinite exponent
json to_json(const CoxeterPresentation& p);
CoxeterPresentation presentation_from_json(const json& j);

// {"degree": d, "generators": [[1-based image list], ...]}
json to_json(const PermutationQuotient& q);
PermutationQuotient quotient_from_json(const json& j);

json to_json(const TwoComplex& k);
TwoComplex complex_from_json(const json& j);

// {"r": r, "partitions": [[v1,...,vr], ...]} with values in 1..4
json to_json(const PartitionFamily& f);
PartitionFamily family_from_json(const json& j);

json to_json(const WallOrientation& o);       // wall-id -> sign map
WallOrientation orientation_from_json(const json& j);

json to_json(const PathologyReport& report);
json to_json(const OrientationSearchResult& result);
json to_json(const Certificate& cert);

// 1-skeleton with generator labels; stable-sorted by cell id
std::string dot_skeleton(const TwoComplex& k);
// wall overlay: wall id as color attribute on every dual 1-cell
std::string dot_walls(const TwoComplex& k, const WallSet& ws);

// Monte Carlo sweep table, one row per (model, quantity), with the exact
// value and union bound columns filled where available. `header` controls
// whether the column row is emitted, so sweeps concatenate cleanly.
std::string probe_csv(const LinkModel& model, const MonteCarloResult& mc,
                      bool header = true);

json load_json_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& text);

}  // namespace coxwalls

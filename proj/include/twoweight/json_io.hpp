// JSON views of the domain types, for file output and cross-implementation
// diffing. Key order is fixed so identical inputs serialize byte-identically.

#ifndef TWOWEIGHT_JSON_IO_HPP
#define TWOWEIGHT_JSON_IO_HPP

#include <json.hpp>

#include "twoweight/applications.hpp"
#include "twoweight/codes.hpp"
#include "twoweight/defining_sets.hpp"
#include "twoweight/dual.hpp"
#include "twoweight/srg.hpp"

namespace twoweight {

using Json = nlohmann::ordered_json;

Json to_json(const DefiningSet& s);
Json to_json(const WeightDistribution& wd);
Json to_json(const CompleteWeightEnumerator& cwe);
Json to_json(const GeneratorMatrix& g);
Json to_json(const CompareReport& rep);
Json to_json(const PlessReport& rep);
Json to_json(const RatioReport& rep);
Json to_json(const MinimalityReport& rep);
Json to_json(const GriesmerReport& rep);
Json to_json(const SrgReport& rep);

}  // namespace twoweight

#endif

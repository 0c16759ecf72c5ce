#include "twoweight/json_io.hpp"

namespace twoweight {

Json to_json(const DefiningSet& s) {
    Json j;
    j["p"] = s.field->p();
    j["m"] = s.field->m();
    j["d"] = s.d;
    j["kind"] = to_string(s.kind);
    j["lambda"] = s.lambda;
    j["size"] = s.size();
    Json pairs = Json::array();
    for (const auto& [x, y] : s.pairs) pairs.push_back(Json::array({x, y}));
    j["pairs"] = std::move(pairs);
    return j;
}

Json to_json(const WeightDistribution& wd) {
    Json j;
    j["n"] = wd.n;
    j["k"] = wd.k;
    Json weights = Json::object();
    for (const auto& [w, a] : wd.counts)
        if (w != 0) weights[std::to_string(w)] = a;
    j["weights"] = std::move(weights);
    return j;
}

Json to_json(const CompleteWeightEnumerator& cwe) {
    Json j;
    j["n"] = cwe.n;
    j["p"] = cwe.p;
    Json comps = Json::array();
    for (const auto& [t, count] : cwe.terms) {
        Json entry;
        entry["t"] = t;
        entry["count"] = count;
        comps.push_back(std::move(entry));
    }
    j["compositions"] = std::move(comps);
    return j;
}

Json to_json(const GeneratorMatrix& g) {
    Json j;
    j["p"] = g.p;
    j["k"] = g.k;
    j["n"] = g.n;
    Json rows = Json::array();
    for (int r = 0; r < g.k; ++r) {
        Json row = Json::array();
        for (std::int64_t c = 0; c < g.n; ++c) row.push_back(g.at(r, c));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json to_json(const CompareReport& rep) {
    Json diffs = Json::array();
    for (const auto& d : rep.mismatches) {
        Json entry;
        entry["where"] = d.where;
        entry["actual"] = d.actual;
        entry["predicted"] = d.predicted;
        diffs.push_back(std::move(entry));
    }
    Json j;
    j["match"] = rep.empty();
    j["mismatches"] = std::move(diffs);
    return j;
}

Json to_json(const PlessReport& rep) {
    Json j;
    j["codeword_total"] = rep.codeword_total;
    j["codeword_expected"] = rep.codeword_expected;
    j["first_moment"] = rep.first_moment;
    j["first_moment_expected"] = rep.first_moment_expected;
    j["pass"] = rep.pass;
    return j;
}

Json to_json(const RatioReport& rep) {
    Json j;
    j["ratio"] = rep.ratio;
    j["threshold"] = rep.threshold;
    j["pass"] = rep.pass;
    return j;
}

Json to_json(const MinimalityReport& rep) {
    Json j;
    j["all_minimal"] = rep.all_minimal;
    j["codewords_scanned"] = rep.codewords_scanned;
    j["covering_pairs"] = rep.covering_pairs;
    j["covering_pairs_nonproportional"] = rep.covering_pairs_nonproportional;
    return j;
}

Json to_json(const GriesmerReport& rep) {
    Json j;
    j["bound"] = rep.bound;
    j["slack"] = rep.slack;
    return j;
}

Json to_json(const SrgReport& rep) {
    Json j;
    j["N"] = rep.params.N;
    j["K"] = rep.params.K;
    j["lambda"] = rep.params.lambda;
    j["mu"] = rep.params.mu;
    if (rep.verified.has_value())
        j["verified"] = *rep.verified;
    else
        j["verified"] = nullptr;
    j["feasibility"] = rep.feasibility;
    j["source"] = rep.source;
    j["weights"] = Json::array({rep.weights_used.first, rep.weights_used.second});
    if (!rep.note.empty()) j["note"] = rep.note;
    if (!rep.failure.empty()) j["failure"] = rep.failure;
    return j;
}

}  // namespace twoweight

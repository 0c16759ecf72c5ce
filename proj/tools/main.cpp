// Command-line front end: construct defining sets, analyze the codes built
// on them (enumeration vs. closed forms), build/verify the derived strongly
// regular graphs, and sweep a whole parameter grid.
//
// Exit codes: 0 all checks pass, 1 a mathematical mismatch, 2 usage error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "twoweight/analysis.hpp"
#include "twoweight/json_io.hpp"

using namespace twoweight;

namespace {

struct CliOptions {
    int p = 3;
    int m = 2;
    int d = 0;  // 0 = pick the smallest valid d for the kind
    std::string kind = "d0";
    int lambda = 0;
    bool punctured = false;
    std::string out;
};

SetKind resolve_kind(const CliOptions& opt) {
    if (opt.kind == "d0") return opt.punctured ? SetKind::PuncturedD0 : SetKind::D0;
    if (opt.kind == "dstar") return opt.punctured ? SetKind::PuncturedDStar : SetKind::DStar;
    if (opt.kind == "dlambda")
        return opt.punctured ? SetKind::PuncturedDLambda : SetKind::DLambda;
    throw std::invalid_argument("unknown kind '" + opt.kind + "'");
}

int default_d(SetKind kind, int p) {
    switch (kind) {
        case SetKind::PuncturedD0:
        case SetKind::PuncturedDStar:
            return p - 1;
        case SetKind::PuncturedDLambda:
            return 2;
        default:
            return 1;
    }
}

CodeParams resolve_params(const CliOptions& opt) {
    CodeParams params;
    params.p = opt.p;
    params.m = opt.m;
    params.kind = resolve_kind(opt);
    params.d = opt.d > 0 ? opt.d : default_d(params.kind, opt.p);
    params.lambda = opt.lambda;
    return params;
}

std::int64_t env_budget(std::int64_t fallback) {
    if (const char* v = std::getenv("TWF_BUDGET")) return std::strtoll(v, nullptr, 10);
    return fallback;
}

void emit(const Json& doc, const std::string& out) {
    if (out.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream os(out);
        if (!os) throw std::runtime_error("cannot write " + out);
        os << doc.dump(2) << "\n";
    }
}

void add_common_flags(CLI::App* cmd, CliOptions& opt, bool with_punctured = true) {
    cmd->add_option("--p", opt.p, "odd prime field characteristic");
    cmd->add_option("--m", opt.m, "extension degree");
    cmd->add_option("--d", opt.d, "exponent d (default: smallest valid for the kind)");
    cmd->add_option("--kind", opt.kind, "d0 | dstar | dlambda")
        ->check(CLI::IsMember({"d0", "dstar", "dlambda"}));
    cmd->add_option("--lambda", opt.lambda, "trace value for dlambda kinds");
    if (with_punctured) cmd->add_flag("--punctured", opt.punctured, "one orbit representative");
    cmd->add_option("--out", opt.out, "write JSON here instead of stdout");
}

int run_construct(const CliOptions& opt) {
    const auto params = resolve_params(opt);
    const auto field = build_field(params.p, params.m);
    const auto set = build_set(field, params.kind, params.d, params.lambda);
    emit(to_json(set), opt.out);
    std::cout << "constructed " << to_string(set.kind) << " p=" << params.p << " m=" << params.m
              << " d=" << params.d;
    if (set.kind == SetKind::DLambda || set.kind == SetKind::PuncturedDLambda)
        std::cout << " lambda=" << set.lambda;
    std::cout << " size=" << set.size() << "\n";
    return 0;
}

Json analysis_to_json(const CodeAnalysis& a) {
    Json doc;
    doc["params"] = {{"p", a.params.p},
                     {"m", a.params.m},
                     {"d", a.params.d},
                     {"kind", to_string(a.params.kind)},
                     {"lambda", a.params.lambda}};
    doc["code"] = Json::array({a.wd.n, a.wd.k, a.d_min});
    doc["weight_distribution"] = to_json(a.wd);
    doc["cwe"] = to_json(a.cwe);
    doc["predicted_wd"] = to_json(a.predicted_wd);
    doc["predicted_cwe"] = a.predicted_cwe ? to_json(*a.predicted_cwe) : Json(nullptr);
    doc["wd_diff"] = to_json(a.wd_diff);
    doc["cwe_diff"] = to_json(a.cwe_diff);
    doc["pless"] = to_json(a.pless);
    doc["dual_distance"] = to_string(a.dual_distance);
    doc["projective"] = a.dual_distance == DualDistance::Three ||
                        a.dual_distance == DualDistance::AtLeastFour;
    doc["ab_ratio"] = to_json(a.ratio);
    doc["ab_ratio"]["scanned"] = a.minimality.has_value();
    doc["minimality"] = a.minimality ? to_json(*a.minimality) : Json(nullptr);
    doc["griesmer"] = to_json(a.griesmer);
    doc["match"] = a.match();
    return doc;
}

int run_analyze(const CliOptions& opt) {
    const auto params = resolve_params(opt);
    const auto analysis = analyze_code(params, env_budget(kDefaultEnumBudget));
    emit(analysis_to_json(analysis), opt.out);
    std::cout << params.label() << ": [" << analysis.wd.n << "," << analysis.wd.k << ","
              << analysis.d_min << "]  " << analysis.wd.polynomial() << "\n"
              << "prediction " << (analysis.match() ? "matches" : "MISMATCH") << ", dual distance "
              << to_string(analysis.dual_distance) << ", ratio " << analysis.ratio.ratio
              << (analysis.ratio.pass ? " > " : " <= ") << analysis.ratio.threshold
              << ", Griesmer slack " << analysis.griesmer.slack << "\n";
    return analysis.match() ? 0 : 1;
}

int run_srg(const CliOptions& opt) {
    CliOptions punctured = opt;
    punctured.punctured = true;
    const auto params = resolve_params(punctured);
    if (params.kind == SetKind::PuncturedDLambda)
        throw std::invalid_argument("graphs are built from the d0 / dstar families");
    const auto field = build_field(params.p, params.m);
    const auto set = build_set(field, params.kind, params.d, params.lambda);
    const auto spec = CodeSpec::from(set);
    const auto wd = predict_wd(params.kind, params.p, params.m, params.lambda);
    const auto rep = srg_analysis(spec, wd, env_budget(kSrgVerifyOpBudget));
    emit(to_json(rep), opt.out);
    std::cout << "SRG(" << rep.params.N << "," << rep.params.K << "," << rep.params.lambda << ","
              << rep.params.mu << ") from " << rep.source << ": "
              << (rep.verified.has_value() ? (*rep.verified ? "verified" : "REFUTED")
                                           : "predicted only")
              << "\n";
    return rep.verified == false ? 1 : 0;
}

std::string grid_file_name(const CodeParams& params) {
    std::string name = "p" + std::to_string(params.p) + "_m" + std::to_string(params.m) + "_d" +
                       std::to_string(params.d) + "_" + to_string(params.kind);
    if (params.kind == SetKind::DLambda || params.kind == SetKind::PuncturedDLambda)
        name += "_l" + std::to_string(params.lambda);
    return name + ".json";
}

std::vector<CodeParams> grid_from_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot read config " + path);
    Json cfg = Json::parse(is);
    if (!cfg.is_array() || cfg.empty())
        throw std::invalid_argument("config must be a non-empty JSON array");
    std::vector<CodeParams> rows;
    for (const auto& row : cfg) {
        CliOptions opt;
        opt.p = row.at("p").get<int>();
        opt.m = row.at("m").get<int>();
        opt.kind = row.value("kind", "d0");
        opt.lambda = row.value("lambda", 0);
        opt.punctured = row.value("punctured", false);
        opt.d = row.value("d", 0);
        rows.push_back(resolve_params(opt));
    }
    return rows;
}

int run_grid(const std::string& config, const std::string& out_dir) {
    const auto rows = config.empty() ? standard_grid() : grid_from_config(config);
    std::filesystem::create_directories(out_dir);
    std::ofstream csv(out_dir + "/summary.csv");
    csv << "p,m,d,kind,lambda,n,k,weights,match\n";

    const std::int64_t budget = env_budget(kDefaultEnumBudget);
    bool all_match = true;
    for (const auto& params : rows) {
        if (params.m < 2) {
            std::cout << params.label() << ": skipped (closed forms require m >= 2)\n";
            csv << params.p << "," << params.m << "," << params.d << "," << to_string(params.kind)
                << "," << params.lambda << ",,,,skipped\n";
            continue;
        }
        const auto analysis = analyze_code(params, budget);
        emit(analysis_to_json(analysis), out_dir + "/" + grid_file_name(params));

        std::string weights;
        for (const auto& [w, a] : analysis.wd.counts) {
            if (w == 0) continue;
            if (!weights.empty()) weights += ";";
            weights += std::to_string(w) + ":" + std::to_string(a);
        }
        csv << params.p << "," << params.m << "," << params.d << "," << to_string(params.kind)
            << "," << params.lambda << "," << analysis.wd.n << "," << analysis.wd.k << ","
            << weights << "," << (analysis.match() ? "yes" : "NO") << "\n";
        std::cout << params.label() << ": [" << analysis.wd.n << "," << analysis.wd.k << ","
                  << analysis.d_min << "] " << (analysis.match() ? "ok" : "MISMATCH") << "\n";
        all_match = all_match && analysis.match();
    }
    return all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-weight trace codes: construction, enumeration, verification"};
    app.require_subcommand(1);

    CliOptions opt;
    std::string config, out_dir = "grid-out";

    auto* construct = app.add_subcommand("construct", "build a defining set");
    add_common_flags(construct, opt);

    auto* analyze = app.add_subcommand("analyze", "enumerate a code and diff the closed forms");
    add_common_flags(analyze, opt);

    auto* srg = app.add_subcommand("srg", "strongly regular graph from a punctured code");
    add_common_flags(srg, opt, /*with_punctured=*/false);

    auto* grid = app.add_subcommand("grid", "run analyze across a parameter grid");
    grid->add_option("--config", config, "JSON array of parameter objects");
    grid->add_option("--out", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed()) return run_construct(opt);
        if (analyze->parsed()) return run_analyze(opt);
        if (srg->parsed()) return run_srg(opt);
        return run_grid(config, out_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

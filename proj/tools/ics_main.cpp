// Command-line front end: forward cumulants, polynomial reconstruction,
// prediction, hypothesis tests, generator recovery, simulation, embedding.
// Exit codes: 0 success, 1 domain failure, 2 usage error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ics/io.hpp"

namespace {

constexpr const char* kToolVersion = "0.1.0";

using ics::Json;

struct Output {
    std::string path; // empty: summary only
};

Json report_skeleton(const std::vector<std::string>& argv_tail,
                     const std::vector<std::string>& input_paths) {
    Json report;
    report["schema_version"] = 1;
    report["tool"] = {{"name", "ics"}, {"version", kToolVersion}};
    report["command"] = argv_tail;
    Json inputs = Json::array();
    for (const auto& path : input_paths)
        inputs.push_back({{"path", path}, {"fnv1a64", ics::file_hash(path)}});
    report["inputs"] = inputs;
    return report;
}

void emit(const Output& out, const Json& report) {
    if (!out.path.empty()) ics::write_json_file(out.path, report);
}

// collected per-verb settings
struct Options {
    std::string model_path;
    std::string cumulants_path;
    std::string structure_path;
    std::string output_path;
    std::string estimates_path;
    int orders = 4;
    int dimension = 0;
    std::uint64_t seed = 0;
    double threshold = 0.0;
    int starts = 512;
    std::string mode = "coefficient-match";
    std::vector<std::string> assume;
    std::string hypothesis;
    double total_time = 0.0;
    double window_length = 100.0;
    double burn_in = -1.0;
};

ics::Hypothesis resolve_hypothesis(const std::vector<std::string>& assume,
                                   const std::string& hypothesis) {
    bool classical = false, quantum = false, markovian = false;
    int dimension = 0;
    const auto consume = [&](const std::string& key) {
        if (key == "classical")
            classical = true;
        else if (key == "quantum")
            quantum = true;
        else if (key == "markovian")
            markovian = true;
        else if (key.rfind("dim=", 0) == 0)
            dimension = std::stoi(key.substr(4));
        else
            throw CLI::ValidationError("--assume/--hypothesis",
                                       "unknown key \"" + key + "\"");
    };
    for (const auto& key : assume) consume(key);
    if (hypothesis.empty())
        throw CLI::ValidationError("--hypothesis", "a hypothesis is required");
    consume(hypothesis);

    if (classical && quantum)
        throw CLI::ValidationError("--assume", "classical and quantum are contradictory");
    if (!classical && !quantum)
        throw CLI::ValidationError("--assume",
                                   "the hypothesized class needs classical or quantum");
    if (!markovian)
        throw CLI::ValidationError("--assume", "the hypothesized class must be markovian");
    if (dimension < 2)
        throw CLI::ValidationError("--assume", "a dimension dim=N with N >= 2 is required");

    return ics::Hypothesis{classical ? ics::ModelKind::classical : ics::ModelKind::quantum,
                           dimension, true};
}

int run_forward(const Options& opt, const std::vector<std::string>& argv_tail) {
    const ics::ModelSpec spec = ics::model_from_json(ics::load_json_file(opt.model_path));
    const ics::DeformedGenerator gen = ics::build_generator(spec);
    const ics::CharPolyPair pair = ics::affine_split(gen);
    const ics::CumulantVector cumulants = ics::cumulants_from_charpoly(pair, opt.orders);

    Json report = report_skeleton(argv_tail, {opt.model_path});
    report["time_base"] = 1.0;
    report["cumulants"] = cumulants.values;
    report["fano_factor"] = ics::fano_factor(pair);
    report["charpoly"] = ics::pair_to_json(pair);
    report["model_hash"] = ics::model_hash(spec);
    emit({opt.output_path}, report);

    std::printf("forward: %d cumulants of model %s\n", opt.orders, opt.model_path.c_str());
    for (int nu = 0; nu < cumulants.orders(); ++nu)
        std::printf("  c_%-2d = %.12g\n", nu + 1, cumulants.values[nu]);
    std::printf("  Fano = %.12g\n", ics::fano_factor(pair));
    return 0;
}

int run_recon_poly(const Options& opt, const std::vector<std::string>& argv_tail) {
    const ics::CumulantVector cumulants =
        ics::cumulants_from_json(ics::load_json_file(opt.cumulants_path));
    const ics::Reconstruction recon = ics::reconstruct_charpoly(cumulants, opt.dimension);

    Json report = report_skeleton(argv_tail, {opt.cumulants_path});
    report["reconstruction"] = ics::reconstruction_to_json(recon);
    report["tolerances"] = {{"rank_threshold", 1e-10}};
    emit({opt.output_path}, report);

    std::printf("recon-poly: degree %d, rank %d/%d, condition %.3g%s\n", opt.dimension,
                recon.system.rank, 2 * (opt.dimension - 1), recon.system.condition,
                recon.unique ? "" : " (not unique)");
    for (int mu = 0; mu <= opt.dimension; ++mu)
        std::printf("  a_%-2d = %.12g   a'_%-2d = %.12g\n", mu, recon.pair.a[mu], mu,
                    recon.pair.aprime[mu]);
    return 0;
}

int run_predict(const Options& opt, const std::vector<std::string>& argv_tail) {
    const ics::CumulantVector cumulants =
        ics::cumulants_from_json(ics::load_json_file(opt.cumulants_path));
    const double predicted = ics::predict_next_cumulant(cumulants, opt.dimension);
    const int np = 2 * (opt.dimension - 1);

    Json report = report_skeleton(argv_tail, {opt.cumulants_path});
    report["predicted_order"] = np + 1;
    report["predicted"] = predicted;
    emit({opt.output_path}, report);

    std::printf("predict: c_%d = %.12g under degree-%d dynamics\n", np + 1, predicted,
                opt.dimension);
    return 0;
}

int run_test(const Options& opt, const std::vector<std::string>& argv_tail) {
    const ics::CumulantVector cumulants =
        ics::cumulants_from_json(ics::load_json_file(opt.cumulants_path));
    const ics::Hypothesis hypothesis = resolve_hypothesis(opt.assume, opt.hypothesis);
    const ics::Verdict verdict = ics::run_test(cumulants, hypothesis, opt.threshold);

    Json report = report_skeleton(argv_tail, {opt.cumulants_path});
    report["hypothesis"] = {
        {"kind", hypothesis.kind == ics::ModelKind::classical ? "classical" : "quantum"},
        {"dimension", hypothesis.dimension},
        {"implied_degree", hypothesis.implied_M()},
        {"independent_cumulants", hypothesis.np()}};
    report["verdict"] = ics::verdict_to_json(verdict);
    emit({opt.output_path}, report);

    std::printf("test: decision=%s predicted=%.12g measured=%.12g threshold=%.3g\n",
                ics::to_string(verdict.decision), verdict.predicted, verdict.measured,
                verdict.threshold);
    return 0;
}

int run_recover(const Options& opt, const std::vector<std::string>& argv_tail) {
    const ics::CumulantVector cumulants =
        ics::cumulants_from_json(ics::load_json_file(opt.cumulants_path));
    ics::RecoveryConfig config;
    config.starts = opt.starts;
    config.seed = opt.seed;

    ics::RecoveryReport result;
    std::vector<std::string> inputs{opt.cumulants_path};
    if (opt.mode == "closed-form") {
        if (cumulants.orders() < 2)
            throw CLI::ValidationError("--mode", "closed-form needs two cumulants");
        result = ics::recover_two_state(cumulants.values[0], cumulants.values[1], config);
    } else {
        inputs.insert(inputs.begin(), opt.structure_path);
        const ics::ParameterStructure structure =
            ics::structure_from_json(ics::load_json_file(opt.structure_path));
        if (opt.mode == "cumulant-match") {
            result = ics::cumulant_match_recover(structure, cumulants, config);
        } else {
            const int degree = structure.implied_M();
            const ics::Reconstruction recon = ics::reconstruct_charpoly(cumulants, degree);
            if (!recon.unique)
                ics::fail(ics::ErrorCode::non_unique_reconstruction,
                          "coefficient matching needs a full-rank reconstruction; "
                          "use --mode cumulant-match");
            result = ics::recover_multistart(structure, recon.pair, config);
        }
    }

    Json report = report_skeleton(argv_tail, inputs);
    report["recovery"] = ics::report_to_json(result);
    emit({opt.output_path}, report);

    std::printf("recover: %zu verified solution(s), %d/%d starts converged\n",
                result.solutions.size(), result.n_converged, result.n_starts);
    for (const auto& solution : result.solutions) {
        std::printf("  [");
        for (std::size_t k = 0; k < solution.params.size(); ++k)
            std::printf("%s%.10g", k ? ", " : "", solution.params[k]);
        std::printf("]  residual %.3g\n", solution.coefficient_residual);
    }
    return 0;
}

int run_simulate(const Options& opt, const std::vector<std::string>& argv_tail) {
    const ics::ModelSpec spec = ics::model_from_json(ics::load_json_file(opt.model_path));
    const ics::EventTrace trace = ics::gillespie_trajectory(spec, opt.total_time, opt.seed,
                                                            opt.window_length, opt.burn_in);
    const ics::EstimatedCumulants estimates =
        ics::estimate_cumulants(trace, std::min(opt.orders, 4));

    Json report = report_skeleton(argv_tail, {opt.model_path});
    report["trace"] = ics::trace_to_json(trace);
    report["estimates"] = ics::cumulants_to_json(estimates.cumulants, 1.0);
    report["windows"] = estimates.window_count;
    emit({opt.output_path}, report);
    if (!opt.estimates_path.empty()) {
        Json estimate_file = ics::cumulants_to_json(estimates.cumulants, 1.0);
        estimate_file["window_length"] = estimates.window_length;
        estimate_file["windows"] = estimates.window_count;
        ics::write_json_file(opt.estimates_path, estimate_file);
    }

    std::printf("simulate: %lld monitored events over t=%g (%d windows of %g)\n", trace.events,
                trace.total_time, estimates.window_count, trace.window_length);
    for (int nu = 0; nu < estimates.cumulants.orders(); ++nu)
        std::printf("  c_%d = %.6g +- %.2g\n", nu + 1, estimates.cumulants.values[nu],
                    estimates.cumulants.stderrs[nu]);
    return 0;
}

int run_embed(const Options& opt, const std::vector<std::string>& argv_tail) {
    const ics::ModelSpec spec = ics::model_from_json(ics::load_json_file(opt.model_path));
    const ics::ModelSpec quantum = ics::embed_classical(spec);

    Json report = report_skeleton(argv_tail, {opt.model_path});
    report["model"] = ics::model_to_json(quantum);
    emit({opt.output_path}, report);

    std::printf("embed: classical N=%d -> quantum Liouville dimension %d\n", spec.dimension,
                spec.dimension * spec.dimension);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"inverse counting statistics toolkit"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    Options opt;
    std::vector<std::string> argv_tail;
    for (int i = 1; i < argc; ++i) argv_tail.emplace_back(argv[i]);

    const auto existing_file = CLI::ExistingFile;

    auto* forward = app.add_subcommand("forward", "cumulants of a model");
    forward->add_option("model", opt.model_path)->required()->check(existing_file);
    forward->add_option("--orders", opt.orders)->check(CLI::PositiveNumber);
    forward->add_option("--output", opt.output_path);

    auto* recon = app.add_subcommand("recon-poly", "characteristic polynomial from cumulants");
    recon->add_option("cumulants", opt.cumulants_path)->required()->check(existing_file);
    recon->add_option("--dimension", opt.dimension)->required()->check(CLI::Range(2, 64));
    recon->add_option("--output", opt.output_path);

    auto* predict = app.add_subcommand("predict", "next independent cumulant");
    predict->add_option("cumulants", opt.cumulants_path)->required()->check(existing_file);
    predict->add_option("--dimension", opt.dimension)->required()->check(CLI::Range(2, 64));
    predict->add_option("--output", opt.output_path);

    auto* test = app.add_subcommand("test", "hypothesis test on measured cumulants");
    test->add_option("cumulants", opt.cumulants_path)->required()->check(existing_file);
    test->add_option("--assume", opt.assume, "classical|quantum|markovian|dim=N (repeatable)");
    test->add_option("--hypothesis", opt.hypothesis, "classical|markovian|dim=N")->required();
    test->add_option("--threshold", opt.threshold,
                     "absolute threshold; omit to use 3 x stderr");
    test->add_option("--output", opt.output_path);

    auto* recover = app.add_subcommand("recover", "generator parameters from cumulants");
    recover->add_option("structure", opt.structure_path)->check(existing_file);
    recover->add_option("cumulants", opt.cumulants_path)->required()->check(existing_file);
    recover->add_option("--mode", opt.mode)
        ->check(CLI::IsMember({"coefficient-match", "cumulant-match", "closed-form"}));
    recover->add_option("--starts", opt.starts)->check(CLI::PositiveNumber);
    recover->add_option("--seed", opt.seed);
    recover->add_option("--output", opt.output_path);

    auto* simulate = app.add_subcommand("simulate", "synthetic detector data");
    simulate->add_option("model", opt.model_path)->required()->check(existing_file);
    simulate->add_option("--total-time", opt.total_time)->required()->check(CLI::PositiveNumber);
    simulate->add_option("--window-length", opt.window_length)->check(CLI::PositiveNumber);
    simulate->add_option("--burn-in", opt.burn_in);
    simulate->add_option("--seed", opt.seed);
    simulate->add_option("--orders", opt.orders)->check(CLI::Range(1, 4));
    simulate->add_option("--output", opt.output_path);
    simulate->add_option("--estimates", opt.estimates_path);

    auto* embed = app.add_subcommand("embed", "classical model as quantum");
    embed->add_option("model", opt.model_path)->required()->check(existing_file);
    embed->add_option("--output", opt.output_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : 2;
    }

    try {
        if (forward->parsed()) return run_forward(opt, argv_tail);
        if (recon->parsed()) return run_recon_poly(opt, argv_tail);
        if (predict->parsed()) return run_predict(opt, argv_tail);
        if (test->parsed()) return run_test(opt, argv_tail);
        if (recover->parsed()) {
            if (opt.mode != "closed-form" && opt.structure_path.empty()) {
                std::cerr << "recover: a structure file is required for --mode " << opt.mode
                          << "\n";
                return 2;
            }
            return run_recover(opt, argv_tail);
        }
        if (simulate->parsed()) return run_simulate(opt, argv_tail);
        if (embed->parsed()) return run_embed(opt, argv_tail);
    } catch (const CLI::ValidationError& error) {
        std::cerr << error.what() << "\n";
        return 2;
    } catch (const ics::Error& error) {
        switch (error.code()) {
            case ics::ErrorCode::usage_error:
            case ics::ErrorCode::file_not_found:
            case ics::ErrorCode::malformed_document:
                std::cerr << error.what() << "\n";
                return 2;
            default: {
                Json report = report_skeleton(argv_tail, {});
                report["error"] = {{"code", ics::to_string(error.code())},
                                   {"message", error.what()}};
                if (!opt.output_path.empty()) ics::write_json_file(opt.output_path, report);
                std::cerr << error.what() << "\n";
                return 1;
            }
        }
    }
    return 0;
}

#include "ics/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace ics {

namespace {

[[noreturn]] void malformed(const std::string& context) {
    fail(ErrorCode::malformed_document, context);
}

const Json& field(const Json& j, const char* name) {
    if (!j.contains(name)) malformed(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

int index_field(const Json& j, const char* name, int dimension) {
    const Json& v = field(j, name);
    if (!v.is_number_integer()) malformed(std::string("field \"") + name + "\" must be an integer");
    const int one_based = v.get<int>();
    if (one_based < 1 || one_based > dimension)
        malformed(std::string("field \"") + name + "\" = " + std::to_string(one_based) +
                  " outside 1.." + std::to_string(dimension));
    return one_based - 1;
}

} // namespace

Json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::file_not_found, path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& error) {
        fail(ErrorCode::malformed_document, path.string() + ": " + error.what());
    }
}

void write_json_file(const std::filesystem::path& path, const Json& value) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::file_not_found, "cannot write " + path.string());
    out << value.dump(2) << '\n';
}

ModelSpec model_from_json(const Json& j) {
    ModelSpec spec;
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "classical")
        spec.kind = ModelKind::classical;
    else if (kind == "quantum")
        spec.kind = ModelKind::quantum;
    else
        malformed("kind must be \"classical\" or \"quantum\"");

    spec.dimension = field(j, "dimension").get<int>();
    if (spec.dimension < 2) fail(ErrorCode::bad_dimension, "dimension must be at least 2");

    for (const Json& entry : field(j, "rates")) {
        const int from = index_field(entry, "from", spec.dimension);
        const int to = index_field(entry, "to", spec.dimension);
        const double value = field(entry, "value").get<double>();
        spec.rates[{to, from}] += value;
    }

    if (j.contains("hamiltonian") && !j.at("hamiltonian").is_null()) {
        const Json& h = j.at("hamiltonian");
        const Json& real = field(h, "real");
        if (static_cast<int>(real.size()) != spec.dimension) malformed("hamiltonian row count");
        spec.hamiltonian = Eigen::MatrixXcd::Zero(spec.dimension, spec.dimension);
        for (int i = 0; i < spec.dimension; ++i) {
            if (static_cast<int>(real.at(i).size()) != spec.dimension)
                malformed("hamiltonian column count");
            for (int k = 0; k < spec.dimension; ++k)
                spec.hamiltonian(i, k) = real.at(i).at(k).get<double>();
        }
        if (h.contains("imag") && !h.at("imag").is_null()) {
            const Json& imag = h.at("imag");
            if (static_cast<int>(imag.size()) != spec.dimension) malformed("hamiltonian row count");
            for (int i = 0; i < spec.dimension; ++i)
                for (int k = 0; k < spec.dimension; ++k)
                    spec.hamiltonian(i, k) +=
                        std::complex<double>(0.0, imag.at(i).at(k).get<double>());
        }
    }

    const Json& detector = field(j, "detector");
    spec.detector_from = index_field(detector, "from", spec.dimension);
    spec.detector_to = index_field(detector, "to", spec.dimension);
    spec.validate();
    return spec;
}

Json model_to_json(const ModelSpec& spec) {
    Json j;
    j["kind"] = spec.kind == ModelKind::classical ? "classical" : "quantum";
    j["dimension"] = spec.dimension;
    Json rates = Json::array();
    for (const auto& [key, value] : spec.rates)
        rates.push_back({{"from", key.second + 1}, {"to", key.first + 1}, {"value", value}});
    j["rates"] = rates;
    if (spec.has_hamiltonian()) {
        Json real = Json::array(), imag = Json::array();
        bool any_imag = false;
        for (int i = 0; i < spec.dimension; ++i) {
            Json real_row = Json::array(), imag_row = Json::array();
            for (int k = 0; k < spec.dimension; ++k) {
                real_row.push_back(spec.hamiltonian(i, k).real());
                imag_row.push_back(spec.hamiltonian(i, k).imag());
                any_imag |= spec.hamiltonian(i, k).imag() != 0.0;
            }
            real.push_back(real_row);
            imag.push_back(imag_row);
        }
        j["hamiltonian"] = {{"real", real}};
        if (any_imag) j["hamiltonian"]["imag"] = imag;
    }
    j["detector"] = {{"from", spec.detector_from + 1}, {"to", spec.detector_to + 1}};
    return j;
}

CumulantVector cumulants_from_json(const Json& j) {
    CumulantVector c;
    for (const Json& v : field(j, "cumulants")) c.values.push_back(v.get<double>());
    if (c.values.empty()) malformed("empty cumulant list");
    if (j.contains("stderr") && !j.at("stderr").is_null()) {
        for (const Json& v : j.at("stderr")) c.stderrs.push_back(v.get<double>());
        if (c.stderrs.size() != c.values.size())
            malformed("stderr length does not match cumulants");
        for (double s : c.stderrs)
            if (s < 0.0) malformed("negative stderr entry");
    }
    return c;
}

Json cumulants_to_json(const CumulantVector& cumulants, double time_base) {
    Json j;
    j["time_base"] = time_base;
    j["cumulants"] = cumulants.values;
    if (cumulants.has_stderr()) j["stderr"] = cumulants.stderrs;
    return j;
}

EventTrace trace_from_json(const Json& j) {
    EventTrace trace;
    trace.model_id = field(j, "model_id").get<std::string>();
    trace.total_time = field(j, "total_time").get<double>();
    trace.events = field(j, "events").get<long long>();
    trace.burn_in = field(j, "burn_in").get<double>();
    trace.window_length = field(j, "window_length").get<double>();
    trace.seed = field(j, "seed").get<std::uint64_t>();
    for (const Json& v : field(j, "window_counts"))
        trace.window_counts.push_back(v.get<long long>());
    return trace;
}

Json trace_to_json(const EventTrace& trace) {
    return Json{{"model_id", trace.model_id},
                {"total_time", trace.total_time},
                {"events", trace.events},
                {"burn_in", trace.burn_in},
                {"window_length", trace.window_length},
                {"seed", trace.seed},
                {"window_counts", trace.window_counts}};
}

ParameterStructure structure_from_json(const Json& j) {
    ParameterStructure structure;
    const Json& model = field(j, "model");
    // the template may omit unknown rates (including the monitored one), so
    // build it without full validation
    structure.base.kind =
        field(model, "kind").get<std::string>() == "quantum" ? ModelKind::quantum
                                                             : ModelKind::classical;
    structure.base.dimension = field(model, "dimension").get<int>();
    if (structure.base.dimension < 2) fail(ErrorCode::bad_dimension, "dimension must be at least 2");
    if (model.contains("rates"))
        for (const Json& entry : model.at("rates")) {
            const int from = index_field(entry, "from", structure.base.dimension);
            const int to = index_field(entry, "to", structure.base.dimension);
            structure.base.rates[{to, from}] += field(entry, "value").get<double>();
        }
    if (model.contains("hamiltonian") && !model.at("hamiltonian").is_null()) {
        Json copy = model;
        copy["detector"] = {{"from", 1}, {"to", 2}};
        // reuse the full parser for the hamiltonian block only
        ModelSpec parsed = model_from_json(copy);
        structure.base.hamiltonian = parsed.hamiltonian;
    }
    const Json& detector = field(model, "detector");
    structure.base.detector_from = index_field(detector, "from", structure.base.dimension);
    structure.base.detector_to = index_field(detector, "to", structure.base.dimension);

    for (const Json& entry : field(j, "unknowns")) {
        Unknown unknown;
        const std::string kind = field(entry, "kind").get<std::string>();
        if (kind == "rate") {
            unknown.kind = Unknown::Kind::rate;
            unknown.from = index_field(entry, "from", structure.base.dimension);
            unknown.to = index_field(entry, "to", structure.base.dimension);
        } else if (kind == "coupling") {
            if (structure.base.kind != ModelKind::quantum)
                malformed("coupling unknowns require a quantum model");
            unknown.kind = Unknown::Kind::coupling;
            unknown.to = index_field(entry, "i", structure.base.dimension);
            unknown.from = index_field(entry, "j", structure.base.dimension);
        } else {
            malformed("unknown kind must be \"rate\" or \"coupling\"");
        }
        if (unknown.to == unknown.from) malformed("unknown on a diagonal entry");
        structure.unknowns.push_back(unknown);
    }
    if (structure.unknowns.empty()) malformed("at least one unknown is required");
    return structure;
}

Json structure_to_json(const ParameterStructure& structure) {
    Json j;
    j["model"] = model_to_json(structure.base);
    Json unknowns = Json::array();
    for (const auto& u : structure.unknowns) {
        if (u.kind == Unknown::Kind::rate)
            unknowns.push_back({{"kind", "rate"}, {"from", u.from + 1}, {"to", u.to + 1}});
        else
            unknowns.push_back({{"kind", "coupling"}, {"i", u.to + 1}, {"j", u.from + 1}});
    }
    j["unknowns"] = unknowns;
    return j;
}

Json pair_to_json(const CharPolyPair& pair) {
    return Json{{"degree", pair.degree}, {"a", pair.a}, {"aprime", pair.aprime}};
}

CharPolyPair pair_from_json(const Json& j) {
    CharPolyPair pair;
    pair.degree = field(j, "degree").get<int>();
    pair.a = field(j, "a").get<std::vector<double>>();
    pair.aprime = field(j, "aprime").get<std::vector<double>>();
    if (static_cast<int>(pair.a.size()) != pair.degree + 1 ||
        static_cast<int>(pair.aprime.size()) != pair.degree + 1)
        malformed("coefficient vector length does not match degree");
    return pair;
}

Json reconstruction_to_json(const Reconstruction& recon) {
    Json j;
    j["pair"] = pair_to_json(recon.pair);
    j["unique"] = recon.unique;
    j["condition"] = recon.system.condition;
    j["rank"] = recon.system.rank;
    j["residual"] = recon.residual;
    j["unknown_layout"] = recon.system.unknown_layout;
    if (!recon.unique) {
        Json basis = Json::array();
        for (int col = 0; col < recon.null_space.cols(); ++col) {
            Json column = Json::array();
            for (int row = 0; row < recon.null_space.rows(); ++row)
                column.push_back(recon.null_space(row, col));
            basis.push_back(column);
        }
        j["null_space"] = basis;
    }
    return j;
}

Json verdict_to_json(const Verdict& verdict) {
    Json j;
    j["decision"] = to_string(verdict.decision);
    j["predicted"] = verdict.predicted;
    j["measured"] = verdict.measured;
    j["discrepancy"] = verdict.discrepancy;
    j["threshold"] = verdict.threshold;
    if (verdict.z_score >= 0.0) j["z_score"] = verdict.z_score;
    if (!verdict.reason.empty()) j["reason"] = verdict.reason;
    j["condition"] = verdict.condition;
    j["rank"] = verdict.rank;
    return j;
}

Json dimension_scan_to_json(const DimensionScan& scan) {
    Json j;
    j["lower_bound"] = scan.lower_bound;
    j["capped"] = scan.capped;
    j["max_testable"] = scan.max_testable;
    if (!scan.annotation.empty()) j["annotation"] = scan.annotation;
    Json trail = Json::array();
    for (const auto& [n, verdict] : scan.trail)
        trail.push_back({{"dimension", n}, {"verdict", verdict_to_json(verdict)}});
    j["trail"] = trail;
    return j;
}

Json report_to_json(const RecoveryReport& report) {
    const auto solution_json = [](const RecoverySolution& s) {
        Json j{{"params", s.params},
               {"coefficient_residual", s.coefficient_residual},
               {"verified", s.verified}};
        if (s.cumulant_residual > 0.0) j["cumulant_residual"] = s.cumulant_residual;
        if (!s.steady_occupations.empty()) j["steady_occupations"] = s.steady_occupations;
        return j;
    };
    Json j;
    j["mode"] = to_string(report.mode);
    j["seed"] = report.seed;
    j["n_starts"] = report.n_starts;
    j["n_converged"] = report.n_converged;
    j["n_equations"] = report.n_equations;
    j["jacobian_rank"] = report.jacobian_rank;
    if (!report.selected_equations.empty()) j["selected_equations"] = report.selected_equations;
    j["tolerances"] = {{"verify", report.verify_tol},
                       {"converge", report.converge_tol},
                       {"dedup_radius", report.dedup_radius}};
    Json solutions = Json::array();
    for (const auto& s : report.solutions) solutions.push_back(solution_json(s));
    j["solutions"] = solutions;
    Json unverified = Json::array();
    for (const auto& s : report.unverified) unverified.push_back(solution_json(s));
    j["unverified"] = unverified;
    return j;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (const char byte : bytes) {
        hash ^= static_cast<unsigned char>(byte);
        hash *= 0x100000001b3ull;
    }
    return hash;
}

std::string fnv1a64_hex(std::string_view bytes) {
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(bytes);
    return out.str();
}

std::string model_hash(const ModelSpec& spec) { return fnv1a64_hex(model_to_json(spec).dump()); }

std::string file_hash(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::file_not_found, path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return fnv1a64_hex(buffer.str());
}

} // namespace ics

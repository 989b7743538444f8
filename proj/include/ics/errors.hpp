#pragma once

#include <stdexcept>
#include <string>

namespace ics {

enum class ErrorCode {
    bad_dimension,
    missing_detector_rate,
    non_hermitian_hamiltonian,
    non_unique_steady_state,
    no_steady_state,
    complex_residue,
    overflow,
    not_rational,
    affinity_violated,
    degenerate_a1,
    branch_tracking_failed,
    non_simple_zero,
    insufficient_cumulants,
    singular_system,
    non_unique_reconstruction,
    no_real_solution,
    underdetermined,
    no_solution_found,
    absorbing_state,
    too_few_windows,
    usage_error,
    file_not_found,
    malformed_document,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::bad_dimension: return "BadDimension";
        case ErrorCode::missing_detector_rate: return "MissingDetectorRate";
        case ErrorCode::non_hermitian_hamiltonian: return "NonHermitianHamiltonian";
        case ErrorCode::non_unique_steady_state: return "NonUniqueSteadyState";
        case ErrorCode::no_steady_state: return "NoSteadyState";
        case ErrorCode::complex_residue: return "ComplexResidue";
        case ErrorCode::overflow: return "Overflow";
        case ErrorCode::not_rational: return "NotRational";
        case ErrorCode::affinity_violated: return "AffinityViolated";
        case ErrorCode::degenerate_a1: return "DegenerateA1";
        case ErrorCode::branch_tracking_failed: return "BranchTrackingFailed";
        case ErrorCode::non_simple_zero: return "NonSimpleZero";
        case ErrorCode::insufficient_cumulants: return "InsufficientCumulants";
        case ErrorCode::singular_system: return "SingularSystem";
        case ErrorCode::non_unique_reconstruction: return "NonUniqueReconstruction";
        case ErrorCode::no_real_solution: return "NoRealSolution";
        case ErrorCode::underdetermined: return "Underdetermined";
        case ErrorCode::no_solution_found: return "NoSolutionFound";
        case ErrorCode::absorbing_state: return "AbsorbingState";
        case ErrorCode::too_few_windows: return "TooFewWindows";
        case ErrorCode::usage_error: return "UsageError";
        case ErrorCode::file_not_found: return "FileNotFound";
        case ErrorCode::malformed_document: return "MalformedDocument";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace ics

#include "ics/poly_inverse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace ics {

namespace {

using LongMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using LongVector = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

// Numerical-rank threshold of the row-equilibrated system. The system is
// built and decomposed in extended precision: genuine degeneracies (embedded
// classical models, Poissonian data) produce singular values at the noise
// floor ~1e-16, while hard-but-regular systems (quantum M = 9) reach
// sigma_min / sigma_max ~ 1e-14 and must not be truncated.
constexpr long double kRankThreshold = 2e-15L;

// Rows l = 1 .. 2(M-1): column entries l! [xi^l] lambda^mu for a_mu and
// l! [xi^l] (e^xi - 1) lambda^mu for a'_mu; rhs_l = -l! [xi^l] lambda^M.
void build_raw(const std::vector<double>& cumulants, int degree, LongMatrix& matrix,
               LongVector& rhs, std::vector<std::string>& layout) {
    const int m = degree;
    const int rows = 2 * (m - 1);

    std::vector<long double> c(cumulants.begin(), cumulants.end());
    const Series<long double> lambda = series_from_cumulants(c, rows);
    const Series<long double> expm1 = exp_minus_one<long double>(rows);

    std::vector<Series<long double>> lam_pow;
    lam_pow.emplace_back(rows);
    lam_pow[0][0] = 1.0L;
    for (int mu = 1; mu <= m; ++mu) lam_pow.push_back(lam_pow.back() * lambda);

    std::vector<long double> factorial(rows + 1, 1.0L);
    for (int l = 1; l <= rows; ++l) factorial[l] = factorial[l - 1] * l;

    matrix.resize(rows, rows);
    rhs.resize(rows);
    layout.clear();
    for (int mu = 1; mu <= m - 1; ++mu) layout.push_back("a" + std::to_string(mu));
    for (int mu = 0; mu <= m - 2; ++mu) layout.push_back("a'" + std::to_string(mu));

    for (int l = 1; l <= rows; ++l) {
        for (int mu = 1; mu <= m - 1; ++mu)
            matrix(l - 1, mu - 1) = factorial[l] * lam_pow[mu][l];
        for (int mu = 0; mu <= m - 2; ++mu) {
            const Series<long double> ep = expm1 * lam_pow[mu];
            matrix(l - 1, (m - 1) + mu) = factorial[l] * ep[l];
        }
        rhs(l - 1) = -factorial[l] * lam_pow[m][l];
    }
}

// row scales: equilibration by the largest entry, sharpened by relative
// 1/stderr weights for measured data
LongVector row_scales(const LongMatrix& matrix, const LongVector& rhs,
                      const CumulantVector& cumulants) {
    const int rows = static_cast<int>(matrix.rows());
    LongVector scale(rows);
    for (int l = 0; l < rows; ++l) {
        long double s = std::max(matrix.row(l).cwiseAbs().maxCoeff(), std::abs(rhs(l)));
        scale(l) = s > 0.0L ? 1.0L / s : 1.0L;
    }
    if (cumulants.has_stderr() && static_cast<int>(cumulants.stderrs.size()) >= rows) {
        bool all_positive = true;
        long double log_mean = 0.0L;
        for (int l = 0; l < rows; ++l) {
            if (cumulants.stderrs[l] <= 0.0) {
                all_positive = false;
                break;
            }
            log_mean += std::log(static_cast<long double>(cumulants.stderrs[l]));
        }
        if (all_positive) {
            const long double reference = std::exp(log_mean / rows);
            for (int l = 0; l < rows; ++l)
                scale(l) *= reference / static_cast<long double>(cumulants.stderrs[l]);
        }
    }
    return scale;
}

std::string format_residual(double value) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << value;
    return out.str();
}

} // namespace

HSystem build_h_system(const CumulantVector& cumulants, int degree) {
    if (degree < 2) fail(ErrorCode::bad_dimension, "degree must be at least 2");
    const int rows = 2 * (degree - 1);
    if (cumulants.orders() < rows)
        fail(ErrorCode::insufficient_cumulants,
             std::to_string(rows) + " cumulants required for degree " + std::to_string(degree));

    LongMatrix matrix;
    LongVector rhs;
    HSystem system;
    build_raw(cumulants.values, degree, matrix, rhs, system.unknown_layout);
    system.degree = degree;
    system.matrix = matrix.cast<double>();
    system.rhs = rhs.cast<double>();

    LongMatrix equilibrated = matrix;
    const LongVector scale = row_scales(matrix, rhs, cumulants);
    for (int l = 0; l < rows; ++l) equilibrated.row(l) *= scale(l);
    Eigen::JacobiSVD<LongMatrix> svd(equilibrated);
    const auto& sv = svd.singularValues();
    const long double largest = sv(0);
    system.rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > kRankThreshold * largest) ++system.rank;
    const long double smallest = sv(sv.size() - 1);
    system.condition = smallest > 0.0L ? static_cast<double>(largest / smallest)
                                       : std::numeric_limits<double>::infinity();
    return system;
}

Reconstruction reconstruct_charpoly(const CumulantVector& cumulants, int degree) {
    HSystem system = build_h_system(cumulants, degree);
    const int rows = 2 * (degree - 1);

    LongMatrix matrix;
    LongVector rhs;
    std::vector<std::string> layout;
    build_raw(cumulants.values, degree, matrix, rhs, layout);
    const LongVector scale = row_scales(matrix, rhs, cumulants);
    for (int l = 0; l < rows; ++l) {
        matrix.row(l) *= scale(l);
        rhs(l) *= scale(l);
    }

    Eigen::JacobiSVD<LongMatrix> svd(matrix, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const long double largest = sv(0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > kRankThreshold * largest) ++rank;

    LongVector u;
    if (rank == rows) {
        // full rank: LU with iterative refinement reaches well beyond the
        // naive condition-number bound because the perturbations of matrix
        // and right-hand side are correlated through the cumulants
        Eigen::FullPivLU<LongMatrix> lu(matrix);
        u = lu.solve(rhs);
        for (int pass = 0; pass < 3; ++pass) u += lu.solve(rhs - matrix * u);
    } else {
        // minimum-norm least squares on the numerically nonzero directions
        const auto solve = [&](const LongVector& b) {
            LongVector y = svd.matrixU().transpose() * b;
            for (int i = 0; i < sv.size(); ++i) y(i) = i < rank ? y(i) / sv(i) : 0.0L;
            return LongVector(svd.matrixV() * y);
        };
        u = solve(rhs);
        for (int pass = 0; pass < 3; ++pass) u += solve(rhs - matrix * u);
    }

    const LongVector residual = rhs - matrix * u;
    long double magnitude = rhs.cwiseAbs().maxCoeff();
    magnitude = std::max(magnitude, (matrix * u).cwiseAbs().maxCoeff());
    const double rel_residual =
        magnitude > 0.0L ? static_cast<double>(residual.cwiseAbs().maxCoeff() / magnitude) : 0.0;

    Reconstruction out;
    out.system = system;
    out.residual = rel_residual;
    out.unique = rank == rows;
    if (!out.unique) {
        if (rel_residual > 1e-8)
            fail(ErrorCode::singular_system,
                 "rank " + std::to_string(rank) + " of " + std::to_string(rows) +
                     " and inconsistent right-hand side (relative residual " +
                     format_residual(rel_residual) + ")");
        out.null_space = svd.matrixV().rightCols(rows - rank).cast<double>();
    }

    out.pair.degree = degree;
    out.pair.a.assign(degree + 1, 0.0);
    out.pair.aprime.assign(degree + 1, 0.0);
    out.pair.a[degree] = 1.0;
    for (int mu = 1; mu <= degree - 1; ++mu) out.pair.a[mu] = static_cast<double>(u(mu - 1));
    for (int mu = 0; mu <= degree - 2; ++mu)
        out.pair.aprime[mu] = static_cast<double>(u((degree - 1) + mu));
    return out;
}

} // namespace ics

#pragma once

// Inverse direction: the equations h_l(a, a', c) = 0 are linear in the
// coefficients, so 2(M-1) measured cumulants determine the pair (a, a')
// through a linear solve. Unknown layout: (a_1 .. a_{M-1}, a'_0 .. a'_{M-2});
// a_0 = 0, a_M = 1 and a'_{M-1} = a'_M = 0 are imposed structurally.

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ics/charpoly.hpp"
#include "ics/cumulants.hpp"

namespace ics {

struct HSystem {
    Eigen::MatrixXd matrix; // raw rows h_1 .. h_{2(M-1)}
    Eigen::VectorXd rhs;
    int degree = 0;
    std::vector<std::string> unknown_layout;
    double condition = 0.0; // of the row-equilibrated system
    int rank = 0;
};

struct Reconstruction {
    CharPolyPair pair;
    HSystem system;
    bool unique = true;
    Eigen::MatrixXd null_space; // columns span the solution freedom when not unique
    double residual = 0.0;      // relative least-squares residual of the returned solution
};

HSystem build_h_system(const CumulantVector& cumulants, int degree);

// Full rank: the unique pair, refined to near machine precision. Rank
// deficient but consistent: minimum-norm pair with unique = false and the
// null-space basis attached. Rank deficient and inconsistent: SingularSystem.
Reconstruction reconstruct_charpoly(const CumulantVector& cumulants, int degree);

} // namespace ics

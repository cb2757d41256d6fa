#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "tropjac/numeric.hpp"

namespace tropjac {

using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

RatMatrix to_rat(const IntMatrix& m);
RatVector to_rat(const IntVector& v);

// Clears denominators and divides by the content; result is a primitive
// integer vector. Zero vectors map to zero.
IntVector primitive(const RatVector& v);
IntVector primitive(const IntVector& v);
// Same, then flips sign so the first nonzero entry is positive.
IntVector primitive_signed(const RatVector& v);

bool lex_less(const IntVector& a, const IntVector& b);
bool lex_less(const RatVector& a, const RatVector& b);

Rat det(const RatMatrix& m);
Int det(const IntMatrix& m);
Index rank(const RatMatrix& m);

// Solves m*x = rhs exactly; nullopt when inconsistent. For underdetermined
// systems returns one solution (free variables set to zero).
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& rhs);
std::optional<RatMatrix> solve(const RatMatrix& m, const RatMatrix& rhs);

// Inverse of a square nonsingular matrix; throws InternalError if singular.
RatMatrix inverse(const RatMatrix& m);

// Basis of the (right) nullspace, deterministic echelon-form construction.
std::vector<RatVector> nullspace(const RatMatrix& m);

struct PsdInfo {
    bool psd = false;
    Index rank = 0;
};

// Exact LDL^T with symmetric pivoting; decides positive semidefiniteness and
// reports the rank. Input must be symmetric.
PsdInfo psd_check(const RatMatrix& q);

inline bool is_symmetric(const RatMatrix& q) {
    if (q.rows() != q.cols()) return false;
    for (Index i = 0; i < q.rows(); ++i)
        for (Index j = i + 1; j < q.cols(); ++j)
            if (q(i, j) != q(j, i)) return false;
    return true;
}

} // namespace tropjac

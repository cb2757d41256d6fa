#pragma once

#include "tropjac/linalg.hpp"

namespace tropjac {

struct LpSolution {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    Rat objective;
    RatVector x;
};

// maximize c.x subject to a x <= b, x free. Exact two-phase simplex with
// Bland's rule; deterministic.
LpSolution lp_maximize(const RatVector& c, const RatMatrix& a, const RatVector& b);

} // namespace tropjac

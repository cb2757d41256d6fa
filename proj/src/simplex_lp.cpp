#include "tropjac/simplex_lp.hpp"

#include <vector>

namespace tropjac {

namespace {

// Dense tableau for min problems in standard form. Row m is the objective
// (reduced costs); column n is the right-hand side.
struct Tableau {
    RatMatrix t;
    std::vector<int> basis;
    Index m, n;

    void pivot(Index row, Index col) {
        Rat inv = Rat(1) / t(row, col);
        for (Index j = 0; j <= n; ++j) t(row, j) *= inv;
        for (Index r = 0; r <= m; ++r) {
            if (r == row || t(r, col).is_zero()) continue;
            Rat f = t(r, col);
            for (Index j = 0; j <= n; ++j) t(r, j) -= f * t(row, j);
        }
        basis[row] = static_cast<int>(col);
    }

    // Bland's rule; returns false when unbounded.
    bool solve_min() {
        for (;;) {
            Index enter = -1;
            for (Index j = 0; j < n; ++j)
                if (t(m, j).sign() < 0) { enter = j; break; }
            if (enter < 0) return true;
            Index leave = -1;
            for (Index r = 0; r < m; ++r) {
                if (t(r, enter).sign() <= 0) continue;
                if (leave < 0) { leave = r; continue; }
                Rat cur = t(r, n) / t(r, enter);
                Rat bst = t(leave, n) / t(leave, enter);
                if (cur < bst || (cur == bst && basis[r] < basis[leave])) leave = r;
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

} // namespace

LpSolution lp_maximize(const RatVector& c, const RatMatrix& a, const RatVector& b) {
    Index m = a.rows();
    Index d = a.cols();
    require(c.size() == d && b.size() == m, "InternalError", "lp shape mismatch");

    // Standard form: x = u - v, slack s: [A -A I](u;v;s) = b with b >= 0
    // after row sign fixes; artificials give the phase-1 basis.
    Index nv = 2 * d + m;       // structural variables
    Index n = nv + m;           // plus artificials
    Tableau tab;
    tab.m = m;
    tab.n = n;
    tab.t = RatMatrix::Constant(m + 1, n + 1, Rat(0));
    tab.basis.assign(m, 0);
    for (Index r = 0; r < m; ++r) {
        int sign = b(r).sign() < 0 ? -1 : 1;
        for (Index j = 0; j < d; ++j) {
            tab.t(r, j) = Rat(sign) * a(r, j);
            tab.t(r, d + j) = Rat(-sign) * a(r, j);
        }
        tab.t(r, 2 * d + r) = Rat(sign);
        tab.t(r, nv + r) = Rat(1);
        tab.t(r, n) = Rat(sign) * b(r);
        tab.basis[r] = static_cast<int>(nv + r);
    }
    // Phase 1 objective: minimize the sum of artificials.
    for (Index r = 0; r < m; ++r)
        for (Index j = 0; j <= n; ++j)
            if (j < nv || j == n) tab.t(m, j) -= tab.t(r, j);

    LpSolution sol;
    if (!tab.solve_min()) fail("InternalError", "phase-1 LP unbounded");
    if (tab.t(m, n).sign() != 0) {
        sol.status = LpSolution::Status::Infeasible;
        return sol;
    }
    // Drive artificials out of the basis where possible.
    for (Index r = 0; r < m; ++r) {
        if (tab.basis[r] < nv) continue;
        Index col = -1;
        for (Index j = 0; j < nv; ++j)
            if (!tab.t(r, j).is_zero()) { col = j; break; }
        if (col >= 0) tab.pivot(r, col);
    }

    // Phase 2: minimize -c.x, artificial columns priced to stay at zero.
    RatVector cost = RatVector::Constant(n, Rat(0));
    for (Index j = 0; j < d; ++j) {
        cost(j) = -c(j);
        cost(d + j) = c(j);
    }
    for (Index j = nv; j < n; ++j) cost(j) = Rat(1);
    for (Index j = 0; j < n; ++j) tab.t(m, j) = cost(j);
    tab.t(m, n) = Rat(0);
    for (Index r = 0; r < m; ++r) {
        Rat cb = cost(tab.basis[r]);
        if (cb.is_zero()) continue;
        for (Index j = 0; j <= n; ++j) tab.t(m, j) -= cb * tab.t(r, j);
    }
    if (!tab.solve_min()) {
        sol.status = LpSolution::Status::Unbounded;
        return sol;
    }

    sol.status = LpSolution::Status::Optimal;
    RatVector uv = RatVector::Constant(nv, Rat(0));
    for (Index r = 0; r < m; ++r)
        if (tab.basis[r] < nv) uv(tab.basis[r]) = tab.t(r, n);
    sol.x = RatVector(d);
    for (Index j = 0; j < d; ++j) sol.x(j) = uv(j) - uv(d + j);
    sol.objective = Rat(0);
    for (Index j = 0; j < d; ++j) sol.objective += c(j) * sol.x(j);
    return sol;
}

} // namespace tropjac

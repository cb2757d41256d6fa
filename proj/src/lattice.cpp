#include "tropjac/lattice.hpp"

namespace tropjac {

namespace {

IntMatrix identity(Index n) {
    IntMatrix id = IntMatrix::Constant(n, n, Int(0));
    for (Index i = 0; i < n; ++i) id(i, i) = Int(1);
    return id;
}

} // namespace

SmithForm smith_form(const IntMatrix& a) {
    SmithForm f;
    f.d = a;
    f.s = identity(a.rows());
    f.t = identity(a.cols());
    IntMatrix& d = f.d;
    Index n = std::min(d.rows(), d.cols());

    for (Index k = 0; k < n; ++k) {
        for (;;) {
            // Find the entry of smallest nonzero absolute value in the block.
            Index pr = -1, pc = -1;
            for (Index i = k; i < d.rows(); ++i)
                for (Index j = k; j < d.cols(); ++j) {
                    if (d(i, j).is_zero()) continue;
                    if (pr < 0 || abs(d(i, j)) < abs(d(pr, pc))) { pr = i; pc = j; }
                }
            if (pr < 0) break; // block is zero
            if (pr != k) { d.row(pr).swap(d.row(k)); f.s.col(pr).swap(f.s.col(k)); }
            if (pc != k) { d.col(pc).swap(d.col(k)); f.t.row(pc).swap(f.t.row(k)); }

            bool reduced = true;
            for (Index i = k + 1; i < d.rows(); ++i) {
                if (d(i, k).is_zero()) continue;
                Int q = fdiv(d(i, k), d(k, k));
                if (!q.is_zero()) {
                    for (Index j = k; j < d.cols(); ++j) d(i, j) -= q * d(k, j);
                    for (Index j = 0; j < d.rows(); ++j) f.s(j, k) += q * f.s(j, i);
                }
                if (!d(i, k).is_zero()) reduced = false;
            }
            for (Index j = k + 1; j < d.cols(); ++j) {
                if (d(k, j).is_zero()) continue;
                Int q = fdiv(d(k, j), d(k, k));
                if (!q.is_zero()) {
                    for (Index i = k; i < d.rows(); ++i) d(i, j) -= q * d(i, k);
                    for (Index i = 0; i < d.cols(); ++i) f.t(k, i) += q * f.t(j, i);
                }
                if (!d(k, j).is_zero()) reduced = false;
            }
            if (!reduced) continue;
            bool row_clear = true, col_clear = true;
            for (Index i = k + 1; i < d.rows(); ++i)
                if (!d(i, k).is_zero()) row_clear = false;
            for (Index j = k + 1; j < d.cols(); ++j)
                if (!d(k, j).is_zero()) col_clear = false;
            if (!row_clear || !col_clear) continue;

            // Enforce divisibility d(k,k) | d(i,j) for the rest of the block.
            bool divisible = true;
            for (Index i = k + 1; i < d.rows() && divisible; ++i)
                for (Index j = k + 1; j < d.cols() && divisible; ++j)
                    if (!(d(i, j) % d(k, k)).is_zero()) {
                        // Add row i to row k and restart the elimination.
                        for (Index c = k; c < d.cols(); ++c) d(k, c) += d(i, c);
                        for (Index r = 0; r < d.rows(); ++r) f.s(r, i) -= f.s(r, k);
                        divisible = false;
                    }
            if (divisible) break;
        }
        if (d(k, k).sign() < 0) {
            for (Index j = k; j < d.cols(); ++j) d(k, j) = -d(k, j);
            for (Index i = 0; i < d.rows(); ++i) f.s(i, k) = -f.s(i, k);
        }
    }
    return f;
}

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
    SmithForm f = smith_form(a);
    RatMatrix tinv = inverse(to_rat(f.t));
    Index n = a.cols();
    Index r = std::min(a.rows(), a.cols());
    std::vector<IntVector> basis;
    for (Index j = 0; j < n; ++j) {
        bool zero_diag = j >= r || f.d(j, j).is_zero();
        if (!zero_diag) continue;
        IntVector v(n);
        for (Index i = 0; i < n; ++i) {
            Rat e = tinv(i, j);
            require(e.is_integer(), "InternalError", "unimodular inverse not integral");
            v(i) = e.num();
        }
        basis.push_back(v);
    }
    return basis;
}

std::vector<IntVector> integer_kernel(const RatMatrix& a) {
    // Clear denominators row by row; kernel unchanged.
    IntMatrix b(a.rows(), a.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        Int mult(1);
        for (Index j = 0; j < a.cols(); ++j) mult = lcm(mult, a(i, j).den());
        for (Index j = 0; j < a.cols(); ++j)
            b(i, j) = divexact(a(i, j).num() * mult, a(i, j).den());
    }
    return integer_kernel(b);
}

IntMatrix hermite_unimodular_complete(const std::vector<IntVector>& kernel_basis, Index n) {
    Index k = static_cast<Index>(kernel_basis.size());
    if (k == 0) {
        IntMatrix id = IntMatrix::Constant(n, n, Int(0));
        for (Index i = 0; i < n; ++i) id(i, i) = Int(1);
        return id;
    }
    IntMatrix m(n, k);
    for (Index j = 0; j < k; ++j) {
        require(kernel_basis[j].size() == n, "InternalError", "kernel vector of wrong dimension");
        m.col(j) = kernel_basis[j];
    }
    require(rank(to_rat(m)) == k, "InternalError", "kernel basis not independent");

    SmithForm f = smith_form(m);
    for (Index j = 0; j < k; ++j)
        require(f.d(j, j) == Int(1), "NotSaturated", "input lattice is not saturated in Z^n");

    // m = s d t with d = [I_k; 0], so the first k columns of s span the
    // lattice. Rotate them to the back; a cyclic shift keeps |det| = 1.
    IntMatrix u(n, n);
    for (Index j = 0; j < n; ++j) u.col((j + n - k) % n) = f.s.col(j);
    require(is_unimodular(u), "InternalError", "completion not unimodular");
    return u;
}

bool is_unimodular(const IntMatrix& u) {
    if (u.rows() != u.cols()) return false;
    Int d = det(u);
    return d == Int(1) || d == Int(-1);
}

} // namespace tropjac

#include "tropjac/linalg.hpp"

namespace tropjac {

RatMatrix to_rat(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

RatVector to_rat(const IntVector& v) {
    RatVector r(v.size());
    for (Index i = 0; i < v.size(); ++i) r(i) = Rat(v(i));
    return r;
}

IntVector primitive(const RatVector& v) {
    Int mult(1);
    for (Index i = 0; i < v.size(); ++i) mult = lcm(mult, v(i).den());
    IntVector w(v.size());
    Int content(0);
    for (Index i = 0; i < v.size(); ++i) {
        w(i) = divexact(v(i).num() * mult, v(i).den());
        content = gcd(content, w(i));
    }
    if (content.is_zero()) return w;
    for (Index i = 0; i < v.size(); ++i) w(i) = divexact(w(i), content);
    return w;
}

IntVector primitive(const IntVector& v) {
    Int content(0);
    for (Index i = 0; i < v.size(); ++i) content = gcd(content, v(i));
    if (content.is_zero() || content == Int(1)) return v;
    IntVector w(v.size());
    for (Index i = 0; i < v.size(); ++i) w(i) = divexact(v(i), content);
    return w;
}

IntVector primitive_signed(const RatVector& v) {
    IntVector w = primitive(v);
    for (Index i = 0; i < w.size(); ++i) {
        if (w(i).is_zero()) continue;
        if (w(i).sign() < 0)
            for (Index j = 0; j < w.size(); ++j) w(j) = -w(j);
        break;
    }
    return w;
}

bool lex_less(const IntVector& a, const IntVector& b) {
    for (Index i = 0; i < a.size() && i < b.size(); ++i) {
        if (a(i) != b(i)) return a(i) < b(i);
    }
    return a.size() < b.size();
}

bool lex_less(const RatVector& a, const RatVector& b) {
    for (Index i = 0; i < a.size() && i < b.size(); ++i) {
        if (a(i) != b(i)) return a(i) < b(i);
    }
    return a.size() < b.size();
}

Rat det(const RatMatrix& m) {
    require(m.rows() == m.cols(), "InternalError", "det of non-square matrix");
    RatMatrix a = m;
    Index n = a.rows();
    Rat d(1);
    for (Index col = 0; col < n; ++col) {
        Index piv = -1;
        for (Index r = col; r < n; ++r)
            if (!a(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) return Rat(0);
        if (piv != col) { a.row(piv).swap(a.row(col)); d = -d; }
        d *= a(col, col);
        Rat inv = Rat(1) / a(col, col);
        for (Index r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            Rat f = a(r, col) * inv;
            for (Index c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return d;
}

Int det(const IntMatrix& m) {
    Rat d = det(to_rat(m));
    require(d.is_integer(), "InternalError", "integer determinant not integral");
    return d.num();
}

namespace {

// Row echelon form; returns pivot columns. Operates in place.
std::vector<Index> echelonize(RatMatrix& a) {
    std::vector<Index> pivots;
    Index row = 0;
    for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        Index piv = -1;
        for (Index r = row; r < a.rows(); ++r)
            if (!a(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row) a.row(piv).swap(a.row(row));
        Rat inv = Rat(1) / a(row, col);
        for (Index c = col; c < a.cols(); ++c) a(row, c) *= inv;
        for (Index r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            Rat f = a(r, col);
            for (Index c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

Index rank(const RatMatrix& m) {
    RatMatrix a = m;
    return static_cast<Index>(echelonize(a).size());
}

std::optional<RatMatrix> solve(const RatMatrix& m, const RatMatrix& rhs) {
    require(m.rows() == rhs.rows(), "InternalError", "solve: shape mismatch");
    RatMatrix a(m.rows(), m.cols() + rhs.cols());
    a.leftCols(m.cols()) = m;
    a.rightCols(rhs.cols()) = rhs;
    // Restrict pivoting to the coefficient block.
    std::vector<Index> pivots;
    Index row = 0;
    for (Index col = 0; col < m.cols() && row < a.rows(); ++col) {
        Index piv = -1;
        for (Index r = row; r < a.rows(); ++r)
            if (!a(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row) a.row(piv).swap(a.row(row));
        Rat inv = Rat(1) / a(row, col);
        for (Index c = col; c < a.cols(); ++c) a(row, c) *= inv;
        for (Index r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            Rat f = a(r, col);
            for (Index c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    // Inconsistent if a zero row has nonzero rhs.
    for (Index r = row; r < a.rows(); ++r)
        for (Index c = m.cols(); c < a.cols(); ++c)
            if (!a(r, c).is_zero()) return std::nullopt;
    RatMatrix x = RatMatrix::Constant(m.cols(), rhs.cols(), Rat(0));
    for (size_t k = 0; k < pivots.size(); ++k)
        for (Index c = 0; c < rhs.cols(); ++c) x(pivots[k], c) = a(static_cast<Index>(k), m.cols() + c);
    return x;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& rhs) {
    auto x = solve(m, RatMatrix(rhs));
    if (!x) return std::nullopt;
    return RatVector(x->col(0));
}

RatMatrix inverse(const RatMatrix& m) {
    require(m.rows() == m.cols(), "InternalError", "inverse of non-square matrix");
    RatMatrix id = RatMatrix::Constant(m.rows(), m.cols(), Rat(0));
    for (Index i = 0; i < m.rows(); ++i) id(i, i) = Rat(1);
    auto x = solve(m, id);
    require(x.has_value() && rank(m) == m.rows(), "InternalError", "matrix not invertible");
    return *x;
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
    RatMatrix a = m;
    std::vector<Index> pivots = echelonize(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (Index p : pivots) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (Index free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVector v = RatVector::Constant(m.cols(), Rat(0));
        v(free) = Rat(1);
        for (size_t k = 0; k < pivots.size(); ++k) v(pivots[k]) = -a(static_cast<Index>(k), free);
        basis.push_back(v);
    }
    return basis;
}

PsdInfo psd_check(const RatMatrix& q) {
    require(is_symmetric(q), "InternalError", "psd_check: matrix not symmetric");
    RatMatrix a = q;
    Index n = a.rows();
    std::vector<bool> done(n, false);
    PsdInfo info;
    for (;;) {
        // Pick any remaining positive diagonal pivot.
        Index piv = -1;
        for (Index i = 0; i < n; ++i) {
            if (done[i]) continue;
            if (a(i, i).sign() < 0) return info; // negative diagonal: not PSD
            if (a(i, i).sign() > 0 && piv < 0) piv = i;
        }
        if (piv < 0) {
            // All remaining diagonal entries are zero; PSD requires the whole
            // remaining block to vanish.
            for (Index i = 0; i < n; ++i) {
                if (done[i]) continue;
                for (Index j = 0; j < n; ++j)
                    if (!done[j] && !a(i, j).is_zero()) return info;
            }
            info.psd = true;
            return info;
        }
        Rat d = a(piv, piv);
        for (Index i = 0; i < n; ++i) {
            if (done[i] || i == piv) continue;
            Rat f = a(i, piv) / d;
            if (f.is_zero()) continue;
            for (Index j = 0; j < n; ++j) {
                if (done[j] || j == piv) continue;
                a(i, j) -= f * a(piv, j);
            }
        }
        done[piv] = true;
        ++info.rank;
    }
}

} // namespace tropjac

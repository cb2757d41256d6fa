#pragma once

#include <functional>
#include <vector>

#include "tropjac/linalg.hpp"

namespace tropjac {

// A lower facet of the convex hull of lifted points: the supporting affine
// functional x -> a.x + b on the projection space, plus all incident points.
struct LowerFacet {
    RatVector a;
    Rat b;
    std::vector<int> points; // indices into the input, sorted
};

// Lower hull of points in R^{d+1} (last coordinate is the lift value), d <= 4.
// Exact; ties yield non-simplicial facets with their full tight point sets.
// Throws DegenerateLift when all points lie on a common vertical hyperplane.
std::vector<LowerFacet> lower_hull(const std::vector<RatVector>& lifted_points);

namespace detail {

// Sparse polynomial in a symbolic infinitesimal, used to perturb lift values
// (point i gets eps^{i+1}). Comparison is lexicographic from eps^0 up, which
// matches the eps -> 0+ limit.
class EpsPoly {
public:
    EpsPoly() = default;
    explicit EpsPoly(const Rat& c) { if (!c.is_zero()) terms_.push_back({0, c}); }

    static EpsPoly eps(int power) {
        EpsPoly p;
        p.terms_.push_back({power, Rat(1)});
        return p;
    }

    void add(int power, const Rat& c);
    EpsPoly& operator+=(const EpsPoly& o);
    EpsPoly& operator-=(const EpsPoly& o);
    EpsPoly operator-(const EpsPoly& o) const;
    EpsPoly operator*(const Rat& c) const;
    EpsPoly operator/(const Rat& c) const;

    int sign() const { return terms_.empty() ? 0 : terms_.front().second.sign(); }
    bool is_zero() const { return terms_.empty(); }

private:
    std::vector<std::pair<int, Rat>> terms_;
};

struct HullCell {
    RatVector a;
    Rat b;
    std::vector<int> tight;                  // all tight point indices, sorted
    std::vector<std::vector<int>> simplices; // perturbed simplices discovered
};

struct HullOptions {
    // Expand only simplices accepted by this predicate (arguments: sorted
    // vertex indices). Null accepts everything.
    std::function<bool(const std::vector<int>&)> simplex_filter;
    // Treat a boundary ridge on an accepted simplex as failure (used by the
    // periodic Delaunay construction, where every ridge must have a neighbor).
    bool forbid_boundary = false;
};

struct HullResult {
    std::vector<HullCell> cells;
    bool hit_boundary = false;
};

// Lower hull via symbolic perturbation: BFS over the perturbed simplicial
// facets, then merge simplices sharing a true supporting functional.
HullResult lower_hull_cells(const std::vector<RatVector>& projections,
                            const std::vector<Rat>& heights, const HullOptions& opts);

} // namespace detail

} // namespace tropjac

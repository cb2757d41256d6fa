#pragma once

#include <vector>

#include "tropjac/linalg.hpp"

namespace tropjac {

// Rational polyhedral cone, kept consistent between a generator description
// (primitive integer extreme rays) and an inequality description (covectors
// a with a.x >= 0, plus equations cutting out the linear span).
class PolyhedralCone {
public:
    static PolyhedralCone from_generators(Index ambient_dim, std::vector<IntVector> generators);
    static PolyhedralCone from_inequalities(Index ambient_dim, std::vector<IntVector> inequalities,
                                            std::vector<IntVector> equations = {});

    Index ambient_dim() const { return ambient_; }
    // Extreme rays, primitive, lex-sorted; computed on demand.
    const std::vector<IntVector>& generators() const;
    const std::vector<IntVector>& inequalities() const;
    const std::vector<IntVector>& equations() const;
    Index dim() const;
    bool contains(const RatVector& x) const;
    // Strict inequalities (relative interior within the span).
    bool contains_in_relative_interior(const RatVector& x) const;

private:
    PolyhedralCone() = default;
    void need_generators() const;
    void need_inequalities() const;

    Index ambient_ = 0;
    mutable bool has_generators_ = false;
    mutable bool has_inequalities_ = false;
    mutable std::vector<IntVector> generators_;
    mutable std::vector<IntVector> inequalities_;
    mutable std::vector<IntVector> equations_;
};

// Extreme rays of the pointed cone {x : a.x >= 0 for all rows}, primitive and
// lex-sorted. Throws ConeNotPointed when the constraints admit a line.
std::vector<IntVector> extreme_rays(Index ambient_dim, const std::vector<IntVector>& inequalities,
                                    const std::vector<IntVector>& equations = {});

struct RaysWithLineality {
    std::vector<IntVector> rays;
    std::vector<IntVector> lineality;
};

// As above but splits off the lineality space instead of failing.
RaysWithLineality extreme_rays_with_lineality(Index ambient_dim,
                                              const std::vector<IntVector>& inequalities,
                                              const std::vector<IntVector>& equations = {});

bool cones_equal(const PolyhedralCone& a, const PolyhedralCone& b);

} // namespace tropjac

#pragma once

#include <vector>

#include "tropjac/linalg.hpp"

namespace tropjac {

struct SmithForm {
    IntMatrix s;  // unimodular, rows x rows
    IntMatrix d;  // diagonal, same shape as input, a = s * d * t
    IntMatrix t;  // unimodular, cols x cols
};

// Smith normal form with both transforms; diagonal entries nonnegative and
// each dividing the next.
SmithForm smith_form(const IntMatrix& a);

// Basis of {x in Z^n : a x = 0}, saturated by construction; deterministic.
std::vector<IntVector> integer_kernel(const IntMatrix& a);
std::vector<IntVector> integer_kernel(const RatMatrix& a);

// Completes a basis of a saturated sublattice of Z^n to a basis of Z^n.
// Returns a unimodular U whose last k columns span the same lattice as the
// input vectors. Throws NotSaturated if the input lattice is not saturated,
// InternalError if the vectors are dependent.
IntMatrix hermite_unimodular_complete(const std::vector<IntVector>& kernel_basis, Index n);

bool is_unimodular(const IntMatrix& u);

} // namespace tropjac

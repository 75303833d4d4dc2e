#ifndef ALV_EXACT_ALGORITHMS_HPP
#define ALV_EXACT_ALGORITHMS_HPP

#include "alv/exact/int_matrix.hpp"

namespace alv::exact {

// Exact determinant via fraction-free (Bareiss) elimination. Sign is kept;
// callers that want a discriminant take the absolute value themselves.
Int det(const IntMatrix& m);

// u * m * v = d with u, v unimodular and d diagonal, d(0,0) | d(1,1) | ...
// All diagonal entries are non-negative.
struct SmithResult {
    IntMatrix u, d, v;
};
SmithResult smith_normal_form(const IntMatrix& m);

// Diagonal of the Smith form, including trailing zeros for rank-deficient m.
std::vector<Int> invariant_factors(const IntMatrix& m);

enum class SolveKind { unique, inconsistent, underdetermined };

struct SolveResult {
    SolveKind kind = SolveKind::inconsistent;
    RatVector solution;  // populated only for SolveKind::unique
};

// Exact solution of m x = rhs over the rationals. An inconsistent system is
// reported distinctly from a consistent one with free variables.
SolveResult solve_exact(const IntMatrix& m, const RatVector& rhs);
SolveResult solve_exact(const RatMatrix& m, const RatVector& rhs);

RatMatrix inverse(const RatMatrix& m);  // throws std::domain_error if singular

// Row-style Hermite reduction: returns a Z-basis (as matrix rows) of the row
// space of `rows`. Rows of the result are pivoted, zero rows dropped.
IntMatrix row_basis(const IntMatrix& rows);

// Primitive basis (rows) of {x : m x = 0} over Z. Returns 0-row sentinel via
// empty optional-like flag: if the kernel is trivial the result has no rows,
// encoded as rows()==0 is invalid, so a bool accompanies it.
struct KernelResult {
    bool trivial = true;
    IntMatrix basis;  // meaningful only when !trivial
};
KernelResult integer_kernel(const IntMatrix& m);

// Inertia of a symmetric matrix, certified by symmetric Gaussian reduction
// over Q (pivot sign counting); no floating point anywhere.
struct Signature {
    int positive = 0, negative = 0, zero = 0;
};
Signature signature(const IntMatrix& symmetric);
Signature signature(const RatMatrix& symmetric);

}  // namespace alv::exact

#endif

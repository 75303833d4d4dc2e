#ifndef ALV_LEFSCHETZ_LEFSCHETZ_HPP
#define ALV_LEFSCHETZ_LEFSCHETZ_HPP

#include "alv/exact/quad_field.hpp"

#include <set>
#include <vector>

namespace alv::lefschetz {

using exact::Int;
using exact::QuadExtValue;
using exact::Rational;

// { I >= 2 : phi(I) <= rank_transcendental } -- the orders a purely
// non-symplectic automorphism can have when the transcendental lattice
// has the given rank.
std::set<long> candidate_indices(long rank_transcendental);

long euler_phi(long n);

// Fixed-point data of an order-6 action: c fixed curves, and the counts
// p, q steering the order-2 and order-3 parts of the fixed loci.
struct Order6Profile {
    long c = 0, p = 0, q = 0;

    bool operator==(const Order6Profile&) const = default;
    bool operator<(const Order6Profile& o) const {
        return std::tie(c, p, q) < std::tie(o.c, o.p, o.q);
    }
};

// Multiplicities of the eigenvalues 1, -1, zeta3 (conj pair), zeta6 (conj
// pair, multiplicity 1 + delta) on degree-2 rational cohomology.
struct CohomologyMultiplicities {
    Int alpha, beta, gamma, delta;

    bool operator==(const CohomologyMultiplicities&) const = default;
};

// The three local holomorphic fixed-point contributions, evaluated in
// Q(sqrt(-3)) from their defining expressions.
QuadExtValue local_term_p();   //  1/((1-zeta6^2)(1-zeta6^5)) = (3-sqrt(-3))/6
QuadExtValue local_term_q();   //  1/((1-zeta6^3)(1-zeta6^4)) = (3-sqrt(-3))/12
QuadExtValue local_term_c();   //  rational-curve term             -(3-sqrt(-3))/2
QuadExtValue lefschetz_number_order6();  // 1 + zeta6^-1 = (3-sqrt(-3))/2

// n_P * a(P) + n_Q * a(Q) + n_C * b(C), exactly.
QuadExtValue holomorphic_lefschetz_order6(long n_p, long n_q, long n_c);

// Exact linear solve of the four trace equations; the closed form
// (5c+2p+q+6, -c+2p-q+4, -c-p+q+3, -c-p-q+2) is the test oracle, not the
// implementation.
CohomologyMultiplicities solve_multiplicities(const Order6Profile& profile);

// All profiles with beta, gamma, delta >= 0; equals { c+p+q <= 2 }.
std::vector<Order6Profile> feasible_order6_profiles();

// M - N = 3 for a non-symplectic order-3 action whose fixed locus is
// curves and isolated points.
bool check_order3_relation(int n_curves, int n_isolated);

}  // namespace alv::lefschetz

#endif

#include "alv/lefschetz/lefschetz.hpp"

#include "alv/exact/algorithms.hpp"

#include <stdexcept>

namespace alv::lefschetz {

long euler_phi(long n) {
    if (n <= 0) throw std::invalid_argument("euler_phi: positive argument required");
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::set<long> candidate_indices(long rank_transcendental) {
    if (rank_transcendental < 1)
        throw std::invalid_argument("candidate_indices: rank must be >= 1");
    std::set<long> out;
    // phi(I) >= sqrt(I/2), so phi(I) <= r forces I <= 2 r^2 + 2
    for (long i = 2; i <= 2 * rank_transcendental * rank_transcendental + 2; ++i)
        if (euler_phi(i) <= rank_transcendental) out.insert(i);
    return out;
}

namespace {
QuadExtValue one_minus_zeta6_pow(int k) {
    return QuadExtValue(Rational(1)) - QuadExtValue::zeta6_pow(k);
}
}  // namespace

QuadExtValue local_term_p() {
    return (one_minus_zeta6_pow(2) * one_minus_zeta6_pow(5)).inverse();
}

QuadExtValue local_term_q() {
    return (one_minus_zeta6_pow(3) * one_minus_zeta6_pow(4)).inverse();
}

QuadExtValue local_term_c() {
    // (1 - g(C))/(1 - zeta6) - zeta6/(1 - zeta6)^2 * C^2 for a rational
    // (-2)-curve: genus 0, C^2 = -2
    QuadExtValue d = one_minus_zeta6_pow(1);
    return d.inverse() + Rational(2) * (QuadExtValue::zeta6() / (d * d));
}

QuadExtValue lefschetz_number_order6() {
    return QuadExtValue(Rational(1)) + QuadExtValue::zeta6_pow(-1);
}

QuadExtValue holomorphic_lefschetz_order6(long n_p, long n_q, long n_c) {
    if (n_p < 0 || n_q < 0 || n_c < 0)
        throw std::invalid_argument("holomorphic_lefschetz_order6: counts must be >= 0");
    return Rational(n_p) * local_term_p() + Rational(n_q) * local_term_q() +
           Rational(n_c) * local_term_c();
}

CohomologyMultiplicities solve_multiplicities(const Order6Profile& pr) {
    using exact::IntMatrix;
    // trace equations on H^2: dimensions, then the topological fixed-point
    // counts of the action, its square and its cube
    IntMatrix m{{1, 1, 2, 2}, {1, -1, -1, 1}, {1, 1, -1, -1}, {1, -1, 2, -2}};
    exact::RatVector rhs{Rational(20), Rational(6 * pr.c + 1), Rational(6 * pr.c + 6 * pr.p + 5),
                         Rational(6 * pr.c + 6 * pr.q + 4)};
    auto sol = exact::solve_exact(m, rhs);
    if (sol.kind != exact::SolveKind::unique)
        throw std::logic_error("solve_multiplicities: trace system not uniquely solvable");
    for (const auto& v : sol.solution)
        if (!exact::is_integer(v))
            throw std::logic_error("solve_multiplicities: non-integral multiplicity");
    return {sol.solution[0].get_num(), sol.solution[1].get_num(), sol.solution[2].get_num(),
            sol.solution[3].get_num()};
}

std::vector<Order6Profile> feasible_order6_profiles() {
    std::vector<Order6Profile> out;
    // delta = 2-c-p-q >= 0 caps each count at 2; scanning a larger box
    // keeps the filter honest
    for (long c = 0; c <= 4; ++c)
        for (long p = 0; p <= 4; ++p)
            for (long q = 0; q <= 4; ++q) {
                Order6Profile pr{c, p, q};
                auto m = solve_multiplicities(pr);
                if (m.beta >= 0 && m.gamma >= 0 && m.delta >= 0) out.push_back(pr);
            }
    return out;
}

bool check_order3_relation(int n_curves, int n_isolated) {
    return n_isolated - n_curves == 3;
}

}  // namespace alv::lefschetz

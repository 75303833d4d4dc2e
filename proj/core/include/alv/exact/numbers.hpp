#ifndef ALV_EXACT_NUMBERS_HPP
#define ALV_EXACT_NUMBERS_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace alv::exact {

// Every number in this library is exact. Int is an arbitrary-precision
// integer, Rational a reduced fraction with positive denominator (the
// canonical form gmp maintains across arithmetic).
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den) {
    return make_rational(Int(num), Int(den));
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// q reduced into [0, m) by subtracting integer multiples of m.
inline Rational reduce_mod(const Rational& q, const Int& m) {
    if (m <= 0) throw std::invalid_argument("reduce_mod: modulus must be positive");
    Int fl;
    // floor(q / m)
    Rational scaled = q / Rational(m);
    mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    return q - Rational(fl * m);
}

inline Rational mod1(const Rational& q) { return reduce_mod(q, 1); }
inline Rational mod2(const Rational& q) { return reduce_mod(q, 2); }

inline std::string to_string(const Int& n) { return n.get_str(); }

// "n" when integral, "n/d" otherwise. parse_rational inverts this.
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    return make_rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

using RatVector = std::vector<Rational>;

inline std::string to_string(const RatVector& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + "]";
}

inline Int lcm_den(const RatVector& v) {
    Int l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    return l;
}

}  // namespace alv::exact

#endif

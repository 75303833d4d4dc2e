#ifndef ALV_EXACT_QUAD_FIELD_HPP
#define ALV_EXACT_QUAD_FIELD_HPP

#include "alv/exact/numbers.hpp"

namespace alv::exact {

// An element a + b*sqrt(-3) of the imaginary quadratic field Q(sqrt(-3)).
// Equality is component-wise; (sqrt(-3))^2 = -3.
class QuadExtValue {
public:
    QuadExtValue() : a_(0), b_(0) {}
    QuadExtValue(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
    explicit QuadExtValue(const Rational& a) : a_(a), b_(0) {}

    static QuadExtValue sqrt_minus_three() { return {Rational(0), Rational(1)}; }
    // zeta_6 = exp(pi*i/3) = (1 + sqrt(-3))/2, a primitive 6th root of unity.
    static QuadExtValue zeta6() { return {make_rational(1, 2), make_rational(1, 2)}; }
    static QuadExtValue zeta6_pow(int k);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadExtValue conj() const { return {a_, -b_}; }
    // a^2 + 3 b^2, the field norm; zero only for the zero element.
    Rational norm() const { return a_ * a_ + 3 * b_ * b_; }

    QuadExtValue operator-() const { return {-a_, -b_}; }
    QuadExtValue operator+(const QuadExtValue& o) const { return {a_ + o.a_, b_ + o.b_}; }
    QuadExtValue operator-(const QuadExtValue& o) const { return {a_ - o.a_, b_ - o.b_}; }
    QuadExtValue operator*(const QuadExtValue& o) const {
        return {a_ * o.a_ - 3 * b_ * o.b_, a_ * o.b_ + b_ * o.a_};
    }
    QuadExtValue inverse() const {
        if (is_zero()) throw std::domain_error("QuadExtValue: division by zero");
        Rational n = norm();
        return {a_ / n, -b_ / n};
    }
    QuadExtValue operator/(const QuadExtValue& o) const { return *this * o.inverse(); }

    QuadExtValue& operator+=(const QuadExtValue& o) { return *this = *this + o; }
    QuadExtValue& operator*=(const QuadExtValue& o) { return *this = *this * o; }

    bool operator==(const QuadExtValue& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QuadExtValue& o) const { return !(*this == o); }

    std::string str() const;

private:
    Rational a_, b_;
};

inline QuadExtValue operator*(const Rational& c, const QuadExtValue& v) {
    return {c * v.a(), c * v.b()};
}

inline QuadExtValue operator*(long c, const QuadExtValue& v) { return Rational(c) * v; }

}  // namespace alv::exact

#endif

#include "alv/exact/quad_field.hpp"

namespace alv::exact {

QuadExtValue QuadExtValue::zeta6_pow(int k) {
    k %= 6;
    if (k < 0) k += 6;
    QuadExtValue p(Rational(1));
    const QuadExtValue z = zeta6();
    for (int i = 0; i < k; ++i) p = p * z;
    return p;
}

std::string QuadExtValue::str() const {
    if (b_ == 0) return to_string(a_);
    std::string s;
    if (a_ != 0) s = to_string(a_) + (b_ > 0 ? " + " : " - ");
    else if (b_ < 0) s = "-";
    Rational babs = b_ > 0 ? b_ : Rational(-b_);
    if (babs != 1) s += to_string(babs) + "*";
    s += "sqrt(-3)";
    return s;
}

}  // namespace alv::exact

#include "alv/lattice/discriminant_group.hpp"

#include <stdexcept>

namespace alv::lattice {

DiscriminantGroup::DiscriminantGroup(std::vector<Int> invariant_factors,
                                     std::vector<RatVector> generators, IntMatrix gram)
    : factors_(std::move(invariant_factors)), gens_(std::move(generators)),
      gram_(std::move(gram)) {
    if (factors_.size() != gens_.size())
        throw std::invalid_argument("DiscriminantGroup: factor/generator mismatch");
}

Int DiscriminantGroup::order() const {
    Int o = 1;
    for (const auto& f : factors_) o *= f;
    return o;
}

Int DiscriminantGroup::exponent() const {
    Int e = 1;
    for (const auto& f : factors_) mpz_lcm(e.get_mpz_t(), e.get_mpz_t(), f.get_mpz_t());
    return e;
}

DiscriminantGroup::Element DiscriminantGroup::normalize(Element e) const {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        mpz_fdiv_r(e[i].get_mpz_t(), e[i].get_mpz_t(), factors_[i].get_mpz_t());
    }
    return e;
}

DiscriminantGroup::Element DiscriminantGroup::add(const Element& x, const Element& y) const {
    Element z(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) z[i] = x[i] + y[i];
    return normalize(std::move(z));
}

DiscriminantGroup::Element DiscriminantGroup::negate(const Element& x) const {
    Element z(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) z[i] = -x[i];
    return normalize(std::move(z));
}

DiscriminantGroup::Element DiscriminantGroup::scale(const Int& k, const Element& x) const {
    Element z(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) z[i] = k * x[i];
    return normalize(std::move(z));
}

bool DiscriminantGroup::is_zero(const Element& x) const {
    for (const auto& c : x)
        if (c != 0) return false;
    return true;
}

Int DiscriminantGroup::element_order(const Element& x) const {
    Int o = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        Int g;
        mpz_gcd(g.get_mpz_t(), x[i].get_mpz_t(), factors_[i].get_mpz_t());
        Int oi = factors_[i] / g;
        mpz_lcm(o.get_mpz_t(), o.get_mpz_t(), oi.get_mpz_t());
    }
    return o;
}

std::vector<DiscriminantGroup::Element> DiscriminantGroup::all_elements() const {
    std::vector<Element> out{zero()};
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        std::vector<Element> next;
        for (const auto& e : out)
            for (Int c = 0; c < factors_[i]; ++c) {
                Element f = e;
                f[i] = c;
                next.push_back(std::move(f));
            }
        out = std::move(next);
    }
    return out;
}

RatVector DiscriminantGroup::coords(const Element& x) const {
    const std::size_t n = gram_.rows();
    RatVector v(n, Rational(0));
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) v[j] += Rational(x[i]) * gens_[i][j];
    }
    for (auto& c : v) c = exact::mod1(c);
    return v;
}

Rational DiscriminantGroup::q(const Element& x) const {
    RatVector v = coords(x);
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) s += v[i] * Rational(gram_(i, j)) * v[j];
    }
    return exact::mod2(s);
}

Rational DiscriminantGroup::b(const Element& x, const Element& y) const {
    RatVector v = coords(x), w = coords(y);
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (w[j] != 0) s += v[i] * Rational(gram_(i, j)) * w[j];
    }
    return exact::mod1(s);
}

DiscriminantGroup discriminant_group(const Lattice& l) {
    if (exact::det(l.gram()) == 0)
        throw std::domain_error("discriminant_group: degenerate Gram matrix");
    auto snf = exact::smith_normal_form(l.gram());
    std::vector<Int> factors;
    std::vector<RatVector> gens;
    const int n = l.rank();
    // d_i * g_i = column i of V, and G g_i = U^-1 e_i is integral, so the
    // classes of g_i generate L*/L with orders d_i exactly.
    for (int i = 0; i < n; ++i) {
        const Int& d = snf.d(i, i);
        if (d <= 1) continue;
        RatVector g(n);
        for (int j = 0; j < n; ++j) g[j] = Rational(snf.v(j, i)) / Rational(d);
        factors.push_back(d);
        gens.push_back(std::move(g));
    }
    return DiscriminantGroup(std::move(factors), std::move(gens), l.gram());
}

}  // namespace alv::lattice

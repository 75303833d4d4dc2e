#ifndef ALV_LATTICE_DISCRIMINANT_GROUP_HPP
#define ALV_LATTICE_DISCRIMINANT_GROUP_HPP

#include "alv/lattice/lattice.hpp"

namespace alv::lattice {

// The finite group L*/L of a nondegenerate even lattice, with its
// quadratic form q: A -> Q/2Z and bilinear form b: A x A -> Q/Z.
// Elements are residue tuples against the invariant-factor generators.
class DiscriminantGroup {
public:
    using Element = std::vector<Int>;  // residues mod invariant_factors

    DiscriminantGroup(std::vector<Int> invariant_factors, std::vector<RatVector> generators,
                      IntMatrix gram);

    const std::vector<Int>& invariant_factors() const { return factors_; }
    const std::vector<RatVector>& generators() const { return gens_; }
    Int order() const;
    Int exponent() const;

    Element zero() const { return Element(factors_.size(), Int(0)); }
    Element normalize(Element e) const;
    Element add(const Element& x, const Element& y) const;
    Element negate(const Element& x) const;
    Element scale(const Int& k, const Element& x) const;
    bool is_zero(const Element& x) const;
    Int element_order(const Element& x) const;
    std::vector<Element> all_elements() const;  // lexicographic over residues

    // coordinates over the lattice basis, each reduced into [0,1)
    RatVector coords(const Element& x) const;

    Rational q(const Element& x) const;                      // in [0,2)
    Rational b(const Element& x, const Element& y) const;    // in [0,1)

private:
    std::vector<Int> factors_;
    std::vector<RatVector> gens_;
    IntMatrix gram_;
};

DiscriminantGroup discriminant_group(const Lattice& l);

}  // namespace alv::lattice

#endif

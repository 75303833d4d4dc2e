#ifndef ALV_LATTICE_LATTICE_HPP
#define ALV_LATTICE_LATTICE_HPP

#include "alv/dynkin/curve_graph.hpp"
#include "alv/exact/algorithms.hpp"

namespace alv::lattice {

using exact::Int;
using exact::IntMatrix;
using exact::RatVector;
using exact::Rational;

// An even integral lattice with a labeled basis, presented by its Gram
// matrix. Everything this library builds is even.
class Lattice {
public:
    Lattice(std::vector<std::string> labels, IntMatrix gram);

    int rank() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const IntMatrix& gram() const { return gram_; }

    // <v, w> for rational coordinate vectors over the basis
    Rational pairing(const RatVector& v, const RatVector& w) const;
    Rational norm(const RatVector& v) const { return pairing(v, v); }

    // incidence graph read off the Gram matrix (entry 1 = edge)
    dynkin::CurveGraph incidence_graph() const;

private:
    std::vector<std::string> labels_;
    IntMatrix gram_;
};

// Negative-definite root lattice of the given ADE type, diagonal -2,
// adjacency 1, in the same numbering as ade_curve_graph.
Lattice ade_lattice(const dynkin::DynkinType& type);

Lattice direct_sum(const Lattice& a, const Lattice& b);

// |det gram|; throws std::domain_error on a degenerate Gram matrix.
Int discriminant(const Lattice& l);

// Gram matrix of the orthogonal complement of the span of `sub` (basis
// indices) inside `ambient`, over a primitive Z-basis of the complement.
Lattice orthogonal_complement(const Lattice& ambient, const std::vector<int>& sub);

}  // namespace alv::lattice

#endif

#ifndef ALV_LATTICE_OVERLATTICE_HPP
#define ALV_LATTICE_OVERLATTICE_HPP

#include "alv/lattice/discriminant_group.hpp"

namespace alv::lattice {

// A rational vector over a lattice basis that pairs integrally with every
// basis vector, i.e. lies in the dual lattice.
struct GlueVector {
    RatVector coords;

    bool operator==(const GlueVector&) const = default;
    bool operator<(const GlueVector& o) const { return coords < o.coords; }
};

struct Overlattice {
    Int index = 1;                      // [M : L]
    std::vector<GlueVector> generators; // glue group generators, curve coords
    // every element of the glue subgroup, as canonical [0,1) coordinate
    // vectors; sorted, zero omitted
    std::vector<GlueVector> subgroup_elements;
};

// All even overlattices of an even nondegenerate lattice: one per isotropic
// subgroup of the discriminant group (q = 0 in Q/2Z on elements, b = 0 in
// Q/Z on pairs). Includes the trivial overlattice. Deterministic order:
// by index, then lexicographically on the element lists.
std::vector<Overlattice> enumerate_overlattices(const Lattice& l);

enum class NikulinVerdict { pass, fail, inapplicable };

struct NikulinResult {
    NikulinVerdict verdict;
    std::string detail;
};

// Parity test for a set of curves meant to form a 2-divisible sum of
// disjoint (-2)-curves on a K3: applicable only when the named curves are
// pairwise disjoint in the graph, and then passes iff the count is 0, 8
// or 16.
NikulinResult nikulin_filter(const std::vector<int>& curves, const dynkin::CurveGraph& g);

}  // namespace alv::lattice

#endif

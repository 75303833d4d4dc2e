#ifndef ALV_LATTICE_PICARD_HPP
#define ALV_LATTICE_PICARD_HPP

#include "alv/lattice/overlattice.hpp"

namespace alv::lattice {

using exact::RatMatrix;

// One way of embedding a rank-19 curve lattice into a rank-20 Picard
// lattice of the target discriminant: the primitive closure, the square
// and index of the orthogonal generator H, and the glue class of the
// basis extension vector. All coordinates are over (curve basis, H).
struct PicardExtension {
    Int closure_index = 1;                   // [closure : delta]
    std::vector<GlueVector> closure_glue;    // generators, curve coordinates
    std::vector<GlueVector> closure_elements;  // full nonzero glue subgroup
    RatMatrix closure_basis;                 // rows: Z-basis of the closure, curve coords
    IntMatrix closure_gram;
    Int h_square = 0;
    Int n = 1;                               // [pic : closure + Z.H]
    GlueVector extension_vector;             // length rank+1, last coord on H
    RatMatrix pic_basis;                     // rows over (curves, H)
    IntMatrix pic_gram;                      // (rank+1) x (rank+1), |det| = target
};

struct SearchEvent {
    std::string check;
    std::string detail;
    bool passed = false;
};

struct ClosureBranch {
    Int closure_index = 1;
    std::vector<GlueVector> closure_elements;
    bool nikulin_ok = true;
    std::vector<SearchEvent> events;
    int extensions_found = 0;
};

struct SearchTrace {
    std::vector<ClosureBranch> branches;
};

// Every (closure, H^2, n, glue) with H^2 even, 0 < H^2 <= hsq_bound,
// n^2 * target_disc = disc(closure) * H^2, and an explicit isotropic glue
// class realizing an even overlattice of closure + <H^2> of index n and
// discriminant target_disc, with both the closure and Z.H primitive in the
// result. Closure candidates whose 2-torsion glue is a disjoint curve sum
// of length not in {0, 8, 16} are discarded (the parity test); an empty
// result is the exclusion verdict for the type.
std::vector<PicardExtension> picard_extension_search(const Lattice& delta,
                                                     const Int& target_disc,
                                                     const Int& hsq_bound,
                                                     SearchTrace* trace = nullptr);

}  // namespace alv::lattice

#endif

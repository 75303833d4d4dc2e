#ifndef ALV_DYNKIN_LABELING_HPP
#define ALV_DYNKIN_LABELING_HPP

#include "alv/dynkin/curve_graph.hpp"

namespace alv::dynkin {

enum class Mark { fixed, stable };  // f / s in the catalogs

struct FSLabeling {
    std::vector<Mark> mark;  // indexed by vertex

    bool fixed(int v) const { return mark[v] == Mark::fixed; }
};

struct FixedProfile {
    int n_curves = 0;    // N: pointwise-fixed curves
    int n_isolated = 0;  // M: isolated fixed points (order 3 only)

    bool operator==(const FixedProfile&) const = default;
};

// All fixed/stable labelings compatible with an automorphism of the given
// order acting on the configuration with every curve stable.
//
// Local rules, order 2 (an involution fixes exactly two points of a stable
// rational curve):
//   - of two adjacent stable curves exactly one is pointwise fixed;
//   - every stable-not-fixed curve has exactly two fixed neighbours.
// Order 3:
//   - among three consecutive stable curves exactly one is fixed;
//   - every stable-not-fixed curve meets a fixed curve.
// A component shape admitting no labeling yields no output; that is the
// restriction mechanism, not an error.
std::vector<FSLabeling> admissible_labelings(const CurveGraph& g, int order);

// N = number of f-vertices. For order 3, M counts isolated fixed points by
// the local rule: each s-curve carries exactly two fixed points; a fixed
// point on an f-neighbour is not isolated; the intersection point of two
// s-curves is isolated and counted once; any remaining fixed point of an
// s-curve is isolated.
FixedProfile count_profile(const CurveGraph& g, const FSLabeling& lab, int order);

bool no_adjacent_fixed(const CurveGraph& g, const FSLabeling& lab);

// "s-f-s" style rendering in vertex order (chain order for A components).
std::string pattern_string(const FSLabeling& lab);

}  // namespace alv::dynkin

#endif

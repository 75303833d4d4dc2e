#ifndef ALV_DYNKIN_SHIODA_INOSE_HPP
#define ALV_DYNKIN_SHIODA_INOSE_HPP

#include "alv/dynkin/labeling.hpp"

namespace alv::dynkin {

// One of the two 24-curve configurations carried by the singular K3
// surfaces of discriminant 3 and 4, together with the induced action of
// the distinguished automorphism: every curve is stable, and the labeling
// marks the pointwise-fixed ones.
struct MarkedConfiguration {
    CurveGraph graph;
    FSLabeling labeling;
    int automorphism_order = 0;
    // For the discriminant-4 surface the source text pins down only part
    // of the incidence; edges listed here are exactly the certified ones
    // and `incidence_complete` is false in that case.
    bool incidence_complete = true;
    std::vector<std::string> notes;
};

// which = 3: discriminant 3, order-3 action, fixed curves F1..F3, G1..G3.
// which = 2: discriminant 4, involution, fixed curves F*, G*, H11, H13,
//            H31, H33.
MarkedConfiguration shioda_inose_configuration(int which);

// The nineteen curve names of the contracted divisor for case i = 1..7,
// in chain order as configured on the surface (cases 1..6 live on the
// discriminant-3 surface, case 7 on the discriminant-4 surface).
std::vector<std::vector<std::string>> configuration_divisor_components(int i);

}  // namespace alv::dynkin

#endif

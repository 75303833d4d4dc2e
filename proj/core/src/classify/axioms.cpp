#include "alv/classify/case_report.hpp"

namespace alv::classify {

const Axiom& axiom_order3_fixed_locus() {
    static const Axiom a{
        "order-3-fixed-locus",
        "a non-symplectic order-3 automorphism of a K3 surface whose fixed locus consists of "
        "rational curves and isolated points and contains at least six rational curves fixes "
        "exactly six rational curves and nine isolated points, and the pair is the "
        "discriminant-3 surface with its distinguished action",
        "Theorem 1.3"};
    return a;
}

const Axiom& axiom_order2_fixed_locus() {
    static const Axiom a{
        "order-2-fixed-locus",
        "an anti-symplectic involution of a K3 surface whose fixed locus consists of rational "
        "curves and contains at least ten of them fixes exactly ten rational curves, and the "
        "pair is the discriminant-4 surface with its distinguished involution",
        "Theorem 1.6"};
    return a;
}

const Axiom& axiom_even_eight() {
    static const Axiom a{
        "even-eight",
        "a sum of pairwise disjoint smooth rational curves on a K3 surface that is divisible "
        "by 2 in the Picard lattice has 0, 8 or 16 summands",
        "Lemma 3.2 [N]"};
    return a;
}

const Axiom& axiom_a19_d19_uniqueness() {
    static const Axiom a{
        "nineteen-curve-uniqueness",
        "the extremal surfaces of the two single-component 19-curve types are unique up to "
        "isomorphism, and the 19-chain type has canonical index 2",
        "[OZ1, Main Theorems 1 and 2]"};
    return a;
}

void cite_axiom(CaseReport& r, const Axiom& a) {
    r.step("axiom " + a.name, a.statement + " (" + a.citation + ")", true);
}

}  // namespace alv::classify

#ifndef ALV_CLASSIFY_CLASSIFY_HPP
#define ALV_CLASSIFY_CLASSIFY_HPP

#include "alv/classify/case_report.hpp"
#include "alv/dynkin/shioda_inose.hpp"
#include "alv/lattice/picard.hpp"
#include "alv/lefschetz/lefschetz.hpp"

#include <optional>

namespace alv::classify {

using dynkin::DynkinType;
using exact::Int;

// One surviving type of the classification, with the lattice data that
// pins it down: the square of the orthogonal generator, the primitive
// closure glue and the basis extension vector.
struct ExtremalType {
    DynkinType type;
    int canonical_index = 3;
    Int h_square = 0;
    lattice::PicardExtension extension;
};

// Global knobs for the lattice searches (the CLI wires these to flags and
// the environment).
struct Options {
    Int hsq_bound = 200;
};

CaseReport candidate_index_case();                 // the order restriction
CaseReport lefschetz_case();                       // order-6 fixed-point arithmetic
CaseReport labeling_catalog_case();                // fixed/stable catalogs vs closed form

CaseReport classify_index2();
CaseReport classify_index3();
CaseReport exclude_index4();
CaseReport exclude_index6();

CaseReport exclude_by_lattice(const DynkinType& type, const Options& opt = {});

std::pair<std::optional<ExtremalType>, CaseReport> uniqueness_data(const DynkinType& type,
                                                                   const Options& opt = {});

CaseReport verify_construction(int i);

struct MainTheoremResult {
    std::vector<ExtremalType> survivors;
    std::vector<CaseReport> cases;
    bool confirmed = false;
};
MainTheoremResult main_theorem(const Options& opt = {});

// The ten rank-19 candidate types of the index-3 analysis, in report order.
std::vector<DynkinType> index3_candidates();
// The seven types of the final statement.
std::vector<std::pair<DynkinType, int>> expected_survivors();

}  // namespace alv::classify

#endif

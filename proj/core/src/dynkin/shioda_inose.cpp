#include "alv/dynkin/shioda_inose.hpp"

#include <stdexcept>

namespace alv::dynkin {

namespace {

std::string eij(int i, int j, bool primed) {
    return "E" + std::to_string(i) + std::to_string(j) + (primed ? "'" : "");
}

MarkedConfiguration build_s3() {
    MarkedConfiguration cfg;
    CurveGraph& g = cfg.graph;
    for (int i = 1; i <= 3; ++i) g.add_vertex("F" + std::to_string(i));
    for (int j = 1; j <= 3; ++j) g.add_vertex("G" + std::to_string(j));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            g.add_vertex(eij(i, j, false));
            g.add_vertex(eij(i, j, true));
        }
    // Eij meets Eij'; Gj meets every Eij; Fi meets every Eij'.
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            g.add_edge(eij(i, j, false), eij(i, j, true));
            g.add_edge("G" + std::to_string(j), eij(i, j, false));
            g.add_edge("F" + std::to_string(i), eij(i, j, true));
        }
    cfg.labeling.mark.assign(g.size(), Mark::stable);
    for (int i = 1; i <= 3; ++i) {
        cfg.labeling.mark[g.index("F" + std::to_string(i))] = Mark::fixed;
        cfg.labeling.mark[g.index("G" + std::to_string(i))] = Mark::fixed;
    }
    cfg.automorphism_order = 3;
    cfg.incidence_complete = true;
    return cfg;
}

MarkedConfiguration build_s2() {
    MarkedConfiguration cfg;
    CurveGraph& g = cfg.graph;
    for (int i = 1; i <= 3; ++i) g.add_vertex("F" + std::to_string(i));
    for (int j = 1; j <= 3; ++j) g.add_vertex("G" + std::to_string(j));
    // four A3 strings Eij' - Hij - Eij at the order-4 quotient points
    for (int i : {1, 3})
        for (int j : {1, 3}) {
            g.add_vertex(eij(i, j, true));
            g.add_vertex("H" + std::to_string(i) + std::to_string(j));
            g.add_vertex(eij(i, j, false));
        }
    // six disjoint A1 curves at the order-2 quotient points
    for (const char* name : {"E12", "E22", "E32", "E21'", "E22'", "E23'"}) g.add_vertex(name);

    for (int i : {1, 3})
        for (int j : {1, 3}) {
            std::string h = "H" + std::to_string(i) + std::to_string(j);
            g.add_edge(eij(i, j, true), h);
            g.add_edge(h, eij(i, j, false));
        }
    // remaining incidence certified by the chain of the type-A19 divisor
    const char* chain[] = {"H31", "E31'", "F3",  "E33'", "H33", "E33", "G3",
                           "E13", "H13",  "E13'", "F1",  "E11'", "H11", "E11",
                           "G1",  "E21'", "F2",  "E22'", "G2"};
    for (std::size_t k = 0; k + 1 < std::size(chain); ++k) g.add_edge(chain[k], chain[k + 1]);

    cfg.labeling.mark.assign(g.size(), Mark::stable);
    for (int v = 0; v < g.size(); ++v) {
        char c = g.name(v)[0];
        if (c == 'F' || c == 'G' || c == 'H') cfg.labeling.mark[v] = Mark::fixed;
    }
    cfg.automorphism_order = 2;
    cfg.incidence_complete = false;
    cfg.notes.push_back(
        "incidence of E12, E22, E32, E23' with the F and G curves is unverified from "
        "the source text; only edges forced by the A3 strings and the type-A19 chain are stored");
    return cfg;
}

}  // namespace

MarkedConfiguration shioda_inose_configuration(int which) {
    if (which == 3) return build_s3();
    if (which == 2) return build_s2();
    throw std::invalid_argument("shioda_inose_configuration: which must be 3 or 2");
}

std::vector<std::vector<std::string>> configuration_divisor_components(int i) {
    switch (i) {
        case 1:  // D19
            return {{"E11", "E21", "G1", "E31", "E31'", "F3", "E33'", "E33", "G3", "E23",
                     "E23'", "F2", "E22'", "E22", "G2", "E12", "E12'", "F1", "E13'"}};
        case 2:  // D16 + A3
            return {{"E11'", "E12'", "F1", "E13'", "E13", "G3", "E23", "E23'", "F2", "E22'",
                     "E22", "G2", "E32", "E32'", "F3", "E33'"},
                    {"E21", "G1", "E31"}};
        case 3:  // D13 + A6
            return {{"E12'", "E13'", "F1", "E11'", "E11", "G1", "E21", "E21'", "F2", "E22'",
                     "E22", "G2", "E32"},
                    {"E31'", "F3", "E33'", "E33", "G3", "E23"}};
        case 4:  // D7 + A12
            return {{"E11'", "E12'", "F1", "E13'", "E13", "G3", "E23"},
                    {"E33'", "F3", "E32'", "E32", "G2", "E22", "E22'", "F2", "E21'", "E21",
                     "G1", "E31"}};
        case 5:  // D7 + D12
            return {{"E11'", "E12'", "F1", "E13'", "E13", "G3", "E23"},
                    {"E33'", "E32'", "F3", "E31'", "E31", "G1", "E21", "E21'", "F2", "E22'",
                     "E22", "G2"}};
        case 6:  // D4 + A15
            return {{"E11'", "E12'", "E13'", "F1"},
                    {"E33", "G3", "E23", "E23'", "F2", "E22'", "E22", "G2", "E32", "E32'",
                     "F3", "E31'", "E31", "G1", "E21"}};
        case 7:  // A19 on the discriminant-4 surface
            return {{"H31", "E31'", "F3", "E33'", "H33", "E33", "G3", "E13", "H13", "E13'",
                     "F1", "E11'", "H11", "E11", "G1", "E21'", "F2", "E22'", "G2"}};
        default:
            throw std::invalid_argument("configuration_divisor_components: case must be 1..7");
    }
}

}  // namespace alv::dynkin

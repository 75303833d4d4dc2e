#include "alv/dynkin/labeling.hpp"

#include <stdexcept>

namespace alv::dynkin {

namespace {

bool admissible(const CurveGraph& g, const std::vector<Mark>& mark, int order) {
    const int n = g.size();
    for (int v = 0; v < n; ++v) {
        int fixed_nbrs = 0;
        for (int w : g.neighbors(v)) {
            if (mark[w] == Mark::fixed) ++fixed_nbrs;
            // two fixed curves never meet
            if (mark[v] == Mark::fixed && mark[w] == Mark::fixed) return false;
        }
        if (order == 2) {
            // every edge joins f to s, and each s-curve spends both of its
            // two fixed points on distinct fixed neighbours
            if (mark[v] == Mark::stable) {
                for (int w : g.neighbors(v))
                    if (mark[w] == Mark::stable) return false;
                if (fixed_nbrs != 2) return false;
            }
        } else {
            if (mark[v] == Mark::stable && fixed_nbrs == 0) return false;
        }
    }
    if (order == 3) {
        // exactly one fixed curve among any three consecutive ones
        for (int v = 0; v < n; ++v)
            for (int a : g.neighbors(v))
                for (int b : g.neighbors(v)) {
                    if (a >= b) continue;
                    int f = (mark[a] == Mark::fixed) + (mark[v] == Mark::fixed) +
                            (mark[b] == Mark::fixed);
                    if (f != 1) return false;
                }
    }
    return true;
}

}  // namespace

std::vector<FSLabeling> admissible_labelings(const CurveGraph& g, int order) {
    if (order != 2 && order != 3)
        throw std::invalid_argument("admissible_labelings: order must be 2 or 3");
    const int n = g.size();
    if (n > 25) throw std::invalid_argument("admissible_labelings: graph too large");
    std::vector<FSLabeling> out;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        std::vector<Mark> mark(n);
        for (int v = 0; v < n; ++v)
            mark[v] = (bits >> v) & 1 ? Mark::fixed : Mark::stable;
        if (admissible(g, mark, order)) out.push_back({std::move(mark)});
    }
    return out;
}

FixedProfile count_profile(const CurveGraph& g, const FSLabeling& lab, int order) {
    if (static_cast<int>(lab.mark.size()) != g.size())
        throw std::invalid_argument("count_profile: labeling size mismatch");
    if (!admissible(g, lab.mark, order))
        throw std::invalid_argument("count_profile: labeling not admissible");
    FixedProfile p;
    for (int v = 0; v < g.size(); ++v)
        if (lab.fixed(v)) ++p.n_curves;
    if (order != 3) return p;

    for (int v = 0; v < g.size(); ++v) {
        if (lab.fixed(v)) continue;
        int fixed_nbrs = 0, stable_nbrs = 0;
        for (int w : g.neighbors(v)) (lab.fixed(w) ? fixed_nbrs : stable_nbrs)++;
        // two fixed points on each s-curve; admissibility leaves exactly
        // one f-neighbour and at most one s-neighbour
        int accounted = fixed_nbrs + stable_nbrs;
        if (accounted > 2)
            throw std::logic_error("count_profile: s-curve with more than two marked points");
        p.n_isolated += 2 - accounted;  // free fixed points, off every other curve
        if (stable_nbrs) ++p.n_isolated;  // s^s intersection point, halved below
    }
    // each s^s point was seen from both ends
    int ss_edges = 0;
    for (int v = 0; v < g.size(); ++v)
        for (int w : g.neighbors(v))
            if (w > v && !lab.fixed(v) && !lab.fixed(w)) ++ss_edges;
    p.n_isolated -= ss_edges;
    return p;
}

bool no_adjacent_fixed(const CurveGraph& g, const FSLabeling& lab) {
    for (int v = 0; v < g.size(); ++v)
        for (int w : g.neighbors(v))
            if (w > v && lab.fixed(v) && lab.fixed(w)) return false;
    return true;
}

std::string pattern_string(const FSLabeling& lab) {
    std::string s;
    for (std::size_t i = 0; i < lab.mark.size(); ++i) {
        if (i) s += "-";
        s += lab.mark[i] == Mark::fixed ? "f" : "s";
    }
    return s;
}

}  // namespace alv::dynkin

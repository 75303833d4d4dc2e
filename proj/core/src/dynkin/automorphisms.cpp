#include "alv/dynkin/curve_graph.hpp"

#include <algorithm>

namespace alv::dynkin {

namespace {

// Backtracking automorphism search. Vertices are assigned in order; a
// candidate image must match the degree and respect adjacency with all
// previously assigned vertices. Diagrams here have <= 24 vertices and
// tiny automorphism groups, so this is instant.
void extend(const CurveGraph& g, std::vector<int>& image, std::vector<bool>& used,
            std::size_t v, std::vector<std::vector<int>>& out) {
    const int n = g.size();
    if (static_cast<int>(v) == n) {
        out.push_back(image);
        return;
    }
    for (int w = 0; w < n; ++w) {
        if (used[w] || g.degree(w) != g.degree(static_cast<int>(v))) continue;
        bool ok = true;
        for (std::size_t u = 0; u < v && ok; ++u)
            if (g.adjacent(static_cast<int>(u), static_cast<int>(v)) !=
                g.adjacent(image[u], w))
                ok = false;
        if (!ok) continue;
        image[v] = w;
        used[w] = true;
        extend(g, image, used, v + 1, out);
        used[w] = false;
    }
}

}  // namespace

std::vector<std::vector<int>> graph_automorphisms(const CurveGraph& g) {
    std::vector<std::vector<int>> out;
    std::vector<int> image(g.size(), -1);
    std::vector<bool> used(g.size(), false);
    extend(g, image, used, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace alv::dynkin

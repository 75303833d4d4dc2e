#include "alv/dynkin/curve_graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace alv::dynkin {

int CurveGraph::add_vertex(const std::string& name) {
    if (index(name) >= 0) throw std::invalid_argument("CurveGraph: duplicate vertex " + name);
    names_.push_back(name);
    adj_.emplace_back();
    return size() - 1;
}

void CurveGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= size() || v >= size())
        throw std::out_of_range("CurveGraph: vertex index out of range");
    if (u == v) throw std::invalid_argument("CurveGraph: self-loop not allowed");
    if (adjacent(u, v)) return;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    std::sort(adj_[u].begin(), adj_[u].end());
    std::sort(adj_[v].begin(), adj_[v].end());
}

void CurveGraph::add_edge(const std::string& u, const std::string& v) {
    int iu = index(u), iv = index(v);
    if (iu < 0) throw std::invalid_argument("CurveGraph: unknown vertex " + u);
    if (iv < 0) throw std::invalid_argument("CurveGraph: unknown vertex " + v);
    add_edge(iu, iv);
}

int CurveGraph::index(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

bool CurveGraph::adjacent(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int CurveGraph::edge_count() const {
    int twice = 0;
    for (const auto& a : adj_) twice += static_cast<int>(a.size());
    return twice / 2;
}

std::vector<std::vector<int>> CurveGraph::components() const {
    std::vector<int> comp(size(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, verts;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            verts.push_back(v);
            for (int w : adj_[v])
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    stack.push_back(w);
                }
        }
        std::sort(verts.begin(), verts.end());
        out.push_back(std::move(verts));
    }
    return out;
}

CurveGraph CurveGraph::induced(const std::vector<int>& vertices) const {
    CurveGraph g;
    std::map<int, int> remap;
    for (int v : vertices) remap[v] = g.add_vertex(names_[v]);
    for (int v : vertices)
        for (int w : adj_[v])
            if (w > v && remap.count(w)) g.add_edge(remap[v], remap.at(w));
    return g;
}

std::optional<AdeComponent> CurveGraph::ade_shape() const {
    const int n = size();
    if (n == 0) return std::nullopt;
    if (components().size() != 1) return std::nullopt;
    if (edge_count() != n - 1) return std::nullopt;  // connected => tree check
    std::vector<int> forks;
    for (int v = 0; v < n; ++v) {
        if (degree(v) > 3) return std::nullopt;
        if (degree(v) == 3) forks.push_back(v);
    }
    if (forks.empty()) return AdeComponent{AdeKind::A, n};
    if (forks.size() > 1) return std::nullopt;

    // Branch lengths from the unique trivalent vertex, sorted.
    int fork = forks[0];
    std::vector<int> lens;
    for (int start : adj_[fork]) {
        int len = 1, prev = fork, cur = start;
        while (degree(cur) == 2) {
            int next = adj_[cur][0] == prev ? adj_[cur][1] : adj_[cur][0];
            prev = cur;
            cur = next;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    if (lens[0] == 1 && lens[1] == 1) return AdeComponent{AdeKind::D, n};
    if (lens[0] == 1 && lens[1] == 2 && lens[2] >= 2 && lens[2] <= 4)
        return AdeComponent{AdeKind::E, n};
    return std::nullopt;
}

std::optional<DynkinType> CurveGraph::dynkin_type() const {
    std::vector<AdeComponent> comps;
    for (const auto& verts : components()) {
        auto shape = induced(verts).ade_shape();
        if (!shape) return std::nullopt;
        comps.push_back(*shape);
    }
    // descending rank, D before A before E at equal rank, for a stable name
    std::sort(comps.begin(), comps.end(), [](const AdeComponent& a, const AdeComponent& b) {
        if (a.rank != b.rank) return a.rank > b.rank;
        return static_cast<int>(a.kind) > static_cast<int>(b.kind);
    });
    return DynkinType(comps);
}

void CurveGraph::serialize(std::ostream& os) const {
    for (int v = 0; v < size(); ++v)
        if (degree(v) == 0) os << names_[v] << "\n";
    for (int v = 0; v < size(); ++v)
        for (int w : adj_[v])
            if (w > v) os << names_[v] << " " << names_[w] << "\n";
}

CurveGraph CurveGraph::parse(std::istream& is) {
    CurveGraph g;
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string a, b;
        if (!(ls >> a)) continue;
        if (g.index(a) < 0) g.add_vertex(a);
        if (ls >> b) {
            if (g.index(b) < 0) g.add_vertex(b);
            g.add_edge(a, b);
        }
    }
    return g;
}

bool CurveGraph::operator==(const CurveGraph& o) const {
    if (names_ != o.names_) return false;
    return adj_ == o.adj_;
}

CurveGraph ade_curve_graph(const DynkinType& type) {
    static const char* prefixes[] = {"C", "E", "F", "G", "K", "L", "M", "N"};
    const auto& comps = type.components();
    if (comps.size() > std::size(prefixes))
        throw std::invalid_argument("ade_curve_graph: too many components");
    CurveGraph g;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const int n = comps[c].rank;
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i)
            v[i] = g.add_vertex(std::string(prefixes[c]) + std::to_string(i + 1));
        switch (comps[c].kind) {
            case AdeKind::A:
                for (int i = 0; i + 1 < n; ++i) g.add_edge(v[i], v[i + 1]);
                break;
            case AdeKind::D:
                // chain v1..v(n-1), fork leaf vn on v(n-2)
                for (int i = 0; i + 2 < n; ++i) g.add_edge(v[i], v[i + 1]);
                g.add_edge(v[n - 3], v[n - 1]);
                break;
            case AdeKind::E:
                // chain v1..v(n-1), leaf vn on v3
                for (int i = 0; i + 2 < n; ++i) g.add_edge(v[i], v[i + 1]);
                g.add_edge(v[2], v[n - 1]);
                break;
        }
    }
    return g;
}

}  // namespace alv::dynkin

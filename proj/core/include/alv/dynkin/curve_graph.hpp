#ifndef ALV_DYNKIN_CURVE_GRAPH_HPP
#define ALV_DYNKIN_CURVE_GRAPH_HPP

#include "alv/dynkin/dynkin_type.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace alv::dynkin {

// Incidence graph of (-2)-curves: simple, undirected, every intersection
// number 0 or 1, every self-intersection -2.
class CurveGraph {
public:
    int add_vertex(const std::string& name);
    void add_edge(int u, int v);
    void add_edge(const std::string& u, const std::string& v);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int v) const { return names_[v]; }
    int index(const std::string& name) const;  // -1 when absent
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;
    int edge_count() const;

    std::vector<std::vector<int>> components() const;
    CurveGraph induced(const std::vector<int>& vertices) const;

    // Shape of a connected graph as an ADE diagram, if it is one.
    std::optional<AdeComponent> ade_shape() const;
    // Multiset of component shapes; nullopt if any component is not ADE.
    std::optional<DynkinType> dynkin_type() const;

    // One edge per line as "name name"; isolated vertices as a bare name.
    void serialize(std::ostream& os) const;
    static CurveGraph parse(std::istream& is);

    bool operator==(const CurveGraph& o) const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<int>> adj_;
};

// Graph of an ADE type in the fixed numbering convention: each component's
// curves are a chain v1-v2-...-v(n-1) with vn attached to v(n-2) for D
// components (the fork sits at the high-index end); E components fork at
// the third node from the chain end. Component vertex prefixes are C, E,
// F, G, ... in order.
CurveGraph ade_curve_graph(const DynkinType& type);

// All automorphisms, as vertex permutations (image[v] lists). Exhaustive
// backtracking over degree-compatible assignments; identity first, then
// lexicographic on the image vector.
std::vector<std::vector<int>> graph_automorphisms(const CurveGraph& g);

}  // namespace alv::dynkin

#endif

#include "alv/lattice/overlattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace alv::lattice {

namespace {

using Element = DiscriminantGroup::Element;

std::vector<GlueVector> element_coords(const DiscriminantGroup& dg,
                                       const std::vector<Element>& elems) {
    std::vector<GlueVector> out;
    for (const auto& e : elems)
        if (!dg.is_zero(e)) out.push_back({dg.coords(e)});
    std::sort(out.begin(), out.end());
    return out;
}

// Greedy generating set: largest-order elements first, then lexicographic.
std::vector<Element> generating_set(const DiscriminantGroup& dg,
                                    const std::vector<Element>& subgroup) {
    std::vector<Element> sorted = subgroup;
    std::sort(sorted.begin(), sorted.end(), [&](const Element& a, const Element& b) {
        Int oa = dg.element_order(a), ob = dg.element_order(b);
        if (oa != ob) return oa > ob;
        return a < b;
    });
    std::set<Element> span{dg.zero()};
    std::vector<Element> gens;
    for (const auto& x : sorted) {
        if (span.count(x)) continue;
        gens.push_back(x);
        std::set<Element> bigger;
        for (const auto& s : span) {
            Element cur = s;
            Int ord = dg.element_order(x);
            for (Int j = 0; j < ord; ++j) {
                bigger.insert(cur);
                cur = dg.add(cur, x);
            }
        }
        span = std::move(bigger);
        if (span.size() == subgroup.size()) break;
    }
    return gens;
}

}  // namespace

std::vector<Overlattice> enumerate_overlattices(const Lattice& l) {
    DiscriminantGroup dg = discriminant_group(l);
    std::vector<Element> elems = dg.all_elements();

    std::vector<Element> isotropic;
    for (const auto& e : elems)
        if (!dg.is_zero(e) && dg.q(e) == 0) isotropic.push_back(e);

    // Breadth-first closure over isotropic subgroups: adjoining an isotropic
    // element orthogonal (under b) to the subgroup keeps it isotropic.
    std::set<std::vector<Element>> seen;
    std::vector<std::vector<Element>> queue;
    std::vector<Element> trivial{dg.zero()};
    seen.insert(trivial);
    queue.push_back(trivial);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::vector<Element> cur = queue[qi];
        for (const auto& x : isotropic) {
            if (std::binary_search(cur.begin(), cur.end(), x)) continue;
            bool orth = true;
            for (const auto& s : cur)
                if (dg.b(x, s) != 0) { orth = false; break; }
            if (!orth) continue;
            std::set<Element> bigger;
            Int ord = dg.element_order(x);
            for (const auto& s : cur) {
                Element t = s;
                for (Int j = 0; j < ord; ++j) {
                    bigger.insert(t);
                    t = dg.add(t, x);
                }
            }
            std::vector<Element> next(bigger.begin(), bigger.end());
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }

    std::vector<Overlattice> out;
    for (const auto& subgroup : queue) {
        Overlattice o;
        o.index = static_cast<long>(subgroup.size());
        o.subgroup_elements = element_coords(dg, subgroup);
        for (const auto& g : generating_set(dg, subgroup)) o.generators.push_back({dg.coords(g)});
        std::sort(o.generators.begin(), o.generators.end());
        out.push_back(std::move(o));
    }
    std::sort(out.begin(), out.end(), [](const Overlattice& a, const Overlattice& b) {
        if (a.index != b.index) return a.index < b.index;
        return a.subgroup_elements < b.subgroup_elements;
    });
    return out;
}

NikulinResult nikulin_filter(const std::vector<int>& curves, const dynkin::CurveGraph& g) {
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = i + 1; j < curves.size(); ++j)
            if (g.adjacent(curves[i], curves[j])) {
                std::ostringstream os;
                os << "curves " << g.name(curves[i]) << " and " << g.name(curves[j])
                   << " meet; the parity test needs a disjoint set";
                return {NikulinVerdict::inapplicable, os.str()};
            }
    const std::size_t l = curves.size();
    std::ostringstream os;
    os << l << " pairwise disjoint curves";
    if (l == 0 || l == 8 || l == 16) return {NikulinVerdict::pass, os.str()};
    os << "; a 2-divisible disjoint sum must have 0, 8 or 16 of them";
    return {NikulinVerdict::fail, os.str()};
}

}  // namespace alv::lattice

#include "alv/lattice/picard.hpp"

#include <algorithm>
#include <sstream>

namespace alv::lattice {

namespace {

using exact::lcm_den;

std::string coords_str(const RatVector& v, const std::vector<std::string>& labels) {
    std::string s;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!first) s += " + ";
        first = false;
        if (v[i] != 1) s += exact::to_string(v[i]) + "*";
        s += labels[i];
    }
    return first ? "0" : s;
}

// Z-basis of the span of the given rational rows (full rank expected).
RatMatrix rational_row_basis(const std::vector<RatVector>& rows, std::size_t dim) {
    Int den = 1;
    for (const auto& r : rows) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), lcm_den(r).get_mpz_t());
    IntMatrix m(rows.size(), dim);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            Rational scaled = rows[i][j] * Rational(den);
            m(i, j) = scaled.get_num();
        }
    IntMatrix basis = exact::row_basis(m);
    RatMatrix out(basis.rows(), dim);
    for (std::size_t i = 0; i < basis.rows(); ++i)
        for (std::size_t j = 0; j < dim; ++j)
            out(i, j) = exact::make_rational(basis(i, j), den);
    return out;
}

bool is_two_torsion(const RatVector& coords) {
    for (const auto& c : coords)
        if (c != 0 && c != exact::make_rational(1, 2)) return false;
    return true;
}

std::vector<int> half_support(const RatVector& coords) {
    std::vector<int> s;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) s.push_back(static_cast<int>(i));
    return s;
}

RatVector mod1_vector(RatVector v) {
    for (auto& c : v) c = exact::mod1(c);
    return v;
}

RatVector add_vectors(const RatVector& a, const RatVector& b) {
    RatVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

// lexicographically least representative of v modulo the glue subgroup
RatVector canonical_mod_subgroup(const RatVector& v,
                                 const std::vector<GlueVector>& subgroup_elements) {
    RatVector best = mod1_vector(v);
    for (const auto& s : subgroup_elements) {
        RatVector cand = mod1_vector(add_vectors(v, s.coords));
        if (cand < best) best = cand;
    }
    return best;
}

}  // namespace

std::vector<PicardExtension> picard_extension_search(const Lattice& delta,
                                                     const Int& target_disc,
                                                     const Int& hsq_bound,
                                                     SearchTrace* trace) {
    const int rank = delta.rank();
    const dynkin::CurveGraph graph = delta.incidence_graph();
    const Int disc = discriminant(delta);
    std::vector<PicardExtension> results;

    for (const Overlattice& closure : enumerate_overlattices(delta)) {
        ClosureBranch branch;
        branch.closure_index = closure.index;
        branch.closure_elements = closure.subgroup_elements;

        // Parity test on the 2-torsion of the glue group: each order-2
        // class is half a sum of distinct curves, which is 2-divisible in
        // the Picard lattice of a K3 only for 0, 8 or 16 disjoint curves.
        for (const auto& elem : closure.subgroup_elements) {
            if (!is_two_torsion(elem.coords)) continue;
            auto res = nikulin_filter(half_support(elem.coords), graph);
            SearchEvent ev;
            ev.check = "parity of 2-divisible curve sum";
            ev.detail = "class " + coords_str(elem.coords, delta.labels()) + ": " + res.detail;
            ev.passed = res.verdict != NikulinVerdict::fail;
            if (!ev.passed) branch.nikulin_ok = false;
            branch.events.push_back(std::move(ev));
        }
        if (!branch.nikulin_ok) {
            if (trace) trace->branches.push_back(std::move(branch));
            continue;
        }

        // Z-basis and Gram of the closure.
        std::vector<RatVector> rows;
        for (int i = 0; i < rank; ++i) {
            RatVector e(rank, Rational(0));
            e[i] = 1;
            rows.push_back(std::move(e));
        }
        for (const auto& g : closure.generators) rows.push_back(g.coords);
        RatMatrix cb = rational_row_basis(rows, rank);
        if (static_cast<int>(cb.rows()) != rank)
            throw std::logic_error("picard_extension_search: closure basis rank defect");
        IntMatrix closure_gram(rank, rank);
        for (int i = 0; i < rank; ++i) {
            RatVector bi(rank), bj(rank);
            for (int t = 0; t < rank; ++t) bi[t] = cb(i, t);
            for (int j = 0; j < rank; ++j) {
                for (int t = 0; t < rank; ++t) bj[t] = cb(j, t);
                Rational p = delta.pairing(bi, bj);
                if (!exact::is_integer(p))
                    throw std::logic_error("picard_extension_search: closure not integral");
                closure_gram(i, j) = p.get_num();
            }
        }
        std::vector<std::string> bar_labels;
        for (int i = 0; i < rank; ++i) bar_labels.push_back("v" + std::to_string(i + 1));
        Lattice bar(bar_labels, closure_gram);
        const Int disc_bar = discriminant(bar);
        DiscriminantGroup abar = discriminant_group(bar);
        const Int exponent = abar.exponent();

        // curve coordinates of the glue-group generators of the closure dual
        std::vector<RatVector> abar_gen_curve;
        for (const auto& g : abar.generators()) {
            RatVector v(rank, Rational(0));
            for (int i = 0; i < rank; ++i)
                for (int t = 0; t < rank; ++t) v[t] += g[i] * cb(i, t);
            abar_gen_curve.push_back(std::move(v));
        }

        for (Int hsq = 2; hsq <= hsq_bound; hsq += 2) {
            Int n2_num = disc_bar * hsq;
            if (n2_num % target_disc != 0) continue;
            Int n2 = n2_num / target_disc;
            if (mpz_perfect_square_p(n2.get_mpz_t()) == 0) continue;
            Int n;
            mpz_sqrt(n.get_mpz_t(), n2.get_mpz_t());

            std::ostringstream cand;
            cand << "H^2 = " << hsq.get_str() << ", n = " << n.get_str();
            {
                SearchEvent ev{"index identity", cand.str() + ": n^2 * " +
                               target_disc.get_str() + " = " + disc_bar.get_str() +
                               " * H^2", true};
                branch.events.push_back(std::move(ev));
            }

            if (hsq % n != 0) {
                SearchEvent ev;
                ev.check = "H^2 divisible by n";
                ev.detail = cand.str() + ": H^2 = " + hsq.get_str() + " is not 0 (mod " +
                            n.get_str() + ")";
                ev.passed = false;
                branch.events.push_back(std::move(ev));
                continue;
            }
            if (exponent % n != 0) {
                SearchEvent ev;
                ev.check = "n divides glue-group exponent";
                ev.detail = cand.str() + ": exponent of the closure glue group is " +
                            exponent.get_str();
                ev.passed = false;
                branch.events.push_back(std::move(ev));
                continue;
            }

            const Int k = hsq / n;  // H-component of the extension class, k/H^2
            int found_here = 0;
            for (const auto& x : abar.all_elements()) {
                if (abar.element_order(x) != n) continue;
                Rational q_total = exact::mod2(abar.q(x) + Rational(k * k) / Rational(hsq));
                if (q_total != 0) continue;

                // curve coordinates of the glue class
                RatVector vx(rank, Rational(0));
                for (std::size_t i = 0; i < x.size(); ++i)
                    if (x[i] != 0)
                        for (int t = 0; t < rank; ++t)
                            vx[t] += Rational(x[i]) * abar_gen_curve[i][t];
                vx = canonical_mod_subgroup(vx, closure.subgroup_elements);

                PicardExtension ext;
                ext.closure_index = closure.index;
                ext.closure_glue = closure.generators;
                ext.closure_elements = closure.subgroup_elements;
                ext.closure_basis = cb;
                ext.closure_gram = closure_gram;
                ext.h_square = hsq;
                ext.n = n;
                ext.extension_vector.coords = vx;
                ext.extension_vector.coords.push_back(exact::make_rational(Int(1), n));

                // assemble the rank+1 lattice and certify it
                std::vector<RatVector> pic_rows;
                for (int i = 0; i < rank + 1; ++i) {
                    RatVector e(rank + 1, Rational(0));
                    e[i] = 1;
                    pic_rows.push_back(std::move(e));
                }
                for (const auto& g : closure.generators) {
                    RatVector e = g.coords;
                    e.push_back(Rational(0));
                    pic_rows.push_back(std::move(e));
                }
                pic_rows.push_back(ext.extension_vector.coords);
                RatMatrix pb = rational_row_basis(pic_rows, rank + 1);
                if (static_cast<int>(pb.rows()) != rank + 1)
                    throw std::logic_error("picard_extension_search: pic basis rank defect");

                auto pair_full = [&](const RatVector& a, const RatVector& b) {
                    RatVector a19(a.begin(), a.begin() + rank), b19(b.begin(), b.begin() + rank);
                    return delta.pairing(a19, b19) + a[rank] * b[rank] * Rational(hsq);
                };
                IntMatrix pg(rank + 1, rank + 1);
                for (int i = 0; i <= rank; ++i)
                    for (int j = 0; j <= rank; ++j) {
                        RatVector ri(rank + 1), rj(rank + 1);
                        for (int t = 0; t <= rank; ++t) {
                            ri[t] = pb(i, t);
                            rj[t] = pb(j, t);
                        }
                        Rational p = pair_full(ri, rj);
                        if (!exact::is_integer(p))
                            throw std::logic_error("picard_extension_search: non-integral pairing");
                        pg(i, j) = p.get_num();
                    }
                for (int i = 0; i <= rank; ++i)
                    if (pg(i, i) % 2 != 0)
                        throw std::logic_error("picard_extension_search: odd diagonal");
                if (abs(exact::det(pg)) != target_disc)
                    throw std::logic_error("picard_extension_search: wrong discriminant");
                auto sig = exact::signature(pg);
                if (sig.positive != 1 || sig.negative != rank || sig.zero != 0)
                    throw std::logic_error("picard_extension_search: wrong signature");
                ext.pic_basis = pb;
                ext.pic_gram = pg;
                results.push_back(std::move(ext));
                ++found_here;
            }
            SearchEvent ev;
            ev.check = "isotropic glue class of order n";
            ev.detail = cand.str() + ": " + std::to_string(found_here) +
                        " class(es) with the pinned H-component " + k.get_str() + "/" +
                        hsq.get_str();
            ev.passed = found_here > 0;
            branch.events.push_back(std::move(ev));
            branch.extensions_found += found_here;
        }
        if (trace) trace->branches.push_back(std::move(branch));
    }

    std::sort(results.begin(), results.end(), [](const PicardExtension& a, const PicardExtension& b) {
        if (a.closure_elements != b.closure_elements)
            return a.closure_elements < b.closure_elements;
        if (a.h_square != b.h_square) return a.h_square < b.h_square;
        return a.extension_vector.coords < b.extension_vector.coords;
    });
    return results;
}

}  // namespace alv::lattice

#include "alv/lattice/lattice.hpp"

#include <stdexcept>

namespace alv::lattice {

Lattice::Lattice(std::vector<std::string> labels, IntMatrix gram)
    : labels_(std::move(labels)), gram_(std::move(gram)) {
    if (gram_.rows() != labels_.size() || gram_.cols() != labels_.size())
        throw std::invalid_argument("Lattice: label/Gram size mismatch");
    if (!gram_.is_symmetric()) throw std::invalid_argument("Lattice: Gram not symmetric");
    for (std::size_t i = 0; i < gram_.rows(); ++i)
        if (gram_(i, i) % 2 != 0) throw std::invalid_argument("Lattice: Gram diagonal not even");
}

Rational Lattice::pairing(const RatVector& v, const RatVector& w) const {
    if (static_cast<int>(v.size()) != rank() || static_cast<int>(w.size()) != rank())
        throw std::invalid_argument("Lattice::pairing: vector size mismatch");
    Rational s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (v[i] == 0) continue;
        Rational row = 0;
        for (int j = 0; j < rank(); ++j)
            if (w[j] != 0) row += Rational(gram_(i, j)) * w[j];
        s += v[i] * row;
    }
    return s;
}

dynkin::CurveGraph Lattice::incidence_graph() const {
    dynkin::CurveGraph g;
    for (const auto& name : labels_) g.add_vertex(name);
    for (int i = 0; i < rank(); ++i)
        for (int j = i + 1; j < rank(); ++j)
            if (gram_(i, j) != 0) g.add_edge(i, j);
    return g;
}

Lattice ade_lattice(const dynkin::DynkinType& type) {
    dynkin::CurveGraph g = dynkin::ade_curve_graph(type);
    const int n = g.size();
    IntMatrix gram(n, n);
    for (int i = 0; i < n; ++i) {
        gram(i, i) = -2;
        for (int j : g.neighbors(i)) gram(i, j) = 1;
    }
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(g.name(i));
    return Lattice(std::move(labels), std::move(gram));
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
    const int n = a.rank(), m = b.rank();
    IntMatrix gram(n + m, n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram(i, j) = a.gram()(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) gram(n + i, n + j) = b.gram()(i, j);
    std::vector<std::string> labels = a.labels();
    for (const auto& l : b.labels()) labels.push_back(l);
    return Lattice(std::move(labels), std::move(gram));
}

Int discriminant(const Lattice& l) {
    Int d = exact::det(l.gram());
    if (d == 0) throw std::domain_error("discriminant: degenerate Gram matrix");
    return abs(d);
}

Lattice orthogonal_complement(const Lattice& ambient, const std::vector<int>& sub) {
    const int n = ambient.rank();
    if (sub.empty()) throw std::invalid_argument("orthogonal_complement: empty sublattice");
    IntMatrix sub_gram(sub.size(), sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i)
        for (std::size_t j = 0; j < sub.size(); ++j)
            sub_gram(i, j) = ambient.gram()(sub[i], sub[j]);
    if (exact::det(sub_gram) == 0)
        throw std::domain_error("orthogonal_complement: degenerate sublattice");

    IntMatrix rows(sub.size(), n);
    for (std::size_t i = 0; i < sub.size(); ++i)
        for (int j = 0; j < n; ++j) rows(i, j) = ambient.gram()(sub[i], j);
    auto ker = exact::integer_kernel(rows);
    if (ker.trivial) throw std::domain_error("orthogonal_complement: trivial complement");

    const std::size_t k = ker.basis.rows();
    IntMatrix gram(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Int s = 0;
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    s += ker.basis(i, p) * ambient.gram()(p, q) * ker.basis(j, q);
            gram(i, j) = s;
        }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < k; ++i) labels.push_back("w" + std::to_string(i + 1));
    return Lattice(std::move(labels), std::move(gram));
}

}  // namespace alv::lattice

#include "support/oracles.hpp"

#include <set>

namespace tamestrat::oracles {

int64_t ext_dim_via_presentation(const KronRep& x, const KronRep& y) {
    // Hom(P0, Y) = Y1^{x1} + Y2^{x2}, Hom(P1, Y) = Y1^{x2} + Y1^{x2};
    // the connecting map sends (g1, g2) to (g1 A_X - A_Y g2, g1 B_X - B_Y g2)
    const auto& f = x.f;
    const int rows = 2 * y.d1 * x.d2;
    const int cols = y.d1 * x.d1 + y.d2 * x.d2;
    Matrix conn(f, (size_t)rows, (size_t)cols);
    for (int arrow = 0; arrow < 2; ++arrow) {
        const Matrix& ax = arrow == 0 ? x.A : x.B;
        const Matrix& ay = arrow == 0 ? y.A : y.B;
        for (int i = 0; i < y.d1; ++i)
            for (int j = 0; j < x.d2; ++j) {
                int row = arrow * y.d1 * x.d2 + i * x.d2 + j;
                for (int k = 0; k < x.d1; ++k)
                    conn.at((size_t)row, (size_t)(i * x.d1 + k)) += ax.at((size_t)k, (size_t)j);
                for (int k = 0; k < y.d2; ++k)
                    conn.at((size_t)row, (size_t)(y.d1 * x.d1 + k * x.d2 + j)) -=
                        ay.at((size_t)i, (size_t)k);
            }
    }
    return (int64_t)rows - (int64_t)conn.rank();
}

bool irreducible_exhaustive(const Poly& p) {
    const auto& f = p.field();
    const int deg = p.degree();
    if (deg < 1) return false;
    // root scan
    for (auto& a : f->all_elements())
        if (p.eval(a).is_zero() && deg > 1) return false;
    // full-range trial division
    auto elems = f->all_elements();
    for (int d = 1; d < deg; ++d) {
        std::vector<size_t> idx((size_t)d, 0);
        while (true) {
            std::vector<FieldElem> c;
            for (int i = 0; i < d; ++i) c.push_back(elems[idx[(size_t)i]]);
            c.push_back(f->one());
            if (Poly(f, std::move(c)).divides(p)) return false;
            size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == elems.size()) idx[pos++] = 0;
            if (pos == idx.size()) break;
        }
    }
    return true;
}

namespace {

std::vector<std::vector<FieldElem>> rref_basis(const FieldPtr& f,
                                               std::vector<std::vector<FieldElem>> vecs,
                                               int n) {
    if (vecs.empty()) return {};
    Matrix m(f, vecs.size(), (size_t)n);
    for (size_t i = 0; i < vecs.size(); ++i)
        for (int j = 0; j < n; ++j) m.at(i, (size_t)j) = vecs[i][(size_t)j];
    std::vector<size_t> pivots;
    Matrix r = m.rref(&pivots);
    std::vector<std::vector<FieldElem>> basis;
    for (size_t k = 0; k < pivots.size(); ++k) {
        std::vector<FieldElem> row;
        for (int j = 0; j < n; ++j) row.push_back(r.at(k, (size_t)j));
        basis.push_back(std::move(row));
    }
    return basis;
}

std::string basis_key(const std::vector<std::vector<FieldElem>>& basis) {
    std::string key;
    for (auto& row : basis) {
        for (auto& e : row) key += e.str() + ",";
        key += ";";
    }
    return key;
}

std::vector<std::vector<FieldElem>> all_vectors(const FieldPtr& f, int n) {
    // flattened enumeration of F_q^n
    auto elems = f->all_elements();
    std::vector<std::vector<FieldElem>> out;
    std::vector<size_t> idx((size_t)n, 0);
    while (true) {
        std::vector<FieldElem> v;
        for (int i = 0; i < n; ++i) v.push_back(elems[idx[(size_t)i]]);
        out.push_back(std::move(v));
        size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == elems.size()) idx[pos++] = 0;
        if (pos == idx.size()) break;
    }
    return out;
}

} // namespace

std::vector<std::vector<std::vector<FieldElem>>> subspaces(const FieldPtr& f, int n) {
    std::vector<std::vector<std::vector<FieldElem>>> out;
    std::set<std::string> seen;
    auto vectors = all_vectors(f, n);
    // spans of up to n vectors cover every subspace at this scale
    std::vector<size_t> pick((size_t)n, 0);
    while (true) {
        std::vector<std::vector<FieldElem>> gens;
        for (int i = 0; i < n; ++i) gens.push_back(vectors[pick[(size_t)i]]);
        auto basis = rref_basis(f, std::move(gens), n);
        if (seen.insert(basis_key(basis)).second) out.push_back(std::move(basis));
        size_t pos = 0;
        while (pos < pick.size() && ++pick[pos] == vectors.size()) pick[pos++] = 0;
        if (pos == pick.size()) break;
    }
    return out;
}

namespace {

bool contains(const FieldPtr& f, const std::vector<std::vector<FieldElem>>& basis,
              const std::vector<FieldElem>& v, int n) {
    std::vector<std::vector<FieldElem>> extended = basis;
    extended.push_back(v);
    return rref_basis(f, std::move(extended), n).size() == basis.size();
}

} // namespace

std::vector<std::pair<int, int>> subrep_dims(const KronRep& x) {
    auto subs1 = subspaces(x.f, x.d1);
    auto subs2 = subspaces(x.f, x.d2);
    std::vector<std::pair<int, int>> out;
    for (auto& w2 : subs2)
        for (auto& w1 : subs1) {
            bool closed = true;
            for (auto& gen : w2) {
                std::vector<FieldElem> av((size_t)x.d1, x.f->zero());
                std::vector<FieldElem> bv((size_t)x.d1, x.f->zero());
                for (int i = 0; i < x.d1; ++i)
                    for (int j = 0; j < x.d2; ++j) {
                        av[(size_t)i] += x.A.at((size_t)i, (size_t)j) * gen[(size_t)j];
                        bv[(size_t)i] += x.B.at((size_t)i, (size_t)j) * gen[(size_t)j];
                    }
                if (!contains(x.f, w1, av, x.d1) || !contains(x.f, w1, bv, x.d1)) {
                    closed = false;
                    break;
                }
            }
            if (closed) out.push_back({(int)w1.size(), (int)w2.size()});
        }
    return out;
}

int64_t kx_hom_dim(const Matrix& m, const Matrix& n) {
    const auto& f = m.field();
    const int dm = (int)m.rows(), dn = (int)n.rows();
    Matrix sys(f, (size_t)(dn * dm), (size_t)(dn * dm));
    for (int i = 0; i < dn; ++i)
        for (int j = 0; j < dm; ++j) {
            int row = i * dm + j;
            for (int k = 0; k < dm; ++k)
                sys.at((size_t)row, (size_t)(i * dm + k)) += m.at((size_t)k, (size_t)j);
            for (int k = 0; k < dn; ++k)
                sys.at((size_t)row, (size_t)(k * dm + j)) -= n.at((size_t)i, (size_t)k);
        }
    return (int64_t)sys.nullspace().size();
}

} // namespace tamestrat::oracles

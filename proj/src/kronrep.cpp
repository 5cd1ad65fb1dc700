#include "tamestrat/kronrep.hpp"

#include <functional>

#include <json.hpp>

namespace tamestrat {

KronRep KronRep::make(FieldPtr field, Matrix a, Matrix b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error("LengthMismatch", "arrow matrices must share one shape");
    KronRep x;
    x.f = std::move(field);
    x.d1 = (int)a.rows();
    x.d2 = (int)a.cols();
    x.A = std::move(a);
    x.B = std::move(b);
    return x;
}

KronRep direct_sum(const KronRep& x, const KronRep& y) {
    Field::require_same(x.f, y.f);
    return KronRep::make(x.f, Matrix::block_diag(x.A, y.A), Matrix::block_diag(x.B, y.B));
}

int64_t kron_euler(const DimVector& x, const DimVector& y) {
    return x[0] * y[0] + x[1] * y[1] - 2 * x[1] * y[0];
}

HomBasis hom_space(const KronRep& x, const KronRep& y) {
    Field::require_same(x.f, y.f);
    const auto& f = x.f;
    // unknowns: f1 (y.d1 x x.d1) then f2 (y.d2 x x.d2), row-major
    const int n1 = y.d1 * x.d1, n2 = y.d2 * x.d2;
    const int rows = 2 * y.d1 * x.d2;
    Matrix sys(f, (size_t)rows, (size_t)(n1 + n2));
    auto fill = [&](int block, const Matrix& mx, const Matrix& my) {
        // equation block: f1 * mx - my * f2 = 0, one row per (i, j)
        for (int i = 0; i < y.d1; ++i)
            for (int j = 0; j < x.d2; ++j) {
                int row = block * y.d1 * x.d2 + i * x.d2 + j;
                for (int k = 0; k < x.d1; ++k)
                    sys.at(row, (size_t)(i * x.d1 + k)) += mx.at(k, j);
                for (int k = 0; k < y.d2; ++k)
                    sys.at(row, (size_t)(n1 + k * x.d2 + j)) -= my.at(i, k);
            }
    };
    fill(0, x.A, y.A);
    fill(1, x.B, y.B);
    HomBasis out;
    for (auto& v : sys.nullspace()) {
        Matrix f1(f, (size_t)y.d1, (size_t)x.d1), f2(f, (size_t)y.d2, (size_t)x.d2);
        for (int i = 0; i < y.d1; ++i)
            for (int k = 0; k < x.d1; ++k) f1.at(i, k) = v[(size_t)(i * x.d1 + k)];
        for (int k = 0; k < y.d2; ++k)
            for (int j = 0; j < x.d2; ++j) f2.at(k, j) = v[(size_t)(n1 + k * x.d2 + j)];
        out.basis.push_back({std::move(f1), std::move(f2)});
    }
    out.dimension = (int)out.basis.size();
    return out;
}

int64_t ext_dim(const KronRep& x, const KronRep& y) {
    int64_t hom = hom_space(x, y).dimension;
    int64_t ext = hom - kron_euler(x.dim(), y.dim());
    if (ext < 0)
        throw Error("LengthMismatch", "negative Ext dimension; corrupted representation data");
    return ext;
}

KronRep functor_F(const Matrix& x_action) {
    if (x_action.rows() != x_action.cols())
        throw Error("LengthMismatch", "x-action must be square");
    return KronRep::make(x_action.field(),
                         Matrix::identity(x_action.field(), x_action.rows()), x_action);
}

KronRep simple_regular_V(FieldPtr field) {
    Matrix a(field, 1, 1), b(field, 1, 1);
    b.at(0, 0) = field->one();
    return KronRep::make(std::move(field), std::move(a), std::move(b));
}

KronRep v_ray(FieldPtr field, int n) {
    if (n < 1)
        throw Error("LevelZero", "ray length must be >= 1");
    Matrix a(field, (size_t)n, (size_t)n);
    for (int i = 0; i + 1 < n; ++i) a.at((size_t)i, (size_t)(i + 1)) = field->one();
    return KronRep::make(field, std::move(a), Matrix::identity(field, (size_t)n));
}

KronRep p_ray(const Poly& p, int n) {
    if (n < 1)
        throw Error("LevelZero", "ray length must be >= 1");
    return functor_F(Matrix::companion(p.pow(n)));
}

namespace {

// left-multiplication matrix of `a` on the span of `basis` in End; used by
// the radical computation over Q
Matrix left_mult_matrix(const std::vector<std::pair<Matrix, Matrix>>& basis,
                        const std::pair<Matrix, Matrix>& a, const FieldPtr& f) {
    // express a*b_j in the basis by solving the flat linear system
    const size_t dim = basis.size();
    size_t flat = basis[0].first.rows() * basis[0].first.cols() +
                  basis[0].second.rows() * basis[0].second.cols();
    Matrix coords(f, flat, dim);
    auto flatten = [&](const std::pair<Matrix, Matrix>& m, size_t col, Matrix& into) {
        size_t r = 0;
        for (size_t i = 0; i < m.first.rows(); ++i)
            for (size_t j = 0; j < m.first.cols(); ++j) into.at(r++, col) = m.first.at(i, j);
        for (size_t i = 0; i < m.second.rows(); ++i)
            for (size_t j = 0; j < m.second.cols(); ++j) into.at(r++, col) = m.second.at(i, j);
    };
    for (size_t jx = 0; jx < dim; ++jx) flatten(basis[jx], jx, coords);
    Matrix rhs(f, flat, dim);
    for (size_t jx = 0; jx < dim; ++jx)
        flatten({a.first * basis[jx].first, a.second * basis[jx].second}, jx, rhs);
    // solve coords * X = rhs column by column via rref of [coords | rhs]
    Matrix aug = coords.hstack(rhs);
    std::vector<size_t> pivots;
    Matrix red = aug.rref(&pivots);
    Matrix x(f, dim, dim);
    for (size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] >= dim)
            throw Error("LengthMismatch", "product left the span of the endomorphism basis");
        for (size_t j = 0; j < dim; ++j) x.at(pivots[k], j) = red.at(k, dim + j);
    }
    return x;
}

} // namespace

Tri indecomposable(const KronRep& x) {
    if (x.d1 + x.d2 == 0) return Tri::False;
    HomBasis end = hom_space(x, x);
    if (end.dimension == 1) return Tri::True; // brick
    const auto& f = x.f;
    auto fsize = f->size();
    if (fsize) {
        // enumerate End and scan for a nontrivial idempotent
        double total = 1;
        for (int i = 0; i < end.dimension; ++i) total *= (double)*fsize;
        if (total > 2e6) return Tri::Unknown;
        auto elems = f->all_elements();
        std::vector<size_t> idx((size_t)end.dimension, 0);
        Matrix id1 = Matrix::identity(f, (size_t)x.d1);
        Matrix id2 = Matrix::identity(f, (size_t)x.d2);
        while (true) {
            Matrix e1(f, (size_t)x.d1, (size_t)x.d1), e2(f, (size_t)x.d2, (size_t)x.d2);
            for (int b = 0; b < end.dimension; ++b) {
                const FieldElem& c = elems[idx[(size_t)b]];
                if (c.is_zero()) continue;
                e1 = e1 + end.basis[(size_t)b].first.scaled(c);
                e2 = e2 + end.basis[(size_t)b].second.scaled(c);
            }
            bool zero = e1.is_zero() && e2.is_zero();
            bool ident = (e1 == id1) && (e2 == id2);
            if (!zero && !ident && e1 * e1 == e1 && e2 * e2 == e2)
                return Tri::False;
            size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == elems.size()) idx[pos++] = 0;
            if (pos == idx.size()) break;
        }
        return Tri::True;
    }
    // over Q: local iff the radical complement is the scalars; radical of a
    // finite-dimensional algebra in characteristic zero is the kernel of
    // the trace form (a, b) -> tr(L_a L_b)
    std::vector<Matrix> lmul;
    for (auto& b : end.basis) lmul.push_back(left_mult_matrix(end.basis, b, f));
    Matrix gram(f, (size_t)end.dimension, (size_t)end.dimension);
    for (int i = 0; i < end.dimension; ++i)
        for (int j = 0; j < end.dimension; ++j) {
            Matrix prod = lmul[(size_t)i] * lmul[(size_t)j];
            FieldElem tr = f->zero();
            for (size_t d = 0; d < prod.rows(); ++d) tr += prod.at(d, d);
            gram.at((size_t)i, (size_t)j) = tr;
        }
    size_t radical_dim = end.basis.size() - gram.rank();
    if (radical_dim + 1 == end.basis.size()) return Tri::True;
    return Tri::Unknown;
}

namespace {

PruferEndReport truncation_report(const FieldPtr& f, int n, int residue_degree,
                                  const std::string& ring_name,
                                  const std::function<KronRep(int)>& ray,
                                  const Matrix& c_action, const Matrix& nilpotent) {
    PruferEndReport rep;
    rep.ring = ring_name;
    rep.level = n;
    rep.residue_degree = residue_degree;
    for (int l = 1; l <= n; ++l)
        rep.level_dims.push_back(hom_space(ray(l), ray(l)).dimension);
    rep.end_dim = rep.level_dims.back();
    rep.dim_matches = rep.end_dim == n * residue_degree;

    // index of the exhibited generator
    Matrix power = Matrix::identity(f, nilpotent.rows());
    int index = 0;
    while (index <= n && !power.is_zero()) {
        power = power * nilpotent;
        ++index;
    }
    rep.nilpotent_index = power.is_zero() ? index : 0;

    // {C^i N^j : i < residue degree, j < n} must be linearly independent,
    // which pins End as the free module over the residue field with basis
    // 1, t, ..., t^{n-1}
    const size_t dim = c_action.rows();
    Matrix span(f, dim * dim, (size_t)(residue_degree * n));
    size_t col = 0;
    std::vector<Matrix> c_pows, n_pows;
    for (int i = 0; i < residue_degree; ++i) c_pows.push_back(c_action.pow(i));
    for (int j = 0; j < n; ++j) n_pows.push_back(nilpotent.pow(j));
    for (int i = 0; i < residue_degree; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix m = c_pows[(size_t)i] * n_pows[(size_t)j];
            size_t r = 0;
            for (size_t a = 0; a < dim; ++a)
                for (size_t b = 0; b < dim; ++b) span.at(r++, col) = m.at(a, b);
            ++col;
        }
    rep.commutant_basis_ok = span.rank() == (size_t)(residue_degree * n) &&
                             (int)span.rank() == rep.end_dim;
    return rep;
}

} // namespace

PruferEndReport prufer_end_truncation(const Poly& p, int n) {
    if (n < 1)
        throw Error("LevelZero", "truncation level must be >= 1");
    if (p.is_zero() || !p.is_monic())
        throw Error("NotIrreducible", "ray label must be a monic irreducible polynomial");
    if (irreducible(p) != Tri::True)
        throw Error("NotIrreducible", "ray label " + p.str() + " is not certified irreducible");
    const auto& f = p.field();
    Matrix c = Matrix::companion(p.pow(n));
    Matrix nil = Matrix::poly_at(p, c);
    std::string ring = f->name() + "[x]/(" + p.str() + ")[t]/(t^" + std::to_string(n) + ")";
    return truncation_report(
        f, n, p.degree(), ring, [&](int l) { return p_ray(p, l); }, c, nil);
}

PruferEndReport prufer_end_truncation_V(FieldPtr field, int n) {
    if (n < 1)
        throw Error("LevelZero", "truncation level must be >= 1");
    Matrix jordan(field, (size_t)n, (size_t)n);
    for (int i = 0; i + 1 < n; ++i) jordan.at((size_t)i, (size_t)(i + 1)) = field->one();
    std::string ring = field->name() + "[t]/(t^" + std::to_string(n) + ")";
    return truncation_report(
        field, n, 1, ring, [&](int l) { return v_ray(field, l); },
        Matrix::identity(field, (size_t)n), jordan);
}

// ------------------------------------------------------------------ JSON

namespace {

using nlohmann::ordered_json;

FieldElem elem_from_json(const FieldPtr& f, const nlohmann::json& v) {
    if (v.is_number_integer()) return f->from_int(v.get<int64_t>());
    if (v.is_string()) return f->parse(v.get<std::string>());
    throw Error("ParseError", "matrix entries must be integers or scalar strings");
}

nlohmann::json elem_to_json(const FieldElem& e) {
    if (e.field()->kind() != FieldKind::Extension && e.scalar().is_integer())
        return e.scalar().num();
    return e.str();
}

Matrix matrix_from_json(const FieldPtr& f, const nlohmann::json& rows, int d1, int d2) {
    Matrix m(f, (size_t)d1, (size_t)d2);
    if ((int)rows.size() != d1)
        throw Error("LengthMismatch", "matrix row count differs from d1");
    for (int i = 0; i < d1; ++i) {
        if ((int)rows[(size_t)i].size() != d2)
            throw Error("LengthMismatch", "matrix column count differs from d2");
        for (int j = 0; j < d2; ++j)
            m.at((size_t)i, (size_t)j) = elem_from_json(f, rows[(size_t)i][(size_t)j]);
    }
    return m;
}

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(elem_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

KronRep kronrep_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    FieldPtr f = parse_field(j.at("field").get<std::string>());
    int d1 = j.at("d1").get<int>();
    int d2 = j.at("d2").get<int>();
    return KronRep::make(f, matrix_from_json(f, j.at("A"), d1, d2),
                         matrix_from_json(f, j.at("B"), d1, d2));
}

std::string kronrep_to_json_text(const KronRep& x) {
    ordered_json j;
    j["field"] = x.f->name();
    j["d1"] = x.d1;
    j["d2"] = x.d2;
    j["A"] = matrix_to_json(x.A);
    j["B"] = matrix_to_json(x.B);
    return j.dump(2);
}

} // namespace tamestrat

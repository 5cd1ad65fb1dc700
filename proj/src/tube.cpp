#include "tamestrat/tube.hpp"

#include <sstream>

namespace tamestrat {

std::string PruferMapSymbol::str() const {
    std::ostringstream os;
    os << "eps(" << source << " -> " << source + shift << ")";
    os << " [U" << source << "[inf] -> U" << target() << "[inf], shift " << shift
       << ", mod " << m << "]";
    return os.str();
}

PruferMapSymbol make_epsilon(int i, int j, int m) {
    if (m < 1 || i < 1 || j <= i)
        throw Error("OutOfRange", "epsilon symbol needs m >= 1 and j > i >= 1");
    PruferMapSymbol s;
    s.m = m;
    s.source = (i - 1) % m + 1;
    s.shift = j - i;
    return s;
}

PruferMapSymbol epsilon_compose(const PruferMapSymbol& f, const PruferMapSymbol& g) {
    if (f.m != g.m)
        throw Error("NotComposable", "symbols live in tubes of different rank");
    if (f.target() != g.source)
        throw Error("NotComposable",
                    "target U" + std::to_string(f.target()) + " differs from source U" +
                        std::to_string(g.source));
    PruferMapSymbol out;
    out.m = f.m;
    out.source = f.source;
    out.shift = f.shift + g.shift;
    return out;
}

int delta_winding(int r, int s) { return r < s ? 0 : 1; }

PruferMapSymbol pi(int r, int s, int m) {
    if (m < 1 || r < 1 || r > m || s < 1 || s > m)
        throw Error("OutOfRange", "pi indices must lie in 1..m");
    return make_epsilon(r, s + delta_winding(r, s) * m, m);
}

PiLaw pi_law_check(int r, int s, int t, int m) {
    PruferMapSymbol lhs = epsilon_compose(pi(r, s, m), pi(s, t, m));
    PruferMapSymbol direct = pi(r, t, m);
    PruferMapSymbol wound = epsilon_compose(pi(r, r, m), pi(r, t, m));
    bool is_direct = lhs == direct;
    bool is_wound = lhs == wound;
    if (is_direct == is_wound)
        throw Error("OutOfRange", "pi composition matched neither or both normal forms");
    return is_direct ? PiLaw::Direct : PiLaw::Wound;
}

std::vector<int> ray_composition_factors(const RayModule& ray, const Clique& clique) {
    std::vector<int> out;
    int cur = clique.normalize(ray.start);
    for (int step = 0; step < ray.length; ++step) {
        out.push_back(cur);
        cur = clique.tau_minus(cur);
    }
    return out;
}

RaySequence ray_exact_sequence(int i, int j, int n, int m) {
    if (m < 1 || i < 1 || j <= i)
        throw Error("OutOfRange", "ray sequence needs j > i >= 1");
    if (n <= j - i)
        throw Error("BadLevel", "ray level must exceed the kernel length j - i");
    RaySequence seq;
    seq.kernel = {(i - 1) % m + 1, j - i};
    seq.map = "eps(" + std::to_string(i) + " -> " + std::to_string(j) + ")[" +
              std::to_string(n) + "]";
    seq.image = {(j - 1) % m + 1, n - (j - i)};
    return seq;
}

// ------------------------------------------------------------------ Gamma

GammaRing gamma_ring(int m, int precision, FieldPtr k) {
    if (m < 1)
        throw Error("OutOfRange", "matrix rank m must be >= 1");
    if (precision < 1)
        throw Error("PrecisionTooLow", "precision must be >= 1");
    return GammaRing{m, precision, std::move(k)};
}

SeriesMatrix GammaRing::zero() const {
    return SeriesMatrix((size_t)m,
                        std::vector<TruncatedSeries>((size_t)m, TruncatedSeries(k, precision)));
}

SeriesMatrix GammaRing::identity() const {
    SeriesMatrix id = zero();
    for (int i = 0; i < m; ++i)
        id[(size_t)i][(size_t)i] = TruncatedSeries::constant(k, k->one(), precision);
    return id;
}

SeriesMatrix GammaRing::unit_matrix(int i, int j, const TruncatedSeries& entry) const {
    if (i < 1 || i > m || j < 1 || j > m)
        throw Error("OutOfRange", "unit matrix indices must lie in 1..m");
    SeriesMatrix out = zero();
    out[(size_t)(i - 1)][(size_t)(j - 1)] = entry;
    return out;
}

SeriesMatrix GammaRing::cyclic_generator() const {
    if (precision < 2 && m > 1)
        throw Error("PrecisionTooLow", "x is invisible at precision < 2");
    SeriesMatrix j = zero();
    for (int r = 0; r + 1 < m; ++r)
        j[(size_t)r][(size_t)(r + 1)] = TruncatedSeries::constant(k, k->one(), precision);
    if (m == 1)
        j[0][0] = TruncatedSeries::t_power(k, 1, precision);
    else
        j[(size_t)(m - 1)][0] = TruncatedSeries::t_power(k, 1, precision);
    return j;
}

bool GammaRing::member(const SeriesMatrix& a) const {
    if ((int)a.size() != m) return false;
    for (int i = 0; i < m; ++i) {
        if ((int)a[(size_t)i].size() != m) return false;
        for (int j = 0; j < m; ++j) {
            if (!a[(size_t)i][(size_t)j].field()->same(*k)) return false;
            if (j < i && !a[(size_t)i][(size_t)j].coeff(0).is_zero()) return false;
        }
    }
    return true;
}

SeriesMatrix GammaRing::add(const SeriesMatrix& a, const SeriesMatrix& b) const {
    SeriesMatrix out = zero();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            out[(size_t)i][(size_t)j] = a[(size_t)i][(size_t)j] + b[(size_t)i][(size_t)j];
    return out;
}

SeriesMatrix GammaRing::mul(const SeriesMatrix& a, const SeriesMatrix& b) const {
    SeriesMatrix out = zero();
    for (int i = 0; i < m; ++i)
        for (int l = 0; l < m; ++l) {
            if (a[(size_t)i][(size_t)l].is_zero_to_precision()) continue;
            for (int j = 0; j < m; ++j)
                out[(size_t)i][(size_t)j] =
                    out[(size_t)i][(size_t)j] +
                    series_mul(a[(size_t)i][(size_t)l], b[(size_t)l][(size_t)j]);
        }
    return out;
}

SeriesMatrix GammaRing::random_member(Rng& rng) const {
    SeriesMatrix out = zero();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            TruncatedSeries s = TruncatedSeries::random(k, precision, rng);
            if (j < i && !s.coeff(0).is_zero()) {
                auto c = s.coeffs();
                c[0] = k->zero();
                s = TruncatedSeries(k, std::move(c));
            }
            out[(size_t)i][(size_t)j] = s;
        }
    return out;
}

bool GammaRing::equal(const SeriesMatrix& a, const SeriesMatrix& b) const {
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (a[(size_t)i][(size_t)j] != b[(size_t)i][(size_t)j]) return false;
    return true;
}

std::string GammaRing::str(const SeriesMatrix& a) const {
    std::ostringstream os;
    for (int i = 0; i < m; ++i) {
        os << "[";
        for (int j = 0; j < m; ++j)
            os << (j ? ", " : "") << a[(size_t)i][(size_t)j].str();
        os << "]\n";
    }
    return os.str();
}

namespace {

LaurentMatrix laurent_zero(const FieldPtr& k, int m, int upper) {
    return LaurentMatrix((size_t)m,
                         std::vector<LaurentElem>((size_t)m, LaurentElem::zero_mod(k, upper)));
}

LaurentMatrix laurent_mul(const LaurentMatrix& a, const LaurentMatrix& b, const FieldPtr& k) {
    const int m = (int)a.size();
    // window bookkeeping is handled entrywise by LaurentElem arithmetic
    LaurentMatrix out((size_t)m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            LaurentElem acc = a[(size_t)i][0] * b[0][(size_t)j];
            for (int l = 1; l < m; ++l)
                acc = acc + a[(size_t)i][(size_t)l] * b[(size_t)l][(size_t)j];
            out[(size_t)i].push_back(acc);
        }
    }
    (void)k;
    return out;
}

LaurentMatrix laurent_from_series(const SeriesMatrix& a) {
    LaurentMatrix out(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j)
            out[i].push_back(LaurentElem::from_series(a[i][j]));
    return out;
}

bool laurent_equal_to_window(const LaurentMatrix& a, const LaurentMatrix& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) {
            const LaurentElem& x = a[i][j];
            const LaurentElem& y = b[i][j];
            int up = std::min(x.upper(), y.upper());
            int lo = std::min(x.lower(), y.lower());
            if (up <= lo) continue; // nothing commonly visible
            for (int p = lo; p < up; ++p)
                if (x.coeff(p) != y.coeff(p)) return false;
        }
    return true;
}

} // namespace

GammaWitnessReport gamma_localization_witness(int m, int precision, FieldPtr k) {
    if (precision < m)
        throw Error("PrecisionTooLow",
                    "witness at rank m needs precision >= m to see J^m = x");
    GammaRing g = gamma_ring(m, precision, k);
    GammaWitnessReport rep;
    rep.m = m;
    rep.precision = precision;

    SeriesMatrix j = g.cyclic_generator();
    SeriesMatrix jm = g.identity();
    for (int i = 0; i < m; ++i) jm = g.mul(jm, j);
    SeriesMatrix x_id = g.zero();
    for (int i = 0; i < m; ++i)
        x_id[(size_t)i][(size_t)i] = TruncatedSeries::t_power(k, 1, precision);
    rep.jm_equals_x_identity = g.equal(jm, x_id);

    // J^{-1} = x^{-1} J^{m-1} over Laurent matrices
    LaurentMatrix lj = laurent_from_series(j);
    LaurentMatrix jpow = laurent_from_series(g.identity());
    for (int i = 0; i + 1 < m; ++i) jpow = laurent_mul(jpow, lj, k);
    LaurentElem x_inv = LaurentElem::t_power(k, -1, precision);
    LaurentMatrix jinv = jpow;
    for (auto& row : jinv)
        for (auto& e : row) e = e * x_inv;
    LaurentMatrix lid = laurent_from_series(g.identity());
    rep.j_inverse_two_sided = laurent_equal_to_window(laurent_mul(lj, jinv, k), lid) &&
                              laurent_equal_to_window(laurent_mul(jinv, lj, k), lid);

    // every matrix unit E_{i,j}(x^z) is a J-power times a diagonal
    // idempotent: E_{i,j}(x^z) = J^{j-i+mz} E_{j,j}
    auto j_power = [&](int e) {
        LaurentMatrix acc = laurent_from_series(g.identity());
        const LaurentMatrix& base = e >= 0 ? lj : jinv;
        for (int i = 0; i < (e >= 0 ? e : -e); ++i) acc = laurent_mul(acc, base, k);
        return acc;
    };
    rep.all_witnesses_match = true;
    for (int i = 1; i <= m; ++i)
        for (int jj = 1; jj <= m; ++jj)
            for (int z = -1; z <= 1; ++z) {
                LaurentMatrix lhs = laurent_zero(k, m, precision + z);
                lhs[(size_t)(i - 1)][(size_t)(jj - 1)] =
                    LaurentElem::t_power(k, z, precision);
                LaurentMatrix ejj = laurent_zero(k, m, precision);
                ejj[(size_t)(jj - 1)][(size_t)(jj - 1)] =
                    LaurentElem::t_power(k, 0, precision);
                LaurentMatrix rhs = laurent_mul(j_power(jj - i + m * z), ejj, k);
                bool ok = laurent_equal_to_window(lhs, rhs);
                rep.witness.push_back({i, jj, z, ok});
                rep.all_witnesses_match = rep.all_witnesses_match && ok;
            }
    return rep;
}

} // namespace tamestrat

#include "tamestrat/series.hpp"

#include <algorithm>
#include <sstream>

namespace tamestrat {

TruncatedSeries::TruncatedSeries(FieldPtr field, int precision)
    : f_(std::move(field)) {
    if (precision < 1)
        throw Error("PrecisionTooLow", "series precision must be >= 1");
    c_.assign((size_t)precision, f_->zero());
}

TruncatedSeries::TruncatedSeries(FieldPtr field, std::vector<FieldElem> coeffs)
    : f_(std::move(field)), c_(std::move(coeffs)) {
    if (c_.empty())
        throw Error("PrecisionTooLow", "series precision must be >= 1");
    for (auto& c : c_) Field::require_same(c.field(), f_);
}

TruncatedSeries TruncatedSeries::constant(FieldPtr field, const FieldElem& c, int precision) {
    TruncatedSeries s(field, precision);
    s.c_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::from_ints(FieldPtr field, const std::vector<int64_t>& coeffs) {
    std::vector<FieldElem> c;
    c.reserve(coeffs.size());
    for (int64_t v : coeffs) c.push_back(field->from_int(v));
    return TruncatedSeries(std::move(field), std::move(c));
}

TruncatedSeries TruncatedSeries::t_power(FieldPtr field, int n, int precision) {
    TruncatedSeries s(field, precision);
    if (n < 0 || n >= precision)
        throw Error("PrecisionTooLow", "t^n outside the precision window");
    s.c_[(size_t)n] = field->one();
    return s;
}

TruncatedSeries TruncatedSeries::random(FieldPtr field, int precision, Rng& rng) {
    TruncatedSeries s(field, precision);
    for (auto& c : s.c_) c = field->random(rng);
    return s;
}

TruncatedSeries TruncatedSeries::random_unit(FieldPtr field, int precision, Rng& rng) {
    TruncatedSeries s = random(field, precision, rng);
    while (s.c_[0].is_zero()) s.c_[0] = field->random(rng);
    return s;
}

FieldElem TruncatedSeries::coeff(int i) const {
    if (i < 0 || i >= precision()) return f_->zero();
    return c_[(size_t)i];
}

bool TruncatedSeries::is_zero_to_precision() const {
    for (auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

TruncatedSeries TruncatedSeries::truncated(int precision) const {
    if (precision < 1 || precision > (int)c_.size())
        throw Error("PrecisionTooLow", "cannot extend a truncated series");
    TruncatedSeries s = *this;
    s.c_.resize((size_t)precision);
    return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    Field::require_same(a.f_, b.f_);
    int n = std::min(a.precision(), b.precision());
    TruncatedSeries out(a.f_, n);
    for (int i = 0; i < n; ++i) out.c_[i] = a.c_[i] + b.c_[i];
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    Field::require_same(a.f_, b.f_);
    int n = std::min(a.precision(), b.precision());
    TruncatedSeries out(a.f_, n);
    for (int i = 0; i < n; ++i) out.c_[i] = a.c_[i] - b.c_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!a.f_ || !b.f_) return !a.f_ && !b.f_;
    if (!a.f_->same(*b.f_) || a.precision() != b.precision()) return false;
    for (int i = 0; i < a.precision(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

std::string TruncatedSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < precision(); ++i) {
        if (c_[i].is_zero()) continue;
        std::string cs = c_[i].str();
        if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
        std::string term;
        if (i == 0) term = cs;
        else {
            term = (cs == "1") ? "" : cs + "*";
            term += "t";
            if (i > 1) term += "^" + std::to_string(i);
        }
        os << (first ? "" : " + ") << term;
        first = false;
    }
    if (first) os << "0";
    os << " + O(t^" << precision() << ")";
    return os.str();
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    Field::require_same(a.field(), b.field());
    int n = std::min(a.precision(), b.precision());
    std::vector<FieldElem> acc((size_t)n, a.field()->zero());
    for (int i = 0; i < n; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j < n; ++j)
            acc[(size_t)(i + j)] += a.coeff(i) * b.coeff(j);
    }
    return TruncatedSeries(a.field(), std::move(acc));
}

TruncatedSeries series_inv(const TruncatedSeries& a) {
    if (a.is_zero_to_precision())
        throw Error("ZeroElement", "inverse of a series that is zero to precision");
    if (a.coeff(0).is_zero())
        throw Error("NotUnit", "power-series inverse needs a unit constant term");
    const int n = a.precision();
    std::vector<FieldElem> b((size_t)n, a.field()->zero());
    FieldElem c0_inv = a.coeff(0).inverse();
    b[0] = c0_inv;
    for (int k = 1; k < n; ++k) {
        FieldElem s = a.field()->zero();
        for (int i = 1; i <= k; ++i) s += a.coeff(i) * b[(size_t)(k - i)];
        b[(size_t)k] = -(s * c0_inv);
    }
    return TruncatedSeries(a.field(), std::move(b));
}

DvrDecomposition dvr_decompose(const TruncatedSeries& a) {
    int v = 0;
    while (v < a.precision() && a.coeff(v).is_zero()) ++v;
    if (v == a.precision())
        throw Error("ZeroElement", "valuation exceeds the precision window");
    std::vector<FieldElem> u(a.coeffs().begin() + v, a.coeffs().end());
    return {v, TruncatedSeries(a.field(), std::move(u))};
}

TruncatedSeries series_div(const TruncatedSeries& b, const TruncatedSeries& a) {
    auto da = dvr_decompose(a);
    if (b.is_zero_to_precision()) {
        int n = std::min(b.precision() - da.valuation, da.unit.precision());
        if (n < 1)
            throw Error("PrecisionTooLow", "quotient has no representable coefficients");
        return TruncatedSeries(b.field(), n);
    }
    auto db = dvr_decompose(b);
    if (db.valuation < da.valuation)
        throw Error("NotUnit", "divisor valuation exceeds dividend valuation");
    TruncatedSeries q = series_mul(db.unit, series_inv(da.unit));
    int shift = db.valuation - da.valuation;
    int n = q.precision() + shift;
    std::vector<FieldElem> c((size_t)n, b.field()->zero());
    for (int i = 0; i < q.precision(); ++i) c[(size_t)(i + shift)] = q.coeff(i);
    return TruncatedSeries(b.field(), std::move(c));
}

// ----------------------------------------------------------- LaurentElem

LaurentElem::LaurentElem(FieldPtr field, int lower, std::vector<FieldElem> coeffs)
    : f_(std::move(field)), lower_(lower), c_(std::move(coeffs)) {
    for (auto& c : c_) Field::require_same(c.field(), f_);
    normalize();
}

void LaurentElem::normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead > 0) {
        lower_ += (int)lead;
        c_.erase(c_.begin(), c_.begin() + (long)lead);
    }
}

LaurentElem LaurentElem::from_series(const TruncatedSeries& s) {
    return LaurentElem(s.field(), 0, s.coeffs());
}

LaurentElem LaurentElem::zero_mod(FieldPtr field, int upper) {
    LaurentElem z;
    z.f_ = std::move(field);
    z.lower_ = upper;
    return z;
}

LaurentElem LaurentElem::t_power(FieldPtr field, int n, int window) {
    std::vector<FieldElem> c((size_t)window, field->zero());
    c[0] = field->one();
    return LaurentElem(std::move(field), n, std::move(c));
}

LaurentElem LaurentElem::constant(FieldPtr field, const FieldElem& c, int window) {
    std::vector<FieldElem> v((size_t)window, field->zero());
    v[0] = c;
    return LaurentElem(std::move(field), 0, std::move(v));
}

FieldElem LaurentElem::coeff(int power) const {
    if (power < lower_ || power >= upper()) return f_->zero();
    return c_[(size_t)(power - lower_)];
}

LaurentElem operator+(const LaurentElem& a, const LaurentElem& b) {
    Field::require_same(a.f_, b.f_);
    int up = std::min(a.upper(), b.upper());
    int lo = std::min(a.lower_, b.lower_);
    if (up <= lo) return LaurentElem::zero_mod(a.f_, up);
    std::vector<FieldElem> c((size_t)(up - lo), a.f_->zero());
    for (int p = lo; p < up; ++p) c[(size_t)(p - lo)] = a.coeff(p) + b.coeff(p);
    return LaurentElem(a.f_, lo, std::move(c));
}

LaurentElem operator-(const LaurentElem& a, const LaurentElem& b) {
    return a + (-b);
}

LaurentElem LaurentElem::operator-() const {
    LaurentElem out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

LaurentElem operator*(const LaurentElem& a, const LaurentElem& b) {
    Field::require_same(a.f_, b.f_);
    // product window: result known modulo t^min(la+ub, lb+ua)
    if (a.c_.empty() || b.c_.empty()) {
        int up = std::min(a.lower_ + b.upper(), b.lower_ + a.upper());
        return LaurentElem::zero_mod(a.f_, up);
    }
    int lo = a.lower_ + b.lower_;
    int up = std::min(a.lower_ + b.upper(), b.lower_ + a.upper());
    std::vector<FieldElem> c((size_t)(up - lo), a.f_->zero());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            size_t k = i + j;
            if ((int)k >= up - lo) break;
            c[k] += a.c_[i] * b.c_[j];
        }
    }
    return LaurentElem(a.f_, lo, std::move(c));
}

LaurentElem LaurentElem::inverse() const {
    if (c_.empty())
        throw Error("ZeroElement", "inverse of a Laurent element that is zero to precision");
    TruncatedSeries unit(f_, c_);
    TruncatedSeries inv = series_inv(unit);
    return LaurentElem(f_, -lower_, inv.coeffs());
}

LaurentElem laurent_inv(const LaurentElem& a) { return a.inverse(); }

bool operator==(const LaurentElem& a, const LaurentElem& b) {
    if (!a.f_ || !b.f_) return !a.f_ && !b.f_;
    if (!a.f_->same(*b.f_)) return false;
    if (a.lower_ != b.lower_ || a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

std::string LaurentElem::str() const {
    std::ostringstream os;
    bool first = true;
    for (int p = lower_; p < upper(); ++p) {
        FieldElem c = coeff(p);
        if (c.is_zero()) continue;
        std::string cs = c.str();
        if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
        std::string term;
        if (p == 0) term = cs;
        else {
            term = (cs == "1") ? "" : cs + "*";
            term += "t";
            if (p != 1) term += "^" + std::to_string(p);
        }
        os << (first ? "" : " + ") << term;
        first = false;
    }
    if (first) os << "0";
    os << " + O(t^" << upper() << ")";
    return os.str();
}

} // namespace tamestrat

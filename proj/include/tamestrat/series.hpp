#ifndef TAMESTRAT_SERIES_HPP
#define TAMESTRAT_SERIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "tamestrat/field.hpp"

namespace tamestrat {

// Power series in t over a scalar field, stored to explicit precision N:
// coefficients c_0..c_{N-1}, the value known modulo t^N. Precision is
// carried per value and propagates as the minimum through arithmetic.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(FieldPtr field, int precision); // zero to precision
    TruncatedSeries(FieldPtr field, std::vector<FieldElem> coeffs); // N = size
    static TruncatedSeries constant(FieldPtr field, const FieldElem& c, int precision);
    static TruncatedSeries from_ints(FieldPtr field, const std::vector<int64_t>& coeffs);
    static TruncatedSeries t_power(FieldPtr field, int n, int precision);
    static TruncatedSeries random(FieldPtr field, int precision, Rng& rng);
    static TruncatedSeries random_unit(FieldPtr field, int precision, Rng& rng);

    const FieldPtr& field() const { return f_; }
    int precision() const { return (int)c_.size(); }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    FieldElem coeff(int i) const; // zero outside the stored window

    // all stored coefficients zero ("zero to precision N")
    bool is_zero_to_precision() const;
    bool is_unit() const { return !c_.empty() && !c_[0].is_zero(); }

    TruncatedSeries truncated(int precision) const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries operator-() const;

    // exact coefficient equality at equal precision
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    std::string str() const; // c0 + c1*t + ... + O(t^N)

private:
    FieldPtr f_;
    std::vector<FieldElem> c_;
};

// Cauchy product truncated at min precision
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
// power-series inverse; NotUnit when the constant term vanishes but some
// coefficient does not, ZeroElement when the value is zero to precision
TruncatedSeries series_inv(const TruncatedSeries& a);
// a = t^n * u with u a unit determined to precision N - n
struct DvrDecomposition {
    int valuation;
    TruncatedSeries unit;
};
DvrDecomposition dvr_decompose(const TruncatedSeries& a);
// quotient b / a for valuation(a) <= valuation(b); exact witness of the
// ideal chain property of discrete valuation rings
TruncatedSeries series_div(const TruncatedSeries& b, const TruncatedSeries& a);

// Laurent element: coefficients for t^lower .. t^(upper-1), value known
// modulo t^upper. Normalized so the stored leading coefficient is nonzero
// (zero elements keep an empty window with lower == upper).
class LaurentElem {
public:
    LaurentElem() = default;
    LaurentElem(FieldPtr field, int lower, std::vector<FieldElem> coeffs);
    static LaurentElem from_series(const TruncatedSeries& s);
    static LaurentElem zero_mod(FieldPtr field, int upper);
    static LaurentElem t_power(FieldPtr field, int n, int window);
    static LaurentElem constant(FieldPtr field, const FieldElem& c, int window);

    const FieldPtr& field() const { return f_; }
    int lower() const { return lower_; } // order bound; exact order if nonzero
    int upper() const { return lower_ + (int)c_.size(); }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    FieldElem coeff(int power) const;

    bool is_zero_to_precision() const { return c_.empty(); }
    bool is_integral() const { return lower_ >= 0; }

    friend LaurentElem operator+(const LaurentElem& a, const LaurentElem& b);
    friend LaurentElem operator-(const LaurentElem& a, const LaurentElem& b);
    friend LaurentElem operator*(const LaurentElem& a, const LaurentElem& b);
    LaurentElem operator-() const;
    LaurentElem inverse() const; // ZeroElement on zero-to-precision

    friend bool operator==(const LaurentElem& a, const LaurentElem& b);
    friend bool operator!=(const LaurentElem& a, const LaurentElem& b) { return !(a == b); }

    std::string str() const;

private:
    void normalize();

    FieldPtr f_;
    int lower_ = 0;
    std::vector<FieldElem> c_;
};

LaurentElem laurent_inv(const LaurentElem& a);

} // namespace tamestrat

#endif

#ifndef TAMESTRAT_POLY_HPP
#define TAMESTRAT_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tamestrat/polyvec.hpp"

namespace tamestrat {

enum class Tri { True, False, Unknown };

// Univariate polynomial in canonical form: low-degree-first coefficients,
// trailing zeros trimmed, the zero polynomial stored as the empty vector.
class Poly {
public:
    Poly() = default;
    Poly(FieldPtr field, std::vector<FieldElem> coeffs);

    static Poly zero(FieldPtr field) { return Poly(std::move(field), {}); }
    static Poly constant(FieldPtr field, const FieldElem& c);
    static Poly x(FieldPtr field); // the monomial x
    static Poly from_ints(FieldPtr field, const std::vector<int64_t>& coeffs);

    const FieldPtr& field() const { return field_; }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    int degree() const { return (int)c_.size() - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    bool is_unit() const { return degree() == 0; }
    FieldElem coeff(int i) const;
    FieldElem leading() const;

    Poly monic() const; // idempotent normalization; zero stays zero

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly pow(int e) const;

    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    static Poly gcd(const Poly& a, const Poly& b); // monic
    bool divides(const Poly& other) const;
    FieldElem eval(const FieldElem& at) const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    bool operator<(const Poly& b) const; // lexicographic on (degree, coeff strings)

    // grammar: c0 + c1*x + c2*x^2 + ..., rational coefficients as a/b
    std::string str() const;
    static Poly parse(FieldPtr field, const std::string& text);

private:
    FieldPtr field_;
    std::vector<FieldElem> c_;
};

// exact irreducibility test:
//   Fp      — trial division by all monic polynomials of degree <= deg/2
//   Q       — exact for degree <= 3 (rational root test), Unknown beyond
Tri irreducible(const Poly& p);

// factorization of f over a fixed set of monic irreducibles; succeeds iff
// f = unit * prod p_i^{e_i} with every p_i in delta
std::optional<std::map<Poly, int>> factor_over(const Poly& f,
                                               const std::vector<Poly>& delta);

// extension field k[x]/(p(x)); p must be monic and certified irreducible
FieldPtr make_ext_field(const Poly& p);

} // namespace tamestrat

#endif

#ifndef TAMESTRAT_FIELD_HPP
#define TAMESTRAT_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tamestrat/error.hpp"
#include "tamestrat/rational.hpp"
#include "tamestrat/rng.hpp"

namespace tamestrat {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

enum class FieldKind { Prime, Rationals, Extension };

// Value in a concrete scalar field: F_p, Q, or k[x]/(p(x)) over one of those.
// For base fields the payload is a single Rational (an integer residue for
// F_p); extension elements hold their coordinate vector over the base field.
class FieldElem {
public:
    FieldElem() = default;

    const FieldPtr& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElem operator-() const;
    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
    FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
    FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }

    FieldElem inverse() const; // throws ZeroElement on zero
    FieldElem pow(int64_t e) const;

    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    std::string str() const;

    // base-field payload; extension coordinates over the base field
    const Rational& scalar() const { return scalar_; }
    const std::vector<FieldElem>& coords() const { return coords_; }

private:
    friend class Field;
    FieldPtr field_;
    Rational scalar_;
    std::vector<FieldElem> coords_;
};

class Field : public std::enable_shared_from_this<Field> {
public:
    static FieldPtr prime(int64_t p);   // validates primality by trial division
    static FieldPtr rationals();
    // modulus: monic coefficient vector over `base`, low degree first,
    // length deg+1, deg >= 1. Irreducibility is the caller's obligation
    // (checked in make_ext_field).
    static FieldPtr extension(FieldPtr base, std::vector<FieldElem> modulus,
                              std::string name);

    FieldKind kind() const { return kind_; }
    int64_t prime_modulus() const { return p_; }
    const FieldPtr& base() const { return base_; }
    const std::vector<FieldElem>& modulus() const { return modulus_; }
    int extension_degree() const { return kind_ == FieldKind::Extension
                                       ? (int)modulus_.size() - 1 : 1; }
    const std::string& name() const { return name_; }

    bool same(const Field& other) const;
    static void require_same(const FieldPtr& a, const FieldPtr& b);

    // finite field size, empty for Q-based fields
    std::optional<uint64_t> size() const;

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(int64_t n) const;
    FieldElem from_rational(const Rational& q) const; // base-field kinds only
    FieldElem from_coords(std::vector<FieldElem> coords) const; // extension
    FieldElem random(Rng& rng) const;
    std::vector<FieldElem> all_elements() const; // finite fields only

    FieldElem parse(const std::string& text) const;

private:
    Field() = default;

    friend class FieldElem;
    friend FieldElem operator+(const FieldElem&, const FieldElem&);
    friend FieldElem operator-(const FieldElem&, const FieldElem&);
    friend FieldElem operator*(const FieldElem&, const FieldElem&);
    FieldElem wrap(Rational r) const;
    FieldElem reduce_ext(std::vector<FieldElem> coords) const;

    FieldKind kind_ = FieldKind::Rationals;
    int64_t p_ = 0;
    FieldPtr base_;
    std::vector<FieldElem> modulus_;
    std::string name_;
};

// descriptor strings: "Fp(3)", "Q", "Fp(2)[x]/(x^2+x+1)"
FieldPtr parse_field(const std::string& text);

} // namespace tamestrat

#endif

#include "tamestrat/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace tamestrat {

Poly::Poly(FieldPtr field, std::vector<FieldElem> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    for (auto& c : c_) Field::require_same(c.field(), field_);
    polyvec::trim(c_);
}

Poly Poly::constant(FieldPtr field, const FieldElem& c) {
    return Poly(std::move(field), {c});
}

Poly Poly::x(FieldPtr field) {
    auto z = field->zero();
    auto o = field->one();
    return Poly(std::move(field), {z, o});
}

Poly Poly::from_ints(FieldPtr field, const std::vector<int64_t>& coeffs) {
    std::vector<FieldElem> c;
    c.reserve(coeffs.size());
    for (int64_t v : coeffs) c.push_back(field->from_int(v));
    return Poly(std::move(field), std::move(c));
}

FieldElem Poly::coeff(int i) const {
    if (i < 0 || i >= (int)c_.size()) return field_->zero();
    return c_[i];
}

FieldElem Poly::leading() const {
    if (c_.empty())
        throw Error("ZeroPolynomial", "leading coefficient of zero");
    return c_.back();
}

Poly Poly::monic() const {
    if (c_.empty() || c_.back().is_one()) return *this;
    return Poly(field_, polyvec::scale(c_, c_.back().inverse()));
}

Poly operator+(const Poly& a, const Poly& b) {
    Field::require_same(a.field_, b.field_);
    return Poly(a.field_, polyvec::add(a.c_, b.c_, a.field_));
}

Poly operator-(const Poly& a, const Poly& b) {
    Field::require_same(a.field_, b.field_);
    return Poly(a.field_, polyvec::sub(a.c_, b.c_, a.field_));
}

Poly operator*(const Poly& a, const Poly& b) {
    Field::require_same(a.field_, b.field_);
    return Poly(a.field_, polyvec::mul(a.c_, b.c_, a.field_));
}

Poly Poly::operator-() const {
    std::vector<FieldElem> c;
    c.reserve(c_.size());
    for (auto& x : c_) c.push_back(-x);
    return Poly(field_, std::move(c));
}

Poly Poly::pow(int e) const {
    Poly acc = Poly::constant(field_, field_->one());
    Poly b = *this;
    while (e > 0) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    Field::require_same(a.field_, b.field_);
    auto [q, r] = polyvec::divmod(a.c_, b.c_, a.field_);
    return {Poly(a.field_, std::move(q)), Poly(a.field_, std::move(r))};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Field::require_same(a.field_, b.field_);
    return Poly(a.field_, polyvec::gcd_monic(a.c_, b.c_, a.field_));
}

bool Poly::divides(const Poly& other) const {
    if (is_zero()) return other.is_zero();
    return divmod(other, *this).second.is_zero();
}

FieldElem Poly::eval(const FieldElem& at) const {
    FieldElem acc = field_->zero();
    for (int i = (int)c_.size() - 1; i >= 0; --i)
        acc = acc * at + c_[i];
    return acc;
}

bool operator==(const Poly& a, const Poly& b) {
    if (!a.field_ || !b.field_) return a.c_.empty() && b.c_.empty();
    if (!a.field_->same(*b.field_)) return false;
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

bool Poly::operator<(const Poly& b) const {
    if (degree() != b.degree()) return degree() < b.degree();
    for (int i = degree(); i >= 0; --i) {
        std::string l = coeff(i).str(), r = b.coeff(i).str();
        if (l != r) return l < r;
    }
    return false;
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        std::string cs = c_[i].str();
        std::string term;
        if (i == 0) {
            term = cs;
        } else {
            if (cs == "1") term = "";
            else if (cs == "-1") term = "-";
            else term = cs + "*";
            term += "x";
            if (i > 1) term += "^" + std::to_string(i);
        }
        out += first ? term : " + " + term;
        first = false;
    }
    return first ? "0" : out;
}

namespace {

// recursive-descent parser for the coefficient grammar; accepts compact
// inputs like "x^2+1", "2*x", "-x + 1/2"
struct PolyParser {
    const std::string& s;
    size_t pos = 0;
    FieldPtr field;

    void skip() { while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos; }

    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    int64_t integer() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (start == pos)
            throw Error("ParseError", "expected digits in '" + s + "' at " + std::to_string(pos));
        return std::stoll(s.substr(start, pos - start));
    }

    // term := [sign] [coeff] [* ] [x [^ exp]]
    Poly term(bool negate) {
        skip();
        bool has_coeff = false;
        Rational coeff(1);
        if (pos < s.size() && (std::isdigit((unsigned char)s[pos]))) {
            int64_t n = integer();
            int64_t d = 1;
            if (eat('/')) d = integer();
            coeff = Rational(n, d);
            has_coeff = true;
        }
        eat('*');
        int exp = 0;
        skip();
        if (pos < s.size() && s[pos] == 'x') {
            ++pos;
            exp = 1;
            if (eat('^')) exp = (int)integer();
        } else if (!has_coeff) {
            throw Error("ParseError", "expected term in '" + s + "' at " + std::to_string(pos));
        }
        if (negate) coeff = -coeff;
        std::vector<FieldElem> c(exp + 1, field->zero());
        c[exp] = field->from_rational(coeff);
        return Poly(field, std::move(c));
    }

    Poly parse() {
        Poly acc = Poly::zero(field);
        bool neg = eat('-');
        acc = acc + term(neg);
        while (true) {
            skip();
            if (pos >= s.size()) break;
            if (eat('+')) acc = acc + term(eat('-'));
            else if (eat('-')) acc = acc + term(true);
            else
                throw Error("ParseError", "unexpected '" + s.substr(pos, 1) + "' in '" + s + "'");
        }
        return acc;
    }
};

} // namespace

Poly Poly::parse(FieldPtr field, const std::string& text) {
    PolyParser p{text, 0, std::move(field)};
    return p.parse();
}

namespace {

// enumerate monic polynomials of exact degree d over Fp
std::vector<Poly> monic_of_degree(const FieldPtr& f, int d) {
    auto elems = f->all_elements();
    std::vector<Poly> out;
    std::vector<size_t> idx(d, 0);
    while (true) {
        std::vector<FieldElem> c;
        c.reserve(d + 1);
        for (int i = 0; i < d; ++i) c.push_back(elems[idx[i]]);
        c.push_back(f->one());
        out.push_back(Poly(f, std::move(c)));
        int p = 0;
        while (p < d && ++idx[p] == elems.size()) idx[p++] = 0;
        if (p == d) break;
    }
    return out;
}

// all positive divisors of |n|
std::vector<int64_t> divisors(int64_t n) {
    n = n < 0 ? -n : n;
    std::vector<int64_t> out;
    for (int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    return out;
}

Tri irreducible_over_q(const Poly& p) {
    const int deg = p.degree();
    if (deg == 1) return Tri::True;
    if (deg > 3) return Tri::Unknown;
    // degree 2 or 3: irreducible over Q iff no rational root.
    // Clear denominators, then candidates are +-(divisor of a0)/(divisor of an).
    int64_t lcm = 1;
    for (auto& c : p.coeffs())
        lcm = std::lcm(lcm, c.scalar().den());
    std::vector<Rational> ic;
    for (auto& c : p.coeffs()) ic.push_back(c.scalar() * Rational(lcm));
    int64_t a0 = ic.front().num(), an = ic.back().num();
    if (a0 == 0) return Tri::False; // x divides
    for (int64_t dn : divisors(a0))
        for (int64_t dd : divisors(an))
            for (int sign : {1, -1}) {
                Rational root(sign * dn, dd);
                if (p.eval(p.field()->from_rational(root)).is_zero())
                    return Tri::False;
            }
    return Tri::True;
}

} // namespace

Tri irreducible(const Poly& p) {
    if (p.is_zero())
        throw Error("ZeroPolynomial", "irreducibility of the zero polynomial");
    if (!p.is_monic())
        throw Error("NotMonic", "irreducibility test expects a monic polynomial");
    const int deg = p.degree();
    if (deg < 1) return Tri::False; // units are not irreducible
    const auto& f = p.field();
    if (f->kind() == FieldKind::Rationals) return irreducible_over_q(p);
    if (deg == 1) return Tri::True;
    for (int d = 1; d <= deg / 2; ++d)
        for (const auto& q : monic_of_degree(f, d))
            if (q.divides(p)) return Tri::False;
    return Tri::True;
}

std::optional<std::map<Poly, int>> factor_over(const Poly& f,
                                               const std::vector<Poly>& delta) {
    if (f.is_zero())
        throw Error("ZeroPolynomial", "factor_over of the zero polynomial");
    std::map<Poly, int> result;
    Poly rest = f;
    for (const auto& p : delta) {
        int e = 0;
        while (p.divides(rest) && !rest.is_unit()) {
            rest = Poly::divmod(rest, p).first;
            ++e;
        }
        if (e > 0) result[p] = e;
    }
    if (rest.is_unit()) return result;
    return std::nullopt;
}

FieldElem Field::parse(const std::string& text) const {
    auto self = shared_from_this();
    if (kind_ == FieldKind::Extension) {
        Poly p = Poly::parse(base_, text);
        return from_coords(p.coeffs());
    }
    Poly p = Poly::parse(self, text);
    if (p.degree() > 0)
        throw Error("ParseError", "scalar expected, got '" + text + "'");
    return p.is_zero() ? zero() : p.coeff(0);
}

FieldPtr parse_field(const std::string& text) {
    auto slash = text.find("[x]/(");
    std::string base_part = slash == std::string::npos ? text : text.substr(0, slash);
    FieldPtr base;
    if (base_part == "Q" || base_part == "q") {
        base = Field::rationals();
    } else if (base_part.rfind("Fp(", 0) == 0 && base_part.back() == ')') {
        base = Field::prime(std::stoll(base_part.substr(3, base_part.size() - 4)));
    } else {
        throw Error("ParseError", "unknown field descriptor '" + text + "'");
    }
    if (slash == std::string::npos) return base;
    if (text.back() != ')')
        throw Error("ParseError", "malformed extension descriptor '" + text + "'");
    std::string mod = text.substr(slash + 5, text.size() - slash - 6);
    return make_ext_field(Poly::parse(base, mod).monic());
}

FieldPtr make_ext_field(const Poly& p) {
    if (p.is_zero() || !p.is_monic())
        throw Error("NotMonic", "extension modulus must be monic");
    Tri irr = irreducible(p);
    if (irr == Tri::False)
        throw Error("NotIrreducible", "modulus " + p.str() + " is reducible");
    if (irr == Tri::Unknown)
        throw Error("NotIrreducible",
                    "irreducibility of " + p.str() + " not decidable here (degree >= 4 over Q)");
    std::string name = p.field()->name() + "[x]/(" + p.str() + ")";
    return Field::extension(p.field(), p.coeffs(), std::move(name));
}

} // namespace tamestrat

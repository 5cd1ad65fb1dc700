#include "tamestrat/field.hpp"

#include <algorithm>
#include <sstream>

#include "tamestrat/polyvec.hpp"

namespace tamestrat {

namespace {

bool is_prime_u64(int64_t p) {
    if (p < 2) return false;
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int64_t mod_pos(int64_t a, int64_t p) {
    int64_t r = a % p;
    return r < 0 ? r + p : r;
}

int64_t mod_inverse(int64_t a, int64_t p) {
    // extended Euclid; a nonzero mod p
    int64_t t = 0, new_t = 1, r = p, new_r = mod_pos(a, p);
    while (new_r != 0) {
        int64_t q = r / new_r;
        int64_t ht = t - q * new_t;
        t = new_t;
        new_t = ht;
        int64_t hr = r - q * new_r;
        r = new_r;
        new_r = hr;
    }
    if (r != 1)
        throw Error("ZeroElement", "element not invertible mod p");
    return mod_pos(t, p);
}

} // namespace

// ---------------------------------------------------------------- Field

FieldPtr Field::prime(int64_t p) {
    if (!is_prime_u64(p))
        throw Error("NotPrime", "Fp modulus " + std::to_string(p) + " is not prime");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::Prime;
    f->p_ = p;
    f->name_ = "Fp(" + std::to_string(p) + ")";
    return f;
}

FieldPtr Field::rationals() {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::Rationals;
    f->name_ = "Q";
    return f;
}

FieldPtr Field::extension(FieldPtr base, std::vector<FieldElem> modulus,
                          std::string name) {
    if (!base || base->kind() == FieldKind::Extension)
        throw Error("NotSupported", "extension fields are built over Fp or Q only");
    polyvec::trim(modulus);
    if (polyvec::degree(modulus) < 1)
        throw Error("NotMonic", "extension modulus must have degree >= 1");
    if (!modulus.back().is_one())
        throw Error("NotMonic", "extension modulus must be monic");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::Extension;
    f->base_ = base;
    f->modulus_ = std::move(modulus);
    f->name_ = std::move(name);
    return f;
}

bool Field::same(const Field& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
    case FieldKind::Prime: return p_ == o.p_;
    case FieldKind::Rationals: return true;
    case FieldKind::Extension:
        if (!base_->same(*o.base_)) return false;
        if (modulus_.size() != o.modulus_.size()) return false;
        for (size_t i = 0; i < modulus_.size(); ++i)
            if (modulus_[i] != o.modulus_[i]) return false;
        return true;
    }
    return false;
}

void Field::require_same(const FieldPtr& a, const FieldPtr& b) {
    if (!a || !b || !a->same(*b))
        throw Error("FieldMismatch", "operands live in different scalar fields");
}

std::optional<uint64_t> Field::size() const {
    switch (kind_) {
    case FieldKind::Prime: return (uint64_t)p_;
    case FieldKind::Rationals: return std::nullopt;
    case FieldKind::Extension: {
        auto b = base_->size();
        if (!b) return std::nullopt;
        uint64_t s = 1;
        for (int i = 0; i < extension_degree(); ++i) s *= *b;
        return s;
    }
    }
    return std::nullopt;
}

FieldElem Field::wrap(Rational r) const {
    FieldElem e;
    e.field_ = shared_from_this();
    if (kind_ == FieldKind::Prime)
        e.scalar_ = Rational(mod_pos(r.num(), p_)); // r integral for Fp
    else
        e.scalar_ = r;
    return e;
}

FieldElem Field::zero() const { return from_int(0); }
FieldElem Field::one() const { return from_int(1); }

FieldElem Field::from_int(int64_t n) const {
    if (kind_ == FieldKind::Extension) {
        std::vector<FieldElem> c(extension_degree(), base_->zero());
        c[0] = base_->from_int(n);
        return from_coords(std::move(c));
    }
    if (kind_ == FieldKind::Prime) return wrap(Rational(mod_pos(n, p_)));
    return wrap(Rational(n));
}

FieldElem Field::from_rational(const Rational& q) const {
    if (kind_ == FieldKind::Rationals) return wrap(q);
    if (kind_ == FieldKind::Prime) {
        int64_t n = mod_pos(q.num(), p_);
        if (q.den() != 1) n = mod_pos(n * mod_inverse(q.den(), p_), p_);
        return wrap(Rational(n));
    }
    throw Error("NotSupported", "rational literal into extension field");
}

FieldElem Field::from_coords(std::vector<FieldElem> coords) const {
    if (kind_ != FieldKind::Extension)
        throw Error("NotSupported", "coordinate vector into a base field");
    for (auto& c : coords) Field::require_same(c.field(), base_);
    return reduce_ext(std::move(coords));
}

FieldElem Field::reduce_ext(std::vector<FieldElem> coords) const {
    const int deg = extension_degree();
    if ((int)coords.size() >= (int)modulus_.size()) {
        auto [q, r] = polyvec::divmod(coords, modulus_, base_);
        (void)q;
        coords = std::move(r);
    }
    coords.resize(deg, base_->zero());
    FieldElem e;
    e.field_ = shared_from_this();
    e.coords_ = std::move(coords);
    return e;
}

FieldElem Field::random(Rng& rng) const {
    switch (kind_) {
    case FieldKind::Prime: return wrap(Rational((int64_t)rng.uniform((uint64_t)p_)));
    case FieldKind::Rationals: {
        int64_t n = rng.range(-4, 4);
        int64_t d = rng.range(1, 4);
        return wrap(Rational(n, d));
    }
    case FieldKind::Extension: {
        std::vector<FieldElem> c;
        c.reserve(extension_degree());
        for (int i = 0; i < extension_degree(); ++i) c.push_back(base_->random(rng));
        return from_coords(std::move(c));
    }
    }
    return zero();
}

std::vector<FieldElem> Field::all_elements() const {
    auto sz = size();
    if (!sz)
        throw Error("NotSupported", "cannot enumerate an infinite field");
    std::vector<FieldElem> out;
    if (kind_ == FieldKind::Prime) {
        for (int64_t v = 0; v < p_; ++v) out.push_back(from_int(v));
        return out;
    }
    // extension over Fp: odometer over base coordinates
    auto base_elems = base_->all_elements();
    const int deg = extension_degree();
    std::vector<size_t> idx(deg, 0);
    while (true) {
        std::vector<FieldElem> c;
        for (int i = 0; i < deg; ++i) c.push_back(base_elems[idx[i]]);
        out.push_back(from_coords(std::move(c)));
        int pos = 0;
        while (pos < deg && ++idx[pos] == base_elems.size()) idx[pos++] = 0;
        if (pos == deg) break;
    }
    return out;
}

// ------------------------------------------------------------- FieldElem

bool FieldElem::is_zero() const {
    if (!field_) return true;
    if (field_->kind() == FieldKind::Extension) {
        for (auto& c : coords_)
            if (!c.is_zero()) return false;
        return true;
    }
    return scalar_.is_zero();
}

bool FieldElem::is_one() const {
    if (!field_) return false;
    if (field_->kind() == FieldKind::Extension) {
        if (!coords_[0].is_one()) return false;
        for (size_t i = 1; i < coords_.size(); ++i)
            if (!coords_[i].is_zero()) return false;
        return true;
    }
    return scalar_.is_one();
}

FieldElem FieldElem::operator-() const {
    if (field_->kind() == FieldKind::Extension) {
        std::vector<FieldElem> c;
        c.reserve(coords_.size());
        for (auto& x : coords_) c.push_back(-x);
        return field_->from_coords(std::move(c));
    }
    return field_->wrap(-scalar_);
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    Field::require_same(a.field_, b.field_);
    if (a.field_->kind() == FieldKind::Extension) {
        std::vector<FieldElem> c;
        c.reserve(a.coords_.size());
        for (size_t i = 0; i < a.coords_.size(); ++i) c.push_back(a.coords_[i] + b.coords_[i]);
        return a.field_->from_coords(std::move(c));
    }
    if (a.field_->kind() == FieldKind::Prime)
        return a.field_->wrap(Rational(mod_pos(a.scalar_.num() + b.scalar_.num(),
                                                a.field_->prime_modulus())));
    return a.field_->wrap(a.scalar_ + b.scalar_);
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    Field::require_same(a.field_, b.field_);
    if (a.field_->kind() == FieldKind::Extension) {
        std::vector<FieldElem> c;
        c.reserve(a.coords_.size());
        for (size_t i = 0; i < a.coords_.size(); ++i) c.push_back(a.coords_[i] - b.coords_[i]);
        return a.field_->from_coords(std::move(c));
    }
    if (a.field_->kind() == FieldKind::Prime)
        return a.field_->wrap(Rational(mod_pos(a.scalar_.num() - b.scalar_.num(),
                                                a.field_->prime_modulus())));
    return a.field_->wrap(a.scalar_ - b.scalar_);
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    Field::require_same(a.field_, b.field_);
    if (a.field_->kind() == FieldKind::Extension) {
        auto prod = polyvec::mul(a.coords_, b.coords_, a.field_->base());
        return a.field_->reduce_ext(std::move(prod));
    }
    if (a.field_->kind() == FieldKind::Prime)
        return a.field_->wrap(Rational(mod_pos(a.scalar_.num() * b.scalar_.num(),
                                                a.field_->prime_modulus())));
    return a.field_->wrap(a.scalar_ * b.scalar_);
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    return a * b.inverse();
}

FieldElem FieldElem::inverse() const {
    if (is_zero())
        throw Error("ZeroElement", "inverse of zero");
    switch (field_->kind()) {
    case FieldKind::Prime:
        return field_->wrap(Rational(mod_inverse(scalar_.num(), field_->prime_modulus())));
    case FieldKind::Rationals:
        return field_->wrap(Rational(1) / scalar_);
    case FieldKind::Extension: {
        // gcd(elem, modulus) = 1 is guaranteed for irreducible modulus
        auto e = polyvec::egcd(coords_, field_->modulus(), field_->base());
        if (polyvec::degree(e.g) != 0)
            throw Error("ZeroElement", "element shares a factor with the modulus");
        return field_->reduce_ext(std::move(e.s));
    }
    }
    throw Error("ZeroElement", "unreachable");
}

FieldElem FieldElem::pow(int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElem acc = field_->one();
    FieldElem b = *this;
    while (e > 0) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    if (!a.field_ || !b.field_) return !a.field_ && !b.field_;
    if (!a.field_->same(*b.field_)) return false;
    if (a.field_->kind() == FieldKind::Extension) {
        for (size_t i = 0; i < a.coords_.size(); ++i)
            if (a.coords_[i] != b.coords_[i]) return false;
        return true;
    }
    return a.scalar_ == b.scalar_;
}

std::string FieldElem::str() const {
    if (!field_) return "0";
    if (field_->kind() != FieldKind::Extension) return scalar_.str();
    // print as a residue-class polynomial in x over the base field
    std::string out;
    bool first = true;
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].is_zero()) continue;
        std::string term;
        if (i == 0) term = coords_[i].str();
        else {
            std::string c = coords_[i].str();
            term = (c == "1") ? "" : c + "*";
            term += "x";
            if (i > 1) term += "^" + std::to_string(i);
        }
        out += first ? term : " + " + term;
        first = false;
    }
    return first ? "0" : out;
}

// -------------------------------------------------------------- polyvec

namespace polyvec {

void trim(Vec& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

int degree(const Vec& v) { return (int)v.size() - 1; }

Vec add(const Vec& a, const Vec& b, const FieldPtr& f) {
    Vec out(std::max(a.size(), b.size()), f->zero());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}

Vec sub(const Vec& a, const Vec& b, const FieldPtr& f) {
    Vec out(std::max(a.size(), b.size()), f->zero());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

Vec mul(const Vec& a, const Vec& b, const FieldPtr& f) {
    if (a.empty() || b.empty()) return {};
    Vec out(a.size() + b.size() - 1, f->zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

Vec scale(const Vec& a, const FieldElem& c) {
    Vec out;
    out.reserve(a.size());
    for (auto& x : a) out.push_back(x * c);
    trim(out);
    return out;
}

std::pair<Vec, Vec> divmod(const Vec& a, const Vec& b, const FieldPtr& f) {
    if (b.empty())
        throw Error("ZeroPolynomial", "polynomial division by zero");
    Vec rem = a;
    trim(rem);
    if (rem.size() < b.size()) return {Vec{}, rem};
    const int db = degree(b);
    Vec quot(rem.size() - b.size() + 1, f->zero());
    FieldElem lead_inv = b.back().inverse();
    for (int i = (int)quot.size() - 1; i >= 0; --i) {
        FieldElem c = rem[i + db] * lead_inv;
        if (c.is_zero()) continue;
        quot[i] = c;
        for (int j = 0; j <= db; ++j)
            rem[i + j] -= c * b[j];
    }
    trim(quot);
    trim(rem);
    return {quot, rem};
}

Vec gcd_monic(const Vec& a, const Vec& b, const FieldPtr& f) {
    Vec x = a, y = b;
    trim(x);
    trim(y);
    while (!y.empty()) {
        auto [q, r] = divmod(x, y, f);
        (void)q;
        x = std::move(y);
        y = std::move(r);
    }
    if (!x.empty() && !x.back().is_one())
        x = scale(x, x.back().inverse());
    return x;
}

Egcd egcd(const Vec& a, const Vec& b, const FieldPtr& f) {
    Vec r0 = a, r1 = b;
    trim(r0);
    trim(r1);
    Vec s0{f->one()}, s1{}, t0{}, t1{f->one()};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1, f);
        r0 = std::move(r1);
        r1 = std::move(r);
        Vec s2 = sub(s0, mul(q, s1, f), f);
        Vec t2 = sub(t0, mul(q, t1, f), f);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.empty() && !r0.back().is_one()) {
        FieldElem inv = r0.back().inverse();
        r0 = scale(r0, inv);
        s0 = scale(s0, inv);
        t0 = scale(t0, inv);
    }
    return {r0, s0, t0};
}

} // namespace polyvec

} // namespace tamestrat

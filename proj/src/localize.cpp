#include "tamestrat/localize.hpp"

#include <algorithm>
#include <sstream>

namespace tamestrat {

DeltaSet::DeltaSet(FieldPtr base, std::vector<Poly> polys, bool trusted)
    : base_(std::move(base)), trusted_(trusted) {
    for (auto& p : polys) {
        Field::require_same(p.field(), base_);
        if (p.is_zero() || !p.is_monic())
            throw Error("NotMonic", "delta members must be monic");
        Tri irr = irreducible(p);
        if (irr == Tri::False)
            throw Error("NotIrreducible", "delta member " + p.str() + " is reducible");
        if (irr == Tri::Unknown && !trusted_)
            throw Error("NotIrreducible",
                        "irreducibility of " + p.str() +
                            " is undecided; construct the set with trusted = true");
        if (std::find(polys_.begin(), polys_.end(), p) == polys_.end())
            polys_.push_back(p);
    }
    std::sort(polys_.begin(), polys_.end());
}

DeltaSet DeltaSet::all(FieldPtr base) {
    DeltaSet d;
    d.base_ = std::move(base);
    d.all_ = true;
    return d;
}

DeltaSet DeltaSet::parse(FieldPtr base, const std::string& text) {
    if (text == "all") return all(std::move(base));
    std::vector<Poly> polys;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ','))
        if (!cur.empty()) polys.push_back(Poly::parse(base, cur).monic());
    return DeltaSet(std::move(base), std::move(polys));
}

bool DeltaSet::same(const DeltaSet& other) const {
    if (!base_->same(*other.base_) || all_ != other.all_) return false;
    if (polys_.size() != other.polys_.size()) return false;
    for (size_t i = 0; i < polys_.size(); ++i)
        if (polys_[i] != other.polys_[i]) return false;
    return true;
}

DeltaSet DeltaSet::unite(const DeltaSet& a, const DeltaSet& b) {
    Field::require_same(a.base_, b.base_);
    if (a.all_ || b.all_) return all(a.base_);
    std::vector<Poly> polys = a.polys_;
    polys.insert(polys.end(), b.polys_.begin(), b.polys_.end());
    return DeltaSet(a.base_, std::move(polys), a.trusted_ || b.trusted_);
}

std::string DeltaSet::str() const {
    if (all_) return "all";
    std::string out = "{";
    for (size_t i = 0; i < polys_.size(); ++i)
        out += (i ? ", " : "") + polys_[i].str();
    return out + "}";
}

bool d_member(const Poly& f, const Poly& g, const DeltaSet& delta) {
    if (g.is_zero())
        throw Error("ZeroDenominator", "membership of a fraction with zero denominator");
    if (delta.is_all()) return true;
    if (f.is_zero()) return true;
    Poly common = Poly::gcd(f, g);
    Poly reduced_den = Poly::divmod(g, common).first;
    return factor_over(reduced_den, delta.polys()).has_value();
}

DedekindElem::DedekindElem(const DeltaSet& delta, Poly numerator,
                           std::map<size_t, int> denominator_exponents)
    : delta_(&delta), num_(std::move(numerator)), den_(std::move(denominator_exponents)) {
    if (delta.is_all())
        throw Error("NotSupported", "elements are stored for finite delta sets only");
    Field::require_same(num_.field(), delta.base());
    for (auto& [idx, e] : den_) {
        if (idx >= delta.polys().size())
            throw Error("OutOfRange", "denominator index outside the delta set");
        if (e < 0)
            throw Error("OutOfRange", "denominator exponents must be >= 0");
    }
    reduce();
}

DedekindElem DedekindElem::from_int(const DeltaSet& delta, int64_t n) {
    return DedekindElem(delta, Poly::constant(delta.base(), delta.base()->from_int(n)), {});
}

DedekindElem DedekindElem::inverse_generator(const DeltaSet& delta, size_t index, int e) {
    return DedekindElem(delta, Poly::constant(delta.base(), delta.base()->one()),
                        {{index, e}});
}

void DedekindElem::reduce() {
    for (auto it = den_.begin(); it != den_.end();) {
        const Poly& p = delta_->polys()[it->first];
        while (it->second > 0 && !num_.is_zero() && p.divides(num_)) {
            num_ = Poly::divmod(num_, p).first;
            --it->second;
        }
        if (it->second == 0 || num_.is_zero())
            it = den_.erase(it);
        else
            ++it;
    }
}

Poly DedekindElem::denominator_expanded() const {
    Poly out = Poly::constant(delta_->base(), delta_->base()->one());
    for (auto& [idx, e] : den_) out = out * delta_->polys()[idx].pow(e);
    return out;
}

bool DedekindElem::is_reduced() const {
    if (num_.is_zero()) return den_.empty();
    for (auto& [idx, e] : den_)
        if (e > 0 && delta_->polys()[idx].divides(num_)) return false;
    return true;
}

DedekindElem operator+(const DedekindElem& a, const DedekindElem& b) {
    if (!a.delta_->same(*b.delta_))
        throw Error("DeltaMismatch", "elements live over different delta sets");
    // common denominator by max exponents
    std::map<size_t, int> common = a.den_;
    for (auto& [idx, e] : b.den_) common[idx] = std::max(common[idx], e);
    Poly lift_a = a.num_, lift_b = b.num_;
    for (auto& [idx, e] : common) {
        auto ita = a.den_.find(idx);
        int ea = ita == a.den_.end() ? 0 : ita->second;
        auto itb = b.den_.find(idx);
        int eb = itb == b.den_.end() ? 0 : itb->second;
        const Poly& p = a.delta_->polys()[idx];
        if (e - ea > 0) lift_a = lift_a * p.pow(e - ea);
        if (e - eb > 0) lift_b = lift_b * p.pow(e - eb);
    }
    return DedekindElem(*a.delta_, lift_a + lift_b, std::move(common));
}

DedekindElem operator*(const DedekindElem& a, const DedekindElem& b) {
    if (!a.delta_->same(*b.delta_))
        throw Error("DeltaMismatch", "elements live over different delta sets");
    std::map<size_t, int> den = a.den_;
    for (auto& [idx, e] : b.den_) den[idx] += e;
    return DedekindElem(*a.delta_, a.num_ * b.num_, std::move(den));
}

bool operator==(const DedekindElem& a, const DedekindElem& b) {
    if (!a.delta_->same(*b.delta_)) return false;
    // cross-multiplied exact comparison
    return a.num_ * b.denominator_expanded() == b.num_ * a.denominator_expanded();
}

std::string DedekindElem::str() const {
    if (den_.empty()) return num_.str();
    std::string out = "(" + num_.str() + ") / (";
    bool first = true;
    for (auto& [idx, e] : den_) {
        out += (first ? "" : " * ") + ("(" + delta_->polys()[idx].str() + ")");
        if (e > 1) out += "^" + std::to_string(e);
        first = false;
    }
    return out + ")";
}

RingPtr r_u_presentation(const DeltaSet& delta) {
    if (delta.is_all())
        return RingDescriptor::matrix(2, RingDescriptor::fraction_field());
    std::vector<std::string> members;
    for (auto& p : delta.polys()) members.push_back(p.str());
    return RingDescriptor::matrix(2, RingDescriptor::dedekind(std::move(members)));
}

namespace {

Poly random_poly(const FieldPtr& f, int max_degree, Rng& rng) {
    int deg = (int)rng.uniform((uint64_t)(max_degree + 1));
    std::vector<FieldElem> c;
    for (int i = 0; i <= deg; ++i) c.push_back(f->random(rng));
    bool all_zero = std::all_of(c.begin(), c.end(),
                                [](const FieldElem& e) { return e.is_zero(); });
    if (all_zero) c[0] = f->one();
    return Poly(f, std::move(c));
}

} // namespace

IteratedLocalizationReport iterated_localization_check(const DeltaSet& d1, const DeltaSet& d2,
                                                       int samples, Rng& rng, int max_degree) {
    Field::require_same(d1.base(), d2.base());
    if (d1.is_all() || d2.is_all())
        throw Error("Overlap", "iterated check expects finite delta sets");
    for (auto& p : d1.polys())
        for (auto& q : d2.polys())
            if (p == q)
                throw Error("Overlap", "delta sets share the member " + p.str());

    const auto& f = d1.base();
    DeltaSet joint = DeltaSet::unite(d1, d2);
    IteratedLocalizationReport rep;
    rep.samples = samples;
    for (int s = 0; s < samples; ++s) {
        Poly num = random_poly(f, max_degree, rng);
        // denominators mix both sets and an off-set factor now and then
        Poly den = Poly::constant(f, f->one());
        for (auto& p : d1.polys())
            if (rng.uniform(2)) den = den * p.pow((int)rng.uniform(3));
        for (auto& p : d2.polys())
            if (rng.uniform(2)) den = den * p.pow((int)rng.uniform(3));
        if (rng.uniform(3) == 0) den = den * random_poly(f, 2, rng);
        if (den.is_zero()) den = Poly::constant(f, f->one());

        bool one_step = d_member(num, den, joint);

        // two-step: cancel, strip the d1 part, then ask membership over d2
        Poly g = Poly::gcd(num, den);
        Poly rest = Poly::divmod(den, g).first;
        for (auto& p : d1.polys())
            while (!rest.is_unit() && p.divides(rest))
                rest = Poly::divmod(rest, p).first;
        bool two_step = rest.is_unit() || factor_over(rest, d2.polys()).has_value();

        if (one_step == two_step)
            ++rep.agreements;
        else
            rep.counterexamples.push_back(
                {"(" + num.str() + ") / (" + den.str() + ")", one_step, two_step});
    }
    return rep;
}

} // namespace tamestrat

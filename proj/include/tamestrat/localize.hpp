#ifndef TAMESTRAT_LOCALIZE_HPP
#define TAMESTRAT_LOCALIZE_HPP

#include <map>
#include <string>
#include <vector>

#include "tamestrat/poly.hpp"
#include "tamestrat/ring_descriptor.hpp"
#include "tamestrat/rng.hpp"

namespace tamestrat {

// A finite set of monic irreducibles whose inverses generate the subring
// D of k(x), or the marker `all` for the full fraction field. Members must
// test irreducible; over Q, degree >= 4 members are only admitted when the
// set is constructed with trusted = true (recorded in reports).
class DeltaSet {
public:
    DeltaSet(FieldPtr base, std::vector<Poly> polys, bool trusted = false);
    static DeltaSet all(FieldPtr base);
    static DeltaSet parse(FieldPtr base, const std::string& text); // "x,x+1" or "all"

    const FieldPtr& base() const { return base_; }
    bool is_all() const { return all_; }
    bool trusted() const { return trusted_; }
    const std::vector<Poly>& polys() const { return polys_; }
    bool same(const DeltaSet& other) const;
    // union of two delta sets sharing a base; Overlap errors are the
    // caller's business (iterated_localization_check wants disjointness)
    static DeltaSet unite(const DeltaSet& a, const DeltaSet& b);
    std::string str() const;

private:
    DeltaSet() = default;
    FieldPtr base_;
    std::vector<Poly> polys_;
    bool all_ = false;
    bool trusted_ = false;
};

// f/g lies in D iff, after cancelling gcd(f,g), the denominator factors
// over the set
bool d_member(const Poly& f, const Poly& g, const DeltaSet& delta);

// Element of D in reduced form: numerator polynomial over a denominator
// stored as exponents over the members of delta (never expanded), so the
// support invariant stays syntactic.
class DedekindElem {
public:
    DedekindElem(const DeltaSet& delta, Poly numerator,
                 std::map<size_t, int> denominator_exponents);
    static DedekindElem from_int(const DeltaSet& delta, int64_t n);
    // 1 / delta[i]^e
    static DedekindElem inverse_generator(const DeltaSet& delta, size_t index, int e = 1);

    const Poly& numerator() const { return num_; }
    const std::map<size_t, int>& denominator() const { return den_; }
    const DeltaSet& delta() const { return *delta_; }

    Poly denominator_expanded() const;
    bool is_reduced() const; // no delta member divides num while in the denominator

    friend DedekindElem operator+(const DedekindElem& a, const DedekindElem& b);
    friend DedekindElem operator*(const DedekindElem& a, const DedekindElem& b);
    friend bool operator==(const DedekindElem& a, const DedekindElem& b);
    friend bool operator!=(const DedekindElem& a, const DedekindElem& b) { return !(a == b); }

    std::string str() const;

private:
    void reduce();
    const DeltaSet* delta_; // non-owning; delta sets outlive their elements
    Poly num_;
    std::map<size_t, int> den_;
};

// the universal localization of the double-arrow path algebra at the
// simple regular modules labelled by delta together with the extra simple:
// M_2 over the subring generated by the inverses, M_2(k(x)) at `all`
RingPtr r_u_presentation(const DeltaSet& delta);

// one-step vs two-step localization membership on sampled fractions;
// Overlap error when the sets intersect
struct IteratedLocalizationReport {
    int samples = 0;
    int agreements = 0;
    struct Counterexample {
        std::string fraction;
        bool one_step;
        bool two_step;
    };
    std::vector<Counterexample> counterexamples;
    bool ok() const { return counterexamples.empty(); }
};
IteratedLocalizationReport iterated_localization_check(const DeltaSet& d1, const DeltaSet& d2,
                                                       int samples, Rng& rng,
                                                       int max_degree = 4);

} // namespace tamestrat

#endif

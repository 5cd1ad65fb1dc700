#ifndef TAMESTRAT_ADELE_HPP
#define TAMESTRAT_ADELE_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tamestrat/series.hpp"

namespace tamestrat {

// Index family of a restricted product: finitely many listed places with
// their residue fields, plus a pseudo-infinite tail of unlisted places.
// The tail keeps the "integral almost everywhere" invariant structural:
// an element stores one integral constant for every unlisted index.
struct IndexFamily {
    struct Place {
        int id;
        FieldPtr residue;
    };
    std::vector<Place> places; // sorted by id, unique
    bool pseudo_infinite_tail = true;

    static std::shared_ptr<const IndexFamily> make(std::vector<Place> places,
                                                   bool tail = true);
    const Place* find(int id) const;
    bool same(const IndexFamily& other) const;
};
using FamilyPtr = std::shared_ptr<const IndexFamily>;

class AdeleElem {
public:
    // tail_constant n means the constant n*1 at every unlisted index;
    // the JSON flags "one"/"zero" are the two distinguished values
    AdeleElem(FamilyPtr family, std::map<int, LaurentElem> components,
              int64_t tail_constant);
    static AdeleElem integral_one(FamilyPtr family, int precision);
    static AdeleElem integral_zero(FamilyPtr family, int precision);

    const FamilyPtr& family() const { return fam_; }
    int64_t tail_constant() const { return tail_; }
    const std::map<int, LaurentElem>& components() const { return comp_; }
    LaurentElem at(int id, int window = 0) const; // tail places materialize on demand

    std::vector<int> exceptional_set() const; // listed ids with negative order
    bool is_integral() const;

    friend AdeleElem operator+(const AdeleElem& a, const AdeleElem& b);
    friend AdeleElem operator*(const AdeleElem& a, const AdeleElem& b);
    AdeleElem operator-() const;
    friend bool operator==(const AdeleElem& a, const AdeleElem& b);
    friend bool operator!=(const AdeleElem& a, const AdeleElem& b) { return !(a == b); }

    static AdeleElem random_integral(FamilyPtr family, int precision, Rng& rng);
    // random element with a bounded exceptional set
    static AdeleElem random(FamilyPtr family, int precision, Rng& rng,
                            int max_exceptional = 3);

    std::string str() const;

private:
    int default_window() const;
    FamilyPtr fam_;
    std::map<int, LaurentElem> comp_;
    int64_t tail_ = 0;
};

// finite-support tuple of prime powers t^{n_i}, n_i >= 1, all other
// components 1; the minimal multiplicative set clearing denominators
struct UpsilonElem {
    FamilyPtr family;
    std::map<int, int> powers; // id -> n_i >= 1

    static UpsilonElem make(FamilyPtr family, std::map<int, int> powers);
    AdeleElem as_adele(int precision) const;
    std::string str() const;
};

// constructive check of the two denominator-set conditions for the powers
// set inside the componentwise power-series ring
struct DenominatorSetReport {
    int samples = 0;
    bool condition_one = true; // s a lies in Upsilon a  and in Gamma1 s, witnessed
    bool condition_two = true; // a s = 0 forces a = 0 at the checkable window
    struct Witness {
        std::string sample;
        std::string product; // the common value s a = a s
    };
    std::vector<Witness> witnesses;
    bool ok() const { return condition_one && condition_two; }
};
DenominatorSetReport upsilon_denominator_check(FamilyPtr family, const UpsilonElem& upsilon,
                                               int samples, int precision, Rng& rng);

// fractions upsilon^{-1} g realize exactly the elements with finite
// exceptional set, and conversely
struct AdeleLocalizationReport {
    int forward_samples = 0;  // fractions checked into the restricted product
    int backward_samples = 0; // elements rebuilt as fractions
    bool forward_ok = true;   // exceptional set inside the support of upsilon
    bool backward_ok = true;  // upsilon^{-1} (upsilon a) = a exactly
};
AdeleLocalizationReport localize_to_adele(FamilyPtr family, int samples, int precision,
                                          Rng& rng);

// JSON: {"indices": [{"i": 1, "residue": "Fp(3)", "lower": -1, "coeffs": [...]}],
//        "tail": "one" | "zero" | integer}
AdeleElem adele_from_json_text(const std::string& text);
std::string adele_to_json_text(const AdeleElem& a);

} // namespace tamestrat

#endif

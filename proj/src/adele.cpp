#include "tamestrat/adele.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "tamestrat/poly.hpp"

namespace tamestrat {

namespace {
// constants carry a generous window so they never clip listed components
constexpr int kTailWindow = 1 << 12;
} // namespace

FamilyPtr IndexFamily::make(std::vector<Place> places, bool tail) {
    auto fam = std::make_shared<IndexFamily>();
    std::sort(places.begin(), places.end(),
              [](const Place& a, const Place& b) { return a.id < b.id; });
    for (size_t i = 0; i + 1 < places.size(); ++i)
        if (places[i].id == places[i + 1].id)
            throw Error("IndexMismatch", "duplicate place id in index family");
    fam->places = std::move(places);
    fam->pseudo_infinite_tail = tail;
    return fam;
}

const IndexFamily::Place* IndexFamily::find(int id) const {
    for (auto& p : places)
        if (p.id == id) return &p;
    return nullptr;
}

bool IndexFamily::same(const IndexFamily& other) const {
    if (places.size() != other.places.size() ||
        pseudo_infinite_tail != other.pseudo_infinite_tail)
        return false;
    for (size_t i = 0; i < places.size(); ++i) {
        if (places[i].id != other.places[i].id) return false;
        if (!places[i].residue->same(*other.places[i].residue)) return false;
    }
    return true;
}

AdeleElem::AdeleElem(FamilyPtr family, std::map<int, LaurentElem> components,
                     int64_t tail_constant)
    : fam_(std::move(family)), comp_(std::move(components)), tail_(tail_constant) {
    for (auto& [id, c] : comp_) {
        const auto* place = fam_->find(id);
        if (!place)
            throw Error("IndexMismatch", "component id " + std::to_string(id) +
                                             " missing from the index family");
        Field::require_same(c.field(), place->residue);
    }
}

int AdeleElem::default_window() const { return kTailWindow; }

AdeleElem AdeleElem::integral_one(FamilyPtr family, int precision) {
    std::map<int, LaurentElem> comp;
    for (auto& p : family->places)
        comp.emplace(p.id, LaurentElem::constant(p.residue, p.residue->one(), precision));
    return AdeleElem(std::move(family), std::move(comp), 1);
}

AdeleElem AdeleElem::integral_zero(FamilyPtr family, int precision) {
    std::map<int, LaurentElem> comp;
    for (auto& p : family->places)
        comp.emplace(p.id, LaurentElem::zero_mod(p.residue, precision));
    return AdeleElem(std::move(family), std::move(comp), 0);
}

LaurentElem AdeleElem::at(int id, int window) const {
    auto it = comp_.find(id);
    if (it != comp_.end()) return it->second;
    const auto* place = fam_->find(id);
    if (!place)
        throw Error("IndexMismatch", "unknown place id " + std::to_string(id));
    int w = window > 0 ? window : default_window();
    return LaurentElem::constant(place->residue, place->residue->from_int(tail_), w);
}

std::vector<int> AdeleElem::exceptional_set() const {
    std::vector<int> out;
    for (auto& [id, c] : comp_)
        if (!c.is_zero_to_precision() && c.lower() < 0) out.push_back(id);
    return out;
}

bool AdeleElem::is_integral() const {
    for (auto& [id, c] : comp_)
        if (!c.is_integral()) return false;
    return true;
}

AdeleElem operator+(const AdeleElem& a, const AdeleElem& b) {
    if (!a.fam_->same(*b.fam_))
        throw Error("IndexMismatch", "addition across different index families");
    std::map<int, LaurentElem> comp;
    for (auto& [id, c] : a.comp_) comp.emplace(id, c + b.at(id));
    for (auto& [id, c] : b.comp_)
        if (!comp.count(id)) comp.emplace(id, a.at(id) + c);
    return AdeleElem(a.fam_, std::move(comp), a.tail_ + b.tail_);
}

AdeleElem operator*(const AdeleElem& a, const AdeleElem& b) {
    if (!a.fam_->same(*b.fam_))
        throw Error("IndexMismatch", "product across different index families");
    std::map<int, LaurentElem> comp;
    for (auto& [id, c] : a.comp_) comp.emplace(id, c * b.at(id));
    for (auto& [id, c] : b.comp_)
        if (!comp.count(id)) comp.emplace(id, a.at(id) * c);
    return AdeleElem(a.fam_, std::move(comp), a.tail_ * b.tail_);
}

AdeleElem AdeleElem::operator-() const {
    std::map<int, LaurentElem> comp;
    for (auto& [id, c] : comp_) comp.emplace(id, -c);
    return AdeleElem(fam_, std::move(comp), -tail_);
}

bool operator==(const AdeleElem& a, const AdeleElem& b) {
    if (!a.fam_->same(*b.fam_) || a.tail_ != b.tail_) return false;
    for (auto& p : a.fam_->places) {
        auto ia = a.comp_.find(p.id);
        auto ib = b.comp_.find(p.id);
        const LaurentElem la = ia == a.comp_.end() ? a.at(p.id) : ia->second;
        const LaurentElem lb = ib == b.comp_.end() ? b.at(p.id) : ib->second;
        int up = std::min(la.upper(), lb.upper());
        for (int pw = std::min(la.lower(), lb.lower()); pw < up; ++pw)
            if (la.coeff(pw) != lb.coeff(pw)) return false;
    }
    return true;
}

AdeleElem AdeleElem::random_integral(FamilyPtr family, int precision, Rng& rng) {
    std::map<int, LaurentElem> comp;
    for (auto& p : family->places) {
        TruncatedSeries s = TruncatedSeries::random(p.residue, precision, rng);
        comp.emplace(p.id, LaurentElem::from_series(s));
    }
    int64_t tail = (int64_t)rng.uniform(2);
    return AdeleElem(std::move(family), std::move(comp), tail);
}

AdeleElem AdeleElem::random(FamilyPtr family, int precision, Rng& rng, int max_exceptional) {
    std::map<int, LaurentElem> comp;
    int budget = (int)rng.uniform((uint64_t)(max_exceptional + 1));
    for (auto& p : family->places) {
        int lower = 0;
        if (budget > 0 && rng.uniform(2)) {
            lower = -(int)(1 + rng.uniform(3));
            --budget;
        }
        std::vector<FieldElem> c;
        for (int i = 0; i < precision; ++i) c.push_back(p.residue->random(rng));
        comp.emplace(p.id, LaurentElem(p.residue, lower, std::move(c)));
    }
    int64_t tail = (int64_t)rng.uniform(2);
    return AdeleElem(std::move(family), std::move(comp), tail);
}

std::string AdeleElem::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto& [id, c] : comp_) {
        os << (first ? "" : ", ") << id << ": " << c.str();
        first = false;
    }
    os << (first ? "" : ", ") << "tail: " << tail_ << "}";
    return os.str();
}

UpsilonElem UpsilonElem::make(FamilyPtr family, std::map<int, int> powers) {
    for (auto& [id, n] : powers) {
        if (!family->find(id))
            throw Error("IndexMismatch", "upsilon support outside the index family");
        if (n < 1)
            throw Error("OutOfRange", "upsilon powers must be >= 1");
    }
    return UpsilonElem{std::move(family), std::move(powers)};
}

AdeleElem UpsilonElem::as_adele(int precision) const {
    std::map<int, LaurentElem> comp;
    for (auto& p : family->places) {
        auto it = powers.find(p.id);
        int n = it == powers.end() ? 0 : it->second;
        comp.emplace(p.id, LaurentElem::t_power(p.residue, n, precision));
    }
    return AdeleElem(family, std::move(comp), 1);
}

std::string UpsilonElem::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto& [id, n] : powers) {
        os << (first ? "" : ", ") << id << ": t^" << n;
        first = false;
    }
    os << ", else 1}";
    return os.str();
}

DenominatorSetReport upsilon_denominator_check(FamilyPtr family, const UpsilonElem& upsilon,
                                               int samples, int precision, Rng& rng) {
    for (auto& [id, n] : upsilon.powers)
        if (n >= precision)
            throw Error("PrecisionTooLow",
                        "upsilon power t^" + std::to_string(n) +
                            " exhausts the precision window");
    DenominatorSetReport rep;
    rep.samples = samples;
    AdeleElem s = upsilon.as_adele(precision);
    for (int i = 0; i < samples; ++i) {
        AdeleElem a = AdeleElem::random_integral(family, precision, rng);
        // condition (i): s a belongs to Upsilon a and to Gamma_1 s; both
        // memberships are witnessed by the same product because the
        // component rings commute here (a scope flag in the report JSON)
        AdeleElem sa = s * a;
        AdeleElem as = a * s;
        if (!(sa == as) || !sa.is_integral()) rep.condition_one = false;
        // dividing the witness by s must recover a on the visible window
        bool divisible = true;
        for (auto& p : family->places) {
            auto it = upsilon.powers.find(p.id);
            int n = it == upsilon.powers.end() ? 0 : it->second;
            if (sa.at(p.id).lower() < n) divisible = false;
        }
        if (!divisible) rep.condition_one = false;
        // condition (ii): components are domains; a nonzero sample times
        // upsilon stays nonzero wherever the window can certify it
        for (auto& p : family->places) {
            LaurentElem comp = a.at(p.id);
            auto it = upsilon.powers.find(p.id);
            int n = it == upsilon.powers.end() ? 0 : it->second;
            bool visible_nonzero =
                !comp.is_zero_to_precision() && comp.lower() + n < comp.upper();
            if (visible_nonzero && (comp * s.at(p.id)).is_zero_to_precision())
                rep.condition_two = false;
        }
        if ((int)rep.witnesses.size() < 3)
            rep.witnesses.push_back({a.str(), sa.str()});
    }
    return rep;
}

AdeleLocalizationReport localize_to_adele(FamilyPtr family, int samples, int precision,
                                          Rng& rng) {
    AdeleLocalizationReport rep;
    rep.forward_samples = samples;
    rep.backward_samples = samples;
    for (int i = 0; i < samples; ++i) {
        // forward: a fraction upsilon^{-1} g lands in the restricted
        // product with exceptional set inside the support of upsilon
        std::map<int, int> powers;
        for (auto& p : family->places)
            if (rng.uniform(2)) powers[p.id] = 1 + (int)rng.uniform(3);
        AdeleElem g = AdeleElem::random_integral(family, precision, rng);
        std::map<int, LaurentElem> frac_comp;
        for (auto& p : family->places) {
            auto it = powers.find(p.id);
            int n = it == powers.end() ? 0 : it->second;
            LaurentElem inv = LaurentElem::t_power(p.residue, -n, precision);
            frac_comp.emplace(p.id, inv * g.at(p.id));
        }
        AdeleElem frac(family, std::move(frac_comp), g.tail_constant());
        for (int id : frac.exceptional_set())
            if (!powers.count(id)) rep.forward_ok = false;
        // backward: any element with finite exceptional set is
        // upsilon^{-1} g for upsilon clearing its denominators
        AdeleElem a = AdeleElem::random(family, precision, rng);
        std::map<int, int> clear;
        for (int id : a.exceptional_set()) clear[id] = -a.at(id).lower();
        UpsilonElem ups = clear.empty()
                              ? UpsilonElem{family, {}}
                              : UpsilonElem::make(family, clear);
        AdeleElem cleared = ups.as_adele(precision) * a;
        if (!cleared.is_integral()) rep.backward_ok = false;
        // divide back
        std::map<int, LaurentElem> comp;
        for (auto& p : family->places) {
            auto it = clear.find(p.id);
            int n = it == clear.end() ? 0 : it->second;
            comp.emplace(p.id,
                         LaurentElem::t_power(p.residue, -n, precision) * cleared.at(p.id));
        }
        AdeleElem back(family, std::move(comp), cleared.tail_constant());
        if (!(back == a)) rep.backward_ok = false;
    }
    return rep;
}

// ------------------------------------------------------------------ JSON

AdeleElem adele_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<IndexFamily::Place> places;
    std::map<int, LaurentElem> comp;
    for (auto& entry : j.at("indices")) {
        int id = entry.at("i").get<int>();
        FieldPtr res = parse_field(entry.at("residue").get<std::string>());
        int lower = entry.value("lower", 0);
        std::vector<FieldElem> coeffs;
        for (auto& c : entry.at("coeffs")) {
            if (c.is_number_integer()) coeffs.push_back(res->from_int(c.get<int64_t>()));
            else coeffs.push_back(res->parse(c.get<std::string>()));
        }
        places.push_back({id, res});
        comp.emplace(id, LaurentElem(res, lower, std::move(coeffs)));
    }
    int64_t tail = 0;
    auto& t = j.at("tail");
    if (t.is_string()) {
        std::string s = t.get<std::string>();
        if (s == "one") tail = 1;
        else if (s == "zero") tail = 0;
        else throw Error("ParseError", "tail must be \"one\", \"zero\" or an integer");
    } else {
        tail = t.get<int64_t>();
    }
    return AdeleElem(IndexFamily::make(std::move(places)), std::move(comp), tail);
}

std::string adele_to_json_text(const AdeleElem& a) {
    nlohmann::ordered_json j;
    j["indices"] = nlohmann::ordered_json::array();
    for (auto& [id, c] : a.components()) {
        nlohmann::ordered_json e;
        e["i"] = id;
        e["residue"] = c.field()->name();
        e["lower"] = c.lower();
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
        for (auto& x : c.coeffs()) {
            if (c.field()->kind() != FieldKind::Extension && x.scalar().is_integer())
                coeffs.push_back(x.scalar().num());
            else
                coeffs.push_back(x.str());
        }
        e["coeffs"] = std::move(coeffs);
        j["indices"].push_back(std::move(e));
    }
    if (a.tail_constant() == 1) j["tail"] = "one";
    else if (a.tail_constant() == 0) j["tail"] = "zero";
    else j["tail"] = a.tail_constant();
    return j.dump(2);
}

} // namespace tamestrat

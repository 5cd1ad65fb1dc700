#include "tamestrat/ring_descriptor.hpp"

#include <sstream>

namespace tamestrat {

namespace {
RingPtr node(RingKind kind) {
    auto r = std::make_shared<RingDescriptor>();
    r->kind = kind;
    return r;
}
} // namespace

RingPtr RingDescriptor::base_field() { return node(RingKind::BaseField); }

RingPtr RingDescriptor::ext_field(std::string modulus) {
    auto r = std::make_shared<RingDescriptor>();
    r->kind = RingKind::ExtField;
    r->tag = std::move(modulus);
    return r;
}

RingPtr RingDescriptor::power_series() { return node(RingKind::PowerSeries); }
RingPtr RingDescriptor::laurent_series() { return node(RingKind::LaurentSeries); }

RingPtr RingDescriptor::dedekind(std::vector<std::string> delta, std::string tag) {
    auto r = std::make_shared<RingDescriptor>();
    r->kind = RingKind::Dedekind;
    r->delta = std::move(delta);
    r->tag = std::move(tag);
    return r;
}

RingPtr RingDescriptor::fraction_field() { return node(RingKind::FractionField); }

RingPtr RingDescriptor::matrix(int n, RingPtr inner) {
    if (n < 1)
        throw Error("OutOfRange", "matrix ring size must be >= 1");
    auto r = std::make_shared<RingDescriptor>();
    r->kind = RingKind::Matrix;
    r->n = n;
    r->parts = {std::move(inner)};
    return r;
}

RingPtr RingDescriptor::upper_triangular(std::vector<RingPtr> diagonal) {
    if (diagonal.empty())
        throw Error("SingleBlock", "triangular ring needs at least one diagonal block");
    auto r = std::make_shared<RingDescriptor>();
    r->kind = RingKind::UpperTriangular;
    r->parts = std::move(diagonal);
    return r;
}

RingPtr RingDescriptor::lower_triangular(std::vector<RingPtr> diagonal) {
    if (diagonal.empty())
        throw Error("SingleBlock", "triangular ring needs at least one diagonal block");
    auto r = std::make_shared<RingDescriptor>();
    r->kind = RingKind::LowerTriangular;
    r->parts = std::move(diagonal);
    return r;
}

RingPtr RingDescriptor::product(std::vector<RingPtr> factors) {
    if (factors.empty())
        throw Error("OutOfRange", "empty product; use the zero ring descriptor");
    auto r = std::make_shared<RingDescriptor>();
    r->kind = RingKind::Product;
    r->parts = std::move(factors);
    return r;
}

RingPtr RingDescriptor::gamma(int m) {
    if (m < 1)
        throw Error("OutOfRange", "gamma rank must be >= 1");
    auto r = std::make_shared<RingDescriptor>();
    r->kind = RingKind::Gamma;
    r->n = m;
    return r;
}

RingPtr RingDescriptor::adele(std::vector<RingPtr> components) {
    auto r = std::make_shared<RingDescriptor>();
    r->kind = RingKind::Adele;
    r->parts = std::move(components);
    return r;
}

RingPtr RingDescriptor::tame_hereditary(std::string type_name) {
    auto r = std::make_shared<RingDescriptor>();
    r->kind = RingKind::TameHereditary;
    r->tag = std::move(type_name);
    return r;
}

RingPtr RingDescriptor::tilting_end(std::string type_name, CliqueSelection selection) {
    auto r = std::make_shared<RingDescriptor>();
    r->kind = RingKind::TiltingEnd;
    r->tag = std::move(type_name);
    r->selection = std::move(selection);
    return r;
}

RingPtr RingDescriptor::division_ring_symbol(std::string clique_tag) {
    auto r = std::make_shared<RingDescriptor>();
    r->kind = RingKind::DivisionRingSymbol;
    r->tag = std::move(clique_tag);
    return r;
}

RingPtr RingDescriptor::zero_ring() { return node(RingKind::ZeroRing); }

RingPtr RingDescriptor::morita_normal_form(RingPtr r) {
    while (true) {
        if (r->kind == RingKind::Matrix) {
            r = r->parts[0];
            continue;
        }
        if (r->kind == RingKind::Product && r->parts.size() == 1) {
            r = r->parts[0];
            continue;
        }
        return r;
    }
}

bool RingDescriptor::equals(const RingDescriptor& other) const {
    if (kind != other.kind || n != other.n || tag != other.tag ||
        delta != other.delta ||
        selection.full_clique_ranks != other.selection.full_clique_ranks ||
        selection.partial_simples != other.selection.partial_simples ||
        parts.size() != other.parts.size())
        return false;
    for (size_t i = 0; i < parts.size(); ++i)
        if (!parts[i]->equals(*other.parts[i])) return false;
    return true;
}

std::string RingDescriptor::str() const {
    std::ostringstream os;
    auto list = [&](const char* sep) {
        for (size_t i = 0; i < parts.size(); ++i)
            os << (i ? sep : "") << parts[i]->str();
    };
    switch (kind) {
    case RingKind::BaseField: os << "k"; break;
    case RingKind::ExtField: os << "k[x]/(" << tag << ")"; break;
    case RingKind::PowerSeries: os << "k[[x]]"; break;
    case RingKind::LaurentSeries: os << "k((x))"; break;
    case RingKind::Dedekind:
        if (delta.empty() && tag.empty()) os << "k[x]";
        else {
            os << "k[x";
            for (auto& d : delta) os << ", 1/(" << d << ")";
            if (!tag.empty()) os << "; " << tag;
            os << "]";
        }
        break;
    case RingKind::FractionField: os << "k(x)"; break;
    case RingKind::Matrix:
        os << "M_" << n << "(" << parts[0]->str() << ")";
        break;
    case RingKind::UpperTriangular:
        os << "T^upper(";
        list(", ");
        os << ")";
        break;
    case RingKind::LowerTriangular:
        os << "T^lower(";
        list(", ");
        os << ")";
        break;
    case RingKind::Product:
        os << "(";
        list(" x ");
        os << ")";
        break;
    case RingKind::Gamma: os << "Gamma(" << n << ")"; break;
    case RingKind::Adele:
        os << "Adele[";
        list(", ");
        os << "]";
        break;
    case RingKind::TameHereditary: os << "k" << "Q(" << tag << ")"; break;
    case RingKind::TiltingEnd: {
        os << "End(T_U | " << tag << ", cliques {";
        for (size_t i = 0; i < selection.full_clique_ranks.size(); ++i)
            os << (i ? "," : "") << selection.full_clique_ranks[i];
        os << "}";
        if (selection.partial_simples > 0)
            os << " + " << selection.partial_simples << " partial";
        os << ")";
        break;
    }
    case RingKind::DivisionRingSymbol: os << "Q(" << tag << ")"; break;
    case RingKind::ZeroRing: os << "0"; break;
    }
    return os.str();
}

std::string RingDescriptor::factor_key() const {
    switch (kind) {
    case RingKind::BaseField: return "k";
    case RingKind::ExtField: return "field-ext";
    case RingKind::PowerSeries: return "k[[x]]";
    case RingKind::LaurentSeries: return "k((x))";
    case RingKind::Dedekind: return "dedekind";
    case RingKind::FractionField: return "k(x)";
    case RingKind::DivisionRingSymbol: return "division";
    default: return "non-simple:" + str();
    }
}

} // namespace tamestrat

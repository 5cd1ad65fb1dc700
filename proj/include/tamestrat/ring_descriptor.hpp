#ifndef TAMESTRAT_RING_DESCRIPTOR_HPP
#define TAMESTRAT_RING_DESCRIPTOR_HPP

#include <memory>
#include <string>
#include <vector>

#include "tamestrat/error.hpp"

namespace tamestrat {

// Symbolic ring terms: everything the rewrite engine manipulates. The
// descriptors are structural; scalar data stays elsewhere.
enum class RingKind {
    BaseField,        // k
    ExtField,         // k[x]/(p), tag = modulus text
    PowerSeries,      // k[[x]]
    LaurentSeries,    // k((x))
    Dedekind,         // k[x] with chosen inverses adjoined; delta list or tag
    FractionField,    // k(x)
    Matrix,           // M_n(inner)
    UpperTriangular,  // diagonal blocks left to right, bimodules unmodeled
    LowerTriangular,
    Product,
    Gamma,            // m x m over k[[x]], strictly lower entries in (x)
    Adele,            // restricted product of the component descriptors
    TameHereditary,   // path algebra of an affine type, tag = type name
    TiltingEnd,       // endomorphism ring of the two-summand tilting module
    DivisionRingSymbol, // Q(C) for a clique over a general base; no arithmetic
    ZeroRing
};

struct RingDescriptor;
using RingPtr = std::shared_ptr<const RingDescriptor>;

// clique selection for TiltingEnd: ranks of the chosen full cliques
// (homogeneous cliques enter as rank 1) plus the number of chosen
// non-clique simple regulars
struct CliqueSelection {
    std::vector<int> full_clique_ranks; // sorted descending
    int partial_simples = 0;

    int s() const { return (int)full_clique_ranks.size(); }
};

struct RingDescriptor {
    RingKind kind = RingKind::BaseField;
    int n = 0;                      // Matrix size or Gamma rank
    std::string tag;                // type name, modulus, clique tag, delta tag
    std::vector<std::string> delta; // Dedekind member list, empty for symbolic choice
    std::vector<RingPtr> parts;     // inner / diagonal / factors / components
    CliqueSelection selection;      // TiltingEnd payload

    static RingPtr base_field();
    static RingPtr ext_field(std::string modulus);
    static RingPtr power_series();
    static RingPtr laurent_series();
    static RingPtr dedekind(std::vector<std::string> delta, std::string tag = "");
    static RingPtr fraction_field();
    static RingPtr matrix(int n, RingPtr inner);
    static RingPtr upper_triangular(std::vector<RingPtr> diagonal);
    static RingPtr lower_triangular(std::vector<RingPtr> diagonal);
    static RingPtr product(std::vector<RingPtr> factors);
    static RingPtr gamma(int m);
    static RingPtr adele(std::vector<RingPtr> components);
    static RingPtr tame_hereditary(std::string type_name);
    static RingPtr tilting_end(std::string type_name, CliqueSelection selection);
    static RingPtr division_ring_symbol(std::string clique_tag);
    static RingPtr zero_ring();

    // strips Matrix(n, -) wrappers and singleton products
    static RingPtr morita_normal_form(RingPtr r);

    bool equals(const RingDescriptor& other) const;
    std::string str() const;
    // canonical composition-factor key: "k", "k[[x]]", "k((x))", "dedekind",
    // "division", "field-ext", ...
    std::string factor_key() const;
};

} // namespace tamestrat

#endif

#ifndef TAMESTRAT_KRONREP_HPP
#define TAMESTRAT_KRONREP_HPP

#include <string>
#include <utility>
#include <vector>

#include "tamestrat/linalg.hpp"
#include "tamestrat/quiver.hpp"

namespace tamestrat {

// Representation of the double-arrow quiver 2 => 1: two d1 x d2 matrices
// acting from the source space into the sink space.
struct KronRep {
    FieldPtr f;
    int d1 = 0;
    int d2 = 0;
    Matrix A;
    Matrix B;

    DimVector dim() const { return {d1, d2}; }
    static KronRep make(FieldPtr field, Matrix a, Matrix b);
    static KronRep zero(FieldPtr field) { return make(field, Matrix(field, 0, 0), Matrix(field, 0, 0)); }
};

KronRep direct_sum(const KronRep& x, const KronRep& y);

// <(x1,x2),(y1,y2)> = x1 y1 + x2 y2 - 2 x2 y1, the Euler form of the
// double-arrow orientation used throughout
int64_t kron_euler(const DimVector& x, const DimVector& y);

struct HomBasis {
    int dimension = 0;
    // pairs (f1: d1(Y) x d1(X), f2: d2(Y) x d2(X)) with
    // f1 A_X = A_Y f2 and f1 B_X = B_Y f2; maps act on column coordinates
    std::vector<std::pair<Matrix, Matrix>> basis;
};

HomBasis hom_space(const KronRep& x, const KronRep& y);

// dim Ext^1 = dim Hom - <dim X, dim Y>
int64_t ext_dim(const KronRep& x, const KronRep& y);

// the exact fully faithful functor from k[x]-modules: a square matrix
// (the x-action) maps to the representation (identity, action)
KronRep functor_F(const Matrix& x_action);

// the simple regular module outside the image of F: k => k with maps (0, 1)
KronRep simple_regular_V(FieldPtr field);

// ray module over V of regular length n: (nilpotent Jordan block, identity)
KronRep v_ray(FieldPtr field, int n);

// F applied to k[x]/(p^n), the ray of regular length n over V_p
KronRep p_ray(const Poly& p, int n);

// desk-scale indecomposability: idempotent scan over finite fields, local
// ring detection via a scalar radical complement over Q, else Unknown
Tri indecomposable(const KronRep& x);

struct PruferEndReport {
    std::string ring;        // e.g. "Fp(2)[x]/(x^2+x+1)[t]/(t^2)"
    int level = 0;           // n
    int residue_degree = 0;  // deg p (1 for V)
    int end_dim = 0;         // oracle dim of End(U[n])
    bool dim_matches = false;        // end_dim == level * residue_degree
    int nilpotent_index = 0;         // index of the exhibited generator
    bool commutant_basis_ok = false; // {C^i N^j} spans End
    std::vector<int> level_dims;     // dim End(U[l]) for l = 1..n
};

// truncated endomorphism ring of the length-n ray over V_p or over V;
// verifies dim = n deg p, exhibits the nilpotent generator and checks the
// basis {x^i t^j} of the truncated power series ring
PruferEndReport prufer_end_truncation(const Poly& p, int n);
PruferEndReport prufer_end_truncation_V(FieldPtr field, int n);

// JSON file format: {"field": "...", "d1": n, "d2": n, "A": [[...]], "B": [[...]]}
KronRep kronrep_from_json_text(const std::string& text);
std::string kronrep_to_json_text(const KronRep& x);

} // namespace tamestrat

#endif

#ifndef TAMESTRAT_QUIVER_HPP
#define TAMESTRAT_QUIVER_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tamestrat/error.hpp"

namespace tamestrat {

using DimVector = std::vector<int64_t>;

// Extended Dynkin quiver with a fixed built-in orientation:
//   kronecker  — two arrows 2 -> 1
//   A~(p,q)    — a cycle oriented as two directed paths from vertex 1 to
//                vertex p+1 (p arrows one way, q the other)
//   D~n, E~6/7/8 — trees, every edge oriented toward vertex 1
// The Euler form depends on this orientation; q and the radical vector do
// not. Reports carry the orientation as the arrow list.
struct AffineQuiver {
    std::string name;
    int r = 0;                                // vertex count
    std::vector<std::pair<int, int>> arrows;  // 1-based (source, target)

    static AffineQuiver kronecker();
    static AffineQuiver a_tilde(int p, int q);
    static AffineQuiver d_tilde(int n);
    static AffineQuiver e_tilde(int which); // 6, 7, 8
    // "kronecker", "A~(p,q)", "D~n", "E~6|7|8"
    static AffineQuiver from_name(const std::string& text);
};

// the desk-scale catalogue: kronecker, A~(p,q) with p+q <= 6, D~4..D~6,
// E~6..E~8
std::vector<AffineQuiver> builtin_affine_types();

int64_t euler_form(const DimVector& d, const DimVector& e, const AffineQuiver& q);
int64_t quadratic_form(const DimVector& d, const AffineQuiver& q);

// minimal positive radical vector of q: strictly positive, coprime entries,
// kernel of the symmetrized Euler matrix (NotAffine if that kernel is not
// one-dimensional or not positive)
DimVector radical_vector(const AffineQuiver& q);

// <h, d>; negative = preprojective, zero = regular, positive = preinjective
int64_t defect(const DimVector& d, const AffineQuiver& q);

// built-in table of tube ranks; satisfies sum(rank - 1) = r - 2
std::vector<int> tube_ranks(const AffineQuiver& q);

// dim P_i as path counts out of i; dim R = sum over vertices
DimVector dim_projective(const AffineQuiver& q, int vertex);
DimVector dim_algebra(const AffineQuiver& q);

// dim Ext^1(U, R) for a simple regular dimension vector u over an
// algebraically closed base (End(U) = k); equals -<u, dim R>
int64_t delta_multiplicity(const DimVector& u, const AffineQuiver& q);

// d = (sum h_i) * (number of simples); every delta is <= d
int64_t delta_bound(const AffineQuiver& q);

// Coxeter transformation Phi = -C^{-1} C^T on dimension vectors
// (dim tau X = Phi dim X for X with no projective summand)
std::vector<std::vector<int64_t>> coxeter_matrix(const AffineQuiver& q);
DimVector apply_matrix(const std::vector<std::vector<int64_t>>& m, const DimVector& v);

// Dimension vectors of the quasi-simple regular modules: one tau-orbit per
// non-homogeneous tube plus h for the homogeneous family. The exceptional
// orbits are found by enumeration and certified against the tube-rank
// table (orbit sizes match, each orbit sums to h); a failed certification
// throws rather than returning a guess.
struct SimpleRegularData {
    DimVector h;
    std::vector<std::vector<DimVector>> exceptional_orbits; // one per tube of rank > 1
};
SimpleRegularData simple_regular_vectors(const AffineQuiver& q);

} // namespace tamestrat

#endif

#ifndef TAMESTRAT_TESTS_ORACLES_HPP
#define TAMESTRAT_TESTS_ORACLES_HPP

#include <vector>

#include "tamestrat/kronrep.hpp"
#include "tamestrat/poly.hpp"

// Independent reference computations for the test suites. These stay apart
// from the library code paths they judge.
namespace tamestrat::oracles {

// dim Ext^1(X, Y) as the cokernel of Hom(P0, Y) -> Hom(P1, Y) for the
// standard projective presentation 0 -> P1^(2 d2) -> P1^(d1) + P2^(d2) -> X -> 0
int64_t ext_dim_via_presentation(const KronRep& x, const KronRep& y);

// exhaustive irreducibility over a finite base: trial division by every
// monic polynomial of degree 1 .. deg-1, plus a full root scan
bool irreducible_exhaustive(const Poly& p);

// all subspaces of F_q^n as canonical rref bases (desk scale)
std::vector<std::vector<std::vector<FieldElem>>> subspaces(const FieldPtr& f, int n);

// dimension pairs (dim W1, dim W2) of every subrepresentation (pairs of
// subspaces closed under both arrows), including 0 and the whole thing
std::vector<std::pair<int, int>> subrep_dims(const KronRep& x);

// dim Hom_{k[x]}(M, N) for module actions given by square matrices:
// intertwiners f with f m = n f
int64_t kx_hom_dim(const Matrix& m, const Matrix& n);

} // namespace tamestrat::oracles

#endif

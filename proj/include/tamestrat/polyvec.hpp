#ifndef TAMESTRAT_POLYVEC_HPP
#define TAMESTRAT_POLYVEC_HPP

#include <utility>
#include <vector>

#include "tamestrat/field.hpp"

namespace tamestrat::polyvec {

// Dense coefficient-vector kernels shared by Poly and by extension-field
// element arithmetic. Coefficients are low degree first, trailing zeros
// trimmed. The zero polynomial is the empty vector.

using Vec = std::vector<FieldElem>;

void trim(Vec& v);
int degree(const Vec& v); // -1 for zero
Vec add(const Vec& a, const Vec& b, const FieldPtr& f);
Vec sub(const Vec& a, const Vec& b, const FieldPtr& f);
Vec mul(const Vec& a, const Vec& b, const FieldPtr& f);
Vec scale(const Vec& a, const FieldElem& c);
// divisor must be nonzero; exact field division of coefficients
std::pair<Vec, Vec> divmod(const Vec& a, const Vec& b, const FieldPtr& f);
Vec gcd_monic(const Vec& a, const Vec& b, const FieldPtr& f);
// returns (g, s, t) with s*a + t*b = g, g monic (or zero)
struct Egcd { Vec g, s, t; };
Egcd egcd(const Vec& a, const Vec& b, const FieldPtr& f);

} // namespace tamestrat::polyvec

#endif

#pragma once

#include <optional>

#include "torfix/int_poly.hpp"

namespace torfix {

// Quotient a/b when b divides a exactly in Z[t]; nullopt otherwise.
std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b);

// Pseudo-remainder R with lc(b)^(deg a - deg b + 1) * a = q*b + R,
// deg R < deg b. Requires b nonzero and deg a >= deg b.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);

// Primitive gcd with positive leading coefficient (contents of the inputs
// are ignored; gcd(a, 0) = primitive part of a). Primitive pseudo-remainder
// sequence, which is plenty for the degrees handled here.
IntPoly gcd_primitive(const IntPoly& a, const IntPoly& b);

// Res(a, b) = lc(a)^deg(b) * prod b(alpha) over the roots alpha of a
// (with multiplicity), computed exactly by the subresultant PRS. Both
// inputs must be nonzero; a common factor yields 0.
Int resultant(const IntPoly& a, const IntPoly& b);

// Product of the distinct irreducible factors of p, primitive, with
// positive leading coefficient (monic when p is monic). Nonzero constants
// map to 1.
IntPoly squarefree_part(const IntPoly& p);

} // namespace torfix

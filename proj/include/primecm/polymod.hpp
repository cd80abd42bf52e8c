#pragma once

#include <vector>

#include "primecm/arith.hpp"

namespace primecm::polymod {

/// Dense polynomial over Z/pZ, coefficients ascending and reduced to [0, p).
/// The zero polynomial has no coefficients.
using Poly = std::vector<Integer>;

void trim(Poly& a);
long degree(const Poly& a);  // -1 for zero

Poly reduce(const std::vector<Integer>& a, const Integer& p);
Poly add(const Poly& a, const Poly& b, const Integer& p);
Poly sub(const Poly& a, const Poly& b, const Integer& p);
/// Kronecker substitution: both operands packed into one integer and
/// multiplied with a single GMP product.
Poly mul(const Poly& a, const Poly& b, const Integer& p);
/// Remainder of a modulo m (m non-zero).
Poly rem(const Poly& a, const Poly& m, const Integer& p);
/// Quotient and remainder of a by m.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& m, const Integer& p);
/// Monic gcd.
Poly gcd(Poly a, Poly b, const Integer& p);
Poly make_monic(const Poly& a, const Integer& p);
/// base^e mod m.
Poly powmod(const Poly& base, const Integer& e, const Poly& m, const Integer& p);
/// X^e mod m.
Poly x_powmod(const Integer& e, const Poly& m, const Integer& p);
Integer eval(const Poly& a, const Integer& x, const Integer& p);

}  // namespace primecm::polymod

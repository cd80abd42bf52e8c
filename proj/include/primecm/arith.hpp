#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "primecm/error.hpp"

namespace primecm {

using Integer = mpz_class;

namespace arith {

/// A modulus m >= 2. Residues produced under a context are kept in [0, m).
class ModulusContext {
 public:
  explicit ModulusContext(Integer modulus);

  const Integer& modulus() const noexcept { return modulus_; }
  Integer reduce(const Integer& a) const;

 private:
  Integer modulus_;
};

inline constexpr unsigned kDefaultPrimalityRounds = 64;

/// Kronecker symbol (a/n). Throws DomainError for n = 0.
int kronecker(const Integer& a, const Integer& n);

Integer mod_pow(const Integer& base, const Integer& exponent,
                const ModulusContext& ctx);

/// Miller-Rabin. Below 2^64 the answer is exact (fixed witness set); above,
/// `rounds` witnesses are drawn from a generator seeded with `seed`, so the
/// same call always gives the same answer.
bool is_probable_prime(const Integer& n,
                       unsigned rounds = kDefaultPrimalityRounds,
                       std::uint64_t seed = 0);

/// Smallest probable prime strictly greater than n.
Integer next_prime(const Integer& n);

/// Square root of a modulo an odd prime p (Tonelli-Shanks). Returns the
/// smaller of the two roots.
/// Throws NoSquareRoot for non-residues and BadModulus for even or composite p.
Integer sqrt_mod_prime(const Integer& a, const Integer& p,
                       std::uint64_t seed = 0);

/// Throws NonInvertibleError carrying gcd(a, m) when no inverse exists.
Integer invert_mod(const Integer& a, const Integer& m);

/// Non-negative residue of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);

Integer isqrt(const Integer& n);
bool is_square(const Integer& n, Integer* root = nullptr);

/// ceil(sqrt(n)) for n >= 0.
Integer isqrt_ceil(const Integer& n);

/// Natural logarithm of n > 0, valid far beyond the double range.
double ln(const Integer& n);

/// Number of decimal digits of |n| (0 has one digit).
std::size_t decimal_digits(const Integer& n);

}  // namespace arith
}  // namespace primecm

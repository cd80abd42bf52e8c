#include "primecm/arith.hpp"

#include <array>
#include <cmath>
#include <utility>

namespace primecm {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NoSquareRoot: return "NoSquareRoot";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::NonInvertible: return "NonInvertible";
    case ErrorCode::BadWitness: return "BadWitness";
    case ErrorCode::InvariantNotApplicable: return "InvariantNotApplicable";
    case ErrorCode::NoRootModP: return "NoRootModP";
    case ErrorCode::SpecialJ: return "SpecialJ";
    case ErrorCode::AmbiguousHasse: return "AmbiguousHasse";
    case ErrorCode::OracleRange: return "OracleRange";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace arith {

namespace {

constexpr std::array<unsigned, 46> kSmallPrimes = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,
    41,  43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,
    97,  101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151,
    157, 163, 167, 173, 179, 181, 191, 193, 197, 199};

// Deterministic for every n < 3.3 * 10^24.
constexpr std::array<unsigned, 12> kFixedWitnesses = {2,  3,  5,  7,  11, 13,
                                                      17, 19, 23, 29, 31, 37};

// One Miller-Rabin round; n odd, n - 1 = d * 2^s.
bool strong_probable_prime(const Integer& n, const Integer& n_minus_1,
                           const Integer& d, unsigned long s,
                           const Integer& witness) {
  Integer x;
  mpz_powm(x.get_mpz_t(), witness.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

ModulusContext::ModulusContext(Integer modulus) : modulus_(std::move(modulus)) {
  if (modulus_ < 2) {
    throw Error(ErrorCode::InvalidArgument, "modulus must be at least 2");
  }
}

Integer ModulusContext::reduce(const Integer& a) const { return mod(a, modulus_); }

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

int kronecker(const Integer& a, const Integer& n) {
  if (n == 0) throw Error(ErrorCode::DomainError, "kronecker: n = 0");
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

Integer mod_pow(const Integer& base, const Integer& exponent,
                const ModulusContext& ctx) {
  if (exponent < 0) {
    throw Error(ErrorCode::InvalidArgument, "mod_pow: negative exponent");
  }
  Integer r;
  Integer b = ctx.reduce(base);
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), exponent.get_mpz_t(),
           ctx.modulus().get_mpz_t());
  return r;
}

bool is_probable_prime(const Integer& n, unsigned rounds, std::uint64_t seed) {
  if (rounds == 0) {
    throw Error(ErrorCode::InvalidArgument, "is_probable_prime: rounds >= 1");
  }
  if (n < 2) return false;
  for (unsigned p : kSmallPrimes) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n < 199UL * 199UL) return true;

  const Integer n_minus_1 = n - 1;
  Integer d = n_minus_1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    for (unsigned w : kFixedWitnesses) {
      if (!strong_probable_prime(n, n_minus_1, d, s, Integer(w))) return false;
    }
    return true;
  }

  // Base 2 first: rejects nearly every composite for one exponentiation.
  if (!strong_probable_prime(n, n_minus_1, d, s, Integer(2))) return false;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(seed));
  const Integer span = n - 3;  // witnesses in [2, n - 2]
  for (unsigned i = 1; i < rounds; ++i) {
    Integer w = rng.get_z_range(span) + 2;
    if (!strong_probable_prime(n, n_minus_1, d, s, w)) return false;
  }
  return true;
}

Integer next_prime(const Integer& n) {
  if (n < 2) return 2;
  Integer c = n + 1;
  if (c != 2 && mpz_even_p(c.get_mpz_t())) ++c;
  while (!is_probable_prime(c)) c += 2;
  return c;
}

Integer sqrt_mod_prime(const Integer& a_in, const Integer& p,
                       std::uint64_t seed) {
  if (p < 3 || mpz_even_p(p.get_mpz_t())) {
    throw Error(ErrorCode::BadModulus, "sqrt_mod_prime: modulus must be an odd prime");
  }
  const Integer a = mod(a_in, p);
  if (a == 0) return 0;
  if (kronecker(a, p) != 1) {
    throw Error(ErrorCode::NoSquareRoot, "sqrt_mod_prime: not a quadratic residue");
  }

  const ModulusContext ctx(p);
  Integer r;
  if (mpz_tstbit(p.get_mpz_t(), 1) == 1) {
    // p = 3 mod 4
    r = mod_pow(a, (p + 1) / 4, ctx);
  } else {
    Integer q = p - 1;
    const unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);

    Integer z = 2;
    for (; z < 1000 && kronecker(z, p) != -1; ++z) {
    }
    if (z == 1000) {
      gmp_randclass rng(gmp_randinit_mt);
      rng.seed(static_cast<unsigned long>(seed));
      unsigned tries = 0;
      do {
        z = rng.get_z_range(p - 2) + 2;
        if (++tries > 256) {
          throw Error(ErrorCode::BadModulus, "sqrt_mod_prime: no non-residue found");
        }
      } while (kronecker(z, p) != -1);
    }

    Integer c = mod_pow(z, q, ctx);
    r = mod_pow(a, (q + 1) / 2, ctx);
    Integer t = mod_pow(a, q, ctx);
    unsigned long m = s;
    while (t != 1) {
      unsigned long i = 0;
      Integer t2 = t;
      while (t2 != 1) {
        t2 = t2 * t2 % p;
        if (++i == m) {
          throw Error(ErrorCode::BadModulus, "sqrt_mod_prime: modulus is composite");
        }
      }
      Integer b = c;
      for (unsigned long k = 0; k + i + 1 < m; ++k) b = b * b % p;
      r = r * b % p;
      c = b * b % p;
      t = t * c % p;
      m = i;
    }
  }

  if (r * r % p != a) {
    throw Error(ErrorCode::BadModulus, "sqrt_mod_prime: modulus is composite");
  }
  Integer other = p - r;
  return other < r ? other : r;
}

Integer invert_mod(const Integer& a, const Integer& m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "invert_mod: modulus < 1");
  Integer g;
  const Integer ar = mod(a, m);
  mpz_gcd(g.get_mpz_t(), ar.get_mpz_t(), m.get_mpz_t());
  if (g != 1) throw NonInvertibleError(g, "invert_mod: gcd(a, m) != 1");
  if (m == 1) return 0;
  Integer r;
  mpz_invert(r.get_mpz_t(), ar.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw Error(ErrorCode::DomainError, "isqrt of negative value");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Integer& n, Integer* root) {
  if (n < 0) return false;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
  if (root != nullptr) *root = isqrt(n);
  return true;
}

Integer isqrt_ceil(const Integer& n) {
  Integer r = isqrt(n);
  if (r * r < n) ++r;
  return r;
}

double ln(const Integer& n) {
  if (n <= 0) throw Error(ErrorCode::DomainError, "ln of non-positive value");
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

std::size_t decimal_digits(const Integer& n) {
  Integer a = abs(n);
  if (a == 0) return 1;
  std::size_t d = mpz_sizeinbase(a.get_mpz_t(), 10);
  // sizeinbase may overshoot by one.
  Integer pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, d - 1);
  if (a < pow10) --d;
  return d;
}

}  // namespace arith
}  // namespace primecm

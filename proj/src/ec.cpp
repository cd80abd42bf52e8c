#include "primecm/ec.hpp"

#include <utility>

namespace primecm::ec {

namespace {

using arith::mod;

// Jacobian (X : Y : Z) ~ (X/Z^2, Y/Z^3); Z = 0 is the point at infinity.
struct Jacobian {
  Integer x, y, z;
};

Point to_affine(const Jacobian& q, const Integer& p) {
  if (q.z == 0) return Point::infinity();
  const Integer zi = arith::invert_mod(q.z, p);
  const Integer zi2 = zi * zi % p;
  return Point::affine(q.x * zi2 % p, q.y * zi2 % p * zi % p);
}

Jacobian jdouble(const Jacobian& q, const Curve& e) {
  const Integer& p = e.p();
  if (q.z == 0 || q.y == 0) return {1, 1, 0};
  const Integer yy = q.y * q.y % p;
  const Integer s = 4 * q.x * yy % p;
  const Integer zz = q.z * q.z % p;
  const Integer m = (3 * q.x * q.x + e.a() * zz % p * zz) % p;
  Jacobian r;
  r.x = mod(m * m - 2 * s, p);
  r.y = mod(m * (s - r.x) - 8 * yy * yy, p);
  r.z = 2 * q.y * q.z % p;
  return r;
}

// Mixed addition: q Jacobian, a affine (z = 1).
Jacobian jadd_affine(const Jacobian& q, const Integer& ax, const Integer& ay,
                     const Curve& e) {
  const Integer& p = e.p();
  if (q.z == 0) return {ax, ay, 1};
  const Integer zz = q.z * q.z % p;
  const Integer u2 = ax * zz % p;
  const Integer s2 = ay * zz % p * q.z % p;
  const Integer h = mod(u2 - q.x, p);
  const Integer r = mod(s2 - q.y, p);
  if (h == 0) {
    if (r == 0) return jdouble(q, e);
    return {1, 1, 0};
  }
  const Integer hh = h * h % p;
  const Integer hhh = hh * h % p;
  const Integer v = q.x * hh % p;
  Jacobian out;
  out.x = mod(r * r - hhh - 2 * v, p);
  out.y = mod(r * (v - out.x) - q.y * hhh, p);
  out.z = q.z * h % p;
  return out;
}

}  // namespace

const char* to_string(CertificateCheck c) noexcept {
  switch (c) {
    case CertificateCheck::Ok: return "ok";
    case CertificateCheck::NotPrime: return "not-prime";
    case CertificateCheck::OutsideHasse: return "outside-hasse";
    case CertificateCheck::AmbiguousHasse: return "ambiguous-hasse";
    case CertificateCheck::WitnessIsInfinity: return "witness-is-infinity";
    case CertificateCheck::WitnessOffCurve: return "witness-off-curve";
    case CertificateCheck::WrongOrder: return "wrong-order";
  }
  return "unknown";
}

Curve::Curve(Integer p, const Integer& a, const Integer& b)
    : p_(std::move(p)), a_(mod(a, p_)), b_(mod(b, p_)) {
  if (p_ <= 3) throw Error(ErrorCode::InvalidArgument, "curve: p must exceed 3");
  const Integer disc = mod(4 * a_ * a_ * a_ + 27 * b_ * b_, p_);
  if (disc == 0) throw Error(ErrorCode::InvalidArgument, "curve is singular");
}

Integer Curve::j_invariant() const {
  const Integer a3 = 4 * a_ * a_ * a_ % p_;
  const Integer den = mod(a3 + 27 * b_ * b_, p_);
  return 1728 * a3 % p_ * arith::invert_mod(den, p_) % p_;
}

Integer Curve::rhs(const Integer& x) const {
  return mod((x * x % p_ + a_) * x + b_, p_);
}

bool on_curve(const Point& pt, const Curve& e) {
  if (pt.is_infinity()) return true;
  const auto& [x, y] = *pt.xy;
  if (x < 0 || x >= e.p() || y < 0 || y >= e.p()) return false;
  return y * y % e.p() == e.rhs(x);
}

Point negate(const Point& pt, const Curve& e) {
  if (pt.is_infinity()) return pt;
  return Point::affine(pt.xy->first, mod(-pt.xy->second, e.p()));
}

Point add(const Point& lhs, const Point& rhs, const Curve& e) {
  if (lhs.is_infinity()) return rhs;
  if (rhs.is_infinity()) return lhs;
  const Integer& p = e.p();
  const auto& [x1, y1] = *lhs.xy;
  const auto& [x2, y2] = *rhs.xy;
  Integer lambda;
  if (x1 == x2) {
    if (mod(y1 + y2, p) == 0) return Point::infinity();
    lambda = (3 * x1 * x1 + e.a()) % p * arith::invert_mod(2 * y1, p) % p;
  } else {
    lambda = mod(y2 - y1, p) * arith::invert_mod(mod(x2 - x1, p), p) % p;
  }
  const Integer x3 = mod(lambda * lambda - x1 - x2, p);
  const Integer y3 = mod(lambda * (x1 - x3) - y1, p);
  return Point::affine(x3, y3);
}

Point scalar_mul(const Integer& n, const Point& pt, const Curve& e) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "scalar_mul: negative scalar");
  if (n == 0 || pt.is_infinity()) return Point::infinity();
  const auto& [ax, ay] = *pt.xy;
  Jacobian acc{1, 1, 0};
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = jdouble(acc, e);
    if (mpz_tstbit(n.get_mpz_t(), i)) acc = jadd_affine(acc, ax, ay, e);
  }
  return to_affine(acc, e.p());
}

Curve curve_from_j(const Integer& j0_in, const Integer& p) {
  const Integer j0 = mod(j0_in, p);
  if (j0 == 0 || j0 == mod(Integer(1728), p)) {
    throw Error(ErrorCode::SpecialJ, "curve_from_j: j = 0 or 1728 needs a special family");
  }
  const Integer a = 27 * j0 % p * arith::invert_mod(4 * mod(1728 - j0, p), p) % p;
  return Curve(p, a, -a);
}

Curve any_curve_with_j(const Integer& j0_in, const Integer& p) {
  const Integer j0 = mod(j0_in, p);
  if (j0 == 0) return Curve(p, 0, 1);
  if (j0 == mod(Integer(1728), p)) return Curve(p, 1, 0);
  return curve_from_j(j0, p);
}

Integer least_nonresidue(const Integer& p) {
  Integer g = 2;
  while (arith::kronecker(g, p) != -1) ++g;
  return g;
}

std::vector<Curve> enumerate_twists(const Curve& e) {
  const Integer& p = e.p();
  const arith::ModulusContext ctx(p);
  std::vector<Curve> out{e};

  if (e.a() == 0) {
    // j = 0: Y^2 = X^3 + B g^k for g generating F_p^* / (F_p^*)^6.
    if (mod(p, Integer(3)) == 1) {
      const Integer third = (p - 1) / 3;
      Integer g = 2;
      while (arith::kronecker(g, p) != -1 || arith::mod_pow(g, third, ctx) == 1) ++g;
      Integer b = e.b();
      for (int k = 1; k < 6; ++k) {
        b = b * g % p;
        out.emplace_back(p, 0, b);
      }
    } else {
      out.emplace_back(p, 0, e.b() * least_nonresidue(p));
    }
    return out;
  }
  if (e.b() == 0) {
    // j = 1728: Y^2 = X^3 + A g^k for g generating F_p^* / (F_p^*)^4.
    const Integer g = least_nonresidue(p);
    const int classes = mod(p, Integer(4)) == 1 ? 4 : 2;
    Integer a = e.a();
    for (int k = 1; k < classes; ++k) {
      a = a * g % p;
      out.emplace_back(p, a, 0);
    }
    return out;
  }
  const Integer g = least_nonresidue(p);
  const Integer g2 = g * g % p;
  out.emplace_back(p, e.a() * g2, e.b() * g2 % p * g);
  return out;
}

bool in_hasse_interval(const Integer& n, const Integer& q) {
  // |n - q - 1| <= 2 sqrt(q)  <=>  (n - q - 1)^2 <= 4q
  const Integer t = n - q - 1;
  return t * t <= 4 * q;
}

bool hasse_unique(const Integer& n, const Integer& p) {
  // 2n - p - 1 > 2 sqrt(p)  <=>  2n - p - 1 > 0 and (2n - p - 1)^2 > 4p
  const Integer s = 2 * n - p - 1;
  return s > 0 && s * s > 4 * p;
}

std::optional<OrderCertificate> verify_order(const Curve& e, const Integer& n,
                                             unsigned trials, std::uint64_t seed) {
  const Integer& p = e.p();
  if (!in_hasse_interval(n, p) || !hasse_unique(n, p)) {
    throw Error(ErrorCode::AmbiguousHasse,
                "verify_order: N must satisfy 2N > p + 1 + 2 sqrt(p) inside the Hasse interval");
  }

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(seed));
  auto sample = [&](unsigned attempt) -> std::optional<Point> {
    if (attempt == 0) {
      const Point p11 = Point::affine(1, 1);
      if (on_curve(p11, e)) return p11;
    }
    for (unsigned k = 0; k < 64; ++k) {
      const Integer x = rng.get_z_range(p);
      const Integer r = e.rhs(x);
      if (r == 0) continue;  // 2-torsion tells nothing for odd N
      if (arith::kronecker(r, p) != 1) continue;
      return Point::affine(x, arith::sqrt_mod_prime(r, p, seed));
    }
    return std::nullopt;
  };

  for (unsigned t = 0; t < std::max(trials, 1u); ++t) {
    const auto pt = sample(t);
    if (!pt) continue;
    if (scalar_mul(n, *pt, e).is_infinity()) return OrderCertificate{e, n, *pt};
    return std::nullopt;
  }
  return std::nullopt;
}

CertificateCheck check_order_certificate(const OrderCertificate& cert) {
  const Integer& p = cert.curve.p();
  if (!arith::is_probable_prime(cert.n) || !arith::is_probable_prime(p)) {
    return CertificateCheck::NotPrime;
  }
  if (!in_hasse_interval(cert.n, p) || !in_hasse_interval(p, cert.n)) {
    return CertificateCheck::OutsideHasse;
  }
  if (!hasse_unique(cert.n, p)) return CertificateCheck::AmbiguousHasse;
  if (cert.witness.is_infinity()) return CertificateCheck::WitnessIsInfinity;
  if (!on_curve(cert.witness, cert.curve)) return CertificateCheck::WitnessOffCurve;
  if (!scalar_mul(cert.n, cert.witness, cert.curve).is_infinity()) {
    return CertificateCheck::WrongOrder;
  }
  return CertificateCheck::Ok;
}

Integer naive_point_count(const Curve& e) {
  if (e.p() > kNaiveCountLimit) {
    throw Error(ErrorCode::OracleRange, "naive_point_count: p must be at most 10^6");
  }
  const unsigned long p = e.p().get_ui();
  const unsigned long a = e.a().get_ui();
  const unsigned long b = e.b().get_ui();
  // chi[r] = Legendre symbol (r / p)
  std::vector<signed char> chi(p, -1);
  chi[0] = 0;
  for (unsigned long y = 1; y < p; ++y) chi[y * y % p] = 1;
  long long total = static_cast<long long>(p) + 1;
  for (unsigned long x = 0; x < p; ++x) {
    const unsigned long r = ((x * x % p + a) % p * x % p + b) % p;
    total += chi[r];
  }
  return Integer(static_cast<long>(total));
}

}  // namespace primecm::ec

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "primecm/arith.hpp"

namespace primecm::ec {

/// Short Weierstrass curve Y^2 = X^3 + A X + B over F_p, p > 3 prime.
class Curve {
 public:
  /// Throws InvalidArgument for p <= 3 or a singular curve.
  Curve(Integer p, const Integer& a, const Integer& b);

  const Integer& p() const noexcept { return p_; }
  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }

  Integer j_invariant() const;
  /// x^3 + A x + B mod p.
  Integer rhs(const Integer& x) const;

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  Integer p_;
  Integer a_;
  Integer b_;
};

/// Affine point or the point at infinity.
struct Point {
  std::optional<std::pair<Integer, Integer>> xy;

  static Point infinity() { return Point{}; }
  static Point affine(Integer x, Integer y) {
    return Point{std::make_pair(std::move(x), std::move(y))};
  }
  bool is_infinity() const noexcept { return !xy.has_value(); }

  friend bool operator==(const Point&, const Point&) = default;
};

/// Evidence that #E(F_p) = N: a non-trivial point killed by the prime N,
/// with N > (p + 1 + 2 sqrt p) / 2 so that no other multiple of N fits in
/// the Hasse interval.
struct OrderCertificate {
  Curve curve;
  Integer n;
  Point witness;
};

enum class CertificateCheck {
  Ok,
  NotPrime,
  OutsideHasse,
  AmbiguousHasse,
  WitnessIsInfinity,
  WitnessOffCurve,
  WrongOrder,
};

const char* to_string(CertificateCheck c) noexcept;

bool on_curve(const Point& pt, const Curve& e);
Point negate(const Point& pt, const Curve& e);
Point add(const Point& lhs, const Point& rhs, const Curve& e);
/// Double-and-add in Jacobian coordinates; n >= 0.
Point scalar_mul(const Integer& n, const Point& pt, const Curve& e);

/// Curve Y^2 = X^3 + aX - a with a = 27 j0 / (4 (1728 - j0)).
/// Throws SpecialJ for j0 = 0 or 1728 mod p.
Curve curve_from_j(const Integer& j0, const Integer& p);

/// A curve with the given j-invariant, including j = 0 (Y^2 = X^3 + 1) and
/// j = 1728 (Y^2 = X^3 + X).
Curve any_curve_with_j(const Integer& j0, const Integer& p);

/// Representatives of all F_p-isomorphism classes with E's j-invariant,
/// starting with E itself: 2 generically, up to 4 for j = 1728, up to 6 for
/// j = 0.
std::vector<Curve> enumerate_twists(const Curve& e);

/// Least positive quadratic non-residue mod p.
Integer least_nonresidue(const Integer& p);

/// Tries P = (1, 1) first, then seeded random points. Returns a certificate
/// when N * P = O for a point P != O, nothing when N * P != O.
/// Throws AmbiguousHasse unless 2N > p + 1 + 2 sqrt(p) and N is inside the
/// Hasse interval of p.
std::optional<OrderCertificate> verify_order(const Curve& e, const Integer& n,
                                             unsigned trials = 8,
                                             std::uint64_t seed = 0);

/// Re-validates a certificate from its stored fields only.
CertificateCheck check_order_certificate(const OrderCertificate& cert);

inline constexpr std::uint64_t kNaiveCountLimit = 1000000;

/// Exact #E(F_p) by summing Legendre symbols. Throws OracleRange for
/// p > 10^6.
Integer naive_point_count(const Curve& e);

/// True iff lo <= n <= hi for the integer Hasse interval of q.
bool in_hasse_interval(const Integer& n, const Integer& q);
/// 2N > p + 1 + 2 sqrt(p), evaluated exactly.
bool hasse_unique(const Integer& n, const Integer& p);

}  // namespace primecm::ec

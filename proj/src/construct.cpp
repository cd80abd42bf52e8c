#include "primecm/construct.hpp"

#include <cmath>
#include <map>
#include <unordered_set>

namespace primecm::construct {

namespace {

using classpoly::ClassPolynomial;
using classpoly::InvariantKind;
using quadratic::Discriminant;

struct CurveFound {
  ec::Curve curve;
  ec::OrderCertificate certificate;
  InvariantKind invariant;
  std::size_t digits;
  Integer j;
};

class PolyCache {
 public:
  explicit PolyCache(const SearchPolicy& policy) : policy_(policy) {}

  InvariantKind kind_for(const Discriminant& d) const {
    return policy_.prefer_gamma2 && d.magnitude() % 3 != 0 ? InvariantKind::GAMMA2
                                                           : InvariantKind::J;
  }

  const ClassPolynomial& get(const Discriminant& d) {
    const auto kind = kind_for(d);
    const auto key = std::make_pair(d.value(), kind);
    auto it = polys_.find(key);
    if (it == polys_.end()) {
      classpoly::EvalOptions opts;
      opts.threads = policy_.threads;
      auto poly = kind == InvariantKind::GAMMA2 ? classpoly::gamma2_class_poly(d, opts)
                                                : classpoly::hilbert_class_poly(d, opts);
      it = polys_.emplace(key, std::move(poly)).first;
    }
    return it->second;
  }

 private:
  const SearchPolicy& policy_;
  std::map<std::pair<std::int64_t, InvariantKind>, ClassPolynomial> polys_;
};

std::optional<CurveFound> certify_twists(const ec::Curve& base, const Integer& order,
                                         std::uint64_t seed) {
  for (const auto& twist : ec::enumerate_twists(base)) {
    std::optional<ec::OrderCertificate> cert;
    try {
      cert = ec::verify_order(twist, order, 8, seed);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::AmbiguousHasse) return std::nullopt;
      throw;
    }
    if (cert) return CurveFound{twist, *cert, InvariantKind::J, 0, twist.j_invariant()};
  }
  return std::nullopt;
}

// Root of the class polynomial mod p, carried to j, then the twist with
// `order` points. Nothing when p turns out not to be prime.
std::optional<CurveFound> curve_with_order(const Discriminant& d, const Integer& p,
                                           const Integer& order, PolyCache& cache,
                                           std::uint64_t seed) {
  const ClassPolynomial& poly = cache.get(d);
  Integer j;
  try {
    const Integer root = classpoly::find_root_mod_p(poly, p, seed);
    j = classpoly::invariant_root_to_j(poly.kind == InvariantKind::GAMMA2
                                           ? classpoly::RootTransport::GAMMA2
                                           : classpoly::RootTransport::J,
                                       root, p);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NoRootModP) return std::nullopt;
    throw;
  }
  auto found = certify_twists(ec::any_curve_with_j(j, p), order, seed);
  if (found) {
    found->invariant = poly.kind;
    found->digits = poly.max_coefficient_digits();
    found->j = j;
  }
  return found;
}

Integer pow10(unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

HasseInterval hasse_interval(const Integer& q) {
  if (q < 1) throw Error(ErrorCode::InvalidArgument, "hasse_interval: q >= 1");
  const Integer w = arith::isqrt(4 * q);  // floor(2 sqrt q)
  return {q + 1 - w, q + 1 + w};
}

Integer unit_trace(const Integer& x, const Integer& y, unsigned unit) {
  switch (unit) {
    case 0: return x;
    case 1: return -x;
    case 2: return (-x - 3 * y) / 2;
    case 3: return (x + 3 * y) / 2;
    case 4: return (-x + 3 * y) / 2;
    case 5: return (x - 3 * y) / 2;
    default: throw Error(ErrorCode::InvalidArgument, "unit index must be 0..5");
  }
}

bool in_size_window(const Integer& p, unsigned k) {
  if (k < 1) return false;
  const Integer lo = pow10(k - 1);
  const Integer hi = pow10(k);
  // p - 10^(k-1) > 2 sqrt(10^(k-1)) and 10^k - p > 2 sqrt(10^k)
  const Integer a = p - lo;
  const Integer b = hi - p;
  return a > 0 && a * a > 4 * lo && b > 0 && b * b > 4 * hi;
}

FixedOrderResult fixed_order_curve(const Integer& n, const SearchPolicy& policy) {
  if (n <= 5 || !arith::is_probable_prime(n, arith::kDefaultPrimalityRounds, policy.seed)) {
    throw Error(ErrorCode::InvalidArgument, "fixed_order_curve: N must be a prime > 5");
  }
  if (policy.max_rounds < 1) {
    throw Error(ErrorCode::InvalidArgument, "max_rounds must be at least 1");
  }

  std::vector<quadratic::BasisEntry> basis;
  std::unordered_set<std::int64_t> tried;
  PolyCache cache(policy);
  const double log_n = arith::ln(n);

  for (unsigned round = 0; round < policy.max_rounds; ++round) {
    for (auto& e : quadratic::build_basis_round(n, round)) basis.push_back(std::move(e));
    const double edge = (round + 1) * log_n;
    const auto bound = static_cast<std::uint64_t>(std::floor(edge * edge));

    for (const auto& cand : quadratic::enumerate_candidates(basis, bound)) {
      if (!tried.insert(cand.d.value()).second) continue;
      const auto sol =
          quadratic::cornacchia(cand.d, n, quadratic::candidate_sqrt(basis, cand, n));
      if (!sol) continue;

      for (int sign : {1, -1}) {
        const Integer p = n + 1 + sign * sol->x;
        if (p <= 3 || p == n) continue;
        if (!arith::is_probable_prime(p, arith::kDefaultPrimalityRounds, policy.seed)) continue;
        const std::size_t h = quadratic::class_number(cand.d);
        if (h < policy.min_class_number) break;
        auto found = curve_with_order(cand.d, p, n, cache, policy.seed);
        if (!found) continue;

        FixedOrderResult r;
        r.n = n;
        r.p = p;
        r.d = cand.d;
        r.x = sol->x;
        r.y = sol->y;
        r.sign = sign;
        r.rounds_used = round + 1;
        for (const auto& e : basis) r.basis_primes.push_back(e.p);
        r.class_number = h;
        r.invariant = found->invariant;
        r.class_poly_digits = found->digits;
        r.j_invariant = found->j;
        r.curve = found->curve;
        r.certificate = found->certificate;
        return r;
      }
    }
  }
  throw Error(ErrorCode::SearchExhausted, "fixed_order_curve: no curve within max_rounds");
}

FixedSizeResult fixed_size_curve(unsigned k, const Discriminant& d, const SearchPolicy& policy) {
  if (k < 3) throw Error(ErrorCode::InvalidArgument, "fixed_size_curve: k must be >= 3");
  if (!d.is_algorithm_eligible()) {
    throw Error(ErrorCode::InvalidArgument, "fixed_size_curve: D must be 5 mod 8");
  }

  const Integer window_lo = pow10(k - 1);
  const Integer window_hi = pow10(k);
  const Integer D(static_cast<long>(d.value()));
  const unsigned units = d.value() == -3 ? 6 : 2;
  PolyCache cache(policy);
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(policy.seed));

  auto first_prime_from = [](const Integer& start) {
    return arith::is_probable_prime(start) ? start : arith::next_prime(start);
  };

  Integer p;
  const bool explicit_start =
      policy.scan_mode == ScanMode::Sequential && policy.scan_from.has_value();
  if (policy.scan_mode == ScanMode::Sequential) {
    p = first_prime_from(policy.scan_from.value_or(window_lo));
  }

  unsigned split_primes = 0;
  for (std::size_t attempt = 0; attempt < policy.max_candidates; ++attempt) {
    if (attempt > 0 || policy.scan_mode == ScanMode::Random) {
      if (policy.scan_mode == ScanMode::Sequential) {
        p = arith::next_prime(p);
      } else {
        p = first_prime_from(window_lo + rng.get_z_range(window_hi - window_lo));
      }
    }
    // An explicit scan start overrides the p window; q must still have k digits.
    if (!explicit_start && !in_size_window(p, k)) {
      if (policy.scan_mode == ScanMode::Sequential && p >= window_hi) break;
      continue;
    }
    if (p <= 3 || arith::kronecker(D, p) != 1) continue;
    ++split_primes;

    const Integer root = arith::sqrt_mod_prime(arith::mod(D, p), p, policy.seed);
    const auto sol = quadratic::cornacchia(d, p, root);
    if (!sol) continue;  // p does not split into principal primes

    for (unsigned u = 0; u < units; ++u) {
      const Integer q = p + 1 - unit_trace(sol->x, sol->y, u);
      if (q == p || arith::decimal_digits(q) != k) continue;  // trace 1 is anomalous
      if (!arith::is_probable_prime(q, arith::kDefaultPrimalityRounds, policy.seed)) continue;

      std::optional<CurveFound> found;
      if (d.value() == -3) {
        found = certify_twists(ec::Curve(p, 0, 1), q, policy.seed);
      } else {
        found = curve_with_order(d, p, q, cache, policy.seed);
      }
      if (!found) continue;

      FixedSizeResult r;
      r.k = k;
      r.d = d;
      r.p = p;
      r.q = q;
      r.x = sol->x;
      r.y = sol->y;
      r.unit_index = u;
      r.primes_scanned = split_primes;
      r.curve = found->curve;
      r.certificate = found->certificate;
      return r;
    }
  }
  throw Error(ErrorCode::SearchExhausted, "fixed_size_curve: candidate budget exhausted");
}

const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Ok: return "ok";
    case CheckStatus::NotPrime: return "not-prime";
    case CheckStatus::BadDiscriminant: return "bad-discriminant";
    case CheckStatus::BadCornacchia: return "bad-cornacchia";
    case CheckStatus::BadFieldPrime: return "bad-field-prime";
    case CheckStatus::OutsideHasse: return "outside-hasse";
    case CheckStatus::AmbiguousHasse: return "ambiguous-hasse";
    case CheckStatus::WitnessIsInfinity: return "witness-is-infinity";
    case CheckStatus::WitnessOffCurve: return "witness-off-curve";
    case CheckStatus::WrongOrder: return "wrong-order";
    case CheckStatus::CurveMismatch: return "curve-mismatch";
    case CheckStatus::AnomalousCurve: return "anomalous-curve";
    case CheckStatus::WrongDigitCount: return "wrong-digit-count";
  }
  return "unknown";
}

namespace {

CheckStatus from_order_check(ec::CertificateCheck c) {
  switch (c) {
    case ec::CertificateCheck::Ok: return CheckStatus::Ok;
    case ec::CertificateCheck::NotPrime: return CheckStatus::NotPrime;
    case ec::CertificateCheck::OutsideHasse: return CheckStatus::OutsideHasse;
    case ec::CertificateCheck::AmbiguousHasse: return CheckStatus::AmbiguousHasse;
    case ec::CertificateCheck::WitnessIsInfinity: return CheckStatus::WitnessIsInfinity;
    case ec::CertificateCheck::WitnessOffCurve: return CheckStatus::WitnessOffCurve;
    case ec::CertificateCheck::WrongOrder: return CheckStatus::WrongOrder;
  }
  return CheckStatus::WrongOrder;
}

bool norm_equation_holds(const Discriminant& d, const Integer& x, const Integer& y,
                         const Integer& norm) {
  return x > 0 && y > 0 && x * x - d.value() * y * y == 4 * norm;
}

}  // namespace

CheckReport check_certificate(const FixedOrderResult& r) {
  if (!arith::is_probable_prime(r.n) || !arith::is_probable_prime(r.p)) {
    return {CheckStatus::NotPrime};
  }
  if (!r.d.is_algorithm_eligible() || arith::kronecker(Integer(static_cast<long>(r.d.value())), r.n) != 1) {
    return {CheckStatus::BadDiscriminant};
  }
  if (!norm_equation_holds(r.d, r.x, r.y, r.n)) return {CheckStatus::BadCornacchia};
  if ((r.sign != 1 && r.sign != -1) || r.p != r.n + 1 + r.sign * r.x) {
    return {CheckStatus::BadFieldPrime};
  }
  if (r.p == r.n) return {CheckStatus::AnomalousCurve};
  if (!(r.curve == r.certificate.curve) || r.curve.p() != r.p || r.certificate.n != r.n) {
    return {CheckStatus::CurveMismatch};
  }
  return {from_order_check(ec::check_order_certificate(r.certificate))};
}

CheckReport check_certificate(const FixedSizeResult& r) {
  if (!arith::is_probable_prime(r.q) || !arith::is_probable_prime(r.p)) {
    return {CheckStatus::NotPrime};
  }
  if (!r.d.is_algorithm_eligible() || arith::kronecker(Integer(static_cast<long>(r.d.value())), r.p) != 1) {
    return {CheckStatus::BadDiscriminant};
  }
  if (!norm_equation_holds(r.d, r.x, r.y, r.p)) return {CheckStatus::BadCornacchia};
  const unsigned units = r.d.value() == -3 ? 6 : 2;
  if (r.unit_index >= units || r.q != r.p + 1 - unit_trace(r.x, r.y, r.unit_index)) {
    return {CheckStatus::BadFieldPrime};
  }
  // p may leave the k-digit window when the scan start was given explicitly.
  if (arith::decimal_digits(r.q) != r.k) {
    return {CheckStatus::WrongDigitCount};
  }
  if (r.p == r.q) return {CheckStatus::AnomalousCurve};
  if (!(r.curve == r.certificate.curve) || r.curve.p() != r.p || r.certificate.n != r.q) {
    return {CheckStatus::CurveMismatch};
  }
  return {from_order_check(ec::check_order_certificate(r.certificate))};
}

}  // namespace primecm::construct

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primecm/classpoly.hpp"
#include "primecm/ec.hpp"
#include "primecm/quadratic.hpp"

namespace primecm::construct {

struct HasseInterval {
  Integer lo;
  Integer hi;
};

/// [ceil(q + 1 - 2 sqrt q), floor(q + 1 + 2 sqrt q)], exact.
HasseInterval hasse_interval(const Integer& q);

enum class ScanMode { Random, Sequential };

struct SearchPolicy {
  std::size_t min_class_number = 0;
  unsigned max_rounds = 64;
  ScanMode scan_mode = ScanMode::Random;
  /// First candidate for sequential scans; unset means the window start.
  std::optional<Integer> scan_from;
  std::uint64_t seed = 0;
  /// Use gamma2 class polynomials whenever 3 does not divide D.
  bool prefer_gamma2 = true;
  /// Prime candidates examined by fixed_size_curve before giving up.
  std::size_t max_candidates = 100000;
  unsigned threads = 1;
};

struct FixedOrderResult {
  Integer n;
  Integer p;
  quadratic::Discriminant d{-3};
  Integer x;  // Cornacchia solution x^2 - D y^2 = 4N
  Integer y;
  int sign = 1;  // p = N + 1 + sign * x
  unsigned rounds_used = 0;
  std::vector<std::uint32_t> basis_primes;
  std::size_t class_number = 0;
  classpoly::InvariantKind invariant = classpoly::InvariantKind::J;
  std::size_t class_poly_digits = 0;
  Integer j_invariant;
  ec::Curve curve{5, 1, 1};
  ec::OrderCertificate certificate{ec::Curve{5, 1, 1}, 0, ec::Point::infinity()};
};

struct FixedSizeResult {
  unsigned k = 0;
  quadratic::Discriminant d{-3};
  Integer p;
  Integer q;
  Integer x;  // Cornacchia solution x^2 - D y^2 = 4p
  Integer y;
  unsigned unit_index = 0;
  unsigned primes_scanned = 0;
  ec::Curve curve{5, 1, 1};
  ec::OrderCertificate certificate{ec::Curve{5, 1, 1}, 0, ec::Point::infinity()};
};

/// Prescribed prime order N: extends the good-prime basis round by round and
/// returns the first certified curve in (|D|, +x before -x) order.
/// Throws SearchExhausted after policy.max_rounds rounds.
FixedOrderResult fixed_order_curve(const Integer& n, const SearchPolicy& policy = {});

/// Prescribed size: k-digit primes p, q and a curve over F_p with CM by O_D
/// and q points. Throws SearchExhausted after policy.max_candidates primes.
FixedSizeResult fixed_size_curve(unsigned k, const quadratic::Discriminant& d,
                                 const SearchPolicy& policy = {});

/// Trace of epsilon * pi for the unit of index `unit` (0..5), where
/// pi = (x + y sqrt D) / 2. Indices 2..5 exist only for D = -3.
Integer unit_trace(const Integer& x, const Integer& y, unsigned unit);

/// Open window (10^(k-1) + 2 * 10^((k-1)/2), 10^k - 2 * 10^(k/2)) for p.
bool in_size_window(const Integer& p, unsigned k);

enum class CheckStatus {
  Ok,
  NotPrime,
  BadDiscriminant,
  BadCornacchia,
  BadFieldPrime,
  OutsideHasse,
  AmbiguousHasse,
  WitnessIsInfinity,
  WitnessOffCurve,
  WrongOrder,
  CurveMismatch,
  AnomalousCurve,
  WrongDigitCount,
};

struct CheckReport {
  CheckStatus status = CheckStatus::Ok;
  bool ok() const noexcept { return status == CheckStatus::Ok; }
};

const char* to_string(CheckStatus s) noexcept;

/// Re-validates every stored invariant without repeating the search.
CheckReport check_certificate(const FixedOrderResult& result);
CheckReport check_certificate(const FixedSizeResult& result);

}  // namespace primecm::construct

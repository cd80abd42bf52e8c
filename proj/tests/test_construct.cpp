#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "primecm/construct.hpp"

using namespace primecm;
using namespace primecm::construct;
using quadratic::Discriminant;

namespace {

const Integer kN60("123456789012345678901234567890123456789012345678901234568197");
const Integer kP60("123456789012345678901234567890654833374525085966737125236501");

Integer pow10(unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

TEST_CASE("hasse_interval") {
  const auto h4 = hasse_interval(4);
  CHECK(h4.lo == 1);
  CHECK(h4.hi == 9);
  const auto h2 = hasse_interval(2);
  CHECK(h2.lo == 1);
  CHECK(h2.hi == 5);
  CHECK_THROWS_AS(hasse_interval(0), Error);
  for (long q = 1; q < 5000; ++q) {
    const auto h = hasse_interval(q);
    // lo is the least n with (q + 1 - n)^2 <= 4q on the low side.
    CHECK((q + 1 - h.lo) * (q + 1 - h.lo) <= 4 * Integer(q));
    CHECK((q + 2 - h.lo) * (q + 2 - h.lo) > 4 * Integer(q));
    CHECK((h.hi - q - 1) * (h.hi - q - 1) <= 4 * Integer(q));
    CHECK((h.hi - q) * (h.hi - q) > 4 * Integer(q));
  }
}

TEST_CASE("Hasse symmetry on random pairs") {
  std::mt19937_64 rng(2006);
  int inside = 0;
  for (int i = 0; i < 10000; ++i) {
    const Integer q(static_cast<unsigned long>(rng() % 1000000 + 1));
    const Integer n = i % 2 ? Integer(static_cast<unsigned long>(rng() % 1000000 + 1))
                            : q + static_cast<long>(rng() % 4001) - 2000;
    if (n < 1) continue;
    const bool a = ec::in_hasse_interval(n, q);
    CHECK(a == ec::in_hasse_interval(q, n));
    inside += a ? 1 : 0;
  }
  CHECK(inside > 100);
}

TEST_CASE("unit traces for D = -3") {
  // pi = (x + y sqrt(-3)) / 2 with norm p; the six associates have traces
  // +-x, +-(x + 3y)/2, +-(x - 3y)/2.
  const Integer x = 5, y = 1;  // 25 + 3 = 28 = 4 * 7
  std::multiset<long> traces;
  for (unsigned u = 0; u < 6; ++u) traces.insert(unit_trace(x, y, u).get_si());
  CHECK(traces == std::multiset<long>{-5, 5, -4, 4, -1, 1});
  // Each of the six orders is realised by a sextic twist, checked by counting.
  for (long p = 7; p < 10000; p += 6) {
    if (!oracle::is_prime(static_cast<std::uint64_t>(p))) continue;
    const auto sol = oracle::norm_solution(-3, p);
    REQUIRE(sol);
    std::multiset<long> expected;
    for (unsigned u = 0; u < 6; ++u) {
      expected.insert(p + 1 - unit_trace(sol->first, sol->second, u).get_si());
    }
    std::multiset<long> counted;
    for (const auto& t : ec::enumerate_twists(ec::Curve(p, 0, 1))) {
      counted.insert(ec::naive_point_count(t).get_si());
    }
    INFO("p = " << p);
    CHECK(counted == expected);
  }
}

TEST_CASE("size window") {
  CHECK_FALSE(in_size_window(100, 3));
  CHECK_FALSE(in_size_window(120, 3));  // 10^2 + 2 * 10^1
  CHECK(in_size_window(121, 3));
  CHECK(in_size_window(936, 3));
  CHECK_FALSE(in_size_window(937, 3));
}

TEST_CASE("fixed_order_curve on the 60-digit example") {
  const auto r = fixed_order_curve(kN60);
  CHECK(r.d.value() == -2419);
  CHECK(r.p == kP60);
  CHECK(r.sign == 1);
  CHECK(r.rounds_used == 1);
  CHECK(r.basis_primes.size() == 15);
  CHECK(r.class_number == 8);
  CHECK(r.invariant == classpoly::InvariantKind::GAMMA2);
  CHECK(r.class_poly_digits <= 40);
  CHECK(ec::in_hasse_interval(r.p, r.n));
  CHECK(ec::in_hasse_interval(r.n, r.p));
  CHECK(check_certificate(r).ok());

  SearchPolicy plain;
  plain.prefer_gamma2 = false;
  const auto rj = fixed_order_curve(kN60, plain);
  CHECK(rj.invariant == classpoly::InvariantKind::J);
  CHECK(rj.p == r.p);
  CHECK(ec::verify_order(rj.curve, kN60).has_value());
  CHECK(check_certificate(rj).ok());
}

TEST_CASE("fixed_order_curve respects the minimum class number") {
  SearchPolicy policy;
  policy.min_class_number = 40;
  const auto r = fixed_order_curve(kN60, policy);
  CHECK(r.class_number >= 40);
  CHECK(r.class_number == quadratic::class_number(r.d));
  CHECK(check_certificate(r).ok());
}

TEST_CASE("fixed_order_curve argument checks") {
  CHECK_THROWS_AS(fixed_order_curve(5), Error);
  CHECK_THROWS_AS(fixed_order_curve(1001), Error);
  SearchPolicy none;
  none.max_rounds = 0;
  CHECK_THROWS_AS(fixed_order_curve(1009, none), Error);
}

TEST_CASE("fixed_order_curve matches naive counts for all primes in [100, 3000]") {
  for (long n = 101; n <= 3000; n += 2) {
    if (!oracle::is_prime(static_cast<std::uint64_t>(n))) continue;
    const auto r = fixed_order_curve(n);
    INFO("N = " << n);
    REQUIRE(ec::naive_point_count(r.curve) == n);
    CHECK(r.p != n);
    CHECK(r.d.is_algorithm_eligible());
    CHECK(arith::kronecker(Integer(static_cast<long>(r.d.value())), Integer(n)) == 1);
    CHECK(ec::in_hasse_interval(r.p, r.n));
    CHECK(ec::in_hasse_interval(r.n, r.p));
  }
}

TEST_CASE("fixed_order_curve is deterministic for a seed and thread-count invariant") {
  SearchPolicy a, b;
  a.seed = b.seed = 42;
  b.threads = 3;
  const auto ra = fixed_order_curve(kN60, a);
  const auto rb = fixed_order_curve(kN60, b);
  CHECK(ra.curve == rb.curve);
  CHECK(ra.certificate.witness == rb.certificate.witness);
}

TEST_CASE("fixed_size_curve for D = -3 from the worked example start") {
  SearchPolicy policy;
  policy.scan_mode = ScanMode::Sequential;
  policy.scan_from = pow10(60) + 99;
  const auto r = fixed_size_curve(60, Discriminant(-3), policy);
  CHECK(r.p == pow10(60) + 1059);
  CHECK(r.q == Integer("999999999999999999999999999998130705774503095542609960125197"));
  CHECK(r.primes_scanned == 4);
  CHECK(r.unit_index == 0);
  CHECK(r.curve.a() == 0);
  CHECK(check_certificate(r).ok());
}

TEST_CASE("fixed_size_curve small cases against naive counts") {
  for (std::int64_t d : {-3L, -11L, -19L, -43L}) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      SearchPolicy policy;
      policy.seed = seed;
      const auto r = fixed_size_curve(3, Discriminant(d), policy);
      INFO("D = " << d << ", seed = " << seed);
      CHECK(arith::decimal_digits(r.p) == 3);
      CHECK(arith::decimal_digits(r.q) == 3);
      CHECK(in_size_window(r.p, 3));
      CHECK(ec::naive_point_count(r.curve) == r.q);
      CHECK(std::string(to_string(check_certificate(r).status)) == "ok");
    }
  }
  // Sequential scan inside the window.
  SearchPolicy seq;
  seq.scan_mode = ScanMode::Sequential;
  const auto r = fixed_size_curve(5, Discriminant(-11), seq);
  CHECK(in_size_window(r.p, 5));
  CHECK(ec::naive_point_count(r.curve) == r.q);
  CHECK_THROWS_AS(fixed_size_curve(2, Discriminant(-11)), Error);
  CHECK_THROWS_AS(fixed_size_curve(10, Discriminant(-7)), Error);
}

TEST_CASE("fixed_size_curve reports exhaustion") {
  SearchPolicy policy;
  policy.max_candidates = 1;
  policy.scan_mode = ScanMode::Sequential;
  policy.scan_from = 2;  // below the window: nothing usable in one step
  try {
    fixed_size_curve(20, Discriminant(-11), policy);
    FAIL("expected SearchExhausted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SearchExhausted);
  }
}

TEST_CASE("check_certificate rejects tampered results") {
  const auto r = fixed_order_curve(kN60);
  auto bad = r;
  bad.n += 2;
  CHECK_FALSE(check_certificate(bad).ok());
  bad = r;
  bad.certificate.witness = ec::Point::affine(1, 2);
  CHECK_FALSE(check_certificate(bad).ok());
  bad = r;
  bad.x += 2;
  CHECK(check_certificate(bad).status == CheckStatus::BadCornacchia);
  bad = r;
  bad.sign = -1;
  CHECK(check_certificate(bad).status == CheckStatus::BadFieldPrime);

  SearchPolicy policy;
  const auto s = fixed_size_curve(3, Discriminant(-11), policy);
  auto bs = s;
  bs.unit_index = 1;
  CHECK_FALSE(check_certificate(bs).ok());
  bs = s;
  bs.k = 4;
  CHECK(check_certificate(bs).status == CheckStatus::WrongDigitCount);
}

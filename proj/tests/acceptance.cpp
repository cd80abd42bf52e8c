// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff none
// failed. Criterion 9 runs only with --stretch (or PRIMECM_STRETCH=1).

#include <chrono>
#include <cmath>
#include <numeric>
#include <thread>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "primecm/arith.hpp"
#include "primecm/classpoly.hpp"
#include "primecm/construct.hpp"
#include "primecm/ec.hpp"
#include "primecm/quadratic.hpp"

using namespace primecm;

namespace {

const Integer kN60("123456789012345678901234567890123456789012345678901234568197");
const Integer kP60("123456789012345678901234567890654833374525085966737125236501");

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failed expectation.
struct Checker {
  Outcome out;
  void expect(bool cond, const std::string& what) {
    if (!cond && out.pass) {
      out.pass = false;
      out.detail = what;
    }
  }
};

std::string str(const Integer& v) { return v.get_str(); }

// Leading digits and decimal exponent, e.g. 3.14e119.
std::string magnitude(const Integer& v) {
  const std::string s = Integer(abs(v)).get_str();
  return s.substr(0, 1) + "." + s.substr(1, 2) + "e" + std::to_string(s.size() - 1);
}

const Integer& largest(const std::vector<Integer>& cs) {
  const Integer* best = &cs.front();
  for (const auto& c : cs) {
    if (abs(c) > abs(*best)) best = &c;
  }
  return *best;
}

Outcome criterion1() {
  Checker c;
  const std::vector<Integer> expected = {
      Integer("737707086760731113357714241006081263"),
      Integer("-425319473946139603274605151187659"),
      Integer("5138800366453976780323726329446"),
      Integer("-823534263439730779968091389"),
      Integer("98394038810047812049302"),
      Integer("-3091990138604570"),
      Integer("313645809715"),
      Integer(1)};
  const auto poly = classpoly::hilbert_class_poly(quadratic::Discriminant(-71));
  c.expect(poly.coefficients.size() == expected.size(), "degree of P_-71 is not 7");
  for (std::size_t i = 0; i < expected.size() && i < poly.coefficients.size(); ++i) {
    c.expect(poly.coefficients[i] == expected[i],
             "coefficient of X^" + std::to_string(i) + " is " + str(poly.coefficients[i]));
  }
  return c.out;
}

Outcome criterion2() {
  Checker c;
  const quadratic::Discriminant d(-2419);
  const auto root = arith::sqrt_mod_prime(Integer(-2419), kN60);
  const auto sol = quadratic::cornacchia(d, kN60, root);
  c.expect(sol.has_value(), "no solution returned");
  if (sol) {
    c.expect(sol->x == Integer("531376585512740287835890668303"), "x = " + str(sol->x));
    c.expect(sol->y == Integer("9349802208089011828618119329"), "y = " + str(sol->y));
  }
  return c.out;
}

Outcome criterion3() {
  Checker c;
  construct::SearchPolicy policy;
  const auto r = construct::fixed_order_curve(kN60, policy);
  c.expect(r.d.value() == -2419, "D = " + std::to_string(r.d.value()));
  c.expect(r.p == kP60, "p = " + str(r.p));
  c.expect(r.rounds_used == 1, "rounds_used = " + std::to_string(r.rounds_used));
  c.expect(r.basis_primes.size() == 15,
           "basis has " + std::to_string(r.basis_primes.size()) + " primes");
  for (auto p : r.basis_primes) c.expect(p < 136, "basis prime " + std::to_string(p) + " >= 136");
  c.expect(r.certificate.n == kN60, "certificate is for another order");
  c.expect(ec::check_order_certificate(r.certificate) == ec::CertificateCheck::Ok,
           "order certificate rejected");
  c.expect(construct::check_certificate(r).ok(), "result certificate rejected");
  // Independent re-check: N * P = O for a fresh point and the witness.
  c.expect(ec::scalar_mul(kN60, r.certificate.witness, r.curve).is_infinity(),
           "N * witness != O");
  return c.out;
}

Outcome criterion4() {
  Checker c;
  const quadratic::Discriminant d(-2419);
  const auto g = classpoly::gamma2_class_poly(d);
  const auto h = classpoly::hilbert_class_poly(d);
  c.expect(g.degree() == 8, "gamma2 degree " + std::to_string(g.degree()));
  c.expect(g.max_coefficient_digits() <= 40,
           "gamma2 max digits " + std::to_string(g.max_coefficient_digits()));
  c.expect(h.degree() == 8, "j degree " + std::to_string(h.degree()));
  const auto hd = h.max_coefficient_digits();
  c.expect(hd >= 115 && hd <= 119, "j max digits " + std::to_string(hd) + " (largest |c| = " +
                                       magnitude(largest(h.coefficients)) + ")");
  bool has119 = false;
  for (const auto& co : h.coefficients) has119 |= arith::decimal_digits(co) == 119;
  c.expect(has119, "no j coefficient of exactly 119 digits");
  // gamma2 roots cube to j roots: the cubed gamma2 root must be a root of P_j.
  const auto gr = classpoly::find_root_mod_p(g, kP60);
  const auto j = classpoly::invariant_root_to_j(classpoly::RootTransport::GAMMA2, gr, kP60);
  Integer acc = 0;
  for (auto it = h.coefficients.rbegin(); it != h.coefficients.rend(); ++it) {
    acc = arith::mod(acc * j + *it, kP60);
  }
  c.expect(acc == 0, "gamma2 root cubed is not a root of P_j mod p");
  return c.out;
}

Outcome criterion5() {
  Checker c;
  const std::vector<Integer> pf = {1, -221, 12593, 42026, 39662, -3810, 14637, 87, 1};
  classpoly::ClassPolynomial poly;
  poly.d = quadratic::Discriminant(-2419);
  poly.kind = classpoly::InvariantKind::EXTERNAL;
  poly.coefficients = pf;
  c.expect(classpoly::split_completely_check(poly, kP60), "P^f_-2419 does not split mod p");
  // The printed curve Y^2 = X^3 + aX - a: N * (1, 1) = O, and j(E_a) is a
  // root of P_-2419 mod p.
  const Integer a_printed("112507913528623610837613885503682230698868883572599681384335");
  const ec::Curve printed(kP60, a_printed, arith::mod(-a_printed, kP60));
  c.expect(ec::on_curve(ec::Point::affine(1, 1), printed), "(1, 1) is not on E_a");
  c.expect(ec::scalar_mul(kN60, ec::Point::affine(1, 1), printed).is_infinity(),
           "N * (1, 1) != O on E_a");
  const auto h = classpoly::hilbert_class_poly(quadratic::Discriminant(-2419));
  const Integer j = printed.j_invariant();
  Integer acc = 0;
  for (auto it = h.coefficients.rbegin(); it != h.coefficients.rend(); ++it) {
    acc = arith::mod(acc * j + *it, kP60);
  }
  c.expect(acc == 0, "j(E_a) is not a root of P_-2419 mod p");
  c.expect(ec::verify_order(printed, kN60).has_value(), "E_a is not certified for N");
  return c.out;
}

Outcome criterion6() {
  Checker c;
  construct::SearchPolicy policy;
  policy.scan_mode = construct::ScanMode::Sequential;
  policy.scan_from = Integer("1000000000000000000000000000000000000000000000000000000000099");
  const auto r = construct::fixed_size_curve(60, quadratic::Discriminant(-3), policy);
  Integer ten60;
  mpz_ui_pow_ui(ten60.get_mpz_t(), 10, 60);
  c.expect(r.p == ten60 + 1059, "p = " + str(r.p));
  c.expect(r.q == Integer("999999999999999999999999999998130705774503095542609960125197"),
           "q = " + str(r.q));
  c.expect(r.primes_scanned == 4, "primes scanned = " + std::to_string(r.primes_scanned));
  c.expect(construct::check_certificate(r).ok(), "certificate rejected");
  // The printed B = 537824 = 14^5.
  const ec::Curve printed(r.p, 0, 537824);
  c.expect(ec::verify_order(printed, r.q).has_value(), "Y^2 = X^3 + 537824 lacks q points");
  return c.out;
}

Outcome criterion7() {
  Checker c;
  const std::pair<long, std::size_t> table[] = {
      {-15907, 15}, {-2419, 8}, {-71, 7}, {-590971, 228}};
  for (auto [d, h] : table) {
    const auto got = quadratic::class_number(quadratic::Discriminant(d));
    c.expect(got == h, "h(" + std::to_string(d) + ") = " + std::to_string(got));
  }
  return c.out;
}

// Brute-force oracles.
std::size_t brute_class_number(long d) {
  std::size_t h = 0;
  const long dd = -d;
  for (long a = 1; 3 * a * a <= dd; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      const long num = b * b - d;
      if (num % (4 * a) != 0) continue;
      const long cc = num / (4 * a);
      if (cc < a) continue;
      if (a == cc && b < 0) continue;
      if (std::gcd(std::gcd(a, std::labs(b)), cc) != 1) continue;
      ++h;
    }
  }
  return h;
}

bool brute_cornacchia(long d, long n, long& x, long& y) {
  for (y = 1; -d * y * y <= 4 * n; ++y) {
    const long rest = 4 * n + d * y * y;
    const long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(rest))));
    for (long s = std::max(0L, r - 2); s <= r + 2; ++s) {
      if (s * s == rest && s > 0) {
        x = s;
        return true;
      }
    }
  }
  return false;
}

Outcome criterion8() {
  Checker c;
  std::mt19937_64 rng(20061108);
  // Desk-scale end-to-end sweep.
  for (long n = 100; n <= 3000 && c.out.pass; ++n) {
    if (!arith::is_probable_prime(Integer(n))) continue;
    construct::SearchPolicy policy;
    policy.seed = static_cast<std::uint64_t>(n);
    const auto r = construct::fixed_order_curve(Integer(n), policy);
    const auto count = ec::naive_point_count(r.curve);
    c.expect(count == n, "N = " + std::to_string(n) + " gave a curve with " + str(count) +
                             " points");
    c.expect(r.p != n, "anomalous curve for N = " + std::to_string(n));
  }
  // Class numbers and Cornacchia against brute force.
  std::uniform_int_distribution<long> ddist(1, 5000);
  std::uniform_int_distribution<long> ndist(100, 200000);
  for (int trial = 0; trial < 200 && c.out.pass; ++trial) {
    long d = -ddist(rng);
    while (((d % 4) + 4) % 4 != 0 && ((d % 4) + 4) % 4 != 1) d = -ddist(rng);
    const auto h = quadratic::class_number(quadratic::Discriminant(d));
    c.expect(h == brute_class_number(d), "class number mismatch at D = " + std::to_string(d));

    long n = ndist(rng);
    while (!arith::is_probable_prime(Integer(n)) || arith::kronecker(Integer(d), Integer(n)) != 1) {
      n = ndist(rng);
    }
    const auto sol = quadratic::cornacchia(quadratic::Discriminant(d), Integer(n),
                                           arith::sqrt_mod_prime(Integer(d), Integer(n)));
    long bx = 0, by = 0;
    const bool brute = brute_cornacchia(d, n, bx, by);
    c.expect(sol.has_value() == brute,
             "Cornacchia solvability mismatch at D = " + std::to_string(d) +
                 ", N = " + std::to_string(n));
    // For D < -4 the positive solution is unique.
    if (sol && brute && d < -4) {
      c.expect(sol->x == bx && sol->y == by,
               "Cornacchia output differs at D = " + std::to_string(d) +
                   ", N = " + std::to_string(n));
    }
  }
  // Hasse symmetry.
  std::uniform_int_distribution<unsigned long> qdist(1, 1000000);
  for (int trial = 0; trial < 10000 && c.out.pass; ++trial) {
    const Integer q(qdist(rng));
    // Half the pairs are drawn close together so both outcomes occur.
    const Integer n = trial % 2 == 0 ? Integer(qdist(rng))
                                     : q + Integer(static_cast<long>(rng() % 4001) - 2000);
    if (n < 1) continue;
    c.expect(ec::in_hasse_interval(n, q) == ec::in_hasse_interval(q, n),
             "symmetry fails at N = " + str(n) + ", q = " + str(q));
  }
  return c.out;
}

Outcome criterion9() {
  Checker c;
  Integer n;
  mpz_ui_pow_ui(n.get_mpz_t(), 10, 2006);
  n += 2247;
  construct::SearchPolicy policy;
  policy.threads = std::max(1u, std::thread::hardware_concurrency());
  const auto r = construct::fixed_order_curve(n, policy);
  c.expect(r.d.value() == -15907, "D = " + std::to_string(r.d.value()));
  c.expect(r.class_number == 15, "h = " + std::to_string(r.class_number));
  c.expect(construct::check_certificate(r).ok(), "certificate rejected");
  classpoly::EvalOptions opts;
  opts.threads = policy.threads;
  const auto pj = classpoly::hilbert_class_poly(quadratic::Discriminant(-15907), opts);
  c.expect(pj.max_coefficient_digits() == 273,
           "P_-15907 max digits " + std::to_string(pj.max_coefficient_digits()) +
               " (largest |c| = " + magnitude(largest(pj.coefficients)) + ")");
  c.expect(classpoly::split_completely_check(pj, r.p), "P_-15907 does not split mod p");
  return c.out;
}

Outcome criterion10() {
  Checker c;
  const auto a = classpoly::reduction_factor({72, 1});
  const auto b = classpoly::reduction_factor({84, 4});
  c.expect(a == classpoly::Rational{72, 1}, "72/1 reduces to " + std::to_string(a.num) + "/" +
                                                std::to_string(a.den));
  c.expect(b == classpoly::Rational{21, 1}, "84/4 reduces to " + std::to_string(b.num) + "/" +
                                                std::to_string(b.den));
  c.expect(classpoly::within_gonality_bound(a), "72 fails the 800/7 bound");
  c.expect(classpoly::within_gonality_bound(b), "21 fails the 800/7 bound");
  c.expect(!classpoly::within_gonality_bound({115, 1}), "115 passes the 800/7 bound");
  return c.out;
}

}  // namespace

int main(int argc, char** argv) {
  bool stretch = false;
  for (int i = 1; i < argc; ++i) stretch |= std::strcmp(argv[i], "--stretch") == 0;
  if (const char* env = std::getenv("PRIMECM_STRETCH"); env != nullptr && env[0] == '1') {
    stretch = true;
  }

  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
    bool enabled;
  };
  const std::vector<Criterion> criteria = {
      {1, "P_-71 class polynomial, bit-exact", criterion1, true},
      {2, "Cornacchia for D = -2419 and N60", criterion2, true},
      {3, "fixed-order N60 end to end", criterion3, true},
      {4, "gamma2 vs j coefficient sizes for D = -2419", criterion4, true},
      {5, "double eta-quotient polynomial for D = -2419 splits mod p", criterion5, true},
      {6, "fixed-size k = 60, D = -3, sequential scan", criterion6, true},
      {7, "class numbers", criterion7, true},
      {8, "oracle sweep", criterion8, true},
      {9, "fixed-order 10^2006 + 2247", criterion9, stretch},
      {10, "reduction factors and the 800/7 bound", criterion10, true},
  };

  int failures = 0;
  for (const auto& cr : criteria) {
    if (!cr.enabled) {
      std::cout << "SKIP criterion " << cr.id << ": " << cr.title
                << " (pass --stretch to run)\n";
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.title
              << " [" << ms << " ms]";
    if (!o.pass) std::cout << " -- " << o.detail;
    std::cout << std::endl;
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}

#include "primecm/classpoly.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "primecm/polymod.hpp"

namespace primecm::classpoly {

namespace {

using quadratic::Discriminant;
using quadratic::QuadraticForm;

constexpr mpfr_prec_t kGuardBits = 32;

using ComplexPoly = std::vector<Complex>;

ComplexPoly multiply(const ComplexPoly& a, const ComplexPoly& b) {
  const auto prec = a.front().precision();
  ComplexPoly r(a.size() + b.size() - 1, Complex(prec));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Balanced product tree over [lo, hi); the split points depend only on the
// range, so the result is identical for any thread count.
ComplexPoly product_of_linear(const std::vector<Complex>& roots, std::size_t lo,
                              std::size_t hi) {
  if (hi - lo == 1) {
    const auto prec = roots[lo].precision();
    return {-roots[lo], Complex(1.0, 0.0, prec)};
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return multiply(product_of_linear(roots, lo, mid),
                  product_of_linear(roots, mid, hi));
}

// Rounds every coefficient; fails if any lies 1/4 or more from an integer.
std::optional<std::vector<Integer>> round_coefficients(const ComplexPoly& poly) {
  const auto prec = poly.front().precision();
  const Real quarter(0.25, prec);
  std::vector<Integer> out;
  out.reserve(poly.size());
  for (const auto& c : poly) {
    Integer z = c.re().round();
    const Real dist = abs(c.re() - from_integer(z, prec));
    if (mpfr_cmp(dist.get(), quarter.get()) >= 0) return std::nullopt;
    if (mpfr_cmpabs(c.im().get(), quarter.get()) >= 0) return std::nullopt;
    out.push_back(std::move(z));
  }
  if (out.back() != 1) return std::nullopt;
  return out;
}

// Exponent m such that the gamma2 class invariant attached to `form` equals
// zeta_3^(-m) * gamma2(tau_form). The target representative has 3 | b, reached
// through S (which fixes gamma2) and translations (each multiplying by
// zeta_3^(-1)).
unsigned gamma2_twist(const QuadraticForm& form) {
  auto shift_for = [](std::int64_t a, std::int64_t b) -> unsigned {
    for (unsigned k = 0; k < 3; ++k) {
      const std::int64_t bk = b - 2 * a * static_cast<std::int64_t>(k);
      if (((bk % 3) + 3) % 3 == 0) return k;
    }
    throw Error(ErrorCode::Internal, "gamma2: no translate with 3 | b");
  };
  const auto [a, b, c] = form;
  if (a % 3 != 0) return shift_for(a, b);
  if (c % 3 != 0) return shift_for(c, -b);
  return (1 + shift_for(a - b + c, 2 * a - b)) % 3;
}

Complex cube_root_of_unity_power(unsigned m, mpfr_prec_t prec) {
  // zeta_3^(-m) = exp(-2 pi i m / 3)
  Real theta = Real::pi(prec) * Real(-2.0 * m, prec) / Real(3.0, prec);
  return Complex::unit(theta);
}

std::size_t terms_needed(double im_tau, mpfr_prec_t bits) {
  // |q|^e < 2^-bits  <=>  e > bits * ln 2 / (2 pi Im tau)
  const double target = static_cast<double>(bits) * std::log(2.0) /
                        (2.0 * M_PI * im_tau);
  std::size_t n = 1;
  while (static_cast<double>(n) * (3.0 * n - 1.0) / 2.0 <= target) ++n;
  return n;
}

ClassPolynomial build(const Discriminant& d, InvariantKind kind,
                      const EvalOptions& options) {
  const auto forms = quadratic::reduced_forms(d);
  mpfr_prec_t prec = precision_for(d, forms, kind);
  for (unsigned attempt = 0; attempt <= options.max_escalations; ++attempt) {
    const auto values = class_invariant_values(d, kind, prec, options.threads);
    const auto poly = product_of_linear(values, 0, values.size());
    if (auto coeffs = round_coefficients(poly)) {
      return ClassPolynomial{d, kind, std::move(*coeffs)};
    }
    prec *= 2;
  }
  throw Error(ErrorCode::Internal,
              "class polynomial: rounding failed after precision escalation");
}

std::string trim_copy(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

const char* to_string(InvariantKind kind) noexcept {
  switch (kind) {
    case InvariantKind::J: return "j";
    case InvariantKind::GAMMA2: return "gamma2";
    case InvariantKind::EXTERNAL: return "external";
  }
  return "unknown";
}

InvariantKind invariant_kind_from_string(const std::string& name) {
  if (name == "j") return InvariantKind::J;
  if (name == "gamma2") return InvariantKind::GAMMA2;
  if (name == "external") return InvariantKind::EXTERNAL;
  throw Error(ErrorCode::InvalidArgument, "unknown invariant kind: " + name);
}

std::size_t ClassPolynomial::max_coefficient_digits() const {
  std::size_t best = 0;
  for (const auto& c : coefficients) best = std::max(best, arith::decimal_digits(c));
  return best;
}

Complex eta(const Complex& tau, mpfr_prec_t precision) {
  if (mpfr_sgn(tau.im().get()) <= 0) {
    throw Error(ErrorCode::DomainError, "eta: Im(tau) must be positive");
  }
  const mpfr_prec_t w = std::max(precision, tau.precision()) + kGuardBits;
  Complex t(Real(tau.re()), Real(tau.im()));
  mpfr_prec_round(t.re().get(), w, MPFR_RNDN);
  mpfr_prec_round(t.im().get(), w, MPFR_RNDN);

  const Real pi = Real::pi(w);
  const Complex two_pi_i(Real(w), pi * Real(2.0, w));
  const Complex q = exp(two_pi_i * t);
  const Complex q3 = q * q * q;

  // 1 + sum_{n>=1} (-1)^n (q^{n(3n-1)/2} + q^{n(3n+1)/2})
  Complex sum(1.0, 0.0, w);
  Complex qn = q;             // q^n
  Complex step = q;           // q^{3n-2}, so q^{e1(n)} = q^{e1(n-1)} * step
  Complex qe1(1.0, 0.0, w);   // q^{n(3n-1)/2}
  const std::size_t terms = terms_needed(tau.im().to_double(), w);
  for (std::size_t n = 1; n <= terms; ++n) {
    if (n > 1) {
      step = step * q3;
      qn = qn * q;
    }
    qe1 = qe1 * step;
    Complex term = qe1 + qe1 * qn;
    if (n % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }

  // q^{1/24} = exp(pi i tau / 12)
  const Complex pi_i_12(Real(w), pi / Real(12.0, w));
  Complex r = exp(pi_i_12 * t) * sum;
  mpfr_prec_round(r.re().get(), precision, MPFR_RNDN);
  mpfr_prec_round(r.im().get(), precision, MPFR_RNDN);
  return r;
}

ModularValues modular_values(const Complex& tau, mpfr_prec_t precision) {
  const mpfr_prec_t w = precision + kGuardBits;
  const Complex one(1.0, 0.0, w);
  const Complex half(0.5, 0.0, w);
  const Complex shifted = (tau + one) * half;

  // f = zeta_48^{-1} eta((tau + 1)/2) / eta(tau)
  const Real theta = -Real::pi(w) / Real(24.0, w);
  const Complex f = Complex::unit(theta) * eta(shifted, w) / eta(tau, w);

  const Complex f8 = pow(f, 8);
  const Complex f24 = f8 * f8 * f8;
  const Complex sixteen(16.0, 0.0, w);
  const Complex g2 = (f24 - sixteen) / f8;
  const Complex j = g2 * g2 * g2;
  return ModularValues{f, g2, j};
}

Complex cm_point(const QuadraticForm& form, mpfr_prec_t precision) {
  const Real two_a(2.0 * static_cast<double>(form.a), precision);
  const Real b = from_integer(Integer(static_cast<long>(form.b)), precision);
  const Real absd = from_integer(Integer(static_cast<long>(-form.discriminant())), precision);
  return Complex(-b / two_a, sqrt(absd) / two_a);
}

mpfr_prec_t precision_for(const Discriminant& d, const std::vector<QuadraticForm>& forms,
                          InvariantKind kind) {
  double inv_a = 0;
  for (const auto& f : forms) inv_a += 1.0 / static_cast<double>(f.a);
  double lead = M_PI * std::sqrt(static_cast<double>(d.magnitude())) / std::log(2.0) * inv_a;
  if (kind == InvariantKind::GAMMA2) lead /= 3.0;
  return static_cast<mpfr_prec_t>(std::ceil(lead)) +
         static_cast<mpfr_prec_t>(4 * forms.size()) + 64;
}

std::vector<Complex> class_invariant_values(const Discriminant& d, InvariantKind kind,
                                            mpfr_prec_t precision, unsigned threads) {
  if (kind == InvariantKind::EXTERNAL) {
    throw Error(ErrorCode::InvalidArgument, "external invariants cannot be evaluated");
  }
  if (kind == InvariantKind::GAMMA2 && d.magnitude() % 3 == 0) {
    throw Error(ErrorCode::InvariantNotApplicable, "gamma2 requires 3 not dividing D");
  }
  const auto forms = quadratic::reduced_forms(d);
  std::vector<Complex> values(forms.size(), Complex(precision));

  auto work = [&](std::size_t i) {
    const auto mv = modular_values(cm_point(forms[i], precision + kGuardBits), precision);
    if (kind == InvariantKind::J) {
      values[i] = mv.j;
    } else {
      values[i] = mv.gamma2 * cube_root_of_unity_power(gamma2_twist(forms[i]),
                                                       mv.gamma2.precision());
    }
  };

  const unsigned n_threads =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(forms.size())));
  if (n_threads == 1) {
    for (std::size_t i = 0; i < forms.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned t = 0; t < n_threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < forms.size(); i += n_threads) work(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }
  return values;
}

ClassPolynomial hilbert_class_poly(const Discriminant& d, const EvalOptions& options) {
  return build(d, InvariantKind::J, options);
}

ClassPolynomial gamma2_class_poly(const Discriminant& d, const EvalOptions& options) {
  if (d.magnitude() % 3 == 0) {
    throw Error(ErrorCode::InvariantNotApplicable, "gamma2 requires 3 not dividing D");
  }
  return build(d, InvariantKind::GAMMA2, options);
}

Integer invariant_root_to_j(RootTransport kind, const Integer& x_in, const Integer& p) {
  const Integer x = arith::mod(x_in, p);
  switch (kind) {
    case RootTransport::J:
      return x;
    case RootTransport::GAMMA2:
      return x * x % p * x % p;
    case RootTransport::WEBER_F: {
      if (x == 0) throw Error(ErrorCode::DomainError, "Weber f root must be non-zero");
      const arith::ModulusContext ctx(p);
      const Integer f24 = arith::mod_pow(x, 24, ctx);
      Integer t = arith::mod(f24 - 16, p);
      t = t * t % p * t % p;
      return t * arith::invert_mod(f24, p) % p;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown root transport");
}

Integer find_root_mod_p(const ClassPolynomial& poly, const Integer& p, std::uint64_t seed) {
  return find_root_mod_p(poly.coefficients, p, seed);
}

Integer find_root_mod_p(const std::vector<Integer>& coefficients, const Integer& p,
                        std::uint64_t seed) {
  using namespace polymod;
  if (p < 3 || mpz_even_p(p.get_mpz_t())) {
    throw Error(ErrorCode::InvalidArgument, "find_root_mod_p: p must be an odd prime");
  }
  const Poly P = polymod::reduce(coefficients, p);
  if (P.empty()) throw Error(ErrorCode::InvalidArgument, "find_root_mod_p: zero polynomial");
  if (degree(P) < 1) throw Error(ErrorCode::NoRootModP, "polynomial is constant mod p");

  Poly g = polymod::gcd(sub(x_powmod(p, P, p), Poly{0, 1}, p), P, p);
  if (degree(g) < 1) throw Error(ErrorCode::NoRootModP, "no root mod p");

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(seed));
  const Integer half = (p - 1) / 2;
  unsigned tries = 0;
  while (degree(g) > 1) {
    if (++tries > 256) throw Error(ErrorCode::NoRootModP, "root splitting did not converge");
    const Integer delta = rng.get_z_range(p);
    Poly h = powmod(Poly{delta, 1}, half, g, p);
    h = sub(h, Poly{1}, p);
    if (h.empty()) continue;
    h = polymod::gcd(g, h, p);
    const long dh = degree(h);
    if (dh < 1 || dh == degree(g)) continue;
    g = (2 * dh <= degree(g)) ? h : make_monic(divmod(g, h, p).first, p);
  }
  const Integer root = arith::mod(-g[0], p);
  if (eval(P, root, p) != 0) throw Error(ErrorCode::NoRootModP, "root check failed");
  return root;
}

bool split_completely_check(const ClassPolynomial& poly, const Integer& p) {
  return split_completely_check(poly.coefficients, p);
}

bool split_completely_check(const std::vector<Integer>& coefficients, const Integer& p) {
  using namespace polymod;
  const Poly P = polymod::reduce(coefficients, p);
  if (degree(P) != static_cast<long>(coefficients.size()) - 1) return false;
  if (degree(P) < 1) return degree(P) == 0;
  const Poly g = polymod::gcd(sub(x_powmod(p, P, p), Poly{0, 1}, p), P, p);
  return degree(g) == degree(P);
}

Rational reduction_factor(const ModularRelation& relation) {
  if (relation.deg_in_f == 0 || relation.deg_in_j == 0) {
    throw Error(ErrorCode::InvalidArgument, "modular relation degrees must be >= 1");
  }
  const auto g = std::gcd(relation.deg_in_f, relation.deg_in_j);
  return Rational{relation.deg_in_f / g, relation.deg_in_j / g};
}

bool within_gonality_bound(const Rational& r) {
  return static_cast<unsigned __int128>(r.num) * 7 <=
         static_cast<unsigned __int128>(r.den) * 800;
}

void write_record(std::ostream& out, const ClassPolynomial& poly) {
  out << poly.d.value() << ' ' << to_string(poly.kind) << ' ' << poly.degree() << '\n';
  for (const auto& c : poly.coefficients) out << c.get_str() << '\n';
}

std::vector<ClassPolynomial> read_records(std::istream& in) {
  std::vector<ClassPolynomial> out;
  std::string line;
  while (std::getline(in, line)) {
    line = trim_copy(line);
    if (line.empty()) continue;
    std::istringstream header(line);
    long long dval = 0;
    std::string kind;
    std::size_t degree = 0;
    if (!(header >> dval >> kind >> degree)) {
      throw Error(ErrorCode::InvalidArgument, "malformed class polynomial header: " + line);
    }
    ClassPolynomial poly{Discriminant(dval), invariant_kind_from_string(kind), {}};
    for (std::size_t i = 0; i <= degree; ++i) {
      if (!std::getline(in, line)) {
        throw Error(ErrorCode::InvalidArgument, "truncated class polynomial record");
      }
      Integer c;
      if (c.set_str(trim_copy(line), 10) != 0) {
        throw Error(ErrorCode::InvalidArgument, "bad coefficient: " + line);
      }
      poly.coefficients.push_back(std::move(c));
    }
    if (poly.coefficients.back() != 1) {
      throw Error(ErrorCode::InvalidArgument, "class polynomial record is not monic");
    }
    out.push_back(std::move(poly));
  }
  return out;
}

ClassPolynomial cached_class_poly(const std::string& path, const Discriminant& d,
                                  InvariantKind kind, const EvalOptions& options) {
  {
    std::ifstream in(path);
    if (in) {
      for (auto& rec : read_records(in)) {
        if (rec.d == d && rec.kind == kind) return rec;
      }
    }
  }
  ClassPolynomial poly;
  switch (kind) {
    case InvariantKind::J: poly = hilbert_class_poly(d, options); break;
    case InvariantKind::GAMMA2: poly = gamma2_class_poly(d, options); break;
    case InvariantKind::EXTERNAL:
      throw Error(ErrorCode::InvalidArgument, "external polynomials must be supplied");
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write cache file " + path);
  write_record(out, poly);
  return poly;
}

}  // namespace primecm::classpoly

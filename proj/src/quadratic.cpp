#include "primecm/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace primecm::quadratic {

namespace {

bool squarefree(std::uint64_t m) {
  for (std::uint64_t f = 2; f * f <= m; ++f) {
    if (m % (f * f) == 0) return false;
    if (m % f == 0) m /= f;
  }
  return true;
}

bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

void collect(const std::vector<BasisEntry>& basis, std::uint64_t bound,
             std::size_t start, unsigned __int128 magnitude, bool negative,
             std::vector<std::uint32_t>& chosen,
             std::vector<DiscriminantCandidate>& out) {
  for (std::size_t i = start; i < basis.size(); ++i) {
    const unsigned __int128 next = magnitude * basis[i].p;
    if (next >= bound) break;  // basis is sorted by p
    const bool next_negative = negative != (basis[i].p_star < 0);
    chosen.push_back(static_cast<std::uint32_t>(i));
    const auto m = static_cast<std::int64_t>(next);
    if (next_negative && ((-m) % 8 + 8) % 8 == 5) {
      out.push_back({Discriminant(-m), chosen});
    }
    collect(basis, bound, i + 1, next, next_negative, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

Discriminant::Discriminant(std::int64_t value) : value_(value) {
  const std::int64_t r = ((value % 4) + 4) % 4;
  if (value >= 0 || (r != 0 && r != 1)) {
    throw Error(ErrorCode::InvalidArgument,
                "discriminant must be negative and 0 or 1 mod 4");
  }
}

bool Discriminant::is_fundamental() const {
  const std::uint64_t m = magnitude();
  if ((((value_ % 4) + 4) % 4) == 1) return squarefree(m);
  const std::int64_t q = value_ / 4;
  const std::int64_t r = ((q % 4) + 4) % 4;
  return (r == 2 || r == 3) && squarefree(m / 4);
}

bool Discriminant::is_algorithm_eligible() const noexcept {
  return ((value_ % 8) + 8) % 8 == 5;
}

bool QuadraticForm::is_reduced() const noexcept {
  if (a <= 0) return false;
  if (std::abs(b) > a || a > c) return false;
  if ((std::abs(b) == a || a == c) && b < 0) return false;
  return true;
}

std::vector<QuadraticForm> reduced_forms(const Discriminant& d) {
  const std::int64_t D = d.value();
  std::vector<QuadraticForm> forms;
  // a <= sqrt(|D|/3) for reduced forms.
  for (std::int64_t a = 1; 3 * a * a <= -D; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if (((b - D) % 2) != 0) continue;
      const std::int64_t num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      forms.push_back({a, b, c});
    }
  }
  std::sort(forms.begin(), forms.end(), [](const auto& l, const auto& r) {
    return l.a != r.a ? l.a < r.a : l.b < r.b;
  });
  return forms;
}

std::size_t class_number(const Discriminant& d) { return reduced_forms(d).size(); }

std::uint64_t basis_window_end(const Integer& n, unsigned round) {
  return static_cast<std::uint64_t>(std::floor((round + 1) * arith::ln(n)));
}

std::vector<BasisEntry> build_basis_round(const Integer& n, unsigned round) {
  if (n <= 5 || mpz_even_p(n.get_mpz_t())) {
    throw Error(ErrorCode::InvalidArgument, "basis: N must be an odd prime > 5");
  }
  const std::uint64_t lo =
      static_cast<std::uint64_t>(std::floor(round * arith::ln(n)));
  const std::uint64_t hi = basis_window_end(n, round);

  std::vector<BasisEntry> out;
  for (std::uint64_t p = std::max<std::uint64_t>(lo + 1, 3); p <= hi; ++p) {
    if (!is_small_prime(p)) continue;
    if (arith::kronecker(n, Integer(static_cast<unsigned long>(p))) != 1) continue;
    BasisEntry e;
    e.p = static_cast<std::uint32_t>(p);
    e.p_star = (p % 4 == 1) ? static_cast<std::int64_t>(p)
                            : -static_cast<std::int64_t>(p);
    e.sqrt_p_star_mod_n = arith::sqrt_mod_prime(Integer(static_cast<long>(e.p_star)), n);
    if (arith::mod(e.sqrt_p_star_mod_n * e.sqrt_p_star_mod_n -
                       static_cast<long>(e.p_star),
                   n) != 0) {
      throw Error(ErrorCode::Internal, "basis: square root check failed");
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<DiscriminantCandidate> enumerate_candidates(
    const std::vector<BasisEntry>& basis, std::uint64_t bound) {
  std::vector<DiscriminantCandidate> out;
  std::vector<std::uint32_t> chosen;
  // The pruning in collect() relies on ascending p.
  if (!std::is_sorted(basis.begin(), basis.end(),
                      [](const auto& l, const auto& r) { return l.p < r.p; })) {
    std::vector<BasisEntry> sorted = basis;
    std::vector<std::uint32_t> order(basis.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(),
              [&](auto l, auto r) { return basis[l].p < basis[r].p; });
    for (std::size_t i = 0; i < order.size(); ++i) sorted[i] = basis[order[i]];
    collect(sorted, bound, 0, 1, false, chosen, out);
    for (auto& c : out) {
      for (auto& f : c.factors) f = order[f];
    }
  } else {
    collect(basis, bound, 0, 1, false, chosen, out);
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    return l.d.magnitude() < r.d.magnitude();
  });
  return out;
}

Integer candidate_sqrt(const std::vector<BasisEntry>& basis,
                       const DiscriminantCandidate& candidate, const Integer& n) {
  Integer r = 1;
  for (auto i : candidate.factors) r = r * basis.at(i).sqrt_p_star_mod_n % n;
  return r;
}

std::vector<std::pair<Discriminant, Integer>> discriminant_candidates(
    const std::vector<BasisEntry>& basis, std::uint64_t bound, const Integer& n) {
  std::vector<std::pair<Discriminant, Integer>> out;
  for (const auto& c : enumerate_candidates(basis, bound)) {
    out.emplace_back(c.d, candidate_sqrt(basis, c, n));
  }
  return out;
}

std::optional<CornacchiaSolution> cornacchia(const Discriminant& d,
                                             const Integer& n,
                                             const Integer& sqrt_d_mod_n) {
  const Integer D(static_cast<long>(d.value()));
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "cornacchia: n < 2");
  Integer x0 = arith::mod(sqrt_d_mod_n, n);
  if (arith::mod(x0 * x0 - D, n) != 0) {
    throw Error(ErrorCode::BadWitness, "cornacchia: witness is not a square root of D");
  }
  const Integer four_n = 4 * n;
  if (-D > four_n) return std::nullopt;

  // Lift to x0^2 = D (mod 4n): for odd n pick the root with x0 = D (mod 2).
  if (mpz_odd_p(n.get_mpz_t())) {
    if (mpz_odd_p(x0.get_mpz_t()) != mpz_odd_p(D.get_mpz_t())) x0 = n - x0;
  } else {
    // Even n: search the four lifts mod 2n for one that works mod 4n.
    bool found = false;
    for (int k = 0; k < 4 && !found; ++k) {
      Integer cand = x0 + k * n;
      if (arith::mod(cand * cand - D, four_n) == 0) {
        x0 = cand;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }

  Integer a = 2 * n;
  Integer b = arith::mod(x0, a);
  const Integer limit = arith::isqrt(four_n);
  while (b > limit) {
    Integer r;
    mpz_tdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a = std::move(b);
    b = std::move(r);
  }

  const Integer rest = four_n - b * b;
  Integer q;
  if (!mpz_divisible_p(rest.get_mpz_t(), D.get_mpz_t())) return std::nullopt;
  mpz_divexact(q.get_mpz_t(), rest.get_mpz_t(), D.get_mpz_t());
  q = -q;
  Integer y;
  if (q <= 0 || !arith::is_square(q, &y)) return std::nullopt;
  if (b == 0) return std::nullopt;
  return CornacchiaSolution{b, y};
}

}  // namespace primecm::quadratic

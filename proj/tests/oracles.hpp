#pragma once

// Brute-force reference implementations used only by the tests.

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Legendre symbol by exhaustive squaring, p an odd prime.
inline int legendre(std::int64_t a, std::uint64_t p) {
  const std::uint64_t r = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(p)) +
                                                      static_cast<std::int64_t>(p)) %
                                                     static_cast<std::int64_t>(p));
  if (r == 0) return 0;
  for (std::uint64_t x = 1; x < p; ++x) {
    if (x * x % p == r) return 1;
  }
  return -1;
}

// Primitive reduced forms counted directly.
inline std::size_t class_number(std::int64_t d) {
  std::size_t h = 0;
  for (std::int64_t a = 1; 3 * a * a <= -d; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b - d;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a || (a == c && b < 0)) continue;
      if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
      ++h;
    }
  }
  return h;
}

// Smallest y > 0 with x^2 - d y^2 = 4n, x > 0.
inline std::optional<std::pair<std::int64_t, std::int64_t>> norm_solution(std::int64_t d,
                                                                          std::int64_t n) {
  for (std::int64_t x = 1; x * x <= 4 * n; ++x) {
    const std::int64_t rest = 4 * n - x * x;
    if (rest <= 0 || rest % (-d) != 0) continue;
    const std::int64_t yy = rest / (-d);
    std::int64_t y = 0;
    while ((y + 1) * (y + 1) <= yy) ++y;
    if (y > 0 && y * y == yy) return std::make_pair(x, y);
  }
  return std::nullopt;
}

// #E(F_p) for Y^2 = X^3 + aX + b by exhaustive enumeration.
inline std::int64_t point_count(std::int64_t p, std::int64_t a, std::int64_t b) {
  std::vector<int> squares(static_cast<std::size_t>(p), 0);
  for (std::int64_t y = 0; y < p; ++y) squares[static_cast<std::size_t>(y * y % p)]++;
  std::int64_t count = 1;
  for (std::int64_t x = 0; x < p; ++x) {
    const std::int64_t r = (((x * x % p) * x + a * x + b) % p + p) % p;
    count += squares[static_cast<std::size_t>(r)];
  }
  return count;
}

}  // namespace oracle

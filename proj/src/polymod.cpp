#include "primecm/polymod.hpp"

#include <algorithm>
#include <cstdint>

namespace primecm::polymod {

namespace {

constexpr std::size_t kLimbBits = 64;

Poly schoolbook(const Poly& a, const Poly& b, const Integer& p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& c : r) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
  trim(r);
  return r;
}

// Coefficients are written into limb-aligned slots of `limbs` words each.
Integer pack(const Poly& a, std::size_t limbs) {
  std::vector<std::uint64_t> buf(a.size() * limbs, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t count = 0;
    mpz_export(buf.data() + i * limbs, &count, -1, sizeof(std::uint64_t), 0, 0,
               a[i].get_mpz_t());
  }
  Integer z;
  mpz_import(z.get_mpz_t(), buf.size(), -1, sizeof(std::uint64_t), 0, 0,
             buf.data());
  return z;
}

Poly unpack(const Integer& z, std::size_t terms, std::size_t limbs,
            const Integer& p) {
  std::vector<std::uint64_t> buf(terms * limbs + 1, 0);
  std::size_t count = 0;
  mpz_export(buf.data(), &count, -1, sizeof(std::uint64_t), 0, 0, z.get_mpz_t());
  Poly r(terms);
  for (std::size_t i = 0; i < terms; ++i) {
    mpz_import(r[i].get_mpz_t(), limbs, -1, sizeof(std::uint64_t), 0, 0,
               buf.data() + i * limbs);
    mpz_mod(r[i].get_mpz_t(), r[i].get_mpz_t(), p.get_mpz_t());
  }
  trim(r);
  return r;
}

}  // namespace

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long degree(const Poly& a) { return static_cast<long>(a.size()) - 1; }

Poly reduce(const std::vector<Integer>& a, const Integer& p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = arith::mod(a[i], p);
  trim(r);
  return r;
}

Poly add(const Poly& a, const Poly& b, const Integer& p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
    if (r[i] >= p) r[i] -= p;
  }
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, const Integer& p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
    if (r[i] < 0) r[i] += p;
  }
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, const Integer& p) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) <= 2) return schoolbook(a, b, p);
  // Each product coefficient is below min(len) * p^2.
  const std::size_t bits = 2 * mpz_sizeinbase(p.get_mpz_t(), 2) +
                           mpz_sizeinbase(Integer(std::min(a.size(), b.size())).get_mpz_t(), 2) + 1;
  const std::size_t limbs = (bits + kLimbBits - 1) / kLimbBits;
  const Integer za = pack(a, limbs);
  const Integer zb = (&a == &b) ? za : pack(b, limbs);
  Integer prod;
  if (&a == &b) {
    mpz_mul(prod.get_mpz_t(), za.get_mpz_t(), za.get_mpz_t());
  } else {
    mpz_mul(prod.get_mpz_t(), za.get_mpz_t(), zb.get_mpz_t());
  }
  return unpack(prod, a.size() + b.size() - 1, limbs, p);
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& m, const Integer& p) {
  if (m.empty()) throw Error(ErrorCode::DomainError, "polynomial division by zero");
  const std::size_t dm = m.size() - 1;
  if (a.size() <= dm) return {Poly{}, a};
  const Integer lead_inv = arith::invert_mod(m.back(), p);
  Poly r = a;
  Poly q(a.size() - dm, 0);
  for (std::size_t i = a.size(); i-- > dm;) {
    mpz_mod(r[i].get_mpz_t(), r[i].get_mpz_t(), p.get_mpz_t());
    if (r[i] == 0) continue;
    Integer coef = r[i] * lead_inv % p;
    q[i - dm] = coef;
    for (std::size_t j = 0; j < dm; ++j) r[i - dm + j] -= coef * m[j];
    r[i] = 0;
  }
  r.resize(dm);
  for (auto& c : r) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
  trim(r);
  trim(q);
  return {q, r};
}

Poly rem(const Poly& a, const Poly& m, const Integer& p) { return divmod(a, m, p).second; }

Poly make_monic(const Poly& a, const Integer& p) {
  if (a.empty()) return a;
  const Integer inv = arith::invert_mod(a.back(), p);
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * inv % p;
  return r;
}

Poly gcd(Poly a, Poly b, const Integer& p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

Poly powmod(const Poly& base, const Integer& e, const Poly& m, const Integer& p) {
  Poly result{1};
  result = rem(result, m, p);
  Poly b = rem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), m, p);
  }
  return result;
}

Poly x_powmod(const Integer& e, const Poly& m, const Integer& p) {
  Poly result = rem(Poly{1}, m, p);
  if (e == 0) return result;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) {
      result.insert(result.begin(), Integer(0));  // multiply by X
      result = rem(result, m, p);
    }
  }
  return result;
}

Integer eval(const Poly& a, const Integer& x, const Integer& p) {
  Integer r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = (r * x + a[i]) % p;
  return arith::mod(r, p);
}

}  // namespace primecm::polymod

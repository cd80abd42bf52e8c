#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "primecm/arith.hpp"

namespace primecm::quadratic {

/// A negative quadratic discriminant, D = 0 or 1 (mod 4).
class Discriminant {
 public:
  /// Throws InvalidArgument unless D < 0 and D = 0, 1 (mod 4).
  explicit Discriminant(std::int64_t value);

  std::int64_t value() const noexcept { return value_; }
  std::uint64_t magnitude() const noexcept {
    return static_cast<std::uint64_t>(-value_);
  }

  bool is_fundamental() const;
  /// D = 5 (mod 8): the only discriminants usable for odd target orders.
  bool is_algorithm_eligible() const noexcept;

  friend bool operator==(const Discriminant&, const Discriminant&) = default;

 private:
  std::int64_t value_;
};

/// Reduced positive definite form a x^2 + b xy + c y^2.
struct QuadraticForm {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  std::int64_t discriminant() const noexcept { return b * b - 4 * a * c; }
  bool is_reduced() const noexcept;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

struct BasisEntry {
  std::uint32_t p = 0;
  std::int64_t p_star = 0;  // (-1)^((p-1)/2) p
  Integer sqrt_p_star_mod_n;
};

struct CornacchiaSolution {
  Integer x;
  Integer y;
};

/// One candidate from the good-prime basis. `factors` index into the basis
/// table the candidate was built from.
struct DiscriminantCandidate {
  Discriminant d;
  std::vector<std::uint32_t> factors;
};

/// One primitive reduced form per class, sorted by (a, b); the principal form
/// comes first.
std::vector<QuadraticForm> reduced_forms(const Discriminant& d);

std::size_t class_number(const Discriminant& d);

/// Good primes of the round-r window (floor(r ln N), floor((r+1) ln N)].
std::vector<BasisEntry> build_basis_round(const Integer& n, unsigned round);

/// Upper end floor((r+1) ln N) of the round-r window.
std::uint64_t basis_window_end(const Integer& n, unsigned round);

/// All negative products of distinct p* from `basis` with D = 5 (mod 8) and
/// |D| < bound, ordered by increasing |D|. Square roots are not formed here;
/// see candidate_sqrt.
std::vector<DiscriminantCandidate> enumerate_candidates(
    const std::vector<BasisEntry>& basis, std::uint64_t bound);

/// Product of the stored square roots of a candidate's factors, mod n.
Integer candidate_sqrt(const std::vector<BasisEntry>& basis,
                       const DiscriminantCandidate& candidate, const Integer& n);

/// enumerate_candidates paired with their square roots mod n.
std::vector<std::pair<Discriminant, Integer>> discriminant_candidates(
    const std::vector<BasisEntry>& basis, std::uint64_t bound, const Integer& n);

/// Solves x^2 - D y^2 = 4n with x, y > 0 given sqrt(D) mod n, for n an odd
/// prime. Throws BadWitness when sqrt_d_mod_n^2 != D (mod n).
std::optional<CornacchiaSolution> cornacchia(const Discriminant& d,
                                             const Integer& n,
                                             const Integer& sqrt_d_mod_n);

}  // namespace primecm::quadratic

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "primecm/complex.hpp"
#include "primecm/quadratic.hpp"

namespace primecm::classpoly {

/// J and GAMMA2 polynomials are computed here; EXTERNAL ones (for instance a
/// Weber-f polynomial) are supplied by the caller.
enum class InvariantKind { J, GAMMA2, EXTERNAL };

/// Invariants whose roots mod p can be carried to j-invariants.
enum class RootTransport { J, GAMMA2, WEBER_F };

const char* to_string(InvariantKind kind) noexcept;
InvariantKind invariant_kind_from_string(const std::string& name);

struct ClassPolynomial {
  quadratic::Discriminant d{-3};
  InvariantKind kind = InvariantKind::J;
  std::vector<Integer> coefficients;  // ascending, monic

  std::size_t degree() const noexcept {
    return coefficients.empty() ? 0 : coefficients.size() - 1;
  }
  /// Decimal length of the largest coefficient.
  std::size_t max_coefficient_digits() const;
};

/// Polynomial relation Psi(f, j) = 0 between a class function f and j,
/// described by its two partial degrees.
struct ModularRelation {
  std::uint64_t deg_in_f = 1;
  std::uint64_t deg_in_j = 1;
};

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Values of the three modular functions at one point of the upper half plane.
struct ModularValues {
  Complex weber_f;
  Complex gamma2;
  Complex j;
};

struct EvalOptions {
  unsigned threads = 1;
  /// Extra doublings allowed when a coefficient does not round cleanly.
  unsigned max_escalations = 5;
};

/// Dedekind eta via the pentagonal-number series. Throws DomainError when
/// Im(tau) <= 0.
Complex eta(const Complex& tau, mpfr_prec_t precision);

/// Weber f, gamma2 = (f^24 - 16) / f^8 and j = gamma2^3 at tau.
ModularValues modular_values(const Complex& tau, mpfr_prec_t precision);

/// Working precision in bits for the class polynomial of `kind` over `forms`.
mpfr_prec_t precision_for(const quadratic::Discriminant& d,
                          const std::vector<quadratic::QuadraticForm>& forms,
                          InvariantKind kind);

/// CM point (-b + sqrt(D)) / (2a) of a form.
Complex cm_point(const quadratic::QuadraticForm& form, mpfr_prec_t precision);

ClassPolynomial hilbert_class_poly(const quadratic::Discriminant& d,
                                   const EvalOptions& options = {});

/// Throws InvariantNotApplicable when 3 | D.
ClassPolynomial gamma2_class_poly(const quadratic::Discriminant& d,
                                  const EvalOptions& options = {});

/// Complex conjugates used to build the polynomial, in reduced-form order.
std::vector<Complex> class_invariant_values(const quadratic::Discriminant& d,
                                            InvariantKind kind,
                                            mpfr_prec_t precision,
                                            unsigned threads = 1);

/// Maps a root mod p of an invariant's class polynomial to a j-invariant.
Integer invariant_root_to_j(RootTransport kind, const Integer& x, const Integer& p);

/// A root of P mod p. Throws NoRootModP when P has no root in F_p.
Integer find_root_mod_p(const ClassPolynomial& poly, const Integer& p,
                        std::uint64_t seed = 0);
Integer find_root_mod_p(const std::vector<Integer>& coefficients, const Integer& p,
                        std::uint64_t seed = 0);

/// True iff P mod p is a product of distinct linear factors.
bool split_completely_check(const ClassPolynomial& poly, const Integer& p);
bool split_completely_check(const std::vector<Integer>& coefficients,
                            const Integer& p);

/// deg_f / deg_j in lowest terms.
Rational reduction_factor(const ModularRelation& relation);
/// The gonality bound r <= 800/7, checked exactly.
bool within_gonality_bound(const Rational& r);

/// Cache records: `D kind degree` then one coefficient per line, ascending.
void write_record(std::ostream& out, const ClassPolynomial& poly);
/// Reads every record in the stream. Throws InvalidArgument on malformed input.
std::vector<ClassPolynomial> read_records(std::istream& in);

/// Looks up (D, kind) in the cache file at `path`; computes and appends the
/// record when it is absent. A missing file is created.
ClassPolynomial cached_class_poly(const std::string& path,
                                  const quadratic::Discriminant& d,
                                  InvariantKind kind,
                                  const EvalOptions& options = {});

}  // namespace primecm::classpoly

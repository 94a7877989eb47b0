#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "decostab/errors.hpp"

namespace decostab {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.  This is the only number type used on computation
/// paths; floating point never enters any result.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                 // NOLINT(google-explicit-constructor)
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
  Rational(const mpz_class& n) : v_(n) {}    // NOLINT(google-explicit-constructor)
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// num/den, canonicalized.  Throws ParameterError on a zero denominator.
  Rational(const mpz_class& num, const mpz_class& den);

  /// Parses "p/q" or "p" (base 10).  Throws ParameterError on malformed
  /// input or a zero denominator.
  static Rational from_string(const std::string& text);

  /// Serializes as "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Dense rational vector.  Entry count is the ambient dimension.
using RatVector = std::vector<Rational>;

/// Integer vector (characters, one-parameter subgroup weight vectors, ...).
using IntVector = std::vector<mpz_class>;

/// Three-way comparison result used by every ordering in the library.
enum class Ordering { Less, Equal, Greater };

inline Ordering ordering_of(int sign) {
  return sign < 0 ? Ordering::Less : (sign > 0 ? Ordering::Greater : Ordering::Equal);
}

/// Univariate polynomial with rational coefficients stored in ascending
/// order of degree with no trailing zero coefficients.  The zero polynomial
/// has an empty coefficient array and `degree() == kZeroPolyDegree`, a
/// sentinel that sorts strictly below the degree of every nonzero
/// polynomial.
struct RatPolynomial {
  static constexpr long kZeroPolyDegree = -1;

  std::vector<Rational> coeffs;

  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> ascending_coeffs)
      : coeffs(std::move(ascending_coeffs)) {
    normalize();
  }

  static RatPolynomial zero() { return RatPolynomial{}; }
  static RatPolynomial constant(const Rational& c);
  /// c * x^k.
  static RatPolynomial monomial(const Rational& c, std::size_t k);

  long degree() const {
    return coeffs.empty() ? kZeroPolyDegree : static_cast<long>(coeffs.size()) - 1;
  }
  bool is_zero() const { return coeffs.empty(); }

  /// Coefficient of x^k; zero beyond the stored degree.
  Rational coeff(std::size_t k) const {
    return k < coeffs.size() ? coeffs[k] : Rational(0);
  }

  Rational eval(const Rational& x) const;

  /// Drops trailing zero coefficients so the representation is canonical.
  void normalize();

  RatPolynomial operator-() const;
  friend RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const Rational& c, const RatPolynomial& p);
  friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) {
    return a.coeffs == b.coeffs;
  }
};

/// Total order on polynomials by comparing coefficients from the highest
/// degree downward; the first differing coefficient decides.  Equivalently,
/// p is Greater than q exactly when p(x) > q(x) for all sufficiently large
/// x.  The order is translation invariant: adding the same polynomial to
/// both sides never changes the outcome.
Ordering lex_compare(const RatPolynomial& p, const RatPolynomial& q);

/// Sign of p in the lex order: Ordering of p against the zero polynomial.
Ordering lex_sign(const RatPolynomial& p);

/// Returns the pair (<lambda, chi>, <lambda, lambda>): the Euclidean
/// pairing of the two vectors together with the squared norm of the first.
/// Throws DimensionError when the lengths disagree.
std::pair<Rational, Rational> inner_and_norm(const RatVector& lambda, const RatVector& chi);

//
// Small exact-vector utilities shared across the library.
//

Rational dot(const RatVector& a, const RatVector& b);
mpz_class idot(const IntVector& a, const IntVector& b);
Rational norm_sq(const RatVector& a);
mpz_class inorm_sq(const IntVector& a);

RatVector rat_vector(const IntVector& v);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& c, const RatVector& v);
bool is_zero_vector(const RatVector& v);
bool is_zero_vector(const IntVector& v);

/// Subtracts the coordinate mean, i.e. projects orthogonally onto the
/// trace-zero hyperplane {sum of entries = 0}.
RatVector project_trace_zero(const RatVector& v);

/// Scales a nonzero rational vector to the unique primitive integer vector
/// on the same ray (positive multiple).  Throws ParameterError on the zero
/// vector.
IntVector primitive_integer_direction(const RatVector& v);
IntVector primitive_integer_direction(const IntVector& v);

/// Lexicographic three-way comparison of equal-length vectors.
int compare_vectors(const IntVector& a, const IntVector& b);
int compare_vectors(const RatVector& a, const RatVector& b);

}  // namespace decostab

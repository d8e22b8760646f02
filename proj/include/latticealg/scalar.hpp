#ifndef LATTICEALG_SCALAR_HPP
#define LATTICEALG_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>
#include <iosfwd>
#include <string>
#include <vector>

namespace latticealg {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Parses "p" or "p/q" (optionally signed). Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

/// Formats as "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& value);

/// One additive term `coeff * exp(arg)`.
struct ExpTerm {
  Rational arg;
  Rational coeff;

  bool operator==(const ExpTerm& other) const = default;
};

/**
 * Finite sum of rational multiples of the exponential function evaluated at
 * rational points: sum_k coeff_k * exp(arg_k).
 *
 * Terms are kept sorted by ascending argument with nonzero coefficients, so
 * the representation is canonical. Because exp at distinct rational points is
 * linearly independent over the rationals, an ExpSum is zero exactly when its
 * term list is empty, and the sign of a nonzero sum can always be decided by
 * refining rational enclosures of exp.
 */
class ExpSum {
 public:
  ExpSum() = default;
  explicit ExpSum(const Rational& constant);
  ExpSum(const Rational& coeff, const Rational& arg);

  static ExpSum zero() { return ExpSum(); }
  static ExpSum one() { return ExpSum(Rational(1)); }

  const std::vector<ExpTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when the sum is a plain rational (zero or a single arg-0 term).
  bool is_rational() const;
  Rational rational_value() const;

  ExpSum operator-() const;
  ExpSum operator+(const ExpSum& other) const;
  ExpSum operator-(const ExpSum& other) const;
  ExpSum operator*(const ExpSum& other) const;
  ExpSum scaled(const Rational& factor) const;
  /// Adds `delta` to every argument (multiplication by exp(delta)).
  ExpSum shifted(const Rational& delta) const;

  bool operator==(const ExpSum& other) const = default;

  /// Exact sign (-1, 0, +1). Decided structurally when all coefficients share
  /// a sign, otherwise by interval refinement; total because a nonzero sum is
  /// never the real number zero.
  int sign() const;

  double to_double() const;
  std::string to_string() const;

  /// Restores sorted-merged form after bulk edits; used internally.
  static ExpSum from_terms(std::vector<ExpTerm> terms);

 private:
  std::vector<ExpTerm> terms_;
};

/**
 * Exact scalar in the ordered field generated by the rationals and the
 * numbers exp(r), r rational: a quotient of two ExpSums kept in a canonical
 * reduced form. Rationals embed as quotients with denominator one, and Gibbs
 * weights exp(-beta*H)/Z live here exactly, so every table entry, state
 * weight, and LP pivot in the library shares this one number type.
 *
 * Canonical form: the denominator's lowest argument is 0 with coefficient 1,
 * and (viewed as Laurent polynomials in exp(1/D) for the common argument
 * denominator D) numerator and denominator are coprime. Equality is
 * structural on the canonical form; ordering goes through exact signs.
 */
class Scalar {
 public:
  Scalar() : num_(), den_(ExpSum::one()) {}
  Scalar(int value) : Scalar(Rational(value)) {}        // NOLINT(runtime/explicit)
  Scalar(const Rational& value);                        // NOLINT(runtime/explicit)

  /// coeff * exp(arg), e.g. a raw Boltzmann weight exp(-beta*H).
  static Scalar exponential(const Rational& coeff, const Rational& arg);
  /// Quotient of two sums; throws std::invalid_argument when den is zero.
  static Scalar ratio(ExpSum num, ExpSum den);

  const ExpSum& numerator() const { return num_; }
  const ExpSum& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_rational() const;
  /// Throws std::domain_error when the value is not rational.
  Rational as_rational() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& other) const;
  Scalar operator-(const Scalar& other) const;
  Scalar operator*(const Scalar& other) const;
  /// Throws std::domain_error on division by zero.
  Scalar operator/(const Scalar& other) const;
  Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
  Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
  Scalar& operator*=(const Scalar& other) { return *this = *this * other; }
  Scalar& operator/=(const Scalar& other) { return *this = *this / other; }

  int sign() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  bool operator==(const Scalar& other) const;
  bool operator!=(const Scalar& other) const { return !(*this == other); }
  bool operator<(const Scalar& other) const { return (*this - other).sign() < 0; }
  bool operator>(const Scalar& other) const { return (*this - other).sign() > 0; }
  bool operator<=(const Scalar& other) const { return (*this - other).sign() <= 0; }
  bool operator>=(const Scalar& other) const { return (*this - other).sign() >= 0; }

  /// Display-only float value; all decisions in the library are exact.
  double to_double() const;
  /// Canonical text: "p/q" for rationals, "(num)/(den)" otherwise.
  std::string to_string() const;

 private:
  void canonicalize();

  ExpSum num_;
  ExpSum den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& value);

inline const Scalar& min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
inline const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

}  // namespace latticealg

#endif  // LATTICEALG_SCALAR_HPP

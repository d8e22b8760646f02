#include "latticealg/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace latticealg {

namespace {

// ---------------------------------------------------------------------------
// Rational enclosures of exp at rational points.
//
// Sign decisions on mixed-sign sums are made by refining these enclosures.
// A canonical nonzero ExpSum is never the real number zero (exp at distinct
// rational points is linearly independent over the rationals), so the
// refinement loop terminates.
// ---------------------------------------------------------------------------

struct Interval {
  Rational lo;
  Rational hi;
};

Rational rational_pow(const Rational& base, unsigned long exponent) {
  Rational result(1);
  Rational acc = base;
  unsigned long e = exponent;
  while (e > 0) {
    if (e & 1UL) result *= acc;
    acc *= acc;
    e >>= 1UL;
  }
  return result;
}

// Truncated Taylor enclosure of exp(x) for x in [0,1): [S_T, S_T + 2 x^{T+1}/(T+1)!].
Interval exp_unit_enclosure(const Rational& x, int taylor_terms) {
  Rational sum(1);
  Rational term(1);
  for (int k = 1; k <= taylor_terms; ++k) {
    term *= x;
    term /= k;
    sum += term;
  }
  Rational next = term * x / (taylor_terms + 1);
  return {sum, sum + 2 * next};
}

Interval exp_enclosure(const Rational& arg, int taylor_terms) {
  BigInt num = numerator(arg);
  BigInt den = denominator(arg);
  BigInt whole = num / den;
  if (num < 0 && whole * den != num) --whole;
  Rational frac = arg - Rational(whole);

  Interval result = exp_unit_enclosure(frac, taylor_terms);
  if (whole != 0) {
    const BigInt magnitude = abs(whole);
    if (magnitude > (BigInt(1) << 30)) {
      throw std::overflow_error("exp enclosure: argument magnitude out of range");
    }
    Interval e = exp_unit_enclosure(Rational(1), taylor_terms);
    const unsigned long m = static_cast<unsigned long>(magnitude.convert_to<long>());
    Interval power{rational_pow(e.lo, m), rational_pow(e.hi, m)};
    if (whole < 0) power = {1 / power.hi, 1 / power.lo};
    result = {result.lo * power.lo, result.hi * power.hi};
  }
  return result;
}

// ---------------------------------------------------------------------------
// Dense polynomials over the rationals, ascending degree, for the Laurent
// reduction inside Scalar::canonicalize.
// ---------------------------------------------------------------------------

using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void poly_make_monic(Poly& p) {
  if (p.empty()) return;
  const Rational lead = p.back();
  for (Rational& c : p) c /= lead;
}

Poly poly_mod(Poly a, const Poly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t offset = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[offset + i] -= factor * b[i];
    }
    a.pop_back();
    poly_trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(std::move(a), b);
    poly_make_monic(r);
    a = std::move(b);
    b = std::move(r);
  }
  poly_make_monic(a);
  return a;
}

Poly poly_divide_exact(const Poly& a, const Poly& b) {
  Poly quotient(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  Poly rem = a;
  while (rem.size() >= b.size() && !rem.empty()) {
    const Rational factor = rem.back() / b.back();
    const std::size_t offset = rem.size() - b.size();
    quotient[offset] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) {
      rem[offset + i] -= factor * b[i];
    }
    rem.pop_back();
    poly_trim(rem);
  }
  if (!rem.empty()) {
    throw std::logic_error("poly_divide_exact: division is not exact");
  }
  poly_trim(quotient);
  return quotient;
}

// Degree span above which canonicalization skips the GCD reduction and only
// rescales. Equality and sign stay exact either way.
constexpr long kGcdSpanCap = 4096;

}  // namespace

// ---------------------------------------------------------------------------
// Rational text form
// ---------------------------------------------------------------------------

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

std::string format_rational(const Rational& value) {
  std::ostringstream out;
  out << numerator(value);
  if (denominator(value) != 1) out << '/' << denominator(value);
  return out.str();
}

// ---------------------------------------------------------------------------
// ExpSum
// ---------------------------------------------------------------------------

ExpSum::ExpSum(const Rational& constant) {
  if (constant != 0) terms_.push_back({Rational(0), constant});
}

ExpSum::ExpSum(const Rational& coeff, const Rational& arg) {
  if (coeff != 0) terms_.push_back({arg, coeff});
}

ExpSum ExpSum::from_terms(std::vector<ExpTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const ExpTerm& a, const ExpTerm& b) { return a.arg < b.arg; });
  ExpSum result;
  for (ExpTerm& term : terms) {
    if (!result.terms_.empty() && result.terms_.back().arg == term.arg) {
      result.terms_.back().coeff += term.coeff;
      if (result.terms_.back().coeff == 0) result.terms_.pop_back();
    } else if (term.coeff != 0) {
      result.terms_.push_back(std::move(term));
    }
  }
  return result;
}

bool ExpSum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].arg == 0);
}

Rational ExpSum::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_rational()) throw std::domain_error("ExpSum is not rational");
  return terms_[0].coeff;
}

ExpSum ExpSum::operator-() const {
  ExpSum result = *this;
  for (ExpTerm& term : result.terms_) term.coeff = -term.coeff;
  return result;
}

ExpSum ExpSum::operator+(const ExpSum& other) const {
  std::vector<ExpTerm> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  merged.insert(merged.end(), terms_.begin(), terms_.end());
  merged.insert(merged.end(), other.terms_.begin(), other.terms_.end());
  return from_terms(std::move(merged));
}

ExpSum ExpSum::operator-(const ExpSum& other) const { return *this + (-other); }

ExpSum ExpSum::operator*(const ExpSum& other) const {
  std::vector<ExpTerm> products;
  products.reserve(terms_.size() * other.terms_.size());
  for (const ExpTerm& a : terms_) {
    for (const ExpTerm& b : other.terms_) {
      products.push_back({a.arg + b.arg, a.coeff * b.coeff});
    }
  }
  return from_terms(std::move(products));
}

ExpSum ExpSum::scaled(const Rational& factor) const {
  if (factor == 0) return ExpSum();
  ExpSum result = *this;
  for (ExpTerm& term : result.terms_) term.coeff *= factor;
  return result;
}

ExpSum ExpSum::shifted(const Rational& delta) const {
  ExpSum result = *this;
  for (ExpTerm& term : result.terms_) term.arg += delta;
  return result;
}

int ExpSum::sign() const {
  if (terms_.empty()) return 0;
  bool any_pos = false;
  bool any_neg = false;
  for (const ExpTerm& term : terms_) {
    (term.coeff > 0 ? any_pos : any_neg) = true;
  }
  if (!any_neg) return 1;
  if (!any_pos) return -1;

  for (int taylor_terms = 16; taylor_terms <= (1 << 16); taylor_terms *= 2) {
    Rational lo(0);
    Rational hi(0);
    for (const ExpTerm& term : terms_) {
      const Interval e = exp_enclosure(term.arg, taylor_terms);
      if (term.coeff > 0) {
        lo += term.coeff * e.lo;
        hi += term.coeff * e.hi;
      } else {
        lo += term.coeff * e.hi;
        hi += term.coeff * e.lo;
      }
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
  throw std::logic_error("ExpSum::sign: enclosure refinement did not separate zero");
}

double ExpSum::to_double() const {
  double total = 0.0;
  for (const ExpTerm& term : terms_) {
    total += term.coeff.convert_to<double>() * std::exp(term.arg.convert_to<double>());
  }
  return total;
}

std::string ExpSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const ExpTerm& term : terms_) {
    Rational coeff = term.coeff;
    if (first) {
      first = false;
      if (coeff < 0) {
        out << '-';
        coeff = -coeff;
      }
    } else {
      out << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    if (term.arg == 0) {
      out << format_rational(coeff);
    } else {
      if (coeff != 1) out << format_rational(coeff) << '*';
      out << "exp(" << format_rational(term.arg) << ')';
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Scalar
// ---------------------------------------------------------------------------

Scalar::Scalar(const Rational& value) : num_(value), den_(ExpSum::one()) {}

Scalar Scalar::exponential(const Rational& coeff, const Rational& arg) {
  Scalar result;
  result.num_ = ExpSum(coeff, arg);
  result.den_ = ExpSum::one();
  return result;
}

Scalar Scalar::ratio(ExpSum num, ExpSum den) {
  if (den.is_zero()) throw std::invalid_argument("Scalar::ratio: zero denominator");
  Scalar result;
  result.num_ = std::move(num);
  result.den_ = std::move(den);
  result.canonicalize();
  return result;
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = ExpSum::one();
    return;
  }

  // A one-term denominator divides termwise.
  if (den_.terms().size() == 1) {
    const ExpTerm pivot = den_.terms()[0];
    num_ = num_.shifted(-pivot.arg).scaled(Rational(1) / pivot.coeff);
    den_ = ExpSum::one();
    return;
  }

  // Common argument grid: exponents become integers over 1/D.
  BigInt grid(1);
  for (const ExpTerm& term : num_.terms()) {
    grid = lcm(grid, BigInt(boost::multiprecision::denominator(term.arg)));
  }
  for (const ExpTerm& term : den_.terms()) {
    grid = lcm(grid, BigInt(boost::multiprecision::denominator(term.arg)));
  }

  auto scaled_exponent = [&grid](const Rational& arg) {
    return BigInt(boost::multiprecision::numerator(arg) *
                  (grid / boost::multiprecision::denominator(arg)));
  };

  const BigInt num_base = scaled_exponent(num_.terms().front().arg);
  const BigInt den_base = scaled_exponent(den_.terms().front().arg);
  const BigInt num_span = scaled_exponent(num_.terms().back().arg) - num_base;
  const BigInt den_span = scaled_exponent(den_.terms().back().arg) - den_base;

  if (num_span > kGcdSpanCap || den_span > kGcdSpanCap) {
    // Skip reduction, keep the anchored form: den starts at arg 0, coeff 1.
    const ExpTerm anchor = den_.terms().front();
    num_ = num_.shifted(-anchor.arg).scaled(Rational(1) / anchor.coeff);
    den_ = den_.shifted(-anchor.arg).scaled(Rational(1) / anchor.coeff);
    return;
  }

  auto to_poly = [&](const ExpSum& sum, const BigInt& base) {
    Poly p;
    for (const ExpTerm& term : sum.terms()) {
      const BigInt offset = scaled_exponent(term.arg) - base;
      const std::size_t degree = static_cast<std::size_t>(offset.convert_to<long>());
      if (p.size() <= degree) p.resize(degree + 1, Rational(0));
      p[degree] = term.coeff;
    }
    return p;
  };

  Poly p = to_poly(num_, num_base);
  Poly q = to_poly(den_, den_base);
  const Poly g = poly_gcd(p, q);
  if (g.size() > 1) {
    p = poly_divide_exact(p, g);
    q = poly_divide_exact(q, g);
  }

  const Rational shift = Rational(num_base - den_base, grid);
  const Rational unit = q.front() == 0 ? Rational(1) : q.front();

  auto to_sum = [&](const Poly& poly, const Rational& offset) {
    std::vector<ExpTerm> terms;
    for (std::size_t degree = 0; degree < poly.size(); ++degree) {
      if (poly[degree] == 0) continue;
      terms.push_back({offset + Rational(BigInt(degree), grid), poly[degree] / unit});
    }
    return ExpSum::from_terms(std::move(terms));
  };

  num_ = to_sum(p, shift);
  den_ = to_sum(q, Rational(0));
}

bool Scalar::is_rational() const { return num_.is_rational() && den_.is_rational(); }

Rational Scalar::as_rational() const {
  if (!is_rational()) throw std::domain_error("Scalar is not rational: " + to_string());
  if (num_.is_zero()) return Rational(0);
  return num_.rational_value() / den_.rational_value();
}

Scalar Scalar::operator-() const {
  Scalar result = *this;
  result.num_ = -result.num_;
  return result;
}

Scalar Scalar::operator+(const Scalar& other) const {
  if (den_ == other.den_) {
    return ratio(num_ + other.num_, den_);
  }
  return ratio(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

Scalar Scalar::operator-(const Scalar& other) const { return *this + (-other); }

Scalar Scalar::operator*(const Scalar& other) const {
  return ratio(num_ * other.num_, den_ * other.den_);
}

Scalar Scalar::operator/(const Scalar& other) const {
  if (other.is_zero()) throw std::domain_error("Scalar division by zero");
  return ratio(num_ * other.den_, den_ * other.num_);
}

int Scalar::sign() const { return num_.sign() * den_.sign(); }

bool Scalar::operator==(const Scalar& other) const {
  if (num_ == other.num_ && den_ == other.den_) return true;
  return (num_ * other.den_ - other.num_ * den_).is_zero();
}

double Scalar::to_double() const { return num_.to_double() / den_.to_double(); }

std::string Scalar::to_string() const {
  if (is_rational()) return format_rational(as_rational());
  if (den_.is_rational() && den_.rational_value() == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& value) {
  return os << value.to_string();
}

}  // namespace latticealg

#pragma once

// Exact numbers of the form  sum_n q_n sqrt(n),  q_n rational, n square-free.
//
// Every value is kept fully rationalized: a quotient of two such sums is
// multiplied through by conjugates until the denominator is rational, so the
// canonical form of a value is unique and equality is a structural check.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace liecg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Radicand of a square root. Always square-free inside a canonical SqrtSum.
using Radicand = std::uint64_t;

enum class Sign { negative = -1, zero = 0, positive = 1 };
enum class NumberFormat { plain, tex, mathematica };

/// Largest r with r*r dividing n, together with n / r^2.
std::pair<Radicand, Radicand> split_square(Radicand n);

class SqrtSum {
 public:
  struct Term {
    Radicand radicand;
    Rational coeff;
    bool operator==(const Term&) const = default;
  };

  SqrtSum() = default;
  SqrtSum(long v);  // NOLINT: implicit from integers is intended
  explicit SqrtSum(const Rational& q);
  /// q * sqrt(n), any n >= 0; canonicalizes n.
  SqrtSum(const Rational& q, Radicand n);
  /// Builds from arbitrary (possibly non-canonical, repeated) terms.
  static SqrtSum from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand == 1);
  }
  /// Coefficient of sqrt(1); zero if absent.
  Rational rational_part() const;
  /// Approximate value, for diagnostics only.
  double to_double() const;

  SqrtSum operator-() const;
  SqrtSum& operator+=(const SqrtSum& o);
  SqrtSum& operator-=(const SqrtSum& o);
  SqrtSum& operator*=(const Rational& q);
  friend SqrtSum operator+(SqrtSum a, const SqrtSum& b) { return a += b; }
  friend SqrtSum operator-(SqrtSum a, const SqrtSum& b) { return a -= b; }
  friend SqrtSum operator*(const SqrtSum& a, const SqrtSum& b);
  bool operator==(const SqrtSum&) const = default;

 private:
  std::vector<Term> terms_;  // sorted by radicand, no zero coefficients
};

/// Element of the field generated by Q and the square roots of non-negative
/// integers. Immutable value type.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(long v) : num_(v) {}  // NOLINT
  FieldElem(const Rational& q) : num_(q) {}  // NOLINT
  explicit FieldElem(SqrtSum s) : num_(std::move(s)) {}
  /// num / denom; throws std::domain_error for a zero denominator.
  FieldElem(const SqrtSum& num, const SqrtSum& denom);

  const SqrtSum& num() const { return num_; }
  /// Always 1: quotients are rationalized on construction.
  static const SqrtSum& denom();

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_rational() const { return num_.is_rational(); }
  Rational rational_part() const { return num_.rational_part(); }
  double to_double() const { return num_.to_double(); }

  FieldElem operator-() const { return FieldElem(-num_); }
  FieldElem& operator+=(const FieldElem& o) { num_ += o.num_; return *this; }
  FieldElem& operator-=(const FieldElem& o) { num_ -= o.num_; return *this; }
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  bool operator==(const FieldElem&) const = default;

 private:
  SqrtSum num_;
};

/// (a/b) * sqrt(n). Throws std::invalid_argument if b == 0 or n < 0.
FieldElem number(long a, long b, long n);

/// Canonical form of num/denom. Values are canonical already, so on a
/// FieldElem this is the identity.
FieldElem simplify(const FieldElem& x);
FieldElem simplify(const SqrtSum& num, const SqrtSum& denom);

/// Multiplicative inverse; throws std::domain_error on zero.
FieldElem invert(const FieldElem& x);
SqrtSum invert(const SqrtSum& x);

/// Exact sign: symbolic zero test, then dyadic interval refinement.
Sign sign(const FieldElem& x);
Sign sign(const SqrtSum& x);
inline bool operator<(const FieldElem& a, const FieldElem& b) {
  return sign(b - a) == Sign::positive;
}

/// sqrt(x) when it is representable as a single radical, i.e. x is a
/// non-negative rational. Returns false otherwise.
bool try_sqrt(const FieldElem& x, FieldElem& out);

/// Common divisor for prettifying coefficient lists. Lists whose nonzero
/// elements all are q_i*sqrt(n) for one n give gcd(q_i)*sqrt(n); any other
/// list gives 1; an all-zero list gives 0.
FieldElem gcd_of_fields(const std::vector<FieldElem>& xs);

std::string render(const FieldElem& x, NumberFormat fmt = NumberFormat::plain);
std::ostream& operator<<(std::ostream& os, const FieldElem& x);

/// Parses the plain grammar: terms  [-][a[/b]][*sqrt(n)]  joined by + or -.
/// Throws std::invalid_argument on malformed input.
FieldElem parse_number(std::string_view text);

}  // namespace liecg

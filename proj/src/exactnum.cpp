#include "liecg/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace liecg {

namespace {

Radicand checked_mul(Radicand a, Radicand b) {
  Radicand r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("radicand overflow");
  return r;
}

std::vector<Radicand> prime_factors(Radicand n) {
  std::vector<Radicand> ps;
  for (Radicand p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Sorts by radicand, merges equal radicands and drops zeros.
void normalize(std::vector<SqrtSum::Term>& ts) {
  std::sort(ts.begin(), ts.end(),
            [](const auto& a, const auto& b) { return a.radicand < b.radicand; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < ts.size();) {
    std::size_t j = i + 1;
    Rational c = ts[i].coeff;
    while (j < ts.size() && ts[j].radicand == ts[i].radicand) c += ts[j++].coeff;
    if (sgn(c) != 0) {
      ts[out].radicand = ts[i].radicand;
      ts[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  ts.resize(out);
}

Integer to_integer(Radicand n) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  return z;
}

}  // namespace

std::pair<Radicand, Radicand> split_square(Radicand n) {
  if (n == 0) return {0, 1};
  Radicand outside = 1;
  Radicand rest = n;
  for (Radicand p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      outside *= p;
      rest /= p * p;
    }
  }
  return {outside, rest};
}

// ---------------------------------------------------------------- SqrtSum

SqrtSum::SqrtSum(long v) {
  if (v != 0) terms_.push_back({1, Rational(v)});
}

SqrtSum::SqrtSum(const Rational& q) {
  if (sgn(q) != 0) terms_.push_back({1, q});
}

SqrtSum::SqrtSum(const Rational& q, Radicand n) {
  if (sgn(q) == 0 || n == 0) return;
  auto [outside, rest] = split_square(n);
  Rational c = q * Rational(to_integer(outside));
  terms_.push_back({rest, std::move(c)});
}

SqrtSum SqrtSum::from_terms(std::vector<Term> terms) {
  for (auto& t : terms) {
    if (t.radicand == 0) {
      t.coeff = 0;
      continue;
    }
    auto [outside, rest] = split_square(t.radicand);
    if (outside != 1) t.coeff *= Rational(to_integer(outside));
    t.radicand = rest;
  }
  normalize(terms);
  SqrtSum s;
  s.terms_ = std::move(terms);
  return s;
}

Rational SqrtSum::rational_part() const {
  if (!terms_.empty() && terms_.front().radicand == 1) return terms_.front().coeff;
  return 0;
}

double SqrtSum::to_double() const {
  double v = 0;
  for (const auto& t : terms_)
    v += t.coeff.get_d() * std::sqrt(static_cast<double>(t.radicand));
  return v;
}

SqrtSum SqrtSum::operator-() const {
  SqrtSum r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

SqrtSum& SqrtSum::operator+=(const SqrtSum& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->radicand < b->radicand)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->radicand < a->radicand) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (sgn(c) != 0) merged.push_back({a->radicand, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

SqrtSum& SqrtSum::operator-=(const SqrtSum& o) { return *this += -o; }

SqrtSum& SqrtSum::operator*=(const Rational& q) {
  if (sgn(q) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= q;
  return *this;
}

SqrtSum operator*(const SqrtSum& a, const SqrtSum& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && a.terms_[0].radicand == 1) {
    SqrtSum r = b;
    return r *= a.terms_[0].coeff;
  }
  if (b.terms_.size() == 1 && b.terms_[0].radicand == 1) {
    SqrtSum r = a;
    return r *= b.terms_[0].coeff;
  }
  std::vector<SqrtSum::Term> ts;
  ts.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      // sqrt(x) sqrt(y) = g sqrt((x/g)(y/g)) for square-free x, y, g = gcd.
      Radicand g = std::gcd(x.radicand, y.radicand);
      Radicand r = checked_mul(x.radicand / g, y.radicand / g);
      Rational c = x.coeff * y.coeff;
      if (g != 1) c *= Rational(to_integer(g));
      ts.push_back({r, std::move(c)});
    }
  }
  normalize(ts);
  SqrtSum s;
  s.terms_ = std::move(ts);
  return s;
}

// -------------------------------------------------------------- inversion

SqrtSum invert(const SqrtSum& x) {
  if (x.is_zero()) throw std::domain_error("division by zero");
  const auto& ts = x.terms();
  if (ts.size() == 1) {
    const auto& t = ts[0];
    Rational c = 1 / t.coeff;
    if (t.radicand == 1) return SqrtSum(c);
    c /= Rational(to_integer(t.radicand));
    return SqrtSum(c, t.radicand);
  }
  // Eliminate the largest prime p present: x = a + b sqrt(p) and
  // 1/x = (a - b sqrt(p)) / (a^2 - p b^2), where the new denominator no
  // longer contains sqrt(p).
  Radicand p = 1;
  for (const auto& t : ts)
    for (Radicand f : prime_factors(t.radicand)) p = std::max(p, f);
  std::vector<SqrtSum::Term> a_terms;
  std::vector<SqrtSum::Term> b_terms;
  for (const auto& t : ts) {
    if (t.radicand % p == 0)
      b_terms.push_back({t.radicand / p, t.coeff});
    else
      a_terms.push_back(t);
  }
  SqrtSum a = SqrtSum::from_terms(std::move(a_terms));
  SqrtSum b = SqrtSum::from_terms(std::move(b_terms));
  SqrtSum conj = a + a - x;
  SqrtSum norm = a * a - (b * b) * SqrtSum(Rational(to_integer(p)));
  return conj * invert(norm);
}

// -------------------------------------------------------------- FieldElem

FieldElem::FieldElem(const SqrtSum& num, const SqrtSum& denom) {
  if (denom.is_zero()) throw std::domain_error("zero denominator");
  num_ = num * invert(denom);
}

const SqrtSum& FieldElem::denom() {
  static const SqrtSum one(1L);
  return one;
}

bool FieldElem::is_one() const {
  const auto& ts = num_.terms();
  return ts.size() == 1 && ts[0].radicand == 1 && ts[0].coeff == 1;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  num_ = num_ * o.num_;
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  num_ = num_ * invert(o.num_);
  return *this;
}

FieldElem number(long a, long b, long n) {
  if (b == 0) throw std::invalid_argument("number: zero denominator");
  if (n < 0) throw std::invalid_argument("number: negative radicand");
  Rational q(a, b);
  q.canonicalize();
  return FieldElem(SqrtSum(q, static_cast<Radicand>(n)));
}

FieldElem simplify(const FieldElem& x) { return x; }

FieldElem simplify(const SqrtSum& num, const SqrtSum& denom) {
  return FieldElem(SqrtSum::from_terms(num.terms()), SqrtSum::from_terms(denom.terms()));
}

FieldElem invert(const FieldElem& x) { return FieldElem(invert(x.num())); }

// -------------------------------------------------------------------- sign

Sign sign(const SqrtSum& x) {
  if (x.is_zero()) return Sign::zero;
  if (x.terms().size() == 1)
    return sgn(x.terms()[0].coeff) > 0 ? Sign::positive : Sign::negative;
  // Interval sum with dyadic bounds on each root; nonzero is already known so
  // the refinement terminates.
  for (unsigned long bits = 32;; bits *= 2) {
    Rational lo = 0;
    Rational hi = 0;
    Integer scale = 1;
    scale <<= bits;
    for (const auto& t : x.terms()) {
      Integer n = to_integer(t.radicand);
      Integer shifted = n << (2 * bits);
      Integer s = sqrt(shifted);
      bool exact = s * s == shifted;
      Rational rlo(s, scale);
      Rational rhi(exact ? s : Integer(s + 1), scale);
      rlo.canonicalize();
      rhi.canonicalize();
      if (sgn(t.coeff) > 0) {
        lo += t.coeff * rlo;
        hi += t.coeff * rhi;
      } else {
        lo += t.coeff * rhi;
        hi += t.coeff * rlo;
      }
    }
    if (sgn(lo) > 0) return Sign::positive;
    if (sgn(hi) < 0) return Sign::negative;
  }
}

Sign sign(const FieldElem& x) { return sign(x.num()); }

bool try_sqrt(const FieldElem& x, FieldElem& out) {
  if (x.is_zero()) {
    out = FieldElem();
    return true;
  }
  if (!x.is_rational()) return false;
  Rational q = x.rational_part();
  if (sgn(q) < 0) return false;
  // sqrt(a/b) = sqrt(a b) / b
  Integer ab = q.get_num() * q.get_den();
  if (!ab.fits_ulong_p()) return false;
  out = FieldElem(SqrtSum(Rational(1, 1) / Rational(q.get_den()), ab.get_ui()));
  return true;
}

// --------------------------------------------------------------------- gcd

FieldElem gcd_of_fields(const std::vector<FieldElem>& xs) {
  Radicand common = 0;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  bool any = false;
  for (const auto& x : xs) {
    if (x.is_zero()) continue;
    const auto& ts = x.num().terms();
    if (ts.size() != 1) return FieldElem(1L);
    if (any && ts[0].radicand != common) return FieldElem(1L);
    common = ts[0].radicand;
    any = true;
    const Rational& c = ts[0].coeff;
    num_gcd = gcd(num_gcd, c.get_num());
    den_lcm = lcm(den_lcm, c.get_den());
  }
  if (!any) return FieldElem();
  Rational g(num_gcd, den_lcm);
  g.canonicalize();
  return FieldElem(SqrtSum(g, common));
}

// ----------------------------------------------------------------- render

namespace {

std::string rational_text(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string term_plain(const Rational& c, Radicand n) {
  if (n == 1) return rational_text(c);
  std::string root = "sqrt(" + std::to_string(n) + ")";
  if (c == 1) return root;
  return rational_text(c) + "*" + root;
}

std::string term_tex(const Rational& c, Radicand n) {
  std::string s;
  if (c.get_den() == 1) {
    if (n == 1 || c != 1) s = c.get_num().get_str();
  } else {
    s = "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
  }
  if (n != 1) s += "\\sqrt{" + std::to_string(n) + "}";
  return s;
}

std::string term_mathematica(const Rational& c, Radicand n) {
  if (n == 1) return rational_text(c);
  std::string s;
  if (c.get_num() != 1) s = c.get_num().get_str() + "*";
  s += "Sqrt[" + std::to_string(n) + "]";
  if (c.get_den() != 1) s += "/" + c.get_den().get_str();
  return s;
}

}  // namespace

std::string render(const FieldElem& x, NumberFormat fmt) {
  const auto& ts = x.num().terms();
  if (ts.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : ts) {
    bool neg = sgn(t.coeff) < 0;
    Rational mag = neg ? Rational(-t.coeff) : t.coeff;
    if (neg)
      out += first ? "-" : (fmt == NumberFormat::plain ? "-" : " - ");
    else if (!first)
      out += fmt == NumberFormat::plain ? "+" : " + ";
    switch (fmt) {
      case NumberFormat::plain: out += term_plain(mag, t.radicand); break;
      case NumberFormat::tex: out += term_tex(mag, t.radicand); break;
      case NumberFormat::mathematica: out += term_mathematica(mag, t.radicand); break;
    }
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << render(x); }

// ------------------------------------------------------------------ parse

FieldElem parse_number(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty number");
  std::size_t i = 0;
  auto fail = [&](const char* what) {
    throw std::invalid_argument(std::string("malformed number '") + std::string(text) +
                                "': " + what);
  };
  auto read_int = [&]() {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail("expected digits");
    return Integer(s.substr(start, i - start));
  };
  auto read_sqrt = [&]() -> Radicand {
    if (s.compare(i, 5, "sqrt(") != 0) fail("expected sqrt(");
    i += 5;
    Integer n = read_int();
    if (i >= s.size() || s[i] != ')') fail("expected )");
    ++i;
    if (!n.fits_ulong_p()) fail("radicand too large");
    return n.get_ui();
  };
  std::vector<SqrtSum::Term> terms;
  bool first = true;
  while (i < s.size()) {
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
      neg = s[i] == '-';
      ++i;
    } else if (!first) {
      fail("expected + or -");
    }
    Rational c = 1;
    Radicand n = 1;
    if (i < s.size() && s[i] == 's') {
      n = read_sqrt();
    } else {
      Integer a = read_int();
      Integer b = 1;
      if (i < s.size() && s[i] == '/') {
        ++i;
        b = read_int();
        if (b == 0) fail("zero denominator");
      }
      c = Rational(a, b);
      c.canonicalize();
      if (i < s.size() && s[i] == '*') {
        ++i;
        n = read_sqrt();
      }
    }
    if (neg) c = -c;
    terms.push_back({n, c});
    first = false;
  }
  return FieldElem(SqrtSum::from_terms(std::move(terms)));
}

}  // namespace liecg

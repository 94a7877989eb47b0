#include "decostab/rational.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace decostab {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) {
    throw ParameterError("rational with zero denominator");
  }
  v_ = mpq_class(num);
  v_ /= mpq_class(den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw ParameterError("division by zero");
  }
  v_ /= o.v_;
  return *this;
}

Rational Rational::from_string(const std::string& text) {
  if (text.empty()) {
    throw ParameterError("empty rational literal");
  }
  // mpq accepts "p/q" and "p" in base 10 but is lenient about some shapes
  // (whitespace, missing digits), so validate the shape first.
  const auto slash = text.find('/');
  auto digits_ok = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  bool ok = slash == std::string::npos
                ? digits_ok(text)
                : digits_ok(text.substr(0, slash)) && digits_ok(text.substr(slash + 1));
  if (!ok) {
    throw ParameterError("malformed rational literal: " + text);
  }
  // mpq_set_str rejects the explicit '+' that the shape check admits.
  std::string cleaned = text;
  const auto cleaned_slash = cleaned.find('/');
  if (cleaned_slash != std::string::npos && cleaned[cleaned_slash + 1] == '+') {
    cleaned.erase(cleaned_slash + 1, 1);
  }
  if (cleaned[0] == '+') cleaned.erase(0, 1);
  mpq_class q;
  if (q.set_str(cleaned, 10) != 0) {
    throw ParameterError("malformed rational literal: " + text);
  }
  if (sgn(q.get_den()) == 0) {
    throw ParameterError("rational with zero denominator: " + text);
  }
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  std::ostringstream os;
  os << v_.get_num();
  if (v_.get_den() != 1) {
    os << '/' << v_.get_den();
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

RatPolynomial RatPolynomial::constant(const Rational& c) {
  RatPolynomial p;
  if (!c.is_zero()) p.coeffs = {c};
  return p;
}

RatPolynomial RatPolynomial::monomial(const Rational& c, std::size_t k) {
  RatPolynomial p;
  if (!c.is_zero()) {
    p.coeffs.assign(k + 1, Rational(0));
    p.coeffs[k] = c;
  }
  return p;
}

void RatPolynomial::normalize() {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

Rational RatPolynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

RatPolynomial RatPolynomial::operator-() const {
  RatPolynomial p;
  p.coeffs.reserve(coeffs.size());
  for (const auto& c : coeffs) p.coeffs.push_back(-c);
  return p;
}

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial p;
  p.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), Rational(0));
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) p.coeffs[k] = a.coeff(k) + b.coeff(k);
  p.normalize();
  return p;
}

RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b) { return a + (-b); }

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return RatPolynomial::zero();
  RatPolynomial p;
  p.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      p.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  p.normalize();
  return p;
}

RatPolynomial operator*(const Rational& c, const RatPolynomial& p) {
  if (c.is_zero()) return RatPolynomial::zero();
  RatPolynomial q;
  q.coeffs.reserve(p.coeffs.size());
  for (const auto& x : p.coeffs) q.coeffs.push_back(c * x);
  return q;
}

Ordering lex_compare(const RatPolynomial& p, const RatPolynomial& q) {
  const long top = std::max(p.degree(), q.degree());
  for (long k = top; k >= 0; --k) {
    const Rational a = p.coeff(static_cast<std::size_t>(k));
    const Rational b = q.coeff(static_cast<std::size_t>(k));
    if (a < b) return Ordering::Less;
    if (a > b) return Ordering::Greater;
  }
  return Ordering::Equal;
}

Ordering lex_sign(const RatPolynomial& p) { return lex_compare(p, RatPolynomial::zero()); }

std::pair<Rational, Rational> inner_and_norm(const RatVector& lambda, const RatVector& chi) {
  if (lambda.size() != chi.size()) {
    throw DimensionError("inner_and_norm: vector lengths disagree (" +
                         std::to_string(lambda.size()) + " vs " + std::to_string(chi.size()) +
                         ")");
  }
  Rational pairing(0), nsq(0);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    pairing += lambda[i] * chi[i];
    nsq += lambda[i] * lambda[i];
  }
  return {pairing, nsq};
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: vector lengths disagree");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

mpz_class idot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("idot: vector lengths disagree");
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational norm_sq(const RatVector& a) { return dot(a, a); }

mpz_class inorm_sq(const IntVector& a) { return idot(a, a); }

RatVector rat_vector(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum: lengths disagree");
  RatVector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector difference: lengths disagree");
  RatVector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

RatVector operator*(const Rational& c, const RatVector& v) {
  RatVector out(v);
  for (auto& x : out) x *= c;
  return out;
}

bool is_zero_vector(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

bool is_zero_vector(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return sgn(x) == 0; });
}

RatVector project_trace_zero(const RatVector& v) {
  if (v.empty()) throw DimensionError("project_trace_zero: empty vector");
  Rational mean(0);
  for (const auto& x : v) mean += x;
  mean /= Rational(static_cast<long>(v.size()));
  RatVector out(v);
  for (auto& x : out) x -= mean;
  return out;
}

IntVector primitive_integer_direction(const RatVector& v) {
  if (is_zero_vector(v)) {
    throw ParameterError("primitive direction of the zero vector is undefined");
  }
  mpz_class l = 1;
  for (const auto& x : v) {
    if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  }
  IntVector scaled;
  scaled.reserve(v.size());
  for (const auto& x : v) {
    scaled.push_back(x.num() * (l / x.den()));
  }
  return primitive_integer_direction(scaled);
}

IntVector primitive_integer_direction(const IntVector& v) {
  if (is_zero_vector(v)) {
    throw ParameterError("primitive direction of the zero vector is undefined");
  }
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  IntVector out(v);
  for (auto& x : out) x /= g;
  return out;
}

int compare_vectors(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size() ? -1 : 1;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

int compare_vectors(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size() ? -1 : 1;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

}  // namespace decostab

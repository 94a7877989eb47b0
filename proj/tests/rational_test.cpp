#include <doctest.h>

#include <utility>
#include <vector>

#include "decostab/errors.hpp"
#include "decostab/rational.hpp"
#include "test_support.hpp"

using namespace decostab;

TEST_SUITE_BEGIN("rational");

TEST_CASE("rationals are canonical: lowest terms, positive denominator") {
  CHECK(Rational(mpz_class(2), mpz_class(4)) == Rational(mpz_class(1), mpz_class(2)));
  CHECK(Rational(mpz_class(2), mpz_class(4)).den() == 2);
  CHECK(Rational(mpz_class(3), mpz_class(-6)).str() == "-1/2");
  CHECK(Rational(mpz_class(-3), mpz_class(-6)).str() == "1/2");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(mpz_class(-7), mpz_class(3)).str() == "-7/3");
  CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), ParameterError);
}

TEST_CASE("string round trip accepts p and p/q, rejects junk") {
  CHECK(Rational::from_string("3/4") == Rational(mpz_class(3), mpz_class(4)));
  CHECK(Rational::from_string("-6/8").str() == "-3/4");
  CHECK(Rational::from_string("12") == Rational(12));
  CHECK(Rational::from_string("+5/10").str() == "1/2");
  CHECK_THROWS_AS(Rational::from_string("1/0"), ParameterError);
  CHECK_THROWS_AS(Rational::from_string(""), ParameterError);
  CHECK_THROWS_AS(Rational::from_string("abc"), ParameterError);
  CHECK_THROWS_AS(Rational::from_string("1.5"), ParameterError);
  CHECK_THROWS_AS(Rational::from_string("1/ 2"), ParameterError);
  CHECK_THROWS_AS(Rational::from_string("3/"), ParameterError);

  auto gen = testsupport::make_rng(11);
  for (int i = 0; i < 200; ++i) {
    const Rational q = testsupport::random_rational(gen, 1000, 997);
    CHECK(Rational::from_string(q.str()) == q);
  }
}

TEST_CASE("arithmetic and division-by-zero guard") {
  const Rational a(mpz_class(2), mpz_class(3));
  const Rational b(mpz_class(-1), mpz_class(6));
  CHECK((a + b).str() == "1/2");
  CHECK((a - b).str() == "5/6");
  CHECK((a * b).str() == "-1/9");
  CHECK((a / b).str() == "-4");
  CHECK_THROWS_AS(a / Rational(0), ParameterError);
  CHECK(a.abs() == a);
  CHECK(b.abs().str() == "1/6");
  CHECK((-a).sign() == -1);
}

TEST_CASE("polynomial representation is canonical") {
  RatPolynomial p({Rational(1), Rational(0), Rational(0)});
  CHECK(p.degree() == 0);
  CHECK(p == RatPolynomial::constant(Rational(1)));

  CHECK(RatPolynomial::zero().degree() == RatPolynomial::kZeroPolyDegree);
  CHECK(RatPolynomial::zero().is_zero());
  CHECK(RatPolynomial::monomial(Rational(3), 2).coeff(2) == Rational(3));
  CHECK(RatPolynomial::monomial(Rational(0), 2).is_zero());

  const RatPolynomial q({Rational(-1), Rational(2)});
  CHECK((q - q).is_zero());
  CHECK((q * q).degree() == 2);
  CHECK((q * q).coeff(0) == Rational(1));
  CHECK((q * q).coeff(1) == Rational(-4));
  CHECK((q * q).coeff(2) == Rational(4));
  CHECK(q.eval(Rational(mpz_class(1), mpz_class(2))) == Rational(0));
}

TEST_CASE("lex order compares from the highest degree down") {
  const RatPolynomial small({Rational(100)});
  const RatPolynomial big({Rational(-100), Rational(1)});
  CHECK(lex_compare(small, big) == Ordering::Less);
  CHECK(lex_compare(big, small) == Ordering::Greater);
  CHECK(lex_compare(big, big) == Ordering::Equal);
  CHECK(lex_sign(RatPolynomial({Rational(0), Rational(-1), Rational(0)})) == Ordering::Less);
  CHECK(lex_sign(RatPolynomial::zero()) == Ordering::Equal);
}

TEST_CASE("lex order is a total order on 1000 random triples") {
  auto gen = testsupport::make_rng(12);
  auto as_int = [](Ordering o) { return o == Ordering::Less ? -1 : (o == Ordering::Greater ? 1 : 0); };
  for (int i = 0; i < 1000; ++i) {
    const RatPolynomial p = testsupport::random_polynomial(gen);
    const RatPolynomial q = testsupport::random_polynomial(gen);
    const RatPolynomial s = testsupport::random_polynomial(gen);

    CHECK(lex_compare(p, p) == Ordering::Equal);
    CHECK(as_int(lex_compare(p, q)) == -as_int(lex_compare(q, p)));
    if (lex_compare(p, q) == Ordering::Equal) CHECK(p == q);

    // Transitivity: p <= q <= s implies p <= s.
    if (lex_compare(p, q) != Ordering::Greater && lex_compare(q, s) != Ordering::Greater) {
      CHECK(lex_compare(p, s) != Ordering::Greater);
    }

    // Translation invariance.
    CHECK(lex_compare(p + s, q + s) == lex_compare(p, q));
  }
}

TEST_CASE("lex Greater matches evaluation at a large argument") {
  auto gen = testsupport::make_rng(13);
  const Rational big_x(mpz_class(1000000));
  for (int i = 0; i < 300; ++i) {
    const RatPolynomial p = testsupport::random_polynomial(gen, 3);
    const RatPolynomial q = testsupport::random_polynomial(gen, 3);
    const Ordering cmp = lex_compare(p, q);
    if (cmp == Ordering::Greater) {
      CHECK(p.eval(big_x) > q.eval(big_x));
    } else if (cmp == Ordering::Less) {
      CHECK(p.eval(big_x) < q.eval(big_x));
    } else {
      CHECK(p.eval(big_x) == q.eval(big_x));
    }
  }
}

TEST_CASE("inner_and_norm worked values") {
  {
    const auto [inner, nsq] = inner_and_norm({Rational(-1), Rational(1)},
                                             {Rational(1), Rational(-1)});
    CHECK(inner == Rational(-2));
    CHECK(nsq == Rational(2));
  }
  {
    const auto [inner, nsq] = inner_and_norm({Rational(-2), Rational(1), Rational(1)},
                                             {Rational(1), Rational(1), Rational(0)});
    CHECK(inner == Rational(-1));
    CHECK(nsq == Rational(6));
  }
  CHECK_THROWS_AS(inner_and_norm({Rational(1)}, {Rational(1), Rational(2)}), DimensionError);
}

TEST_CASE("inner_and_norm is bilinear in chi and quadratic in lambda") {
  auto gen = testsupport::make_rng(14);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(testsupport::random_long(gen, 1, 5));
    const RatVector lambda = testsupport::random_rat_vector(gen, n);
    const RatVector chi1 = testsupport::random_rat_vector(gen, n);
    const RatVector chi2 = testsupport::random_rat_vector(gen, n);

    const Rational lhs = inner_and_norm(lambda, chi1 + chi2).first;
    const Rational rhs = inner_and_norm(lambda, chi1).first + inner_and_norm(lambda, chi2).first;
    CHECK(lhs == rhs);

    const Rational two(2);
    CHECK(inner_and_norm(two * lambda, chi1).second == Rational(4) * inner_and_norm(lambda, chi1).second);
    CHECK(inner_and_norm(lambda, lambda).second >= Rational(0));
    if (is_zero_vector(lambda)) {
      CHECK(inner_and_norm(lambda, chi1).second == Rational(0));
    } else {
      CHECK(inner_and_norm(lambda, chi1).second > Rational(0));
    }
  }
}

TEST_CASE("vector utilities: trace-zero projection and primitive directions") {
  const RatVector v{Rational(1), Rational(2), Rational(3)};
  const RatVector proj = project_trace_zero(v);
  Rational sum(0);
  for (const auto& x : proj) sum += x;
  CHECK(sum == Rational(0));
  CHECK(proj[0] == Rational(-1));
  CHECK(proj[2] == Rational(1));

  CHECK(primitive_integer_direction(RatVector{Rational(mpz_class(2), mpz_class(3)),
                                              Rational(mpz_class(-4), mpz_class(3))}) ==
        IntVector{mpz_class(1), mpz_class(-2)});
  CHECK(primitive_integer_direction(IntVector{mpz_class(6), mpz_class(-9)}) ==
        IntVector{mpz_class(2), mpz_class(-3)});
  CHECK_THROWS_AS(primitive_integer_direction(RatVector{Rational(0), Rational(0)}),
                  ParameterError);
}

TEST_SUITE_END();

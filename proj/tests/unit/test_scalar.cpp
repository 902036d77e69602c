#include <doctest.h>

#include "polecat/error.hpp"
#include "polecat/parse.hpp"
#include "polecat/scalar.hpp"

using namespace polecat;

TEST_SUITE("scalar") {

TEST_CASE("q times its inverse") { CHECK((Scalar::q() * Scalar::q_inv()).is_one()); }

TEST_CASE("square of sqrt(-q)") {
  const Scalar a = Scalar::sqrt_minus_q();
  CHECK(a * a == -Scalar::q());
  CHECK((a * a).to_string() == "-t^4");
}

TEST_CASE("canonical text") {
  CHECK(Scalar().to_string() == "0");
  CHECK((Scalar::q() + Scalar::q_inv()).to_string() == "(t^8 + 1)/t^4");
  CHECK(Scalar::sqrt_minus_q().to_string() == "i*t^2");
  CHECK(Scalar::q_minus_q_inv().inverse().to_string() == "-t^4/(-t^8 + 1)");
  CHECK((-Scalar::q_inv()).to_string() == "-1/t^4");
}

TEST_CASE("evaluation") {
  CHECK(Scalar::q().eval(GaussRat(1)) == std::complex<double>(1, 0));
  CHECK(Scalar::loop_value().eval(GaussRat(1)) == std::complex<double>(2, 0));
  CHECK(Scalar::sqrt_minus_q().eval(GaussRat(1)) == std::complex<double>(0, 1));
  // t^4/(t^8 - 1) has a pole at t = 1.
  CHECK_THROWS_AS(Scalar::q_minus_q_inv().inverse().eval(GaussRat(1)), DomainError);
}

TEST_CASE("division by zero is reported") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(), DomainError);
  CHECK_THROWS_AS(Scalar().inverse(), DomainError);
  CHECK_THROWS_AS(GaussRat().inverse(), DomainError);
}

TEST_CASE("canonical form makes equality structural") {
  // (t^8 - 1)/(t^4 - 1) reduces to t^4 + 1.
  const Scalar a = (Scalar::q() * Scalar::q() - 1) / (Scalar::q() - 1);
  CHECK(a == Scalar::q() + 1);
  CHECK(a.is_laurent());
  // Denominator normalised to constant term 1.
  const Scalar b = Scalar(1) / (Scalar(2) * Scalar::t() + Scalar(4));
  CHECK(b.denominator().coeff(0).is_one());
}

TEST_CASE("field axioms on a few elements") {
  const Scalar x = parse_scalar("(t^3 - 2*i)/(t + 1)");
  const Scalar y = parse_scalar("q - 1/q + 3");
  const Scalar z = parse_scalar("i*s + 1/2");
  CHECK(x + y == y + x);
  CHECK(x * y == y * x);
  CHECK((x + y) + z == x + (y + z));
  CHECK((x * y) * z == x * (y * z));
  CHECK(x * (y + z) == x * y + x * z);
  CHECK(x - x == Scalar());
  CHECK(x / x == Scalar(1));
  CHECK(x.pow(-2) * x.pow(2) == Scalar(1));
}

TEST_CASE("gaussian rationals") {
  const GaussRat i = GaussRat::i();
  CHECK(i * i == GaussRat(-1));
  CHECK((GaussRat(3, 4) / GaussRat(3, 4)).is_one());
  CHECK(to_string(GaussRat(mpq_class(1, 2), mpq_class(-3, 5))) == "(1/2 - 3/5*i)");
}

TEST_CASE("polynomial gcd") {
  // (t - 1)(t + 2) and (t - 1)(t - 3)
  const LaurentPoly a({GaussRat(-2), GaussRat(1), GaussRat(1)}, 0);
  const LaurentPoly b({GaussRat(3), GaussRat(-4), GaussRat(1)}, 0);
  CHECK(poly_gcd(a, b) == LaurentPoly({GaussRat(-1), GaussRat(1)}, 0));
}

TEST_CASE("render and parse round trip") {
  for (const char* s : {"0", "1", "-1/t^4", "(t^8 + 1)/t^4", "(i*t^8 - i)/t^4", "t^4/(t^8 - 1)",
                        "1/2*t - 3/7*i", "(t^2 + i)/(2*t^3 + 1)"}) {
    CAPTURE(s);
    const Scalar x = parse_scalar(s);
    CHECK(parse_scalar(x.to_string()) == x);
  }
}

}

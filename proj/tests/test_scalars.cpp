#include "helly/pointsets.hpp"  // rational bounds for quadratic values
#include "helly/rng.hpp"
#include "helly/scalars.hpp"

#include <doctest.h>

using namespace helly;

TEST_CASE("rational sign and canonical form") {
    CHECK(Rational(-3, 10).sign() == Sign::negative);
    CHECK(Rational(0).sign() == Sign::zero);
    CHECK(Rational(7, 2).sign() == Sign::positive);
    CHECK(Rational(8, 10) == Rational(4, 5));
    CHECK(Rational(8, 10).to_string() == "4/5");
    CHECK(Rational(-6, -4).to_string() == "3/2");
    CHECK(Rational(3).to_string() == "3");
}

TEST_CASE("rational arithmetic matches the worked coordinates") {
    CHECK(Rational(3, 10) + Rational(5, 10) == Rational(4, 5));
    CHECK(Rational(13, 10) - Rational(9, 10) == Rational(2, 5));
    CHECK(Rational(1, 3) / Rational(2, 5) == Rational(5, 6));
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("rational parse round trip") {
    for (const char* s : {"0", "-3/10", "13/10", "4/5", "-7"}) {
        Rational r = Rational::parse(s);
        CHECK(Rational::parse(r.to_string()) == r);
    }
    CHECK_THROWS_AS(Rational::parse("abc"), Error);
}

TEST_CASE("quadratic sign determination") {
    // sqrt(2) - 1 > 0
    CHECK(QuadScalar(Rational(-1), Rational(1), 2).sign() == Sign::positive);
    // 3/2 - sqrt(2) > 0 since 9/4 > 2
    CHECK(QuadScalar(Rational(3, 2), Rational(-1), 2).sign() == Sign::positive);
    // 7/5 - sqrt(2) < 0 since 49/25 < 2
    CHECK(QuadScalar(Rational(7, 5), Rational(-1), 2).sign() == Sign::negative);
    CHECK(QuadScalar(Rational(0), Rational(0), 5).sign() == Sign::zero);
    CHECK(QuadScalar(Rational(0), Rational(-2), 3).sign() == Sign::negative);
}

TEST_CASE("quadratic conjugate product") {
    QuadScalar a(Rational(1), Rational(1), 2);
    QuadScalar b(Rational(1), Rational(-1), 2);
    QuadScalar p = a * b;
    CHECK(p.rational_part() == Rational(-1));
    CHECK(p.radical_coeff() == Rational(0));
}

TEST_CASE("quadratic division and floor") {
    QuadScalar phi(Rational(1, 2), Rational(1, 2), 5);
    QuadScalar one(1);
    QuadScalar inv = one / phi;  // 1/phi = phi - 1
    CHECK(inv == phi - one);
    CHECK(phi.floor() == 1);
    CHECK((phi * phi).floor() == 2);  // phi^2 = phi + 1
    CHECK((QuadScalar(0) - phi).floor() == -2);
    QuadScalar r2 = QuadScalar::sqrt_d(2);
    CHECK((r2 * QuadScalar(100)).floor() == 141);
    CHECK_THROWS_AS(one / QuadScalar(0), Error);
}

TEST_CASE("quadratic radicand rules") {
    CHECK_THROWS_AS(QuadScalar(Rational(0), Rational(1), 8), Error);  // not square-free
    CHECK_THROWS_AS(QuadScalar(Rational(0), Rational(1), 1), Error);  // < 2
    QuadScalar a = QuadScalar::sqrt_d(2), b = QuadScalar::sqrt_d(3);
    CHECK_THROWS_AS(a + b, Error);  // mixed radicands
    CHECK((a + QuadScalar(1)).to_string() == "1+1*sqrt(2)");
    CHECK((QuadScalar(1) - a).to_string() == "1-1*sqrt(2)");
}

TEST_CASE("quadratic parse round trip") {
    for (const char* s :
         {"1/2+3/4*sqrt(2)", "-1-2*sqrt(5)", "0+1*sqrt(3)", "5/7", "-3/2+-1/2*sqrt(2)"}) {
        QuadScalar q = QuadScalar::parse(s);
        CHECK(QuadScalar::parse(q.to_string()) == q);
    }
}

TEST_CASE("field axioms on random rational and quadratic triples") {
    SplitMix64 rng(20240817);
    auto rnd_rat = [&] { return Rational(rng.range(-40, 40), rng.range(1, 12)); };
    for (int trial = 0; trial < 10000; ++trial) {
        Rational a = rnd_rat(), b = rnd_rat(), c = rnd_rat();
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * b == b * a);
    }
    for (int trial = 0; trial < 10000; ++trial) {
        QuadScalar a(rnd_rat(), rnd_rat(), 5), b(rnd_rat(), rnd_rat(), 5),
            c(rnd_rat(), rnd_rat(), 5);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a - b) + b == a);
    }
}

TEST_CASE("sign is multiplicative on exact backends") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 2000; ++trial) {
        QuadScalar a(Rational(rng.range(-9, 9)), Rational(rng.range(-9, 9)), 2);
        QuadScalar b(Rational(rng.range(-9, 9)), Rational(rng.range(-9, 9)), 2);
        REQUIRE((a * b).sign() == sign_mul(a.sign(), b.sign()));
    }
}

TEST_CASE("certfloat sign and the exact-zero marker") {
    CHECK(CertFloat(3).sign() == Sign::positive);
    CHECK(CertFloat(-2).sign() == Sign::negative);
    CHECK(CertFloat(0).sign() == Sign::zero);
    CertFloat tiny = CertFloat::from_decimal("1e-40", 1e-30);
    CHECK(tiny.sign() == Sign::uncertain);
    CertFloat z = CertFloat(1) - CertFloat(1);
    CHECK(z.sign() == Sign::zero);  // exact operation, radius stays 0
}

TEST_CASE("certfloat division guards") {
    CertFloat one(1);
    CHECK_THROWS_AS(one / CertFloat(0), Error);
    CertFloat straddle = CertFloat::from_decimal("1e-35", 1e-30);
    CHECK_THROWS_AS(one / straddle, Error);
}

TEST_CASE("certfloat soundness over random expression dags") {
    SplitMix64 rng(4242);
    for (int trial = 0; trial < 300; ++trial) {
        Rational exact(rng.range(-30, 30), rng.range(1, 9));
        CertFloat ball = CertFloat::from_rational(exact);
        for (int depth = 0; depth < 20; ++depth) {
            Rational operand(rng.range(-9, 9), rng.range(1, 7));
            CertFloat cf = CertFloat::from_rational(operand);
            switch (rng.below(4)) {
                case 0:
                    exact = exact + operand;
                    ball = ball + cf;
                    break;
                case 1:
                    exact = exact - operand;
                    ball = ball - cf;
                    break;
                case 2:
                    exact = exact * operand;
                    ball = ball * cf;
                    break;
                default:
                    if (operand.is_zero()) break;
                    exact = exact / operand;
                    ball = ball / cf;
                    break;
            }
            // The ball must contain the exact value: the difference may not
            // have a certified nonzero sign.
            CertFloat diff = ball - CertFloat::from_rational(exact);
            Sign s = diff.sign();
            REQUIRE(s != Sign::positive);
            REQUIRE(s != Sign::negative);
        }
    }
}

TEST_CASE("certfloat trig constructors carry certified radii") {
    CertFloat c = CertFloat::cos_pi(Rational(1, 3));  // cos(pi/3) = 1/2
    CertFloat diff = c - CertFloat::from_rational(Rational(1, 2));
    Sign s = diff.sign();
    CHECK(s != Sign::positive);
    CHECK(s != Sign::negative);
    CHECK(diff.radius() < 1e-25);
    CertFloat z = CertFloat::sin_pi(Rational(1));  // sin(pi) = 0
    Sign sz = z.sign();
    CHECK(sz != Sign::positive);
    CHECK(sz != Sign::negative);
}

TEST_CASE("certfloat trig agrees with the quadratic field where they meet") {
    // cos(pi/5) = (1 + sqrt 5)/4 and cos(2 pi/5) = (sqrt 5 - 1)/4
    QuadScalar golden_cos(Rational(1, 4), Rational(1, 4), 5);
    QuadScalar second_cos(Rational(-1, 4), Rational(1, 4), 5);
    CertFloat c1 = CertFloat::cos_pi(Rational(1, 5));
    CHECK((c1 - CertFloat::from_rational(rational_lower_bound(golden_cos))).sign() ==
          Sign::positive);
    CHECK((CertFloat::from_rational(rational_upper_bound(golden_cos)) - c1).sign() ==
          Sign::positive);
    CertFloat c2 = CertFloat::cos_pi(Rational(2, 5));
    CHECK((c2 - CertFloat::from_rational(rational_lower_bound(second_cos))).sign() ==
          Sign::positive);
    CHECK((CertFloat::from_rational(rational_upper_bound(second_cos)) - c2).sign() ==
          Sign::positive);
}

TEST_CASE("scalar variant surface") {
    Scalar a{Rational(-3, 10)};
    CHECK(scalar_sign(a) == Sign::negative);
    Scalar b{QuadScalar(Rational(-1), Rational(1), 2)};
    CHECK(scalar_sign(b) == Sign::positive);
    Scalar c{CertFloat::from_decimal("1e-40", 1e-30)};
    CHECK(scalar_sign(c) == Sign::uncertain);

    Scalar sum = scalar_arith(Scalar{Rational(3, 10)}, Scalar{Rational(5, 10)}, ArithOp::add);
    CHECK(scalar_to_string(sum) == "4/5");
    CHECK_THROWS_AS(scalar_arith(a, b, ArithOp::add), Error);  // backend mismatch
    CHECK_THROWS_AS(scalar_arith(a, Scalar{Rational(0)}, ArithOp::div), Error);
    CHECK_THROWS_AS(scalar_arith(c, c, ArithOp::div), Error);  // uncertain divisor

    CHECK(scalar_to_string(scalar_parse("1/2+1/2*sqrt(5)")) == "1/2+1/2*sqrt(5)");
    CHECK(scalar_to_string(scalar_parse("-3/10")) == "-3/10");
}

TEST_CASE("rational sqrt lower bound") {
    Rational r = rational_sqrt_lower(Rational(1, 16));
    CHECK(r == Rational(1, 4));  // perfect square is exact
    Rational s = rational_sqrt_lower(Rational(2));
    CHECK(s * s <= Rational(2));
    CHECK((s + Rational(1, 1000000)) * (s + Rational(1, 1000000)) > Rational(2));
}

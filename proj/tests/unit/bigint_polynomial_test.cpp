#include "listpack/bigint.hpp"
#include "listpack/errors.hpp"
#include "listpack/polynomial.hpp"

#include <doctest.h>

using namespace listpack;

TEST_CASE("bigint helpers")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(to_decimal(factorial(25)) == "15511210043330985984000000");
    CHECK(from_decimal("-12345678901234567890123") == BigInt("-12345678901234567890123"));
    CHECK_THROWS_AS((void)from_decimal("12a"), InvalidArgument);
    CHECK_THROWS_AS((void)from_decimal(""), InvalidArgument);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(power(3, 0) == 1);
    CHECK(power(2, 100) == BigInt(1) << 100);
    CHECK(divide_exact(120, 6, "test") == 20);
    CHECK_THROWS_AS((void)divide_exact(7, 2, "test"), InvariantFailure);
}

TEST_CASE("ceil_root is the least r with r^d >= v")
{
    for (int v = 0; v <= 300; ++v) {
        for (unsigned d = 1; d <= 5; ++d) {
            BigInt r = ceil_root(v, d);
            CHECK(power(r, d) >= v);
            if (r > 0) {
                CHECK(power(r - 1, d) < v);
            }
        }
    }
    CHECK(ceil_root(power(3, 40), 6) == 1517);
    BigInt big = power(7, 55);
    BigInt r = ceil_root(big, 7);
    CHECK(power(r, 7) >= big);
    CHECK(power(r - 1, 7) < big);
}

TEST_CASE("polynomial arithmetic")
{
    Polynomial q2 = Polynomial::q_power(2);
    CHECK(q2.degree() == 2);
    CHECK(q2.evaluate(7) == 49);
    Polynomial ff = Polynomial::falling_factorial(3);  // q(q-1)(q-2)
    CHECK(ff.coefficients() == std::vector<BigInt>{0, 2, -3, 1});
    for (int q = 0; q < 6; ++q) {
        CHECK(ff.evaluate(q) == q * (q - 1) * (q - 2));
    }
    CHECK((ff - ff).is_zero());
    CHECK((q2 + Polynomial::constant(1)).to_string() == "q^2 + 1");
    CHECK(ff.divide_by_linear(2) == Polynomial::falling_factorial(2));
    CHECK(ff.divide_by_falling_factorial(3) == Polynomial::constant(1));
    CHECK_THROWS_AS((void)q2.divide_by_linear(1), InvariantFailure);
    CHECK(Polynomial(std::vector<BigInt>{1, 0, 0}).degree() == 0);
    CHECK(Polynomial().is_zero());
    CHECK(Polynomial().evaluate(5) == 0);
}

#include "listpack/bounds.hpp"
#include "listpack/counting.hpp"
#include "listpack/errors.hpp"
#include "listpack/extremal.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

using namespace listpack;

namespace {

void check_tight(const BoundReport& r)
{
    const unsigned num = r.exponent_num.convert_to<unsigned>();
    const unsigned den = r.exponent_den.convert_to<unsigned>();
    const BigInt target = power(r.base, num);
    CHECK(power(r.ceiling * r.divisor, den) >= target);
    if (r.ceiling > 0) {
        CHECK(power((r.ceiling - 1) * r.divisor, den) < target);
    }
}

}  // namespace

TEST_CASE("dz_threshold")
{
    CHECK(dz_threshold(2, 1, 2) == 3);
    CHECK(dz_threshold(3, 2, 2) == 6);
    for (int m = 0; m < 10; ++m) {
        CHECK(dz_threshold(7, m, 1) == m - 1);
    }
    CHECK_THROWS_AS((void)dz_threshold(2, 1, 0), InvalidArgument);
}

TEST_CASE("alon_furedi_nonzero_bound")
{
    BoundReport zero = alon_furedi_nonzero_bound(3, 2, 1, 5);
    CHECK(zero.applicable);
    CHECK(zero.ceiling == 1);
    BoundReport r = alon_furedi_nonzero_bound(6, 2, 1, 3);
    CHECK(r.applicable);
    CHECK(r.base == 3);
    CHECK(r.exponent_num == 3);
    CHECK(r.exponent_den == 2);
    CHECK(r.divisor == 1);
    CHECK(r.ceiling == 6);
    CHECK_FALSE(alon_furedi_nonzero_bound(2, 2, 1, 3).applicable);
    CHECK_FALSE(alon_furedi_nonzero_bound(6, 2, 1, 1).applicable);
    CHECK_FALSE(alon_furedi_nonzero_bound(6, 2, 1, 1).passed.has_value());

    // Substituting the packing parameters reproduces packing_lower_bound's exponent.
    for (long long n = 1; n <= 6; ++n) {
        for (long long m = 0; m <= n; ++m) {
            for (long long q = 2; q <= 5; ++q) {
                for (long long k = 1; k <= q; ++k) {
                    BoundReport p = packing_lower_bound(n, m, q, k);
                    if (!p.applicable) {
                        continue;
                    }
                    BoundReport a = alon_furedi_nonzero_bound(k * n * q, k * n, n * k * (k - 1) / 2 + k * m, q);
                    REQUIRE(a.applicable);
                    CHECK(a.exponent_num == p.exponent_num);
                    CHECK(a.exponent_den == p.exponent_den);
                }
            }
        }
    }
}

TEST_CASE("packing_lower_bound")
{
    BoundReport r = packing_lower_bound(8, 8, 3, 2);
    CHECK(r.applicable);
    CHECK(r.base == 3);
    CHECK(r.exponent_num == 4);
    CHECK(r.exponent_den == 1);
    CHECK(r.divisor == 2);
    CHECK(r.ceiling == 41);

    BoundReport dense = packing_lower_bound(4, 12, 3, 2);
    CHECK_FALSE(dense.applicable);
    CHECK(dense.ceiling == 1);
    CHECK_FALSE(dense.passed.has_value());

    // k = 1: exponent n - m/(q-1) as a reduced rational.
    for (long long n = 1; n <= 8; ++n) {
        for (long long m = 0; m <= 2 * n; ++m) {
            for (long long q = 2; q <= 6; ++q) {
                BoundReport p = packing_lower_bound(n, m, q, 1);
                CHECK(p.divisor == 1);
                if (p.applicable) {
                    CHECK(p.exponent_num * (q - 1) == (n * (q - 1) - m) * p.exponent_den);
                    CHECK(boost::multiprecision::gcd(p.exponent_num, p.exponent_den) == 1);
                }
            }
        }
    }
    CHECK_THROWS_AS((void)packing_lower_bound(2, 1, 2, 3), InvalidArgument);
}

TEST_CASE("every ceiling is tight")
{
    for (long long n = 1; n <= 10; ++n) {
        for (long long m = 0; m <= 2 * n; ++m) {
            for (long long q = 2; q <= 6; ++q) {
                for (long long k = 1; k <= q; ++k) {
                    BoundReport p = packing_lower_bound(n, m, q, k);
                    if (p.applicable) {
                        check_tight(p);
                    }
                }
            }
        }
    }
    for (long long S = 1; S <= 12; ++S) {
        for (long long t = 2; t <= 5; ++t) {
            BoundReport a = alon_furedi_nonzero_bound(S, 1, 0, t);
            if (a.applicable) {
                check_tight(a);
            }
        }
    }
    for (long long n = 1; n <= 60; ++n) {
        check_tight(girth8_bound(n));
    }
}

TEST_CASE("check_bound_against_count")
{
    BoundReport k2 = packing_lower_bound(2, 1, 3, 2);
    CHECK(k2.exponent_num == 2);
    CHECK(k2.exponent_den == 1);
    BoundReport checked = check_bound_against_count(k2, 9);
    CHECK(checked.passed == true);
    CHECK_THROWS_AS((void)check_bound_against_count(k2, 0), InvalidArgument);
    CHECK_THROWS_AS((void)check_bound_against_count(packing_lower_bound(4, 12, 3, 2), 5), InvalidArgument);

    BoundReport p3 = packing_lower_bound(3, 2, 2, 1);
    CHECK(p3.exponent_num == 1);
    CHECK(p3.exponent_den == 1);
    CHECK(list_packing_function_exact(families::path(3), 2, 1).value == 2);
    CHECK(check_bound_against_count(p3, 2).passed == true);
    CHECK(check_bound_against_count(p3, 1).passed == false);
}

TEST_CASE("packing bound holds for every small positive count")
{
    for (int n = 1; n <= 4; ++n) {
        for (const Graph& g : oracle::all_graphs(n)) {
            for (int q = 2; q <= 3; ++q) {
                for (int k = 1; k <= q; ++k) {
                    BoundReport r = packing_lower_bound(n, g.size(), q, k);
                    if (!r.applicable) {
                        continue;
                    }
                    Count minimum = list_packing_function_exact(g, q, k).value;
                    if (minimum > 0) {
                        CHECK(check_bound_against_count(r, minimum).passed == true);
                    }
                }
            }
        }
    }
}

TEST_CASE("tree_packing_value")
{
    CHECK(tree_packing_value(3, 3) == 4);
    CHECK(tree_packing_value(1, 7) == 1);
    CHECK(tree_packing_value(5, 2) == 1);
    CHECK_THROWS_AS((void)tree_packing_value(0, 2), InvalidArgument);
}

TEST_CASE("girth8_bound")
{
    BoundReport b8 = girth8_bound(8);
    CHECK(b8.base == 3);
    CHECK(b8.exponent_num == 4);
    CHECK(b8.exponent_den == 3);
    CHECK(b8.divisor == 2);
    CHECK(b8.ceiling == 3);
    CHECK(girth8_bound(6).ceiling == 2);
    CHECK(girth8_bound(12).ceiling == 5);
}

TEST_CASE("girth-8 edge bound makes the packing exponent at least n/6")
{
    for (long long n = 1; n <= 60; ++n) {
        for (long long m = 0; 3 * m <= 4 * n; ++m) {
            BoundReport p = packing_lower_bound(n, m, 3, 2);
            REQUIRE(p.applicable);
            // p.num / p.den >= n / 6
            CHECK(p.exponent_num * 6 >= BigInt(n) * p.exponent_den);
        }
    }
}

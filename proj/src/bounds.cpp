#include "listpack/bounds.hpp"

#include "listpack/counting.hpp"
#include "listpack/errors.hpp"

namespace listpack {

namespace {

unsigned to_exponent(const BigInt& value)
{
    if (value < 0 || value > 1'000'000) {
        throw InvalidArgument("bound exponent out of supported range: " + value.str());
    }
    return value.convert_to<unsigned>();
}

// Sets the reduced exponent and the tight ceiling for an applicable report.
BoundReport finish(BigInt base, BigInt num, BigInt den, Count divisor)
{
    if (den <= 0) {
        throw InvariantFailure("bound exponent denominator must be positive");
    }
    BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    BoundReport r;
    r.applicable = true;
    r.base = std::move(base);
    r.exponent_num = std::move(num);
    r.exponent_den = std::move(den);
    r.divisor = std::move(divisor);
    // Least c with (c * divisor)^den >= base^num.
    const BigInt target = power(r.base, to_exponent(r.exponent_num));
    const BigInt root = ceil_root(target, to_exponent(r.exponent_den));
    r.ceiling = (root + r.divisor - 1) / r.divisor;
    return r;
}

BoundReport inapplicable(BigInt base, BigInt num, BigInt den, Count divisor)
{
    BoundReport r;
    r.applicable = false;
    r.base = std::move(base);
    r.exponent_num = std::move(num);
    r.exponent_den = std::move(den);
    r.divisor = std::move(divisor);
    r.ceiling = 1;
    return r;
}

}  // namespace

long long dz_threshold(long long n, long long m, long long k)
{
    if (k < 1) {
        throw InvalidArgument("dz_threshold: k must be positive");
    }
    if (n < 0 || m < 0) {
        throw InvalidArgument("dz_threshold: n and m must be non-negative");
    }
    return n * k * (k - 1) / 2 + m * k - 1;
}

BoundReport alon_furedi_nonzero_bound(long long S, long long n_vars, long long d, long long t)
{
    if (S < 1 || n_vars < 1 || d < 0 || t < 1) {
        throw InvalidArgument("alon_furedi_nonzero_bound: S, n_vars, t must be positive and d non-negative");
    }
    if (S < n_vars + d || t < 2) {
        return inapplicable(t, S - n_vars - d, t >= 2 ? t - 1 : 1, 1);
    }
    return finish(t, S - n_vars - d, t - 1, 1);
}

BoundReport packing_lower_bound(long long n, long long m, long long q, long long k)
{
    if (n < 1 || m < 0 || q < 1 || k < 1) {
        throw InvalidArgument("packing_lower_bound: n, q, k must be positive and m non-negative");
    }
    if (k > q) {
        throw InvalidArgument("packing_lower_bound: k exceeds q");
    }
    const Count divisor = factorial(static_cast<unsigned>(k));
    if (q < 2) {
        // No exponent exists at q = 1; only the trivial bound is reported.
        return inapplicable(q, 0, 1, divisor);
    }
    // Exponent kn - (nk(k-1)/2 + km)/(q-1) over the common denominator q-1.
    const BigInt edges_of_product = BigInt(n) * k * (k - 1) / 2 + BigInt(k) * m;
    const BigInt num = BigInt(k) * n * (q - 1) - edges_of_product;
    // m <= n(q - 1 - (k-1)/2), doubled to stay integral.
    if (2 * m > n * (2 * (q - 1) - (k - 1))) {
        return inapplicable(q, num, q - 1, divisor);
    }
    return finish(q, num, q - 1, divisor);
}

BoundReport check_bound_against_count(BoundReport report, const Count& measured)
{
    if (!report.applicable) {
        throw InvalidArgument("check_bound_against_count: bound hypotheses do not hold");
    }
    if (measured <= 0) {
        throw InvalidArgument("check_bound_against_count: measured count must be positive");
    }
    const BigInt lhs = power(measured * report.divisor, to_exponent(report.exponent_den));
    const BigInt rhs = power(report.base, to_exponent(report.exponent_num));
    report.passed = lhs >= rhs;
    return report;
}

Count tree_packing_value(int n, int q)
{
    if (n < 1 || q < 1) {
        throw InvalidArgument("tree_packing_value: n and q must be positive");
    }
    return power(derangements(q), static_cast<unsigned>(n - 1));
}

BoundReport girth8_bound(long long n)
{
    if (n < 1) {
        throw InvalidArgument("girth8_bound: n must be positive");
    }
    return finish(3, n, 6, 2);
}

}  // namespace listpack

#include "listpack/bigint.hpp"

#include "listpack/errors.hpp"

#include <cctype>

namespace listpack {

BigInt from_decimal(const std::string& text)
{
    if (text.empty()) {
        throw InvalidArgument("empty decimal string");
    }
    std::size_t start = text[0] == '-' ? 1 : 0;
    if (start == text.size()) {
        throw InvalidArgument("malformed decimal string: " + text);
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw InvalidArgument("malformed decimal string: " + text);
        }
    }
    return BigInt(text);
}

BigInt factorial(unsigned n)
{
    BigInt result = 1;
    for (unsigned i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

BigInt binomial(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt power(const BigInt& base, unsigned exponent)
{
    return boost::multiprecision::pow(base, exponent);
}

BigInt ceil_root(const BigInt& value, unsigned degree)
{
    if (degree == 0) {
        throw InvalidArgument("ceil_root: degree must be positive");
    }
    if (value < 0) {
        throw InvalidArgument("ceil_root: negative radicand");
    }
    if (value <= 1 || degree == 1) {
        return value;
    }
    // Invariant: lo^degree < value <= hi^degree.
    BigInt lo = 0;
    BigInt hi = 1;
    while (power(hi, degree) < value) {
        lo = hi;
        hi <<= 1;
    }
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) >> 1;
        if (power(mid, degree) >= value) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

BigInt divide_exact(const BigInt& numerator, const BigInt& divisor, const char* context)
{
    if (divisor == 0) {
        throw InvariantFailure(std::string(context) + ": division by zero");
    }
    BigInt quotient;
    BigInt remainder;
    boost::multiprecision::divide_qr(numerator, divisor, quotient, remainder);
    if (remainder != 0) {
        throw InvariantFailure(std::string(context) + ": " + numerator.str() + " is not divisible by " +
                               divisor.str());
    }
    return quotient;
}

}  // namespace listpack

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace listpack {

using BigInt = boost::multiprecision::cpp_int;

/// Exact non-negative count of colorings or packings.
using Count = BigInt;

[[nodiscard]] inline std::string to_decimal(const BigInt& value) { return value.str(); }

[[nodiscard]] BigInt from_decimal(const std::string& text);

[[nodiscard]] BigInt factorial(unsigned n);
[[nodiscard]] BigInt binomial(unsigned n, unsigned k);
[[nodiscard]] BigInt power(const BigInt& base, unsigned exponent);

/// Least r >= 0 with r^degree >= value. degree >= 1, value >= 0.
[[nodiscard]] BigInt ceil_root(const BigInt& value, unsigned degree);

/// Divides numerator by divisor, throwing InvariantFailure if the remainder is nonzero.
[[nodiscard]] BigInt divide_exact(const BigInt& numerator, const BigInt& divisor, const char* context);

}  // namespace listpack

#pragma once

#include "listpack/bigint.hpp"

#include <string>
#include <vector>

namespace listpack {

/// Univariate polynomial in q with arbitrary-precision integer coefficients.
/// coefficients()[i] is the coefficient of q^i; trailing zeros are trimmed, so the
/// zero polynomial has no coefficients and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigInt> coefficients);

    [[nodiscard]] static Polynomial constant(const BigInt& c);
    /// q^n
    [[nodiscard]] static Polynomial q_power(int n);
    /// q(q-1)...(q-n+1); the chromatic polynomial of K_n.
    [[nodiscard]] static Polynomial falling_factorial(int n);

    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
    [[nodiscard]] const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
    [[nodiscard]] BigInt coefficient(int i) const;
    [[nodiscard]] bool is_zero() const noexcept { return coefficients_.empty(); }

    [[nodiscard]] BigInt evaluate(const BigInt& q) const;

    /// Exact division by (q - root). Throws InvariantFailure on a nonzero remainder.
    [[nodiscard]] Polynomial divide_by_linear(const BigInt& root) const;

    /// Exact division by q(q-1)...(q-n+1).
    [[nodiscard]] Polynomial divide_by_falling_factorial(int n) const;

    /// Human-readable form, highest degree first, e.g. "q^3 - 3q^2 + 2q".
    [[nodiscard]] std::string to_string() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();

    std::vector<BigInt> coefficients_;
};

}  // namespace listpack

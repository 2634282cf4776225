#include "listpack/polynomial.hpp"

#include "listpack/errors.hpp"

#include <algorithm>
#include <sstream>

namespace listpack {

Polynomial::Polynomial(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients))
{
    trim();
}

void Polynomial::trim()
{
    while (!coefficients_.empty() && coefficients_.back() == 0) {
        coefficients_.pop_back();
    }
}

Polynomial Polynomial::constant(const BigInt& c)
{
    return Polynomial(std::vector<BigInt>{c});
}

Polynomial Polynomial::q_power(int n)
{
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, 0);
    c.back() = 1;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::falling_factorial(int n)
{
    // Multiply by (q - j) in place.
    std::vector<BigInt> c{1};
    for (int j = 0; j < n; ++j) {
        c.push_back(0);
        for (std::size_t i = c.size() - 1; i > 0; --i) {
            c[i] = c[i - 1] - c[i] * j;
        }
        c[0] = -c[0] * j;
    }
    return Polynomial(std::move(c));
}

BigInt Polynomial::coefficient(int i) const
{
    if (i < 0 || i > degree()) {
        return 0;
    }
    return coefficients_[i];
}

BigInt Polynomial::evaluate(const BigInt& q) const
{
    BigInt acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc = acc * q + *it;
    }
    return acc;
}

Polynomial Polynomial::divide_by_linear(const BigInt& root) const
{
    if (is_zero()) {
        return {};
    }
    // Synthetic division, highest degree first.
    const std::size_t d = coefficients_.size() - 1;
    std::vector<BigInt> quotient(d);
    BigInt carry = 0;
    for (std::size_t i = d + 1; i-- > 0;) {
        BigInt value = coefficients_[i] + carry * root;
        if (i == 0) {
            if (value != 0) {
                throw InvariantFailure("polynomial division by (q - " + root.str() + ") left remainder " +
                                       value.str());
            }
        } else {
            quotient[i - 1] = value;
        }
        carry = value;
    }
    return Polynomial(std::move(quotient));
}

Polynomial Polynomial::divide_by_falling_factorial(int n) const
{
    Polynomial result = *this;
    for (int j = 0; j < n; ++j) {
        result = result.divide_by_linear(j);
    }
    return result;
}

std::string Polynomial::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coefficients_[i];
        if (c == 0) {
            continue;
        }
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            out << (c < 0 ? "-" : "");
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0) {
            out << mag;
        }
        if (i >= 1) {
            out << 'q';
        }
        if (i >= 2) {
            out << '^' << i;
        }
        first = false;
    }
    return out.str();
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    if (coefficients_.size() < other.coefficients_.size()) {
        coefficients_.resize(other.coefficients_.size(), 0);
    }
    for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
        coefficients_[i] += other.coefficients_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    if (coefficients_.size() < other.coefficients_.size()) {
        coefficients_.resize(other.coefficients_.size(), 0);
    }
    for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
        coefficients_[i] -= other.coefficients_[i];
    }
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<BigInt> c(a.coefficients_.size() + b.coefficients_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
        if (a.coefficients_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
            c[i + j] += a.coefficients_[i] * b.coefficients_[j];
        }
    }
    return Polynomial(std::move(c));
}

}  // namespace listpack

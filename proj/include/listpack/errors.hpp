#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace listpack {

/// Bad input to a public operation: a violated precondition or malformed data.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration or search hit its configured cap before finishing.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t processed)
        : std::runtime_error(what), processed_(processed) {}

    /// Items fully handled before the cap was hit.
    [[nodiscard]] std::uint64_t processed() const noexcept { return processed_; }

private:
    std::uint64_t processed_;
};

/// A mathematical invariant that must hold did not, e.g. an inexact k! division.
/// Always indicates a bug in this library.
class InvariantFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace listpack

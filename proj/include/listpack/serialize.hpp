#pragma once

#include "listpack/assignment.hpp"
#include "listpack/bounds.hpp"
#include "listpack/extremal.hpp"
#include "listpack/polynomial.hpp"

#include <json.hpp>

#include <filesystem>

namespace listpack::io {

using Json = nlohmann::ordered_json;

/// Counts travel as decimal strings; they outgrow 64-bit and 53-bit consumers.
[[nodiscard]] Json count_to_json(const Count& value);
[[nodiscard]] Count count_from_json(const Json& j);

/// Array of coefficient decimal strings, constant term first.
[[nodiscard]] Json polynomial_to_json(const Polynomial& p);
[[nodiscard]] Polynomial polynomial_from_json(const Json& j);

/// {"0": [colors...], "1": [...], ...}. Every vertex 0..n-1 must appear exactly once
/// and all lists must have the same size.
[[nodiscard]] ListAssignment assignment_from_json(const Json& j);
[[nodiscard]] Json assignment_to_json(const ListAssignment& lists);
[[nodiscard]] ListAssignment load_assignment(const std::filesystem::path& path);

/// {"n", "q", "multiplicities": [{"subset": [vertices], "m": count}, ...]}
[[nodiscard]] Json pattern_to_json(const PatternAssignment& pattern);
[[nodiscard]] PatternAssignment pattern_from_json(const Json& j);

/// {applicable, base, exponent_num, exponent_den, divisor, ceiling, passed?}
[[nodiscard]] Json bound_report_to_json(const BoundReport& report);
[[nodiscard]] BoundReport bound_report_from_json(const Json& j);

[[nodiscard]] Json minimization_to_json(const MinimizationResult& result);
[[nodiscard]] Json probe_to_json(const EqualityProbeResult& probe);

}  // namespace listpack::io

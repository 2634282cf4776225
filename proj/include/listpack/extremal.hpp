#pragma once

#include "listpack/assignment.hpp"
#include "listpack/bigint.hpp"
#include "listpack/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace listpack {

/// Minimum packing count found over some set of q-assignments.
struct MinimizationResult {
    Count value;
    /// A pattern attaining value: the first in enumeration order for exact sweeps,
    /// the lexicographically least minimiser seen for sampled runs.
    PatternAssignment witness;
    /// True iff every pattern was evaluated.
    bool exhaustive = false;
    std::uint64_t patterns_evaluated = 0;
};

struct SweepOptions {
    std::uint64_t pattern_budget = default_pattern_budget;
    int workers = 1;
    /// Called for every evaluated pattern, in enumeration order, from the calling thread.
    std::function<void(const PatternAssignment&, const Count&)> observer;
};

/// P*_l(G, q, k): minimum of count_packings_direct over every intersection pattern.
/// Throws BudgetExceeded if the pattern space is larger than the budget; use
/// list_packing_function_sampled for such instances.
[[nodiscard]] MinimizationResult list_packing_function_exact(const Graph& g, int q, int k,
                                                             const SweepOptions& options = {});

/// Upper estimate of P*_l(G, q, k) from `samples` seeded random patterns plus the
/// constant pattern. Reproducible for a fixed seed and independent of workers.
[[nodiscard]] MinimizationResult list_packing_function_sampled(const Graph& g, int q, int k, std::uint64_t samples,
                                                               std::uint64_t seed, int workers = 1);

/// A random q-assignment pattern: a universe size U is drawn from [q, n*q], then each
/// vertex takes a uniform q-subset of [U].
[[nodiscard]] PatternAssignment random_pattern(const Graph& g, int q, std::mt19937_64& rng);

struct PackingNumberResult {
    /// Least q <= q_max with P*_l(G, q, q) > 0; empty when the cap was reached.
    std::optional<int> value;
    /// Per-q exact minima for q = 1..(value or q_max).
    std::vector<Count> minima;
};

/// chi*_l(G) searched up to q_max. BudgetExceeded propagates, with processed() set
/// to the largest q that was fully checked.
[[nodiscard]] PackingNumberResult list_packing_number(const Graph& g, int q_max, const SweepOptions& options = {});

struct GapRow {
    int q = 0;
    Count classical;
    std::optional<Count> minimum;  // absent when the sweep was truncated
    bool exhaustive = false;

    [[nodiscard]] std::optional<Count> gap() const
    {
        if (!minimum) {
            return std::nullopt;
        }
        return classical - *minimum;
    }
};

struct EqualityProbeResult {
    int k = 0;
    int q_max = 0;
    std::vector<GapRow> rows;
    /// Least q such that the gap is zero on all of [q, q_max]; empty if none or if
    /// the table was truncated.
    std::optional<int> least_equal_q;
    bool truncated = false;
    /// max(k, nk(k-1)/2 + mk - 1): equality is guaranteed from here on.
    long long threshold = 0;
    /// least_equal_q <= threshold, checked whenever threshold <= q_max.
    std::optional<bool> threshold_consistent;
};

/// Gap table P*(G,q,k) - P*_l(G,q,k) for q = k..q_max from exact sweeps.
[[nodiscard]] EqualityProbeResult equality_probe(const Graph& g, int k, int q_max, const SweepOptions& options = {});

/// Gap table as CSV with header q,classical_count,min_count,gap,exhaustive.
[[nodiscard]] std::string gap_table_csv(const EqualityProbeResult& probe);

}  // namespace listpack

#include "listpack/extremal.hpp"

#include "listpack/bounds.hpp"
#include "listpack/counting.hpp"
#include "listpack/errors.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace listpack {

namespace {

constexpr std::size_t batch_size = 2048;

std::vector<Count> evaluate_batch(const Graph& g, int k, const std::vector<PatternAssignment>& batch, int workers)
{
    std::vector<Count> counts(batch.size());
    detail::parallel_for(batch.size(), workers, [&](std::size_t i) {
        counts[i] = count_packings_direct(g, realize_pattern(batch[i], g), k);
    });
    return counts;
}

void require_k_le_q(int q, int k)
{
    if (q < 1 || k < 1) {
        throw InvalidArgument("q and k must be positive");
    }
    if (k > q) {
        throw InvalidArgument("packing size k = " + std::to_string(k) + " exceeds list size q = " + std::to_string(q));
    }
}

PatternAssignment constant_pattern(const Graph& g, int q)
{
    return PatternAssignment(g.order(), q, {{low_mask(g.order()), q}});
}

}  // namespace

MinimizationResult list_packing_function_exact(const Graph& g, int q, int k, const SweepOptions& options)
{
    require_k_le_q(q, k);
    std::optional<Count> best;
    std::optional<PatternAssignment> witness;
    std::uint64_t evaluated = 0;
    std::vector<PatternAssignment> batch;

    auto flush = [&] {
        auto counts = evaluate_batch(g, k, batch, options.workers);
        for (std::size_t i = 0; i < batch.size(); ++i) {
            if (options.observer) {
                options.observer(batch[i], counts[i]);
            }
            // Strict comparison keeps the earliest minimiser in enumeration order.
            if (!best || counts[i] < *best) {
                best = counts[i];
                witness = batch[i];
            }
        }
        evaluated += batch.size();
        batch.clear();
    };

    // Size the pattern space before counting anything.
    auto status = count_patterns(g, q, options.pattern_budget);
    if (status.truncated) {
        throw BudgetExceeded("pattern space for n = " + std::to_string(g.order()) + ", q = " + std::to_string(q) +
                                 " exceeds the budget of " + std::to_string(options.pattern_budget) +
                                 " patterns; use the sampled minimiser",
                             0);
    }
    (void)enumerate_patterns(g, q, options.pattern_budget, [&](const PatternAssignment& p) {
        batch.push_back(p);
        if (batch.size() == batch_size) {
            flush();
        }
    });
    flush();
    if (!best) {
        throw InvariantFailure("pattern enumeration produced no patterns");
    }
    return {std::move(*best), std::move(*witness), true, evaluated};
}

PatternAssignment random_pattern(const Graph& g, int q, std::mt19937_64& rng)
{
    const int n = g.order();
    std::uniform_int_distribution<int> universe_size(q, n * q);
    const int universe = universe_size(rng);
    std::vector<Color> colors(universe);
    std::iota(colors.begin(), colors.end(), 0);
    std::vector<std::vector<Color>> lists(n);
    for (auto& list : lists) {
        // Partial Fisher-Yates: the first q entries become a uniform q-subset.
        for (int i = 0; i < q; ++i) {
            std::uniform_int_distribution<int> pick(i, universe - 1);
            std::swap(colors[i], colors[pick(rng)]);
        }
        list.assign(colors.begin(), colors.begin() + q);
    }
    return canonical_pattern(ListAssignment(std::move(lists)));
}

MinimizationResult list_packing_function_sampled(const Graph& g, int q, int k, std::uint64_t samples,
                                                 std::uint64_t seed, int workers)
{
    require_k_le_q(q, k);
    std::mt19937_64 rng(seed);
    std::vector<PatternAssignment> patterns;
    patterns.reserve(static_cast<std::size_t>(samples) + 1);
    patterns.push_back(constant_pattern(g, q));
    for (std::uint64_t i = 0; i < samples; ++i) {
        patterns.push_back(random_pattern(g, q, rng));
    }
    auto counts = evaluate_batch(g, k, patterns, workers);
    std::size_t best = 0;
    for (std::size_t i = 1; i < patterns.size(); ++i) {
        if (counts[i] < counts[best] || (counts[i] == counts[best] && patterns[i] < patterns[best])) {
            best = i;
        }
    }
    return {counts[best], patterns[best], false, static_cast<std::uint64_t>(patterns.size())};
}

PackingNumberResult list_packing_number(const Graph& g, int q_max, const SweepOptions& options)
{
    if (q_max < 1) {
        throw InvalidArgument("q_max must be positive");
    }
    PackingNumberResult result;
    for (int q = 1; q <= q_max; ++q) {
        Count minimum;
        try {
            minimum = list_packing_function_exact(g, q, q, options).value;
        } catch (const BudgetExceeded& e) {
            std::string what = e.what();
            if (q > 1) {
                what += " (checked q = 1.." + std::to_string(q - 1) + ")";
            }
            throw BudgetExceeded(what, static_cast<std::uint64_t>(q - 1));
        }
        result.minima.push_back(minimum);
        if (minimum > 0) {
            result.value = q;
            break;
        }
    }
    return result;
}

EqualityProbeResult equality_probe(const Graph& g, int k, int q_max, const SweepOptions& options)
{
    if (k < 1) {
        throw InvalidArgument("k must be positive");
    }
    if (q_max < k) {
        throw InvalidArgument("q_max must be at least k");
    }
    EqualityProbeResult probe;
    probe.k = k;
    probe.q_max = q_max;
    probe.threshold = std::max<long long>(k, dz_threshold(g.order(), g.size(), k));
    for (int q = k; q <= q_max; ++q) {
        GapRow row;
        row.q = q;
        row.classical = classical_packing_count(g, q, k);
        try {
            auto sweep = list_packing_function_exact(g, q, k, options);
            row.minimum = sweep.value;
            row.exhaustive = true;
        } catch (const BudgetExceeded&) {
            probe.truncated = true;
        }
        probe.rows.push_back(std::move(row));
        if (probe.truncated) {
            break;
        }
    }
    if (!probe.truncated) {
        for (auto it = probe.rows.rbegin(); it != probe.rows.rend() && it->gap() == Count(0); ++it) {
            probe.least_equal_q = it->q;
        }
        if (probe.threshold <= q_max) {
            probe.threshold_consistent = probe.least_equal_q && *probe.least_equal_q <= probe.threshold;
        }
    }
    return probe;
}

std::string gap_table_csv(const EqualityProbeResult& probe)
{
    std::ostringstream out;
    out << "q,classical_count,min_count,gap,exhaustive\n";
    for (const auto& row : probe.rows) {
        out << row.q << ',' << row.classical << ',';
        if (row.minimum) {
            out << *row.minimum << ',' << *row.gap();
        } else {
            out << ',';
        }
        out << ',' << (row.exhaustive ? "true" : "false") << '\n';
    }
    return out.str();
}

}  // namespace listpack

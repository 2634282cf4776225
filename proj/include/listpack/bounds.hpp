#pragma once

#include "listpack/bigint.hpp"

#include <optional>

namespace listpack {

/// A lower bound of the form base^(exponent_num / exponent_den) / divisor, with the
/// least integer at or above it. All comparisons are exact integer comparisons:
/// x >= bound  <=>  (x * divisor)^exponent_den >= base^exponent_num.
struct BoundReport {
    /// The bound's hypotheses hold. An inapplicable report still encodes the trivial
    /// bound 1 in `ceiling`, and never carries `passed`.
    bool applicable = false;
    BigInt base = 1;
    BigInt exponent_num = 0;
    BigInt exponent_den = 1;
    Count divisor = 1;
    Count ceiling = 1;
    std::optional<bool> passed;

    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// nk(k-1)/2 + mk - 1: the list packing count equals the classical one for every q
/// at or above this value. May be negative (k = 1, m = 0). Requires k >= 1.
[[nodiscard]] long long dz_threshold(long long n, long long m, long long k);

/// Nonzero count for a degree-d polynomial over a grid with S = sum |A_i|, n_vars
/// sets and max set size t: at least t^((S - n_vars - d)/(t - 1)). Applicable iff
/// S >= n_vars + d and t >= 2.
[[nodiscard]] BoundReport alon_furedi_nonzero_bound(long long S, long long n_vars, long long d, long long t);

/// q^(kn - (nk(k-1)/2 + km)/(q-1)) / k! for an n-vertex, m-edge graph with a
/// q-assignment and a positive packing count. Applicable iff m <= n(q-1-(k-1)/2)
/// and q >= 2. Requires 1 <= k <= q.
[[nodiscard]] BoundReport packing_lower_bound(long long n, long long m, long long q, long long k);

/// Fills `passed` with the exact comparison of `measured` against the bound.
/// Throws InvalidArgument if the report is inapplicable or measured is zero.
[[nodiscard]] BoundReport check_bound_against_count(BoundReport report, const Count& measured);

/// (!q)^(n-1), the list and classical packing counts of any n-vertex tree at k = q.
[[nodiscard]] Count tree_packing_value(int n, int q);

/// 3^(n/6) / 2, the guaranteed number of 2-packings for 3-assignments of an
/// n-vertex planar graph of girth at least 8. Planarity and girth are the caller's
/// responsibility.
[[nodiscard]] BoundReport girth8_bound(long long n);

}  // namespace listpack

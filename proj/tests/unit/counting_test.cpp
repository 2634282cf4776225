#include "listpack/chromatic.hpp"
#include "listpack/counting.hpp"
#include "listpack/errors.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace listpack;

namespace {

ListAssignment random_assignment(int n, int q, int universe, std::mt19937_64& rng)
{
    std::vector<Color> colors(universe);
    std::iota(colors.begin(), colors.end(), 0);
    std::vector<std::vector<Color>> lists(n);
    for (auto& list : lists) {
        std::shuffle(colors.begin(), colors.end(), rng);
        list.assign(colors.begin(), colors.begin() + q);
    }
    return ListAssignment(std::move(lists));
}

}  // namespace

TEST_CASE("count_list_colorings")
{
    Graph k2 = families::complete(2);
    CHECK(count_list_colorings(k2, ListAssignment({{0}, {0}})) == 0);
    CHECK(count_list_colorings(k2, ListAssignment({{0, 1}, {1, 2}})) == 3);
    CHECK(count_list_colorings(families::cycle(4), constant_assignment(families::cycle(4), 3)) == 18);

    std::mt19937_64 rng(23);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int n = 2 + static_cast<int>(seed % 6);
        const int q = 1 + static_cast<int>(seed % 3);
        Graph g = families::random_graph(n, 0.5, seed);
        ListAssignment lists = random_assignment(n, q, q + static_cast<int>(seed % 4), rng);
        CHECK(count_list_colorings(g, lists) == oracle::count_list_colorings(g, lists));
        ListAssignment constant = constant_assignment(g, q + 1);
        CHECK(count_list_colorings(g, constant) == chromatic_polynomial(g).evaluate(q + 1));
    }
    CHECK_THROWS_AS((void)count_list_colorings(families::path(3), ListAssignment({{0}, {1}})), InvalidArgument);
}

TEST_CASE("packing counts on small instances")
{
    Graph k1(1);
    Graph k2 = families::complete(2);
    ListAssignment c3 = constant_assignment(k2, 3);
    ListAssignment overlap({{0, 1}, {1, 2}});

    CHECK(count_packings_direct(k2, c3, 2) == 9);
    CHECK(count_packings_via_product(k2, c3, 2) == 9);
    CHECK(count_packings_direct(k2, overlap, 2) == 1);
    CHECK(count_packings_via_product(k2, overlap, 2) == 1);
    CHECK(count_packings_direct(k2, constant_assignment(k2, 1), 1) == 0);
    CHECK(count_packings_direct(k2, overlap, 1) == 3);
    for (int q = 1; q <= 6; ++q) {
        for (int k = 1; k <= q; ++k) {
            ListAssignment lists = constant_assignment(k1, q);
            CHECK(count_packings_direct(k1, lists, k) == binomial(q, k));
            CHECK(count_packings_via_product(k1, lists, k) == binomial(q, k));
        }
    }
    CHECK_THROWS_AS((void)count_packings_direct(k2, c3, 4), InvalidArgument);
    CHECK_THROWS_AS((void)count_packings_via_product(k2, c3, 4), InvalidArgument);
    CHECK_THROWS_AS((void)count_packings_direct(k2, c3, 0), InvalidArgument);
}

TEST_CASE("direct, product and brute-force packing counts agree")
{
    std::mt19937_64 rng(41);
    for (int n = 1; n <= 4; ++n) {
        for (const Graph& g : oracle::all_graphs(n)) {
            for (int q = 1; q <= 3; ++q) {
                ListAssignment lists = random_assignment(n, q, q + 2, rng);
                for (int k = 1; k <= q; ++k) {
                    Count expected = oracle::count_packing_sets(g, lists, k);
                    CHECK(count_packings_direct(g, lists, k) == expected);
                    CHECK(count_packings_via_product(g, lists, k) == expected);
                }
            }
        }
    }
}

TEST_CASE("classical_packing_count")
{
    CHECK(classical_packing_count(families::path(3), 3, 3) == 4);
    CHECK(classical_packing_count(families::complete(2), 3, 2) == 9);
    CHECK(classical_packing_count(families::complete(2), 2, 2) == 1);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = families::random_graph(5, 0.5, seed);
        for (int q = 1; q <= 4; ++q) {
            CHECK(classical_packing_count(g, q, 1) == chromatic_polynomial(g).evaluate(q));
            for (int k = 1; k <= std::min(q, 3); ++k) {
                CHECK(classical_packing_count(g, q, k) == count_packings_direct(g, constant_assignment(g, q), k));
            }
        }
    }
    CHECK_THROWS_AS((void)classical_packing_count(families::path(2), 2, 3), InvalidArgument);
}

TEST_CASE("classical tree packings equal (!q)^(n-1)")
{
    for (int n = 1; n <= 5; ++n) {
        for (int q = 1; q <= 4; ++q) {
            CHECK(classical_packing_count(families::random_tree(n, 31 + n), q, q) ==
                  power(derangements(q), static_cast<unsigned>(n - 1)));
        }
    }
}

TEST_CASE("derangements")
{
    CHECK(derangements(0) == 1);
    CHECK(derangements(1) == 0);
    CHECK(derangements(4) == 9);
    for (int q = 0; q <= 8; ++q) {
        CHECK(derangements(q) == oracle::count_derangements(q));
    }
    CHECK(derangements(20) == BigInt("895014631192902121"));
    CHECK_THROWS_AS((void)derangements(-1), InvalidArgument);
}

TEST_CASE("count_fpf_bijections")
{
    std::vector<Color> a{0, 1, 2};
    CHECK(count_fpf_bijections(a, a) == 2);
    std::vector<Color> x{0, 1};
    std::vector<Color> y{1, 2};
    CHECK(count_fpf_bijections(x, y) == 1);
    std::vector<Color> z{5, 6};
    CHECK(count_fpf_bijections(x, z) == 2);
    CHECK_THROWS_AS((void)count_fpf_bijections(a, x), InvalidArgument);
    std::vector<Color> repeated{1, 1};
    CHECK_THROWS_AS((void)count_fpf_bijections(repeated, x), InvalidArgument);

    // At least !q for every pair of q-sets.
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const int q = 1 + trial % 6;
        ListAssignment pair = random_assignment(2, q, q + trial % 4, rng);
        auto l0 = pair.list(0);
        auto l1 = pair.list(1);
        Count c = count_fpf_bijections(l0, l1);
        CHECK(c == oracle::count_fpf({l0.begin(), l0.end()}, {l1.begin(), l1.end()}));
        CHECK(c >= derangements(q));
    }
}

TEST_CASE("latin_array_count")
{
    CHECK(latin_array_count(2, 2, 2) == 2);
    CHECK(latin_array_count(2, 2, 3) == 18);
    for (int n = 1; n <= 5; ++n) {
        for (int q = 1; q <= 6; ++q) {
            BigInt ff = 1;
            for (int i = 0; i < n; ++i) {
                ff *= std::max(0, q - i);
            }
            CHECK(latin_array_count(n, 1, q) == ff);
        }
    }
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 3; ++k) {
            for (int q = k; q <= 4; ++q) {
                CHECK(latin_array_count(n, k, q) == oracle::count_latin_arrays(n, k, q));
            }
        }
    }
    CHECK_THROWS_AS((void)latin_array_count(2, 3, 2), InvalidArgument);
}

TEST_CASE("is_proper_packing")
{
    Graph k2 = families::complete(2);
    ListAssignment overlap({{0, 1}, {1, 2}});
    CHECK(is_proper_packing(k2, overlap, Packing{{{0, 1}, {1, 2}}}));
    CHECK_FALSE(is_proper_packing(k2, overlap, Packing{{{0, 1}, {1, 1}}}));  // f2 not proper
    CHECK_FALSE(is_proper_packing(k2, overlap, Packing{{{0, 1}, {0, 2}}}));  // both use 0 at x
    CHECK_FALSE(is_proper_packing(k2, overlap, Packing{{{0, 5}}}));          // 5 not in L(y)
}

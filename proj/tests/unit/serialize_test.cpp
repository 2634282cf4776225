#include "listpack/errors.hpp"
#include "listpack/serialize.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace listpack;

TEST_CASE("counts and polynomials")
{
    Count big = factorial(30);
    CHECK(io::count_to_json(big) == "265252859812191058636308480000000");
    CHECK(io::count_from_json(io::count_to_json(big)) == big);
    CHECK(io::count_from_json(io::Json(12)) == 12);
    CHECK_THROWS_AS((void)io::count_from_json(io::Json(1.5)), InvalidArgument);

    Polynomial p = Polynomial::falling_factorial(4);
    CHECK(io::polynomial_to_json(p).dump() == R"(["0","-6","11","-6","1"])");
    CHECK(io::polynomial_from_json(io::polynomial_to_json(p)) == p);
}

TEST_CASE("assignment JSON")
{
    auto lists = io::assignment_from_json(io::Json::parse(R"({"1": [2, 1], "0": [0, 1]})"));
    CHECK(lists == ListAssignment({{0, 1}, {1, 2}}));
    CHECK(io::assignment_to_json(lists).dump() == R"({"0":[0,1],"1":[1,2]})");
    CHECK_THROWS_AS((void)io::assignment_from_json(io::Json::parse(R"({"0": [0], "2": [1]})")), InvalidArgument);
    CHECK_THROWS_AS((void)io::assignment_from_json(io::Json::parse(R"({"0": [0], "1": [1, 2]})")), InvalidArgument);
    CHECK_THROWS_AS((void)io::assignment_from_json(io::Json::parse(R"({"x": [0]})")), InvalidArgument);
    CHECK_THROWS_AS((void)io::assignment_from_json(io::Json::parse(R"({"0": ["a"]})")), InvalidArgument);
    CHECK_THROWS_AS((void)io::assignment_from_json(io::Json::parse("[]")), InvalidArgument);

    auto path = std::filesystem::temp_directory_path() / "listpack_assignment_test.json";
    {
        std::ofstream out(path);
        out << R"({"0": [0, 1], "1": [1, 2]})";
    }
    CHECK(io::load_assignment(path) == lists);
    {
        std::ofstream out(path);
        out << "{not json";
    }
    CHECK_THROWS_AS((void)io::load_assignment(path), InvalidArgument);
    std::filesystem::remove(path);
    CHECK_THROWS_AS((void)io::load_assignment(path), InvalidArgument);
}

TEST_CASE("pattern JSON")
{
    PatternAssignment p(2, 3, {{0b11, 1}, {0b01, 2}, {0b10, 2}});
    io::Json j = io::pattern_to_json(p);
    CHECK(j.dump() ==
          R"({"n":2,"q":3,"multiplicities":[{"subset":[0],"m":2},{"subset":[1],"m":2},{"subset":[0,1],"m":1}]})");
    CHECK(io::pattern_from_json(j) == p);
    CHECK_THROWS_AS((void)io::pattern_from_json(io::Json::parse(R"({"n":2})")), InvalidArgument);
}

TEST_CASE("bound report JSON")
{
    BoundReport r = check_bound_against_count(packing_lower_bound(8, 8, 3, 2), 41);
    io::Json j = io::bound_report_to_json(r);
    CHECK(j.dump() ==
          R"({"applicable":true,"base":"3","exponent_num":"4","exponent_den":"1","divisor":"2","ceiling":"41","passed":true})");
    CHECK(io::bound_report_from_json(j) == r);
    BoundReport off = packing_lower_bound(4, 12, 3, 2);
    CHECK_FALSE(io::bound_report_to_json(off).contains("passed"));
    CHECK(io::bound_report_from_json(io::bound_report_to_json(off)) == off);
}

TEST_CASE("minimisation and probe JSON")
{
    auto r = list_packing_function_exact(families::complete(2), 3, 2);
    io::Json j = io::minimization_to_json(r);
    CHECK(j["value"] == "9");
    CHECK(j["exhaustive"] == true);
    CHECK(j["patterns_evaluated"] == 4);

    auto probe = equality_probe(families::complete(2), 2, 3);
    io::Json pj = io::probe_to_json(probe);
    CHECK(pj["least_equal_q"] == 2);
    CHECK(pj["rows"].size() == 2);
    CHECK(pj["rows"][1]["classical_count"] == "9");
}

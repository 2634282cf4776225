#include "listpack/serialize.hpp"

#include "listpack/errors.hpp"

#include <fstream>
#include <set>

namespace listpack::io {

Json count_to_json(const Count& value)
{
    return to_decimal(value);
}

Count count_from_json(const Json& j)
{
    if (j.is_string()) {
        return from_decimal(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Count(j.get<long long>());
    }
    throw InvalidArgument("count must be a decimal string");
}

Json polynomial_to_json(const Polynomial& p)
{
    Json out = Json::array();
    for (const auto& c : p.coefficients()) {
        out.push_back(to_decimal(c));
    }
    return out;
}

Polynomial polynomial_from_json(const Json& j)
{
    if (!j.is_array()) {
        throw InvalidArgument("polynomial must be a JSON array");
    }
    std::vector<BigInt> coefficients;
    for (const auto& c : j) {
        coefficients.push_back(count_from_json(c));
    }
    return Polynomial(std::move(coefficients));
}

ListAssignment assignment_from_json(const Json& j)
{
    if (!j.is_object() || j.empty()) {
        throw InvalidArgument("assignment must be a nonempty JSON object");
    }
    const std::size_t n = j.size();
    std::vector<std::vector<Color>> lists(n);
    std::vector<char> seen(n, 0);
    for (const auto& [key, value] : j.items()) {
        std::size_t used = 0;
        long long v = -1;
        try {
            v = std::stoll(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size() || v < 0 || static_cast<std::size_t>(v) >= n) {
            throw InvalidArgument("assignment key \"" + key + "\" is not a vertex id in 0.." + std::to_string(n - 1));
        }
        if (seen[v]) {
            throw InvalidArgument("vertex " + key + " listed twice");
        }
        seen[v] = 1;
        if (!value.is_array()) {
            throw InvalidArgument("list of vertex " + key + " must be an array");
        }
        for (const auto& c : value) {
            if (!c.is_number_integer()) {
                throw InvalidArgument("colors must be integers (vertex " + key + ")");
            }
            lists[v].push_back(c.get<Color>());
        }
    }
    return ListAssignment(std::move(lists));
}

Json assignment_to_json(const ListAssignment& lists)
{
    Json out = Json::object();
    for (Vertex v = 0; v < lists.vertex_count(); ++v) {
        auto list = lists.list(v);
        out[std::to_string(v)] = std::vector<Color>(list.begin(), list.end());
    }
    return out;
}

ListAssignment load_assignment(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot open assignment file: " + path.string());
    }
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InvalidArgument("assignment file is not valid JSON: " + std::string(e.what()));
    }
    return assignment_from_json(j);
}

Json pattern_to_json(const PatternAssignment& pattern)
{
    Json entries = Json::array();
    for (const auto& e : pattern.entries()) {
        std::vector<Vertex> members;
        for (Vertex v = 0; v < pattern.vertex_count(); ++v) {
            if ((e.subset >> v) & 1U) {
                members.push_back(v);
            }
        }
        entries.push_back({{"subset", members}, {"m", e.multiplicity}});
    }
    return {{"n", pattern.vertex_count()}, {"q", pattern.list_size()}, {"multiplicities", entries}};
}

PatternAssignment pattern_from_json(const Json& j)
{
    try {
        std::vector<PatternAssignment::Entry> entries;
        for (const auto& e : j.at("multiplicities")) {
            VertexMask subset = 0;
            for (const auto& v : e.at("subset")) {
                int id = v.get<int>();
                if (id < 0 || id >= BitGraph::max_order) {
                    throw InvalidArgument("pattern subset vertex out of range");
                }
                subset |= bit(id);
            }
            entries.push_back({subset, e.at("m").get<int>()});
        }
        return PatternAssignment(j.at("n").get<int>(), j.at("q").get<int>(), std::move(entries));
    } catch (const Json::exception& e) {
        throw InvalidArgument("malformed pattern JSON: " + std::string(e.what()));
    }
}

Json bound_report_to_json(const BoundReport& report)
{
    Json out = {
        {"applicable", report.applicable},
        {"base", to_decimal(report.base)},
        {"exponent_num", to_decimal(report.exponent_num)},
        {"exponent_den", to_decimal(report.exponent_den)},
        {"divisor", to_decimal(report.divisor)},
        {"ceiling", to_decimal(report.ceiling)},
    };
    if (report.passed) {
        out["passed"] = *report.passed;
    }
    return out;
}

BoundReport bound_report_from_json(const Json& j)
{
    try {
        BoundReport r;
        r.applicable = j.at("applicable").get<bool>();
        r.base = count_from_json(j.at("base"));
        r.exponent_num = count_from_json(j.at("exponent_num"));
        r.exponent_den = count_from_json(j.at("exponent_den"));
        r.divisor = count_from_json(j.at("divisor"));
        r.ceiling = count_from_json(j.at("ceiling"));
        if (j.contains("passed")) {
            r.passed = j.at("passed").get<bool>();
        }
        return r;
    } catch (const Json::exception& e) {
        throw InvalidArgument("malformed bound report JSON: " + std::string(e.what()));
    }
}

Json minimization_to_json(const MinimizationResult& result)
{
    return {
        {"value", count_to_json(result.value)},
        {"witness", pattern_to_json(result.witness)},
        {"exhaustive", result.exhaustive},
        {"patterns_evaluated", result.patterns_evaluated},
    };
}

Json probe_to_json(const EqualityProbeResult& probe)
{
    Json rows = Json::array();
    for (const auto& row : probe.rows) {
        Json r = {{"q", row.q}, {"classical_count", count_to_json(row.classical)}};
        r["min_count"] = row.minimum ? count_to_json(*row.minimum) : Json(nullptr);
        r["gap"] = row.minimum ? count_to_json(*row.gap()) : Json(nullptr);
        r["exhaustive"] = row.exhaustive;
        rows.push_back(std::move(r));
    }
    Json out = {
        {"k", probe.k},
        {"q_max", probe.q_max},
        {"least_equal_q", probe.least_equal_q ? Json(*probe.least_equal_q) : Json(nullptr)},
        {"truncated", probe.truncated},
        {"threshold", probe.threshold},
        {"threshold_consistent", probe.threshold_consistent ? Json(*probe.threshold_consistent) : Json(nullptr)},
        {"rows", rows},
    };
    return out;
}

}  // namespace listpack::io

#pragma once

#include "listpack/bigint.hpp"
#include "listpack/graph.hpp"
#include "listpack/graph_io.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace listpack::cli {

enum class Command { Count, Minimize, PackingNumber, Probe, Bounds, Scan };

enum class Emit { Json, Csv };

struct FileSource {
    std::string path;
    io::GraphFormat format = io::GraphFormat::EdgeList;
};

struct FamilySource {
    std::string name;
    FamilyParams params;
};

struct RunConfig {
    Command command = Command::Count;
    std::optional<FileSource> file;
    std::optional<FamilySource> family;
    std::optional<int> q;
    std::optional<int> k;
    std::optional<std::string> assignment;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> budget;
    std::optional<int> qmax;
    int workers = 1;
    std::optional<std::string> out;
    Emit emit = Emit::Json;
    bool timings = false;
    // bounds without a graph source
    std::optional<int> n;
    std::optional<int> m;
    std::optional<std::string> measured;
    bool assume_planar = false;
    // scan
    std::optional<int> nmin;
    std::optional<int> nmax;
};

enum class ConfigErrorKind { Help, Usage, UnknownFlag, MissingFlag, InvalidValue, KExceedsQ, UnreadableFile, ConflictingSource };

[[nodiscard]] const char* config_error_name(ConfigErrorKind kind) noexcept;

class ConfigError : public std::runtime_error {
public:
    ConfigError(ConfigErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    [[nodiscard]] ConfigErrorKind kind() const noexcept { return kind_; }
    /// 0 for --help, 2 otherwise.
    [[nodiscard]] int exit_code() const noexcept { return kind_ == ConfigErrorKind::Help ? 0 : 2; }

private:
    ConfigErrorKind kind_;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 2;
inline constexpr int budget = 3;
inline constexpr int invariant = 4;
}  // namespace exit_code

/// Parses argv (argv[0] is the program name). Throws ConfigError.
[[nodiscard]] RunConfig parse_config(int argc, const char* const* argv);
[[nodiscard]] RunConfig parse_config(const std::vector<std::string>& args);

struct RunResult {
    int exit_code = exit_code::ok;
    std::string document;
    std::string diagnostics;
};

/// Runs a validated config. Never throws for library errors; they map to exit codes.
[[nodiscard]] RunResult execute(const RunConfig& config);

/// Entry point used by the executable: parse, execute, write output.
int run(int argc, const char* const* argv);

}  // namespace listpack::cli

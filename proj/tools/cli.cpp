#include "cli.hpp"

#include "listpack/bounds.hpp"
#include "listpack/chromatic.hpp"
#include "listpack/counting.hpp"
#include "listpack/errors.hpp"
#include "listpack/extremal.hpp"
#include "listpack/serialize.hpp"
#include "listpack/version.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace listpack::cli {

namespace {

using io::Json;

// Direct-search cross-checks are skipped above this many ordered packings.
constexpr unsigned long long cross_check_limit = 1'000'000;

const char* command_name(Command c)
{
    switch (c) {
    case Command::Count: return "count";
    case Command::Minimize: return "minimize";
    case Command::PackingNumber: return "packing-number";
    case Command::Probe: return "probe";
    case Command::Bounds: return "bounds";
    case Command::Scan: return "scan";
    }
    return "?";
}

const char* format_name(io::GraphFormat f)
{
    return f == io::GraphFormat::Graph6 ? "graph6" : "edges";
}

bool is_readable(const std::string& path)
{
    std::ifstream in(path);
    return static_cast<bool>(in);
}

// Raw flag values shared by all subcommands; each subcommand registers only the
// flags it accepts.
struct Raw {
    std::string graph;
    std::string format = "edges";
    std::string family;
    int n = 0;
    int a = 0;
    int b = 0;
    double p = 0.5;
    int q = 0;
    int k = 0;
    int m = 0;
    std::string assignment;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    int qmax = 0;
    int workers = 1;
    std::string out;
    std::string emit = "json";
    bool timings = false;
    std::string measured;
    bool assume_planar = false;
    int nmin = 0;
    int nmax = 0;
};

struct Flags {
    CLI::App* app = nullptr;
    std::map<std::string, CLI::Option*> opts;

    [[nodiscard]] bool given(const std::string& name) const
    {
        auto it = opts.find(name);
        return it != opts.end() && it->second->count() > 0;
    }
};

void add_common(Flags& f, Raw& raw)
{
    f.opts["workers"] = f.app->add_option("--workers", raw.workers, "Worker threads")->check(CLI::PositiveNumber);
    f.opts["out"] = f.app->add_option("--out", raw.out, "Write the report to FILE instead of stdout");
    f.opts["emit"] = f.app->add_option("--emit", raw.emit, "Output format")->check(CLI::IsMember({"json", "csv"}));
    f.opts["timings"] = f.app->add_flag("--timings", raw.timings, "Record wall-clock timings in the report");
}

void add_graph_source(Flags& f, Raw& raw)
{
    auto* graph = f.app->add_option("--graph", raw.graph, "Graph file");
    auto* family = f.app->add_option("--family", raw.family,
                                     "Named family: path, cycle, complete, complete_bipartite, star, "
                                     "random_tree, random_graph");
    graph->excludes(family);
    f.opts["graph"] = graph;
    f.opts["family"] = family;
    f.opts["format"] = f.app->add_option("--format", raw.format, "Graph file format")
                           ->check(CLI::IsMember({"edges", "graph6"}));
    f.opts["n"] = f.app->add_option("--n", raw.n, "Family size")->check(CLI::PositiveNumber);
    f.opts["a"] = f.app->add_option("--a", raw.a, "First part of complete_bipartite")->check(CLI::PositiveNumber);
    f.opts["b"] = f.app->add_option("--b", raw.b, "Second part of complete_bipartite")->check(CLI::PositiveNumber);
    f.opts["p"] = f.app->add_option("--p", raw.p, "Edge probability of random_graph")->check(CLI::Range(0.0, 1.0));
    f.opts["seed"] = f.app->add_option("--seed", raw.seed, "Seed for random families and sampling");
}

Flags& subcommand(CLI::App& app, std::vector<Flags>& all, const char* name, const char* help)
{
    all.push_back({app.add_subcommand(name, help), {}});
    return all.back();
}

void fill_graph_source(RunConfig& config, const Flags& f, const Raw& raw, bool required)
{
    if (f.given("graph")) {
        if (!is_readable(raw.graph)) {
            throw ConfigError(ConfigErrorKind::UnreadableFile, "--graph: cannot read " + raw.graph);
        }
        config.file = FileSource{raw.graph, io::parse_graph_format(raw.format)};
        for (const char* name : {"n", "a", "b", "p"}) {
            if (f.given(name)) {
                throw ConfigError(ConfigErrorKind::ConflictingSource,
                                  std::string("--") + name + " only applies with --family");
            }
        }
        return;
    }
    if (f.given("family")) {
        FamilySource source;
        source.name = raw.family;
        source.params.n = raw.n;
        source.params.a = raw.a;
        source.params.b = raw.b;
        source.params.p = raw.p;
        if (f.given("seed")) {
            source.params.seed = raw.seed;
        }
        if (raw.family == "complete_bipartite") {
            if (!f.given("a") || !f.given("b")) {
                throw ConfigError(ConfigErrorKind::MissingFlag, "--a and --b are required for complete_bipartite");
            }
        } else if (!f.given("n") && config.command != Command::Scan) {
            throw ConfigError(ConfigErrorKind::MissingFlag, "--n is required for --family " + raw.family);
        }
        if ((raw.family == "random_tree" || raw.family == "random_graph") && !f.given("seed")) {
            throw ConfigError(ConfigErrorKind::MissingFlag, "--seed is required for --family " + raw.family);
        }
        config.family = std::move(source);
        return;
    }
    if (required) {
        throw ConfigError(ConfigErrorKind::MissingFlag, "a graph source is required: --graph FILE or --family NAME");
    }
}

void require_k_le_q(int k, int q)
{
    if (k > q) {
        throw ConfigError(ConfigErrorKind::KExceedsQ,
                          "--k " + std::to_string(k) + " exceeds --q " + std::to_string(q));
    }
}

ConfigErrorKind kind_of(const CLI::Error& e)
{
    if (dynamic_cast<const CLI::CallForHelp*>(&e) || dynamic_cast<const CLI::CallForAllHelp*>(&e)) {
        return ConfigErrorKind::Help;
    }
    if (dynamic_cast<const CLI::ExtrasError*>(&e)) {
        return ConfigErrorKind::UnknownFlag;
    }
    if (dynamic_cast<const CLI::RequiredError*>(&e)) {
        return ConfigErrorKind::MissingFlag;
    }
    if (dynamic_cast<const CLI::ExcludesError*>(&e)) {
        return ConfigErrorKind::ConflictingSource;
    }
    if (dynamic_cast<const CLI::ValidationError*>(&e) || dynamic_cast<const CLI::ConversionError*>(&e)) {
        return ConfigErrorKind::InvalidValue;
    }
    return ConfigErrorKind::Usage;
}

// ---------------------------------------------------------------------------
// Reports

Json config_to_json(const RunConfig& c)
{
    Json j;
    j["version"] = version;
    j["command"] = command_name(c.command);
    if (c.file) {
        j["graph"] = {{"source", "file"}, {"path", c.file->path}, {"format", format_name(c.file->format)}};
    } else if (c.family) {
        Json g = {{"source", "family"}, {"family", c.family->name}};
        if (c.family->name == "complete_bipartite") {
            g["a"] = c.family->params.a;
            g["b"] = c.family->params.b;
        } else if (c.command != Command::Scan) {
            g["n"] = c.family->params.n;
        }
        if (c.family->name == "random_graph") {
            g["p"] = c.family->params.p;
        }
        if (c.family->params.seed) {
            g["seed"] = *c.family->params.seed;
        }
        j["graph"] = std::move(g);
    } else {
        j["graph"] = nullptr;
    }
    auto put = [&](const char* key, const auto& value) {
        if (value) {
            j[key] = *value;
        }
    };
    put("n", c.n);
    put("m", c.m);
    put("q", c.q);
    put("k", c.k);
    put("assignment", c.assignment);
    put("budget", c.budget);
    put("qmax", c.qmax);
    put("measured", c.measured);
    put("nmin", c.nmin);
    put("nmax", c.nmax);
    j["seed"] = c.seed;
    j["workers"] = c.workers;
    j["emit"] = c.emit == Emit::Csv ? "csv" : "json";
    if (c.assume_planar) {
        j["assume_planar"] = true;
    }
    return j;
}

struct Context {
    explicit Context(const RunConfig& c) : config(c) {}

    const RunConfig& config;
    Json result = Json::object();
    Json checks = Json::array();
    Json timings = Json::object();
    int exit = exit_code::ok;
    std::string csv;
    std::string diagnostics;
    std::chrono::steady_clock::time_point mark = std::chrono::steady_clock::now();

    void check(const std::string& name, bool passed, const std::string& detail)
    {
        checks.push_back({{"name", name}, {"passed", passed}, {"detail", detail}});
        if (!passed) {
            exit = exit_code::invariant;
            diagnostics += "invariant check failed: " + name + ": " + detail + "\n";
        }
    }

    void skip(const std::string& name, const std::string& reason)
    {
        checks.push_back({{"name", name}, {"passed", nullptr}, {"detail", "skipped: " + reason}});
    }

    void lap(const char* phase)
    {
        auto now = std::chrono::steady_clock::now();
        if (config.timings) {
            timings[phase] = std::chrono::duration<double, std::milli>(now - mark).count();
        }
        mark = now;
    }

    void truncated(const std::string& message)
    {
        result["truncated"] = true;
        diagnostics += message + "\n";
        if (exit == exit_code::ok) {
            exit = exit_code::budget;
        }
    }
};

Graph resolve_graph(const RunConfig& c)
{
    if (c.file) {
        return io::load_graph(c.file->path, c.file->format);
    }
    return generate_named(c.family->name, c.family->params);
}

Json graph_summary(const Graph& g)
{
    return {{"n", g.order()}, {"m", g.size()}};
}

void bound_check(Context& ctx, const Graph& g, int q, int k, const Count& value, const std::string& what)
{
    BoundReport r = packing_lower_bound(g.order(), g.size(), q, k);
    if (!r.applicable) {
        ctx.skip("packing_lower_bound", "edge condition fails");
        return;
    }
    if (value <= 0) {
        ctx.skip("packing_lower_bound", what + " is zero");
        return;
    }
    BoundReport checked = check_bound_against_count(r, value);
    ctx.check("packing_lower_bound", checked.passed.value_or(false),
              what + " " + to_decimal(value) + " >= ceiling " + to_decimal(checked.ceiling));
}

SweepOptions sweep_options(const RunConfig& c)
{
    SweepOptions opts;
    opts.workers = c.workers;
    if (c.budget) {
        opts.pattern_budget = *c.budget;
    }
    return opts;
}

void run_count(Context& ctx, const Graph& g)
{
    const RunConfig& c = ctx.config;
    ctx.result["graph"] = graph_summary(g);
    const int k = c.k.value_or(1);
    if (c.assignment) {
        ListAssignment lists = io::load_assignment(*c.assignment);
        require_covers(g, lists);
        const int q = lists.list_size();
        if (c.q && *c.q != q) {
            throw InvalidArgument("--q " + std::to_string(*c.q) + " does not match the assignment's list size " +
                                  std::to_string(q));
        }
        if (k > q) {
            throw InvalidArgument("--k exceeds the assignment's list size " + std::to_string(q));
        }
        ctx.lap("load");
        Count value = count_packings_direct(g, lists, k);
        ctx.lap("count");
        ctx.result["mode"] = "list";
        ctx.result["q"] = q;
        ctx.result["k"] = k;
        ctx.result["value"] = io::count_to_json(value);
        ctx.result["pattern"] = io::pattern_to_json(canonical_pattern(lists));
        Count product = count_packings_via_product(g, lists, k);
        ctx.check("product_route", product == value, "P(G x K_k, L^(k)) / k! = " + to_decimal(product));
        bound_check(ctx, g, q, k, value, "count");
        ctx.lap("checks");
        return;
    }
    const int q = *c.q;
    ctx.lap("load");
    Graph product = cartesian_with_complete(g, k);
    Polynomial p = chromatic_polynomial(product);
    Count value = classical_packing_count(g, q, k);
    ctx.lap("count");
    ctx.result["mode"] = "classical";
    ctx.result["q"] = q;
    ctx.result["k"] = k;
    ctx.result["value"] = io::count_to_json(value);
    ctx.result["product_chromatic_polynomial"] = io::polynomial_to_json(p);
    if (value * factorial(static_cast<unsigned>(k)) <= cross_check_limit) {
        Count direct = count_packings_direct(g, constant_assignment(g, q), k);
        ctx.check("direct_search", direct == value, "direct search = " + to_decimal(direct));
    } else {
        ctx.skip("direct_search", "count too large for direct search");
    }
    if (g.is_tree() && k == q) {
        Count tree = tree_packing_value(g.order(), q);
        ctx.check("tree_formula", tree == value, "(!q)^(n-1) = " + to_decimal(tree));
    }
    bound_check(ctx, g, q, k, value, "count");
    ctx.lap("checks");
}

void run_minimize(Context& ctx, const Graph& g)
{
    const RunConfig& c = ctx.config;
    const int q = *c.q;
    const int k = c.k.value_or(1);
    ctx.result["graph"] = graph_summary(g);
    ctx.result["q"] = q;
    ctx.result["k"] = k;
    ctx.lap("load");
    std::optional<MinimizationResult> r;
    if (c.budget) {
        ctx.result["mode"] = "sampled";
        r = list_packing_function_sampled(g, q, k, *c.budget, c.seed, c.workers);
    } else {
        ctx.result["mode"] = "exact";
        try {
            r = list_packing_function_exact(g, q, k, sweep_options(c));
        } catch (const BudgetExceeded& e) {
            ctx.result["patterns_evaluated"] = e.processed();
            ctx.truncated(e.what());
            return;
        }
    }
    ctx.lap("minimize");
    Json m = io::minimization_to_json(*r);
    for (auto& [key, value] : m.items()) {
        ctx.result[key] = value;
    }
    ctx.result["witness_assignment"] = io::assignment_to_json(realize_pattern(r->witness, g));
    Count classical = classical_packing_count(g, q, k);
    ctx.result["classical_count"] = io::count_to_json(classical);
    ctx.check("dominance", r->value <= classical, "minimum <= classical " + to_decimal(classical));
    Count witness = count_packings_direct(g, realize_pattern(r->witness, g), k);
    ctx.check("witness", witness == r->value, "witness count = " + to_decimal(witness));
    if (r->exhaustive && g.is_tree() && k == q) {
        Count tree = tree_packing_value(g.order(), q);
        ctx.check("tree_formula", tree == r->value, "(!q)^(n-1) = " + to_decimal(tree));
    }
    bound_check(ctx, g, q, k, r->value, "minimum");
    ctx.lap("checks");
}

void run_packing_number(Context& ctx, const Graph& g)
{
    const RunConfig& c = ctx.config;
    ctx.result["graph"] = graph_summary(g);
    ctx.result["qmax"] = *c.qmax;
    ctx.lap("load");
    try {
        PackingNumberResult r = list_packing_number(g, *c.qmax, sweep_options(c));
        ctx.lap("sweep");
        ctx.result["value"] = r.value ? Json(*r.value) : Json(nullptr);
        Json minima = Json::array();
        for (const auto& v : r.minima) {
            minima.push_back(io::count_to_json(v));
        }
        ctx.result["minima"] = minima;
        ctx.result["truncated"] = false;
        bool zeros_first = true;
        for (std::size_t i = 0; i + 1 < r.minima.size(); ++i) {
            zeros_first = zeros_first && r.minima[i] == 0;
        }
        ctx.check("minima_below_value_are_zero", zeros_first, "every q below the value has minimum 0");
    } catch (const BudgetExceeded& e) {
        ctx.result["value"] = nullptr;
        ctx.result["checked_through_q"] = e.processed();
        ctx.truncated(e.what());
    }
}

void run_probe(Context& ctx, const Graph& g)
{
    const RunConfig& c = ctx.config;
    ctx.lap("load");
    EqualityProbeResult probe = equality_probe(g, *c.k, *c.qmax, sweep_options(c));
    ctx.lap("probe");
    ctx.result["graph"] = graph_summary(g);
    Json table = io::probe_to_json(probe);
    for (auto& [key, value] : table.items()) {
        ctx.result[key] = value;
    }
    if (probe.threshold_consistent) {
        ctx.check("threshold_consistent", *probe.threshold_consistent,
                  "least equal q <= " + std::to_string(probe.threshold));
    }
    for (const auto& row : probe.rows) {
        if (row.minimum && *row.gap() < 0) {
            ctx.check("dominance", false, "negative gap at q = " + std::to_string(row.q));
        }
    }
    ctx.csv = gap_table_csv(probe);
    if (probe.truncated) {
        ctx.truncated("pattern budget exhausted; the gap table is partial");
    }
}

void run_bounds(Context& ctx, const std::optional<Graph>& g)
{
    const RunConfig& c = ctx.config;
    const int n = g ? g->order() : *c.n;
    const int m = g ? g->size() : *c.m;
    const int q = *c.q;
    const int k = c.k.value_or(1);
    ctx.result["n"] = n;
    ctx.result["m"] = m;
    ctx.result["q"] = q;
    ctx.result["k"] = k;
    ctx.result["dz_threshold"] = dz_threshold(n, m, k);
    BoundReport lower = packing_lower_bound(n, m, q, k);
    if (c.measured) {
        Count measured = from_decimal(*c.measured);
        if (lower.applicable && measured > 0) {
            lower = check_bound_against_count(lower, measured);
        } else {
            ctx.skip("measured", lower.applicable ? "measured count is zero" : "edge condition fails");
        }
    }
    ctx.result["packing_lower_bound"] = io::bound_report_to_json(lower);
    const long long S = 1LL * k * n * q;
    const long long vars = 1LL * k * n;
    const long long d = 1LL * n * k * (k - 1) / 2 + 1LL * k * m;
    BoundReport af = alon_furedi_nonzero_bound(S, vars, d, q);
    ctx.result["alon_furedi"] = {{"S", S}, {"n_vars", vars}, {"d", d}, {"t", q}, {"report", io::bound_report_to_json(af)}};
    if (af.applicable && lower.applicable) {
        ctx.check("exponents_agree", af.exponent_num == lower.exponent_num && af.exponent_den == lower.exponent_den,
                  "substituted exponent matches the packing exponent");
    }
    if (lower.passed) {
        ctx.check("measured_meets_bound", *lower.passed, "measured " + *c.measured + " vs ceiling " + to_decimal(lower.ceiling));
    }
    if (g && g->is_tree() && k == q) {
        ctx.result["tree_packing_value"] = io::count_to_json(tree_packing_value(n, q));
    }
    if (c.assume_planar) {
        BoundReport cor = girth8_bound(n);
        if (c.measured && from_decimal(*c.measured) > 0) {
            cor = check_bound_against_count(cor, from_decimal(*c.measured));
            ctx.check("measured_meets_girth8_bound", *cor.passed,
                      "measured " + *c.measured + " vs ceiling " + to_decimal(cor.ceiling));
        }
        ctx.result["girth8_bound"] = io::bound_report_to_json(cor);
        if (g) {
            auto gi = girth(*g);
            ctx.check("girth_at_least_8", !gi || *gi >= 8, gi ? "girth " + std::to_string(*gi) : "acyclic");
        }
        ctx.check("edge_count_at_most_4n_over_3", 3LL * m <= 4LL * n, "m = " + std::to_string(m));
        if (q != 3 || k != 2) {
            ctx.diagnostics += "note: the girth-8 bound concerns q = 3, k = 2\n";
        }
    }
    ctx.lap("bounds");
}

void run_scan(Context& ctx)
{
    const RunConfig& c = ctx.config;
    const int q = *c.q;
    const int k = c.k.value_or(1);
    std::ostringstream csv;
    csv << "family,n,m,q,k,classical_count,bound_applicable,bound_ceiling,dz_threshold\n";
    Json rows = Json::array();
    for (int n = *c.nmin; n <= *c.nmax; ++n) {
        FamilyParams params = c.family->params;
        params.n = n;
        Graph g = generate_named(c.family->name, params);
        Count value = classical_packing_count(g, q, k);
        BoundReport r = packing_lower_bound(g.order(), g.size(), q, k);
        const long long dz = dz_threshold(g.order(), g.size(), k);
        csv << c.family->name << ',' << g.order() << ',' << g.size() << ',' << q << ',' << k << ',' << value << ','
            << (r.applicable ? "true" : "false") << ',' << r.ceiling << ',' << dz << '\n';
        rows.push_back({{"n", g.order()},
                        {"m", g.size()},
                        {"classical_count", io::count_to_json(value)},
                        {"bound", io::bound_report_to_json(r)},
                        {"dz_threshold", dz}});
        if (r.applicable && value > 0) {
            BoundReport checked = check_bound_against_count(r, value);
            if (!*checked.passed) {
                ctx.check("packing_lower_bound", false, "n = " + std::to_string(n));
            }
        }
    }
    ctx.lap("scan");
    ctx.result["rows"] = rows;
    ctx.csv = csv.str();
}

}  // namespace

const char* config_error_name(ConfigErrorKind kind) noexcept
{
    switch (kind) {
    case ConfigErrorKind::Help: return "help";
    case ConfigErrorKind::Usage: return "usage";
    case ConfigErrorKind::UnknownFlag: return "unknown-flag";
    case ConfigErrorKind::MissingFlag: return "missing-flag";
    case ConfigErrorKind::InvalidValue: return "invalid-value";
    case ConfigErrorKind::KExceedsQ: return "k-exceeds-q";
    case ConfigErrorKind::UnreadableFile: return "unreadable-file";
    case ConfigErrorKind::ConflictingSource: return "conflicting-source";
    }
    return "?";
}

RunConfig parse_config(const std::vector<std::string>& args)
{
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    return parse_config(static_cast<int>(argv.size()), argv.data());
}

RunConfig parse_config(int argc, const char* const* argv)
{
    CLI::App app("Packing counts of list colorings", "listpack");
    app.require_subcommand(1);
    app.set_version_flag("--version", version);
    Raw raw;
    std::vector<Flags> subs;
    subs.reserve(6);

    auto& count = subcommand(app, subs, "count", "Classical or list packing count");
    add_graph_source(count, raw);
    count.opts["q"] = count.app->add_option("--q", raw.q, "List size")->check(CLI::PositiveNumber);
    count.opts["k"] = count.app->add_option("--k", raw.k, "Packing size (default 1)")->check(CLI::PositiveNumber);
    count.opts["assignment"] = count.app->add_option("--assignment", raw.assignment, "List assignment JSON file");

    auto& minimize = subcommand(app, subs, "minimize", "Minimum packing count over q-assignments");
    add_graph_source(minimize, raw);
    minimize.opts["q"] = minimize.app->add_option("--q", raw.q, "List size")->required()->check(CLI::PositiveNumber);
    minimize.opts["k"] = minimize.app->add_option("--k", raw.k, "Packing size (default 1)")->check(CLI::PositiveNumber);
    minimize.opts["budget"] = minimize.app->add_option("--budget", raw.budget, "Sample this many random patterns");

    auto& packing = subcommand(app, subs, "packing-number", "Least q with a positive list packing minimum");
    add_graph_source(packing, raw);
    packing.opts["qmax"] = packing.app->add_option("--qmax", raw.qmax, "Largest q to try")->required()->check(CLI::PositiveNumber);
    packing.opts["budget"] = packing.app->add_option("--budget", raw.budget, "Pattern cap per q");

    auto& probe = subcommand(app, subs, "probe", "Gap between classical and list minimum for q = k..qmax");
    add_graph_source(probe, raw);
    probe.opts["k"] = probe.app->add_option("--k", raw.k, "Packing size")->required()->check(CLI::PositiveNumber);
    probe.opts["qmax"] = probe.app->add_option("--qmax", raw.qmax, "Largest q")->required()->check(CLI::PositiveNumber);
    probe.opts["budget"] = probe.app->add_option("--budget", raw.budget, "Pattern cap per q");

    auto& bounds = subcommand(app, subs, "bounds", "Thresholds and lower bounds");
    add_graph_source(bounds, raw);
    bounds.opts["m"] = bounds.app->add_option("--m", raw.m, "Edge count when no graph is given")->check(CLI::NonNegativeNumber);
    bounds.opts["q"] = bounds.app->add_option("--q", raw.q, "List size")->required()->check(CLI::PositiveNumber);
    bounds.opts["k"] = bounds.app->add_option("--k", raw.k, "Packing size (default 1)")->check(CLI::PositiveNumber);
    bounds.opts["measured"] = bounds.app->add_option("--measured", raw.measured, "Check the bounds against this count");
    bounds.opts["assume_planar"] = bounds.app->add_flag("--assume-planar", raw.assume_planar,
                                                        "Report the planar girth-8 bound");

    auto& scan = subcommand(app, subs, "scan", "Classical counts and bounds over a family size range");
    add_graph_source(scan, raw);
    scan.opts["nmin"] = scan.app->add_option("--nmin", raw.nmin, "Smallest n")->required()->check(CLI::PositiveNumber);
    scan.opts["nmax"] = scan.app->add_option("--nmax", raw.nmax, "Largest n")->required()->check(CLI::PositiveNumber);
    scan.opts["q"] = scan.app->add_option("--q", raw.q, "List size")->required()->check(CLI::PositiveNumber);
    scan.opts["k"] = scan.app->add_option("--k", raw.k, "Packing size (default 1)")->check(CLI::PositiveNumber);

    for (auto& s : subs) {
        add_common(s, raw);
    }

    if (argc < 2) {
        throw ConfigError(ConfigErrorKind::Usage,
                          "a command is required: count, minimize, packing-number, probe, bounds, scan");
    }
    const std::string first = argv[1];
    if (!first.starts_with("-") && app.get_subcommand_no_throw(first) == nullptr) {
        throw ConfigError(ConfigErrorKind::UnknownFlag, "unknown command: " + first);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForVersion&) {
        throw ConfigError(ConfigErrorKind::Help, std::string(version) + "\n");
    } catch (const CLI::Error& e) {
        const ConfigErrorKind kind = kind_of(e);
        if (kind == ConfigErrorKind::Help) {
            std::ostringstream help;
            app.exit(e, help, help);
            throw ConfigError(kind, help.str());
        }
        throw ConfigError(kind, e.what());
    }

    const Command commands[] = {Command::Count, Command::Minimize, Command::PackingNumber,
                                Command::Probe, Command::Bounds,   Command::Scan};
    RunConfig config;
    const Flags* f = nullptr;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (subs[i].app->parsed()) {
            config.command = commands[i];
            f = &subs[i];
        }
    }

    config.workers = raw.workers;
    config.timings = raw.timings;
    config.emit = raw.emit == "csv" ? Emit::Csv : Emit::Json;
    config.seed = raw.seed;
    if (f->given("out")) {
        config.out = raw.out;
    }
    if (f->given("q")) {
        config.q = raw.q;
    }
    if (f->given("k")) {
        config.k = raw.k;
    }
    if (f->given("budget")) {
        config.budget = raw.budget;
    }
    if (f->given("qmax")) {
        config.qmax = raw.qmax;
    }
    if (config.emit == Emit::Csv && config.command != Command::Probe && config.command != Command::Scan) {
        throw ConfigError(ConfigErrorKind::InvalidValue, "--emit csv is only available for probe and scan");
    }
    if (config.budget && *config.budget == 0) {
        throw ConfigError(ConfigErrorKind::InvalidValue, "--budget must be positive");
    }

    switch (config.command) {
    case Command::Count:
        fill_graph_source(config, *f, raw, true);
        if (f->given("assignment")) {
            if (!is_readable(raw.assignment)) {
                throw ConfigError(ConfigErrorKind::UnreadableFile, "--assignment: cannot read " + raw.assignment);
            }
            config.assignment = raw.assignment;
            if (config.q && config.k) {
                require_k_le_q(*config.k, *config.q);
            }
        } else {
            if (!config.q) {
                throw ConfigError(ConfigErrorKind::MissingFlag, "--q is required without --assignment");
            }
            require_k_le_q(config.k.value_or(1), *config.q);
        }
        break;
    case Command::Minimize:
        fill_graph_source(config, *f, raw, true);
        require_k_le_q(config.k.value_or(1), *config.q);
        break;
    case Command::PackingNumber:
        fill_graph_source(config, *f, raw, true);
        break;
    case Command::Probe:
        fill_graph_source(config, *f, raw, true);
        if (*config.k > *config.qmax) {
            throw ConfigError(ConfigErrorKind::KExceedsQ, "--k exceeds --qmax");
        }
        break;
    case Command::Bounds:
        if (f->given("graph") || f->given("family")) {
            fill_graph_source(config, *f, raw, true);
            if (f->given("m")) {
                throw ConfigError(ConfigErrorKind::ConflictingSource, "--m only applies without a graph source");
            }
        } else {
            if (!f->given("n") || !f->given("m")) {
                throw ConfigError(ConfigErrorKind::MissingFlag, "bounds needs --graph, --family, or both --n and --m");
            }
            config.n = raw.n;
            config.m = raw.m;
        }
        require_k_le_q(config.k.value_or(1), *config.q);
        if (f->given("measured")) {
            try {
                if (from_decimal(raw.measured) < 0) {
                    throw InvalidArgument("negative");
                }
            } catch (const InvalidArgument&) {
                throw ConfigError(ConfigErrorKind::InvalidValue, "--measured must be a non-negative integer");
            }
            config.measured = raw.measured;
        }
        config.assume_planar = raw.assume_planar;
        break;
    case Command::Scan:
        if (!f->given("family")) {
            throw ConfigError(ConfigErrorKind::MissingFlag, "scan requires --family");
        }
        if (f->given("n")) {
            throw ConfigError(ConfigErrorKind::ConflictingSource, "scan takes --nmin/--nmax instead of --n");
        }
        fill_graph_source(config, *f, raw, true);
        if (raw.nmin > raw.nmax) {
            throw ConfigError(ConfigErrorKind::InvalidValue, "--nmin exceeds --nmax");
        }
        config.nmin = raw.nmin;
        config.nmax = raw.nmax;
        require_k_le_q(config.k.value_or(1), *config.q);
        break;
    }
    return config;
}

RunResult execute(const RunConfig& config)
{
    Context ctx(config);
    RunResult out;
    try {
        switch (config.command) {
        case Command::Count: run_count(ctx, resolve_graph(config)); break;
        case Command::Minimize: run_minimize(ctx, resolve_graph(config)); break;
        case Command::PackingNumber: run_packing_number(ctx, resolve_graph(config)); break;
        case Command::Probe: run_probe(ctx, resolve_graph(config)); break;
        case Command::Bounds:
            run_bounds(ctx, config.file || config.family ? std::optional<Graph>(resolve_graph(config)) : std::nullopt);
            break;
        case Command::Scan: run_scan(ctx); break;
        }
    } catch (const InvalidArgument& e) {
        out.exit_code = exit_code::usage;
        out.diagnostics = std::string("error[invalid-input]: ") + e.what() + "\n";
        return out;
    } catch (const InvariantFailure& e) {
        out.exit_code = exit_code::invariant;
        out.diagnostics = std::string("error[invariant]: ") + e.what() + "\n";
        return out;
    } catch (const BudgetExceeded& e) {
        out.exit_code = exit_code::budget;
        out.diagnostics = std::string("error[budget]: ") + e.what() + "\n";
        return out;
    }

    out.exit_code = ctx.exit;
    out.diagnostics = ctx.diagnostics;
    if (config.emit == Emit::Csv) {
        out.document = ctx.csv;
    } else {
        Json report;
        report["config"] = config_to_json(config);
        report["result"] = std::move(ctx.result);
        report["invariant_checks"] = std::move(ctx.checks);
        report["timings"] = std::move(ctx.timings);
        out.document = report.dump(2) + "\n";
    }
    return out;
}

int run(int argc, const char* const* argv)
{
    RunConfig config;
    try {
        config = parse_config(argc, argv);
    } catch (const ConfigError& e) {
        if (e.kind() == ConfigErrorKind::Help) {
            std::cout << e.what();
        } else {
            std::cerr << "error[" << config_error_name(e.kind()) << "]: " << e.what() << "\n"
                      << "run with --help for usage\n";
        }
        return e.exit_code();
    }
    RunResult result = execute(config);
    std::cerr << result.diagnostics;
    if (!result.document.empty()) {
        if (config.out) {
            std::ofstream file(*config.out, std::ios::binary);
            if (!file) {
                std::cerr << "error[unreadable-file]: cannot write " << *config.out << "\n";
                return exit_code::usage;
            }
            file << result.document;
        } else {
            std::cout << result.document;
        }
    }
    return result.exit_code;
}

}  // namespace listpack::cli

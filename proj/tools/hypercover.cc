#include <hypercover/constructions.hh>
#include <hypercover/curves.hh>
#include <hypercover/errors.hh>
#include <hypercover/formulas.hh>
#include <hypercover/hypergraph_io.hh>
#include <hypercover/oracle.hh>
#include <hypercover/parallel.hh>
#include <hypercover/steiner.hh>
#include <hypercover/subgraph_cover.hh>
#include <hypercover/verifier.hh>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace hypercover;

namespace
{
    enum ExitCode
    {
        exit_ok = 0,
        exit_verification_failed = 1,
        exit_usage = 2,
        exit_budget = 3
    };

    struct Global
    {
        unsigned threads = 0;
        int precision = real_digits;
        std::string outdir = ".";
    };

    auto emit(const std::string & command, json result) -> void
    {
        json envelope = {{"command", command}, {"result", std::move(result)}};
        std::cout << envelope.dump(2) << '\n';
    }

    auto edge_list(const RGraph & g) -> json
    {
        auto edges = json::array();
        for (auto e : g.edges())
            edges.push_back(std::vector<Vertex>(e.begin(), e.end()));
        return edges;
    }

    auto set_json(const VertexSet & s) -> json
    {
        return std::vector<Vertex>(s.members().begin(), s.members().end());
    }

    auto real_string(const Real & x, const Global & global) -> std::string
    {
        return format_fixed(x, global.precision);
    }

    auto output_path(const Global & global, const std::string & given, const std::string & fallback) -> fs::path
    {
        // relative paths land under --outdir
        fs::path p = fs::path(global.outdir) / (given.empty() ? fs::path(fallback) : fs::path(given));
        if (p.has_parent_path())
            fs::create_directories(p.parent_path());
        return p;
    }

    // ---- gen

    struct GenArgs
    {
        std::string construction;
        std::optional<std::uint64_t> n, d, r, t, order, seed;
        std::string rho, input, out;
        std::vector<unsigned> phi;
        std::vector<std::uint64_t> factors;
        bool check = false;
    };

    auto need(const std::optional<std::uint64_t> & v, const char * flag, const std::string & construction) -> std::uint64_t
    {
        if (! v)
            throw CLI::ValidationError(construction + " needs " + flag);
        return *v;
    }

    auto run_gen(const GenArgs & a, const Global & global) -> int
    {
        auto rho = [&] {
            if (a.rho.empty())
                throw CLI::ValidationError(a.construction + " needs --rho");
            return parse_rational(a.rho);
        };

        Construction c = [&] {
            const auto & name = a.construction;
            if (name == "k4m-lower") {
                auto n = need(a.n, "--n", name);
                return k4minus_lower(n, a.d ? *a.d : d_star(n).floor, a.seed);
            }
            if (name == "k4-link")
                return k4_lower_linkgraph(need(a.n, "--n", name), a.seed);
            if (name == "lift") {
                if (a.input.empty())
                    throw CLI::ValidationError("lift needs --input");
                return lift_link(read_hypergraph(fs::path(a.input)));
            }
            if (name == "c5-lower")
                return c5_lower(need(a.n, "--n", name));
            if (name == "k5-lower")
                return k5_lower(need(a.n, "--n", name));
            if (name == "sts-blowup") {
                RGraph h = ! a.input.empty() ? load_sts(fs::path(a.input)).system.triples
                        : sts(static_cast<unsigned>(need(a.order, "--order or --input", name))).triples;
                return blowup_sts(h, a.n.value_or(1), a.t);
            }
            if (name == "tau-lower")
                return tau_lower_interval(need(a.n, "--n", name), rho(), need(a.r, "--r", name), a.seed);
            if (name == "tau-upper") {
                std::vector<unsigned> phi;
                for (auto x : a.phi) {
                    if (x == 0)
                        throw CLI::ValidationError("--phi is 1-based");
                    phi.push_back(x - 1);
                }
                return tau_upper_interval(need(a.n, "--n", name), rho(), need(a.r, "--r", name), phi, a.seed);
            }
            if (name == "efg") {
                if (a.factors.empty())
                    throw CLI::ValidationError("efg needs --factors");
                return efg_graph(a.factors, a.t.value_or(1));
            }
            throw CLI::ValidationError("unknown construction '" + name + "'");
        }();

        auto graph_path = output_path(global, a.out, a.construction + ".hg");
        auto manifest_path = fs::path(graph_path).replace_extension(".manifest.json");
        write_hypergraph(graph_path, c.graph);
        auto manifest = to_json(c.manifest);
        std::ofstream(manifest_path) << manifest.dump(2) << '\n';
        bool roundtrip = read_hypergraph(graph_path) == c.graph;

        json result = {
            {"construction", a.construction},
            {"file", graph_path.string()},
            {"manifest_file", manifest_path.string()},
            {"uniformity", c.graph.uniformity()},
            {"vertices", c.graph.vertex_count()},
            {"edges", c.graph.edge_count()},
            {"roundtrip", roundtrip},
            {"manifest", manifest}
        };
        bool ok = roundtrip;
        if (a.check) {
            ManifestCheckOptions options;
            options.threads = global.threads;
            auto checks = json::array();
            for (auto & check : check_manifest(c.graph, c.manifest, options)) {
                ok = ok && check.passed;
                checks.push_back({{"name", check.name}, {"observed", check.observed}, {"expected", check.expected}, {"passed", check.passed}});
            }
            result["checks"] = checks;
        }
        emit("gen", result);
        return ok ? exit_ok : exit_verification_failed;
    }

    // ---- metrics and check-cover

    struct MetricsArgs
    {
        std::string file;
        std::vector<unsigned> delta;
        bool tmax = false, book = false, alpha = false, edit = false, density = false;
        std::string cover;
    };

    auto require_two_graph(const RGraph & g, const char * what) -> void
    {
        if (g.uniformity() != 2)
            throw InvalidArgument(std::string(what) + " needs a 2-graph");
    }

    auto run_metrics(const MetricsArgs & a, const Global & global) -> int
    {
        auto g = read_hypergraph(fs::path(a.file));
        json result = {{"file", a.file}, {"uniformity", g.uniformity()}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
        if (a.density)
            result["density"] = to_string(edge_density(g));
        if (! a.delta.empty()) {
            json delta = json::object();
            for (auto i : a.delta) {
                auto m = min_i_degree(g, i);
                delta[std::to_string(i)] = {{"value", m.value}, {"witness", set_json(m.witness)}};
            }
            result["min_degree"] = delta;
        }
        if (a.tmax) {
            require_two_graph(g, "--tmax");
            auto t = t_max(g);
            result["t_max"] = {{"value", t.value}, {"vertex", t.argmax}};
        }
        if (a.book) {
            require_two_graph(g, "--book");
            auto b = book_number(g);
            result["book_number"] = {{"value", b.value}};
            if (b.edge)
                result["book_number"]["edge"] = {b.edge->first, b.edge->second};
        }
        if (a.alpha) {
            auto i = independence_number(g);
            result["alpha"] = {{"value", i.value}, {"witness", set_json(i.witness)}};
        }
        if (a.edit) {
            require_two_graph(g, "--edit-distance");
            auto b = g.vertex_count() <= default_exact_limit ? bipartite_edit_distance(g) : bipartite_edit_distance_upper_bound(g);
            result["bipartite_edit_distance"] = {{"value", b.inside_edges}, {"exact", b.exact}, {"side", set_json(b.side)}};
        }
        if (! a.cover.empty()) {
            auto report = uncovered_vertices(g, Motif::parse(a.cover), global.threads);
            result["cover"] = {{"motif", report.motif.name()}, {"uncovered", report.uncovered}};
        }
        emit("metrics", result);
        return exit_ok;
    }

    struct CoverArgs
    {
        std::string file, motif;
        std::optional<Vertex> vertex;
        bool witnesses = false;
    };

    auto run_check_cover(const CoverArgs & a, const Global & global) -> int
    {
        auto g = read_hypergraph(fs::path(a.file));
        auto motif = Motif::parse(a.motif);
        json result = {{"file", a.file}, {"motif", motif.name()}};
        if (a.vertex) {
            if (*a.vertex >= g.vertex_count())
                throw InvalidArgument("vertex " + std::to_string(*a.vertex) + " is out of range");
            auto w = covers(g, motif, *a.vertex);
            result["vertex"] = *a.vertex;
            result["covered"] = w.has_value();
            if (w)
                result["witness"] = w->image;
        } else {
            auto report = uncovered_vertices(g, motif, global.threads);
            result["uncovered"] = report.uncovered;
            if (a.witnesses) {
                json w = json::object();
                for (auto & [v, e] : report.witness_per_vertex)
                    w[std::to_string(v)] = e.image;
                result["witnesses"] = w;
            }
        }
        emit("check-cover", result);
        return exit_ok;
    }

    // ---- search

    struct SearchArgs
    {
        std::string objective, motif, witness_out;
        unsigned n = 0;
        std::optional<std::uint64_t> m, known;
        std::optional<double> budget;
        unsigned edge_limit = 35;
    };

    auto run_search(const SearchArgs & a, const Global & global) -> int
    {
        SearchOptions options;
        options.threads = global.threads;
        options.known_attainable = a.known;
        options.edge_limit = a.edge_limit;
        if (a.budget)
            options.deadline = std::chrono::steady_clock::now()
                    + std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*a.budget));

        SearchResult r = [&] {
            if (a.objective == "max-delta1") {
                if (a.motif.empty())
                    throw CLI::ValidationError("max-delta1 needs --motif");
                return max_delta1_no_cover(a.n, Motif::parse(a.motif), options);
            }
            if (! a.m)
                throw CLI::ValidationError(a.objective + " needs --m");
            if (a.objective == "min-tmax")
                return min_tmax(a.n, *a.m, options);
            if (a.objective == "min-book")
                return min_book(a.n, *a.m, options);
            throw CLI::ValidationError("unknown objective '" + a.objective + "'; expected max-delta1, min-tmax or min-book");
        }();

        json params = {{"n", r.n}};
        if (r.motif)
            params["motif"] = r.motif->name();
        if (r.m)
            params["m"] = *r.m;
        json result = {
            {"objective", to_string(r.objective)},
            {"params", params},
            {"value", r.value},
            {"completed", r.completed},
            {"witness", edge_list(r.witness)},
            {"graphs_scanned", r.graphs_scanned},
            {"wall_time", r.wall_time.count()}
        };
        auto witness_path = output_path(global, a.witness_out, "search-witness.hg");
        write_hypergraph(witness_path, r.witness);
        result["witness_file"] = witness_path.string();
        emit("search", result);
        return r.completed ? exit_ok : exit_budget;
    }

    // ---- curves

    struct CurvesArgs
    {
        std::string from = "1/2", to = "2/3", out, metadata;
        std::size_t steps = 100;
        int decimals = curve_decimals;
    };

    auto run_curves(const CurvesArgs & a, const Global & global) -> int
    {
        auto from = parse_rational(a.from), to = parse_rational(a.to);
        if (from < Rational(1, 2) || to > Rational(3, 4) || from >= to)
            throw InvalidArgument("curves need 1/2 <= from < to <= 3/4");
        auto rows = reference_curve_table(from, to, a.steps, global.threads);
        auto csv_path = output_path(global, a.out, "curves.csv");
        auto meta_path = output_path(global, a.metadata, "curves.json");
        {
            std::ofstream out(csv_path);
            write_curves_csv(out, rows, a.decimals);
        }
        auto meta = curves_metadata(from, to, a.steps);
        meta["decimals"] = a.decimals;
        std::ofstream(meta_path) << meta.dump(2) << '\n';
        emit("curves", {{"csv", csv_path.string()}, {"metadata", meta_path.string()}, {"rows", rows.size()}});
        return exit_ok;
    }

    // ---- sts

    struct StsArgs
    {
        std::optional<unsigned> order;
        std::optional<std::uint64_t> random_seed;
        std::string file, out;
        bool alpha = false;
    };

    auto run_sts(const StsArgs & a, const Global & global) -> int
    {
        json result;
        if (! a.file.empty()) {
            auto loaded = load_sts(fs::path(a.file));
            result = {
                {"order", loaded.system.order},
                {"source", loaded.system.source},
                {"provenance", to_string(loaded.system.provenance)},
                {"valid", true},
                {"alpha", loaded.alpha},
                {"meets_known_minimum", loaded.meets_minimum}
            };
            if (loaded.known_minimum)
                result["known_minimum_alpha"] = *loaded.known_minimum;
            if (loaded.warning)
                result["warning"] = *loaded.warning;
        } else {
            if (! a.order)
                throw CLI::ValidationError("sts needs --order or --file");
            auto s = a.random_seed ? random_sts(*a.order, *a.random_seed) : sts(*a.order);
            auto check = verify_sts(s.triples);
            result = {
                {"order", s.order},
                {"source", s.source},
                {"provenance", to_string(s.provenance)},
                {"valid", check.valid},
                {"triples", s.triples.edge_count()}
            };
            if (a.alpha) {
                auto i = independence_number(s.triples);
                result["alpha"] = i.value;
                result["alpha_witness"] = set_json(i.witness);
                if (auto k = known_minimum_independence(s.order))
                    result["known_minimum_alpha"] = *k;
            }
            if (! a.out.empty()) {
                auto path = output_path(global, a.out, "");
                write_hypergraph(path, s.triples);
                result["file"] = path.string();
            }
        }
        emit("sts", result);
        return exit_ok;
    }

    // ---- verify

    struct VerifyArgs
    {
        std::string suite = "all", claim, report;
        double budget = 600;
        std::optional<std::uint64_t> seed;
        bool fresh_seed = false, json_only = false, list = false;
    };

    auto run_verify(const VerifyArgs & a, const Global & global) -> int
    {
        auto suite = parse_suite(a.suite);
        if (a.list) {
            emit("verify", {{"suite", to_string(suite)}, {"claims", suite_claim_ids(suite)}});
            return exit_ok;
        }
        SuiteOptions options;
        options.threads = global.threads;
        options.budget = std::chrono::duration<double>(a.budget);
        options.seed = a.fresh_seed ? fresh_seed() : a.seed.value_or(default_seed);
        if (! a.claim.empty())
            options.only = a.claim;

        auto outcomes = run_suite(suite, options);
        auto report = to_json(outcomes);
        report["suite"] = to_string(suite);
        report["seed"] = options.seed;
        auto path = output_path(global, a.report, "verify-" + to_string(suite) + ".json");
        std::ofstream(path) << report.dump(2) << '\n';

        if (a.json_only)
            std::cout << report.dump(2) << '\n';
        else {
            write_table(std::cout, outcomes);
            std::cout << "report: " << path.string() << '\n';
        }

        if (! all_passed(outcomes))
            return exit_verification_failed;
        bool any_skipped = std::any_of(outcomes.begin(), outcomes.end(), [] (const ClaimOutcome & o) { return o.status == ClaimStatus::skipped; });
        return any_skipped ? exit_budget : exit_ok;
    }

    // ---- formula

    struct FormulaArgs
    {
        std::string name, x;
        std::optional<std::uint64_t> n, d, k;
    };

    auto run_formula(const FormulaArgs & a, const Global & global) -> int
    {
        json result = {{"formula", a.name}};
        auto x = [&] {
            if (a.x.empty())
                throw CLI::ValidationError(a.name + " needs --x");
            return parse_rational(a.x);
        };
        if (a.name == "f") {
            auto n = need(a.n, "--n", a.name), d = need(a.d, "--d", a.name);
            result["value"] = to_string(f_n_d(n, d));
        } else if (a.name == "d-star") {
            auto d = d_star(need(a.n, "--n", a.name));
            result["value"] = real_string(d.value, global);
            result["floor"] = d.floor;
        } else if (a.name == "tau") {
            result["value"] = to_string(tau_upper(x()));
        } else if (a.name == "tau-inverse") {
            result["value"] = to_string(tau_upper_inverse(x()));
        } else if (a.name == "kappa") {
            result["value"] = real_string(kappa(x()), global);
        } else if (a.name == "lambda") {
            result["value"] = to_string(lambda(x()));
        } else if (a.name == "greedy") {
            auto g = greedy_book(x());
            auto factors = json::array();
            for (auto & f : g.factors)
                factors.push_back(f.str());
            result["factors"] = factors;
            result["b"] = to_string(g.b);
        } else if (a.name == "recursive") {
            auto c0 = to_real(x());
            auto values = json::array();
            for (auto & v : iterate_cover_bounds(c0, a.k.value_or(1)))
                values.push_back(real_string(v, global));
            result["values"] = values;
        } else {
            throw CLI::ValidationError("unknown formula '" + a.name + "'; expected f, d-star, tau, tau-inverse, kappa, lambda, greedy or recursive");
        }
        emit("formula", result);
        return exit_ok;
    }

    auto csv_list(CLI::Option * option) -> CLI::Option *
    {
        return option->delimiter(',');
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Covering thresholds of hypergraphs: constructions, metrics, exhaustive search and claim verification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "hypercover 0.1.0");

    Global global;
    app.add_option("--threads", global.threads, "Worker threads, 0 for all hardware threads")->envname("HYPERCOVER_THREADS");
    app.add_option("--precision", global.precision, "Decimal digits for high-precision values")->check(CLI::Range(1, real_digits));
    app.add_option("--outdir", global.outdir, "Directory for output files")->envname("HYPERCOVER_OUTDIR");

    GenArgs gen;
    auto * gen_cmd = app.add_subcommand("gen", "Generate a construction and its manifest");
    gen_cmd->add_option("construction", gen.construction,
            "k4m-lower, k4-link, lift, c5-lower, k5-lower, sts-blowup, tau-lower, tau-upper or efg")->required();
    gen_cmd->add_option("--n", gen.n, "Order or part size");
    gen_cmd->add_option("--d", gen.d, "Link degree for k4m-lower, defaults to floor(d*)");
    gen_cmd->add_option("--r", gen.r, "Part count parameter for tau constructions");
    gen_cmd->add_option("--t", gen.t, "Copy count for efg; clique order minus one for sts-blowup");
    gen_cmd->add_option("--rho", gen.rho, "Density as p/q or a terminating decimal");
    csv_list(gen_cmd->add_option("--phi", gen.phi, "Fixed-point-free permutation of 1..r+1, comma separated"));
    csv_list(gen_cmd->add_option("--factors", gen.factors, "Factors r_1,...,r_k for efg"));
    gen_cmd->add_option("--order", gen.order, "STS order for sts-blowup");
    gen_cmd->add_option("--input", gen.input, "Input hypergraph for lift or sts-blowup");
    gen_cmd->add_option("--seed", gen.seed, "Seed for the regular graph choices");
    gen_cmd->add_option("--out", gen.out, "Output hypergraph path");
    gen_cmd->add_flag("--check", gen.check, "Verify every manifest claim on the generated graph");

    MetricsArgs metrics;
    auto * metrics_cmd = app.add_subcommand("metrics", "Measure a hypergraph file");
    metrics_cmd->add_option("file", metrics.file)->required();
    metrics_cmd->add_option("--delta", metrics.delta, "Minimum i-degree; repeatable");
    metrics_cmd->add_flag("--tmax", metrics.tmax, "Maximum triangle-degree (2-graphs)");
    metrics_cmd->add_flag("--book", metrics.book, "Book number (2-graphs)");
    metrics_cmd->add_flag("--alpha", metrics.alpha, "Independence number");
    metrics_cmd->add_flag("--edit-distance", metrics.edit, "Edges to delete for bipartiteness (2-graphs)");
    metrics_cmd->add_flag("--density", metrics.density, "Edge density");
    metrics_cmd->add_option("--cover", metrics.cover, "Uncovered vertices for a motif: k4, k4-, c5, k{t}, clique{r}");

    CoverArgs cover;
    auto * cover_cmd = app.add_subcommand("check-cover", "Find vertices not covered by a motif");
    cover_cmd->add_option("file", cover.file)->required();
    cover_cmd->add_option("--motif", cover.motif, "k4, k4-, c5, k{t} or clique{r}")->required();
    cover_cmd->add_option("--vertex", cover.vertex, "Check a single vertex and print its witness");
    cover_cmd->add_flag("--witnesses", cover.witnesses, "Print a witness copy for every covered vertex");

    SearchArgs search;
    auto * search_cmd = app.add_subcommand("search", "Exhaustive search for an extremal value");
    search_cmd->add_option("objective", search.objective, "max-delta1, min-tmax or min-book")->required();
    search_cmd->add_option("--n", search.n, "Vertex count")->required();
    search_cmd->add_option("--motif", search.motif, "Motif for max-delta1");
    search_cmd->add_option("--m", search.m, "Edge count for min-tmax and min-book");
    search_cmd->add_option("--known", search.known, "A value known to be attainable, used for pruning");
    search_cmd->add_option("--budget", search.budget, "Seconds before the search stops with a bound");
    search_cmd->add_option("--edge-limit", search.edge_limit, "Largest candidate edge count searched");
    search_cmd->add_option("--witness-out", search.witness_out, "Path for the witness hypergraph");

    CurvesArgs curves;
    auto * curves_cmd = app.add_subcommand("curves", "Tabulate the reference curves as CSV");
    curves_cmd->add_option("--from", curves.from, "Lower density, at least 1/2")->capture_default_str();
    curves_cmd->add_option("--to", curves.to, "Upper density, at most 3/4")->capture_default_str();
    curves_cmd->add_option("--steps", curves.steps, "Grid intervals; rows = steps + 1")->check(CLI::PositiveNumber)->capture_default_str();
    curves_cmd->add_option("--decimals", curves.decimals, "Digits after the point")->check(CLI::Range(1, real_digits))->capture_default_str();
    curves_cmd->add_option("--out", curves.out, "CSV path");
    curves_cmd->add_option("--metadata", curves.metadata, "Metadata JSON path");

    StsArgs sts_args;
    auto * sts_cmd = app.add_subcommand("sts", "Build or load a Steiner triple system");
    sts_cmd->add_option("--order", sts_args.order);
    sts_cmd->add_option("--random", sts_args.random_seed, "Hill-climb a random system from this seed");
    sts_cmd->add_flag("--alpha", sts_args.alpha, "Compute the independence number");
    sts_cmd->add_option("--file", sts_args.file, "Load and check a system from a file");
    sts_cmd->add_option("--out", sts_args.out, "Write the system to this path");

    VerifyArgs verify;
    auto * verify_cmd = app.add_subcommand("verify", "Run verification suites");
    verify_cmd->add_option("--suite", verify.suite, "k4minus, k4, c5, kt, tau, tripartite, book, curves or all");
    verify_cmd->add_option("--budget", verify.budget, "Seconds available")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--claim", verify.claim, "Run a single claim");
    verify_cmd->add_option("--seed", verify.seed, "Seed for random sweeps");
    verify_cmd->add_flag("--fresh-seed", verify.fresh_seed, "Draw a new seed for random sweeps");
    verify_cmd->add_option("--report", verify.report, "JSON report path");
    verify_cmd->add_flag("--json", verify.json_only, "Print the JSON report instead of the table");
    verify_cmd->add_flag("--list", verify.list, "List claim ids without running them");

    FormulaArgs formula;
    auto * formula_cmd = app.add_subcommand("formula", "Evaluate a closed-form bound");
    formula_cmd->add_option("name", formula.name, "f, d-star, tau, tau-inverse, kappa, lambda, greedy or recursive")->required();
    formula_cmd->add_option("--n", formula.n);
    formula_cmd->add_option("--d", formula.d);
    formula_cmd->add_option("--x", formula.x, "Argument as p/q or a terminating decimal");
    formula_cmd->add_option("--k", formula.k, "Iterations for recursive");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion & e) {
        return app.exit(e);
    } catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*gen_cmd)
            return run_gen(gen, global);
        if (*metrics_cmd)
            return run_metrics(metrics, global);
        if (*cover_cmd)
            return run_check_cover(cover, global);
        if (*search_cmd)
            return run_search(search, global);
        if (*curves_cmd)
            return run_curves(curves, global);
        if (*sts_cmd)
            return run_sts(sts_args, global);
        if (*verify_cmd)
            return run_verify(verify, global);
        if (*formula_cmd)
            return run_formula(formula, global);
    } catch (const CLI::ValidationError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const LimitExceeded & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_budget;
    } catch (const Error & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::logic_error & e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_verification_failed;
    } catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

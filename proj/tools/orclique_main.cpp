#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "orclique/batching.hpp"
#include "orclique/errors.hpp"
#include "orclique/generator.hpp"
#include "orclique/pipeline.hpp"

namespace {

using namespace orclique;

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();

    bool dimacs = false;
    std::istringstream scan(text);
    std::string line;
    while (std::getline(scan, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#')
            continue;
        dimacs = tok == "c" || tok == "p" || tok == "e";
        break;
    }
    std::istringstream data(text);
    return dimacs ? parse_dimacs(data) : parse_edge_list(data);
}

std::chrono::steady_clock::time_point now() { return std::chrono::steady_clock::now(); }

int cmd_run(const std::string& file, RunOptions opts, const std::string& emit_dir, bool json) {
    auto started = now();
    Graph g = load_graph(file);
    CliqueInstance inst{std::move(g), opts.k};
    auto report = run_pipeline(inst, opts);

    if (!emit_dir.empty()) {
        QuerySet qs = generate_kernel_queries(inst, opts.kernel, opts.d);
        long long n_enc = encoding_size(inst.graph);
        if (opts.c > 0 && n_enc >= 2)
            qs = batch_queries(qs, opts.c, n_enc);
        emit_queries(qs, opts.k, emit_dir);
    }

    if (json)
        std::cout << report_json(report);
    else
        report_text(report, std::cout);

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(now() - started);
    std::cerr << "elapsed: " << elapsed.count() << " ms\n";
    if (report.verified_agree && !*report.verified_agree) {
        std::cerr << "error: kernel answer disagrees with the brute-force oracle\n";
        return 3;
    }
    return 0;
}

int cmd_bench(const std::string& dir, const std::vector<std::string>& kernel_names,
              std::vector<int> cs, int d, bool verify, bool timing, const std::string& out_path) {
    BenchOptions opts;
    for (const auto& name : kernel_names) {
        auto choice = kernel_from_name(name);
        if (!choice)
            throw CLI::ValidationError("--kernels", "unknown kernel '" + name + "'");
        opts.kernels.push_back(*choice);
    }
    opts.c_values = std::move(cs);
    opts.d = d;
    opts.verify = verify;
    opts.timing = timing;

    std::ofstream out(out_path);
    if (!out)
        throw ParseError("cannot open output file " + out_path);
    return run_bench(dir, opts, out, std::cerr);
}

struct GenArgs {
    std::string family;
    int n = 10;
    double p = 0.5;
    int d = 3;
    int m = 15;
    int clique = 3;
    int extra = 0;
    std::uint64_t seed = 1;
    std::string out;
    std::string manifest;
    int k = 0;
};

int cmd_gen(const GenArgs& args) {
    Graph g;
    if (args.family == "gnp")
        g = gen_gnp(args.n, args.p, args.seed);
    else if (args.family == "bipartite-plus-edges")
        g = gen_bipartite_plus_edges(args.n, args.p, args.extra, args.seed);
    else if (args.family == "bounded-degree")
        g = gen_bounded_degree(args.n, args.d, args.m, args.seed);
    else if (args.family == "planted-clique")
        g = gen_planted_clique(args.n, args.p, args.clique, args.seed);
    else if (args.family == "cycle")
        g = gen_cycle(args.n);
    else if (args.family == "complete")
        g = gen_complete(args.n);
    else
        throw CLI::ValidationError("family", "unknown family '" + args.family + "'");

    if (args.out.empty()) {
        serialize_edge_list(g, std::cout);
    } else {
        std::ofstream out(args.out);
        if (!out)
            throw ParseError("cannot open output file " + args.out);
        serialize_edge_list(g, out);
    }

    if (!args.manifest.empty()) {
        if (args.k < 1)
            throw CLI::ValidationError("--manifest", "requires --k >= 1");
        if (args.out.empty())
            throw CLI::ValidationError("--manifest", "requires --out");
        nlohmann::json j;
        {
            std::ifstream in(args.manifest);
            if (in) {
                try {
                    in >> j;
                } catch (const nlohmann::json::exception&) {
                    j = nlohmann::json::object();
                }
            }
        }
        if (!j.contains("files") || !j["files"].is_array())
            j["files"] = nlohmann::json::array();
        nlohmann::json entry{{"file", std::filesystem::path(args.out).filename().string()},
                             {"k", args.k}};
        if (args.family == "planted-clique" && args.k <= args.clique)
            entry["expected"] = "yes";
        j["files"].push_back(std::move(entry));
        std::ofstream mo(args.manifest);
        mo << j.dump(2) << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"OR-kernel query generation, batching and solving for k-clique"};
    app.require_subcommand(1);

    // run
    std::string run_file, run_kernel = "degeneracy", emit_dir;
    RunOptions run_opts;
    bool run_json = false, run_serial = false;
    auto* run = app.add_subcommand("run", "run one kernel on one graph");
    run->add_option("file", run_file, "graph file (edge list or DIMACS)")->required();
    run->add_option("--k", run_opts.k, "clique size to decide")->required()
        ->check(CLI::PositiveNumber);
    run->add_option("--kernel", run_kernel, "degeneracy|oct|dbd|chordal|loc");
    run->add_option("--d", run_opts.d, "degree bound for the dbd kernel")
        ->check(CLI::NonNegativeNumber);
    run->add_option("--c", run_opts.c, "batching exponent")->check(CLI::NonNegativeNumber);
    run->add_flag("--verify", run_opts.verify, "compare against the brute-force oracle");
    run->add_option("--emit-queries", emit_dir, "write the query files into this directory");
    run->add_flag("--json", run_json, "JSON report on stdout");
    run->add_flag("--timing", run_opts.timing,
                  "include measured wall time in the report (breaks byte-identical output)");
    run->add_flag("--serial", run_serial, "solve queries serially");

    // bench
    std::string bench_dir, bench_out;
    std::vector<std::string> bench_kernels{"degeneracy", "oct", "dbd", "chordal", "loc"};
    std::vector<int> bench_cs{0};
    int bench_d = 2;
    bool bench_verify = false, bench_timing = false;
    auto* bench = app.add_subcommand("bench", "query-count accounting over a corpus");
    bench->add_option("dir", bench_dir, "corpus directory with manifest.json")->required();
    bench->add_option("--kernels", bench_kernels, "kernels to run")->delimiter(',');
    bench->add_option("--c", bench_cs, "batching exponents")->delimiter(',');
    bench->add_option("--d", bench_d, "degree bound for the dbd kernel");
    bench->add_flag("--verify", bench_verify, "oracle-check every row");
    bench->add_flag("--timing", bench_timing, "include measured wall time");
    bench->add_option("--out", bench_out, "CSV output file")->required();

    // gen
    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a corpus graph");
    gen->add_option("family", gen_args.family,
                    "gnp|bipartite-plus-edges|bounded-degree|planted-clique|cycle|complete")
        ->required();
    gen->add_option("--n", gen_args.n, "vertex count")->check(CLI::NonNegativeNumber);
    gen->add_option("--p", gen_args.p, "edge probability");
    gen->add_option("--d", gen_args.d, "degree bound (bounded-degree)");
    gen->add_option("--m", gen_args.m, "target edge count (bounded-degree)");
    gen->add_option("--clique", gen_args.clique, "planted clique size");
    gen->add_option("--extra", gen_args.extra, "extra edges (bipartite-plus-edges)");
    gen->add_option("--seed", gen_args.seed, "random seed");
    gen->add_option("--out", gen_args.out, "output file (stdout if omitted)");
    gen->add_option("--manifest", gen_args.manifest, "append a {file, k} entry to this manifest");
    gen->add_option("--k", gen_args.k, "clique size to record in the manifest");

    try {
        app.parse(argc, argv);
        if (run->parsed()) {
            auto choice = kernel_from_name(run_kernel);
            if (!choice)
                throw CLI::ValidationError("--kernel", "unknown kernel '" + run_kernel + "'");
            run_opts.kernel = *choice;
            run_opts.mode = run_serial ? ExecutionMode::Serial : ExecutionMode::Parallel;
            return cmd_run(run_file, run_opts, emit_dir, run_json);
        }
        if (bench->parsed())
            return cmd_bench(bench_dir, bench_kernels, bench_cs, bench_d, bench_verify,
                             bench_timing, bench_out);
        if (gen->parsed())
            return cmd_gen(gen_args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const InvariantError& e) {
        std::cerr << "internal invariant violation: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
